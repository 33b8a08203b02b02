#include "descprox/geometry.hpp"

#include <algorithm>
#include <stdexcept>

namespace descprox {

std::optional<BigInt> squared_gap(const FeatureSet& P, const FeatureSet& Q) {
    if (P.empty() || Q.empty()) return std::nullopt;
    if (P.arity() != Q.arity())
        throw std::invalid_argument("gap between sets of different arity");
    std::optional<BigInt> best;
    for (const auto& p : P) {
        for (const auto& q : Q) {
            BigInt d2 = 0;
            for (std::size_t k = 0; k < p.arity(); ++k) {
                BigInt diff = BigInt(p[k]) - BigInt(q[k]);
                d2 += diff * diff;
            }
            if (!best || d2 < *best) best = d2;
        }
    }
    return best;
}

bool linear_feasible(const std::vector<std::vector<Rational>>& A, const std::vector<Rational>& b) {
    const std::size_t m = A.size();
    if (b.size() != m) throw std::invalid_argument("linear_feasible: row count mismatch");
    if (m == 0) return true;
    const std::size_t n = A[0].size();

    // Phase-1 tableau: structural columns, one artificial per row, rhs last.
    // Rows are sign-flipped so the artificial basis starts feasible.
    const std::size_t cols = n + m + 1;
    std::vector<std::vector<Rational>> t(m, std::vector<Rational>(cols, Rational(0)));
    for (std::size_t i = 0; i < m; ++i) {
        if (A[i].size() != n) throw std::invalid_argument("linear_feasible: ragged matrix");
        bool flip = b[i] < Rational(0);
        for (std::size_t j = 0; j < n; ++j) t[i][j] = flip ? -A[i][j] : A[i][j];
        t[i][n + i] = Rational(1);
        t[i][cols - 1] = flip ? -b[i] : b[i];
    }
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

    // Minimize the sum of artificials. With the artificial basis, the reduced
    // cost of column j is -(sum of column j); entering columns are those with
    // positive column sums among non-artificial-cost columns. Bland's rule on
    // both choices guarantees termination.
    auto column_sum = [&](std::size_t j) {
        Rational s(0);
        for (std::size_t i = 0; i < m; ++i)
            if (basis[i] >= n) s += t[i][j];  // cost contribution only from artificial rows
        return s;
    };

    while (true) {
        std::size_t enter = cols;  // sentinel
        for (std::size_t j = 0; j < n + m && enter == cols; ++j) {
            Rational cost = j >= n ? Rational(1) : Rational(0);
            if (column_sum(j) > cost) enter = j;
        }
        if (enter == cols) break;

        std::size_t leave = m;
        Rational best_ratio(0);
        for (std::size_t i = 0; i < m; ++i) {
            if (t[i][enter] <= Rational(0)) continue;
            Rational ratio = t[i][cols - 1] / t[i][enter];
            if (leave == m || ratio < best_ratio ||
                (ratio == best_ratio && basis[i] < basis[leave])) {
                leave = i;
                best_ratio = ratio;
            }
        }
        if (leave == m) break;  // unbounded reduction cannot happen in phase 1; defensive

        Rational pivot = t[leave][enter];
        for (std::size_t j = 0; j < cols; ++j) t[leave][j] /= pivot;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave || t[i][enter] == Rational(0)) continue;
            Rational f = t[i][enter];
            for (std::size_t j = 0; j < cols; ++j) t[i][j] -= f * t[leave][j];
        }
        basis[leave] = enter;
    }

    Rational objective(0);
    for (std::size_t i = 0; i < m; ++i)
        if (basis[i] >= n) objective += t[i][cols - 1];
    return objective == Rational(0);
}

namespace {

bool intervals_overlap(const FeatureSet& P, const FeatureSet& Q) {
    auto bounds = [](const FeatureSet& s) {
        std::int64_t lo = s[0][0], hi = s[0][0];
        for (const auto& v : s) {
            lo = std::min(lo, v[0]);
            hi = std::max(hi, v[0]);
        }
        return std::pair{lo, hi};
    };
    auto [plo, phi] = bounds(P);
    auto [qlo, qhi] = bounds(Q);
    return plo <= qhi && qlo <= phi;
}

void require_hull_arity(std::size_t arity) {
    if (arity > 3)
        throw std::invalid_argument("convex hull relation supports arity 1..3, got arity " +
                                    std::to_string(arity));
}

}  // namespace

bool hulls_intersect(const FeatureSet& P, const FeatureSet& Q) {
    if (P.empty() || Q.empty()) return false;
    if (P.arity() != Q.arity())
        throw std::invalid_argument("hull intersection between sets of different arity");
    const std::size_t d = P.arity();
    require_hull_arity(d);
    if (d == 1) return intervals_overlap(P, Q);

    // A common point exists iff some convex combination of P equals one of Q:
    //   sum li p_i - sum mj q_j = 0,  sum li = 1,  sum mj = 1,  l,m >= 0.
    const std::size_t np = P.size(), nq = Q.size();
    std::vector<std::vector<Rational>> A(d + 2, std::vector<Rational>(np + nq, Rational(0)));
    std::vector<Rational> b(d + 2, Rational(0));
    for (std::size_t k = 0; k < d; ++k) {
        for (std::size_t i = 0; i < np; ++i) A[k][i] = Rational(BigInt(P[i][k]));
        for (std::size_t j = 0; j < nq; ++j) A[k][np + j] = Rational(-BigInt(Q[j][k]));
    }
    for (std::size_t i = 0; i < np; ++i) A[d][i] = Rational(1);
    for (std::size_t j = 0; j < nq; ++j) A[d + 1][np + j] = Rational(1);
    b[d] = Rational(1);
    b[d + 1] = Rational(1);
    return linear_feasible(A, b);
}

bool hull_contains(const FeatureSet& P, const RationalPoint& z) {
    if (P.empty()) return false;
    if (P.arity() != z.size())
        throw std::invalid_argument("hull membership probe of wrong arity");
    const std::size_t d = P.arity();
    require_hull_arity(d);
    if (d == 1) {
        Rational lo = Rational(BigInt(P[0][0]));
        Rational hi = lo;
        for (const auto& v : P) {
            const Rational x = Rational(BigInt(v[0]));
            lo = std::min(lo, x);
            hi = std::max(hi, x);
        }
        return lo <= z[0] && z[0] <= hi;
    }

    const std::size_t np = P.size();
    std::vector<std::vector<Rational>> A(d + 1, std::vector<Rational>(np, Rational(0)));
    std::vector<Rational> b(d + 1, Rational(0));
    for (std::size_t k = 0; k < d; ++k) {
        for (std::size_t i = 0; i < np; ++i) A[k][i] = Rational(BigInt(P[i][k]));
        b[k] = z[k];
    }
    for (std::size_t i = 0; i < np; ++i) A[d][i] = Rational(1);
    b[d] = Rational(1);
    return linear_feasible(A, b);
}

}  // namespace descprox
