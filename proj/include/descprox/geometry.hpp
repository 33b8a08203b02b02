#pragma once

#include "descprox/exact.hpp"
#include "descprox/feature.hpp"

#include <optional>

namespace descprox {

/// Minimum squared Euclidean distance between two finite description sets,
/// computed exactly. Empty operand => no value (the gap is infinite).
std::optional<BigInt> squared_gap(const FeatureSet& P, const FeatureSet& Q);

/// conv(P) and conv(Q) share a point. Supported for arity 1..3: arity 1 via
/// interval overlap, arity 2 and 3 via exact rational feasibility of a common
/// convex combination. Throws std::invalid_argument above arity 3.
bool hulls_intersect(const FeatureSet& P, const FeatureSet& Q);

/// z in conv(P) at exact rational coordinates, same arity limits.
bool hull_contains(const FeatureSet& P, const RationalPoint& z);

/// Feasibility of A x = b, x >= 0, decided by a phase-1 simplex over exact
/// rationals with Bland's rule (no cycling, no rounding).
bool linear_feasible(const std::vector<std::vector<Rational>>& A, const std::vector<Rational>& b);

}  // namespace descprox
