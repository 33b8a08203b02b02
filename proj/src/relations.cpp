#include "descprox/relations.hpp"

#include "descprox/geometry.hpp"

#include <map>
#include <stdexcept>

namespace descprox {

namespace {

std::map<std::string, EnlargementOperator>& registry() {
    static std::map<std::string, EnlargementOperator> ops;
    return ops;
}

Rational squared_distance(const FeatureVector& c, const RationalPoint& z) {
    Rational d2(0);
    for (std::size_t k = 0; k < z.size(); ++k) {
        Rational diff = z[k] - Rational(BigInt(c[k]));
        d2 += diff * diff;
    }
    return d2;
}

/// Euclidean closure of a finite description set. Finite subsets of R^n are
/// closed, so this is the identity; it exists so the fine relation is written
/// the way it is defined, with the collapse tested rather than assumed.
FeatureSet euclidean_closure(const FeatureSet& P) { return P; }

void require_epsilon(const Rational& eps) {
    if (eps < Rational(0)) throw std::invalid_argument("epsilon must be nonnegative");
}

}  // namespace

EnlargementOperator ball_enlargement(const Rational& epsilon) {
    require_epsilon(epsilon);
    EnlargementOperator op;
    op.name = "ball:" + rational_to_string(epsilon);
    op.radius = epsilon;
    Rational eps = epsilon;
    op.overlaps = [eps](const FeatureSet& P, const FeatureSet& Q) {
        auto g = squared_gap(P, Q);
        if (!g) return false;
        Rational reach = Rational(2) * eps;
        return Rational(*g) <= reach * reach;
    };
    op.contains = [eps](const FeatureSet& P, const RationalPoint& z) {
        if (P.empty()) return false;
        if (P.arity() != z.size())
            throw std::invalid_argument("membership probe of wrong arity");
        for (const auto& c : P)
            if (squared_distance(c, z) <= eps * eps) return true;
        return false;
    };
    return op;
}

EnlargementOperator identity_enlargement() {
    EnlargementOperator op;
    op.name = "identity";
    op.overlaps = [](const FeatureSet& P, const FeatureSet& Q) { return intersects(P, Q); };
    op.contains = [](const FeatureSet& P, const RationalPoint& z) {
        if (P.empty()) return false;
        if (P.arity() != z.size())
            throw std::invalid_argument("membership probe of wrong arity");
        for (const auto& c : P) {
            bool equal = true;
            for (std::size_t k = 0; k < z.size() && equal; ++k)
                equal = z[k] == Rational(BigInt(c[k]));
            if (equal) return true;
        }
        return false;
    };
    return op;
}

EnlargementOperator hull_enlargement() {
    EnlargementOperator op;
    op.name = "hull";
    op.overlaps = [](const FeatureSet& P, const FeatureSet& Q) { return hulls_intersect(P, Q); };
    op.contains = [](const FeatureSet& P, const RationalPoint& z) { return hull_contains(P, z); };
    return op;
}

void register_enlargement(EnlargementOperator op) {
    if (op.name.empty()) throw std::invalid_argument("enlargement operator needs a name");
    if (!op.overlaps) throw std::invalid_argument("enlargement operator needs an overlap test");
    registry()[op.name] = std::move(op);
}

const EnlargementOperator& enlargement_by_name(const std::string& name) {
    auto& ops = registry();
    auto it = ops.find(name);
    if (it != ops.end()) return it->second;
    if (name == "identity") return ops.emplace(name, identity_enlargement()).first->second;
    if (name == "hull") return ops.emplace(name, hull_enlargement()).first->second;
    if (name.rfind("ball:", 0) == 0) {
        Rational eps = parse_rational(name.substr(5));
        return ops.emplace(name, ball_enlargement(eps)).first->second;
    }
    throw std::invalid_argument("unknown enlargement operator \"" + name + "\"");
}

namespace {

RelationSpec of_kind(RelationKind kind) {
    RelationSpec spec;
    spec.kind = kind;
    return spec;
}

}  // namespace

RelationSpec RelationSpec::discrete() { return of_kind(RelationKind::discrete); }
RelationSpec RelationSpec::peters() { return of_kind(RelationKind::peters); }
RelationSpec RelationSpec::beta() { return of_kind(RelationKind::beta); }

RelationSpec RelationSpec::eta(std::size_t m) {
    if (m == 0) throw std::invalid_argument("eta needs m >= 1");
    RelationSpec spec = of_kind(RelationKind::eta);
    spec.m = m;
    return spec;
}

RelationSpec RelationSpec::eta_coords(std::vector<std::size_t> coords) {
    if (coords.empty()) throw std::invalid_argument("eta needs at least one coordinate");
    RelationSpec spec = of_kind(RelationKind::eta);
    spec.coords = std::move(coords);
    return spec;
}

RelationSpec RelationSpec::gamma() { return of_kind(RelationKind::gamma); }

RelationSpec RelationSpec::metric(Rational eps) {
    require_epsilon(eps);
    RelationSpec spec = of_kind(RelationKind::metric);
    spec.epsilon = std::move(eps);
    return spec;
}

RelationSpec RelationSpec::fine_lodato() { return of_kind(RelationKind::fine_lodato); }

RelationSpec RelationSpec::enlargement_ball(Rational eps) {
    require_epsilon(eps);
    RelationSpec spec = of_kind(RelationKind::enlargement);
    spec.enlargement = "ball:" + rational_to_string(eps);
    spec.epsilon = std::move(eps);
    return spec;
}

RelationSpec RelationSpec::enlargement_op(std::string registered_name) {
    RelationSpec spec = of_kind(RelationKind::enlargement);
    spec.enlargement = std::move(registered_name);
    return spec;
}

RelationSpec RelationSpec::hull() { return of_kind(RelationKind::hull); }

RelationSpec RelationSpec::strong(std::string set_name, FeatureSet S) {
    RelationSpec spec = of_kind(RelationKind::strong);
    spec.significant = std::move(S);
    spec.significant_name = std::move(set_name);
    return spec;
}

std::string RelationSpec::name() const {
    switch (kind) {
        case RelationKind::discrete: return "discrete";
        case RelationKind::peters: return "peters";
        case RelationKind::beta: return "beta";
        case RelationKind::eta:
            if (!coords.empty()) {
                std::string s = "eta[";
                for (std::size_t i = 0; i < coords.size(); ++i) {
                    if (i) s += ',';
                    s += std::to_string(coords[i]);
                }
                return s + "]";
            }
            return "eta:" + std::to_string(m);
        case RelationKind::gamma: return "gamma";
        case RelationKind::metric: return "metric:" + rational_to_string(epsilon);
        case RelationKind::fine_lodato: return "fine-lodato";
        case RelationKind::enlargement:
            if (enlargement.rfind("ball:", 0) == 0) return "enlarge:" + enlargement.substr(5);
            return "enlarge-op:" + enlargement;
        case RelationKind::hull: return "hull";
        case RelationKind::strong: return "strong:" + significant_name;
    }
    throw std::logic_error("unhandled relation kind");
}

RelationSpec parse_relation(const std::string& text,
                            const std::function<FeatureSet(const std::string&)>& strong_resolver) {
    if (text == "discrete") return RelationSpec::discrete();
    if (text == "peters") return RelationSpec::peters();
    if (text == "beta") return RelationSpec::beta();
    if (text == "gamma") return RelationSpec::gamma();
    if (text == "fine-lodato") return RelationSpec::fine_lodato();
    if (text == "hull") return RelationSpec::hull();

    auto colon = text.find(':');
    if (colon != std::string::npos) {
        std::string head = text.substr(0, colon);
        std::string arg = text.substr(colon + 1);
        if (arg.empty()) throw std::invalid_argument("relation \"" + text + "\" needs an argument");
        if (head == "eta") {
            std::size_t pos = 0;
            unsigned long m = 0;
            try {
                m = std::stoul(arg, &pos);
            } catch (const std::exception&) {
                throw std::invalid_argument("eta wants a positive integer, got \"" + arg + "\"");
            }
            if (pos != arg.size() || m == 0)
                throw std::invalid_argument("eta wants a positive integer, got \"" + arg + "\"");
            return RelationSpec::eta(m);
        }
        if (head == "metric") return RelationSpec::metric(parse_rational(arg));
        if (head == "enlarge") return RelationSpec::enlargement_ball(parse_rational(arg));
        if (head == "strong") {
            if (!strong_resolver)
                throw std::invalid_argument("relation \"" + text +
                                            "\" needs a set source to resolve \"" + arg + "\"");
            return RelationSpec::strong(arg, strong_resolver(arg));
        }
    }
    throw std::invalid_argument("unknown relation \"" + text + "\"");
}

std::string Gap::to_string() const { return infinite ? "inf" : squared.str(); }

Gap gap(const DescribedSpace& space, const PointSet& A, const PointSet& B) {
    auto g = squared_gap(phi_image(space, A), phi_image(space, B));
    if (!g) return Gap{};
    return Gap{false, *g};
}

bool near_features(const RelationSpec& rel, const DescribedSpace& space, const FeatureSet& P,
                   const FeatureSet& Q) {
    if (P.empty() || Q.empty()) return false;
    switch (rel.kind) {
        case RelationKind::discrete:
            throw std::logic_error("discrete relation does not factor through descriptions");
        case RelationKind::peters:
            return intersects(P, Q);
        case RelationKind::beta: {
            for (std::size_t k = 0; k < space.arity(); ++k)
                if (!intersects(P.coordinate_image(k), Q.coordinate_image(k))) return false;
            return true;
        }
        case RelationKind::eta: {
            if (!rel.coords.empty()) return intersects(P.project(rel.coords), Q.project(rel.coords));
            if (rel.m > space.arity())
                throw std::invalid_argument("eta:" + std::to_string(rel.m) +
                                            " exceeds probe arity " + std::to_string(space.arity()));
            return intersects(P.project(rel.m), Q.project(rel.m));
        }
        case RelationKind::gamma: {
            for (std::size_t k = 0; k < space.arity(); ++k)
                if (intersects(P.coordinate_image(k), Q.coordinate_image(k))) return true;
            return false;
        }
        case RelationKind::metric: {
            auto g = squared_gap(P, Q);
            return g && Rational(*g) <= rel.epsilon * rel.epsilon;
        }
        case RelationKind::fine_lodato:
            return intersects(euclidean_closure(P), euclidean_closure(Q));
        case RelationKind::enlargement:
            return enlargement_by_name(rel.enlargement).overlaps(P, Q);
        case RelationKind::hull:
            return hulls_intersect(P, Q);
        case RelationKind::strong: {
            FeatureSet all;
            for (std::size_t d = 0; d < space.distinct_count(); ++d)
                all.insert(space.distinct_description(d));
            if (!rel.significant.subset_of(all))
                throw std::invalid_argument("significant set " + rel.significant.to_string() +
                                            " is not contained in the realized descriptions");
            return intersects(set_intersection(P, Q), rel.significant);
        }
    }
    throw std::logic_error("unhandled relation kind");
}

bool near(const RelationSpec& rel, const DescribedSpace& space, const PointSet& A,
          const PointSet& B) {
    if (A.empty() || B.empty()) return false;
    switch (rel.kind) {
        case RelationKind::discrete:
            return A.intersects(B);
        case RelationKind::fine_lodato:
            // Closure route: the descriptive closures of A and B meet exactly
            // when the saturations meet on a finite space.
            return saturation(space, A).intersects(saturation(space, B));
        default:
            return near_features(rel, space, phi_image(space, A), phi_image(space, B));
    }
}

bool discrete_near(const DescribedSpace& s, const PointSet& A, const PointSet& B) {
    return near(RelationSpec::discrete(), s, A, B);
}
bool peters_near(const DescribedSpace& s, const PointSet& A, const PointSet& B) {
    return near(RelationSpec::peters(), s, A, B);
}
bool beta_near(const DescribedSpace& s, const PointSet& A, const PointSet& B) {
    return near(RelationSpec::beta(), s, A, B);
}
bool eta_near(const DescribedSpace& s, const PointSet& A, const PointSet& B, std::size_t m) {
    return near(RelationSpec::eta(m), s, A, B);
}
bool gamma_near(const DescribedSpace& s, const PointSet& A, const PointSet& B) {
    return near(RelationSpec::gamma(), s, A, B);
}
bool metric_near(const DescribedSpace& s, const PointSet& A, const PointSet& B,
                 const Rational& eps) {
    return near(RelationSpec::metric(eps), s, A, B);
}
bool fine_lodato_near(const DescribedSpace& s, const PointSet& A, const PointSet& B) {
    return near(RelationSpec::fine_lodato(), s, A, B);
}
bool enlargement_near(const DescribedSpace& s, const PointSet& A, const PointSet& B,
                      const EnlargementOperator& e) {
    if (A.empty() || B.empty()) return false;
    return e.overlaps(phi_image(s, A), phi_image(s, B));
}
bool hull_near(const DescribedSpace& s, const PointSet& A, const PointSet& B) {
    return near(RelationSpec::hull(), s, A, B);
}
bool strong_near(const DescribedSpace& s, const PointSet& A, const PointSet& B,
                 const FeatureSet& S) {
    return near(RelationSpec::strong("S", S), s, A, B);
}

bool strong_inclusion(const RelationSpec& rel, const DescribedSpace& space, const PointSet& A,
                      const PointSet& B) {
    return !near(rel, space, A, B.complement());
}

}  // namespace descprox
