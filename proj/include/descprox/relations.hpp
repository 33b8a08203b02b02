#pragma once

#include "descprox/exact.hpp"
#include "descprox/feature.hpp"
#include "descprox/space.hpp"

#include <functional>
#include <string>
#include <vector>

namespace descprox {

enum class RelationKind {
    discrete,      // A cap B nonempty
    peters,        // Phi(A) cap Phi(B) nonempty
    beta,          // every coordinate image pair intersects
    eta,           // projected images intersect (first m coordinates by default)
    gamma,         // some coordinate image pair intersects
    metric,        // squared gap <= epsilon^2
    fine_lodato,   // Euclidean closures of the images intersect
    enlargement,   // enlarged regions e(Phi(A)), e(Phi(B)) overlap
    hull,          // convex hulls of the images intersect
    strong,        // Phi(A) cap Phi(B) cap S nonempty
};

/// An enlargement of finite description sets into regions of feature space.
/// A region is represented behaviourally: an exact pairwise overlap test and
/// (optionally) an exact membership predicate at rational coordinates. An
/// operator without a membership predicate can still drive the overlap
/// relation but is skipped by the enlargement law checker.
struct EnlargementOperator {
    std::string name;
    std::function<bool(const FeatureSet&, const FeatureSet&)> overlaps;
    std::function<bool(const FeatureSet&, const RationalPoint&)> contains;
    Rational radius;  // metric extent; nonzero widens the law checker's probe net
};

EnlargementOperator ball_enlargement(const Rational& epsilon);  // union of closed eps-balls
EnlargementOperator identity_enlargement();                     // e(P) = P
EnlargementOperator hull_enlargement();                         // e(P) = conv(P)

/// Name-keyed registry. "identity", "hull" and "ball:<eps>" resolve without
/// prior registration; anything else must be registered first.
void register_enlargement(EnlargementOperator op);
const EnlargementOperator& enlargement_by_name(const std::string& name);

/// Value describing one relation from the catalogue, addressable by the
/// stable string names used in reports and on the command line:
///   discrete, peters, beta, eta:m, gamma, metric:eps, fine-lodato,
///   enlarge:eps, hull, strong:SETNAME
struct RelationSpec {
    RelationKind kind = RelationKind::peters;
    std::size_t m = 0;                  // eta: projection length
    std::vector<std::size_t> coords;    // eta: explicit coordinates (overrides m when nonempty)
    Rational epsilon;                   // metric and ball enlargement
    std::string enlargement;            // registered operator name
    FeatureSet significant;             // strong: the set S
    std::string significant_name;       // strong: display name for S

    static RelationSpec discrete();
    static RelationSpec peters();
    static RelationSpec beta();
    static RelationSpec eta(std::size_t m);
    static RelationSpec eta_coords(std::vector<std::size_t> coords);
    static RelationSpec gamma();
    static RelationSpec metric(Rational eps);
    static RelationSpec fine_lodato();
    static RelationSpec enlargement_ball(Rational eps);
    static RelationSpec enlargement_op(std::string registered_name);
    static RelationSpec hull();
    static RelationSpec strong(std::string set_name, FeatureSet S);

    std::string name() const;
};

/// Parses a stable relation name. strong:SETNAME needs a resolver mapping the
/// set name to its description set.
RelationSpec parse_relation(
    const std::string& text,
    const std::function<FeatureSet(const std::string&)>& strong_resolver = {});

/// Exact squared gap between Phi(A) and Phi(B); infinite iff either is empty.
struct Gap {
    bool infinite = true;
    BigInt squared = 0;
    std::string to_string() const;
};
Gap gap(const DescribedSpace& space, const PointSet& A, const PointSet& B);

/// Point-set level evaluation. Every relation returns false when either
/// operand is empty.
bool near(const RelationSpec& rel, const DescribedSpace& space, const PointSet& A, const PointSet& B);

/// Description-level core: every kind except `discrete` depends only on the
/// two images. Used by the closure operator and the subset checkers.
bool near_features(const RelationSpec& rel, const DescribedSpace& space, const FeatureSet& P,
                   const FeatureSet& Q);

bool discrete_near(const DescribedSpace&, const PointSet& A, const PointSet& B);
bool peters_near(const DescribedSpace&, const PointSet& A, const PointSet& B);
bool beta_near(const DescribedSpace&, const PointSet& A, const PointSet& B);
bool eta_near(const DescribedSpace&, const PointSet& A, const PointSet& B, std::size_t m);
bool gamma_near(const DescribedSpace&, const PointSet& A, const PointSet& B);
bool metric_near(const DescribedSpace&, const PointSet& A, const PointSet& B, const Rational& eps);
bool fine_lodato_near(const DescribedSpace&, const PointSet& A, const PointSet& B);
bool enlargement_near(const DescribedSpace&, const PointSet& A, const PointSet& B,
                      const EnlargementOperator& e);
bool hull_near(const DescribedSpace&, const PointSet& A, const PointSet& B);
bool strong_near(const DescribedSpace&, const PointSet& A, const PointSet& B, const FeatureSet& S);

/// A strongly included in B: A is far from the complement of B.
bool strong_inclusion(const RelationSpec& rel, const DescribedSpace& space, const PointSet& A,
                      const PointSet& B);

}  // namespace descprox
