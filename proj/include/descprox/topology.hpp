#pragma once

#include "descprox/axioms.hpp"
#include "descprox/relations.hpp"
#include "descprox/space.hpp"

namespace descprox {

/// Closure induced by a proximity: cl(A) = { x in X : {x} near A }.
PointSet closure(const RelationSpec& rel, const DescribedSpace& space, const PointSet& set);

/// Interior as the dual of closure: X minus cl(X minus A).
PointSet interior(const RelationSpec& rel, const DescribedSpace& space, const PointSet& set);

bool is_closed(const RelationSpec& rel, const DescribedSpace& space, const PointSet& set);
bool is_open(const RelationSpec& rel, const DescribedSpace& space, const PointSet& set);

/// Checks the structure of the topology induced by the overlap of
/// descriptions. Entries: closed-iff-saturated (a set is closed exactly when
/// it is a union of description classes; full subset sweep within the budget
/// cap, per-class structure above it), classes-clopen (every class is both
/// closed and open), closed-under-intersection (meets of closed sets are
/// closed; arbitrary meets are finite here, which the note records),
/// disconnected (two or more classes split the space into clopen halves;
/// skipped on a single class).
AxiomReport verify_closed_iff_saturated(const DescribedSpace& space, const CheckBudget& budget);

/// Separation properties of the topology induced by a relation. Entries: R0
/// (x in cl{y} implies y in cl{x}), T0 (distinct points have distinct
/// singleton closures), T0-iff-injective (the T0 verdict matches injectivity
/// of the description map).
AxiomReport separation_checks(const RelationSpec& rel, const DescribedSpace& space);

}  // namespace descprox
