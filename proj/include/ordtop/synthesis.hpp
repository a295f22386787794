#pragma once

#include <vector>

#include "ordtop/isotone.hpp"
#include "ordtop/qpm.hpp"
#include "ordtop/quniform.hpp"
#include "ordtop/sets.hpp"
#include "ordtop/space.hpp"

namespace ordtop {

// f maps into [0, 1], is isotone for the preorder, and is continuous
// (equivalently, on a finite space with finitely many values: every
// upper level set {f > a} and lower level set {f < a} is open).
Verdict check_isotone_continuous(const FiniteSpace& space, const IsotoneFn& f);

// The two conditions a countable family must satisfy to metrize the
// space: (initial) the sets {f > a}, {f < a} generate the topology, and
// (preorder) x <= y iff f(x) <= f(y) for every member.
struct FamilyConditions {
  Verdict initial_topology;
  Verdict preorder_match;

  bool both() const { return initial_topology.holds && preorder_match.holds; }
};

FamilyConditions family_conditions(const FiniteSpace& space, const FnFamily& family);

// The topology generated by all level sets {f > a}, {f < a} of the
// members.
SetFamily initial_topology_of(int n, const FnFamily& family);

// The canonical separating family: indicator functions of the
// nontrivial clopen increasing sets, ordered by set size then mask
// value. Throws NotCompletelyRegularError (with witness) when the space
// is not completely regularly preordered; otherwise the returned family
// satisfies both family conditions (re-verified before returning).
FnFamily separating_family(const FiniteSpace& space);

// p(x, y) = sum over members f_k (1-based k) of 2^-k * max(f_k(x) - f_k(y), 0).
// Requires a nonempty family of isotone continuous functions; throws
// EmptyFamilyError on an empty one. The output is always a valid
// quasi-pseudo-metric; when the family satisfies both family conditions
// it is admissible for the space (re-verified).
Qpm metrize_from_family(const FiniteSpace& space, const FnFamily& family);

// separating_family + metrize_from_family, with the one-point-style
// special case: a space whose separating family is empty (trivial
// topology and total preorder) gets the zero metric. The result is
// admissible, in fact strictly so (re-verified).
Qpm metrize(const FiniteSpace& space);

// One factor of a product: a space together with an admissible metric.
struct MetrizedSpace {
  FiniteSpace space;
  Qpm metric;
};

// Product space (product topology, componentwise preorder) with
// p = sum over factors k (1-based) of 2^-k * bound_by_one(p_k) on the
// k-th coordinates. Point (x_1,...,x_m) gets id x_1 * n_2 *...* n_m + ...
// (row-major, first factor most significant). Each factor metric must be
// admissible (NotAdmissibleError) and the product size must stay within
// the point cap (std::invalid_argument). The result is admissible for
// the product (re-verified).
MetrizedSpace product(const std::vector<MetrizedSpace>& factors);

// For factors that are strictly-metrized I-spaces, the upper topology of
// the product equals the product of the upper topologies (and dually).
// Factors failing the precondition give status skip.
struct StatusReport {
  CheckStatus status = CheckStatus::ok;
  std::string detail;
};

StatusReport check_product_upper_topology(const std::vector<MetrizedSpace>& factors);

// The 0/1 quasi-pseudo-metric of the preorder W = intersection of the
// base members: p(x,y) = 0 if (x,y) in W else 1. W must contain the
// diagonal (std::invalid_argument) and be transitive
// (NonTransitiveCoreError).
Qpm qpm_from_entourage_base(const FiniteSpace& space, const EntourageBase& base);

}  // namespace ordtop
