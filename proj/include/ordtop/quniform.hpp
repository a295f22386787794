#pragma once

#include <vector>

#include "ordtop/isotone.hpp"
#include "ordtop/qpm.hpp"
#include "ordtop/sets.hpp"
#include "ordtop/space.hpp"

namespace ordtop {

// A finite base of entourages on {0,...,n-1} x {0,...,n-1}. Members are
// kept as relations; the base describes the filter of all supersets of
// its members.
struct EntourageBase {
  int n = 0;
  std::vector<Relation> relations;

  friend bool operator==(const EntourageBase&, const EntourageBase&) = default;
};

// Canonical form: relations sorted (relation_less) and duplicate-free.
EntourageBase canonical_base(EntourageBase base);

// Base axioms: every member contains the diagonal, and every member V
// has some member W with W o W inside V.
Verdict validate_base(const EntourageBase& base);

// A base additionally generating a (symmetric) uniformity: base axioms
// plus, for every member V, some member inside the inverse of V.
Verdict validate_uniformity_base(const EntourageBase& base);

// The sets {(x,y) : p(x,y) < v} for every distinct positive entry v of
// p, together with the full relation. A base of the quasi-uniformity
// induced by p.
EntourageBase base_from_qpm(const Qpm& p);

// Base of the weak quasi-uniformity generated by a family of functions:
// per function, the sets {(x,y) : f(x) - f(y) < v} over the distinct
// positive values of f-differences, plus the full relation, closed under
// pairwise intersection.
EntourageBase weak_base_from_family(const FiniteSpace& space, const FnFamily& family);

// Symmetrization: all intersections V cap inverse(W) over member pairs.
// The result is a uniformity base (asserted).
EntourageBase star(const EntourageBase& base);

// The intersection of all members. For a valid base this is a preorder;
// throws NonTransitiveCoreError otherwise.
Relation core_preorder(const EntourageBase& base);

// The topology of the uniformity star(base): unions of the rows of the
// intersection of the star members.
SetFamily sym_topology(const EntourageBase& base);

// a refines b: every member of b contains some member of a. Filters are
// equal iff each refines the other.
bool refines(const EntourageBase& a, const EntourageBase& b);
bool filter_equal(const EntourageBase& a, const EntourageBase& b);

enum class CheckStatus { ok, fail, skip };

// Result of the uniformity round-trip check: given a uniformity O on the
// space and a countable family F that is uniformly continuous for O,
// generates O weakly, and characterizes the preorder, the star of the
// weak base generates the same filter as O and its core preorder is the
// space preorder. Preconditions that fail produce status skip; the
// equality fields are still filled in as diagnostics.
struct UniformityRoundTrip {
  CheckStatus status = CheckStatus::ok;
  std::string precondition_witness;
  bool star_matches = false;
  bool core_matches = false;
  std::string star_witness;
  std::string core_witness;
  int core_x = -1;
  int core_y = -1;
};

UniformityRoundTrip uniformity_round_trip(const FiniteSpace& space, const EntourageBase& uniformity,
                                          const FnFamily& family);

// Greedy minimization of a generating family: drops members (first to
// last) while the family keeps generating the topology and
// characterizing the preorder. Input must satisfy both conditions
// (std::invalid_argument otherwise). Duplicates are dropped on the way.
FnFamily reduce_family(const FiniteSpace& space, const FnFamily& family);

}  // namespace ordtop
