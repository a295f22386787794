#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ordtop/sets.hpp"

namespace ordtop {

// A finite topological preordered space: a point set {0,...,n-1}, a
// topology given as the full list of open sets, and a preorder
// (reflexive transitive relation).
struct FiniteSpace {
  int n = 0;
  SetFamily opens;  // canonical; contains the empty and full sets
  Relation leq;     // reflexive and transitive
  std::string name;

  friend bool operator==(const FiniteSpace&, const FiniteSpace&) = default;
};

// Builds a space from raw parts. In lenient mode (strict = false) the
// opens are completed to the topology they generate and the preorder is
// the reflexive-transitive closure of the given pairs. In strict mode
// the opens must already form a topology and the pairs (plus the
// diagonal) must already be transitive; otherwise std::invalid_argument.
FiniteSpace make_space(int n, SetFamily opens,
                       const std::vector<std::pair<int, int>>& leq_pairs,
                       bool strict = false, std::string name = "");

// Throws std::invalid_argument if the space violates a structural
// invariant (n range, topology axioms, preorder axioms).
void validate_space(const FiniteSpace& space);

// Boolean check with a human-readable witness for the negative case.
// Point / set witness fields are filled when they apply (-1 / 0 when not).
struct Verdict {
  bool holds = true;
  std::string witness;
  int x = -1;
  int y = -1;
  Mask set_a = 0;
  Mask set_b = 0;

  explicit operator bool() const { return holds; }
};

Verdict ok_verdict();

// --- hulls, topologies, closure operators ---

// Smallest increasing (upward closed) superset of s.
Mask increasing_hull(const FiniteSpace& space, Mask s);
// Smallest decreasing superset of s.
Mask decreasing_hull(const FiniteSpace& space, Mask s);

// The family of open increasing sets (a topology in its own right).
SetFamily upper_topology(const FiniteSpace& space);
// The family of open decreasing sets.
SetFamily lower_topology(const FiniteSpace& space);

Mask closure(const FiniteSpace& space, Mask s);
Mask interior(const FiniteSpace& space, Mask s);

bool is_open(const FiniteSpace& space, Mask s);
bool is_closed_set(const FiniteSpace& space, Mask s);
bool is_clopen(const FiniteSpace& space, Mask s);

// minimal_opens()[x] is the smallest open set containing x (finite
// spaces always have one: the intersection of all opens containing x).
std::vector<Mask> minimal_opens(const FiniteSpace& space);
// Same, restricted to an arbitrary intersection-closed family that
// contains the full set (e.g. upper_topology / lower_topology output).
std::vector<Mask> minimal_members(int n, const SetFamily& family);

// All clopen increasing sets, including the empty and full sets.
SetFamily clopen_increasing_sets(const FiniteSpace& space);

// --- separation properties of the preorder vs. the topology ---

// i(x) and d(x) are closed for every point x.
Verdict is_semiclosed(const FiniteSpace& space);
// The graph of the preorder is closed in the product topology.
Verdict is_closed_preordered(const FiniteSpace& space);
// Every open set is generated by sets U cap V with U open decreasing and
// V open increasing (the topology is the join of its upper and lower parts).
Verdict is_convex(const FiniteSpace& space);
// Semiclosed, and every disjoint pair (closed decreasing A, closed
// increasing B) separates by disjoint opens (decreasing around A,
// increasing around B).
Verdict is_normally_preordered(const FiniteSpace& space);
// Semiclosed, and separation holds when one side of the pair is a point
// hull (d(x) or i(x)).
Verdict is_regularly_preordered(const FiniteSpace& space);
// Points x with not (x <= y) separate from y by a clopen increasing set,
// and the clopen increasing sets together with their complements
// generate the topology.
Verdict is_completely_regular_preordered(const FiniteSpace& space);
// Increasing and decreasing hulls of open sets are open.
Verdict is_i_space(const FiniteSpace& space);

struct PropertyReport {
  Verdict semiclosed;
  Verdict closed_preordered;
  Verdict convex;
  Verdict normally_preordered;
  Verdict regularly_preordered;
  Verdict completely_regular;
  Verdict i_space;
};

PropertyReport property_report(const FiniteSpace& space);

// --- derived spaces ---

// Quotient by the equivalence x ~ y iff x <= y and y <= x. The quotient
// preorder is a partial order; `projection[x]` is the class of x.
// Quotient opens are the images of the saturated opens.
struct Quotient {
  FiniteSpace space;
  std::vector<int> projection;
};

Quotient quotient(const FiniteSpace& space);

// Subspace on the points of s (subspace topology, restricted preorder).
// Points are relabeled in ascending order of their original ids.
FiniteSpace subspace(const FiniteSpace& space, Mask s);

// True when the subspace on s is a preorder subspace: every open
// increasing (resp. decreasing) set of the subspace is the trace of an
// open increasing (resp. decreasing) set of the ambient space. The
// witness set, when any, is reported in ambient point labels.
Verdict is_preorder_subspace(const FiniteSpace& space, Mask s);

}  // namespace ordtop
