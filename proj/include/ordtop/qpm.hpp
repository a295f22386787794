#pragma once

#include <string>
#include <vector>

#include "ordtop/rational.hpp"
#include "ordtop/sets.hpp"
#include "ordtop/space.hpp"

namespace ordtop {

// A quasi-pseudo-metric on {0,...,n-1}: zero diagonal, nonnegative
// entries, triangle inequality. Stored row-major; entries are exact
// rationals. Symmetry is not assumed.
struct Qpm {
  int n = 0;
  std::vector<Rational> m;  // n * n entries, m[x*n + y] = p(x, y)

  Qpm() = default;
  explicit Qpm(int n_points) : n(n_points), m(static_cast<std::size_t>(n_points) * n_points) {}

  const Rational& at(int x, int y) const { return m[static_cast<std::size_t>(x) * n + y]; }
  Rational& at(int x, int y) { return m[static_cast<std::size_t>(x) * n + y]; }

  static Qpm zero(int n_points) { return Qpm(n_points); }

  friend bool operator==(const Qpm&, const Qpm&) = default;
};

// Which distance to read off a Qpm: the metric itself, its conjugate
// q(x,y) = p(y,x), or the symmetrization d = p + conjugate.
enum class Side { p, q, d };

enum class SymmetrizeMode { sum, max };

struct QpmAxiomViolation {
  std::string axiom;  // "negative" | "diagonal" | "triangle" | "separation" | "weak-separation"
  int x = -1;
  int y = -1;
  int z = -1;
};

// Checks the quasi-pseudo-metric axioms; optionally also the
// quasi-metric separation axiom (p(x,y) = 0 implies x = y) or the weaker
// one (p(x,y) = 0 and p(y,x) = 0 imply x = y). Returns all violations.
std::vector<QpmAxiomViolation> validate(const Qpm& p, bool require_quasi_metric = false,
                                        bool require_weak_separation = false);
bool is_valid(const Qpm& p);

// q(x,y) = p(y,x). Involution.
Qpm conjugate(const Qpm& p);

// d = p + conjugate(p) (sum mode, the default) or entrywise max. Both
// are pseudo-metrics inducing the same topology.
Qpm symmetrize(const Qpm& p, SymmetrizeMode mode = SymmetrizeMode::sum);

// x <= y iff p(x, y) = 0. Always reflexive and transitive.
Relation induced_preorder(const Qpm& p);

Rational side_value(const Qpm& p, Side side, int x, int y);

// Open ball {y : value(x, y) < r} for the chosen side; r must be > 0.
Mask ball(const Qpm& p, Side side, int x, const Rational& r);

// The topology generated by all balls of the chosen side. Computed from
// the minimal balls {y : value(x, y) = 0}, which form a basis (any ball
// around x contains the minimal ball, and the triangle inequality puts a
// minimal ball around each of its points inside it).
SetFamily topology_of(const Qpm& p, Side side);

struct AdmissibilityVerdict {
  bool admissible = false;
  // Only meaningful when produced by is_strictly_admissible; strictness
  // is checked against its own definition, not inferred.
  bool strict = false;
  std::vector<std::string> failures;
};

// Admissible for (E, T, leq): the symmetrized topology equals T and the
// induced preorder equals leq.
AdmissibilityVerdict is_admissible(const FiniteSpace& space, const Qpm& p);

// Strictly admissible: the space is convex and semiclosed, the topology
// of p equals the upper topology, and the topology of the conjugate
// equals the lower topology. The admissible flag is filled in too.
AdmissibilityVerdict is_strictly_admissible(const FiniteSpace& space, const Qpm& p);

// Entrywise min(p, 1); preserves validity, the induced preorder, and
// every ball topology.
Qpm bound_by_one(const Qpm& p);

// Restriction to the points of s, relabeled ascending.
Qpm restrict_to(const Qpm& p, Mask s);

// |p(x,y) - p(w,z)| <= d(x,w) + d(y,z) for all quadruples, in both the
// sum and max symmetrizations.
Verdict check_lipschitz(const Qpm& p);

// With respect to the induced preorder: p(x, .) is anti-isotone and
// p(., y) is isotone in the conjugate sense, i.e. for y <= z:
// p(x, y) >= p(x, z) and p(y, x) <= p(z, x).
Verdict check_monotone_slices(const Qpm& p);

}  // namespace ordtop
