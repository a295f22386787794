#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace ordtop {

// A subset of the point set {0, ..., n-1}, one bit per point.
using Mask = std::uint32_t;

// Hard cap on the number of points in any space this library handles.
// Keeps every subset representable in a Mask and every exhaustive scan
// over 2^n subsets at desk scale.
inline constexpr int kMaxPoints = 25;

constexpr Mask full_mask(int n) { return n <= 0 ? Mask(0) : (Mask(1) << n) - 1; }
constexpr Mask point_bit(int i) { return Mask(1) << i; }
constexpr bool has_point(Mask s, int i) { return (s >> i) & Mask(1); }
inline int set_size(Mask s) { return std::popcount(s); }

template <typename Fn>
void for_each_point(Mask s, Fn&& fn) {
  while (s != 0) {
    fn(std::countr_zero(s));
    s &= s - 1;
  }
}

// Ascending list of the points in s.
std::vector<int> points_of(Mask s);

// "{0,2,3}" — for witnesses and logs.
std::string format_set(Mask s);

// A family of subsets. Canonical form: strictly ascending mask values
// (sorted, duplicate-free). All family-returning operations produce
// canonical output.
using SetFamily = std::vector<Mask>;

SetFamily canonical_family(SetFamily family);
bool family_contains(const SetFamily& family, Mask s);

// Closure under pairwise (hence arbitrary nonempty finite) union.
SetFamily union_closure(SetFamily family);
// Closure under pairwise intersection.
SetFamily intersection_closure(SetFamily family);

// The coarsest topology on {0,...,n-1} containing every member of
// `subbasis`: adds the empty set and the full set, closes under
// intersection, then under union. Throws std::invalid_argument if n is
// out of range or a member mentions a point >= n.
SetFamily topology_from_subbasis(int n, const SetFamily& subbasis);

// True when `family` contains the empty and full sets and is closed
// under pairwise union and intersection.
bool is_topology(int n, const SetFamily& family);

// A binary relation on {0,...,n-1}; rows[x] is the mask of all y with
// (x, y) in the relation.
struct Relation {
  int n = 0;
  std::vector<Mask> rows;

  Relation() = default;
  explicit Relation(int n_points) : n(n_points), rows(n_points, 0) {}

  bool at(int x, int y) const { return has_point(rows[x], y); }
  void add(int x, int y) { rows[x] |= point_bit(y); }

  static Relation identity(int n_points);
  static Relation total(int n_points);

  friend bool operator==(const Relation&, const Relation&) = default;
};

// Strict ordering for canonical relation lists: by n, then rows
// lexicographically.
bool relation_less(const Relation& a, const Relation& b);

bool subset_of(const Relation& a, const Relation& b);
Relation inverse(const Relation& r);
// (x, z) in compose(a, b) iff some y has (x, y) in a and (y, z) in b.
Relation compose(const Relation& a, const Relation& b);
Relation intersect(const Relation& a, const Relation& b);

bool is_reflexive(const Relation& r);
bool is_transitive(const Relation& r);
bool is_antisymmetric(const Relation& r);

Relation reflexive_transitive_closure(Relation r);

// All (x, y) pairs, row-major order.
std::vector<std::pair<int, int>> relation_pairs(const Relation& r);

}  // namespace ordtop
