#include "ordtop/bruteforce.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace ordtop::bruteforce {

bool closed_preordered(const FiniteSpace& space) {
  // A pair (x, y) outside the graph needs an open box O1 x O2 around it
  // with no related pair inside.
  for (int x = 0; x < space.n; ++x) {
    for (int y = 0; y < space.n; ++y) {
      if (space.leq.at(x, y)) continue;
      bool separated = false;
      for (Mask o1 : space.opens) {
        if (!has_point(o1, x)) continue;
        for (Mask o2 : space.opens) {
          if (!has_point(o2, y)) continue;
          bool box_misses_graph = true;
          for_each_point(o1, [&](int a) {
            if ((space.leq.rows[a] & o2) != 0) box_misses_graph = false;
          });
          if (box_misses_graph) {
            separated = true;
            break;
          }
        }
        if (separated) break;
      }
      if (!separated) return false;
    }
  }
  return true;
}

bool convex(const FiniteSpace& space) {
  SetFamily lower;
  SetFamily upper;
  for (Mask o : space.opens) {
    bool is_increasing = true;
    bool is_decreasing = true;
    for (int a = 0; a < space.n; ++a) {
      if (has_point(o, a)) {
        if ((space.leq.rows[a] & ~o) != 0) is_increasing = false;
      } else {
        if ((space.leq.rows[a] & o) != 0) is_decreasing = false;
      }
    }
    if (is_increasing) upper.push_back(o);
    if (is_decreasing) lower.push_back(o);
  }
  for (Mask o : space.opens) {
    bool all_points_ok = true;
    for_each_point(o, [&](int x) {
      bool found = false;
      for (Mask u : lower) {
        if (!has_point(u, x)) continue;
        for (Mask v : upper) {
          if (!has_point(v, x)) continue;
          if (((u & v) & ~o) == 0) {
            found = true;
            break;
          }
        }
        if (found) break;
      }
      if (!found) all_points_ok = false;
    });
    if (!all_points_ok) return false;
  }
  return true;
}

namespace {

// Monotone open families and hulls computed longhand for the separation
// oracles.
struct MonotoneParts {
  SetFamily lower;
  SetFamily upper;

  explicit MonotoneParts(const FiniteSpace& space) {
    for (Mask o : space.opens) {
      bool is_increasing = true;
      bool is_decreasing = true;
      for (int a = 0; a < space.n; ++a) {
        if (has_point(o, a)) {
          if ((space.leq.rows[a] & ~o) != 0) is_increasing = false;
        } else {
          if ((space.leq.rows[a] & o) != 0) is_decreasing = false;
        }
      }
      if (is_increasing) upper.push_back(o);
      if (is_decreasing) lower.push_back(o);
    }
  }

  bool separates(Mask a, Mask b) const {
    for (Mask u : lower) {
      if ((a & ~u) != 0) continue;
      for (Mask v : upper) {
        if ((b & ~v) != 0) continue;
        if ((u & v) == 0) return true;
      }
    }
    return false;
  }
};

bool hulls_closed(const FiniteSpace& space) {
  for (int x = 0; x < space.n; ++x) {
    Mask up = 0;
    Mask down = 0;
    for (int y = 0; y < space.n; ++y) {
      if (space.leq.at(x, y)) up |= point_bit(y);
      if (space.leq.at(y, x)) down |= point_bit(y);
    }
    if (!family_contains(space.opens, full_mask(space.n) & ~up)) return false;
    if (!family_contains(space.opens, full_mask(space.n) & ~down)) return false;
  }
  return true;
}

}  // namespace

bool normally_preordered(const FiniteSpace& space) {
  if (!hulls_closed(space)) return false;
  MonotoneParts parts(space);
  const Mask full = full_mask(space.n);
  for (Mask v : parts.upper) {
    Mask a = full & ~v;
    for (Mask u : parts.lower) {
      Mask b = full & ~u;
      if ((a & b) != 0) continue;
      if (!parts.separates(a, b)) return false;
    }
  }
  return true;
}

bool completely_regular(const FiniteSpace& space) {
  if (space.n > 20)
    throw std::invalid_argument("bruteforce::completely_regular: too many points");
  // Enumerate every {0,1}-valued function as the mask of its support.
  std::vector<Mask> good;
  const Mask full = full_mask(space.n);
  for (Mask f = 0; f <= full && space.n > 0; ++f) {
    // Continuity into the two-point discrete subspace of [0,1]: the
    // preimages of {0} and {1} must both be open.
    if (!family_contains(space.opens, f)) continue;
    if (!family_contains(space.opens, full & ~f)) continue;
    // Isotone: no related pair may drop from 1 to 0.
    bool isotone = true;
    for (int x = 0; x < space.n && isotone; ++x) {
      for (int y = 0; y < space.n; ++y) {
        if (space.leq.at(x, y) && has_point(f, x) && !has_point(f, y)) {
          isotone = false;
          break;
        }
      }
    }
    if (isotone) good.push_back(f);
    if (f == full) break;  // avoid wraparound when full == ~0
  }
  // Separation: not (x <= y) needs some f with f(x) = 1, f(y) = 0.
  for (int x = 0; x < space.n; ++x) {
    for (int y = 0; y < space.n; ++y) {
      if (space.leq.at(x, y)) continue;
      bool separated = false;
      for (Mask f : good) {
        if (has_point(f, x) && !has_point(f, y)) {
          separated = true;
          break;
        }
      }
      if (!separated) return false;
    }
  }
  // Generation: the level sets of the good functions must generate the
  // topology. For {0,1}-valued f these are the support and its
  // complement.
  SetFamily subbasis;
  for (Mask f : good) {
    subbasis.push_back(f);
    subbasis.push_back(full & ~f);
  }
  return topology_from_subbasis(space.n, subbasis) == space.opens;
}

SetFamily ball_topology(const Qpm& p, Side side) {
  // Collect every ball at every distinct radius and close under union.
  std::vector<Rational> radii;
  for (int x = 0; x < p.n; ++x) {
    for (int y = 0; y < p.n; ++y) radii.push_back(side_value(p, side, x, y));
  }
  std::sort(radii.begin(), radii.end());
  radii.erase(std::unique(radii.begin(), radii.end()), radii.end());
  radii.erase(std::remove_if(radii.begin(), radii.end(), [](const Rational& r) { return r <= 0; }),
              radii.end());
  if (radii.empty()) {
    radii.push_back(1);
  } else {
    radii.push_back(radii.back() + 1);
  }
  SetFamily balls;
  balls.push_back(0);
  for (int x = 0; x < p.n; ++x) {
    for (const Rational& r : radii) balls.push_back(ball(p, side, x, r));
  }
  return union_closure(std::move(balls));
}

long count_topologies(int n) {
  if (n < 0 || n > 4)
    throw std::invalid_argument("bruteforce::count_topologies: n out of range (0..4)");
  if (n == 0) return 1;
  const Mask full = full_mask(n);
  // Candidate extra members: the proper nonempty subsets.
  std::vector<Mask> proper;
  for (Mask s = 1; s < full; ++s) proper.push_back(s);
  const int k = static_cast<int>(proper.size());
  long count = 0;
  for (long pick = 0; pick < (1L << k); ++pick) {
    SetFamily family;
    family.push_back(0);
    family.push_back(full);
    for (int i = 0; i < k; ++i) {
      if ((pick >> i) & 1) family.push_back(proper[i]);
    }
    std::sort(family.begin(), family.end());
    bool closed = true;
    for (std::size_t i = 0; i < family.size() && closed; ++i) {
      for (std::size_t j = i + 1; j < family.size(); ++j) {
        if (!std::binary_search(family.begin(), family.end(), family[i] | family[j]) ||
            !std::binary_search(family.begin(), family.end(), family[i] & family[j])) {
          closed = false;
          break;
        }
      }
    }
    if (closed) ++count;
  }
  return count;
}

}  // namespace ordtop::bruteforce
