#include "ordtop/space.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace ordtop {

namespace {

std::string point_pair(int x, int y) {
  return "(" + std::to_string(x) + "," + std::to_string(y) + ")";
}

Verdict fail_points(std::string witness, int x, int y) {
  Verdict v;
  v.holds = false;
  v.witness = std::move(witness);
  v.x = x;
  v.y = y;
  return v;
}

Verdict fail_sets(std::string witness, Mask a, Mask b) {
  Verdict v;
  v.holds = false;
  v.witness = std::move(witness);
  v.set_a = a;
  v.set_b = b;
  return v;
}

}  // namespace

Verdict ok_verdict() { return Verdict{}; }

FiniteSpace make_space(int n, SetFamily opens,
                       const std::vector<std::pair<int, int>>& leq_pairs,
                       bool strict, std::string name) {
  if (n < 0 || n > kMaxPoints)
    throw std::invalid_argument("make_space: n out of range: " + std::to_string(n));
  const Mask full = full_mask(n);
  for (Mask s : opens) {
    if ((s & ~full) != 0)
      throw std::invalid_argument("make_space: open set mentions a point >= n");
  }
  Relation leq = Relation::identity(n);
  for (auto [a, b] : leq_pairs) {
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw std::invalid_argument("make_space: leq pair mentions a point >= n");
    leq.add(a, b);
  }
  FiniteSpace space;
  space.n = n;
  space.name = std::move(name);
  if (strict) {
    if (!is_topology(n, opens))
      throw std::invalid_argument("make_space: opens do not form a topology (strict mode)");
    if (!is_transitive(leq))
      throw std::invalid_argument("make_space: leq pairs are not transitive (strict mode)");
    space.opens = canonical_family(std::move(opens));
    space.leq = leq;
  } else {
    space.opens = topology_from_subbasis(n, opens);
    space.leq = reflexive_transitive_closure(leq);
  }
  return space;
}

void validate_space(const FiniteSpace& space) {
  if (space.n < 0 || space.n > kMaxPoints)
    throw std::invalid_argument("space: n out of range");
  if (!is_topology(space.n, space.opens))
    throw std::invalid_argument("space: opens do not form a topology");
  if (space.opens != canonical_family(space.opens))
    throw std::invalid_argument("space: opens not in canonical form");
  if (static_cast<int>(space.leq.rows.size()) != space.n || space.leq.n != space.n)
    throw std::invalid_argument("space: leq has wrong shape");
  if (!is_reflexive(space.leq))
    throw std::invalid_argument("space: leq is not reflexive");
  if (!is_transitive(space.leq))
    throw std::invalid_argument("space: leq is not transitive");
  const Mask full = full_mask(space.n);
  for (Mask row : space.leq.rows) {
    if ((row & ~full) != 0) throw std::invalid_argument("space: leq mentions a point >= n");
  }
}

Mask increasing_hull(const FiniteSpace& space, Mask s) {
  Mask out = 0;
  for_each_point(s, [&](int x) { out |= space.leq.rows[x]; });
  return out | s;
}

Mask decreasing_hull(const FiniteSpace& space, Mask s) {
  Mask out = s;
  for (int y = 0; y < space.n; ++y) {
    if ((space.leq.rows[y] & s) != 0) out |= point_bit(y);
  }
  return out;
}

SetFamily upper_topology(const FiniteSpace& space) {
  SetFamily out;
  for (Mask o : space.opens) {
    if (increasing_hull(space, o) == o) out.push_back(o);
  }
  return out;  // already sorted: subsequence of canonical opens
}

SetFamily lower_topology(const FiniteSpace& space) {
  SetFamily out;
  for (Mask o : space.opens) {
    if (decreasing_hull(space, o) == o) out.push_back(o);
  }
  return out;
}

Mask closure(const FiniteSpace& space, Mask s) {
  Mask exterior = 0;
  for (Mask o : space.opens) {
    if ((o & s) == 0) exterior |= o;
  }
  return full_mask(space.n) & ~exterior;
}

Mask interior(const FiniteSpace& space, Mask s) {
  Mask in = 0;
  for (Mask o : space.opens) {
    if ((o & ~s) == 0) in |= o;
  }
  return in;
}

bool is_open(const FiniteSpace& space, Mask s) { return family_contains(space.opens, s); }

bool is_closed_set(const FiniteSpace& space, Mask s) {
  return family_contains(space.opens, full_mask(space.n) & ~s);
}

bool is_clopen(const FiniteSpace& space, Mask s) {
  return is_open(space, s) && is_closed_set(space, s);
}

std::vector<Mask> minimal_members(int n, const SetFamily& family) {
  std::vector<Mask> out(n, full_mask(n));
  for (Mask m : family) {
    for_each_point(m, [&](int x) { out[x] &= m; });
  }
  return out;
}

std::vector<Mask> minimal_opens(const FiniteSpace& space) {
  return minimal_members(space.n, space.opens);
}

SetFamily clopen_increasing_sets(const FiniteSpace& space) {
  SetFamily out;
  for (Mask o : space.opens) {
    if (is_closed_set(space, o) && increasing_hull(space, o) == o) out.push_back(o);
  }
  return out;
}

Verdict is_semiclosed(const FiniteSpace& space) {
  for (int x = 0; x < space.n; ++x) {
    Mask up = space.leq.rows[x];
    if (!is_closed_set(space, up)) {
      Verdict v = fail_points("i(" + std::to_string(x) + ") = " + format_set(up) + " is not closed", x, -1);
      v.set_a = up;
      return v;
    }
    Mask down = decreasing_hull(space, point_bit(x));
    if (!is_closed_set(space, down)) {
      Verdict v = fail_points("d(" + std::to_string(x) + ") = " + format_set(down) + " is not closed", x, -1);
      v.set_a = down;
      return v;
    }
  }
  return ok_verdict();
}

Verdict is_closed_preordered(const FiniteSpace& space) {
  // The graph is closed iff every pair outside it has a box neighborhood
  // missing the graph; the minimal box (U_x, U_y) decides.
  std::vector<Mask> umin = minimal_opens(space);
  for (int x = 0; x < space.n; ++x) {
    for (int y = 0; y < space.n; ++y) {
      if (space.leq.at(x, y)) continue;
      if ((increasing_hull(space, umin[x]) & umin[y]) != 0)
        return fail_points("graph of leq is not closed at " + point_pair(x, y), x, y);
    }
  }
  return ok_verdict();
}

Verdict is_convex(const FiniteSpace& space) {
  // Convexity: every open set is a union of (open decreasing) cap (open
  // increasing). Decided by minimal members at each point.
  std::vector<Mask> umin = minimal_opens(space);
  std::vector<Mask> lower_min = minimal_members(space.n, lower_topology(space));
  std::vector<Mask> upper_min = minimal_members(space.n, upper_topology(space));
  for (int x = 0; x < space.n; ++x) {
    Mask box = lower_min[x] & upper_min[x];
    if ((box & ~umin[x]) != 0) {
      Verdict v = fail_points("no monotone-open box fits inside " + format_set(umin[x]) +
                                  " around point " + std::to_string(x),
                              x, -1);
      v.set_a = umin[x];
      return v;
    }
  }
  return ok_verdict();
}

namespace {

// Largest open increasing set disjoint from the smallest open decreasing
// superset of a; separation of (a, b) by monotone opens succeeds iff b
// fits inside it.
struct MonotoneSeparator {
  const FiniteSpace& space;
  SetFamily lower;
  SetFamily upper;

  explicit MonotoneSeparator(const FiniteSpace& s)
      : space(s), lower(lower_topology(s)), upper(upper_topology(s)) {}

  Mask min_lower_superset(Mask a) const {
    Mask out = full_mask(space.n);
    for (Mask u : lower) {
      if ((a & ~u) == 0) out &= u;
    }
    return out;
  }

  bool separates(Mask a, Mask b) const {
    Mask u = min_lower_superset(a);
    Mask vmax = 0;
    for (Mask v : upper) {
      if ((v & u) == 0) vmax |= v;
    }
    return (b & ~vmax) == 0;
  }
};

}  // namespace

Verdict is_normally_preordered(const FiniteSpace& space) {
  Verdict sc = is_semiclosed(space);
  if (!sc.holds) {
    sc.witness = "not semiclosed: " + sc.witness;
    return sc;
  }
  MonotoneSeparator sep(space);
  const Mask full = full_mask(space.n);
  for (Mask v : sep.upper) {
    Mask a = full & ~v;  // closed decreasing
    for (Mask u : sep.lower) {
      Mask b = full & ~u;  // closed increasing
      if ((a & b) != 0) continue;
      if (!sep.separates(a, b))
        return fail_sets("closed decreasing " + format_set(a) + " and closed increasing " +
                             format_set(b) + " admit no disjoint monotone opens",
                         a, b);
    }
  }
  return ok_verdict();
}

Verdict is_regularly_preordered(const FiniteSpace& space) {
  Verdict sc = is_semiclosed(space);
  if (!sc.holds) {
    sc.witness = "not semiclosed: " + sc.witness;
    return sc;
  }
  MonotoneSeparator sep(space);
  const Mask full = full_mask(space.n);
  for (int x = 0; x < space.n; ++x) {
    Mask up = space.leq.rows[x];
    Mask down = decreasing_hull(space, point_bit(x));
    for (Mask v : sep.upper) {
      Mask a = full & ~v;
      if ((a & up) == 0 && !sep.separates(a, up)) {
        Verdict out = fail_sets("closed decreasing " + format_set(a) + " does not separate from i(" +
                                    std::to_string(x) + ")",
                                a, up);
        out.x = x;
        return out;
      }
    }
    for (Mask u : sep.lower) {
      Mask b = full & ~u;
      if ((b & down) == 0 && !sep.separates(down, b)) {
        Verdict out = fail_sets("closed increasing " + format_set(b) + " does not separate from d(" +
                                    std::to_string(x) + ")",
                                down, b);
        out.x = x;
        return out;
      }
    }
  }
  return ok_verdict();
}

Verdict is_completely_regular_preordered(const FiniteSpace& space) {
  SetFamily clopen_incr = clopen_increasing_sets(space);
  // Separation: for every x the intersection of clopen increasing sets
  // containing x must stay inside i(x).
  std::vector<Mask> hull(space.n, full_mask(space.n));
  for (Mask u : clopen_incr) {
    for_each_point(u, [&](int x) { hull[x] &= u; });
  }
  for (int x = 0; x < space.n; ++x) {
    Mask stray = hull[x] & ~space.leq.rows[x];
    if (stray != 0) {
      int y = points_of(stray).front();
      return fail_points("no clopen increasing set contains " + std::to_string(x) +
                             " and avoids " + std::to_string(y),
                         x, y);
    }
  }
  // Generation: clopen increasing sets and their complements must span
  // the topology.
  SetFamily subbasis = clopen_incr;
  const Mask full = full_mask(space.n);
  for (Mask u : clopen_incr) subbasis.push_back(full & ~u);
  SetFamily generated = topology_from_subbasis(space.n, subbasis);
  if (generated != space.opens) {
    for (Mask o : space.opens) {
      if (!family_contains(generated, o)) {
        Verdict v = fail_sets("open set " + format_set(o) +
                                  " is not generated by clopen monotone sets",
                              o, 0);
        return v;
      }
    }
  }
  return ok_verdict();
}

Verdict is_i_space(const FiniteSpace& space) {
  for (Mask o : space.opens) {
    if (!is_open(space, increasing_hull(space, o))) {
      Verdict v = fail_sets("i(" + format_set(o) + ") is not open", o, increasing_hull(space, o));
      return v;
    }
    if (!is_open(space, decreasing_hull(space, o))) {
      Verdict v = fail_sets("d(" + format_set(o) + ") is not open", o, decreasing_hull(space, o));
      return v;
    }
  }
  return ok_verdict();
}

PropertyReport property_report(const FiniteSpace& space) {
  PropertyReport r;
  r.semiclosed = is_semiclosed(space);
  r.closed_preordered = is_closed_preordered(space);
  r.convex = is_convex(space);
  r.normally_preordered = is_normally_preordered(space);
  r.regularly_preordered = is_regularly_preordered(space);
  r.completely_regular = is_completely_regular_preordered(space);
  r.i_space = is_i_space(space);
  return r;
}

Quotient quotient(const FiniteSpace& space) {
  std::vector<int> cls(space.n, -1);
  std::vector<int> reps;
  for (int x = 0; x < space.n; ++x) {
    if (cls[x] != -1) continue;
    int id = static_cast<int>(reps.size());
    cls[x] = id;
    reps.push_back(x);
    for (int y = x + 1; y < space.n; ++y) {
      if (space.leq.at(x, y) && space.leq.at(y, x)) cls[y] = id;
    }
  }
  const int m = static_cast<int>(reps.size());
  std::vector<Mask> class_mask(m, 0);
  for (int x = 0; x < space.n; ++x) class_mask[cls[x]] |= point_bit(x);

  FiniteSpace q;
  q.n = m;
  q.name = space.name.empty() ? "" : space.name + "/~";
  q.leq = Relation(m);
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      if (space.leq.at(reps[a], reps[b])) q.leq.add(a, b);
    }
  }
  if (!is_antisymmetric(q.leq))
    throw std::logic_error("quotient: preorder on classes is not a partial order");
  SetFamily q_opens;
  for (Mask o : space.opens) {
    bool saturated = true;
    Mask image = 0;
    for_each_point(o, [&](int x) { image |= point_bit(cls[x]); });
    for_each_point(image, [&](int c) {
      if ((class_mask[c] & ~o) != 0) saturated = false;
    });
    if (saturated) q_opens.push_back(image);
  }
  q.opens = canonical_family(std::move(q_opens));
  if (!is_topology(q.n, q.opens))
    throw std::logic_error("quotient: images of saturated opens are not a topology");
  return Quotient{std::move(q), std::move(cls)};
}

FiniteSpace subspace(const FiniteSpace& space, Mask s) {
  if ((s & ~full_mask(space.n)) != 0)
    throw std::invalid_argument("subspace: mask mentions a point >= n");
  std::vector<int> pts = points_of(s);
  std::vector<int> new_id(space.n, -1);
  for (std::size_t i = 0; i < pts.size(); ++i) new_id[pts[i]] = static_cast<int>(i);
  auto trace = [&](Mask m) {
    Mask out = 0;
    for_each_point(m & s, [&](int x) { out |= point_bit(new_id[x]); });
    return out;
  };
  FiniteSpace sub;
  sub.n = static_cast<int>(pts.size());
  SetFamily traces;
  traces.reserve(space.opens.size());
  for (Mask o : space.opens) traces.push_back(trace(o));
  sub.opens = canonical_family(std::move(traces));
  sub.leq = Relation(sub.n);
  for (int a = 0; a < sub.n; ++a) {
    for (int b = 0; b < sub.n; ++b) {
      if (space.leq.at(pts[a], pts[b])) sub.leq.add(a, b);
    }
  }
  return sub;
}

Verdict is_preorder_subspace(const FiniteSpace& space, Mask s) {
  FiniteSpace sub = subspace(space, s);
  std::vector<int> pts = points_of(s);
  auto unindex = [&](Mask m) {
    Mask out = 0;
    for_each_point(m, [&](int i) { out |= point_bit(pts[i]); });
    return out;
  };
  std::vector<int> new_id(space.n, -1);
  for (std::size_t i = 0; i < pts.size(); ++i) new_id[pts[i]] = static_cast<int>(i);
  auto trace = [&](Mask m) {
    Mask out = 0;
    for_each_point(m & s, [&](int x) { out |= point_bit(new_id[x]); });
    return out;
  };

  SetFamily upper_traces;
  for (Mask v : upper_topology(space)) upper_traces.push_back(trace(v));
  upper_traces = canonical_family(std::move(upper_traces));
  for (Mask v : upper_topology(sub)) {
    if (!family_contains(upper_traces, v)) {
      return fail_sets("open increasing set " + format_set(unindex(v)) +
                           " of the subspace is not a trace of an ambient open increasing set",
                       unindex(v), 0);
    }
  }
  SetFamily lower_traces;
  for (Mask u : lower_topology(space)) lower_traces.push_back(trace(u));
  lower_traces = canonical_family(std::move(lower_traces));
  for (Mask u : lower_topology(sub)) {
    if (!family_contains(lower_traces, u)) {
      return fail_sets("open decreasing set " + format_set(unindex(u)) +
                           " of the subspace is not a trace of an ambient open decreasing set",
                       unindex(u), 0);
    }
  }
  return ok_verdict();
}

}  // namespace ordtop
