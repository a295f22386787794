#include "ordtop/qpm.hpp"

#include <stdexcept>
#include <string>

#include "ordtop/errors.hpp"

namespace ordtop {

namespace {

void require_valid(const Qpm& p, const char* who) {
  if (static_cast<int>(p.m.size()) != p.n * p.n)
    throw std::invalid_argument(std::string(who) + ": matrix has wrong shape");
  if (!is_valid(p))
    throw std::invalid_argument(std::string(who) + ": not a quasi-pseudo-metric");
}

std::string triple(int x, int y, int z) {
  return "(" + std::to_string(x) + "," + std::to_string(y) + "," + std::to_string(z) + ")";
}

}  // namespace

std::vector<QpmAxiomViolation> validate(const Qpm& p, bool require_quasi_metric,
                                        bool require_weak_separation) {
  std::vector<QpmAxiomViolation> out;
  if (static_cast<int>(p.m.size()) != p.n * p.n)
    throw std::invalid_argument("validate: matrix has wrong shape");
  for (int x = 0; x < p.n; ++x) {
    if (p.at(x, x) != 0) out.push_back({"diagonal", x, x, -1});
    for (int y = 0; y < p.n; ++y) {
      if (p.at(x, y) < 0) out.push_back({"negative", x, y, -1});
    }
  }
  for (int x = 0; x < p.n; ++x) {
    for (int z = 0; z < p.n; ++z) {
      for (int y = 0; y < p.n; ++y) {
        if (p.at(x, z) > p.at(x, y) + p.at(y, z)) out.push_back({"triangle", x, y, z});
      }
    }
  }
  if (require_quasi_metric) {
    for (int x = 0; x < p.n; ++x) {
      for (int y = 0; y < p.n; ++y) {
        if (x != y && p.at(x, y) == 0) out.push_back({"separation", x, y, -1});
      }
    }
  }
  if (require_weak_separation) {
    for (int x = 0; x < p.n; ++x) {
      for (int y = x + 1; y < p.n; ++y) {
        if (p.at(x, y) == 0 && p.at(y, x) == 0) out.push_back({"weak-separation", x, y, -1});
      }
    }
  }
  return out;
}

bool is_valid(const Qpm& p) { return validate(p).empty(); }

Qpm conjugate(const Qpm& p) {
  Qpm out(p.n);
  for (int x = 0; x < p.n; ++x) {
    for (int y = 0; y < p.n; ++y) out.at(x, y) = p.at(y, x);
  }
  return out;
}

Qpm symmetrize(const Qpm& p, SymmetrizeMode mode) {
  Qpm out(p.n);
  for (int x = 0; x < p.n; ++x) {
    for (int y = 0; y < p.n; ++y) {
      const Rational& a = p.at(x, y);
      const Rational& b = p.at(y, x);
      out.at(x, y) = (mode == SymmetrizeMode::sum) ? a + b : (a < b ? b : a);
    }
  }
  return out;
}

Relation induced_preorder(const Qpm& p) {
  Relation r(p.n);
  for (int x = 0; x < p.n; ++x) {
    for (int y = 0; y < p.n; ++y) {
      if (p.at(x, y) == 0) r.add(x, y);
    }
  }
  return r;
}

Rational side_value(const Qpm& p, Side side, int x, int y) {
  switch (side) {
    case Side::p:
      return p.at(x, y);
    case Side::q:
      return p.at(y, x);
    case Side::d:
      return p.at(x, y) + p.at(y, x);
  }
  throw std::logic_error("side_value: bad side");
}

Mask ball(const Qpm& p, Side side, int x, const Rational& r) {
  if (r <= 0) throw std::invalid_argument("ball: radius must be positive");
  Mask out = 0;
  for (int y = 0; y < p.n; ++y) {
    if (side_value(p, side, x, y) < r) out |= point_bit(y);
  }
  return out;
}

SetFamily topology_of(const Qpm& p, Side side) {
  SetFamily basis;
  basis.reserve(p.n + 1);
  for (int x = 0; x < p.n; ++x) {
    Mask zero_ball = 0;
    for (int y = 0; y < p.n; ++y) {
      if (side_value(p, side, x, y) == 0) zero_ball |= point_bit(y);
    }
    basis.push_back(zero_ball);
  }
  basis.push_back(0);
  return union_closure(std::move(basis));
}

AdmissibilityVerdict is_admissible(const FiniteSpace& space, const Qpm& p) {
  require_valid(p, "is_admissible");
  if (space.n != p.n)
    throw DimensionMismatchError("is_admissible: space has " + std::to_string(space.n) +
                                 " points, matrix has " + std::to_string(p.n));
  AdmissibilityVerdict v;
  v.admissible = true;
  SetFamily topo = topology_of(p, Side::d);
  if (topo != space.opens) {
    v.admissible = false;
    for (Mask o : space.opens) {
      if (!family_contains(topo, o)) {
        v.failures.push_back("open set " + format_set(o) + " is not open in the metric topology");
        break;
      }
    }
    for (Mask o : topo) {
      if (!family_contains(space.opens, o)) {
        v.failures.push_back("metric-open set " + format_set(o) + " is not open in the space");
        break;
      }
    }
  }
  Relation induced = induced_preorder(p);
  if (induced != space.leq) {
    v.admissible = false;
    for (int x = 0; x < p.n && v.failures.size() < 8; ++x) {
      for (int y = 0; y < p.n; ++y) {
        if (induced.at(x, y) != space.leq.at(x, y)) {
          v.failures.push_back(std::string("preorder mismatch at (") + std::to_string(x) + "," +
                               std::to_string(y) + "): p-zero says " +
                               (induced.at(x, y) ? "leq" : "not leq") + ", space says " +
                               (space.leq.at(x, y) ? "leq" : "not leq"));
          break;
        }
      }
    }
  }
  return v;
}

AdmissibilityVerdict is_strictly_admissible(const FiniteSpace& space, const Qpm& p) {
  AdmissibilityVerdict v = is_admissible(space, p);
  v.strict = true;
  Verdict convex = is_convex(space);
  if (!convex.holds) {
    v.strict = false;
    v.failures.push_back("space is not convex: " + convex.witness);
  }
  Verdict semi = is_semiclosed(space);
  if (!semi.holds) {
    v.strict = false;
    v.failures.push_back("space is not semiclosed: " + semi.witness);
  }
  if (topology_of(p, Side::p) != upper_topology(space)) {
    v.strict = false;
    v.failures.push_back("topology of p differs from the upper topology");
  }
  if (topology_of(p, Side::q) != lower_topology(space)) {
    v.strict = false;
    v.failures.push_back("topology of the conjugate differs from the lower topology");
  }
  return v;
}

Qpm bound_by_one(const Qpm& p) {
  Qpm out(p.n);
  for (std::size_t i = 0; i < p.m.size(); ++i) out.m[i] = p.m[i] > 1 ? Rational(1) : p.m[i];
  return out;
}

Qpm restrict_to(const Qpm& p, Mask s) {
  if ((s & ~full_mask(p.n)) != 0)
    throw std::invalid_argument("restrict_to: mask mentions a point >= n");
  std::vector<int> pts = points_of(s);
  Qpm out(static_cast<int>(pts.size()));
  for (std::size_t a = 0; a < pts.size(); ++a) {
    for (std::size_t b = 0; b < pts.size(); ++b) {
      out.at(static_cast<int>(a), static_cast<int>(b)) = p.at(pts[a], pts[b]);
    }
  }
  return out;
}

Verdict check_lipschitz(const Qpm& p) {
  require_valid(p, "check_lipschitz");
  Qpm d_sum = symmetrize(p, SymmetrizeMode::sum);
  Qpm d_max = symmetrize(p, SymmetrizeMode::max);
  for (int x = 0; x < p.n; ++x) {
    for (int y = 0; y < p.n; ++y) {
      for (int w = 0; w < p.n; ++w) {
        for (int z = 0; z < p.n; ++z) {
          Rational diff = p.at(x, y) - p.at(w, z);
          if (diff < 0) diff = -diff;
          if (diff > d_sum.at(x, w) + d_sum.at(y, z)) {
            Verdict v;
            v.holds = false;
            v.witness = "sum-symmetrized Lipschitz bound fails at " + triple(x, y, w) + "," +
                        std::to_string(z);
            return v;
          }
          if (diff > d_max.at(x, w) + d_max.at(y, z)) {
            Verdict v;
            v.holds = false;
            v.witness = "max-symmetrized Lipschitz bound fails at " + triple(x, y, w) + "," +
                        std::to_string(z);
            return v;
          }
        }
      }
    }
  }
  return ok_verdict();
}

Verdict check_monotone_slices(const Qpm& p) {
  require_valid(p, "check_monotone_slices");
  Relation r = induced_preorder(p);
  for (int y = 0; y < p.n; ++y) {
    for (int z = 0; z < p.n; ++z) {
      if (y == z || !r.at(y, z)) continue;
      for (int x = 0; x < p.n; ++x) {
        if (p.at(x, y) < p.at(x, z))
          return Verdict{false,
                         "p(x,.) fails to be anti-isotone at x=" + std::to_string(x) + ", y=" +
                             std::to_string(y) + " <= z=" + std::to_string(z),
                         x, y, 0, 0};
        if (p.at(y, x) > p.at(z, x))
          return Verdict{false,
                         "p(.,x) fails to be isotone at x=" + std::to_string(x) + ", y=" +
                             std::to_string(y) + " <= z=" + std::to_string(z),
                         x, y, 0, 0};
      }
    }
  }
  return ok_verdict();
}

}  // namespace ordtop
