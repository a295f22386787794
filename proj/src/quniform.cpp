#include "ordtop/quniform.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "ordtop/errors.hpp"
#include "ordtop/synthesis.hpp"

namespace ordtop {

namespace {

std::vector<Rational> distinct_positive(std::vector<Rational> values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  std::vector<Rational> out;
  for (Rational& v : values) {
    if (v > 0) out.push_back(std::move(v));
  }
  return out;
}

void append_intersection_closure(std::vector<Relation>& members) {
  std::sort(members.begin(), members.end(), relation_less);
  members.erase(std::unique(members.begin(), members.end()), members.end());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Relation> found;
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        Relation meet = intersect(members[i], members[j]);
        if (!std::binary_search(members.begin(), members.end(), meet, relation_less))
          found.push_back(std::move(meet));
      }
    }
    if (!found.empty()) {
      members.insert(members.end(), found.begin(), found.end());
      std::sort(members.begin(), members.end(), relation_less);
      members.erase(std::unique(members.begin(), members.end()), members.end());
      grew = true;
    }
  }
}

}  // namespace

EntourageBase canonical_base(EntourageBase base) {
  std::sort(base.relations.begin(), base.relations.end(), relation_less);
  base.relations.erase(std::unique(base.relations.begin(), base.relations.end()),
                       base.relations.end());
  return base;
}

Verdict validate_base(const EntourageBase& base) {
  for (std::size_t i = 0; i < base.relations.size(); ++i) {
    if (base.relations[i].n != base.n) {
      Verdict v;
      v.holds = false;
      v.witness = "member " + std::to_string(i) + " has the wrong point count";
      return v;
    }
    if (!is_reflexive(base.relations[i])) {
      Verdict v;
      v.holds = false;
      v.witness = "member " + std::to_string(i) + " misses the diagonal";
      return v;
    }
  }
  for (std::size_t i = 0; i < base.relations.size(); ++i) {
    bool composable = false;
    for (const Relation& w : base.relations) {
      if (subset_of(compose(w, w), base.relations[i])) {
        composable = true;
        break;
      }
    }
    if (!composable) {
      Verdict v;
      v.holds = false;
      v.witness = "no member composes into member " + std::to_string(i);
      return v;
    }
  }
  return ok_verdict();
}

Verdict validate_uniformity_base(const EntourageBase& base) {
  Verdict v = validate_base(base);
  if (!v.holds) return v;
  for (std::size_t i = 0; i < base.relations.size(); ++i) {
    Relation inv = inverse(base.relations[i]);
    bool found = false;
    for (const Relation& w : base.relations) {
      if (subset_of(w, inv)) {
        found = true;
        break;
      }
    }
    if (!found) {
      Verdict out;
      out.holds = false;
      out.witness = "no member fits inside the inverse of member " + std::to_string(i);
      return out;
    }
  }
  return ok_verdict();
}

EntourageBase base_from_qpm(const Qpm& p) {
  EntourageBase base;
  base.n = p.n;
  std::vector<Rational> entries(p.m.begin(), p.m.end());
  for (const Rational& v : distinct_positive(std::move(entries))) {
    Relation r(p.n);
    for (int x = 0; x < p.n; ++x) {
      for (int y = 0; y < p.n; ++y) {
        if (p.at(x, y) < v) r.add(x, y);
      }
    }
    base.relations.push_back(std::move(r));
  }
  base.relations.push_back(Relation::total(p.n));
  return canonical_base(std::move(base));
}

EntourageBase weak_base_from_family(const FiniteSpace& space, const FnFamily& family) {
  EntourageBase base;
  base.n = space.n;
  base.relations.push_back(Relation::total(space.n));
  for (const IsotoneFn& f : family.fns) {
    if (static_cast<int>(f.values.size()) != space.n)
      throw std::invalid_argument("weak_base_from_family: member has the wrong number of values");
    std::vector<Rational> diffs;
    for (int x = 0; x < space.n; ++x) {
      for (int y = 0; y < space.n; ++y) diffs.push_back(f.values[x] - f.values[y]);
    }
    for (const Rational& v : distinct_positive(std::move(diffs))) {
      Relation r(space.n);
      for (int x = 0; x < space.n; ++x) {
        for (int y = 0; y < space.n; ++y) {
          if (f.values[x] - f.values[y] < v) r.add(x, y);
        }
      }
      base.relations.push_back(std::move(r));
    }
  }
  append_intersection_closure(base.relations);
  base = canonical_base(std::move(base));
  return base;
}

EntourageBase star(const EntourageBase& base) {
  Verdict valid = validate_base(base);
  if (!valid.holds) throw std::invalid_argument("star: not an entourage base: " + valid.witness);
  EntourageBase out;
  out.n = base.n;
  if (base.relations.empty()) {
    out.relations.push_back(Relation::total(base.n));
  }
  for (const Relation& v : base.relations) {
    for (const Relation& w : base.relations) {
      out.relations.push_back(intersect(v, inverse(w)));
    }
  }
  out = canonical_base(std::move(out));
  Verdict uniform = validate_uniformity_base(out);
  if (!uniform.holds)
    throw std::logic_error("star: symmetrization is not a uniformity base: " + uniform.witness);
  return out;
}

Relation core_preorder(const EntourageBase& base) {
  Relation core = Relation::total(base.n);
  for (const Relation& r : base.relations) {
    if (r.n != base.n)
      throw DimensionMismatchError("core_preorder: member size differs from base");
    if (!is_reflexive(r))
      throw std::invalid_argument("core_preorder: a member misses the diagonal");
    core = intersect(core, r);
  }
  if (!is_transitive(core))
    throw NonTransitiveCoreError("core_preorder: intersection of the base is not transitive");
  return core;
}

SetFamily sym_topology(const EntourageBase& base) {
  EntourageBase sym = star(base);
  Relation m = core_preorder(sym);
  SetFamily basis;
  basis.reserve(base.n + 1);
  for (int x = 0; x < base.n; ++x) basis.push_back(m.rows[x]);
  basis.push_back(0);
  return union_closure(std::move(basis));
}

bool refines(const EntourageBase& a, const EntourageBase& b) {
  for (const Relation& v : b.relations) {
    bool found = false;
    for (const Relation& w : a.relations) {
      if (subset_of(w, v)) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

bool filter_equal(const EntourageBase& a, const EntourageBase& b) {
  return refines(a, b) && refines(b, a);
}

namespace {

// Base of the weak (symmetric) uniformity of a family: per function the
// entourages {(x,y) : |f(x) - f(y)| < v}, closed under intersection.
EntourageBase weak_uniformity_base(int n, const FnFamily& family) {
  EntourageBase base;
  base.n = n;
  base.relations.push_back(Relation::total(n));
  for (const IsotoneFn& f : family.fns) {
    std::vector<Rational> diffs;
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        Rational d = f.values[x] - f.values[y];
        if (d < 0) d = -d;
        diffs.push_back(std::move(d));
      }
    }
    for (const Rational& v : distinct_positive(std::move(diffs))) {
      Relation r(n);
      for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
          Rational d = f.values[x] - f.values[y];
          if (d < 0) d = -d;
          if (d < v) r.add(x, y);
        }
      }
      base.relations.push_back(std::move(r));
    }
  }
  append_intersection_closure(base.relations);
  return canonical_base(std::move(base));
}

}  // namespace

UniformityRoundTrip uniformity_round_trip(const FiniteSpace& space, const EntourageBase& uniformity,
                                          const FnFamily& family) {
  UniformityRoundTrip out;

  // Preconditions; a failure downgrades the status to skip but the
  // equality checks still run as diagnostics.
  Verdict uniform = validate_uniformity_base(uniformity);
  if (!uniform.holds) {
    out.status = CheckStatus::skip;
    out.precondition_witness = "not a uniformity base: " + uniform.witness;
  }
  if (out.precondition_witness.empty()) {
    for (std::size_t k = 0; k < family.fns.size(); ++k) {
      const IsotoneFn& f = family.fns[k];
      if (static_cast<int>(f.values.size()) != space.n)
        throw std::invalid_argument("uniformity_round_trip: member has the wrong number of values");
      bool uniformly_continuous = false;
      for (const Relation& u : uniformity.relations) {
        bool constant_on_u = true;
        for (int x = 0; x < space.n && constant_on_u; ++x) {
          for_each_point(u.rows[x], [&](int y) {
            if (f.values[x] != f.values[y]) constant_on_u = false;
          });
        }
        if (constant_on_u) {
          uniformly_continuous = true;
          break;
        }
      }
      if (!uniformly_continuous) {
        out.status = CheckStatus::skip;
        out.precondition_witness =
            "member " + std::to_string(k) + " is not uniformly continuous for the uniformity";
        break;
      }
    }
  }
  if (out.precondition_witness.empty()) {
    if (!filter_equal(uniformity, weak_uniformity_base(space.n, family))) {
      out.status = CheckStatus::skip;
      out.precondition_witness = "the family does not generate the uniformity weakly";
    }
  }
  if (out.precondition_witness.empty()) {
    for (int x = 0; x < space.n && out.precondition_witness.empty(); ++x) {
      for (int y = 0; y < space.n; ++y) {
        bool all_leq = true;
        for (const IsotoneFn& f : family.fns) {
          if (f.values[x] > f.values[y]) {
            all_leq = false;
            break;
          }
        }
        if (all_leq != space.leq.at(x, y)) {
          out.status = CheckStatus::skip;
          out.precondition_witness = "the family does not characterize the preorder at (" +
                                     std::to_string(x) + "," + std::to_string(y) + ")";
          break;
        }
      }
    }
  }

  EntourageBase weak = weak_base_from_family(space, family);
  out.star_matches = filter_equal(star(weak), uniformity);
  if (!out.star_matches)
    out.star_witness = "star of the weak base and the uniformity generate different filters";
  Relation core = core_preorder(weak);
  out.core_matches = (core == space.leq);
  if (!out.core_matches) {
    for (int x = 0; x < space.n && out.core_x < 0; ++x) {
      for (int y = 0; y < space.n; ++y) {
        if (core.at(x, y) != space.leq.at(x, y)) {
          out.core_x = x;
          out.core_y = y;
          out.core_witness = "core preorder differs from the space preorder at (" +
                             std::to_string(x) + "," + std::to_string(y) + ")";
          break;
        }
      }
    }
  }
  if (out.status != CheckStatus::skip)
    out.status = (out.star_matches && out.core_matches) ? CheckStatus::ok : CheckStatus::fail;
  return out;
}

FnFamily reduce_family(const FiniteSpace& space, const FnFamily& family) {
  if (!family_conditions(space, family).both())
    throw std::invalid_argument("reduce_family: input family does not satisfy the generating conditions");
  FnFamily current = family;
  std::size_t k = 0;
  while (k < current.fns.size()) {
    FnFamily trial = current;
    trial.fns.erase(trial.fns.begin() + static_cast<std::ptrdiff_t>(k));
    if (family_conditions(space, trial).both()) {
      current = std::move(trial);
    } else {
      ++k;
    }
  }
  return current;
}

}  // namespace ordtop
