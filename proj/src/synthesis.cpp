#include "ordtop/synthesis.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "ordtop/errors.hpp"

namespace ordtop {

namespace {

std::vector<Rational> distinct_values(std::vector<Rational> values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

Rational half_power(int k) {
  // 2^-k as an exact rational.
  boost::multiprecision::cpp_int den = boost::multiprecision::cpp_int(1) << k;
  return Rational(boost::multiprecision::cpp_int(1), den);
}

}  // namespace

Verdict check_isotone_continuous(const FiniteSpace& space, const IsotoneFn& f) {
  if (static_cast<int>(f.values.size()) != space.n)
    throw std::invalid_argument("check_isotone_continuous: wrong number of values");
  for (int x = 0; x < space.n; ++x) {
    if (f.values[x] < 0 || f.values[x] > 1) {
      Verdict v;
      v.holds = false;
      v.witness = "value at point " + std::to_string(x) + " is outside [0,1]";
      v.x = x;
      return v;
    }
  }
  for (int x = 0; x < space.n; ++x) {
    for (int y = 0; y < space.n; ++y) {
      if (space.leq.at(x, y) && f.values[x] > f.values[y]) {
        Verdict v;
        v.holds = false;
        v.witness = "not isotone: f(" + std::to_string(x) + ") > f(" + std::to_string(y) +
                    ") although " + std::to_string(x) + " <= " + std::to_string(y);
        v.x = x;
        v.y = y;
        return v;
      }
    }
  }
  for (const Rational& a : distinct_values(f.values)) {
    Mask above = 0;
    Mask below = 0;
    for (int x = 0; x < space.n; ++x) {
      if (f.values[x] > a) above |= point_bit(x);
      if (f.values[x] < a) below |= point_bit(x);
    }
    if (!is_open(space, above)) {
      Verdict v;
      v.holds = false;
      v.witness = "level set {f > " + format_rational(a) + "} = " + format_set(above) +
                  " is not open";
      v.set_a = above;
      return v;
    }
    if (!is_open(space, below)) {
      Verdict v;
      v.holds = false;
      v.witness = "level set {f < " + format_rational(a) + "} = " + format_set(below) +
                  " is not open";
      v.set_a = below;
      return v;
    }
  }
  return ok_verdict();
}

SetFamily initial_topology_of(int n, const FnFamily& family) {
  SetFamily subbasis;
  for (const IsotoneFn& f : family.fns) {
    for (const Rational& a : distinct_values(f.values)) {
      Mask above = 0;
      Mask below = 0;
      for (int x = 0; x < n; ++x) {
        if (f.values[x] > a) above |= point_bit(x);
        if (f.values[x] < a) below |= point_bit(x);
      }
      subbasis.push_back(above);
      subbasis.push_back(below);
    }
  }
  return topology_from_subbasis(n, subbasis);
}

FamilyConditions family_conditions(const FiniteSpace& space, const FnFamily& family) {
  FamilyConditions out;
  SetFamily initial = initial_topology_of(space.n, family);
  if (initial != space.opens) {
    out.initial_topology.holds = false;
    for (Mask o : space.opens) {
      if (!family_contains(initial, o)) {
        out.initial_topology.witness =
            "open set " + format_set(o) + " is not generated by the family's level sets";
        out.initial_topology.set_a = o;
        break;
      }
    }
    if (out.initial_topology.witness.empty()) {
      for (Mask o : initial) {
        if (!family_contains(space.opens, o)) {
          out.initial_topology.witness =
              "level sets generate " + format_set(o) + " which is not open in the space";
          out.initial_topology.set_a = o;
          break;
        }
      }
    }
  }
  for (int x = 0; x < space.n && out.preorder_match.holds; ++x) {
    for (int y = 0; y < space.n; ++y) {
      bool all_leq = true;
      for (const IsotoneFn& f : family.fns) {
        if (f.values[x] > f.values[y]) {
          all_leq = false;
          break;
        }
      }
      if (all_leq != space.leq.at(x, y)) {
        out.preorder_match.holds = false;
        out.preorder_match.witness =
            std::string("pair (") + std::to_string(x) + "," + std::to_string(y) + "): family says " +
            (all_leq ? "leq" : "not leq") + ", space says " +
            (space.leq.at(x, y) ? "leq" : "not leq");
        out.preorder_match.x = x;
        out.preorder_match.y = y;
        break;
      }
    }
  }
  return out;
}

FnFamily separating_family(const FiniteSpace& space) {
  Verdict cr = is_completely_regular_preordered(space);
  if (!cr.holds) throw NotCompletelyRegularError("separating_family: " + cr.witness);
  SetFamily clopen_incr = clopen_increasing_sets(space);
  const Mask full = full_mask(space.n);
  std::vector<Mask> nontrivial;
  for (Mask u : clopen_incr) {
    if (u != 0 && u != full) nontrivial.push_back(u);
  }
  std::sort(nontrivial.begin(), nontrivial.end(), [](Mask a, Mask b) {
    if (set_size(a) != set_size(b)) return set_size(a) < set_size(b);
    return a < b;
  });
  FnFamily family;
  family.provenance = FamilyProvenance::clopen_indicator;
  for (Mask u : nontrivial) {
    IsotoneFn f;
    f.values.resize(space.n);
    for (int x = 0; x < space.n; ++x) f.values[x] = has_point(u, x) ? 1 : 0;
    family.fns.push_back(std::move(f));
  }
  FamilyConditions conditions = family_conditions(space, family);
  if (!conditions.both())
    throw std::logic_error("separating_family: canonical family fails its own conditions: " +
                           conditions.initial_topology.witness + conditions.preorder_match.witness);
  return family;
}

Qpm metrize_from_family(const FiniteSpace& space, const FnFamily& family) {
  if (family.empty()) throw EmptyFamilyError("metrize_from_family: empty family");
  for (std::size_t k = 0; k < family.fns.size(); ++k) {
    Verdict v = check_isotone_continuous(space, family.fns[k]);
    if (!v.holds)
      throw std::invalid_argument("metrize_from_family: member " + std::to_string(k) + ": " +
                                  v.witness);
  }
  Qpm p(space.n);
  for (int x = 0; x < space.n; ++x) {
    for (int y = 0; y < space.n; ++y) {
      Rational sum = 0;
      for (std::size_t k = 0; k < family.fns.size(); ++k) {
        const Rational diff = family.fns[k].values[x] - family.fns[k].values[y];
        if (diff > 0) sum += half_power(static_cast<int>(k) + 1) * diff;
      }
      p.at(x, y) = sum;
    }
  }
  if (!is_valid(p)) throw std::logic_error("metrize_from_family: output violates the axioms");
  if (family_conditions(space, family).both()) {
    AdmissibilityVerdict verdict = is_admissible(space, p);
    if (!verdict.admissible)
      throw std::logic_error("metrize_from_family: output of a generating family is not admissible: " +
                             (verdict.failures.empty() ? std::string() : verdict.failures.front()));
  }
  return p;
}

Qpm metrize(const FiniteSpace& space) {
  FnFamily family = separating_family(space);
  Qpm p = family.empty() ? Qpm::zero(space.n) : metrize_from_family(space, family);
  AdmissibilityVerdict verdict = is_admissible(space, p);
  if (!verdict.admissible)
    throw std::logic_error("metrize: output is not admissible: " +
                           (verdict.failures.empty() ? std::string() : verdict.failures.front()));
  return p;
}

namespace {

struct ProductShape {
  std::vector<int> sizes;
  std::vector<int> strides;
  int total = 1;

  explicit ProductShape(const std::vector<MetrizedSpace>& factors) {
    sizes.reserve(factors.size());
    for (const MetrizedSpace& f : factors) sizes.push_back(f.space.n);
    strides.assign(sizes.size(), 1);
    for (int k = static_cast<int>(sizes.size()) - 2; k >= 0; --k)
      strides[k] = strides[k + 1] * sizes[k + 1];
    for (int s : sizes) total *= s;
  }

  int coord(int id, int k) const { return (id / strides[k]) % sizes[k]; }
};

}  // namespace

MetrizedSpace product(const std::vector<MetrizedSpace>& factors) {
  if (factors.empty()) throw EmptyProductError("product: no factors");
  for (std::size_t k = 0; k < factors.size(); ++k) {
    AdmissibilityVerdict v = is_admissible(factors[k].space, factors[k].metric);
    if (!v.admissible)
      throw NotAdmissibleError("product: factor " + std::to_string(k) +
                               " metric is not admissible" +
                               (v.failures.empty() ? "" : ": " + v.failures.front()));
  }
  ProductShape shape(factors);
  if (shape.total > kMaxPoints)
    throw std::invalid_argument("product: " + std::to_string(shape.total) +
                                " points exceed the cap of " + std::to_string(kMaxPoints));

  MetrizedSpace out;
  out.space.n = shape.total;
  SetFamily subbasis;
  for (std::size_t k = 0; k < factors.size(); ++k) {
    for (Mask o : factors[k].space.opens) {
      Mask cyl = 0;
      for (int t = 0; t < shape.total; ++t) {
        if (has_point(o, shape.coord(t, static_cast<int>(k)))) cyl |= point_bit(t);
      }
      subbasis.push_back(cyl);
    }
  }
  out.space.opens = topology_from_subbasis(shape.total, subbasis);
  out.space.leq = Relation(shape.total);
  for (int s = 0; s < shape.total; ++s) {
    for (int t = 0; t < shape.total; ++t) {
      bool leq = true;
      for (std::size_t k = 0; k < factors.size() && leq; ++k) {
        leq = factors[k].space.leq.at(shape.coord(s, static_cast<int>(k)),
                                      shape.coord(t, static_cast<int>(k)));
      }
      if (leq) out.space.leq.add(s, t);
    }
  }
  for (std::size_t k = 0; k < factors.size(); ++k) {
    if (!out.space.name.empty()) out.space.name += " x ";
    out.space.name += factors[k].space.name.empty() ? "?" : factors[k].space.name;
  }

  out.metric = Qpm(shape.total);
  std::vector<Qpm> bounded;
  bounded.reserve(factors.size());
  for (const MetrizedSpace& f : factors) bounded.push_back(bound_by_one(f.metric));
  for (int s = 0; s < shape.total; ++s) {
    for (int t = 0; t < shape.total; ++t) {
      Rational sum = 0;
      for (std::size_t k = 0; k < factors.size(); ++k) {
        sum += half_power(static_cast<int>(k) + 1) *
               bounded[k].at(shape.coord(s, static_cast<int>(k)), shape.coord(t, static_cast<int>(k)));
      }
      out.metric.at(s, t) = sum;
    }
  }
  AdmissibilityVerdict v = is_admissible(out.space, out.metric);
  if (!v.admissible)
    throw std::logic_error("product: weighted sum metric is not admissible for the product space");
  return out;
}

StatusReport check_product_upper_topology(const std::vector<MetrizedSpace>& factors) {
  if (factors.empty()) return {CheckStatus::skip, "empty product"};
  for (std::size_t k = 0; k < factors.size(); ++k) {
    AdmissibilityVerdict v = is_strictly_admissible(factors[k].space, factors[k].metric);
    if (!v.admissible || !v.strict)
      return {CheckStatus::skip, "factor " + std::to_string(k) + " is not strictly metrized" +
                                     (v.failures.empty() ? "" : ": " + v.failures.front())};
    Verdict i = is_i_space(factors[k].space);
    if (!i.holds)
      return {CheckStatus::skip,
              "factor " + std::to_string(k) + " is not an I-space: " + i.witness};
  }
  MetrizedSpace prod = product(factors);
  ProductShape shape(factors);

  auto cylinder_topology = [&](bool upper) {
    SetFamily subbasis;
    for (std::size_t k = 0; k < factors.size(); ++k) {
      SetFamily monotone =
          upper ? upper_topology(factors[k].space) : lower_topology(factors[k].space);
      for (Mask o : monotone) {
        Mask cyl = 0;
        for (int t = 0; t < shape.total; ++t) {
          if (has_point(o, shape.coord(t, static_cast<int>(k)))) cyl |= point_bit(t);
        }
        subbasis.push_back(cyl);
      }
    }
    return topology_from_subbasis(shape.total, subbasis);
  };

  if (upper_topology(prod.space) != cylinder_topology(true))
    return {CheckStatus::fail, "upper topology of the product differs from the product of the upper topologies"};
  if (lower_topology(prod.space) != cylinder_topology(false))
    return {CheckStatus::fail, "lower topology of the product differs from the product of the lower topologies"};
  return {CheckStatus::ok, ""};
}

Qpm qpm_from_entourage_base(const FiniteSpace& space, const EntourageBase& base) {
  if (base.n != space.n)
    throw DimensionMismatchError("qpm_from_entourage_base: base and space sizes differ");
  Relation core = Relation::total(space.n);
  for (const Relation& r : base.relations) {
    if (r.n != space.n)
      throw DimensionMismatchError("qpm_from_entourage_base: member size differs from space");
    if (!is_reflexive(r))
      throw std::invalid_argument("qpm_from_entourage_base: a member misses the diagonal");
    core = intersect(core, r);
  }
  if (!is_transitive(core))
    throw NonTransitiveCoreError("qpm_from_entourage_base: intersection of the base is not transitive");
  Qpm p(space.n);
  for (int x = 0; x < space.n; ++x) {
    for (int y = 0; y < space.n; ++y) {
      if (!core.at(x, y)) p.at(x, y) = 1;
    }
  }
  return p;
}

}  // namespace ordtop
