#include "ordtop/sets.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace ordtop {

std::vector<int> points_of(Mask s) {
  std::vector<int> out;
  out.reserve(set_size(s));
  for_each_point(s, [&](int i) { out.push_back(i); });
  return out;
}

std::string format_set(Mask s) {
  std::string out = "{";
  bool first = true;
  for_each_point(s, [&](int i) {
    if (!first) out += ",";
    out += std::to_string(i);
    first = false;
  });
  out += "}";
  return out;
}

SetFamily canonical_family(SetFamily family) {
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
  return family;
}

bool family_contains(const SetFamily& family, Mask s) {
  return std::binary_search(family.begin(), family.end(), s);
}

namespace {

template <typename Combine>
SetFamily pairwise_closure(SetFamily family, Combine combine) {
  family = canonical_family(std::move(family));
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Mask> found;
    const std::size_t size = family.size();
    for (std::size_t i = 0; i < size; ++i) {
      for (std::size_t j = i + 1; j < size; ++j) {
        Mask c = combine(family[i], family[j]);
        if (!family_contains(family, c)) found.push_back(c);
      }
    }
    if (!found.empty()) {
      family.insert(family.end(), found.begin(), found.end());
      family = canonical_family(std::move(family));
      grew = true;
    }
  }
  return family;
}

}  // namespace

SetFamily union_closure(SetFamily family) {
  return pairwise_closure(std::move(family), [](Mask a, Mask b) { return a | b; });
}

SetFamily intersection_closure(SetFamily family) {
  return pairwise_closure(std::move(family), [](Mask a, Mask b) { return Mask(a & b); });
}

SetFamily topology_from_subbasis(int n, const SetFamily& subbasis) {
  if (n < 0 || n > kMaxPoints)
    throw std::invalid_argument("topology_from_subbasis: n out of range: " + std::to_string(n));
  const Mask full = full_mask(n);
  for (Mask s : subbasis) {
    if ((s & ~full) != 0)
      throw std::invalid_argument("topology_from_subbasis: subset mentions a point >= n");
  }
  SetFamily family = subbasis;
  family.push_back(full);
  family = intersection_closure(std::move(family));
  family.push_back(0);
  // The union closure of an intersection-closed family is still closed
  // under intersection (finite distributivity), so this yields a topology.
  return union_closure(std::move(family));
}

bool is_topology(int n, const SetFamily& family) {
  const Mask full = full_mask(n);
  SetFamily fam = canonical_family(family);
  for (Mask s : fam) {
    if ((s & ~full) != 0) return false;
  }
  if (!family_contains(fam, 0) || !family_contains(fam, full)) return false;
  for (std::size_t i = 0; i < fam.size(); ++i) {
    for (std::size_t j = i + 1; j < fam.size(); ++j) {
      if (!family_contains(fam, fam[i] | fam[j])) return false;
      if (!family_contains(fam, fam[i] & fam[j])) return false;
    }
  }
  return true;
}

Relation Relation::identity(int n_points) {
  Relation r(n_points);
  for (int i = 0; i < n_points; ++i) r.add(i, i);
  return r;
}

Relation Relation::total(int n_points) {
  Relation r(n_points);
  const Mask full = full_mask(n_points);
  for (int i = 0; i < n_points; ++i) r.rows[i] = full;
  return r;
}

bool relation_less(const Relation& a, const Relation& b) {
  if (a.n != b.n) return a.n < b.n;
  return a.rows < b.rows;
}

bool subset_of(const Relation& a, const Relation& b) {
  if (a.n != b.n) return false;
  for (int x = 0; x < a.n; ++x) {
    if ((a.rows[x] & ~b.rows[x]) != 0) return false;
  }
  return true;
}

Relation inverse(const Relation& r) {
  Relation out(r.n);
  for (int x = 0; x < r.n; ++x) {
    for_each_point(r.rows[x], [&](int y) { out.add(y, x); });
  }
  return out;
}

Relation compose(const Relation& a, const Relation& b) {
  Relation out(a.n);
  for (int x = 0; x < a.n; ++x) {
    Mask row = 0;
    for_each_point(a.rows[x], [&](int y) { row |= b.rows[y]; });
    out.rows[x] = row;
  }
  return out;
}

Relation intersect(const Relation& a, const Relation& b) {
  Relation out(a.n);
  for (int x = 0; x < a.n; ++x) out.rows[x] = a.rows[x] & b.rows[x];
  return out;
}

bool is_reflexive(const Relation& r) {
  for (int x = 0; x < r.n; ++x) {
    if (!r.at(x, x)) return false;
  }
  return true;
}

bool is_transitive(const Relation& r) {
  for (int x = 0; x < r.n; ++x) {
    Mask reach = 0;
    for_each_point(r.rows[x], [&](int y) { reach |= r.rows[y]; });
    if ((reach & ~r.rows[x]) != 0) return false;
  }
  return true;
}

bool is_antisymmetric(const Relation& r) {
  for (int x = 0; x < r.n; ++x) {
    for (int y = x + 1; y < r.n; ++y) {
      if (r.at(x, y) && r.at(y, x)) return false;
    }
  }
  return true;
}

Relation reflexive_transitive_closure(Relation r) {
  for (int x = 0; x < r.n; ++x) r.add(x, x);
  for (int k = 0; k < r.n; ++k) {
    for (int x = 0; x < r.n; ++x) {
      if (r.at(x, k)) r.rows[x] |= r.rows[k];
    }
  }
  return r;
}

std::vector<std::pair<int, int>> relation_pairs(const Relation& r) {
  std::vector<std::pair<int, int>> out;
  for (int x = 0; x < r.n; ++x) {
    for_each_point(r.rows[x], [&](int y) { out.emplace_back(x, y); });
  }
  return out;
}

}  // namespace ordtop
