#include "ordtop/hilbert.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "ordtop/errors.hpp"
#include "ordtop/synthesis.hpp"

namespace ordtop {

namespace {

Rational half_power(int k) {
  boost::multiprecision::cpp_int den = boost::multiprecision::cpp_int(1) << k;
  return Rational(boost::multiprecision::cpp_int(1), den);
}

FnFamily coordinates_as_family(const std::vector<CubePoint>& image, int dimension,
                               FamilyProvenance provenance) {
  FnFamily family;
  family.provenance = provenance;
  family.fns.resize(dimension);
  for (int k = 0; k < dimension; ++k) {
    family.fns[k].values.resize(image.size());
    for (std::size_t x = 0; x < image.size(); ++x) family.fns[k].values[x] = image[x][k];
  }
  return family;
}

}  // namespace

Qpm cube_qpm(const std::vector<CubePoint>& points) {
  if (points.empty()) return Qpm(0);
  const std::size_t dimension = points.front().size();
  for (const CubePoint& pt : points) {
    if (pt.size() != dimension)
      throw DimensionMismatchError("cube_qpm: points of different dimensions");
    for (const Rational& c : pt) {
      if (c < 0 || c > 1)
        throw std::invalid_argument("cube_qpm: coordinate outside [0,1]");
    }
  }
  Qpm p(static_cast<int>(points.size()));
  for (std::size_t x = 0; x < points.size(); ++x) {
    for (std::size_t y = 0; y < points.size(); ++y) {
      Rational sum = 0;
      for (std::size_t k = 0; k < dimension; ++k) {
        const Rational diff = points[x][k] - points[y][k];
        if (diff > 0) sum += half_power(static_cast<int>(k) + 1) * diff;
      }
      p.at(static_cast<int>(x), static_cast<int>(y)) = sum;
    }
  }
  return p;
}

Embedding embed(const FiniteSpace& space) {
  if (!is_antisymmetric(space.leq))
    throw NotAntisymmetricError("embed: the preorder is not a partial order");
  FnFamily family = separating_family(space);
  Embedding out;
  out.source = space;
  out.dimension = static_cast<int>(family.size());
  out.image.resize(space.n);
  for (int x = 0; x < space.n; ++x) {
    out.image[x].reserve(family.size());
    for (const IsotoneFn& f : family.fns) out.image[x].push_back(f.values[x]);
  }
  out.generator = std::move(family);
  Verdict v = verify_order_embedding(out);
  if (!v.holds) throw std::logic_error("embed: output fails verification: " + v.witness);
  return out;
}

Embedding strict_embed(const FiniteSpace& space, const Qpm& p, const std::vector<int>* order) {
  if (!is_antisymmetric(space.leq))
    throw NotAntisymmetricError("strict_embed: the preorder is not a partial order");
  AdmissibilityVerdict adm = is_admissible(space, p);
  if (!adm.admissible)
    throw NotAdmissibleError("strict_embed: metric is not admissible" +
                             (adm.failures.empty() ? std::string() : ": " + adm.failures.front()));
  std::vector<int> centers;
  if (order != nullptr) {
    centers = *order;
    std::vector<int> sorted = centers;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < space.n; ++i) {
      if (i >= static_cast<int>(sorted.size()) || sorted[i] != i)
        throw std::invalid_argument("strict_embed: order is not a permutation of the points");
    }
  } else {
    centers.resize(space.n);
    for (int i = 0; i < space.n; ++i) centers[i] = i;
  }
  Qpm p1 = bound_by_one(p);
  Embedding out;
  out.source = space;
  out.dimension = 2 * space.n;
  out.image.resize(space.n);
  for (int x = 0; x < space.n; ++x) {
    out.image[x].reserve(out.dimension);
    for (int k = 0; k < space.n; ++k) {
      const int c = centers[k];
      out.image[x].push_back(Rational(1) - p1.at(c, x));
      out.image[x].push_back(p1.at(x, c));
    }
  }
  out.generator = coordinates_as_family(out.image, out.dimension, FamilyProvenance::dense_point);
  Verdict v = verify_order_embedding(out);
  if (!v.holds) throw std::logic_error("strict_embed: output fails embedding verification: " + v.witness);
  Verdict s = verify_order_subspace(out);
  if (!s.holds) throw std::logic_error("strict_embed: output fails subspace verification: " + s.witness);
  return out;
}

Verdict verify_order_embedding(const Embedding& embedding) {
  const FiniteSpace& space = embedding.source;
  if (static_cast<int>(embedding.image.size()) != space.n) {
    Verdict v;
    v.holds = false;
    v.witness = "image has the wrong number of points";
    return v;
  }
  for (const CubePoint& pt : embedding.image) {
    if (static_cast<int>(pt.size()) != embedding.dimension) {
      Verdict v;
      v.holds = false;
      v.witness = "an image point has the wrong dimension";
      return v;
    }
  }
  auto dominates = [&](int x, int y) {  // image[x] <= image[y] coordinatewise
    for (int k = 0; k < embedding.dimension; ++k) {
      if (embedding.image[x][k] > embedding.image[y][k]) return false;
    }
    return true;
  };
  for (int x = 0; x < space.n; ++x) {
    for (int y = x + 1; y < space.n; ++y) {
      if (embedding.image[x] == embedding.image[y]) {
        Verdict v;
        v.holds = false;
        v.witness = "points " + std::to_string(x) + " and " + std::to_string(y) +
                    " share one image point";
        v.x = x;
        v.y = y;
        return v;
      }
    }
  }
  for (int x = 0; x < space.n; ++x) {
    for (int y = 0; y < space.n; ++y) {
      if (space.leq.at(x, y) != dominates(x, y)) {
        Verdict v;
        v.holds = false;
        v.witness = "order mismatch at (" + std::to_string(x) + "," + std::to_string(y) +
                    "): space says " + (space.leq.at(x, y) ? "leq" : "not leq") +
                    ", cube says " + (dominates(x, y) ? "leq" : "not leq");
        v.x = x;
        v.y = y;
        return v;
      }
    }
  }
  Qpm restricted = cube_qpm(embedding.image);
  if (topology_of(restricted, Side::d) != space.opens) {
    Verdict v;
    v.holds = false;
    v.witness = "cube metric restricted to the image induces a different topology";
    return v;
  }
  return ok_verdict();
}

Verdict verify_order_subspace(const Embedding& embedding) {
  const FiniteSpace& space = embedding.source;
  const int n = space.n;
  const int dim = embedding.dimension;
  const Mask everything = full_mask(n);

  // Per coordinate, the candidate thresholds: midpoints between
  // consecutive distinct values, one below the minimum (for '>' traces)
  // when the minimum is positive, and one above the maximum (for '<'
  // traces) when the maximum is below 1.
  auto tightest_box = [&](int x, bool upper) {
    Mask box = everything;
    for (int k = 0; k < dim; ++k) {
      std::vector<Rational> values;
      values.reserve(n);
      for (int y = 0; y < n; ++y) values.push_back(embedding.image[y][k]);
      std::sort(values.begin(), values.end());
      values.erase(std::unique(values.begin(), values.end()), values.end());
      const Rational& mine = embedding.image[x][k];
      auto it = std::find(values.begin(), values.end(), mine);
      Rational threshold;
      bool have = false;
      if (upper) {
        if (it != values.begin()) {
          threshold = (*(it - 1) + mine) / 2;
          have = true;
        } else if (mine > 0) {
          threshold = mine / 2;
          have = true;
        }
      } else {
        if (it + 1 != values.end()) {
          threshold = (mine + *(it + 1)) / 2;
          have = true;
        } else if (mine < 1) {
          threshold = (mine + 1) / 2;
          have = true;
        }
      }
      if (!have) continue;  // no cylinder constrains this coordinate around x
      Mask trace = 0;
      for (int y = 0; y < n; ++y) {
        const Rational& v = embedding.image[y][k];
        if (upper ? (v > threshold) : (v < threshold)) trace |= point_bit(y);
      }
      box &= trace;
    }
    return box;
  };

  for (Mask v : upper_topology(space)) {
    Mask bad = 0;
    for_each_point(v, [&](int x) {
      if ((tightest_box(x, true) & ~v) != 0) bad |= point_bit(x);
    });
    if (bad != 0) {
      int x = points_of(bad).front();
      Verdict out;
      out.holds = false;
      out.witness = "open increasing set " + format_set(v) +
                    " contains no increasing cylinder box around point " + std::to_string(x);
      out.x = x;
      out.set_a = v;
      return out;
    }
  }
  for (Mask u : lower_topology(space)) {
    Mask bad = 0;
    for_each_point(u, [&](int x) {
      if ((tightest_box(x, false) & ~u) != 0) bad |= point_bit(x);
    });
    if (bad != 0) {
      int x = points_of(bad).front();
      Verdict out;
      out.holds = false;
      out.witness = "open decreasing set " + format_set(u) +
                    " contains no decreasing cylinder box around point " + std::to_string(x);
      out.x = x;
      out.set_a = u;
      return out;
    }
  }
  return ok_verdict();
}

}  // namespace ordtop
