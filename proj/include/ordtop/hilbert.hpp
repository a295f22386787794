#pragma once

#include <vector>

#include "ordtop/isotone.hpp"
#include "ordtop/qpm.hpp"
#include "ordtop/space.hpp"

namespace ordtop {

// A point of the ordered cube [0,1]^K, one exact rational per coordinate.
using CubePoint = std::vector<Rational>;

// A map from the points of a finite space into the ordered cube, with
// the coordinate functions that produced it.
struct Embedding {
  FiniteSpace source;
  int dimension = 0;
  std::vector<CubePoint> image;  // one cube point per source point
  FnFamily generator;            // k-th member = k-th coordinate function
};

// The canonical quasi-pseudo-metric of the ordered cube restricted to a
// finite list of cube points: p(x, y) = sum over coordinates k
// (1-based) of max(x_k - y_k, 0) / 2^k. All points must share one
// dimension (DimensionMismatchError) and coordinates must lie in [0,1]
// (std::invalid_argument).
Qpm cube_qpm(const std::vector<CubePoint>& points);

// Embeds a completely regularly ordered space into the cube using the
// canonical separating family as coordinates. Throws
// NotAntisymmetricError when the preorder is not a partial order and
// NotCompletelyRegularError when no separating family exists. The
// result passes verify_order_embedding.
Embedding embed(const FiniteSpace& space);

// Embeds an ordered space with an admissible metric p via the
// interleaved coordinates f_k = 1 - min(p,1)(c_k, .) and
// g_k = min(p,1)(., c_k), where c_1, c_2, ... enumerates the points
// (every point of a finite space is topologically dense-reachable, so
// the enumeration order is free; pass `order` to permute it). The result
// passes verify_order_embedding and verify_order_subspace.
Embedding strict_embed(const FiniteSpace& space, const Qpm& p,
                       const std::vector<int>* order = nullptr);

// The embedding is injective, reflects the order exactly
// (x <= y iff image(x) <= image(y) coordinatewise), and the cube metric
// restricted to the image induces the source topology.
Verdict verify_order_embedding(const Embedding& embedding);

// The image is an order subspace of the cube: every open increasing set
// of the source is covered, point by point, by traces of boxes of
// increasing cylinders {z : z_k > c} inside it (and dually for
// decreasing sets with {z : z_k < c}); thresholds are searched over
// midpoints between consecutive distinct coordinate values, which is
// enough because only the traces on the image matter.
Verdict verify_order_subspace(const Embedding& embedding);

}  // namespace ordtop
