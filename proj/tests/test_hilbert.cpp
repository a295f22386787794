#include <doctest.h>

#include <stdexcept>

#include "fixtures.hpp"
#include "ordtop/errors.hpp"
#include "ordtop/hilbert.hpp"
#include "ordtop/synthesis.hpp"

using namespace ordtop;
using fixtures::chain3;
using fixtures::disc2;
using fixtures::sierpinski;
using fixtures::sierpinski_qpm;

TEST_CASE("cube_qpm") {
  std::vector<CubePoint> pts = {{Rational(0), Rational(0)}, {Rational(1), Rational(1)}};
  Qpm p = cube_qpm(pts);
  CHECK(p.at(0, 1) == Rational(0));
  CHECK(p.at(1, 0) == Rational(3, 4));  // 1/2 + 1/4
  CHECK(cube_qpm({}).n == 0);
  std::vector<CubePoint> ragged = {{Rational(0)}, {Rational(0), Rational(1)}};
  CHECK_THROWS_AS(cube_qpm(ragged), DimensionMismatchError);
  std::vector<CubePoint> out = {{Rational(2)}};
  CHECK_THROWS_AS(cube_qpm(out), std::invalid_argument);
}

TEST_CASE("embed the three-chain") {
  Embedding emb = embed(chain3());
  CHECK(emb.dimension == 2);
  REQUIRE(emb.image.size() == 3);
  CHECK(emb.image[0] == CubePoint{Rational(0), Rational(0)});
  CHECK(emb.image[1] == CubePoint{Rational(0), Rational(1)});
  CHECK(emb.image[2] == CubePoint{Rational(1), Rational(1)});
  CHECK(verify_order_embedding(emb).holds);
}

TEST_CASE("embed error paths") {
  CHECK_THROWS_AS(embed(sierpinski()), NotCompletelyRegularError);
  FiniteSpace looped = make_space(2, {}, {{0, 1}, {1, 0}});
  CHECK_THROWS_AS(embed(looped), NotAntisymmetricError);
}

TEST_CASE("embed the one-point space") {
  FiniteSpace pt = make_space(1, {}, {});
  Embedding emb = embed(pt);
  CHECK(emb.dimension == 0);
  CHECK(verify_order_embedding(emb).holds);
}

TEST_CASE("strict_embed frozen coordinates") {
  Qpm p = metrize(disc2());  // p(1,0) = 1/2
  Embedding emb = strict_embed(disc2(), p);
  CHECK(emb.dimension == 4);
  REQUIRE(emb.image.size() == 2);
  // Coordinates interleave 1 - p(c,x) and p(x,c) over centers c = 0, 1.
  CHECK(emb.image[0] ==
        CubePoint{Rational(1), Rational(0), Rational(1, 2), Rational(0)});
  CHECK(emb.image[1] ==
        CubePoint{Rational(1), Rational(1, 2), Rational(1), Rational(0)});
  CHECK(verify_order_embedding(emb).holds);
  CHECK(verify_order_subspace(emb).holds);
}

TEST_CASE("strict_embed with the two-point quasi-metric") {
  Embedding emb = strict_embed(disc2(), sierpinski_qpm());
  CHECK(verify_order_embedding(emb).holds);
  CHECK(verify_order_subspace(emb).holds);
}

TEST_CASE("strict_embed center order is irrelevant to the verdicts") {
  Qpm p = metrize(disc2());
  std::vector<int> order = {1, 0};
  Embedding emb = strict_embed(disc2(), p, &order);
  CHECK(verify_order_embedding(emb).holds);
  CHECK(verify_order_subspace(emb).holds);
}

TEST_CASE("strict_embed error paths") {
  CHECK_THROWS_AS(strict_embed(sierpinski(), sierpinski_qpm()), NotAdmissibleError);
  FiniteSpace looped = make_space(2, {}, {{0, 1}, {1, 0}});
  CHECK_THROWS_AS(strict_embed(looped, Qpm::zero(2)), NotAntisymmetricError);
  Qpm p = metrize(disc2());
  std::vector<int> bad_order = {0, 0};
  CHECK_THROWS_AS(strict_embed(disc2(), p, &bad_order), std::invalid_argument);
}

TEST_CASE("round trip: the cube metric restricted to the image is strictly admissible") {
  Qpm p = metrize(disc2());
  Embedding emb = strict_embed(disc2(), p);
  AdmissibilityVerdict v = is_strictly_admissible(disc2(), cube_qpm(emb.image));
  CHECK(v.admissible);
  CHECK(v.strict);
}

TEST_CASE("verify_order_embedding catches a broken image") {
  Embedding emb = embed(chain3());
  emb.image[1] = emb.image[0];  // no longer injective
  CHECK_FALSE(verify_order_embedding(emb).holds);
}

TEST_CASE("verify_order_subspace negative control") {
  // Three-point discrete antichain whose image puts point 2 strictly
  // between the others: the dominance cone of point 0 also captures the
  // other points, so the increasing open {0} has no cylinder-box trace.
  Embedding emb;
  emb.source = make_space(3, {point_bit(0), point_bit(1), point_bit(2)}, {});
  emb.dimension = 2;
  emb.image = {{Rational(0), Rational(0)},
               {Rational(1), Rational(1)},
               {Rational(1, 2), Rational(1, 2)}};
  IsotoneFn f0;
  f0.values = {Rational(0), Rational(1), Rational(1, 2)};
  emb.generator.fns = {f0, f0};
  emb.generator.provenance = FamilyProvenance::dense_point;
  Verdict v = verify_order_subspace(emb);
  CHECK_FALSE(v.holds);
  CHECK_FALSE(v.witness.empty());
}
