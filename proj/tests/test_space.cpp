#include <doctest.h>

#include <stdexcept>

#include "fixtures.hpp"
#include "ordtop/harness.hpp"
#include "ordtop/space.hpp"

using namespace ordtop;
using fixtures::chain3;
using fixtures::disc2;
using fixtures::sierpinski;

TEST_CASE("make_space lenient completes both structures") {
  FiniteSpace s = make_space(2, {point_bit(1)}, {{0, 1}});
  CHECK(s.opens == SetFamily{0, 0b10, 0b11});
  CHECK(s.leq.at(0, 0));
  CHECK(s.leq.at(0, 1));
  CHECK_FALSE(s.leq.at(1, 0));
  // Transitive gaps are closed.
  FiniteSpace c = make_space(3, {}, {{0, 1}, {1, 2}});
  CHECK(c.leq.at(0, 2));
  CHECK(c.opens == SetFamily{0, 0b111});  // empty subbasis: indiscrete
}

TEST_CASE("make_space strict rejects incomplete input") {
  CHECK_THROWS_AS(make_space(2, {point_bit(1)}, {}, true), std::invalid_argument);
  CHECK_THROWS_AS(make_space(3, {0, full_mask(3)}, {{0, 1}, {1, 2}}, true),
                  std::invalid_argument);
  FiniteSpace ok = make_space(2, {0, 0b10, 0b11}, {{0, 1}}, true);
  CHECK(ok.opens == SetFamily{0, 0b10, 0b11});
}

TEST_CASE("validate_space rejects broken structures") {
  FiniteSpace s = disc2();
  s.opens = {0, 0b01};  // full set missing
  CHECK_THROWS_AS(validate_space(s), std::invalid_argument);
  FiniteSpace t = disc2();
  t.leq.rows[0] = 0;  // not reflexive
  CHECK_THROWS_AS(validate_space(t), std::invalid_argument);
}

TEST_CASE("hulls on the fixtures") {
  CHECK(increasing_hull(disc2(), point_bit(0)) == 0b11);
  CHECK(decreasing_hull(disc2(), point_bit(1)) == 0b11);
  CHECK(increasing_hull(chain3(), point_bit(1)) == 0b110);
  CHECK(decreasing_hull(chain3(), point_bit(1)) == 0b011);
  CHECK(increasing_hull(disc2(), 0) == 0);
}

TEST_CASE("hull laws on random spaces") {
  for (int trial = 0; trial < 100; ++trial) {
    FiniteSpace s = random_space(5, mix_seed(11, trial));
    for (Mask set = 0; set <= full_mask(s.n); set += 3) {
      Mask up = increasing_hull(s, set);
      CHECK((set & ~up) == 0);                     // extensive
      CHECK(increasing_hull(s, up) == up);         // idempotent
      Mask down = decreasing_hull(s, set);
      CHECK((set & ~down) == 0);
      CHECK(decreasing_hull(s, down) == down);
    }
  }
}

TEST_CASE("upper and lower topologies") {
  CHECK(upper_topology(disc2()) == SetFamily{0, 0b10, 0b11});
  CHECK(lower_topology(disc2()) == SetFamily{0, 0b01, 0b11});
  CHECK(upper_topology(sierpinski()) == SetFamily{0, 0b10, 0b11});
  CHECK(lower_topology(sierpinski()) == SetFamily{0, 0b11});
}

TEST_CASE("closure and interior") {
  CHECK(closure(sierpinski(), point_bit(1)) == 0b11);
  CHECK(interior(disc2(), point_bit(0)) == 0b01);
  CHECK(interior(sierpinski(), point_bit(0)) == 0);
  FiniteSpace s = sierpinski();
  for (Mask set = 0; set <= full_mask(s.n); ++set) {
    CHECK(closure(s, closure(s, set)) == closure(s, set));
    CHECK((interior(s, set) & ~set) == 0);
  }
}

TEST_CASE("open, closed, clopen") {
  CHECK(is_open(sierpinski(), 0b10));
  CHECK_FALSE(is_open(sierpinski(), 0b01));
  CHECK(is_closed_set(sierpinski(), 0b01));
  CHECK(is_clopen(disc2(), 0b01));
  CHECK_FALSE(is_clopen(sierpinski(), 0b10));
}

TEST_CASE("minimal opens") {
  auto mins = minimal_opens(sierpinski());
  REQUIRE(mins.size() == 2);
  CHECK(mins[0] == 0b11);  // smallest open around 0
  CHECK(mins[1] == 0b10);  // smallest open around 1
}

TEST_CASE("clopen increasing sets") {
  CHECK(clopen_increasing_sets(disc2()) == SetFamily{0, 0b10, 0b11});
  CHECK(clopen_increasing_sets(sierpinski()) == SetFamily{0, 0b11});
  CHECK(clopen_increasing_sets(chain3()) == SetFamily{0, 0b100, 0b110, 0b111});
}

TEST_CASE("semiclosed") {
  CHECK(is_semiclosed(disc2()).holds);
  Verdict v = is_semiclosed(sierpinski());
  CHECK_FALSE(v.holds);
  CHECK(v.x == 1);  // i(1) = {1} is not closed
}

TEST_CASE("closed preordered") {
  CHECK(is_closed_preordered(disc2()).holds);
  CHECK_FALSE(is_closed_preordered(sierpinski()).holds);
  // Indiscrete with 0 <= 1 only: the closure of the graph picks up (1, 0).
  FiniteSpace ind = make_space(2, {}, {{0, 1}});
  CHECK_FALSE(is_closed_preordered(ind).holds);
  // With the total preorder the graph is everything, hence closed.
  FiniteSpace tot = make_space(2, {}, {{0, 1}, {1, 0}});
  CHECK(is_closed_preordered(tot).holds);
}

TEST_CASE("convex") {
  CHECK(is_convex(disc2()).holds);
  CHECK(is_convex(sierpinski()).holds);
  // Discrete with the total preorder: every monotone box around a point
  // contains both points, so singletons violate convexity.
  FiniteSpace s = make_space(2, {point_bit(0), point_bit(1)}, {{0, 1}, {1, 0}});
  CHECK_FALSE(is_convex(s).holds);
}

TEST_CASE("normally preordered") {
  CHECK(is_normally_preordered(disc2()).holds);
  Verdict v = is_normally_preordered(sierpinski());
  CHECK_FALSE(v.holds);
  CHECK(v.witness.find("not semiclosed") != std::string::npos);
}

TEST_CASE("regularly preordered") {
  CHECK(is_regularly_preordered(disc2()).holds);
  CHECK_FALSE(is_regularly_preordered(sierpinski()).holds);
  CHECK(is_regularly_preordered(chain3()).holds);
}

TEST_CASE("completely regular preordered") {
  CHECK(is_completely_regular_preordered(disc2()).holds);
  CHECK_FALSE(is_completely_regular_preordered(sierpinski()).holds);
  CHECK(is_completely_regular_preordered(chain3()).holds);
  // Indiscrete + total preorder is completely regular (constants suffice).
  FiniteSpace ind = make_space(2, {}, {{0, 1}, {1, 0}});
  CHECK(is_completely_regular_preordered(ind).holds);
}

TEST_CASE("I-space") {
  CHECK(is_i_space(disc2()).holds);
  CHECK(is_i_space(sierpinski()).holds);
  // Opens {{}, {0}, E} with 0 <= 1: i({0}) = {0,1} restricted... on three
  // points i({0}) = {0,1} is not open.
  FiniteSpace s = make_space(3, {point_bit(0)}, {{0, 1}});
  CHECK_FALSE(is_i_space(s).holds);
}

TEST_CASE("property_report bundles the verdicts") {
  PropertyReport r = property_report(sierpinski());
  CHECK_FALSE(r.semiclosed.holds);
  CHECK_FALSE(r.closed_preordered.holds);
  CHECK(r.convex.holds);
  CHECK_FALSE(r.normally_preordered.holds);
  CHECK_FALSE(r.regularly_preordered.holds);
  CHECK_FALSE(r.completely_regular.holds);
  CHECK(r.i_space.holds);
}

TEST_CASE("quotient") {
  // Already an order: nothing to collapse.
  Quotient q = quotient(disc2());
  CHECK(q.space.n == 2);
  CHECK(q.space.opens == disc2().opens);
  CHECK(q.space.leq == disc2().leq);
  CHECK(q.projection == std::vector<int>{0, 1});
  // Total preorder on an indiscrete pair collapses to a point.
  FiniteSpace ind = make_space(2, {}, {{0, 1}, {1, 0}});
  Quotient one = quotient(ind);
  CHECK(one.space.n == 1);
  CHECK(one.projection == std::vector<int>{0, 0});
  CHECK(is_antisymmetric(one.space.leq));
}

TEST_CASE("subspace") {
  FiniteSpace sub = subspace(chain3(), point_bit(0) | point_bit(2));
  CHECK(sub.n == 2);
  CHECK(sub.opens == SetFamily{0, 0b01, 0b10, 0b11});
  CHECK(sub.leq.at(0, 1));  // 0 <= 2 survives relabeled
  CHECK_FALSE(sub.leq.at(1, 0));
  FiniteSpace single = subspace(sierpinski(), point_bit(1));
  CHECK(single.n == 1);
  CHECK(single.opens == SetFamily{0, 0b1});
}

TEST_CASE("preorder subspace") {
  CHECK(is_preorder_subspace(chain3(), point_bit(0) | point_bit(2)).holds);
  // Closed preordered (compact) spaces: every subset is a preorder
  // subspace.
  for (Mask s = 1; s <= full_mask(3); ++s) CHECK(is_preorder_subspace(chain3(), s).holds);
  // Opens {{}, {1}, E} on three points with 0 <= 1: on S = {1, 2} the
  // trace {1} is decreasing, but no ambient decreasing open traces to it.
  FiniteSpace amb = make_space(3, {point_bit(1)}, {{0, 1}});
  Verdict v = is_preorder_subspace(amb, point_bit(1) | point_bit(2));
  CHECK_FALSE(v.holds);
}

TEST_CASE("degenerate spaces") {
  FiniteSpace empty = make_space(0, {}, {});
  CHECK(is_completely_regular_preordered(empty).holds);
  CHECK(is_normally_preordered(empty).holds);
  CHECK(is_convex(empty).holds);
  FiniteSpace point = make_space(1, {}, {});
  CHECK(is_completely_regular_preordered(point).holds);
  CHECK(is_closed_preordered(point).holds);
}
