#include <doctest.h>

#include <stdexcept>

#include "fixtures.hpp"
#include "ordtop/errors.hpp"
#include "ordtop/harness.hpp"
#include "ordtop/synthesis.hpp"

using namespace ordtop;
using fixtures::chain3;
using fixtures::disc2;
using fixtures::sierpinski;
using fixtures::sierpinski_qpm;

namespace {

IsotoneFn indicator(int n, Mask s) {
  IsotoneFn f;
  f.values.assign(static_cast<std::size_t>(n), Rational(0));
  for_each_point(s, [&](int x) { f.values[static_cast<std::size_t>(x)] = 1; });
  return f;
}

}  // namespace

TEST_CASE("check_isotone_continuous") {
  CHECK(check_isotone_continuous(disc2(), indicator(2, point_bit(1))).holds);
  // Not isotone: decreasing along 0 <= 1.
  Verdict v = check_isotone_continuous(disc2(), indicator(2, point_bit(0)));
  CHECK_FALSE(v.holds);
  CHECK(v.witness.find("isotone") != std::string::npos);
  // Isotone but not continuous: the level set {f >= 1} = {1} is open but
  // not closed in the two-point space with opens {{}, {1}, E}.
  Verdict c = check_isotone_continuous(sierpinski(), indicator(2, point_bit(1)));
  CHECK_FALSE(c.holds);
  // Out-of-range values are rejected with a witness.
  IsotoneFn big;
  big.values = {Rational(0), Rational(2)};
  CHECK_FALSE(check_isotone_continuous(disc2(), big).holds);
}

TEST_CASE("family conditions on the canonical family") {
  FnFamily f;
  f.fns = {indicator(2, point_bit(1))};
  FamilyConditions cond = family_conditions(disc2(), f);
  CHECK(cond.initial_topology.holds);
  CHECK(cond.preorder_match.holds);
  CHECK(cond.both());
  // The empty family cannot generate the discrete topology.
  FamilyConditions none = family_conditions(disc2(), FnFamily{});
  CHECK_FALSE(none.both());
}

TEST_CASE("initial topology of a family") {
  FnFamily f;
  f.fns = {indicator(2, point_bit(1))};
  CHECK(initial_topology_of(2, f) == SetFamily{0, 0b01, 0b10, 0b11});
  CHECK(initial_topology_of(2, FnFamily{}) == SetFamily{0, 0b11});
}

TEST_CASE("separating family") {
  FnFamily f = separating_family(disc2());
  REQUIRE(f.size() == 1);
  CHECK(f.fns[0] == indicator(2, point_bit(1)));
  CHECK(f.provenance == FamilyProvenance::clopen_indicator);

  FnFamily g = separating_family(chain3());
  REQUIRE(g.size() == 2);
  // Canonical order: by cardinality then mask; {2} before {1,2}.
  CHECK(g.fns[0] == indicator(3, point_bit(2)));
  CHECK(g.fns[1] == indicator(3, point_bit(1) | point_bit(2)));

  CHECK_THROWS_AS(separating_family(sierpinski()), NotCompletelyRegularError);
}

TEST_CASE("metrize_from_family frozen values") {
  FnFamily f;
  f.fns = {indicator(2, point_bit(1))};
  Qpm p = metrize_from_family(disc2(), f);
  CHECK(p.at(1, 0) == Rational(1, 2));
  CHECK(p.at(0, 1) == Rational(0));
  CHECK(is_admissible(disc2(), p).admissible);

  Qpm c = metrize_from_family(chain3(), separating_family(chain3()));
  CHECK(c.at(1, 0) == Rational(1, 4));
  CHECK(c.at(2, 1) == Rational(1, 2));
  CHECK(c.at(2, 0) == Rational(3, 4));
  CHECK(c.at(0, 1) == Rational(0));
  CHECK(c.at(0, 2) == Rational(0));
  CHECK(c.at(1, 2) == Rational(0));
  CHECK(is_admissible(chain3(), c).admissible);

  CHECK_THROWS_AS(metrize_from_family(disc2(), FnFamily{}), EmptyFamilyError);
}

TEST_CASE("metrize_from_family rejects non-members") {
  FnFamily f;
  f.fns = {indicator(2, point_bit(0))};  // not isotone on disc2
  CHECK_THROWS_AS(metrize_from_family(disc2(), f), std::invalid_argument);
}

TEST_CASE("metrize") {
  Qpm p = metrize(disc2());
  CHECK(p.at(1, 0) == Rational(1, 2));
  CHECK(is_strictly_admissible(disc2(), p).strict);
  CHECK_THROWS_AS(metrize(sierpinski()), NotCompletelyRegularError);
  // Indiscrete with the total preorder: empty separating family, zero
  // matrix, still admissible.
  FiniteSpace ind = make_space(2, {}, {{0, 1}, {1, 0}});
  Qpm z = metrize(ind);
  CHECK(z == Qpm::zero(2));
  CHECK(is_admissible(ind, z).admissible);
}

TEST_CASE("metrize induces exactly the family preorder") {
  InstanceStream st(StreamSpec::exhaustive(3));
  for (long i = 0; i < st.total(); ++i) {
    if (i % 17 != 0) continue;  // thin the sweep; the suites do it in full
    FiniteSpace space = st.at(i);
    if (!is_completely_regular_preordered(space).holds) continue;
    Qpm p = metrize(space);
    CHECK(induced_preorder(p) == space.leq);
  }
}

TEST_CASE("product of the two-point fixtures") {
  MetrizedSpace a{disc2(), sierpinski_qpm()};
  MetrizedSpace prod = product({a, a});
  CHECK(prod.space.n == 4);
  // Point ids: first factor most significant; (1,1) = 3, (0,0) = 0.
  CHECK(prod.metric.at(3, 0) == Rational(3, 4));
  CHECK(prod.metric.at(0, 3) == Rational(0));
  CHECK(is_admissible(prod.space, prod.metric).admissible);
  CHECK(prod.space.leq.at(0, 3));
  CHECK_FALSE(prod.space.leq.at(1, 2));
}

TEST_CASE("single-factor product rescales by one half") {
  Qpm p(2);
  p.at(1, 0) = 7;  // bound_by_one caps this at 1
  MetrizedSpace one = product({MetrizedSpace{disc2(), p}});
  CHECK(one.metric.at(1, 0) == Rational(1, 2));
  CHECK(one.space.opens == disc2().opens);
  CHECK(one.space.leq == disc2().leq);
}

TEST_CASE("product of one-point spaces") {
  FiniteSpace pt = make_space(1, {}, {});
  MetrizedSpace f{pt, Qpm::zero(1)};
  MetrizedSpace prod = product({f, f, f});
  CHECK(prod.space.n == 1);
  CHECK(prod.metric == Qpm::zero(1));
}

TEST_CASE("product error paths") {
  CHECK_THROWS_AS(product({}), EmptyProductError);
  MetrizedSpace bad{sierpinski(), sierpinski_qpm()};  // not admissible
  CHECK_THROWS_AS(product({bad}), NotAdmissibleError);
}

TEST_CASE("check_product_upper_topology") {
  MetrizedSpace a{disc2(), sierpinski_qpm()};
  StatusReport ok = check_product_upper_topology({a, a});
  CHECK(ok.status == CheckStatus::ok);
  // Precondition failure (metric not strictly admissible for the factor)
  // reports a skip rather than a failure.
  MetrizedSpace bad{sierpinski(), sierpinski_qpm()};
  StatusReport skip = check_product_upper_topology({a, bad});
  CHECK(skip.status == CheckStatus::skip);
}

TEST_CASE("qpm_from_entourage_base") {
  EntourageBase base = base_from_qpm(sierpinski_qpm());
  Qpm p = qpm_from_entourage_base(disc2(), base);
  CHECK(p == sierpinski_qpm());
  // A base whose core is not transitive is rejected.
  Relation r = Relation::identity(3);
  r.add(0, 1);
  r.add(1, 2);
  EntourageBase loose{3, {r}};
  FiniteSpace any3 = make_space(3, {}, {});
  CHECK_THROWS_AS(qpm_from_entourage_base(any3, loose), NonTransitiveCoreError);
}
