#include <doctest.h>

#include <cstdio>
#include <stdexcept>

#include "fixtures.hpp"
#include "ordtop/io.hpp"
#include "ordtop/synthesis.hpp"

using namespace ordtop;
using fixtures::chain3;
using fixtures::disc2;
using fixtures::sierpinski;

TEST_CASE("space json round trip") {
  FiniteSpace s = disc2();
  FiniteSpace back = space_from_json(space_to_json(s));
  CHECK(back == s);
  json j = space_to_json(s);
  CHECK(j["n"] == 2);
  CHECK(j["name"] == "disc2");
  // Reflexive pairs are omitted from the serialized preorder.
  for (const auto& pair : j["leq"]) CHECK(pair[0] != pair[1]);
}

TEST_CASE("space json lenient and strict loading") {
  json j = {{"n", 2}, {"opens", {{1}}}, {"leq", {{0, 1}}}};
  FiniteSpace lenient = space_from_json(j);
  CHECK(lenient.opens == sierpinski().opens);
  CHECK(lenient.leq == sierpinski().leq);
  CHECK_THROWS_AS(space_from_json(j, true), std::invalid_argument);
}

TEST_CASE("space json defaults") {
  // Opens and leq may be omitted: indiscrete topology, identity preorder.
  json j = {{"n", 2}};
  FiniteSpace s = space_from_json(j);
  CHECK(s.opens == SetFamily{0, 0b11});
  CHECK(s.leq == Relation::identity(2));
}

TEST_CASE("space json rejects bad input") {
  CHECK_THROWS_AS(space_from_json(json{{"n", -1}}), std::invalid_argument);
  CHECK_THROWS_AS(space_from_json(json{{"n", 2}, {"opens", {{5}}}}), std::invalid_argument);
  CHECK_THROWS_AS(space_from_json(json{{"n", 2}, {"leq", {{0, 9}}}}), std::invalid_argument);
}

TEST_CASE("qpm json round trip") {
  Qpm p = metrize(chain3());
  Qpm back = qpm_from_json(qpm_to_json(p));
  CHECK(back == p);
  json j = qpm_to_json(p);
  CHECK(j["m"][1][0] == "1/4");
  CHECK(j["m"][0][0] == "0");
  // Plain integers are accepted on input.
  json ints = {{"n", 2}, {"m", {{0, 0}, {1, 0}}}};
  Qpm q = qpm_from_json(ints);
  CHECK(q.at(1, 0) == Rational(1));
}

TEST_CASE("family json round trip") {
  FnFamily f = separating_family(chain3());
  FnFamily back = family_from_json(family_to_json(f));
  CHECK(back.fns == f.fns);
  json j = family_to_json(f);
  REQUIRE(j.is_array());
  CHECK(j.size() == 2);
}

TEST_CASE("rational json") {
  CHECK(rational_to_json(Rational(3, 4)) == "3/4");
  CHECK(rational_to_json(Rational(5)) == "5");
  CHECK(rational_from_json("3/4") == Rational(3, 4));
  CHECK(rational_from_json(-2) == Rational(-2));
  CHECK_THROWS_AS(rational_from_json("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(rational_from_json("x"), std::invalid_argument);
}

TEST_CASE("report serializers carry the essentials") {
  json v = verdict_to_json(is_semiclosed(sierpinski()));
  CHECK(v["holds"] == false);
  json pr = property_report_to_json(property_report(disc2()));
  CHECK(pr["completely_regular"]["holds"] == true);
  json adm = admissibility_to_json(is_strictly_admissible(disc2(), metrize(disc2())));
  CHECK(adm["admissible"] == true);
  CHECK(adm["strict"] == true);
}

TEST_CASE("file round trip") {
  const std::string path = "ordtop_io_test.json";
  save_json_file(path, space_to_json(chain3()));
  FiniteSpace back = space_from_json(load_json_file(path));
  CHECK(back == chain3());
  std::remove(path.c_str());
  CHECK_THROWS_AS(load_json_file("does-not-exist.json"), std::runtime_error);
}

TEST_CASE("shipped fixture files match the builders") {
  FiniteSpace d = load_space(std::string(ORDTOP_FIXTURE_DIR) + "/disc2.json");
  CHECK(d == disc2());
  FiniteSpace s = load_space(std::string(ORDTOP_FIXTURE_DIR) + "/sierpinski.json");
  CHECK(s == sierpinski());
  FiniteSpace c = load_space(std::string(ORDTOP_FIXTURE_DIR) + "/chain3.json");
  CHECK(c == chain3());
}
