#include <doctest.h>

#include <sstream>
#include <stdexcept>

#include "fixtures.hpp"
#include "ordtop/bruteforce.hpp"
#include "ordtop/errors.hpp"
#include "ordtop/harness.hpp"

using namespace ordtop;

TEST_CASE("all_preorders counts") {
  CHECK(all_preorders(0).size() == 1);
  CHECK(all_preorders(1).size() == 1);
  CHECK(all_preorders(2).size() == 4);
  CHECK(all_preorders(3).size() == 29);
  CHECK(all_preorders(4).size() == 355);
  CHECK_THROWS_AS(all_preorders(5), std::invalid_argument);
}

TEST_CASE("alexandrov_topology") {
  Relation chain = Relation::identity(2);
  chain.add(0, 1);
  CHECK(alexandrov_topology(chain) == SetFamily{0, 0b10, 0b11});
  CHECK(alexandrov_topology(Relation::identity(2)) == SetFamily{0, 0b01, 0b10, 0b11});
  CHECK(alexandrov_topology(Relation::total(2)) == SetFamily{0, 0b11});
}

TEST_CASE("the up-set map is a bijection onto topologies at n = 3") {
  auto preorders = all_preorders(3);
  std::vector<SetFamily> topologies;
  for (const Relation& r : preorders) topologies.push_back(alexandrov_topology(r));
  std::sort(topologies.begin(), topologies.end());
  topologies.erase(std::unique(topologies.begin(), topologies.end()), topologies.end());
  CHECK(topologies.size() == 29);
  CHECK(bruteforce::count_topologies(3) == 29);
  CHECK(bruteforce::count_topologies(2) == 4);
}

TEST_CASE("exhaustive stream counts") {
  CHECK(InstanceStream(StreamSpec::exhaustive(1)).total() == 1);
  CHECK(InstanceStream(StreamSpec::exhaustive(2)).total() == 16);
  CHECK(InstanceStream(StreamSpec::exhaustive(3)).total() == 841);
}

TEST_CASE("exhaustive stream yields valid, distinct instances") {
  InstanceStream st(StreamSpec::exhaustive(2));
  std::vector<FiniteSpace> all;
  for (long i = 0; i < st.total(); ++i) {
    FiniteSpace s = st.at(i);
    validate_space(s);
    s.name.clear();
    all.push_back(std::move(s));
  }
  for (std::size_t a = 0; a < all.size(); ++a)
    for (std::size_t b = a + 1; b < all.size(); ++b) CHECK_FALSE(all[a] == all[b]);
  CHECK_THROWS_AS(st.at(16), std::out_of_range);
  CHECK_THROWS_AS(st.at(-1), std::out_of_range);
}

TEST_CASE("random generators are deterministic and valid") {
  CHECK(random_space(5, 42) == random_space(5, 42));
  CHECK(random_qpm(6, 42) == random_qpm(6, 42));
  for (int trial = 0; trial < 200; ++trial) {
    validate_space(random_space(5, mix_seed(31, trial)));
    CHECK(is_valid(random_qpm(6, mix_seed(32, trial))));
  }
  CHECK(mix_seed(0, 0) != mix_seed(0, 1));
  CHECK(mix_seed(0, 0) != mix_seed(1, 0));
}

TEST_CASE("random stream addresses by index") {
  StreamSpec spec = StreamSpec::random(4, 9, 10);
  InstanceStream st(spec);
  CHECK(st.total() == 10);
  CHECK(st.at(3) == random_space(4, mix_seed(9, 3)));
}

TEST_CASE("suite registry") {
  auto suites = known_suites();
  CHECK(suites.size() == 10);
  for (const std::string& id : suites) {
    StreamSpec def = default_stream(id);
    CHECK(def.n >= 1);
  }
  CHECK(suite_is_theorem("bhs-equivalence"));
  CHECK_FALSE(suite_is_theorem("probe-convex-vs-closed"));
  CHECK_THROWS_AS(run_suite("no-such-suite", StreamSpec::exhaustive(2)), UnknownSuiteError);
}

TEST_CASE("theorem suites pass on the two-point catalogue") {
  for (const std::string& id :
       {"bhs-equivalence", "implication-chain", "embedding", "appendix"}) {
    SuiteResult r = run_suite(id, StreamSpec::exhaustive(2));
    INFO(id);
    CHECK(r.checked == 16);
    CHECK(r.failure_count() == 0);
  }
}

TEST_CASE("oracle cross-check suite passes on the two-point catalogue") {
  SuiteResult r = run_suite("oracle-cross-checks", StreamSpec::exhaustive(2));
  CHECK(r.checked == 16 + 500 + 1);
  CHECK(r.failure_count() == 0);
}

TEST_CASE("strictness suite passes in both modes") {
  SuiteResult ex = run_suite("lro-strictness", StreamSpec::exhaustive(2));
  CHECK(ex.failure_count() == 0);
  SuiteResult rnd = run_suite("lro-strictness", StreamSpec::random(4, 20260825, 100));
  CHECK(rnd.checked == 100);
  CHECK(rnd.failure_count() == 0);
}

TEST_CASE("metric law suite passes on random matrices") {
  SuiteResult r = run_suite("lipschitz-and-slices", StreamSpec::random(5, 20260825, 100));
  CHECK(r.failure_count() == 0);
}

TEST_CASE("product suite passes on sampled pairs") {
  StreamSpec spec = StreamSpec::exhaustive(2);
  spec.seed = 20260825;
  spec.count = 50;
  SuiteResult r = run_suite("product", spec);
  CHECK(r.checked == 50);
  CHECK(r.failure_count() == 0);
}

TEST_CASE("probes report findings, not failures") {
  SuiteResult r = run_suite("probe-convex-vs-closed", StreamSpec::exhaustive(2));
  CHECK(r.failure_count() == 0);
  // The two-point space with opens {{}, {1}, E} and 0 <= 1 is convex but
  // not closed preordered, so the probe must surface at least one finding.
  CHECK(r.finding_count() > 0);
  SuiteResult reg = run_suite("probe-regular-vs-completely-regular", StreamSpec::exhaustive(2));
  CHECK(reg.failure_count() == 0);
}

TEST_CASE("suite results are independent of the worker count") {
  SuiteResult one = run_suite("bhs-equivalence", StreamSpec::exhaustive(2), 1);
  SuiteResult four = run_suite("bhs-equivalence", StreamSpec::exhaustive(2), 4);
  REQUIRE(one.verdicts.size() == four.verdicts.size());
  for (std::size_t i = 0; i < one.verdicts.size(); ++i) {
    CHECK(one.verdicts[i].index == four.verdicts[i].index);
    CHECK(one.verdicts[i].pass == four.verdicts[i].pass);
    CHECK(one.verdicts[i].finding == four.verdicts[i].finding);
    CHECK(one.verdicts[i].detail == four.verdicts[i].detail);
  }
}

TEST_CASE("implication registry and search") {
  auto ids = known_implications();
  CHECK(ids.size() == 12);
  CHECK_THROWS_AS(search_counterexamples("no-such-implication", 10), UnknownSuiteError);

  // Discrete two-point space with the total preorder is closed preordered
  // but not convex; the search finds it inside the n = 2 catalogue.
  SearchResult hit = search_counterexamples("closed=>convex", 1000);
  CHECK(hit.found);
  CHECK(hit.checked <= 17);
  CHECK_FALSE(hit.witness.empty());

  // Budget exhaustion without a witness.
  SearchResult miss = search_counterexamples("normal=>closed", 100);
  CHECK_FALSE(miss.found);
  CHECK(miss.checked == 100);
}

TEST_CASE("every semiclosed instance in the catalogue is closed preordered") {
  // Unlike the infinite case, where semiclosed spaces with non-closed
  // preorder graphs exist, the three-point catalogue contains none: the
  // search exhausts, and the brute-force product-closure oracle agrees
  // with the fast check on every semiclosed instance.
  InstanceStream st(StreamSpec::exhaustive(3));
  long witnesses = 0;
  for (long i = 0; i < st.total(); ++i) {
    FiniteSpace space = st.at(i);
    if (!is_semiclosed(space).holds) continue;
    const bool fast = is_closed_preordered(space).holds;
    CHECK(fast == bruteforce::closed_preordered(space));
    if (!fast) ++witnesses;
  }
  CHECK(witnesses == 0);
  SearchResult search = search_counterexamples("semiclosed=>closed", 858);
  CHECK_FALSE(search.found);
  CHECK(search.checked == 858);
}

TEST_CASE("reports replay cleanly and catch tampering") {
  SuiteResult r = run_suite("bhs-equivalence", StreamSpec::exhaustive(2));
  std::ostringstream out;
  write_report(out, r);
  const std::string text = out.str();

  std::istringstream in(text);
  ReplayOutcome replay = replay_report(in);
  CHECK(replay.suite == "bhs-equivalence");
  CHECK(replay.lines == 16);
  CHECK(replay.mismatches == 0);

  std::string tampered = text;
  auto pos = tampered.find("\"pass\":true");
  REQUIRE(pos != std::string::npos);
  tampered.replace(pos, 11, "\"pass\":false");
  std::istringstream bad(tampered);
  ReplayOutcome broken = replay_report(bad);
  CHECK(broken.mismatches > 0);
}

TEST_CASE("report lines are one json object each") {
  SuiteResult r = run_suite("probe-convex-vs-closed", StreamSpec::exhaustive(2));
  std::ostringstream out;
  write_report(out, r);
  std::istringstream in(out.str());
  std::string line;
  int lines = 0;
  while (std::getline(in, line)) {
    nlohmann::json j = nlohmann::json::parse(line);  // throws on malformed lines
    REQUIRE(j.contains("type"));
    ++lines;
  }
  CHECK(lines == 1 + 16 + 1);  // header, verdicts, summary
}
