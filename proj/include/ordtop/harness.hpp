#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "ordtop/qpm.hpp"
#include "ordtop/sets.hpp"
#include "ordtop/space.hpp"

namespace ordtop {

// Which instances a suite runs over: every space on n labeled points
// (exhaustive) or `count` seeded random instances on n points. For the
// pair-sampling suite the count is the number of sampled pairs.
struct StreamSpec {
  enum class Mode { exhaustive, random };
  Mode mode = Mode::exhaustive;
  int n = 3;
  std::uint64_t seed = 0;
  long count = 0;

  static StreamSpec exhaustive(int n_points);
  static StreamSpec random(int n_points, std::uint64_t seed, long count);
};

nlohmann::json stream_to_json(const StreamSpec& spec);
StreamSpec stream_from_json(const nlohmann::json& j);

// All preorders on n labeled points (n <= 4; the count grows too fast
// beyond that). Canonically ordered.
std::vector<Relation> all_preorders(int n);

// The topology of all up-sets of a preorder. Over all preorders on n
// points this enumerates all topologies on n points exactly once
// (specialization preorder duality on finite spaces).
SetFamily alexandrov_topology(const Relation& leq);

// Random access into a stream: exhaustive streams pair every topology
// on n points with every preorder on n points; random streams derive
// instance i from mix_seed(seed, i).
class InstanceStream {
 public:
  explicit InstanceStream(const StreamSpec& spec);

  long total() const;
  FiniteSpace at(long index) const;
  const StreamSpec& spec() const { return spec_; }

 private:
  StreamSpec spec_;
  std::vector<Relation> preorders_;
  std::vector<SetFamily> topologies_;
};

// Deterministic instance generators. Identical (n, seed) gives an
// identical instance on every platform (mt19937_64 with modulo
// reduction; no distribution objects).
std::uint64_t mix_seed(std::uint64_t seed, long index);
FiniteSpace random_space(int n, std::uint64_t seed);
// Seeded nonnegative rational matrix with a zero diagonal, closed under
// min-plus (shortest paths), hence a valid quasi-pseudo-metric with a
// nontrivial zero pattern.
Qpm random_qpm(int n, std::uint64_t seed);

struct InstanceVerdict {
  long index = -1;
  bool pass = true;
  bool finding = false;  // probe suites flag noteworthy instances here
  std::string detail;
  nlohmann::json artifact;  // replayable payload for failures/findings
};

struct SuiteResult {
  std::string suite;
  StreamSpec stream;
  bool theorem_suite = true;
  long checked = 0;
  std::vector<InstanceVerdict> verdicts;
  double wall_seconds = 0;

  long failure_count() const;
  long finding_count() const;
};

// Registered suites: theorem suites assert a proved statement on every
// instance (a failure is a defect); probe suites record findings for
// implications known to be one-directional.
std::vector<std::string> known_suites();
bool suite_is_theorem(const std::string& suite_id);
StreamSpec default_stream(const std::string& suite_id);

// Runs a suite over a stream with `jobs` worker threads. Verdicts are
// keyed by instance index, so the result is identical for any job
// count. Throws UnknownSuiteError for an unregistered id.
SuiteResult run_suite(const std::string& suite_id, const StreamSpec& stream, int jobs = 1);

// Counterexample search over a fixed schedule (exhaustive n = 1..4,
// then seeded random 5-point instances) until the budget is exhausted
// or a witness turns up.
std::vector<std::string> known_implications();

struct SearchResult {
  std::string implication;
  long budget = 0;
  long checked = 0;
  bool found = false;
  nlohmann::json witness;
  std::string witness_detail;
};

SearchResult search_counterexamples(const std::string& implication_id, long budget);

// Line-oriented report: a header line, one line per instance verdict,
// and a summary line. Failures and findings embed the instance.
void write_report(std::ostream& os, const SuiteResult& result);

// Re-runs the suite recorded in a report and compares every verdict
// line; `mismatches` counts lines whose re-run verdict differs.
struct ReplayOutcome {
  std::string suite;
  long lines = 0;
  long mismatches = 0;
  std::vector<std::string> notes;
};

ReplayOutcome replay_report(std::istream& is);

}  // namespace ordtop
