#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ordtop/errors.hpp"
#include "ordtop/harness.hpp"
#include "ordtop/hilbert.hpp"
#include "ordtop/io.hpp"
#include "ordtop/quniform.hpp"
#include "ordtop/synthesis.hpp"

namespace {

using nlohmann::json;

void emit(const json& j, const std::string& out_file) {
  if (out_file.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    ordtop::save_json_file(out_file, j);
    std::cout << "wrote " << out_file << "\n";
  }
}

int cmd_check(const std::string& space_file, bool strict_load, const std::string& replay_file,
              const std::string& out_file) {
  if (!replay_file.empty()) {
    std::ifstream in(replay_file);
    if (!in) throw std::runtime_error("cannot open report file '" + replay_file + "'");
    ordtop::ReplayOutcome outcome = ordtop::replay_report(in);
    json j;
    j["suite"] = outcome.suite;
    j["lines"] = outcome.lines;
    j["mismatches"] = outcome.mismatches;
    j["notes"] = outcome.notes;
    emit(j, out_file);
    return outcome.mismatches == 0 ? 0 : 1;
  }
  if (space_file.empty()) throw std::runtime_error("check: give an instance file or --replay");
  ordtop::FiniteSpace space = ordtop::load_space(space_file, strict_load);
  json j;
  j["space"] = ordtop::space_to_json(space);
  j["properties"] = ordtop::property_report_to_json(ordtop::property_report(space));
  emit(j, out_file);
  return 0;
}

int cmd_metrize(const std::string& space_file, const std::string& out_file) {
  ordtop::FiniteSpace space = ordtop::load_space(space_file);
  ordtop::Qpm p = ordtop::metrize(space);
  ordtop::AdmissibilityVerdict verdict = ordtop::is_strictly_admissible(space, p);
  if (!out_file.empty()) ordtop::save_json_file(out_file, ordtop::qpm_to_json(p));
  json j;
  if (out_file.empty()) j["matrix"] = ordtop::qpm_to_json(p);
  j["admissibility"] = ordtop::admissibility_to_json(verdict);
  std::cout << j.dump(2) << "\n";
  if (!out_file.empty()) std::cout << "wrote " << out_file << "\n";
  return 0;
}

int cmd_embed(const std::string& space_file, bool strict, const std::string& metric_file,
              const std::string& out_file) {
  ordtop::FiniteSpace space = ordtop::load_space(space_file);
  ordtop::Embedding emb;
  json verification;
  if (strict) {
    ordtop::Qpm p = metric_file.empty() ? ordtop::metrize(space) : ordtop::load_qpm(metric_file);
    emb = ordtop::strict_embed(space, p);
    verification["order_embedding"] = ordtop::verdict_to_json(ordtop::verify_order_embedding(emb));
    verification["order_subspace"] = ordtop::verdict_to_json(ordtop::verify_order_subspace(emb));
  } else {
    if (!metric_file.empty())
      throw std::runtime_error("embed: --metric only applies together with --strict");
    emb = ordtop::embed(space);
    verification["order_embedding"] = ordtop::verdict_to_json(ordtop::verify_order_embedding(emb));
  }
  json j;
  j["embedding"] = ordtop::embedding_to_json(emb);
  j["verification"] = verification;
  emit(j, out_file);
  return 0;
}

int cmd_product(const std::vector<std::string>& files, const std::string& out_file) {
  if (files.size() < 2 || files.size() % 2 != 0)
    throw std::runtime_error(
        "product: give one instance file followed by one matrix file per factor");
  std::vector<ordtop::MetrizedSpace> factors;
  for (std::size_t i = 0; i < files.size(); i += 2) {
    ordtop::MetrizedSpace factor;
    factor.space = ordtop::load_space(files[i]);
    factor.metric = ordtop::load_qpm(files[i + 1]);
    factors.push_back(std::move(factor));
  }
  ordtop::MetrizedSpace prod = ordtop::product(factors);
  json j;
  j["space"] = ordtop::space_to_json(prod.space);
  j["matrix"] = ordtop::qpm_to_json(prod.metric);
  j["admissibility"] =
      ordtop::admissibility_to_json(ordtop::is_admissible(prod.space, prod.metric));
  emit(j, out_file);
  return 0;
}

int cmd_suite(const std::string& id, int exhaustive_n, const std::vector<long>& random_args,
              std::uint64_t seed, bool seed_given, int jobs, const std::string& report_file) {
  ordtop::StreamSpec stream = ordtop::default_stream(id);
  if (exhaustive_n >= 0 && !random_args.empty())
    throw std::runtime_error("suite: --n and --random are mutually exclusive");
  if (exhaustive_n >= 0) {
    stream = ordtop::StreamSpec::exhaustive(exhaustive_n);
    if (seed_given) stream.seed = seed;
  } else if (!random_args.empty()) {
    if (random_args.size() != 2) throw std::runtime_error("suite: --random takes N COUNT");
    stream = ordtop::StreamSpec::random(static_cast<int>(random_args[0]), stream.seed,
                                        random_args[1]);
    if (seed_given) stream.seed = seed;
  } else if (seed_given) {
    stream.seed = seed;
  }
  ordtop::SuiteResult result = ordtop::run_suite(id, stream, jobs);
  if (report_file.empty()) {
    ordtop::write_report(std::cout, result);
  } else {
    std::ofstream out(report_file);
    if (!out) throw std::runtime_error("cannot open report file '" + report_file + "'");
    ordtop::write_report(out, result);
    std::cout << "suite " << result.suite << ": checked " << result.checked << ", failures "
              << result.failure_count() << ", findings " << result.finding_count() << " ("
              << result.wall_seconds << "s); wrote " << report_file << "\n";
  }
  return result.theorem_suite && result.failure_count() > 0 ? 1 : 0;
}

int cmd_search(const std::string& implication, long budget) {
  ordtop::SearchResult result = ordtop::search_counterexamples(implication, budget);
  json j;
  j["implication"] = result.implication;
  j["budget"] = result.budget;
  j["checked"] = result.checked;
  j["found"] = result.found;
  if (result.found) {
    j["witness"] = result.witness;
    j["detail"] = result.witness_detail;
  }
  std::cout << j.dump(2) << "\n";
  return 0;
}

int cmd_quniform_check(const std::string& space_file, const std::string& family_file) {
  ordtop::FiniteSpace space = ordtop::load_space(space_file);
  ordtop::FnFamily family = ordtop::load_family(family_file);
  ordtop::Qpm p = ordtop::metrize_from_family(space, family);
  ordtop::EntourageBase uniformity = ordtop::base_from_qpm(ordtop::symmetrize(p));
  ordtop::UniformityRoundTrip report = ordtop::uniformity_round_trip(space, uniformity, family);
  json j;
  j["family_conditions"] =
      ordtop::family_conditions_to_json(ordtop::family_conditions(space, family));
  j["round_trip"] = ordtop::round_trip_to_json(report);
  std::cout << j.dump(2) << "\n";
  return report.status == ordtop::CheckStatus::ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite topological preordered spaces: property checks, quasi-pseudo-metrics, "
               "cube embeddings, and theorem suites"};
  app.require_subcommand(1);

  auto* check = app.add_subcommand("check", "report order/topology properties of an instance, "
                                            "or replay a suite report");
  std::string check_space, check_replay, check_out;
  bool check_strict = false;
  check->add_option("space", check_space, "instance file");
  check->add_flag("--strict-load", check_strict,
                  "reject instances whose topology or preorder is not already closed");
  check->add_option("--replay", check_replay, "re-run a suite report and compare verdicts");
  check->add_option("--out", check_out, "write the JSON report to this file");

  auto* metrize = app.add_subcommand("metrize", "build the canonical admissible "
                                                "quasi-pseudo-metric of an instance");
  std::string metrize_space, metrize_out;
  metrize->add_option("space", metrize_space, "instance file")->required();
  metrize->add_option("--out", metrize_out, "write the matrix file here");

  auto* embed = app.add_subcommand("embed", "embed an ordered instance into the truncated "
                                            "ordered cube");
  std::string embed_space, embed_metric, embed_out;
  bool embed_strict = false;
  embed->add_option("space", embed_space, "instance file")->required();
  embed->add_flag("--strict", embed_strict, "interleaved embedding with the order-subspace check");
  embed->add_option("--metric", embed_metric, "matrix file to embed with (default: metrize)");
  embed->add_option("--out", embed_out, "write the JSON result to this file");

  auto* product = app.add_subcommand("product", "weighted product of metrized instances");
  std::vector<std::string> product_files;
  std::string product_out;
  product->add_option("files", product_files, "instance and matrix files, alternating")
      ->required();
  product->add_option("--out", product_out, "write the JSON result to this file");

  auto* suite = app.add_subcommand("suite", "run a theorem suite or probe over an instance "
                                            "stream");
  std::string suite_id, suite_report;
  int suite_n = -1;
  std::vector<long> suite_random;
  std::uint64_t suite_seed = 0;
  int suite_jobs = 1;
  suite->add_option("id", suite_id, "one of: " + [] {
                      std::string all;
                      for (const std::string& s : ordtop::known_suites())
                        all += (all.empty() ? "" : ", ") + s;
                      return all;
                    }())
      ->required();
  suite->add_option("--n", suite_n, "exhaustive stream over all instances on N points");
  suite->add_option("--random", suite_random, "random stream: N COUNT")->expected(2);
  auto* seed_opt = suite->add_option("--seed", suite_seed, "seed for random streams");
  suite->add_option("--jobs", suite_jobs, "worker threads (deterministic merge)");
  suite->add_option("--report", suite_report, "write the line-oriented report to this file");

  auto* search = app.add_subcommand("search", "search instance streams for a counterexample "
                                              "to an implication");
  std::string search_id;
  long search_budget = 2000;
  search->add_option("implication", search_id, "one of: " + [] {
                       std::string all;
                       for (const std::string& s : ordtop::known_implications())
                         all += (all.empty() ? "" : ", ") + s;
                       return all;
                     }())
      ->required();
  search->add_option("--budget", search_budget, "maximum number of instances to inspect");

  auto* quc = app.add_subcommand("quniform-check", "round-trip a function family through its "
                                                   "weak quasi-uniformity");
  std::string quc_space, quc_family;
  quc->add_option("space", quc_space, "instance file")->required();
  quc->add_option("family", quc_family, "family file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed()) return cmd_check(check_space, check_strict, check_replay, check_out);
    if (metrize->parsed()) return cmd_metrize(metrize_space, metrize_out);
    if (embed->parsed()) return cmd_embed(embed_space, embed_strict, embed_metric, embed_out);
    if (product->parsed()) return cmd_product(product_files, product_out);
    if (suite->parsed())
      return cmd_suite(suite_id, suite_n, suite_random, suite_seed, seed_opt->count() > 0,
                       suite_jobs, suite_report);
    if (search->parsed()) return cmd_search(search_id, search_budget);
    if (quc->parsed()) return cmd_quniform_check(quc_space, quc_family);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
