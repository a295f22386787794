#include "ordtop/harness.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <istream>
#include <map>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "ordtop/bruteforce.hpp"
#include "ordtop/errors.hpp"
#include "ordtop/hilbert.hpp"
#include "ordtop/io.hpp"
#include "ordtop/quniform.hpp"
#include "ordtop/synthesis.hpp"

namespace ordtop {

namespace {

constexpr std::uint64_t kDefaultSeed = 20260825;
constexpr std::uint64_t kOracleSeed = 60825;
constexpr long kOracleQpmCount = 500;
constexpr int kOracleQpmPoints = 6;
constexpr std::uint64_t kSearchSeed = 777;

}  // namespace

StreamSpec StreamSpec::exhaustive(int n_points) {
  StreamSpec s;
  s.mode = Mode::exhaustive;
  s.n = n_points;
  return s;
}

StreamSpec StreamSpec::random(int n_points, std::uint64_t seed, long count) {
  StreamSpec s;
  s.mode = Mode::random;
  s.n = n_points;
  s.seed = seed;
  s.count = count;
  return s;
}

nlohmann::json stream_to_json(const StreamSpec& spec) {
  nlohmann::json j;
  j["mode"] = spec.mode == StreamSpec::Mode::exhaustive ? "exhaustive" : "random";
  j["n"] = spec.n;
  j["seed"] = spec.seed;
  j["count"] = spec.count;
  return j;
}

StreamSpec stream_from_json(const nlohmann::json& j) {
  StreamSpec s;
  const std::string mode = j.value("mode", "exhaustive");
  if (mode == "exhaustive") {
    s.mode = StreamSpec::Mode::exhaustive;
  } else if (mode == "random") {
    s.mode = StreamSpec::Mode::random;
  } else {
    throw std::invalid_argument("stream: unknown mode '" + mode + "'");
  }
  s.n = j.value("n", 3);
  s.seed = j.value("seed", std::uint64_t(0));
  s.count = j.value("count", long(0));
  return s;
}

std::vector<Relation> all_preorders(int n) {
  if (n < 0 || n > 4)
    throw std::invalid_argument("all_preorders: exhaustive enumeration is capped at 4 points");
  std::vector<std::pair<int, int>> slots;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (x != y) slots.emplace_back(x, y);
    }
  }
  std::vector<Relation> out;
  const long limit = 1L << slots.size();
  for (long pick = 0; pick < limit; ++pick) {
    Relation r = Relation::identity(n);
    for (std::size_t i = 0; i < slots.size(); ++i) {
      if ((pick >> i) & 1) r.add(slots[i].first, slots[i].second);
    }
    if (is_transitive(r)) out.push_back(std::move(r));
  }
  std::sort(out.begin(), out.end(), relation_less);
  return out;
}

SetFamily alexandrov_topology(const Relation& leq) {
  SetFamily out;
  const Mask full = full_mask(leq.n);
  for (Mask s = 0;; ++s) {
    bool increasing = true;
    for_each_point(s, [&](int x) {
      if ((leq.rows[x] & ~s) != 0) increasing = false;
    });
    if (increasing) out.push_back(s);
    if (s == full) break;
  }
  return out;
}

InstanceStream::InstanceStream(const StreamSpec& spec) : spec_(spec) {
  if (spec_.n < 0 || spec_.n > kMaxPoints)
    throw std::invalid_argument("instance stream: n out of range");
  if (spec_.mode == StreamSpec::Mode::exhaustive) {
    preorders_ = all_preorders(spec_.n);
    topologies_.reserve(preorders_.size());
    for (const Relation& r : preorders_) topologies_.push_back(alexandrov_topology(r));
    std::sort(topologies_.begin(), topologies_.end());
  }
}

long InstanceStream::total() const {
  if (spec_.mode == StreamSpec::Mode::exhaustive)
    return static_cast<long>(preorders_.size()) * static_cast<long>(topologies_.size());
  return spec_.count;
}

FiniteSpace InstanceStream::at(long index) const {
  if (index < 0 || index >= total()) throw std::out_of_range("instance stream: index out of range");
  if (spec_.mode == StreamSpec::Mode::random)
    return random_space(spec_.n, mix_seed(spec_.seed, index));
  const long p_count = static_cast<long>(preorders_.size());
  FiniteSpace space;
  space.n = spec_.n;
  space.opens = topologies_[static_cast<std::size_t>(index / p_count)];
  space.leq = preorders_[static_cast<std::size_t>(index % p_count)];
  space.name = "exh-n" + std::to_string(spec_.n) + "-i" + std::to_string(index);
  return space;
}

std::uint64_t mix_seed(std::uint64_t seed, long index) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (static_cast<std::uint64_t>(index) + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

FiniteSpace random_space(int n, std::uint64_t seed) {
  if (n < 0 || n > kMaxPoints) throw std::invalid_argument("random_space: n out of range");
  std::mt19937_64 eng(seed);
  auto below = [&](std::uint64_t k) -> std::uint64_t { return k == 0 ? 0 : eng() % k; };
  const Mask full = full_mask(n);
  SetFamily subbasis;
  const std::uint64_t set_count = below(static_cast<std::uint64_t>(2 * n + 1));
  for (std::uint64_t i = 0; i < set_count; ++i)
    subbasis.push_back(static_cast<Mask>(below(static_cast<std::uint64_t>(full) + 1)));
  std::vector<std::pair<int, int>> pairs;
  if (n > 0) {
    const std::uint64_t pair_count = below(static_cast<std::uint64_t>(2 * n + 1));
    for (std::uint64_t i = 0; i < pair_count; ++i) {
      int a = static_cast<int>(below(static_cast<std::uint64_t>(n)));
      int b = static_cast<int>(below(static_cast<std::uint64_t>(n)));
      pairs.emplace_back(a, b);
    }
  }
  return make_space(n, std::move(subbasis), pairs, false,
                    "rand-n" + std::to_string(n) + "-s" + std::to_string(seed));
}

Qpm random_qpm(int n, std::uint64_t seed) {
  if (n < 0 || n > kMaxPoints) throw std::invalid_argument("random_qpm: n out of range");
  std::mt19937_64 eng(seed);
  Qpm p(n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (x == y) continue;
      if (eng() % 3 == 0) continue;  // keep a nontrivial zero pattern
      const long long num = 1 + static_cast<long long>(eng() % 6);
      const long long den = 1 + static_cast<long long>(eng() % 4);
      p.at(x, y) = Rational(num, den);
    }
  }
  // Min-plus closure turns any nonnegative zero-diagonal matrix into a
  // quasi-pseudo-metric.
  for (int k = 0; k < n; ++k) {
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        Rational via = p.at(x, k) + p.at(k, y);
        if (via < p.at(x, y)) p.at(x, y) = std::move(via);
      }
    }
  }
  return p;
}

long SuiteResult::failure_count() const {
  long f = 0;
  for (const InstanceVerdict& v : verdicts) {
    if (!v.pass) ++f;
  }
  return f;
}

long SuiteResult::finding_count() const {
  long f = 0;
  for (const InstanceVerdict& v : verdicts) {
    if (v.finding) ++f;
  }
  return f;
}

namespace {

FiniteSpace space_of_qpm(const Qpm& p, std::string name) {
  FiniteSpace space;
  space.n = p.n;
  space.opens = topology_of(p, Side::d);
  space.leq = induced_preorder(p);
  space.name = std::move(name);
  return space;
}

nlohmann::json space_artifact(const FiniteSpace& space) {
  nlohmann::json j;
  j["space"] = space_to_json(space);
  return j;
}

nlohmann::json metrized_artifact(const FiniteSpace& space, const Qpm& p) {
  nlohmann::json j;
  j["space"] = space_to_json(space);
  j["matrix"] = qpm_to_json(p);
  return j;
}

InstanceVerdict pass_verdict(std::string detail = "") {
  InstanceVerdict v;
  v.pass = true;
  v.detail = std::move(detail);
  return v;
}

InstanceVerdict fail_verdict(std::string detail, nlohmann::json artifact) {
  InstanceVerdict v;
  v.pass = false;
  v.detail = std::move(detail);
  v.artifact = std::move(artifact);
  return v;
}

SuiteResult execute(const std::string& suite, bool theorem, const StreamSpec& stream, long total,
                    int jobs, const std::function<InstanceVerdict(long)>& fn) {
  SuiteResult result;
  result.suite = suite;
  result.stream = stream;
  result.theorem_suite = theorem;
  result.checked = total;
  result.verdicts.assign(static_cast<std::size_t>(total), InstanceVerdict{});
  const auto started = std::chrono::steady_clock::now();
  auto worker = [&](long first, long stride) {
    for (long i = first; i < total; i += stride) {
      InstanceVerdict v;
      try {
        v = fn(i);
      } catch (const std::exception& e) {
        v.pass = false;
        v.detail = std::string("exception: ") + e.what();
      }
      v.index = i;
      result.verdicts[static_cast<std::size_t>(i)] = std::move(v);
    }
  };
  if (jobs <= 1) {
    worker(0, 1);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(jobs));
    for (int w = 0; w < jobs; ++w) threads.emplace_back(worker, w, jobs);
    for (std::thread& t : threads) t.join();
  }
  result.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return result;
}

// --- suite bodies ---

SuiteResult run_bhs_equivalence(const StreamSpec& stream, int jobs) {
  InstanceStream st(stream);
  auto fn = [&st](long i) -> InstanceVerdict {
    FiniteSpace space = st.at(i);
    const bool cr = is_completely_regular_preordered(space).holds;
    bool metrized = false;
    bool admissible = false;
    try {
      Qpm p = metrize(space);
      metrized = true;
      admissible = is_admissible(space, p).admissible;
    } catch (const NotCompletelyRegularError&) {
    }
    if (cr == (metrized && admissible)) return pass_verdict();
    return fail_verdict(std::string("complete regularity says ") + (cr ? "yes" : "no") +
                            " but metrization says " +
                            ((metrized && admissible) ? "yes" : "no"),
                        space_artifact(space));
  };
  return execute("bhs-equivalence", true, stream, st.total(), jobs, fn);
}

SuiteResult run_lro_strictness(const StreamSpec& stream, int jobs) {
  InstanceStream st(stream);
  const bool random_mode = stream.mode == StreamSpec::Mode::random;
  auto fn = [&st, &stream, random_mode](long i) -> InstanceVerdict {
    FiniteSpace space;
    Qpm p;
    if (random_mode) {
      p = random_qpm(stream.n, mix_seed(stream.seed, i));
      space = space_of_qpm(p, "qpm-n" + std::to_string(stream.n) + "-i" + std::to_string(i));
    } else {
      space = st.at(i);
      if (!is_completely_regular_preordered(space).holds)
        return pass_verdict("not completely regular; nothing to check");
      p = metrize(space);
    }
    AdmissibilityVerdict v = is_strictly_admissible(space, p);
    if (v.admissible && v.strict) return pass_verdict();
    return fail_verdict("admissible metric on a finite space is not strictly admissible: " +
                            (v.failures.empty() ? std::string("?") : v.failures.front()),
                        metrized_artifact(space, p));
  };
  return execute("lro-strictness", true, stream, st.total(), jobs, fn);
}

SuiteResult run_implication_chain(const StreamSpec& stream, int jobs) {
  InstanceStream st(stream);
  auto fn = [&st](long i) -> InstanceVerdict {
    FiniteSpace space = st.at(i);
    PropertyReport r = property_report(space);
    std::string broken;
    if (r.convex.holds && r.normally_preordered.holds && !r.completely_regular.holds)
      broken = "convex+normal without completely-regular";
    else if (r.completely_regular.holds && !(r.convex.holds && r.closed_preordered.holds))
      broken = "completely-regular without convex+closed";
    else if (r.normally_preordered.holds && !r.closed_preordered.holds)
      broken = "normally-preordered without closed";
    else if (r.closed_preordered.holds && !r.semiclosed.holds)
      broken = "closed without semiclosed";
    if (broken.empty()) return pass_verdict();
    return fail_verdict("implication chain broken: " + broken, space_artifact(space));
  };
  return execute("implication-chain", true, stream, st.total(), jobs, fn);
}

SuiteResult run_lipschitz_and_slices(const StreamSpec& stream, int jobs) {
  InstanceStream st(stream);
  const bool random_mode = stream.mode == StreamSpec::Mode::random;
  auto fn = [&st, &stream, random_mode](long i) -> InstanceVerdict {
    Qpm p;
    if (random_mode) {
      p = random_qpm(stream.n, mix_seed(stream.seed, i));
    } else {
      FiniteSpace space = st.at(i);
      if (!is_completely_regular_preordered(space).holds)
        return pass_verdict("not completely regular; nothing to check");
      p = metrize(space);
    }
    Verdict lip = check_lipschitz(p);
    if (!lip.holds) return fail_verdict(lip.witness, nlohmann::json{{"matrix", qpm_to_json(p)}});
    Verdict mono = check_monotone_slices(p);
    if (!mono.holds) return fail_verdict(mono.witness, nlohmann::json{{"matrix", qpm_to_json(p)}});
    return pass_verdict();
  };
  return execute("lipschitz-and-slices", true, stream, st.total(), jobs, fn);
}

SuiteResult run_product(const StreamSpec& stream, int jobs) {
  // Pool of admissible instances: every completely regular space of the
  // exhaustive stream with its canonical metric.
  StreamSpec pool_stream = StreamSpec::exhaustive(stream.n);
  InstanceStream st(pool_stream);
  std::vector<MetrizedSpace> pool;
  for (long i = 0; i < st.total(); ++i) {
    FiniteSpace space = st.at(i);
    if (!is_completely_regular_preordered(space).holds) continue;
    Qpm p = metrize(space);
    pool.push_back(MetrizedSpace{std::move(space), std::move(p)});
  }
  const long pairs = stream.count > 0 ? stream.count : 1000;
  auto fn = [&pool, &stream](long i) -> InstanceVerdict {
    std::mt19937_64 eng(mix_seed(stream.seed, i));
    const MetrizedSpace& a = pool[static_cast<std::size_t>(eng() % pool.size())];
    const MetrizedSpace& b = pool[static_cast<std::size_t>(eng() % pool.size())];
    nlohmann::json artifact;
    artifact["factors"] = nlohmann::json::array({metrized_artifact(a.space, a.metric),
                                                 metrized_artifact(b.space, b.metric)});
    MetrizedSpace prod = product({a, b});  // re-verifies admissibility
    // Fixing the other coordinate at 0 must recover each factor with an
    // admissible restricted metric.
    const int n2 = b.space.n;
    Mask first_slice = 0;
    for (int x1 = 0; x1 < a.space.n; ++x1) first_slice |= point_bit(x1 * n2);
    Mask second_slice = full_mask(n2);
    FiniteSpace sub1 = subspace(prod.space, first_slice);
    if (sub1.opens != a.space.opens || sub1.leq != a.space.leq)
      return fail_verdict("slice through the first factor does not recover it", artifact);
    if (!is_admissible(a.space, restrict_to(prod.metric, first_slice)).admissible)
      return fail_verdict("restricted product metric is not admissible for the first factor",
                          artifact);
    FiniteSpace sub2 = subspace(prod.space, second_slice);
    if (sub2.opens != b.space.opens || sub2.leq != b.space.leq)
      return fail_verdict("slice through the second factor does not recover it", artifact);
    if (!is_admissible(b.space, restrict_to(prod.metric, second_slice)).admissible)
      return fail_verdict("restricted product metric is not admissible for the second factor",
                          artifact);
    if (is_i_space(a.space).holds && is_i_space(b.space).holds) {
      StatusReport rep = check_product_upper_topology({a, b});
      if (rep.status != CheckStatus::ok)
        return fail_verdict("monotone product topologies: " + rep.detail, artifact);
    }
    return pass_verdict();
  };
  if (pool.empty()) throw std::logic_error("product suite: empty admissible pool");
  return execute("product", true, stream, pairs, jobs, fn);
}

SuiteResult run_embedding(const StreamSpec& stream, int jobs) {
  InstanceStream st(stream);
  auto fn = [&st](long i) -> InstanceVerdict {
    FiniteSpace space = st.at(i);
    if (!is_completely_regular_preordered(space).holds)
      return pass_verdict("not completely regular; nothing to check");
    if (!is_antisymmetric(space.leq)) {
      // Not ordered: the quotient is, and must embed.
      Quotient q = quotient(space);
      Embedding emb = embed(q.space);
      if (!verify_order_embedding(emb).holds)
        return fail_verdict("quotient does not order-embed", space_artifact(space));
      return pass_verdict("embedded the order quotient");
    }
    Embedding emb = embed(space);
    Verdict ve = verify_order_embedding(emb);
    if (!ve.holds) return fail_verdict("canonical embedding: " + ve.witness, space_artifact(space));
    Qpm p = metrize(space);
    Embedding semb = strict_embed(space, p);
    Verdict vs = verify_order_embedding(semb);
    if (!vs.holds)
      return fail_verdict("interleaved embedding: " + vs.witness, metrized_artifact(space, p));
    Verdict sub = verify_order_subspace(semb);
    if (!sub.holds)
      return fail_verdict("order subspace: " + sub.witness, metrized_artifact(space, p));
    AdmissibilityVerdict round = is_strictly_admissible(space, cube_qpm(semb.image));
    if (!round.admissible || !round.strict)
      return fail_verdict("cube metric restricted to the image is not strictly admissible",
                          metrized_artifact(space, p));
    return pass_verdict();
  };
  return execute("embedding", true, stream, st.total(), jobs, fn);
}

SuiteResult run_appendix(const StreamSpec& stream, int jobs) {
  InstanceStream st(stream);
  auto fn = [&st](long i) -> InstanceVerdict {
    FiniteSpace space = st.at(i);
    if (!is_completely_regular_preordered(space).holds)
      return pass_verdict("not completely regular; nothing to check");
    FnFamily family = separating_family(space);
    Qpm p = metrize(space);
    EntourageBase uniformity = base_from_qpm(symmetrize(p));
    UniformityRoundTrip rt = uniformity_round_trip(space, uniformity, family);
    if (rt.status != CheckStatus::ok)
      return fail_verdict("uniformity round trip: " +
                              (rt.precondition_witness.empty()
                                   ? rt.star_witness + rt.core_witness
                                   : rt.precondition_witness),
                          space_artifact(space));
    FnFamily reduced = reduce_family(space, family);
    UniformityRoundTrip rt2 = uniformity_round_trip(space, uniformity, reduced);
    if (rt2.status != CheckStatus::ok)
      return fail_verdict("uniformity round trip after reduction: " +
                              (rt2.precondition_witness.empty()
                                   ? rt2.star_witness + rt2.core_witness
                                   : rt2.precondition_witness),
                          space_artifact(space));
    return pass_verdict();
  };
  return execute("appendix", true, stream, st.total(), jobs, fn);
}

SuiteResult run_oracle_cross_checks(const StreamSpec& stream, int jobs) {
  InstanceStream st(stream);
  const long part_a = st.total();
  const long total = part_a + kOracleQpmCount + 1;
  auto fn = [&st, part_a](long i) -> InstanceVerdict {
    if (i < part_a) {
      FiniteSpace space = st.at(i);
      const bool fast = is_completely_regular_preordered(space).holds;
      const bool slow = bruteforce::completely_regular(space);
      if (fast == slow) return pass_verdict();
      return fail_verdict(std::string("complete regularity: clopen-set route says ") +
                              (fast ? "yes" : "no") + ", function-enumeration route says " +
                              (slow ? "yes" : "no"),
                          space_artifact(space));
    }
    if (i < part_a + kOracleQpmCount) {
      Qpm p = random_qpm(kOracleQpmPoints, mix_seed(kOracleSeed, i - part_a));
      for (Side side : {Side::p, Side::q, Side::d}) {
        if (topology_of(p, side) != bruteforce::ball_topology(p, side))
          return fail_verdict("minimal-ball topology disagrees with the all-radii enumeration",
                              nlohmann::json{{"matrix", qpm_to_json(p)}});
      }
      return pass_verdict();
    }
    // Topology count on 3 labeled points, by two independent routes.
    std::vector<Relation> preorders = all_preorders(3);
    std::vector<SetFamily> topologies;
    topologies.reserve(preorders.size());
    for (const Relation& r : preorders) topologies.push_back(alexandrov_topology(r));
    std::sort(topologies.begin(), topologies.end());
    topologies.erase(std::unique(topologies.begin(), topologies.end()), topologies.end());
    const long via_preorders = static_cast<long>(topologies.size());
    const long via_families = bruteforce::count_topologies(3);
    if (via_preorders == 29 && via_families == 29) return pass_verdict();
    return fail_verdict("topology count on 3 points: preorder route " +
                            std::to_string(via_preorders) + ", family-scan route " +
                            std::to_string(via_families) + ", expected 29",
                        nlohmann::json::object());
  };
  return execute("oracle-cross-checks", true, stream, total, jobs, fn);
}

SuiteResult run_probe(const std::string& id, const StreamSpec& stream, int jobs,
                      const std::function<bool(const PropertyReport&)>& premise,
                      const std::function<bool(const PropertyReport&)>& conclusion,
                      const std::string& description) {
  InstanceStream st(stream);
  auto fn = [&st, &premise, &conclusion, &description](long i) -> InstanceVerdict {
    FiniteSpace space = st.at(i);
    PropertyReport r = property_report(space);
    InstanceVerdict v = pass_verdict();
    if (premise(r) && !conclusion(r)) {
      v.finding = true;
      v.detail = description;
      v.artifact = space_artifact(space);
    }
    return v;
  };
  SuiteResult result = execute(id, false, stream, st.total(), jobs, fn);
  return result;
}

}  // namespace

std::vector<std::string> known_suites() {
  return {"bhs-equivalence",
          "lro-strictness",
          "implication-chain",
          "lipschitz-and-slices",
          "product",
          "embedding",
          "appendix",
          "oracle-cross-checks",
          "probe-regular-vs-completely-regular",
          "probe-convex-vs-closed"};
}

bool suite_is_theorem(const std::string& suite_id) {
  return suite_id.rfind("probe-", 0) != 0;
}

StreamSpec default_stream(const std::string& suite_id) {
  if (suite_id == "lro-strictness") return StreamSpec::random(5, kDefaultSeed, 1000);
  if (suite_id == "lipschitz-and-slices") return StreamSpec::random(8, kDefaultSeed, 1000);
  if (suite_id == "product") {
    StreamSpec s = StreamSpec::exhaustive(3);
    s.seed = kDefaultSeed;
    s.count = 1000;
    return s;
  }
  return StreamSpec::exhaustive(3);
}

SuiteResult run_suite(const std::string& suite_id, const StreamSpec& stream, int jobs) {
  if (jobs < 1) jobs = 1;
  if (suite_id == "bhs-equivalence") return run_bhs_equivalence(stream, jobs);
  if (suite_id == "lro-strictness") return run_lro_strictness(stream, jobs);
  if (suite_id == "implication-chain") return run_implication_chain(stream, jobs);
  if (suite_id == "lipschitz-and-slices") return run_lipschitz_and_slices(stream, jobs);
  if (suite_id == "product") return run_product(stream, jobs);
  if (suite_id == "embedding") return run_embedding(stream, jobs);
  if (suite_id == "appendix") return run_appendix(stream, jobs);
  if (suite_id == "oracle-cross-checks") return run_oracle_cross_checks(stream, jobs);
  if (suite_id == "probe-regular-vs-completely-regular") {
    return run_probe(
        suite_id, stream, jobs, [](const PropertyReport& r) { return r.regularly_preordered.holds; },
        [](const PropertyReport& r) { return r.completely_regular.holds; },
        "regularly preordered but not completely regularly preordered");
  }
  if (suite_id == "probe-convex-vs-closed") {
    return run_probe(
        suite_id, stream, jobs, [](const PropertyReport& r) { return r.convex.holds; },
        [](const PropertyReport& r) { return r.closed_preordered.holds; },
        "convex but not closed preordered");
  }
  throw UnknownSuiteError("unknown suite '" + suite_id + "'");
}

namespace {

struct Implication {
  std::string description;
  std::function<bool(const FiniteSpace&)> premise;
  std::function<bool(const FiniteSpace&)> conclusion;
};

std::map<std::string, Implication> implication_registry() {
  std::map<std::string, Implication> out;
  out["semiclosed=>closed"] = {
      "semiclosed but the preorder graph is not closed",
      [](const FiniteSpace& s) { return is_semiclosed(s).holds; },
      [](const FiniteSpace& s) { return is_closed_preordered(s).holds; }};
  out["closed=>semiclosed"] = {
      "closed preordered but not semiclosed",
      [](const FiniteSpace& s) { return is_closed_preordered(s).holds; },
      [](const FiniteSpace& s) { return is_semiclosed(s).holds; }};
  out["normal=>closed"] = {
      "normally preordered but not closed preordered",
      [](const FiniteSpace& s) { return is_normally_preordered(s).holds; },
      [](const FiniteSpace& s) { return is_closed_preordered(s).holds; }};
  out["closed=>normal"] = {
      "closed preordered but not normally preordered",
      [](const FiniteSpace& s) { return is_closed_preordered(s).holds; },
      [](const FiniteSpace& s) { return is_normally_preordered(s).holds; }};
  out["convex=>closed"] = {
      "convex but not closed preordered",
      [](const FiniteSpace& s) { return is_convex(s).holds; },
      [](const FiniteSpace& s) { return is_closed_preordered(s).holds; }};
  out["closed=>convex"] = {
      "closed preordered but not convex",
      [](const FiniteSpace& s) { return is_closed_preordered(s).holds; },
      [](const FiniteSpace& s) { return is_convex(s).holds; }};
  out["regular=>completely-regular"] = {
      "regularly preordered but not completely regularly preordered",
      [](const FiniteSpace& s) { return is_regularly_preordered(s).holds; },
      [](const FiniteSpace& s) { return is_completely_regular_preordered(s).holds; }};
  out["completely-regular=>regular"] = {
      "completely regularly preordered but not regularly preordered",
      [](const FiniteSpace& s) { return is_completely_regular_preordered(s).holds; },
      [](const FiniteSpace& s) { return is_regularly_preordered(s).holds; }};
  out["convex-and-normal=>completely-regular"] = {
      "convex and normally preordered but not completely regularly preordered",
      [](const FiniteSpace& s) {
        return is_convex(s).holds && is_normally_preordered(s).holds;
      },
      [](const FiniteSpace& s) { return is_completely_regular_preordered(s).holds; }};
  out["completely-regular=>convex-and-closed"] = {
      "completely regularly preordered but not both convex and closed",
      [](const FiniteSpace& s) { return is_completely_regular_preordered(s).holds; },
      [](const FiniteSpace& s) {
        return is_convex(s).holds && is_closed_preordered(s).holds;
      }};
  out["completely-regular=>i-space"] = {
      "completely regularly preordered but not an I-space",
      [](const FiniteSpace& s) { return is_completely_regular_preordered(s).holds; },
      [](const FiniteSpace& s) { return is_i_space(s).holds; }};
  out["admissible=>strictly-admissible"] = {
      "admissibly metrizable but the canonical metric is not strictly admissible",
      [](const FiniteSpace& s) { return is_completely_regular_preordered(s).holds; },
      [](const FiniteSpace& s) {
        AdmissibilityVerdict v = is_strictly_admissible(s, metrize(s));
        return v.admissible && v.strict;
      }};
  return out;
}

}  // namespace

std::vector<std::string> known_implications() {
  std::vector<std::string> out;
  for (const auto& [id, imp] : implication_registry()) out.push_back(id);
  return out;
}

SearchResult search_counterexamples(const std::string& implication_id, long budget) {
  const auto registry = implication_registry();
  auto it = registry.find(implication_id);
  if (it == registry.end())
    throw UnknownSuiteError("unknown implication '" + implication_id + "'");
  const Implication& imp = it->second;
  SearchResult out;
  out.implication = implication_id;
  out.budget = budget;
  auto consider = [&](const FiniteSpace& space) -> bool {
    if (out.checked >= budget) return true;
    ++out.checked;
    if (imp.premise(space) && !imp.conclusion(space)) {
      out.found = true;
      out.witness = space_artifact(space);
      out.witness_detail = imp.description + " (" + space.name + ")";
      return true;
    }
    return false;
  };
  for (int n = 1; n <= 4 && !out.found && out.checked < budget; ++n) {
    InstanceStream st(StreamSpec::exhaustive(n));
    for (long i = 0; i < st.total(); ++i) {
      if (consider(st.at(i))) break;
    }
  }
  for (long i = 0; !out.found && out.checked < budget; ++i) {
    consider(random_space(5, mix_seed(kSearchSeed, i)));
  }
  return out;
}

void write_report(std::ostream& os, const SuiteResult& result) {
  nlohmann::json header;
  header["type"] = "suite";
  header["suite"] = result.suite;
  header["stream"] = stream_to_json(result.stream);
  header["theorem"] = result.theorem_suite;
  os << header.dump() << "\n";
  for (const InstanceVerdict& v : result.verdicts) {
    nlohmann::json line;
    line["type"] = "verdict";
    line["index"] = v.index;
    line["pass"] = v.pass;
    if (v.finding) line["finding"] = true;
    if (!v.detail.empty()) line["detail"] = v.detail;
    if (!v.artifact.is_null() && !v.artifact.empty()) line["artifact"] = v.artifact;
    os << line.dump() << "\n";
  }
  nlohmann::json summary;
  summary["type"] = "summary";
  summary["checked"] = result.checked;
  summary["failures"] = result.failure_count();
  summary["findings"] = result.finding_count();
  summary["wall_seconds"] = result.wall_seconds;
  os << summary.dump() << "\n";
}

ReplayOutcome replay_report(std::istream& is) {
  ReplayOutcome out;
  std::string line;
  nlohmann::json header;
  std::map<long, std::pair<bool, bool>> recorded;  // index -> (pass, finding)
  long recorded_failures = -1;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    nlohmann::json j = nlohmann::json::parse(line);
    const std::string type = j.value("type", "");
    if (type == "suite") {
      header = j;
    } else if (type == "verdict") {
      recorded[j.at("index").get<long>()] = {j.at("pass").get<bool>(), j.value("finding", false)};
      ++out.lines;
    } else if (type == "summary") {
      recorded_failures = j.value("failures", long(-1));
    } else {
      out.notes.push_back("unrecognized report line type '" + type + "'");
    }
  }
  if (header.is_null()) {
    out.notes.push_back("report has no suite header");
    ++out.mismatches;
    return out;
  }
  out.suite = header.value("suite", "");
  SuiteResult rerun = run_suite(out.suite, stream_from_json(header.at("stream")), 1);
  for (const InstanceVerdict& v : rerun.verdicts) {
    auto it = recorded.find(v.index);
    if (it == recorded.end()) {
      out.notes.push_back("index " + std::to_string(v.index) + " missing from the report");
      ++out.mismatches;
      continue;
    }
    if (it->second.first != v.pass || it->second.second != v.finding) {
      out.notes.push_back("index " + std::to_string(v.index) + " verdict changed on replay");
      ++out.mismatches;
    }
  }
  if (static_cast<long>(recorded.size()) != static_cast<long>(rerun.verdicts.size())) {
    out.notes.push_back("line count differs from the re-run instance count");
    ++out.mismatches;
  }
  if (recorded_failures >= 0 && recorded_failures != rerun.failure_count()) {
    out.notes.push_back("summary failure count differs on replay");
    ++out.mismatches;
  }
  return out;
}

}  // namespace ordtop
