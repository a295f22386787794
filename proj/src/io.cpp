#include "ordtop/io.hpp"

#include <fstream>
#include <stdexcept>

namespace ordtop {

json space_to_json(const FiniteSpace& space) {
  json j;
  j["n"] = space.n;
  json opens = json::array();
  for (Mask o : space.opens) opens.push_back(points_of(o));
  j["opens"] = std::move(opens);
  json leq = json::array();
  for (auto [a, b] : relation_pairs(space.leq)) {
    if (a != b) leq.push_back(json::array({a, b}));
  }
  j["leq"] = std::move(leq);
  if (!space.name.empty()) j["name"] = space.name;
  return j;
}

FiniteSpace space_from_json(const json& j, bool strict) {
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
    throw std::invalid_argument("instance: expected an object with an integer field 'n'");
  const int n = j["n"].get<int>();
  SetFamily opens;
  if (j.contains("opens")) {
    if (!j["opens"].is_array()) throw std::invalid_argument("instance: 'opens' must be an array");
    for (const json& set : j["opens"]) {
      if (!set.is_array()) throw std::invalid_argument("instance: each open set must be an array");
      Mask m = 0;
      for (const json& pt : set) {
        if (!pt.is_number_integer())
          throw std::invalid_argument("instance: open set members must be integers");
        const int x = pt.get<int>();
        if (x < 0 || x >= n) throw std::invalid_argument("instance: open set point out of range");
        m |= point_bit(x);
      }
      opens.push_back(m);
    }
  }
  std::vector<std::pair<int, int>> pairs;
  if (j.contains("leq")) {
    if (!j["leq"].is_array()) throw std::invalid_argument("instance: 'leq' must be an array");
    for (const json& pr : j["leq"]) {
      if (!pr.is_array() || pr.size() != 2 || !pr[0].is_number_integer() ||
          !pr[1].is_number_integer())
        throw std::invalid_argument("instance: each leq entry must be a pair of integers");
      pairs.emplace_back(pr[0].get<int>(), pr[1].get<int>());
    }
  }
  std::string name = j.value("name", std::string());
  return make_space(n, std::move(opens), pairs, strict, std::move(name));
}

json rational_to_json(const Rational& value) { return format_rational(value); }

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw std::invalid_argument("rational: expected an integer or an 'a/b' string");
}

json qpm_to_json(const Qpm& p) {
  json j;
  j["n"] = p.n;
  json rows = json::array();
  for (int x = 0; x < p.n; ++x) {
    json row = json::array();
    for (int y = 0; y < p.n; ++y) row.push_back(rational_to_json(p.at(x, y)));
    rows.push_back(std::move(row));
  }
  j["m"] = std::move(rows);
  return j;
}

Qpm qpm_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer() || !j.contains("m") ||
      !j["m"].is_array())
    throw std::invalid_argument("matrix: expected an object with fields 'n' and 'm'");
  const int n = j["n"].get<int>();
  if (n < 0 || n > kMaxPoints) throw std::invalid_argument("matrix: n out of range");
  if (static_cast<int>(j["m"].size()) != n)
    throw std::invalid_argument("matrix: 'm' must have n rows");
  Qpm p(n);
  for (int x = 0; x < n; ++x) {
    const json& row = j["m"][x];
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      throw std::invalid_argument("matrix: each row must have n entries");
    for (int y = 0; y < n; ++y) p.at(x, y) = rational_from_json(row[y]);
  }
  return p;
}

json family_to_json(const FnFamily& family) {
  json j = json::array();
  for (const IsotoneFn& f : family.fns) {
    json values = json::array();
    for (const Rational& v : f.values) values.push_back(rational_to_json(v));
    j.push_back(std::move(values));
  }
  return j;
}

FnFamily family_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("family: expected a top-level array");
  FnFamily family;
  for (const json& values : j) {
    if (!values.is_array())
      throw std::invalid_argument("family: each member must be an array of values");
    IsotoneFn f;
    for (const json& v : values) f.values.push_back(rational_from_json(v));
    family.fns.push_back(std::move(f));
  }
  return family;
}

json verdict_to_json(const Verdict& v) {
  json j;
  j["holds"] = v.holds;
  if (!v.holds) j["witness"] = v.witness;
  return j;
}

json property_report_to_json(const PropertyReport& report) {
  json j;
  j["semiclosed"] = verdict_to_json(report.semiclosed);
  j["closed_preordered"] = verdict_to_json(report.closed_preordered);
  j["convex"] = verdict_to_json(report.convex);
  j["normally_preordered"] = verdict_to_json(report.normally_preordered);
  j["regularly_preordered"] = verdict_to_json(report.regularly_preordered);
  j["completely_regular"] = verdict_to_json(report.completely_regular);
  j["i_space"] = verdict_to_json(report.i_space);
  return j;
}

json admissibility_to_json(const AdmissibilityVerdict& verdict) {
  json j;
  j["admissible"] = verdict.admissible;
  j["strict"] = verdict.strict;
  j["failures"] = verdict.failures;
  return j;
}

json family_conditions_to_json(const FamilyConditions& conditions) {
  json j;
  j["initial_topology"] = verdict_to_json(conditions.initial_topology);
  j["preorder_match"] = verdict_to_json(conditions.preorder_match);
  return j;
}

json embedding_to_json(const Embedding& embedding) {
  json j;
  j["dimension"] = embedding.dimension;
  json image = json::array();
  for (const CubePoint& pt : embedding.image) {
    json coords = json::array();
    for (const Rational& c : pt) coords.push_back(rational_to_json(c));
    image.push_back(std::move(coords));
  }
  j["image"] = std::move(image);
  return j;
}

json round_trip_to_json(const UniformityRoundTrip& report) {
  json j;
  switch (report.status) {
    case CheckStatus::ok:
      j["status"] = "ok";
      break;
    case CheckStatus::fail:
      j["status"] = "fail";
      break;
    case CheckStatus::skip:
      j["status"] = "skip";
      break;
  }
  if (!report.precondition_witness.empty()) j["precondition"] = report.precondition_witness;
  j["star_matches"] = report.star_matches;
  j["core_matches"] = report.core_matches;
  if (!report.star_witness.empty()) j["star_witness"] = report.star_witness;
  if (!report.core_witness.empty()) j["core_witness"] = report.core_witness;
  return j;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  json j;
  in >> j;
  return j;
}

void save_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << "\n";
}

FiniteSpace load_space(const std::string& path, bool strict) {
  return space_from_json(load_json_file(path), strict);
}

Qpm load_qpm(const std::string& path) { return qpm_from_json(load_json_file(path)); }

FnFamily load_family(const std::string& path) { return family_from_json(load_json_file(path)); }

}  // namespace ordtop
