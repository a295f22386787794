#pragma once

#include <string>

#include <json.hpp>

#include "ordtop/hilbert.hpp"
#include "ordtop/isotone.hpp"
#include "ordtop/qpm.hpp"
#include "ordtop/quniform.hpp"
#include "ordtop/space.hpp"
#include "ordtop/synthesis.hpp"

namespace ordtop {

using nlohmann::json;

// Instance files: {"n": int, "opens": [[points]...], "leq": [[a,b]...],
// "name": optional string}. Reflexive leq pairs may be omitted. Lenient
// loading (the default) completes opens to the generated topology and
// leq to its reflexive-transitive closure; strict loading rejects input
// that is not already closed.
json space_to_json(const FiniteSpace& space);
FiniteSpace space_from_json(const json& j, bool strict = false);

// Matrix files: {"n": int, "m": [[entries]...]} with entries written as
// "a/b" strings (integers also accepted on input).
json qpm_to_json(const Qpm& p);
Qpm qpm_from_json(const json& j);

// Family files: a top-level array of per-point value arrays, one per
// function.
json family_to_json(const FnFamily& family);
FnFamily family_from_json(const json& j);

json rational_to_json(const Rational& value);
Rational rational_from_json(const json& j);

json verdict_to_json(const Verdict& v);
json property_report_to_json(const PropertyReport& report);
json admissibility_to_json(const AdmissibilityVerdict& verdict);
json family_conditions_to_json(const FamilyConditions& conditions);
json embedding_to_json(const Embedding& embedding);
json round_trip_to_json(const UniformityRoundTrip& report);

json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const json& j);

FiniteSpace load_space(const std::string& path, bool strict = false);
Qpm load_qpm(const std::string& path);
FnFamily load_family(const std::string& path);

}  // namespace ordtop
