#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "ordtop/errors.hpp"
#include "ordtop/harness.hpp"
#include "ordtop/hilbert.hpp"
#include "ordtop/io.hpp"
#include "ordtop/quniform.hpp"
#include "ordtop/synthesis.hpp"

namespace py = pybind11;
using nlohmann::json;

namespace {

py::object json_to_py(const json& j) {
  switch (j.type()) {
    case json::value_t::null:
      return py::none();
    case json::value_t::boolean:
      return py::bool_(j.get<bool>());
    case json::value_t::number_integer:
      return py::int_(j.get<long long>());
    case json::value_t::number_unsigned:
      return py::int_(j.get<unsigned long long>());
    case json::value_t::number_float:
      return py::float_(j.get<double>());
    case json::value_t::string:
      return py::str(j.get<std::string>());
    case json::value_t::array: {
      py::list out;
      for (const json& item : j) out.append(json_to_py(item));
      return out;
    }
    case json::value_t::object: {
      py::dict out;
      for (auto it = j.begin(); it != j.end(); ++it)
        out[py::str(it.key())] = json_to_py(it.value());
      return out;
    }
    default:
      throw std::invalid_argument("unsupported json value");
  }
}

json py_to_json(const py::handle& h) {
  if (h.is_none()) return nullptr;
  if (py::isinstance<py::bool_>(h)) return h.cast<bool>();
  if (py::isinstance<py::int_>(h)) return h.cast<long long>();
  if (py::isinstance<py::float_>(h)) return h.cast<double>();
  if (py::isinstance<py::str>(h)) return h.cast<std::string>();
  if (py::isinstance<py::list>(h) || py::isinstance<py::tuple>(h)) {
    json out = json::array();
    for (const py::handle& item : h) out.push_back(py_to_json(item));
    return out;
  }
  if (py::isinstance<py::dict>(h)) {
    json out = json::object();
    for (const auto& item : h.cast<py::dict>())
      out[item.first.cast<std::string>()] = py_to_json(item.second);
    return out;
  }
  throw std::invalid_argument("unsupported python value for json conversion");
}

ordtop::FiniteSpace space_arg(const py::dict& d, bool strict = false) {
  return ordtop::space_from_json(py_to_json(d), strict);
}

ordtop::Qpm qpm_arg(const py::dict& d) { return ordtop::qpm_from_json(py_to_json(d)); }

ordtop::FnFamily family_arg(const py::list& l) {
  return ordtop::family_from_json(py_to_json(l));
}

ordtop::StreamSpec stream_arg(const py::object& stream, const std::string& suite_id) {
  if (stream.is_none()) return ordtop::default_stream(suite_id);
  return ordtop::stream_from_json(py_to_json(stream));
}

}  // namespace

PYBIND11_MODULE(_ordtop, m) {
  m.doc() = "finite topological preordered spaces: property checks, "
            "quasi-pseudo-metrics, cube embeddings, and theorem suites";

  py::register_exception<ordtop::NotCompletelyRegularError>(m, "NotCompletelyRegularError");
  py::register_exception<ordtop::NotAntisymmetricError>(m, "NotAntisymmetricError");
  py::register_exception<ordtop::NotAdmissibleError>(m, "NotAdmissibleError");

  m.def(
      "property_report",
      [](const py::dict& space, bool strict) {
        return json_to_py(
            ordtop::property_report_to_json(ordtop::property_report(space_arg(space, strict))));
      },
      py::arg("space"), py::arg("strict") = false,
      "Order/topology property verdicts for an instance dict.");

  m.def(
      "metrize",
      [](const py::dict& space) {
        ordtop::FiniteSpace s = space_arg(space);
        return json_to_py(ordtop::qpm_to_json(ordtop::metrize(s)));
      },
      py::arg("space"),
      "Canonical admissible quasi-pseudo-metric of a completely regular instance.");

  m.def(
      "is_admissible",
      [](const py::dict& space, const py::dict& matrix, bool strict) {
        ordtop::FiniteSpace s = space_arg(space);
        ordtop::Qpm p = qpm_arg(matrix);
        return json_to_py(ordtop::admissibility_to_json(
            strict ? ordtop::is_strictly_admissible(s, p) : ordtop::is_admissible(s, p)));
      },
      py::arg("space"), py::arg("matrix"), py::arg("strict") = false,
      "Admissibility report of a matrix for an instance.");

  m.def(
      "separating_family",
      [](const py::dict& space) {
        return json_to_py(ordtop::family_to_json(ordtop::separating_family(space_arg(space))));
      },
      py::arg("space"),
      "Indicator functions of the nontrivial clopen increasing sets.");

  m.def(
      "embed",
      [](const py::dict& space) {
        ordtop::Embedding emb = ordtop::embed(space_arg(space));
        json out;
        out["embedding"] = ordtop::embedding_to_json(emb);
        out["order_embedding"] = ordtop::verdict_to_json(ordtop::verify_order_embedding(emb));
        return json_to_py(out);
      },
      py::arg("space"), "Coordinate embedding of an ordered instance into the cube.");

  m.def(
      "strict_embed",
      [](const py::dict& space, const py::object& matrix) {
        ordtop::FiniteSpace s = space_arg(space);
        ordtop::Qpm p =
            matrix.is_none() ? ordtop::metrize(s) : qpm_arg(matrix.cast<py::dict>());
        ordtop::Embedding emb = ordtop::strict_embed(s, p);
        json out;
        out["embedding"] = ordtop::embedding_to_json(emb);
        out["order_embedding"] = ordtop::verdict_to_json(ordtop::verify_order_embedding(emb));
        out["order_subspace"] = ordtop::verdict_to_json(ordtop::verify_order_subspace(emb));
        return json_to_py(out);
      },
      py::arg("space"), py::arg("matrix") = py::none(),
      "Interleaved embedding with the order-subspace verification.");

  m.def(
      "product",
      [](const py::list& factors) {
        std::vector<ordtop::MetrizedSpace> fs;
        for (const py::handle& f : factors) {
          py::dict d = f.cast<py::dict>();
          ordtop::MetrizedSpace ms;
          ms.space = space_arg(d["space"].cast<py::dict>());
          ms.metric = qpm_arg(d["matrix"].cast<py::dict>());
          fs.push_back(std::move(ms));
        }
        ordtop::MetrizedSpace prod = ordtop::product(fs);
        json out;
        out["space"] = ordtop::space_to_json(prod.space);
        out["matrix"] = ordtop::qpm_to_json(prod.metric);
        return json_to_py(out);
      },
      py::arg("factors"),
      "Weighted product of {'space', 'matrix'} factor dicts.");

  m.def(
      "quniform_check",
      [](const py::dict& space, const py::list& family) {
        ordtop::FiniteSpace s = space_arg(space);
        ordtop::FnFamily f = family_arg(family);
        ordtop::EntourageBase uniformity =
            ordtop::base_from_qpm(ordtop::symmetrize(ordtop::metrize_from_family(s, f)));
        return json_to_py(
            ordtop::round_trip_to_json(ordtop::uniformity_round_trip(s, uniformity, f)));
      },
      py::arg("space"), py::arg("family"),
      "Round-trips a function family through its weak quasi-uniformity.");

  m.def("known_suites", [] { return ordtop::known_suites(); });
  m.def("known_implications", [] { return ordtop::known_implications(); });

  m.def(
      "run_suite",
      [](const std::string& suite_id, const py::object& stream, int jobs) {
        ordtop::SuiteResult r =
            ordtop::run_suite(suite_id, stream_arg(stream, suite_id), jobs);
        json out;
        out["suite"] = r.suite;
        out["stream"] = ordtop::stream_to_json(r.stream);
        out["theorem"] = r.theorem_suite;
        out["checked"] = r.checked;
        out["failures"] = r.failure_count();
        out["findings"] = r.finding_count();
        out["wall_seconds"] = r.wall_seconds;
        json details = json::array();
        for (const ordtop::InstanceVerdict& v : r.verdicts) {
          if (v.pass && !v.finding) continue;
          json line;
          line["index"] = v.index;
          line["pass"] = v.pass;
          line["finding"] = v.finding;
          line["detail"] = v.detail;
          if (!v.artifact.is_null() && !v.artifact.empty()) line["artifact"] = v.artifact;
          details.push_back(std::move(line));
        }
        out["details"] = std::move(details);
        return json_to_py(out);
      },
      py::arg("suite_id"), py::arg("stream") = py::none(), py::arg("jobs") = 1,
      "Runs a theorem suite or probe; stream defaults per suite. The "
      "stream dict uses keys mode/n/seed/count.");

  m.def(
      "search",
      [](const std::string& implication, long budget) {
        ordtop::SearchResult r = ordtop::search_counterexamples(implication, budget);
        json out;
        out["implication"] = r.implication;
        out["budget"] = r.budget;
        out["checked"] = r.checked;
        out["found"] = r.found;
        if (r.found) {
          out["witness"] = r.witness;
          out["detail"] = r.witness_detail;
        }
        return json_to_py(out);
      },
      py::arg("implication"), py::arg("budget") = 2000,
      "Searches the instance catalogue for a counterexample.");

  m.attr("__version__") = "0.1.0";
}
