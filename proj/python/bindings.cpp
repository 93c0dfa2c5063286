#include "chutes/bounds.hpp"
#include "chutes/error.hpp"
#include "chutes/modgraph.hpp"
#include "chutes/path.hpp"
#include "chutes/rows.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;

// Python int <-> BigInt through decimal strings.
namespace pybind11::detail {
template <>
struct type_caster<chutes::BigInt> {
  PYBIND11_TYPE_CASTER(chutes::BigInt, const_name("int"));

  bool load(handle src, bool) {
    if (!src || !PyLong_Check(src.ptr())) return false;
    value = chutes::BigInt(py::str(src).cast<std::string>());
    return true;
  }

  static handle cast(const chutes::BigInt& v, return_value_policy, handle) {
    const std::string text = v.str();
    return PyLong_FromString(text.c_str(), nullptr, 10);
  }
};
}  // namespace pybind11::detail

namespace {

using namespace chutes;

py::list segments_to_list(const Labels& labels) {
  py::list out;
  for (const auto& s : labels.segments()) out.append(py::make_tuple(std::string(to_string(s.kind)), s.repeat));
  return out;
}

py::list segments_to_list(const std::vector<Segment>& segments) {
  py::list out;
  for (const auto& s : segments) out.append(py::make_tuple(std::string(to_string(s.kind)), s.repeat));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Rows, first appearances, path bounds and power-map graphs";

  py::register_exception<CertificationError>(m, "CertificationError");
  py::register_exception<ResourceLimitError>(m, "ResourceLimitError");
  py::register_exception<InvalidDownStep>(m, "InvalidDownStep", PyExc_ValueError);

  py::class_<ProblemParams>(m, "Params")
      .def(py::init([](std::uint64_t d, unsigned e, std::uint64_t r) {
             ProblemParams p{d, e, r};
             p.validate();
             return p;
           }),
           py::arg("d") = 5, py::arg("e") = 2, py::arg("r") = 2)
      .def_readonly("d", &ProblemParams::d)
      .def_readonly("e", &ProblemParams::e)
      .def_readonly("r", &ProblemParams::r)
      .def("__repr__", [](const ProblemParams& p) {
        return "Params(d=" + std::to_string(p.d) + ", e=" + std::to_string(p.e) + ", r=" + std::to_string(p.r) + ")";
      });

  m.def(
      "generate_rows",
      [](const ProblemParams& params, std::uint64_t count, std::optional<BigInt> cutoff) {
        std::vector<std::vector<BigInt>> out;
        for (auto& row : rows::generate_rows(params, count, cutoff)) out.push_back(std::move(row.entries));
        return out;
      },
      py::arg("params"), py::arg("count"), py::arg("cutoff") = py::none());

  m.def(
      "first_appearances",
      [](const ProblemParams& params, const std::set<BigInt>& targets, std::uint64_t max_rows,
         std::optional<BigInt> cutoff) {
        const BigInt cut = cutoff ? *cutoff : bounds::certified_cutoff(params, *targets.rbegin(), max_rows);
        const auto report = rows::first_appearances(params, targets, max_rows, cut);
        py::dict out;
        for (const auto& [x, fa] : report.found) {
          out[py::cast(x)] = py::make_tuple(fa.row_index, fa.witness.labels.str());
        }
        return out;
      },
      py::arg("params"), py::arg("targets"), py::arg("max_rows") = 150, py::arg("cutoff") = py::none(),
      "Map each reached target to (a(x), witness labels).");

  m.def("certified_cutoff", &bounds::certified_cutoff, py::arg("params"), py::arg("max_target"),
        py::arg("max_rows"));
  m.def("howmax_bound", &bounds::howmax_bound, py::arg("half_length"));
  m.def(
      "path_max_bound",
      [](const BigInt& x, const BigInt& y, std::uint64_t half_length, const ProblemParams& params) {
        const bounds::BoundQuery q{x, y, half_length, params};
        return params.is_putnam_shape() ? bounds::path_max_bound(q).max : bounds::general_path_max_bound(q).max;
      },
      py::arg("x"), py::arg("y"), py::arg("half_length"), py::arg("params") = ProblemParams{});
  m.def(
      "belt_endpoint_bound",
      [](std::uint64_t budget) {
        const auto b = bounds::belt_endpoint_bound(budget);
        return py::make_tuple(b.class1, b.class4);
      },
      py::arg("step_budget"));

  m.def(
      "decompose", [](const std::string& labels) { return segments_to_list(decompose(labels)); },
      py::arg("labels"));
  m.def(
      "evaluate_path",
      [](const BigInt& start, const std::string& labels, const ProblemParams& params) {
        return evaluate_path(PathWitness{start, Labels::parse(labels)}, params);
      },
      py::arg("start"), py::arg("labels"), py::arg("params") = ProblemParams{});
  m.def(
      "connecting_path",
      [](const BigInt& x, const BigInt& y) {
        const auto path = connecting_path(x, y, ProblemParams{});
        const auto summary = walk_path(path, ProblemParams{});
        py::dict out;
        out["start"] = py::cast(path.start);
        out["end"] = py::cast(summary.end);
        out["edges"] = summary.edge_count;
        out["max_vertex"] = py::cast(summary.max_vertex);
        out["segments"] = segments_to_list(path.labels);
        return out;
      },
      py::arg("x"), py::arg("y"));
  m.def("check_uudd_infeasible", &check_uudd_infeasible, py::arg("params"), py::arg("x_max"));

  m.def(
      "count_components",
      [](std::uint64_t p, unsigned e) {
        return py::make_tuple(modgraph::count_components_formula(p, e).count,
                              modgraph::count_components_traversal(modgraph::build_power_graph(p, e)));
      },
      py::arg("p"), py::arg("e"), "(formula count, traversal count)");
  m.def(
      "is_maximal",
      [](const ProblemParams& params) {
        const auto v = modgraph::is_maximal(params);
        return py::make_tuple(v.maximal, v.reason);
      },
      py::arg("params"));
  m.def(
      "classify_prime",
      [](std::uint64_t p) {
        const auto c = modgraph::classify_prime(p);
        py::dict out;
        out["p"] = c.p;
        out["fermat_like_base"] = c.fermat_like_base;
        out["base_exponent"] = c.base_exponent;
        out["p_minus_1_squarefree"] = c.p_minus_1_squarefree;
        return out;
      },
      py::arg("p"));
  m.def(
      "to_dot", [](std::uint64_t p, unsigned e) { return modgraph::to_dot(modgraph::build_power_graph(p, e)); },
      py::arg("p"), py::arg("e"));
}
