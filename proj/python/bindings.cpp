#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dtg/aux_graph.hpp"
#include "dtg/certificate.hpp"
#include "dtg/errors.hpp"
#include "dtg/graph.hpp"
#include "dtg/oracle.hpp"
#include "dtg/perm.hpp"
#include "dtg/recognize.hpp"

namespace py = pybind11;

// Rationals cross the boundary as fractions.Fraction; ints and "p/q" strings
// are accepted on the way in.
namespace pybind11::detail {
template <>
struct type_caster<dtg::Rational> {
  PYBIND11_TYPE_CASTER(dtg::Rational, const_name("fractions.Fraction"));

  bool load(handle src, bool) {
    if (!src) return false;
    if (!py::isinstance<py::int_>(src) && !py::isinstance<py::str>(src) &&
        !py::isinstance(src, py::module_::import("fractions").attr("Fraction"))) {
      return false;
    }
    try {
      value = dtg::parse_rational(py::str(src).cast<std::string>());
    } catch (const dtg::ParseError&) {
      return false;
    }
    return true;
  }

  static handle cast(const dtg::Rational& r, return_value_policy, handle) {
    return py::module_::import("fractions").attr("Fraction")(dtg::to_string(r)).release();
  }
};
}  // namespace pybind11::detail

using namespace dtg;

namespace {

Graph make_graph(Vertex n, const std::vector<Edge>& edges) { return Graph::from_edges(n, edges); }

py::object orders_or_none(const std::optional<OrderPair>& p) {
  if (!p) return py::none();
  return py::make_tuple(p->first.sequence(), p->second.sequence());
}

}  // namespace

PYBIND11_MODULE(dtg, m) {
  m.doc() = "Double-threshold graph recognition with exact certificates";

  auto base = py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<ContractError>(m, "ContractError", PyExc_ValueError);
  py::register_exception<InternalContradiction>(m, "InternalContradiction", PyExc_RuntimeError);
  (void)base;

  py::class_<Graph>(m, "Graph")
      .def(py::init(&make_graph), py::arg("n"), py::arg("edges") = std::vector<Edge>{})
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("size", &Graph::size)
      .def("adjacent", &Graph::adjacent)
      .def("degree", &Graph::degree)
      .def("neighbors", [](const Graph& g, Vertex v) {
        auto nb = g.neighbors(v);
        return std::vector<Vertex>(nb.begin(), nb.end());
      })
      .def("edges", &Graph::edges)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "<Graph n=" + std::to_string(g.order()) + " m=" + std::to_string(g.size()) + ">";
      });

  m.def("parse_edge_list", &parse_edge_list);
  m.def("format_edge_list", &format_edge_list);
  m.def("parse_graph6", &parse_graph6);
  m.def("encode_graph6", &encode_graph6);
  m.def("parse_graph", &parse_graph_auto, "Edge list or graph6, detected from the first byte");
  m.def("complement", &complement);
  m.def("components", &components);
  m.def("is_threshold", &is_threshold);

  py::class_<WeightCertificate>(m, "WeightCertificate")
      .def(py::init<std::vector<Rational>, Rational, Rational>(), py::arg("weights"), py::arg("lb"), py::arg("ub"))
      .def_readwrite("weights", &WeightCertificate::weights)
      .def_readwrite("lb", &WeightCertificate::lb)
      .def_readwrite("ub", &WeightCertificate::ub)
      .def("to_json", [](const WeightCertificate& c) { return certificate_to_json(c); })
      .def_static("from_json", [](const std::string& s) { return certificate_from_json(s); })
      .def("__eq__", [](const WeightCertificate& a, const WeightCertificate& b) { return a == b; });

  m.def("graph_from_weights", &graph_from_weights);
  m.def(
      "verify_certificate",
      [](const Graph& g, const WeightCertificate& c) {
        const auto r = verify_certificate(g, c);
        return py::make_tuple(r.ok, r.failing_pair ? py::cast(*r.failing_pair) : py::none());
      },
      "(ok, first failing pair or None)");
  m.def("mid_weight_set", &mid_weight_set);
  m.def("is_normalized", &is_normalized);
  m.def(
      "normalize_certificate",
      [](const WeightCertificate& c, const Rational& lb, const Rational& ub) { return normalize_certificate(c, lb, ub); },
      py::arg("cert"), py::arg("lb"), py::arg("ub"));
  m.def("co_threshold_split", &co_threshold_split);

  m.def("permutation_orderings", [](const Graph& g) { return orders_or_none(permutation_orderings(g)); });
  m.def("efficient_max_clique", [](const Graph& g) -> py::object {
    const auto d = transitive_orientation(g);
    if (!d) return py::none();
    return py::cast(efficient_max_clique(g, *d));
  });

  py::class_<RecognitionResult>(m, "RecognitionResult")
      .def_property_readonly("accepted", [](const RecognitionResult& r) { return r.verdict == Verdict::accept; })
      .def_readonly("certificate", &RecognitionResult::certificate)
      .def_property_readonly("witness",
                             [](const RecognitionResult& r) -> py::object {
                               if (!r.witness) return py::none();
                               return py::make_tuple(r.witness->pattern, r.witness->embedding);
                             })
      .def_readonly("reason", &RecognitionResult::reason);
  m.def("recognize", [](const Graph& g) { return recognize(g); });

  m.def("forbidden_scan", [](const Graph& g) {
    std::vector<std::pair<std::string, std::vector<Vertex>>> out;
    for (auto& h : forbidden_scan(g)) out.emplace_back(h.pattern, h.embedding);
    return out;
  });
  m.def("brute_force_dtg", &brute_force_dtg);
  m.def("enumerate_small_graphs", &enumerate_small_graphs);
  m.def(
      "random_certificate",
      [](Vertex n, std::uint64_t seed, const Rational& low, const Rational& high, long denominator) {
        return random_certificate(n, seed, {low, high, denominator});
      },
      py::arg("n"), py::arg("seed"), py::arg("low") = Rational(-1), py::arg("high") = Rational(3),
      py::arg("denominator") = 0);

  auto pat = m.def_submodule("patterns", "Named small graphs");
  pat.def("complete", &patterns::complete);
  pat.def("path", &patterns::path);
  pat.def("cycle", &patterns::cycle);
  pat.def("bull", &patterns::bull);
  pat.def("butterfly", &patterns::butterfly);
  pat.def("gem", &patterns::gem);
  pat.def("house", &patterns::house);
  pat.def("two_k3", &patterns::two_k3);
}
