#include "niceturan/alignment.hpp"
#include "niceturan/canonical.hpp"
#include "niceturan/catalog.hpp"
#include "niceturan/claims.hpp"
#include "niceturan/constructions.hpp"
#include "niceturan/copies.hpp"
#include "niceturan/errors.hpp"
#include "niceturan/families.hpp"
#include "niceturan/graph6.hpp"
#include "niceturan/notation.hpp"
#include "niceturan/report_json.hpp"
#include "niceturan/search.hpp"
#include "niceturan/symmetrize.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace niceturan;

namespace
{
    auto to_python(const Json & json) -> py::object
    {
        return py::module_::import("json").attr("loads")(json.dump());
    }

    auto to_fraction(const Rational & r) -> py::object
    {
        return py::module_::import("fractions").attr("Fraction")(to_string(r));
    }

    // Patterns are given either in the pattern notation or as a Graph.
    auto as_pattern(const py::object & object) -> Pattern
    {
        if (py::isinstance<py::str>(object))
            return parse_pattern(object.cast<std::string>());
        return Pattern(object.cast<Graph>());
    }

    auto as_objective(const std::string & text) -> Objective
    {
        return parse_objective(text);
    }

    auto search_options(int jobs, std::size_t witness_cap, int max_n) -> SearchOptions
    {
        SearchOptions options;
        options.jobs = jobs;
        options.witness_cap = witness_cap;
        options.limits.max_canonical_n = max_n;
        return options;
    }
}

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Nice copies, generalized Turan numbers and Zykov symmetrisation for small graphs";
    m.attr("__version__") = tool_version();

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<GuardError>(m, "GuardError", PyExc_RuntimeError);
    py::register_exception<InternalError>(m, "InternalError", PyExc_AssertionError);

    py::class_<Graph>(m, "Graph")
        .def(py::init<int>(), py::arg("n") = 0)
        .def(py::init(&Graph::from_edges), py::arg("n"), py::arg("edges"))
        .def_static("from_graph6", [](const std::string & text) { return from_graph6(text); })
        .def("to_graph6", [](const Graph & g) { return to_graph6(g); })
        .def_property_readonly("order", &Graph::order)
        .def("edge_count", &Graph::edge_count)
        .def("edges", &Graph::edges)
        .def("adjacent", &Graph::adjacent)
        .def("degree", &Graph::degree)
        .def("neighbours", [](const Graph & g, int v) { return VertexSet{g.neighbours(v)}.members(); })
        .def("add_edge", &Graph::add_edge)
        .def("remove_edge", &Graph::remove_edge)
        .def("complement", &Graph::complement)
        .def("relabeled", &Graph::relabeled)
        .def("__eq__", &Graph::operator==)
        .def("__repr__", [](const Graph & g) { return "Graph.from_graph6('" + to_graph6(g) + "')"; });

    m.def("parse_pattern", [](const std::string & text) { return parse_pattern(text).graph(); },
          "Graph described by pattern notation such as K(2,3), P4, C5, B2 or theta(3,2)");
    m.def("complete_graph", &complete_graph);
    m.def("path_graph", &path_graph);
    m.def("cycle_graph", &cycle_graph);
    m.def("complete_multipartite", &complete_multipartite);
    m.def("turan_graph", &turan_graph);
    m.def("book_graph", &book_graph);
    m.def("theta_graph", &theta_graph);

    m.def("canonical_form", &canonical_form);
    m.def("automorphism_count", &automorphism_count);
    m.def("are_isomorphic", &are_isomorphic);
    m.def("nonisomorphic_graphs", [](int n) { return nonisomorphic_graphs(n); });

    m.def("count_copies", [](const py::object & h, const Graph & g) { return count_copies(as_pattern(h), g); });
    m.def("count_induced", [](const py::object & h, const Graph & g) { return count_induced(as_pattern(h), g); });
    m.def("copy_sets", [](const py::object & h, const Graph & g) {
        py::dict out;
        for (auto [s, c] : enumerate_copy_sets(as_pattern(h), g))
            out[py::int_(s.bits())] = c;
        return out;
    }, "Vertex-set bitmask -> number of copies on it");

    m.def("is_nice", [](std::uint64_t set, const py::object & f, const Graph & g) {
        auto check = is_nice(VertexSet{set}, as_pattern(f), g);
        py::object witness = py::none();
        if (check.witness)
            witness = py::int_(check.witness->bits());
        return py::make_tuple(check.nice, witness);
    });
    m.def("nice_count", [](const py::object & h, const py::object & f, const Graph & g) {
        auto hp = as_pattern(h);
        auto fp = as_pattern(f);
        return to_python(niceness_json(nice_count(hp, fp, g), hp, fp, g));
    });
    m.def("strongly_nice_count", [](const py::object & h, const py::object & f, const Graph & g) {
        return strongly_nice_count(as_pattern(h), as_pattern(f), g);
    });

    m.def("exhaustive_max",
          [](int n, const py::object & h, const py::object & f, const std::string & mode, bool oracle, int jobs,
             std::size_t witness_cap, int max_n) {
              auto options = search_options(jobs, witness_cap, max_n);
              SearchRecord record;
              {
                  py::gil_scoped_release release;
                  record = exhaustive_max(n, as_pattern(h), as_pattern(f), parse_search_mode(mode),
                                          oracle ? GeneratorKind::labeled : GeneratorKind::canonical, options);
              }
              return to_python(search_record_json(record));
          },
          py::arg("n"), py::arg("h"), py::arg("f"), py::arg("mode") = "nice", py::arg("oracle") = false,
          py::arg("jobs") = 1, py::arg("witness_cap") = 100, py::arg("max_n") = 10);

    m.def("objective_value", [](const Graph & g, const std::string & objective) {
        return to_fraction(objective_value(g, as_objective(objective)));
    });
    m.def("d_star", [](int v, const Graph & g, const std::string & objective) {
        return to_fraction(d_star(v, g, as_objective(objective)));
    });
    m.def("symmetrize_step", &symmetrize_step);
    m.def("run_zykov",
          [](const Graph & g, const std::string & objective, bool trace) {
              return to_python(trace_json(run_zykov(g, as_objective(objective)), trace));
          },
          py::arg("g"), py::arg("objective"), py::arg("trace") = true);
    m.def("profile_optimize", [](int n, const std::string & objective) {
        auto best = profile_optimize(n, as_objective(objective));
        py::dict out;
        out["parts"] = best.profile.parts();
        out["value"] = to_fraction(best.value);
        out["graph"] = best.graph;
        return out;
    });
    m.def("count_kab_in_kst", &count_kab_in_kst);
    m.def("best_bipartite_split", &best_bipartite_split);
    m.def("nice_kk_in_multipartite",
          [](const std::vector<int> & parts, int k) { return nice_kk_in_multipartite(PartitionProfile(parts), k); });

    m.def("path_blowup", [](int k, int mm) { return to_python(construction_json(path_blowup(k, mm))); });
    m.def("double_one_side", [](const Graph & g, std::uint64_t side) {
        return to_python(construction_json(double_one_side(g, VertexSet{side})));
    });
    m.def("certify_path_blowup", [](int k, int mm, const py::object & h, const py::object & f) {
        return to_python(certification_json(certify(path_blowup(k, mm), as_pattern(h), as_pattern(f))));
    });
    m.def("certify_double_one_side",
          [](const Graph & g, std::uint64_t side, const py::object & h, const py::object & f) {
              return to_python(
                  certification_json(certify(double_one_side(g, VertexSet{side}), as_pattern(h), as_pattern(f))));
          });

    m.def("claim_ids", [] {
        std::vector<std::string> ids;
        for (const auto & info : claim_registry())
            ids.push_back(info.id);
        return ids;
    });
    m.def("verify_claim",
          [](const std::string & id, int max_n, int samples, std::uint64_t seed, int jobs) {
              ClaimOptions options{max_n, samples, seed, jobs};
              ClaimResult result;
              {
                  py::gil_scoped_release release;
                  result = verify_claim(id, options);
              }
              py::dict out;
              out["id"] = result.id;
              out["passed"] = result.passed;
              out["details"] = to_python(result.details);
              return out;
          },
          py::arg("id"), py::arg("max_n") = 6, py::arg("samples") = 500, py::arg("seed") = 1, py::arg("jobs") = 1);
}
