#include <sstream>

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "proxigraph/be_paths.hpp"
#include "proxigraph/cli.hpp"
#include "proxigraph/error.hpp"
#include "proxigraph/formats.hpp"
#include "proxigraph/instances.hpp"
#include "proxigraph/path_proximinal.hpp"
#include "proxigraph/proximinal.hpp"
#include "proxigraph/sweeps.hpp"

namespace py = pybind11;
using namespace proxigraph;

// Rationals cross the boundary as fractions.Fraction; ints and "p/q" strings
// are accepted on the way in.
namespace pybind11::detail {
template <>
struct type_caster<Rational> {
    PYBIND11_TYPE_CASTER(Rational, const_name("fractions.Fraction"));

    bool load(handle src, bool) {
        if (py::isinstance<py::str>(src)) {
            try {
                value = parse_rational(src.cast<std::string>());
                return true;
            } catch (const Error&) {
                return false;
            }
        }
        if (py::isinstance<py::bool_>(src)) return false;
        if (py::isinstance<py::int_>(src)) {
            value = Rational(src.cast<std::int64_t>());
            return true;
        }
        if (py::hasattr(src, "numerator") && py::hasattr(src, "denominator")) {
            value = Rational(src.attr("numerator").cast<std::int64_t>(), src.attr("denominator").cast<std::int64_t>());
            return true;
        }
        return false;
    }

    static handle cast(const Rational& r, return_value_policy, handle) {
        static py::object fraction = py::module_::import("fractions").attr("Fraction");
        return fraction(r.numerator(), r.denominator()).release();
    }
};
}  // namespace pybind11::detail

namespace {

std::vector<std::pair<Label, Label>> edge_list(const SimpleGraph& g) { return {g.edges().begin(), g.edges().end()}; }

py::dict sweep_dict(const SweepReport& r) {
    py::dict d;
    d["id"] = r.id;
    d["checked"] = r.checked;
    d["counterexample"] = r.counterexample;
    d["details"] = r.details;
    d["passed"] = r.passed();
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Proximinal and path-proximinal graphs over finite semimetric spaces";

    static py::exception<Error> error_type(m, "ProxigraphError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::object exc = py::handle(error_type)(e.what());
            exc.attr("code") = std::string(to_string(e.code()));
            PyErr_SetObject(error_type.ptr(), exc.ptr());
        }
    });

    py::class_<SimpleGraph>(m, "Graph")
        .def(py::init([](const std::vector<Label>& vertices, const std::vector<std::pair<Label, Label>>& edges) {
                 return build_graph(vertices, edges);
             }),
             py::arg("vertices"), py::arg("edges") = std::vector<std::pair<Label, Label>>{})
        .def_property_readonly("vertices", &SimpleGraph::vertices)
        .def_property_readonly("edges", &edge_list)
        .def("order", &SimpleGraph::order)
        .def("size", &SimpleGraph::size)
        .def("degree", &SimpleGraph::degree)
        .def("neighbors", &SimpleGraph::neighbors)
        .def("adjacent", &SimpleGraph::adjacent)
        .def("to_json", [](const SimpleGraph& g) { return graph_to_json(g).dump(); })
        .def_static("from_json", [](const std::string& text) { return graph_from_json(nlohmann::json::parse(text)); })
        .def(py::self == py::self)
        .def("__repr__", [](const SimpleGraph& g) {
            return "<Graph " + std::to_string(g.order()) + " vertices, " + std::to_string(g.size()) + " edges>";
        });

    py::class_<Bipartition>(m, "Bipartition")
        .def(py::init<VertexSet, VertexSet>(), py::arg("a"), py::arg("b"))
        .def_property_readonly("a", &Bipartition::a)
        .def_property_readonly("b", &Bipartition::b)
        .def("swapped", &Bipartition::swapped)
        .def(py::self == py::self)
        .def("__repr__", [](const Bipartition& p) { return "<Bipartition " + partition_to_json(p).dump() + ">"; });

    py::class_<FiniteSemimetricSpace>(m, "Space")
        .def(py::init([](std::vector<Label> points, std::vector<std::vector<Rational>> table) {
                 return build_space(std::move(points), std::move(table));
             }),
             py::arg("points"), py::arg("distances"))
        .def_property_readonly("points", &FiniteSemimetricSpace::points)
        .def_property_readonly("distances", &FiniteSemimetricSpace::table)
        .def("distance", py::overload_cast<const Label&, const Label&>(&FiniteSemimetricSpace::distance, py::const_))
        .def("to_json", [](const FiniteSemimetricSpace& s) { return space_to_json(s).dump(); })
        .def_static("from_json", [](const std::string& text) { return space_from_json(nlohmann::json::parse(text)); })
        .def(py::self == py::self)
        .def("__len__", &FiniteSemimetricSpace::size);

    py::class_<PathProximinalCertificate>(m, "Certificate")
        .def_readonly("graph", &PathProximinalCertificate::graph)
        .def_readonly("parts", &PathProximinalCertificate::parts)
        .def_readonly("space", &PathProximinalCertificate::space)
        .def("verify", &verify_certificate)
        .def("to_json", [](const PathProximinalCertificate& c) { return certificate_to_json(c).dump(); });

    py::class_<BePathWitness>(m, "BePath")
        .def_readonly("path", &BePathWitness::path)
        .def_readonly("crossing_index", &BePathWitness::crossing_index)
        .def("crossing_edge", &BePathWitness::crossing_edge);

    // graphs
    m.def("induced_subgraph", &induced_subgraph);
    m.def("induced_bipartite_subgraph", &induced_bipartite_subgraph);
    m.def("connected_components", &connected_components);
    m.def("is_connected", &is_connected);
    m.def("isolated_vertices", &isolated_vertices);
    m.def("prune_isolated", &prune_isolated);
    m.def("find_path", &find_path);
    m.def("to_dot", [](const SimpleGraph& g, std::optional<Bipartition> parts) {
        return to_dot(g, parts ? &*parts : nullptr);
    }, py::arg("graph"), py::arg("parts") = py::none());

    // spaces
    m.def("classify", [](const FiniteSemimetricSpace& s) { return std::string(to_string(classify(s))); });
    m.def("set_distance", &set_distance);
    m.def("best_approximations", &best_approximations);
    m.def("diameter", &diameter);
    m.def("proximity_report", [](const FiniteSemimetricSpace& s, const Bipartition& p) {
        const auto r = proximity_report(s, p);
        py::dict d;
        d["distance"] = r.distance;
        d["a0"] = r.a0;
        d["b0"] = r.b0;
        d["pairs"] = r.pairs;
        return d;
    });
    m.def("ultrametric_diameter_criterion", [](const FiniteSemimetricSpace& s, const Bipartition& p) {
        const auto c = ultrametric_diameter_criterion(s, p);
        return std::make_pair(c.diameter_bound, c.full_proximity);
    });

    // proximinal graphs
    m.def("build_proximinal_graph", &build_proximinal_graph);
    m.def("verify_proximinal_graph", &verify_proximinal_graph);
    m.def("witness_proximinal_metric", &witness_proximinal_metric);

    // path structure
    m.def("as_be_path", &as_be_path);
    m.def("is_path_bipartite", &is_path_bipartite);
    m.def("bpath_pairs", &bpath_pairs);
    m.def("be_path_witness", &be_path_witness);
    m.def("enumerate_be_paths", [](const SimpleGraph& g, const Bipartition& p) { return enumerate_be_paths(g, p); });
    m.def("is_path_complete", &is_path_complete);
    m.def("quotient_graph", [](const SimpleGraph& g, const Bipartition& p) {
        const auto q = quotient_graph(g, p);
        py::dict d;
        d["a_components"] = q.a_components;
        d["b_components"] = q.b_components;
        d["edges"] = q.edges;
        d["complete_bipartite"] = is_complete_bipartite(q);
        return d;
    });
    m.def("find_path_bipartite_partition", &find_path_bipartite_partition);

    // path-proximinal graphs
    m.def("build_threshold_graph", &build_threshold_graph);
    m.def("verify_path_proximinal", &verify_path_proximinal);
    m.def("check_structural_conditions", &check_structural_conditions);
    m.def("witness_metric_for_path_bipartite", &witness_metric_for_path_bipartite);
    m.def("is_path_proximinal_graph", &is_path_proximinal_graph);
    m.def("parts_fully_proximal", &parts_fully_proximal);
    m.def("check_within_part_separation", &check_within_part_separation);
    m.def("all_degrees_one", &all_degrees_one);
    m.def("witness_ultrametric", &witness_ultrametric);
    m.def("components_are_pairs", &components_are_pairs);

    // instances
    m.def("hypercube_space", &hypercube_space);
    m.def("hypercube_example", [] {
        const auto inst = hypercube_example_graph();
        return py::make_tuple(inst.graph, inst.parts, hypercube_example_space());
    });
    m.def("alternating_path_example", [] {
        const auto inst = alternating_path_example();
        return py::make_tuple(inst.graph, inst.parts);
    });
    m.def("lattice_truncation", [](int n, int mm, int k) {
        const auto inst = lattice_truncation({n, mm, k});
        return py::make_tuple(inst.space, inst.parts);
    }, py::arg("n") = 2, py::arg("m") = 2, py::arg("k") = 2);
    m.def("random_ultrametric_space", &random_ultrametric_space);
    m.def("random_semimetric_space", &random_semimetric_space);
    m.def("random_graph", &random_graph);
    m.def("all_bipartitions", &all_bipartitions);

    // sweeps and the command line
    m.def("sweep_ids", [] {
        std::vector<std::string> ids;
        for (const auto& info : sweep_catalog()) ids.push_back(info.id);
        return ids;
    });
    m.def("run_sweep", [](const std::string& id, std::optional<int> max_n, std::optional<std::size_t> instances,
                          std::uint64_t seed, unsigned jobs) {
        SweepOptions o = default_sweep_options(id);
        if (max_n) o.max_n = *max_n;
        if (instances) o.instances = *instances;
        o.seed = seed;
        o.jobs = jobs;
        SweepReport r;
        {
            py::gil_scoped_release release;
            r = run_sweep(id, o);
        }
        return sweep_dict(r);
    }, py::arg("id"), py::arg("max_n") = py::none(), py::arg("instances") = py::none(), py::arg("seed") = 1,
       py::arg("jobs") = 1);
    m.def("run_cli", [](const std::vector<std::string>& args) {
        std::ostringstream out;
        std::ostringstream err;
        const int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
    });
}
