#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pis/certcheck.hpp"
#include "pis/classifier.hpp"
#include "pis/genus.hpp"
#include "pis/graph.hpp"
#include "pis/ideal.hpp"
#include "pis/ring.hpp"
#include "pis/rotation.hpp"
#include "pis/subdivision.hpp"

namespace py = pybind11;

namespace {

pis::GenusOptions make_options(std::int64_t budget_ms, std::int64_t budget_nodes,
                               std::uint64_t seed) {
    pis::GenusOptions o;
    o.budget.max_ms = budget_ms;
    o.budget.max_nodes = budget_nodes;
    o.seed = seed;
    return o;
}

pis::LabeledGraph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    pis::LabeledGraph g(n);
    for (auto [a, b] : edges) g.add_edge(a, b);
    return g;
}

} // namespace

PYBIND11_MODULE(_pisgenus, m) {
    m.doc() = "prime ideal sum graphs of finite rings and certified genus bounds";

    m.def("ring_order", [](const std::string& spec) {
        return pis::parse_ring_spec(spec).order();
    });
    m.def("canonical_spec", [](const std::string& spec) {
        return pis::parse_ring_spec(spec).text();
    });

    m.def("lattice_json", [](const std::string& spec) {
        auto sys = pis::RingSystem::analyze(pis::parse_ring_spec(spec));
        return pis::lattice_to_json(sys);
    });

    m.def("pis_graph_json", [](const std::string& spec) {
        auto desc = pis::parse_ring_spec(spec);
        auto sys = pis::RingSystem::analyze(desc);
        return pis::export_graph(pis::build_pis(sys), pis::GraphFormat::Json, desc.text());
    });
    m.def("pis_graph_dot", [](const std::string& spec) {
        auto desc = pis::parse_ring_spec(spec);
        auto sys = pis::RingSystem::analyze(desc);
        return pis::export_graph(pis::build_pis(sys), pis::GraphFormat::Dot, desc.text());
    });

    m.def("kn_genus", &pis::kn_genus);
    m.def("kmn_genus", &pis::kmn_genus);

    m.def("trace_faces", [](int n, const std::vector<std::pair<int, int>>& edges,
                            const std::vector<std::vector<int>>& rotation) {
        return pis::trace_faces(graph_from_edges(n, edges), rotation);
    });

    m.def(
        "genus_bounds_json",
        [](const std::string& graph_json, std::int64_t budget_ms, std::int64_t budget_nodes,
           std::uint64_t seed) {
            auto g = pis::import_graph_json(graph_json);
            return pis::bounds_to_json(pis::genus_bounds(g, make_options(budget_ms, budget_nodes, seed)));
        },
        py::arg("graph_json"), py::arg("budget_ms") = 60'000,
        py::arg("budget_nodes") = 10'000'000, py::arg("seed") = 0);

    m.def(
        "find_subdivision",
        [](const std::string& graph_json, const std::string& pattern,
           std::int64_t budget_nodes) -> py::object {
            auto g = pis::import_graph_json(graph_json);
            auto pat = pis::Pattern::by_name(pattern);
            if (!pat) throw std::invalid_argument("unknown pattern " + pattern);
            pis::Budget b;
            b.max_nodes = budget_nodes;
            auto res = pis::find_subdivision(g, *pat, b);
            if (res.outcome != pis::SearchOutcome::Found) return py::none();
            py::dict d;
            d["pattern"] = res.witness->pattern_name;
            d["genus"] = res.witness->pattern_genus;
            d["branch_map"] = res.witness->branch_map;
            d["paths"] = res.witness->paths;
            return d;
        },
        py::arg("graph_json"), py::arg("pattern"), py::arg("budget_nodes") = 10'000'000);

    m.def(
        "verify_json",
        [](const std::string& spec, std::int64_t budget_ms, std::int64_t budget_nodes,
           std::uint64_t seed) {
            return pis::report_to_json(
                pis::verify_ring(spec, make_options(budget_ms, budget_nodes, seed)));
        },
        py::arg("spec"), py::arg("budget_ms") = 60'000,
        py::arg("budget_nodes") = 10'000'000, py::arg("seed") = 0);

    m.def("predict_class", [](const std::string& spec) {
        auto sys = pis::RingSystem::analyze(pis::parse_ring_spec(spec));
        return pis::to_string(pis::predict(pis::profile_factors(sys)));
    });

    m.def("verify_certificate", [](const std::string& graph_json, const std::string& cert_json) {
        auto check = pis::verify_certificate(graph_json, cert_json);
        return py::make_tuple(check.ok, check.message);
    });
}
