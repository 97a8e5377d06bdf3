#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "powgraph/class_analysis.hpp"
#include "powgraph/error.hpp"
#include "powgraph/powergraph.hpp"
#include "powgraph/reconstruct.hpp"
#include "powgraph/verify.hpp"
#include "powgraph/window.hpp"

namespace py = pybind11;
using namespace powgraph;

PYBIND11_MODULE(_powgraph, m) {
    m.doc() = "power graph construction, analysis, and reconstruction";

    static py::exception<Error> exc(m, "PowgraphError");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            exc(e.what());
        }
    });

    py::class_<GroupSpec>(m, "GroupSpec")
        .def_static("cyclic", &GroupSpec::cyclic)
        .def_static("dihedral", &GroupSpec::dihedral)
        .def_static("dicyclic", &GroupSpec::dicyclic)
        .def_static("abelian", &GroupSpec::abelian)
        .def_static("permutation", &GroupSpec::permutation)
        .def_static("from_table", &GroupSpec::from_table)
        .def_static("z_window", &GroupSpec::z_window)
        .def_static("q_subgroup_window", &GroupSpec::q_subgroup_window)
        .def_static("amalgam", &GroupSpec::amalgam)
        .def("to_json", &GroupSpec::to_json_text)
        .def_static("parse_json", &GroupSpec::parse_json_text)
        .def("display_name", &GroupSpec::display_name)
        .def("__repr__", [](const GroupSpec& s) { return "<GroupSpec " + s.display_name() + ">"; });

    py::class_<GroupModel>(m, "GroupModel")
        .def("__len__", &GroupModel::size)
        .def("finite", &GroupModel::finite_model)
        .def("element_order",
             [](const GroupModel& g, std::size_t x) -> py::object {
                 const Card c = g.element_order(x);
                 if (c.is_finite()) return py::int_(c.value());
                 return py::none();
             })
        .def("is_power_member", &GroupModel::is_power_member)
        .def("cyclic_subgroup",
             [](const GroupModel& g, std::size_t x) {
                 bool truncated = false;
                 auto v = g.cyclic_subgroup(x, &truncated);
                 return py::make_tuple(v, truncated);
             })
        .def("inverse", &GroupModel::inverse)
        .def("label", &GroupModel::label);

    m.def("build_group", &build_group);

    py::class_<UGraph>(m, "UGraph")
        .def("__len__", &UGraph::order)
        .def("edges", &UGraph::edges)
        .def("adjacent", &UGraph::adjacent)
        .def("labels", [](const UGraph& g) { return g.labels(); })
        .def("to_json", &write_ugraph)
        .def("to_dot", [](const UGraph& g) { return to_dot(g); });

    py::class_<DiGraph>(m, "DiGraph")
        .def("__len__", &DiGraph::order)
        .def("arcs", &DiGraph::arcs)
        .def("arc", &DiGraph::arc)
        .def("labels", [](const DiGraph& g) { return g.labels(); })
        .def("underlying", &DiGraph::underlying)
        .def("to_json", &write_digraph)
        .def("to_dot", [](const DiGraph& g) { return to_dot(g); });

    m.def("read_graph_text", [](const std::string& text) -> py::object {
        const ParsedGraph p = read_graph(text);
        if (p.directed) return py::cast(p.digraph);
        return py::cast(p.ugraph);
    });

    m.def("power_graph", [](const GroupModel& g) { return zpm_power_graph(g); });
    m.def("directed_power_graph", [](const GroupModel& g) { return zpm_directed_power_graph(g); });

    m.def("classify_center_case", [](UGraph phi) {
        phi.strip_labels();
        const CenterReport rep = classify_center_case(phi);
        return py::make_tuple(to_string(rep.kind), rep.center);
    });

    m.def("equiv_classes", [](const UGraph& g) { return equiv_classes(g).blocks; });

    m.def("reconstruct", [](UGraph phi) {
        phi.strip_labels();
        OrientationPlan plan;
        DiGraph d = reconstruct(phi, &plan);
        return py::make_tuple(std::move(d), plan.to_text());
    });

    m.def("digraph_isomorphic", [](const DiGraph& a, const DiGraph& b) {
        const IsoResult r = digraph_isomorphic(a, b);
        return py::make_tuple(r.isomorphic, r.witness, r.failure);
    });

    m.def("verify_group", [](const GroupSpec& spec) {
        const VerifyReport r = verify_group(spec);
        py::dict d;
        d["name"] = r.name;
        d["vertex_count"] = r.vertex_count;
        d["center_case"] = r.center_case;
        d["isomorphic"] = r.isomorphic;
        d["error"] = r.error;
        d["wall_seconds"] = r.wall_seconds;
        return d;
    });

    m.def("lemma4_check", [](const GroupModel& g, std::size_t x) { return lemma4_check(g, x); });
    m.def("locally_cyclic_check",
          [](const GroupModel& g) { return locally_cyclic_check(g); });
    m.def("recover_directions",
          [](const GroupModel& g, std::size_t x, std::size_t y, std::size_t tau) {
              const RecoveredDirections r = recover_directions(g, x, y, tau);
              return py::make_tuple(r.digraph, r.vertices, r.guarded_edges);
          },
          py::arg("g"), py::arg("x"), py::arg("y"), py::arg("tau") = 3);
}
