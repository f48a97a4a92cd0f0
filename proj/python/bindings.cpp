#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "crossfree/bijections.hpp"
#include "crossfree/enumeration.hpp"
#include "crossfree/patterns.hpp"
#include "crossfree/series.hpp"
#include "crossfree/verify.hpp"

namespace py = pybind11;
using namespace crossfree;

namespace {

py::object to_python(const Integer& v) {
    return py::reinterpret_steal<py::object>(PyLong_FromString(v.str().c_str(), nullptr, 10));
}

std::vector<std::pair<int, int>> arc_tuples(const ArcDiagram& d) {
    std::vector<std::pair<int, int>> out;
    for (const Arc& a : d.arcs()) out.emplace_back(a.opener, a.closer);
    return out;
}

ArcDiagram diagram_from_arcs(int ground_size, const std::vector<std::pair<int, int>>& arcs) {
    std::vector<Arc> v;
    for (auto [i, j] : arcs) v.push_back({i, j});
    return ArcDiagram::from_arcs(ground_size, std::move(v));
}

std::vector<PatternKind> kinds_from(const std::vector<std::string>& names) {
    std::vector<PatternKind> out;
    for (const auto& n : names) out.push_back(parse_pattern_kind(n));
    return out;
}

Statistic statistic_from(const std::string& name) {
    if (name == "neighbor_alignments") return Statistic::NeighborAlignments;
    if (name == "transients") return Statistic::Transients;
    throw std::invalid_argument("unknown statistic '" + name + "'");
}

py::object object_to_python(const ClassObject& obj) {
    if (const auto* d = std::get_if<ArcDiagram>(&obj)) return py::cast(*d);
    return py::cast(std::get<Sequence>(obj));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Arc diagrams, right-crossing avoidance, the two bijections and the shared series";

    py::register_exception<NotInClass>(m, "NotInClassError", PyExc_ValueError);

    py::class_<ArcDiagram>(m, "Diagram")
        .def(py::init(&diagram_from_arcs), py::arg("ground_size"), py::arg("arcs") = std::vector<std::pair<int, int>>{})
        .def_static("from_blocks", &ArcDiagram::from_blocks, py::arg("ground_size"), py::arg("blocks"))
        .def_static("parse", [](const std::string& s) { return parse_diagram(s); })
        .def_property_readonly("ground_size", &ArcDiagram::ground_size)
        .def_property_readonly("arcs", &arc_tuples)
        .def("blocks", &ArcDiagram::to_blocks)
        .def("role", [](const ArcDiagram& d, int v) { return std::string(role_name(d.role(v))); })
        .def("is_partial_matching", &ArcDiagram::is_partial_matching)
        .def("__eq__", [](const ArcDiagram& a, const ArcDiagram& b) { return a == b; })
        .def("__hash__", [](const ArcDiagram& d) { return py::hash(py::str(format_diagram(d))); })
        .def("__str__", &format_diagram)
        .def("__repr__", [](const ArcDiagram& d) { return "Diagram('" + format_diagram(d) + "')"; });

    m.def("parse_diagram", [](const std::string& s) { return parse_diagram(s); });
    m.def("format_diagram", &format_diagram);
    m.def("parse_sequence", [](const std::string& s) { return parse_sequence(s); });
    m.def("format_sequence", &format_sequence);
    m.def("is_valid_S", &is_valid_S);
    m.def("lr_maxima", &lr_maxima);

    m.def(
        "matches",
        [](std::pair<int, int> a, std::pair<int, int> b, const std::string& kind) {
            return matches({a.first, a.second}, {b.first, b.second}, parse_pattern_kind(kind));
        },
        py::arg("a"), py::arg("b"), py::arg("kind"));
    m.def("find_patterns", [](const ArcDiagram& d, const std::string& kind) {
        std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> out;
        for (const auto& [a, b] : find_patterns(d, parse_pattern_kind(kind))) {
            out.push_back({{a.opener, a.closer}, {b.opener, b.closer}});
        }
        return out;
    });
    m.def("avoids", [](const ArcDiagram& d, const std::vector<std::string>& kinds) {
        auto ks = kinds_from(kinds);
        return avoids(d, std::span<const PatternKind>(ks));
    });
    m.def("count_statistic",
          [](const ArcDiagram& d, const std::string& stat) { return count_statistic(d, statistic_from(stat)); });

    m.def(
        "count",
        [](const std::string& cls, int n, int k, const std::string& mode) {
            return count_class({parse_class_kind(cls), n, k}, parse_mode(mode));
        },
        py::arg("cls"), py::arg("n"), py::arg("k"), py::arg("mode") = "pruned");
    m.def(
        "count_row",
        [](const std::string& cls, int n, const std::string& mode) {
            return count_row(parse_class_kind(cls), n, parse_mode(mode));
        },
        py::arg("cls"), py::arg("n"), py::arg("mode") = "pruned");
    m.def(
        "enumerate",
        [](const std::string& cls, int n, int k, const std::string& mode) {
            py::list out;
            for (const auto& obj : enumerate_class({parse_class_kind(cls), n, k}, parse_mode(mode))) {
                out.append(object_to_python(obj));
            }
            return out;
        },
        py::arg("cls"), py::arg("n"), py::arg("k"), py::arg("mode") = "filter");
    m.def("all_partitions", &all_partitions);
    m.def("all_partial_matchings", &all_partial_matchings);

    m.def("alpha", &alpha);
    m.def("alpha_trace", [](const ArcDiagram& d) {
        AlphaTrace t = alpha_trace(d);
        return py::make_tuple(t.sequence, t.opener_sets);
    });
    m.def("alpha_inv", &alpha_inv);
    m.def("reduce", &reduce);
    m.def("expand", &expand);

    m.def(
        "gf_coefficients",
        [](int order) {
            const BiSeries f = rhs_series(order);
            py::list rows;
            for (int n = 1; n <= order; ++n) {
                py::list row;
                for (int k = 0; k < n; ++k) row.append(to_python(f.coeff(n, k)));
                rows.append(row);
            }
            return rows;
        },
        py::arg("order"), "Rows n = 1..order of coefficients k = 0..n-1.");

    m.def(
        "verify",
        [](int max_n, std::optional<int> max_k, unsigned workers, const std::string& mode) {
            VerifyReport r;
            {
                py::gil_scoped_release release;
                r = verify({max_n, max_k, parse_mode(mode), workers});
            }
            py::list cells;
            for (const auto& c : r.cells) {
                py::dict d;
                d["n"] = c.n;
                d["k"] = c.k;
                d["P"] = c.p;
                d["S"] = c.s;
                d["CT"] = c.ct;
                d["gf"] = to_python(c.gf);
                d["ok"] = c.agree();
                cells.append(d);
            }
            return cells;
        },
        py::arg("max_n") = 7, py::arg("max_k") = py::none(), py::arg("workers") = 1,
        py::arg("mode") = "pruned");

#ifdef CROSSFREE_VERSION
    m.attr("__version__") = CROSSFREE_VERSION;
#else
    m.attr("__version__") = "dev";
#endif
}
