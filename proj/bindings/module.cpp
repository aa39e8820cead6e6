#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <utility>
#include <vector>

#include "polyvenn/io.hpp"
#include "polyvenn/layout.hpp"
#include "polyvenn/polyomino.hpp"
#include "polyvenn/scd.hpp"
#include "polyvenn/search.hpp"
#include "polyvenn/validation.hpp"

namespace py = pybind11;
using namespace polyvenn;

namespace {

using PyCells = std::vector<std::pair<int, int>>;
using PyEntries = std::vector<std::pair<std::pair<int, int>, std::uint32_t>>;
using PyChains = std::vector<std::vector<std::uint32_t>>;

CellSet to_cells(const PyCells& v) {
    CellSet s;
    for (auto [x, y] : v) s.insert({x, y});
    return s;
}

PyCells from_cells(const CellSet& s) {
    PyCells out;
    out.reserve(s.size());
    for (Cell c : s) out.push_back({c.x, c.y});
    return out;
}

GridDiagram make_diagram(int n, const PyEntries& entries) {
    std::vector<GridDiagram::Entry> cells;
    cells.reserve(entries.size());
    for (const auto& [cell, mask] : entries)
        cells.push_back({{cell.first, cell.second}, SubsetMask{mask}});
    return GridDiagram(n, std::move(cells));
}

PyEntries diagram_entries(const GridDiagram& d) {
    PyEntries out;
    out.reserve(d.area());
    for (const auto& [cell, mask] : d.cells())
        out.push_back({{cell.x, cell.y}, mask.bits});
    return out;
}

ChainDecomposition to_decomposition(int n, const PyChains& chains) {
    ChainDecomposition dec{n, {}};
    for (const auto& chain : chains) {
        Chain c;
        for (std::uint32_t bits : chain) c.push_back(SubsetMask{bits});
        dec.chains.push_back(std::move(c));
    }
    return dec;
}

PyChains from_decomposition(const ChainDecomposition& dec) {
    PyChains out;
    for (const Chain& chain : dec.chains) {
        std::vector<std::uint32_t> c;
        for (SubsetMask m : chain) c.push_back(m.bits);
        out.push_back(std::move(c));
    }
    return out;
}

py::int_ big_int(const boost::multiprecision::cpp_int& value) {
    return py::reinterpret_steal<py::int_>(
        PyLong_FromString(value.str().c_str(), nullptr, 10));
}

ScdMethod method_from_string(const std::string& method) {
    if (method == "aigner") return ScdMethod::aigner;
    if (method == "christmas") return ScdMethod::christmas_tree;
    throw std::invalid_argument("method must be 'aigner' or 'christmas'");
}

const char* status_name(SearchStatus s) {
    switch (s) {
        case SearchStatus::found: return "found";
        case SearchStatus::exhausted: return "exhausted";
        default: return "budget_hit";
    }
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Venn diagrams whose curves are polyomino perimeters";

    py::class_<GridDiagram>(m, "GridDiagram")
        .def(py::init(&make_diagram), py::arg("n"), py::arg("cells") = PyEntries{})
        .def_property_readonly("n", &GridDiagram::curve_count)
        .def("area", &GridDiagram::area)
        .def("cells", &diagram_entries)
        .def("mask_at",
             [](const GridDiagram& d, std::pair<int, int> cell) -> std::optional<std::uint32_t> {
                 auto mask = d.mask_at({cell.first, cell.second});
                 if (!mask) return std::nullopt;
                 return mask->bits;
             })
        .def(py::self == py::self)
        .def("__repr__", [](const GridDiagram& d) {
            return "GridDiagram(n=" + std::to_string(d.curve_count()) +
                   ", area=" + std::to_string(d.area()) + ")";
        });

    m.def("curve_cells",
          [](const GridDiagram& d, int i) { return from_cells(curve_cells(d, i)); });
    m.def("region_cells", [](const GridDiagram& d, std::uint32_t mask) {
        return from_cells(region_cells(d, SubsetMask{mask}));
    });
    m.def("diagram_area", &diagram_area);
    m.def("bounding_box", [](const GridDiagram& d) {
        Box b = bounding_box(d);
        return std::pair{b.width(), b.height()};
    });
    m.def("mask_letters", [](std::uint32_t bits) { return mask_letters(SubsetMask{bits}); });

    m.def("is_edge_connected", [](const PyCells& v) { return is_edge_connected(to_cells(v)); });
    m.def("is_hole_free", [](const PyCells& v) { return is_hole_free(to_cells(v)); });
    m.def("trace_perimeter", [](const PyCells& v) {
        PyCells out;
        for (Cell p : trace_perimeter(to_cells(v)).vertices) out.push_back({p.x, p.y});
        return out;
    });
    m.def("convexity_class", [](const PyCells& v) {
        ConvexityFlags f = convexity_class(to_cells(v));
        py::dict d;
        d["row_convex"] = f.row_convex;
        d["column_convex"] = f.column_convex;
        d["convex"] = f.convex;
        return d;
    });
    m.def("canonical_free_form",
          [](const PyCells& v) { return from_cells(canonical_free_form(to_cells(v))); });
    m.def("count_fixed_polyominoes", &count_fixed_polyominoes);
    m.def("count_free_polyominoes", &count_free_polyominoes);
    m.def("count_column_convex", [](int k) { return big_int(count_column_convex(k)); });
    m.def("count_column_convex_bruteforce", &count_column_convex_bruteforce);

    m.def("lex_compare", [](std::uint32_t x, std::uint32_t y) {
        return lex_compare(SubsetMask{x}, SubsetMask{y}) == std::strong_ordering::less ? -1 : 1;
    });
    m.def(
        "aigner_scd", [](int n) { return from_decomposition(aigner_scd(n)); }, py::arg("n"));
    m.def(
        "christmas_tree_scd",
        [](int n) { return from_decomposition(christmas_tree_scd(n)); }, py::arg("n"));
    m.def("validate_scd", [](int n, const PyChains& chains) {
        ScdValidation v = validate_scd(to_decomposition(n, chains));
        py::dict d;
        d["partition_ok"] = v.partition_ok;
        d["count_ok"] = v.count_ok;
        d["eq1_ok"] = v.eq1_ok;
        d["eq2_ok"] = v.eq2_ok;
        d["ok"] = v.ok();
        return d;
    });

    m.def("layout_naive", &layout_naive, py::arg("n"));
    m.def(
        "layout_scd",
        [](int n, const std::string& method) {
            return layout_scd(make_scd(n, method_from_string(method)));
        },
        py::arg("n"), py::arg("method") = "aigner");
    m.def(
        "layout_scd_chains",
        [](int n, const PyChains& chains) { return layout_scd(to_decomposition(n, chains)); },
        py::arg("n"), py::arg("chains"));
    m.def("minimum_area", &minimum_area, py::arg("n"));
    m.def(
        "approximation_ratio",
        [](const std::string& method, int n) {
            if (method != "naive" && method != "scd")
                throw std::invalid_argument("method must be 'naive' or 'scd'");
            auto ratio = approximation_ratio(
                method == "naive" ? LayoutMethod::naive : LayoutMethod::scd, n);
            py::object fraction = py::module_::import("fractions").attr("Fraction");
            return fraction(big_int(boost::multiprecision::numerator(ratio)),
                            big_int(boost::multiprecision::denominator(ratio)));
        },
        py::arg("method"), py::arg("n"));
    m.def("central_binomial_bound_holds", &central_binomial_bound_holds, py::arg("m"));

    py::class_<ValidationCheck>(m, "ValidationCheck")
        .def_readonly("name", &ValidationCheck::name)
        .def_readonly("passed", &ValidationCheck::passed)
        .def_readonly("detail", &ValidationCheck::detail)
        .def("__repr__", [](const ValidationCheck& c) {
            return "ValidationCheck(" + c.name + ": " + (c.passed ? "PASS" : "FAIL") + ")";
        });
    py::class_<ValidationReport>(m, "ValidationReport")
        .def_readonly("checks", &ValidationReport::checks)
        .def_readonly("overall", &ValidationReport::overall);
    m.def("validate_venn", &validate_venn);
    m.def("format_report", &format_report);
    m.def("is_minimum_area", &is_minimum_area);
    m.def("is_minimum_bbox", &is_minimum_bbox);
    m.def("curves_congruent", &curves_congruent);

    m.def("serialize_pvn", &serialize_pvn);
    m.def("parse_pvn", [](const std::string& text) { return parse_pvn(text); });
    m.def("render_ascii", &render_ascii);
    m.def("render_svg", &render_svg);

    py::class_<SearchResult>(m, "SearchResult")
        .def_property_readonly("status",
                               [](const SearchResult& r) { return status_name(r.status); })
        .def_readonly("diagram", &SearchResult::diagram)
        .def_readonly("nodes", &SearchResult::nodes)
        .def_readonly("all_solutions", &SearchResult::all_solutions)
        .def("__repr__", [](const SearchResult& r) {
            return std::string("SearchResult(status=") + status_name(r.status) +
                   ", nodes=" + std::to_string(r.nodes) + ")";
        });
    m.def(
        "search_min_area",
        [](int n, std::uint64_t max_nodes, double max_seconds, bool collect_all) {
            return search_min_area(n, {max_nodes, max_seconds}, {true, collect_all});
        },
        py::arg("n"), py::arg("max_nodes") = 0, py::arg("max_seconds") = 0.0,
        py::arg("collect_all") = false);
    m.def(
        "search_fill_box",
        [](int n, int width, int height, std::uint64_t max_nodes, double max_seconds,
           bool collect_all) {
            return search_fill_box(n, width, height, {max_nodes, max_seconds},
                                   {true, collect_all});
        },
        py::arg("n"), py::arg("width"), py::arg("height"), py::arg("max_nodes") = 0,
        py::arg("max_seconds") = 0.0, py::arg("collect_all") = false);
}
