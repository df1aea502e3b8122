#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "blockinv/census.hpp"
#include "blockinv/chroma.hpp"
#include "blockinv/design.hpp"
#include "blockinv/eval.hpp"
#include "blockinv/gen.hpp"
#include "blockinv/presets.hpp"
#include "blockinv/symmetry.hpp"

namespace py = pybind11;
using namespace blockinv;

namespace {

// Exact integers cross the boundary as Python ints via their decimal form.
py::int_ to_py(const ExactInt& v) {
    return py::reinterpret_steal<py::int_>(
        PyLong_FromString(v.get_str().c_str(), nullptr, 10));
}

FormSet forms_from_python(const std::vector<std::vector<long>>& rows) {
    return FormSet::from_ints(rows);
}

BlockDesign load_design(const std::string& text) {
    if (auto preset = find_design_preset(text)) return *preset;
    if (text.find('(') != std::string::npos) return parse_symbolic(text);
    return parse_block_list(text);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "block designs encoding SL-invariants: chromatic filters and "
              "exact evaluation";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<ValidationError>(m, "ValidationError",
                                            PyExc_ValueError);
    py::register_exception<GuardExceeded>(m, "GuardExceeded",
                                          PyExc_RuntimeError);

    py::class_<BlockDesign>(m, "BlockDesign")
        .def(py::init([](const std::vector<std::vector<int>>& blocks) {
                 return BlockDesign(blocks);
             }),
             py::arg("blocks"))
        .def_property_readonly("num_points", &BlockDesign::num_points)
        .def_property_readonly("num_blocks", &BlockDesign::num_blocks)
        .def_property_readonly("block_size", &BlockDesign::block_size)
        .def_property_readonly("point_degree", &BlockDesign::point_degree)
        .def_property_readonly("blocks", &BlockDesign::blocks)
        .def("to_block_list", &BlockDesign::to_block_list)
        .def("__repr__", [](const BlockDesign& d) {
            return "BlockDesign(\"" + d.to_block_list() + "\")";
        });

    py::class_<CollinearityGraph>(m, "CollinearityGraph")
        .def_property_readonly("num_vertices", &CollinearityGraph::num_vertices)
        .def_property_readonly("num_edges", &CollinearityGraph::num_edges)
        .def("adjacent", &CollinearityGraph::adjacent)
        .def("degree", &CollinearityGraph::degree);

    py::class_<ValidationReport>(m, "ValidationReport")
        .def_readonly("is_biregular", &ValidationReport::is_biregular)
        .def_readonly("observed_degrees", &ValidationReport::observed_degrees)
        .def_readonly("has_repeated_vertices",
                      &ValidationReport::has_repeated_vertices)
        .def_readonly("has_repeated_blocks",
                      &ValidationReport::has_repeated_blocks);

    m.def("parse_block_list",
          [](const std::string& text) { return parse_block_list(text); });
    m.def("parse_symbolic", &parse_symbolic);
    m.def("preset", [](const std::string& name) {
        auto d = find_design_preset(name);
        if (!d) throw ParseError("unknown preset '" + name + "'");
        return *d;
    });
    m.def("design", &load_design,
          "preset name, block list, or symbolic expression");
    m.def("validate", &validate);
    m.def("collinearity", &collinearity);
    m.def("reorder_sign", &reorder_sign);

    m.def("chromatic_number", &chromatic_number);
    m.def("is_q_colorable", &is_q_colorable);
    m.def("is_vertex_critical", &is_vertex_critical);
    m.def("has_clique", &has_clique);
    m.def("count_colorings",
          [](const CollinearityGraph& g, int colors) {
              return count_proper_colorings(g, colors);
          });

    m.def("evaluate",
          [](const BlockDesign& d, const std::vector<std::vector<long>>& forms) {
              return to_py(evaluate(d, forms_from_python(forms)));
          });
    m.def("evaluate_at_paper8", [](const BlockDesign& d) {
        return to_py(evaluate(d, paper8_forms()));
    });
    m.def("parallel_evaluate",
          [](const BlockDesign& d, const std::vector<std::vector<long>>& forms,
             int parts) {
              return to_py(parallel_evaluate(d, forms_from_python(forms), parts));
          });
    m.def("det", [](const std::vector<std::vector<long>>& rows) {
        return to_py(det(forms_from_python(rows).forms));
    });
    m.def("paper8_forms", [] {
        std::vector<std::vector<long>> out;
        for (const auto& f : paper8_forms().forms) {
            std::vector<long> row;
            for (const auto& x : f) row.push_back(x.get_si());
            out.push_back(row);
        }
        return out;
    });

    m.def("design_aut_order", &design_aut_order);
    m.def("graph_aut_order", &graph_aut_order);
    m.def("canonical_key", [](const BlockDesign& d) {
        return canonical_key(d).to_string();
    });

    m.def("count_weight_arrays",
          [](int rows, int cols, int row_sum, int col_sum) {
              return to_py(count_weight_arrays(rows, cols, row_sum, col_sum));
          });
    m.def("count_total_monomials", [](long vars, long degree) {
        return to_py(count_total_monomials(vars, degree));
    });
    m.def("covering_bound", &covering_bound);
    m.def("ah_codimension", [](long k, long d, long n) {
        return to_py(ah_codimension({k, d, n}));
    });
    m.def("is_ah_ordinary",
          [](long k, long d, long n) { return is_ah_ordinary({k, d, n}); });

    m.def("generate",
          [](int points, int blocks, int block_size, int degree,
             bool allow_repeated_blocks) {
              return generate_all(GenParams{points, blocks, block_size, degree,
                                            allow_repeated_blocks});
          },
          py::arg("points"), py::arg("blocks"), py::arg("block_size"),
          py::arg("degree"), py::arg("allow_repeated_blocks") = true);
    m.def("pipeline_filter", [](const BlockDesign& d, int target) {
        auto verdict = pipeline_filter(d, target);
        return py::make_tuple(verdict.tag(), verdict.chi);
    });
}
