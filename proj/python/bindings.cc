// Copyright 2026 The cellcss Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cellcss/acc_format.h"
#include "cellcss/cellcomplex.h"
#include "cellcss/chaincomplex.h"
#include "cellcss/csscode.h"
#include "cellcss/error.h"
#include "cellcss/homology.h"
#include "cellcss/intlinalg.h"

namespace py = pybind11;
using namespace cellcss;

namespace {

py::int_ to_py(const Integer &x) {
    return py::reinterpret_steal<py::int_>(PyLong_FromString(x.get_str().c_str(), nullptr, 10));
}

Integer from_py(const py::handle &h) {
    return Integer(py::str(h).cast<std::string>());
}

py::list to_py(const IntMatrix &m) {
    py::list out;
    for (size_t r = 0; r < m.rows(); r++) {
        py::list row;
        for (size_t c = 0; c < m.cols(); c++) {
            row.append(to_py(m(r, c)));
        }
        out.append(row);
    }
    return out;
}

py::list to_py(const ModMatrix &m) {
    py::list out;
    for (size_t r = 0; r < m.rows(); r++) {
        auto row = m.row(r);
        out.append(py::cast(std::vector<int64_t>(row.begin(), row.end())));
    }
    return out;
}

py::list to_py(const std::vector<Integer> &v) {
    py::list out;
    for (const auto &x : v) {
        out.append(to_py(x));
    }
    return out;
}

IntMatrix int_matrix(const py::sequence &rows, std::optional<size_t> cols) {
    std::vector<std::vector<Integer>> data;
    for (const auto &row : rows) {
        std::vector<Integer> r;
        for (const auto &x : row.cast<py::sequence>()) {
            r.push_back(from_py(x));
        }
        data.push_back(std::move(r));
    }
    size_t width = cols ? *cols : (data.empty() ? 0 : data[0].size());
    return IntMatrix::from_rows(data, width);
}

PauliType pauli_type(const std::string &t) {
    if (t == "x" || t == "X") {
        return PauliType::X;
    }
    if (t == "z" || t == "Z") {
        return PauliType::Z;
    }
    throw Error(ErrorCode::InvalidArgument, "type must be 'x' or 'z'");
}

py::dict homology_dict(const HomologyDecomposition &h) {
    py::dict d;
    d["degree"] = h.degree;
    d["free_rank"] = h.free_rank;
    d["invariant_factors"] = to_py(h.invariant_factors);
    d["representatives"] = to_py(h.representatives.transpose());
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Cell complexes, integer homology and qudit CSS codes.";

    static py::exception<Error> exc(m, "CellcssError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) {
                std::rethrow_exception(p);
            }
        } catch (const Error &e) {
            py::set_error(exc, e.what());
        }
    });

    py::class_<CellComplex>(m, "CellComplex")
        .def_property_readonly("vertices", [](const CellComplex &x) { return x.vertices; })
        .def_property_readonly("edges",
                               [](const CellComplex &x) {
                                   py::list out;
                                   for (const auto &e : x.edges) {
                                       out.append(py::make_tuple(e.name, e.source, e.target));
                                   }
                                   return out;
                               })
        .def_property_readonly("faces",
                               [](const CellComplex &x) {
                                   py::list out;
                                   for (const auto &f : x.faces) {
                                       std::vector<std::string> refs;
                                       for (const auto &r : f.boundary) {
                                           refs.push_back(r.to_string());
                                       }
                                       out.append(py::make_tuple(f.name, refs));
                                   }
                                   return out;
                               })
        .def("validate", [](const CellComplex &x) { return validate(x); })
        .def("to_acc", [](const CellComplex &x) { return serialize_acc(x); })
        .def("__eq__", [](const CellComplex &a, const CellComplex &b) { return a == b; })
        .def("__repr__", [](const CellComplex &x) {
            return "<CellComplex " + std::to_string(x.vertices.size()) + "v " + std::to_string(x.edges.size()) +
                   "e " + std::to_string(x.faces.size()) + "f>";
        });

    m.def("builtin", [](const std::string &name, std::optional<int64_t> param) { return builtin(name, param); },
          py::arg("name"), py::arg("param") = py::none());
    m.def("builtin_names", &builtin_names);
    m.def(
        "parse_acc", [](const std::string &text, bool glue) { return resolve(parse_acc(text), glue); },
        py::arg("text"), py::arg("glue") = true);
    m.def("serialize_acc", [](const CellComplex &x) { return serialize_acc(x); });
    m.def("cell_direct_sum", [](const CellComplex &a, const CellComplex &b) { return direct_sum(a, b); });
    m.def("cell_tensor", &tensor_product_1d);

    py::class_<ChainComplex>(m, "ChainComplex")
        .def_property_readonly("top_degree", &ChainComplex::top_degree)
        .def("rank", &ChainComplex::rank)
        .def("labels", &ChainComplex::labels)
        .def("boundary", [](const ChainComplex &c, size_t n) { return to_py(c.boundary(n)); })
        .def("verify", [](const ChainComplex &c) { return !verify(c).has_value(); });

    m.def("chain_complex", &from_cell_complex);
    m.def("tensor", &tensor);
    m.def("direct_sum", py::overload_cast<const ChainComplex &, const ChainComplex &>(&direct_sum));
    m.def("dual", &dual);

    m.def("homology", [](const ChainComplex &c, size_t n) { return homology_dict(homology_z(c, n)); });
    m.def("logical_space", [](const ChainComplex &c, int64_t d) {
        LogicalSpace ls = logical_space(c, d);
        py::dict out;
        out["modulus"] = ls.modulus;
        out["free_qudits"] = ls.free_qudits;
        out["torsion_dims"] = ls.torsion_dims;
        out["order"] = to_py(ls.order());
        out["text"] = ls.to_string();
        return out;
    });

    m.def(
        "smith_form",
        [](const py::sequence &rows, std::optional<size_t> cols) {
            SmithForm s = smith_form(int_matrix(rows, cols));
            py::dict out;
            out["u"] = to_py(s.u);
            out["s"] = to_py(s.s);
            out["v"] = to_py(s.v);
            out["factors"] = to_py(s.factors);
            return out;
        },
        py::arg("rows"), py::arg("cols") = py::none());
    m.def(
        "hermite_form",
        [](const py::sequence &rows, std::optional<size_t> cols) { return to_py(hermite_form(int_matrix(rows, cols))); },
        py::arg("rows"), py::arg("cols") = py::none());
    m.def(
        "kernel_basis",
        [](const py::sequence &rows, std::optional<size_t> cols) {
            return to_py(kernel_basis(int_matrix(rows, cols)).transpose());
        },
        py::arg("rows"), py::arg("cols") = py::none());

    py::class_<CssCode>(m, "CssCode")
        .def_readonly("modulus", &CssCode::modulus)
        .def_property_readonly("n", &CssCode::n)
        .def_property_readonly("p_x", [](const CssCode &c) { return to_py(c.p_x); })
        .def_property_readonly("p_z", [](const CssCode &c) { return to_py(c.p_z); })
        .def_readonly("qudit_labels", &CssCode::qudit_labels)
        .def_readonly("x_check_labels", &CssCode::x_check_labels)
        .def_readonly("z_check_labels", &CssCode::z_check_labels);

    m.def("css_code", &css_from_chain);
    m.def("render_stabilizers", &render_stabilizers);
    m.def("syndrome", [](const CssCode &code, const std::string &type, std::vector<int64_t> exps) {
        PauliVector op = PauliVector::make(pauli_type(type), code.modulus, std::move(exps));
        Syndrome s = op.type == PauliType::Z ? syndrome_x(code, op) : syndrome_z(code, op);
        return s.values;
    });
    m.def("classify", [](const CssCode &code, const std::string &type, std::vector<int64_t> exps) {
        return op_class_name(classify(code, PauliVector::make(pauli_type(type), code.modulus, std::move(exps))));
    });
    m.def(
        "distance",
        [](const CssCode &code, const std::string &type, std::optional<size_t> max_weight, size_t jobs) {
            Distance d = distance(code, pauli_type(type), max_weight, jobs);
            py::dict out;
            out["kind"] = d.kind == Distance::Kind::Exact        ? "exact"
                          : d.kind == Distance::Kind::LowerBound ? "lower-bound"
                                                                 : "no-logical";
            out["value"] = d.value;
            out["witness"] = d.witness ? py::cast(d.witness->exponents) : py::none();
            return out;
        },
        py::arg("code"), py::arg("type"), py::arg("max_weight") = py::none(), py::arg("jobs") = 1);
    m.def("commutes", [](std::vector<int64_t> z, std::vector<int64_t> x, int64_t d) {
        Commutation c = commutes(PauliVector::make(PauliType::Z, d, std::move(z)),
                                 PauliVector::make(PauliType::X, d, std::move(x)));
        return py::make_tuple(c.commutes, c.phase);
    });
}
