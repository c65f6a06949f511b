// Copyright 2026 The ldiqec Authors
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

#include <optional>
#include <string>
#include <vector>

#include "ldiqec/bounds.hpp"
#include "ldiqec/code_file.hpp"
#include "ldiqec/distance.hpp"
#include "ldiqec/errors.hpp"
#include "ldiqec/hamming.hpp"
#include "ldiqec/ldi.hpp"
#include "ldiqec/phi.hpp"
#include "ldiqec/stabilizer.hpp"

namespace py = pybind11;
using namespace ldiqec;

namespace {

py::int_ to_py(const BigInt& v) {
    const std::string digits = v.str();
    PyObject* obj = PyLong_FromString(digits.c_str(), nullptr, 10);
    if (obj == nullptr) {
        throw py::error_already_set();
    }
    return py::reinterpret_steal<py::int_>(obj);
}

Matrix to_matrix(const std::vector<std::vector<Int>>& rows, std::size_t n) {
    return Matrix::from_rows(rows, 2 * n);
}

Ring ring_of(std::optional<Int> q) { return q ? Ring::mod(*q) : Ring::integers(); }

py::tuple distance_tuple(const DistanceResult& d) {
    return py::make_tuple(d.is_exact() ? "exact" : "at_least", d.value);
}

}  // namespace

PYBIND11_MODULE(_ldiqec, m) {
    m.doc() = "Local-dimension-invariant qudit stabilizer codes";

    static py::exception<LdiError> ldi_error(m, "LdiError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) {
                std::rethrow_exception(p);
            }
        } catch (const LdiError& e) {
            PyErr_SetString(ldi_error.ptr(), e.what());
        }
    });
    // Later registrations are tried first.
    py::register_exception<NotLdiError>(m, "NotLdiError", ldi_error.ptr());
    py::register_exception<ParseError>(m, "ParseError", ldi_error.ptr());
    py::register_exception<BudgetExceededError>(m, "BudgetExceededError", ldi_error.ptr());

    m.def(
        "phi_map",
        [](const std::string& word, std::optional<Int> q) {
            PhiVector v = phi_map(PauliWord::parse(word, ring_of(q)));
            return std::vector<Int>(v.entries().begin(), v.entries().end());
        },
        py::arg("word"), py::arg("q") = py::none(), "Exponent vector of a Pauli word; q=None keeps integers.");
    m.def(
        "symplectic_product",
        [](const std::vector<Int>& u, const std::vector<Int>& v) {
            return symplectic_product(PhiVector::from_entries(u, Ring::integers()),
                                      PhiVector::from_entries(v, Ring::integers()));
        },
        py::arg("u"), py::arg("v"));

    py::class_<StabilizerCode>(m, "StabilizerCode")
        .def(py::init([](const std::vector<std::vector<Int>>& rows, std::size_t n, Int q) {
                 return StabilizerCode::create(to_matrix(rows, n), n, q);
             }),
             py::arg("rows"), py::arg("n"), py::arg("q"))
        .def_property_readonly("n", &StabilizerCode::n)
        .def_property_readonly("k", &StabilizerCode::k)
        .def_property_readonly("q", &StabilizerCode::q)
        .def_property_readonly("rows", [](const StabilizerCode& c) { return c.matrix().to_rows(); })
        .def("is_css", [](const StabilizerCode& c) { return is_css(c).has_value(); })
        .def("canonical", [](const StabilizerCode& c) { return canonical_form(c).code; })
        .def("__repr__", [](const StabilizerCode& c) {
            return "StabilizerCode(n=" + std::to_string(c.n()) + ", k=" + std::to_string(c.k()) +
                   ", q=" + std::to_string(c.q()) + ")";
        });

    py::class_<LdiCode>(m, "LdiCode")
        .def_static(
            "certify",
            [](const std::vector<std::vector<Int>>& rows, std::size_t n, Int origin_q) {
                return LdiCode::certify(to_matrix(rows, n), n, origin_q);
            },
            py::arg("rows"), py::arg("n"), py::arg("origin_q"))
        .def_property_readonly("n", &LdiCode::n)
        .def_property_readonly("k", &LdiCode::k)
        .def_property_readonly("origin_q", &LdiCode::origin_q)
        .def_property_readonly("max_entry", &LdiCode::max_entry)
        .def_property_readonly("rows", [](const LdiCode& c) { return c.matrix().to_rows(); })
        .def("reduce", &reduce_mod, py::arg("p"))
        .def("__repr__", [](const LdiCode& c) {
            return "LdiCode(n=" + std::to_string(c.n()) + ", k=" + std::to_string(c.k()) +
                   ", B=" + std::to_string(c.max_entry()) + ")";
        });

    m.def(
        "verify_ldi",
        [](const std::vector<std::vector<Int>>& rows) {
            std::size_t width = rows.empty() ? 0 : rows.front().size();
            LdiReport r = verify_ldi(Matrix::from_rows(rows, width));
            py::list violations;
            for (const auto& v : r.violations) {
                violations.append(py::make_tuple(v.first, v.second, v.value));
            }
            py::dict out;
            out["certified"] = r.certified();
            out["max_entry"] = r.max_entry;
            out["violations"] = violations;
            out["css"] = r.css;
            return out;
        },
        py::arg("rows"));
    m.def("ldi_prescriptive", [](const StabilizerCode& c) { return ldi_prescriptive(c); }, py::arg("code"));
    m.def("ldi_css_lift", &ldi_css_lift, py::arg("code"));
    m.def(
        "ldi_sign_search",
        [](const StabilizerCode& c, Int max_abs) -> std::optional<LdiCode> {
            SignSearchOptions options;
            options.max_abs = max_abs;
            SignSearchResult r = ldi_sign_search(c, options);
            if (r.status == SignSearchStatus::BudgetExceeded) {
                throw BudgetExceededError("sign search node budget exhausted");
            }
            return r.code;
        },
        py::arg("code"), py::arg("max_abs") = 0, "None when no assignment exists.");

    m.def(
        "distance",
        [](const StabilizerCode& c, std::optional<std::size_t> wmax) {
            return distance_tuple(distance_exact(c, wmax.value_or(c.n())));
        },
        py::arg("code"), py::arg("wmax") = py::none(), "(\"exact\" | \"at_least\", value)");
    m.def(
        "css_distance",
        [](const StabilizerCode& c, std::optional<std::size_t> wmax) {
            auto css = is_css(c);
            if (!css) {
                throw std::invalid_argument("css_distance needs a CSS code");
            }
            CssDistance d = css_distance(*css, c.q(), wmax.value_or(c.n()));
            return py::make_tuple(distance_tuple(d.dx), distance_tuple(d.dz));
        },
        py::arg("code"), py::arg("wmax") = py::none());

    m.def("p_star", [](Int b, unsigned d) { return to_py(p_star_general(b, d)); }, py::arg("B"), py::arg("d"));
    m.def(
        "p_star_css_squared", [](Int b, unsigned d) { return to_py(p_star_css(b, d).squared); }, py::arg("B"),
        py::arg("d"));
    m.def(
        "gqhb",
        [](unsigned n, unsigned k, unsigned d, Int q) {
            GqhbResult r = gqhb_holds(n, k, d, q);
            return py::make_tuple(r.holds, to_py(r.lhs), to_py(r.rhs));
        },
        py::arg("n"), py::arg("k"), py::arg("d"), py::arg("q"));

    m.def("hamming_css", &hamming_css, py::arg("N"));
    m.def("hamming_ldi", [](unsigned N) { return hamming_ldi(N); }, py::arg("N"));

    m.def(
        "load_code",
        [](const std::string& path) -> py::object {
            CodeFile f = load_code_file(path);
            if (f.is_ldi()) {
                return py::cast(f.to_ldi());
            }
            return py::cast(f.to_stabilizer());
        },
        py::arg("path"), "StabilizerCode for a mod-q file, LdiCode for an inf file.");
}
