// Copyright 2026 The qclogic Authors
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

#include <pybind11/complex.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qcl/dense_oracle.h"
#include "qcl/error.h"
#include "qcl/gates.h"
#include "qcl/io.h"
#include "qcl/laws.h"
#include "qcl/quregister.h"
#include "qcl/semantics.h"
#include "qcl/syntax.h"
#include "qcl/xcheck.h"

namespace py = pybind11;
using namespace qcl;

namespace {

std::vector<Amplitude> to_vector(std::span<const Amplitude> amps) {
    return {amps.begin(), amps.end()};
}

py::dict counterexample_dict(const Counterexample &c) {
    py::dict d;
    d["realization"] = c.realization;
    d["prob_left"] = c.prob_left;
    d["prob_right"] = c.prob_right;
    d["margin"] = c.margin;
    d["origin"] = witness_origin_name(c.origin);
    d["sample_index"] = c.sample_index;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Quantum computational logic: quregisters, gates and the probabilistic consequence relation.";

    py::register_exception<InvalidState>(m, "InvalidState", PyExc_ValueError);
    py::register_exception<ResourceLimit>(m, "ResourceLimit", PyExc_MemoryError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<MissingAssignment>(m, "MissingAssignment", PyExc_KeyError);
    py::register_exception<NotTruthFunctional>(m, "NotTruthFunctional", PyExc_ValueError);
    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);

    py::class_<Quregister>(m, "Quregister")
        .def(py::init([](size_t n, const std::vector<Amplitude> &amps) { return Quregister(n, amps); }),
             py::arg("n_qubits"), py::arg("amplitudes"))
        .def_static("qubit", &Quregister::qubit, py::arg("a0"), py::arg("a1"))
        .def_property_readonly("n_qubits", &Quregister::n_qubits)
        .def_property_readonly("dim", &Quregister::dim)
        .def_property_readonly("amplitudes", [](const Quregister &q) { return to_vector(q.amplitudes()); })
        .def("__getitem__", [](const Quregister &q, size_t j) {
            if (j >= q.dim()) {
                throw py::index_error();
            }
            return q[j];
        })
        .def("__len__", &Quregister::dim)
        .def("norm_squared", &Quregister::norm_squared)
        .def("is_unit", &Quregister::is_unit, py::arg("tolerance") = kUnitTolerance)
        .def(py::self == py::self)
        .def("__repr__", &Quregister::str)
        .def("to_json", [](const Quregister &q) { return serialize(q); })
        .def_static("from_json", [](const std::string &text) { return deserialize(text); });

    m.def("basis_state", [](const std::vector<int> &bits) {
        std::vector<Bit> b;
        for (int x : bits) {
            if (x != 0 && x != 1) {
                throw std::invalid_argument("bits must be 0 or 1");
            }
            b.push_back(x ? Bit::One : Bit::Zero);
        }
        return basis_state(std::span<const Bit>(b));
    });
    m.def("tensor", &tensor);
    m.def("prob", &prob);
    m.def("norm", &norm);
    m.def("inner_product", &inner_product);

    m.def("apply_not", &apply_not);
    m.def("apply_sqrt_not", &apply_sqrt_not);
    m.def("apply_toffoli", &apply_toffoli, py::arg("psi"), py::arg("n"), py::arg("m"));
    m.def("and_gate", &and_gate);
    m.def("or_gate", &or_gate);

    py::class_<dense::DenseMatrix>(m, "DenseMatrix")
        .def_property_readonly("dim", &dense::DenseMatrix::dim)
        .def_property_readonly("width", &dense::DenseMatrix::width)
        .def("at", [](const dense::DenseMatrix &d, size_t row, size_t col) {
            if (row >= d.dim() || col >= d.dim()) {
                throw py::index_error();
            }
            return d.at(row, col);
        })
        .def_property_readonly("entries", &dense::DenseMatrix::entries);
    m.def(
        "gate_matrix",
        [](const std::string &kind, size_t n, size_t mm) {
            GateSpec spec = kind == "not"        ? GateSpec::not_gate(n)
                            : kind == "sqrt_not" ? GateSpec::sqrt_not(n)
                            : kind == "toffoli"  ? GateSpec::toffoli(n, mm)
                                                 : throw std::invalid_argument("unknown gate kind: " + kind);
            return dense::matrix_for(spec);
        },
        py::arg("kind"), py::arg("n"), py::arg("m") = 0);
    m.def("apply_dense", &dense::apply_dense);
    m.def("check_unitary", &dense::check_unitary);

    py::class_<Formula>(m, "Formula")
        .def("__str__", [](const Formula &f) { return format(f); })
        .def("__repr__", [](const Formula &f) { return "Formula('" + format(f) + "')"; })
        .def(py::self == py::self);
    m.def("parse", &parse);
    m.def("format", &format);
    m.def("qubit_count", &qubit_count);
    m.def("expand_disjunction", &expand_disjunction);
    m.def("atoms_of", &atoms_of);

    py::class_<Realization>(m, "Realization")
        .def(py::init<>())
        .def(py::init([](const std::map<std::string, Quregister> &assignment) {
            Realization r;
            for (const auto &[atom, q] : assignment) {
                r.assign(atom, q);
            }
            return r;
        }))
        .def("assign", &Realization::assign)
        .def("__getitem__", &Realization::at)
        .def("__contains__", &Realization::contains)
        .def("__len__", &Realization::size)
        .def("to_json", [](const Realization &r) { return realization_to_json(r).dump(); })
        .def_static("from_json",
                    [](const std::string &text) {
                        try {
                            return realization_from_json(nlohmann::json::parse(text));
                        } catch (const nlohmann::json::exception &e) {
                            throw InputError(e.what());
                        }
                    })
        .def_static("load", &load_realization_file);

    m.def("qubit_with_probability", &qubit_with_probability);
    m.def("evaluate", &evaluate);
    m.def("prob_of", &prob_of);
    m.def("prob_via_atoms", &prob_via_atoms);
    m.def("is_true_at", &is_true_at);
    m.def("consequence_at", [](const Formula &a, const Formula &b, const Realization &r) {
        auto v = consequence_at(a, b, r);
        py::dict d;
        d["holds"] = v.holds_at_sample;
        d["prob_left"] = v.prob_left;
        d["prob_right"] = v.prob_right;
        d["margin"] = v.margin;
        return d;
    });
    m.def("sample_realization", &sample_realization, py::arg("atoms"), py::arg("seed"));
    m.def(
        "search_counterexample",
        [](const Formula &a, const Formula &b, size_t budget, uint64_t seed) -> py::object {
            auto c = search_counterexample(a, b, budget, seed);
            if (!c) {
                return py::none();
            }
            return counterexample_dict(*c);
        },
        py::arg("left"), py::arg("right"), py::arg("budget") = kDefaultBudget, py::arg("seed") = 0);

    m.def(
        "run_laws",
        [](size_t budget, uint64_t seed) { return suite_to_json(run_suite(budget, seed)).dump(); },
        py::arg("budget") = kDefaultBudget, py::arg("seed") = 0,
        "Runs the builtin law suite and returns the JSON report text.");
    m.def(
        "gate_xcheck",
        [](size_t max_width, size_t trials, uint64_t seed) {
            return xcheck_to_json(run_gate_xcheck(max_width, trials, seed)).dump();
        },
        py::arg("max_width") = 8, py::arg("trials") = 200, py::arg("seed") = 0);

    m.attr("ENGINE_VERSION") = kEngineVersion;
}
