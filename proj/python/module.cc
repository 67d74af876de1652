// Copyright 2026 The codedepth Authors
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
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cli.h"
#include "codedepth/bounds.h"
#include "codedepth/codes.h"
#include "codedepth/frontier.h"
#include "codedepth/hamiltonian.h"
#include "codedepth/json_util.h"
#include "codedepth/kls.h"

namespace py = pybind11;
using namespace codedepth;

namespace {

std::optional<double> opt(const py::dict &d, const char *key) {
    if (!d.contains(key) || d[key].is_none()) {
        return std::nullopt;
    }
    return d[key].cast<double>();
}

std::string bounds_json(const py::dict &d) {
    BoundInputs in;
    in.n = opt(d, "n");
    in.k = opt(d, "k");
    in.d = opt(d, "d");
    in.locality = opt(d, "l");
    in.eps = opt(d, "eps");
    in.delta = opt(d, "delta");
    in.t = opt(d, "t");
    in.f = opt(d, "f");
    in.m = opt(d, "m");
    if (auto c = opt(d, "c_l")) {
        in.c_l = *c;
    }
    return depth_lower_bounds(in).to_json();
}

py::tuple cli(const std::vector<std::string> &args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_codedepth, m) {
    m.doc() = "Native core of codedepth.";

    py::class_<PauliOperator>(m, "PauliOperator")
        .def(py::init([](const std::string &s) { return PauliOperator::from_string(s); }), py::arg("text"))
        .def_property_readonly("num_qubits", &PauliOperator::num_qubits)
        .def_property_readonly("weight", &PauliOperator::weight)
        .def_property_readonly("sign", &PauliOperator::sign)
        .def("commutes", [](const PauliOperator &a, const PauliOperator &b) { return commutes(a, b); })
        .def("__str__", &PauliOperator::str)
        .def("__repr__", [](const PauliOperator &p) { return "PauliOperator('" + p.str() + "')"; })
        .def("__eq__", [](const PauliOperator &a, const PauliOperator &b) { return a == b; });

    py::class_<StabilizerGroup>(m, "StabilizerGroup")
        .def(py::init([](size_t n, const std::vector<std::string> &checks) {
                 std::vector<PauliOperator> gens;
                 for (const auto &c : checks) {
                     gens.push_back(PauliOperator::from_string(c));
                 }
                 return StabilizerGroup(n, std::move(gens));
             }),
             py::arg("num_qubits"), py::arg("checks"))
        .def_property_readonly("num_qubits", &StabilizerGroup::num_qubits)
        .def_property_readonly("num_checks", &StabilizerGroup::num_checks)
        .def_property_readonly("num_logical", &StabilizerGroup::num_logical)
        .def_property_readonly("locality", &StabilizerGroup::locality)
        .def_property_readonly("checks", [](const StabilizerGroup &g) { return g.generators(); })
        .def("to_json", [](const StabilizerGroup &g) { return code_to_json(g); })
        .def("distance", [](const StabilizerGroup &g, size_t cap) { return min_weight_logical(g, cap).distance; },
             py::arg("cap") = 8)
        .def("__repr__", [](const StabilizerGroup &g) { return code_parameters(g, 0).str(); });

    m.def("builtin_code", &builtin_code, py::arg("name"));
    m.def("builtin_code_names", &builtin_code_names);
    m.def("parse_code_json", &parse_code_json, py::arg("text"));
    m.def("toric_code", &toric_code, py::arg("L"));

    py::class_<LayeredCircuit>(m, "LayeredCircuit")
        .def(py::init<size_t>(), py::arg("num_qubits"))
        .def_readonly("num_qubits", &LayeredCircuit::m)
        .def_property_readonly("depth", &LayeredCircuit::depth)
        .def_property_readonly("gate_count", &LayeredCircuit::gate_count)
        .def("inverse", &LayeredCircuit::inverse)
        .def("to_json", &LayeredCircuit::to_json)
        .def_static("from_json", &LayeredCircuit::from_json, py::arg("text"));

    m.def(
        "random_clifford_circuit",
        [](size_t m, size_t t, uint64_t seed) { return random_low_depth(m, t, GateFamily::Clifford, seed); },
        py::arg("num_qubits"), py::arg("depth"), py::arg("seed"));
    m.def(
        "lightcone",
        [](const LayeredCircuit &c, const std::vector<size_t> &region) {
            auto cone = lightcone(c, region);
            std::sort(cone.begin(), cone.end());
            return cone;
        },
        py::arg("circuit"), py::arg("region"));
    m.def(
        "circuit_energy", [](const LayeredCircuit &c, const StabilizerGroup &g) { return circuit_energy(c, g).per_term; },
        py::arg("circuit"), py::arg("code"));
    m.def(
        "hamiltonian_matrix", [](const StabilizerGroup &g) { return build_code_hamiltonian(g).dense(); }, py::arg("code"));

    py::class_<KlsPolynomial>(m, "KlsPolynomial")
        .def_readonly("n_domain", &KlsPolynomial::n_domain)
        .def_readonly("degree", &KlsPolynomial::deg)
        .def_readonly("achieved_error", &KlsPolynomial::achieved_error)
        .def_readonly("chebyshev", &KlsPolynomial::chebyshev)
        .def("error_bound", &KlsPolynomial::error_bound)
        .def("within_bound", &KlsPolynomial::within_bound)
        .def("__call__", [](const KlsPolynomial &k, double j) { return k(j); });
    m.def("kls_polynomial", &kls_polynomial, py::arg("n_domain"), py::arg("degree"));

    m.def("_depth_lower_bounds", &bounds_json);
    m.def(
        "_zero_state_distance",
        [](const StabilizerGroup &g) {
            auto r = zero_state_distance_check(g);
            return py::dict(
                py::arg("fidelity_squared") = r.fidelity_squared, py::arg("distance") = r.distance, py::arg("d") = r.d,
                py::arg("threshold") = r.threshold, py::arg("holds") = r.holds);
        },
        py::arg("code"));
    m.def(
        "_frontier",
        [](const StabilizerGroup &g, size_t t_max, const std::string &strategy, size_t budget, uint64_t seed) {
            return frontier_to_json(frontier_search(g, t_max, parse_strategy(strategy), budget, seed));
        },
        py::arg("code"), py::arg("t_max"), py::arg("strategy"), py::arg("budget"), py::arg("seed"));
    m.def("_cli", &cli);
}
