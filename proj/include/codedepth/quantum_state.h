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

#ifndef CODEDEPTH_QUANTUM_STATE_H
#define CODEDEPTH_QUANTUM_STATE_H

#include <optional>
#include <variant>

#include "codedepth/circuit.h"
#include "codedepth/dense.h"
#include "codedepth/stabilizer_state.h"

namespace codedepth {

enum class Backend { Vector, Density, Tableau };

/// A state on m qubits in one of three representations. `code_qubits` lists
/// the qubits carrying the code (all qubits by default). `provenance` is the
/// circuit that produced it from |0^m>, when known.
class QuantumState {
   public:
    std::variant<CVec, CMat, StabilizerState> data;
    size_t m = 0;
    std::vector<size_t> code_qubits;
    std::optional<LayeredCircuit> provenance;

    static QuantumState from_vector(CVec psi);
    static QuantumState from_density(CMat rho);
    static QuantumState from_tableau(StabilizerState s);
    static QuantumState zero(size_t m, Backend backend);
    /// id / 2^m.
    static QuantumState maximally_mixed(size_t m, Backend backend);
    /// U |0^m> on the requested backend, with U recorded as provenance.
    static QuantumState prepared(const LayeredCircuit &u, Backend backend);

    Backend backend() const;
    /// Checks the representation invariants (unit norm, trace-1 PSD, ...).
    void validate() const;

    double expectation(const PauliOperator &p) const;
    /// Dense density matrix of the whole state.
    CMat density() const;
    /// Dense state vector; the state must be pure.
    CVec vector() const;
    /// Upper bound on the circuit complexity from the provenance circuit.
    std::optional<size_t> depth_upper_bound() const;
};

/// Exact evolution. Tableau states need Clifford gates.
QuantumState apply_circuit(const LayeredCircuit &u, const QuantumState &state);

/// Marginal density on `region` (region[j] becomes bit j).
CMat reduced_density(const QuantumState &state, const std::vector<size_t> &region);

struct SubstitutionReport {
    bool holds = false;
    double deviation = 0;
};

/// Compares tr_{-A}(U psi U^dagger) against tr_{-A}(U (psi_{L_A} (x) nu) U^dagger)
/// where nu is maximally mixed outside the lightcone of A.
SubstitutionReport marginal_substitution_check(
    const LayeredCircuit &u, const QuantumState &state, const std::vector<size_t> &region, double tol = 1e-10);

/// rho_L (x) id/2^{m-|L|} laid out on m qubits, with rho_L on the qubits in `region`.
CMat extend_with_mixed(const CMat &rho_region, size_t m, const std::vector<size_t> &region);

}  // namespace codedepth

#endif
