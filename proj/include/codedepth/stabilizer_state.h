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

#ifndef CODEDEPTH_STABILIZER_STATE_H
#define CODEDEPTH_STABILIZER_STATE_H

#include <optional>
#include <vector>

#include "codedepth/circuit.h"
#include "codedepth/dense.h"
#include "codedepth/stabilizer_group.h"

namespace codedepth {

/// Uniform mixture over the joint +1 eigenspace of r independent commuting
/// generators on m qubits. r = m is a pure stabilizer state; entropy is m - r.
class StabilizerState {
   public:
    StabilizerState() = default;
    /// Generators are reduced to an independent subset; they must commute and
    /// must not generate -I.
    StabilizerState(size_t num_qubits, std::vector<PauliOperator> generators);

    static StabilizerState zero_state(size_t num_qubits);
    static StabilizerState maximally_mixed(size_t num_qubits);
    /// Uniform mixture over the code space.
    static StabilizerState code_mixture(const StabilizerGroup &g);
    /// Code state with Zbar_j eigenvalue (-1)^(bit j of `bits`), using the
    /// deterministic logical basis.
    static StabilizerState logical_basis_state(const StabilizerGroup &g, uint64_t bits);

    size_t num_qubits() const {
        return num_qubits_;
    }
    const std::vector<PauliOperator> &generators() const {
        return generators_;
    }
    size_t rank() const {
        return generators_.size();
    }
    bool is_pure() const {
        return generators_.size() == num_qubits_;
    }
    /// Exact entropy in bits.
    size_t entropy() const {
        return num_qubits_ - generators_.size();
    }

    /// +1 / -1 when +P / -P is in the group, otherwise 0.
    int expectation(const PauliOperator &p) const;

    void apply_gate(const Gate &g);
    void apply_circuit(const LayeredCircuit &c);
    /// Conjugation P -> U P U^dagger for a named primitive.
    static void conjugate_named(PauliOperator &p, const std::string &name, const std::vector<size_t> &qubits);

    /// Projects onto the eigenvalue (-1)^outcome of p. Returns the probability;
    /// the state is left unchanged when it is zero.
    double project(const PauliOperator &p, bool outcome);
    /// Projects onto the syndrome space D_s. Returns tr(D_s rho).
    double project_syndrome(const StabilizerGroup &g, const BitVector &s);

    /// Restriction to `region` (qubit region[j] becomes j): the subgroup
    /// supported inside the region.
    StabilizerState marginal(const std::vector<size_t> &region) const;

    CMat to_density() const;
    /// Pure states only.
    CVec to_vector() const;

   private:
    size_t num_qubits_ = 0;
    std::vector<PauliOperator> generators_;
};

}  // namespace codedepth

#endif
