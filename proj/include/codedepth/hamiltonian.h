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

#ifndef CODEDEPTH_HAMILTONIAN_H
#define CODEDEPTH_HAMILTONIAN_H

#include <optional>
#include <string>
#include <vector>

#include "codedepth/quantum_state.h"
#include "codedepth/stabilizer_group.h"

namespace codedepth {

enum class Normalization { Sum, Mean };

/// H = sum_i (I - C_i)/2, or the same divided by N.
struct CodeHamiltonian {
    StabilizerGroup checks;
    Normalization normalization = Normalization::Sum;

    size_t num_terms() const {
        return checks.num_checks();
    }
    size_t num_qubits() const {
        return checks.num_qubits();
    }
    double scale() const;
    /// Dense matrix of the whole Hamiltonian (code qubits only).
    CMat dense() const;
    /// Dense matrix of the projector (I - C_i)/2, unscaled.
    CMat term(size_t i) const;
};

CodeHamiltonian build_code_hamiltonian(const StabilizerGroup &g, Normalization normalization = Normalization::Sum);

/// Check `p` (on the code register) placed onto the state register.
PauliOperator embed_in_state(const PauliOperator &p, const QuantumState &state);

struct EnergyReport {
    std::vector<double> per_term;
    double total = 0;
    double mean = 0;

    std::string to_json() const;
    std::string to_csv() const;
};

EnergyReport energy_report(const QuantumState &state, const CodeHamiltonian &h);

struct EigenspaceProjection {
    double probability = 0;
    std::optional<QuantumState> state;
};

/// D_s applied to the state: tr(D_s psi D_s) and the normalized result, absent
/// below 1e-14.
EigenspaceProjection project_eigenspace(const QuantumState &state, const StabilizerGroup &g, const BitVector &s);

/// I - (I - H)^p for a mean-normalized code Hamiltonian. With g_i = (I + C_i)/2
/// and G = mean_i g_i, H^(p) = I - G^p.
struct AmplifiedHamiltonian {
    CodeHamiltonian base;
    size_t p = 1;

    /// Locality bound p * l of each product term.
    size_t term_locality() const;
    CMat dense() const;
    /// tr(G^p phi) by repeated application of G on the dense state.
    double g_power_expectation_dense(const QuantumState &state) const;
    /// tr(G^p phi) by expanding G^p over distinct check subsets S with weight
    /// surj(p, |S|) / N^p and prod_{i in S} g_i = 2^-|S| sum_{T subset S} C_T.
    /// Tableau states only.
    double g_power_expectation_subsets(const QuantumState &state) const;
    /// tr(H^(p) phi); tableau states use the subset expansion.
    double expectation(const QuantumState &state) const;
};

AmplifiedHamiltonian amplify(const CodeHamiltonian &h, size_t p);

struct GapCheck {
    double lhs = 0;
    double rhs = 0;
    bool holds = false;
};

/// tr(H^(p) phi) >= min{1, p tr(H phi)} / 2 - 2^t p^2 l^2 / n.
GapCheck amplification_gap_check(const QuantumState &state, const CodeHamiltonian &h, size_t p, size_t t);

struct SparsifiedHamiltonian {
    AmplifiedHamiltonian source;
    std::vector<std::vector<size_t>> sampled_indices;
    uint64_t seed = 0;

    /// G' = mean over sampled tuples of g_{i_1} ... g_{i_p}.
    CMat dense_g() const;
    /// I - G'.
    CMat dense() const;
};

/// k = ceil(n * max{32 / delta^2, log2(n) / l}).
size_t sparsify_sample_count(size_t n, size_t locality, double delta);

SparsifiedHamiltonian sparsify(const AmplifiedHamiltonian &hp, size_t k_samples, uint64_t seed);

/// Operator norm of a - b.
double spectral_deviation(const CMat &a, const CMat &b);

/// n/p disjoint blocks of p consecutive qubits. Term j is I - |cat><cat| on
/// block j.
struct CatHamiltonian {
    size_t n = 0;
    size_t p = 0;

    size_t num_terms() const {
        return n / p;
    }
    std::vector<size_t> block(size_t j) const;
    /// Sum of the terms.
    CMat dense() const;
    std::vector<double> term_energies(const QuantumState &state) const;
};

CatHamiltonian cat_state_hamiltonian(size_t n, size_t p);

}  // namespace codedepth

#endif
