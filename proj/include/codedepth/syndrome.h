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

#ifndef CODEDEPTH_SYNDROME_H
#define CODEDEPTH_SYNDROME_H

#include <map>
#include <string>
#include <vector>

#include "codedepth/hamiltonian.h"

namespace codedepth {

/// Checks are adjacent when their supports intersect.
struct CheckOverlapGraph {
    std::vector<std::vector<size_t>> adjacency;

    size_t num_vertices() const {
        return adjacency.size();
    }
    size_t degree(size_t v) const {
        return adjacency[v].size();
    }
    size_t max_degree() const;
    bool has_edge(size_t a, size_t b) const;
};

CheckOverlapGraph overlap_graph(const StabilizerGroup &g);

struct Coloring {
    std::vector<size_t> color;
    size_t color_count = 0;

    bool is_proper(const CheckOverlapGraph &graph) const;
};

/// Vertices by descending degree, ties by index; each takes the smallest free color.
Coloring greedy_coloring(const CheckOverlapGraph &graph);

struct SyndromeCircuit {
    /// Acts on m + N qubits; check i writes into ancilla m + i.
    LayeredCircuit circuit;
    size_t locality = 0;
    /// 2 l^3.
    size_t depth_bound = 0;
    /// l (l^2 + 1) + 2: colors times check weight plus the two Hadamard layers.
    size_t construction_bound = 0;

    size_t depth() const {
        return circuit.depth();
    }
};

/// Hadamard on every ancilla, then for each color the controlled-Pauli gates
/// of its checks (one gate per layer per check), then Hadamard again. Code
/// qubit q of the group is state qubit code_qubits[q] of an m-qubit register;
/// an empty `code_qubits` means 0..n-1 with m = n.
SyndromeCircuit build_syndrome_circuit(
    const StabilizerGroup &g, const Coloring &coloring, size_t m = 0, std::vector<size_t> code_qubits = {});

SyndromeCircuit build_syndrome_circuit(const StabilizerGroup &g);

/// Copy of `u` on a wider register; the new qubits are idle.
LayeredCircuit widen_circuit(const LayeredCircuit &u, size_t m);

/// The state with `extra` qubits in |0> appended after the existing ones.
QuantumState append_zero_qubits(const QuantumState &state, size_t extra);

struct SyndromeBranch {
    double probability = 0;
    QuantumState state;
};

/// Psi as a map from syndrome string ("0100...", check 0 first) to branch.
struct DecoheredState {
    std::map<std::string, SyndromeBranch> branches;

    double total_probability() const;
    /// sum_s p_s |s|.
    double mean_syndrome_weight() const;
    std::string to_json() const;
};

/// Measures the checks in `order` (default 0..N-1), splitting into branches
/// and dropping those below 1e-14.
DecoheredState decohere(const QuantumState &state, const StabilizerGroup &g, std::vector<size_t> order = {});

struct GentleMeasurementReport {
    double fidelity = 0;
    double bound = 0;
    bool holds = false;
    std::vector<size_t> sma_in_region;
};

/// psi = V (phi (x) |0^N>), Psi_R = psi_R dephased on the SMA qubits in R.
/// Region indices refer to the m + N register.
GentleMeasurementReport gentle_measurement_report(
    const QuantumState &state, const StabilizerGroup &g, const std::vector<size_t> &region);

}  // namespace codedepth

#endif
