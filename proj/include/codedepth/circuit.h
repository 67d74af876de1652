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

#ifndef CODEDEPTH_CIRCUIT_H
#define CODEDEPTH_CIRCUIT_H

#include <cstdint>
#include <string>
#include <vector>

#include "codedepth/dense.h"

namespace codedepth {

/// One Clifford primitive inside a compound gate, on local qubit indices.
struct GateOp {
    std::string name;
    std::vector<size_t> local;
};

/// A one- or two-qubit gate. Named gates: I H S SDG X Y Z (one qubit) and
/// CX CY CZ SWAP (two qubits, qubits[0] is the control). A program gate is a
/// sequence of named gates applied left to right, written "H@0 CX@0,1". A
/// dense gate carries its 2x2 or 4x4 matrix with local index b0 + 2*b1.
struct Gate {
    enum class Kind { Named, Program, Dense };

    Kind kind = Kind::Named;
    std::string name;
    std::vector<size_t> qubits;
    std::vector<GateOp> program;
    CMat matrix;

    static Gate named(const std::string &name, std::vector<size_t> qubits);
    static Gate from_program(const std::string &text, std::vector<size_t> qubits);
    static Gate dense(const CMat &matrix, std::vector<size_t> qubits);

    bool is_clifford() const {
        return kind != Kind::Dense;
    }
    /// Local 2x2 or 4x4 unitary.
    CMat unitary() const;
    Gate inverse() const;
    /// Program text for program gates, the name for named gates.
    std::string program_text() const;
};

/// Number of qubits a named primitive acts on; throws on unknown names.
size_t named_gate_arity(const std::string &name);
CMat named_gate_matrix(const std::string &name);

/// Layers of gates on disjoint qubits over m qubits. `code_qubits` records
/// which qubits carry the code; the rest are ancillas.
class LayeredCircuit {
   public:
    size_t m = 0;
    std::vector<size_t> code_qubits;
    std::vector<std::vector<Gate>> layers;

    LayeredCircuit() = default;
    explicit LayeredCircuit(size_t m);
    LayeredCircuit(size_t m, std::vector<size_t> code_qubits);

    size_t depth() const {
        return layers.size();
    }
    size_t gate_count() const;
    bool is_clifford() const;
    /// Validates supports and appends.
    void append_layer(std::vector<Gate> layer);
    /// Appends every layer of `other`, which must have the same m.
    void append(const LayeredCircuit &other);
    /// Reversed layers with inverted gates.
    LayeredCircuit inverse() const;

    std::string to_json() const;
    static LayeredCircuit from_json(const std::string &text);
};

/// Backward lightcone of A through layers depth..1 (A itself included).
std::vector<size_t> lightcone(const LayeredCircuit &u, const std::vector<size_t> &region);
/// Keeps only the gates that touch the running backward cone of A.
LayeredCircuit restrict_to_lightcone(const LayeredCircuit &u, const std::vector<size_t> &region);

enum class GateFamily { Clifford, HaarDense };

/// t layers, each a uniformly random maximal matching. Clifford pairs get
/// random single-qubit Cliffords around an entangler from {I, CX, CZ}; an
/// unmatched qubit gets a random single-qubit gate. Deterministic per seed.
LayeredCircuit random_low_depth(size_t m, size_t t, GateFamily family, uint64_t seed);

/// The 24 single-qubit Cliffords as H/S words (applied left to right), in BFS order.
const std::vector<std::string> &single_qubit_clifford_words();

}  // namespace codedepth

#endif
