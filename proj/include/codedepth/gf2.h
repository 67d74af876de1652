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

#ifndef CODEDEPTH_GF2_H
#define CODEDEPTH_GF2_H

#include <optional>
#include <vector>

#include "codedepth/bit_vector.h"
#include "codedepth/pauli.h"

namespace codedepth {

/// Dense GF(2) matrix as a list of rows.
using BitMatrix = std::vector<BitVector>;

/// Row-reduced echelon form that remembers, for every reduced row, which
/// input rows were XORed together to produce it.
struct RowEchelon {
    size_t num_cols = 0;
    size_t num_input_rows = 0;
    std::vector<BitVector> rows;      // nonzero reduced rows, pivots increasing
    std::vector<size_t> pivots;       // pivot column of rows[i]
    std::vector<BitVector> combos;    // combos[i] marks input rows summing to rows[i]
    std::vector<BitVector> relations; // input-row combinations summing to zero

    explicit RowEchelon(const BitMatrix &input, size_t num_cols);

    size_t rank() const {
        return rows.size();
    }
    /// Reduces `v` against the pivots. Returns the residue and the input-row
    /// combination that was folded in.
    std::pair<BitVector, BitVector> reduce(const BitVector &v) const;
    bool in_span(const BitVector &v) const {
        return !reduce(v).first.any();
    }
    /// Input-row combination summing to `v`, if one exists.
    std::optional<BitVector> solve(const BitVector &v) const;
};

size_t gf2_rank(const BitMatrix &rows, size_t num_cols);

/// Basis for { v : dot(row, v) = 0 for every row }, one vector per free column
/// in increasing column order.
BitMatrix gf2_nullspace(const BitMatrix &rows, size_t num_cols);

/// a * b^T over GF(2) given row lists of equal width.
BitMatrix gf2_mul_transpose(const BitMatrix &a, const BitMatrix &b);

/// Symplectic vector [x | z] of length 2n.
BitVector to_symplectic(const PauliOperator &p);
PauliOperator from_symplectic(const BitVector &v, size_t num_qubits);
/// [z | x], so that dot(twisted(p), to_symplectic(q)) is the commutator bit.
BitVector twisted_symplectic(const PauliOperator &p);
bool symplectic_product(const BitVector &a, const BitVector &b, size_t num_qubits);

}  // namespace codedepth

#endif
