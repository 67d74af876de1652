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

#ifndef CODEDEPTH_PAULI_H
#define CODEDEPTH_PAULI_H

#include <string>
#include <string_view>

#include "codedepth/bit_vector.h"

namespace codedepth {

/// A Hermitian n-qubit Pauli operator: sign * P_0 (x) P_1 (x) ... with each
/// P_q in {I, X, Y, Z}. Qubit q has X part `xs[q]` and Z part `zs[q]`; both
/// set means Y (the Hermitian matrix, not XZ).
class PauliOperator {
   public:
    BitVector xs;
    BitVector zs;
    bool negative = false;

    PauliOperator() = default;
    explicit PauliOperator(size_t num_qubits) : xs(num_qubits), zs(num_qubits) {
    }

    /// Parses "XZZXI", "-IXYZ", "+Z". Throws ParseError with the offending column.
    static PauliOperator from_string(std::string_view text);
    /// Single-letter operator on one qubit.
    static PauliOperator single(size_t num_qubits, size_t qubit, char letter);

    size_t num_qubits() const {
        return xs.size();
    }
    size_t weight() const {
        return (xs | zs).popcount();
    }
    BitVector support() const {
        return xs | zs;
    }
    int sign() const {
        return negative ? -1 : 1;
    }
    bool is_identity() const {
        return !xs.any() && !zs.any();
    }

    /// One of 'I', 'X', 'Y', 'Z'.
    char letter(size_t qubit) const;
    void set_letter(size_t qubit, char letter);

    /// "+XZZXI" style is not used; the sign prints only when negative ("-XZZXI").
    std::string str() const;

    bool operator==(const PauliOperator &other) const = default;
    /// Ordering by (weight, bit pattern), sign last.
    std::strong_ordering operator<=>(const PauliOperator &other) const;

    /// Same X/Z parts, sign ignored.
    bool equal_up_to_sign(const PauliOperator &other) const {
        return xs == other.xs && zs == other.zs;
    }
};

/// Symplectic product is zero.
bool commutes(const PauliOperator &a, const PauliOperator &b);

/// Exponent k in {0,1,2,3} such that (unsigned a)(unsigned b) = i^k (unsigned a*b),
/// where "unsigned" drops the stored signs.
int product_phase_exponent(const PauliOperator &a, const PauliOperator &b);

/// Product of two Hermitian Paulis. Exact when the operands commute. When they
/// anti-commute the true product is anti-Hermitian and the returned R satisfies
/// a * b = i * R.
PauliOperator multiply(const PauliOperator &a, const PauliOperator &b);

/// Restriction of `p` to `num_qubits` wide register, placing qubit j of p at
/// `positions[j]`.
PauliOperator embed(const PauliOperator &p, size_t num_qubits, const std::vector<size_t> &positions);

}  // namespace codedepth

#endif
