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

#include "codedepth/pauli.h"

#include "codedepth/errors.h"

namespace codedepth {

namespace {

void require_same_size(const PauliOperator &a, const PauliOperator &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw DimensionError(
            "Pauli operators act on different qubit counts: " + std::to_string(a.num_qubits()) + " vs " +
            std::to_string(b.num_qubits()));
    }
}

}  // namespace

PauliOperator PauliOperator::from_string(std::string_view text) {
    size_t start = 0;
    bool negative = false;
    if (!text.empty() && (text[0] == '-' || text[0] == '+')) {
        negative = text[0] == '-';
        start = 1;
    }
    PauliOperator result(text.size() - start);
    result.negative = negative;
    for (size_t k = start; k < text.size(); k++) {
        char c = text[k];
        if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z' && c != '_') {
            throw ParseError(std::string("unexpected Pauli character '") + c + "'", 1, k + 1);
        }
        result.set_letter(k - start, c == '_' ? 'I' : c);
    }
    return result;
}

PauliOperator PauliOperator::single(size_t num_qubits, size_t qubit, char letter) {
    if (qubit >= num_qubits) {
        throw DimensionError("qubit index out of range");
    }
    PauliOperator p(num_qubits);
    p.set_letter(qubit, letter);
    return p;
}

char PauliOperator::letter(size_t qubit) const {
    bool x = xs.get(qubit);
    bool z = zs.get(qubit);
    return "IZXY"[(x << 1) | z];
}

void PauliOperator::set_letter(size_t qubit, char letter) {
    switch (letter) {
        case 'I':
            xs.set(qubit, false);
            zs.set(qubit, false);
            break;
        case 'X':
            xs.set(qubit, true);
            zs.set(qubit, false);
            break;
        case 'Y':
            xs.set(qubit, true);
            zs.set(qubit, true);
            break;
        case 'Z':
            xs.set(qubit, false);
            zs.set(qubit, true);
            break;
        default:
            throw ParameterError(std::string("not a Pauli letter: ") + letter);
    }
}

std::string PauliOperator::str() const {
    std::string out;
    if (negative) {
        out.push_back('-');
    }
    for (size_t q = 0; q < num_qubits(); q++) {
        out.push_back(letter(q));
    }
    return out;
}

std::strong_ordering PauliOperator::operator<=>(const PauliOperator &other) const {
    if (auto c = weight() <=> other.weight(); c != 0) {
        return c;
    }
    if (auto c = support() <=> other.support(); c != 0) {
        return c;
    }
    if (auto c = xs <=> other.xs; c != 0) {
        return c;
    }
    if (auto c = zs <=> other.zs; c != 0) {
        return c;
    }
    return negative <=> other.negative;
}

bool commutes(const PauliOperator &a, const PauliOperator &b) {
    require_same_size(a, b);
    uint64_t acc = 0;
    const uint64_t *ax = a.xs.words();
    const uint64_t *az = a.zs.words();
    const uint64_t *bx = b.xs.words();
    const uint64_t *bz = b.zs.words();
    for (size_t w = 0; w < a.xs.num_words(); w++) {
        acc ^= (ax[w] & bz[w]) ^ (az[w] & bx[w]);
    }
    return (std::popcount(acc) & 1) == 0;
}

int product_phase_exponent(const PauliOperator &a, const PauliOperator &b) {
    require_same_size(a, b);
    // Per qubit: XY = iZ, YZ = iX, ZX = iY and the reversed orders give -i.
    int plus = 0;
    int minus = 0;
    const uint64_t *ax = a.xs.words();
    const uint64_t *az = a.zs.words();
    const uint64_t *bx = b.xs.words();
    const uint64_t *bz = b.zs.words();
    for (size_t w = 0; w < a.xs.num_words(); w++) {
        uint64_t a_x = ax[w] & ~az[w];
        uint64_t a_y = ax[w] & az[w];
        uint64_t a_z = ~ax[w] & az[w];
        uint64_t b_x = bx[w] & ~bz[w];
        uint64_t b_y = bx[w] & bz[w];
        uint64_t b_z = ~bx[w] & bz[w];
        plus += std::popcount((a_x & b_y) | (a_y & b_z) | (a_z & b_x));
        minus += std::popcount((a_y & b_x) | (a_z & b_y) | (a_x & b_z));
    }
    return ((plus - minus) % 4 + 4) % 4;
}

PauliOperator multiply(const PauliOperator &a, const PauliOperator &b) {
    int k = product_phase_exponent(a, b);
    PauliOperator r(a.num_qubits());
    r.xs = a.xs ^ b.xs;
    r.zs = a.zs ^ b.zs;
    bool negative = a.negative ^ b.negative;
    // k even: a*b = (-1)^(k/2) R. k odd: a*b = i^k R' and we return R = -i a*b,
    // i.e. i^(k-1) R' = (-1)^((k-1)/2) R'.
    int half = (k & 1) ? (k - 1) / 2 : k / 2;
    if (half & 1) {
        negative = !negative;
    }
    r.negative = negative;
    return r;
}

PauliOperator embed(const PauliOperator &p, size_t num_qubits, const std::vector<size_t> &positions) {
    if (positions.size() != p.num_qubits()) {
        throw DimensionError("embedding position count does not match operator size");
    }
    PauliOperator out(num_qubits);
    out.negative = p.negative;
    for (size_t q = 0; q < positions.size(); q++) {
        if (positions[q] >= num_qubits) {
            throw DimensionError("embedding position out of range");
        }
        out.xs.set(positions[q], p.xs.get(q));
        out.zs.set(positions[q], p.zs.get(q));
    }
    return out;
}

}  // namespace codedepth
