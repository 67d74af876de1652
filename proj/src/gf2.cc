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

#include "codedepth/gf2.h"

#include <algorithm>

#include "codedepth/errors.h"

namespace codedepth {

RowEchelon::RowEchelon(const BitMatrix &input, size_t num_cols) : num_cols(num_cols), num_input_rows(input.size()) {
    size_t n = input.size();
    for (size_t r = 0; r < n; r++) {
        if (input[r].size() != num_cols) {
            throw DimensionError("matrix row has the wrong width");
        }
        BitVector row = input[r];
        BitVector combo(n);
        combo.set(r, true);
        for (size_t i = 0; i < rows.size(); i++) {
            if (row.get(pivots[i])) {
                row ^= rows[i];
                combo ^= combos[i];
            }
        }
        if (!row.any()) {
            relations.push_back(std::move(combo));
            continue;
        }
        size_t pivot = row.ones().front();
        // Clear the new pivot column from existing rows to keep full reduction.
        for (size_t i = 0; i < rows.size(); i++) {
            if (rows[i].get(pivot)) {
                rows[i] ^= row;
                combos[i] ^= combo;
            }
        }
        auto pos = std::lower_bound(pivots.begin(), pivots.end(), pivot) - pivots.begin();
        pivots.insert(pivots.begin() + pos, pivot);
        rows.insert(rows.begin() + pos, std::move(row));
        combos.insert(combos.begin() + pos, std::move(combo));
    }
}

std::pair<BitVector, BitVector> RowEchelon::reduce(const BitVector &v) const {
    BitVector residue = v;
    BitVector combo(num_input_rows);
    for (size_t i = 0; i < rows.size(); i++) {
        if (residue.get(pivots[i])) {
            residue ^= rows[i];
            combo ^= combos[i];
        }
    }
    return {std::move(residue), std::move(combo)};
}

std::optional<BitVector> RowEchelon::solve(const BitVector &v) const {
    auto [residue, combo] = reduce(v);
    if (residue.any()) {
        return std::nullopt;
    }
    return combo;
}

size_t gf2_rank(const BitMatrix &rows, size_t num_cols) {
    return RowEchelon(rows, num_cols).rank();
}

BitMatrix gf2_nullspace(const BitMatrix &rows, size_t num_cols) {
    RowEchelon ech(rows, num_cols);
    std::vector<bool> is_pivot(num_cols, false);
    for (size_t p : ech.pivots) {
        is_pivot[p] = true;
    }
    BitMatrix basis;
    for (size_t f = 0; f < num_cols; f++) {
        if (is_pivot[f]) {
            continue;
        }
        BitVector v(num_cols);
        v.set(f, true);
        for (size_t i = 0; i < ech.rows.size(); i++) {
            if (ech.rows[i].get(f)) {
                v.set(ech.pivots[i], true);
            }
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

BitMatrix gf2_mul_transpose(const BitMatrix &a, const BitMatrix &b) {
    BitMatrix out;
    for (const auto &ra : a) {
        BitVector row(b.size());
        for (size_t j = 0; j < b.size(); j++) {
            if (ra.size() != b[j].size()) {
                throw DimensionError("matrix widths differ");
            }
            row.set(j, dot(ra, b[j]));
        }
        out.push_back(std::move(row));
    }
    return out;
}

BitVector to_symplectic(const PauliOperator &p) {
    size_t n = p.num_qubits();
    BitVector v(2 * n);
    for (size_t q : p.xs.ones()) {
        v.set(q, true);
    }
    for (size_t q : p.zs.ones()) {
        v.set(n + q, true);
    }
    return v;
}

BitVector twisted_symplectic(const PauliOperator &p) {
    size_t n = p.num_qubits();
    BitVector v(2 * n);
    for (size_t q : p.zs.ones()) {
        v.set(q, true);
    }
    for (size_t q : p.xs.ones()) {
        v.set(n + q, true);
    }
    return v;
}

PauliOperator from_symplectic(const BitVector &v, size_t num_qubits) {
    if (v.size() != 2 * num_qubits) {
        throw DimensionError("symplectic vector has the wrong length");
    }
    PauliOperator p(num_qubits);
    for (size_t k : v.ones()) {
        if (k < num_qubits) {
            p.xs.set(k, true);
        } else {
            p.zs.set(k - num_qubits, true);
        }
    }
    return p;
}

bool symplectic_product(const BitVector &a, const BitVector &b, size_t num_qubits) {
    bool acc = false;
    for (size_t q = 0; q < num_qubits; q++) {
        acc ^= (a.get(q) && b.get(num_qubits + q)) ^ (a.get(num_qubits + q) && b.get(q));
    }
    return acc;
}

}  // namespace codedepth
