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

#include "codedepth/stabilizer_group.h"

#include <algorithm>
#include <array>

#include "codedepth/errors.h"

namespace codedepth {

StabilizerGroup::StabilizerGroup(size_t num_qubits, std::vector<PauliOperator> generators)
    : num_qubits_(num_qubits), generators_(std::move(generators)) {
    BitMatrix rows;
    for (size_t i = 0; i < generators_.size(); i++) {
        if (generators_[i].num_qubits() != num_qubits_) {
            throw DimensionError("check " + std::to_string(i) + " acts on the wrong number of qubits");
        }
        rows.push_back(to_symplectic(generators_[i]));
    }
    for (size_t i = 0; i < generators_.size(); i++) {
        for (size_t j = i + 1; j < generators_.size(); j++) {
            if (!commutes(generators_[i], generators_[j])) {
                throw ConstructionError(
                    "checks " + std::to_string(i) + " and " + std::to_string(j) + " anti-commute");
            }
        }
    }
    echelon_ = std::make_shared<RowEchelon>(rows, 2 * num_qubits_);
    for (const auto &rel : echelon_->relations) {
        if (product_of_checks(*this, rel).negative) {
            throw ConstructionError("checks generate -I");
        }
    }
}

PauliOperator product_of_checks(const StabilizerGroup &g, const BitVector &combo) {
    PauliOperator acc(g.num_qubits());
    for (size_t i : combo.ones()) {
        acc = multiply(acc, g[i]);
    }
    return acc;
}

std::optional<int> StabilizerGroup::group_sign(const PauliOperator &p) const {
    if (p.num_qubits() != num_qubits_) {
        throw DimensionError("operator acts on the wrong number of qubits");
    }
    auto combo = echelon_->solve(to_symplectic(p));
    if (!combo.has_value()) {
        return std::nullopt;
    }
    return product_of_checks(*this, *combo).sign();
}

BitVector StabilizerGroup::syndrome(const PauliOperator &p) const {
    BitVector s(generators_.size());
    for (size_t i = 0; i < generators_.size(); i++) {
        s.set(i, !commutes(generators_[i], p));
    }
    return s;
}

size_t StabilizerGroup::locality() const {
    size_t ell = 0;
    std::vector<size_t> degree(num_qubits_, 0);
    for (const auto &g : generators_) {
        ell = std::max(ell, g.weight());
        for (size_t q : g.support().ones()) {
            degree[q]++;
        }
    }
    for (size_t d : degree) {
        ell = std::max(ell, d);
    }
    return ell;
}

size_t symplectic_rank(const StabilizerGroup &g) {
    return g.rank();
}

namespace {

PauliOperator reduce_in_coset(const PauliOperator &p, const StabilizerGroup &g) {
    const auto &rows = g.echelon().rows;
    size_t r = rows.size();
    size_t n = g.num_qubits();
    if (r > 22) {
        return p;
    }
    BitVector cur = to_symplectic(p);
    PauliOperator best = from_symplectic(cur, n);
    // Gray-code walk over the 2^r coset elements.
    for (uint64_t k = 1; k < (uint64_t{1} << r); k++) {
        cur ^= rows[std::countr_zero(k)];
        PauliOperator cand = from_symplectic(cur, n);
        if (cand < best) {
            best = std::move(cand);
        }
    }
    return best;
}

}  // namespace

std::vector<LogicalPair> logical_pairs(const StabilizerGroup &g, bool reduce_weight) {
    size_t n = g.num_qubits();
    BitMatrix twisted;
    for (const auto &c : g.generators()) {
        twisted.push_back(twisted_symplectic(c));
    }
    BitMatrix normalizer = gf2_nullspace(twisted, 2 * n);
    // X-type vectors first so CSS inputs give X-type X-bars.
    std::stable_sort(normalizer.begin(), normalizer.end(), [n](const BitVector &a, const BitVector &b) {
        auto z_free = [n](const BitVector &v) {
            for (size_t q = n; q < 2 * n; q++) {
                if (v.get(q)) {
                    return false;
                }
            }
            return true;
        };
        return z_free(a) && !z_free(b);
    });

    BitMatrix span_rows = g.echelon().rows;
    std::vector<BitVector> candidates;
    for (const auto &v : normalizer) {
        RowEchelon ech(span_rows, 2 * n);
        if (ech.in_span(v)) {
            continue;
        }
        span_rows.push_back(v);
        candidates.push_back(v);
    }

    std::vector<LogicalPair> pairs;
    while (!candidates.empty()) {
        BitVector a = candidates.front();
        candidates.erase(candidates.begin());
        size_t j = 0;
        while (j < candidates.size() && !symplectic_product(a, candidates[j], n)) {
            j++;
        }
        if (j == candidates.size()) {
            throw ConstructionError("logical candidates are degenerate");
        }
        BitVector b = candidates[j];
        candidates.erase(candidates.begin() + j);
        for (auto &c : candidates) {
            bool with_b = symplectic_product(c, b, n);
            bool with_a = symplectic_product(c, a, n);
            if (with_b) {
                c ^= a;
            }
            if (with_a) {
                c ^= b;
            }
        }
        LogicalPair pair{from_symplectic(a, n), from_symplectic(b, n)};
        if (reduce_weight) {
            pair.xbar = reduce_in_coset(pair.xbar, g);
            pair.zbar = reduce_in_coset(pair.zbar, g);
        }
        pairs.push_back(std::move(pair));
    }
    return pairs;
}

std::string DistanceResult::str() const {
    if (!has_logicals) {
        return "n/a";
    }
    if (distance.has_value()) {
        return std::to_string(*distance);
    }
    return ">" + std::to_string(searched_up_to);
}

DistanceResult min_weight_logical(
    const StabilizerGroup &g, size_t weight_cap, const std::function<bool(const PauliOperator &)> &filter) {
    DistanceResult result;
    size_t n = g.num_qubits();
    if (g.num_logical() == 0) {
        result.has_logicals = false;
        return result;
    }
    if (weight_cap < 1) {
        throw ParameterError("weight cap must be at least 1");
    }
    weight_cap = std::min(weight_cap, n);
    const char letters[3] = {'X', 'Y', 'Z'};
    std::vector<std::array<BitVector, 3>> single(n);
    for (size_t q = 0; q < n; q++) {
        for (int l = 0; l < 3; l++) {
            single[q][l] = g.syndrome(PauliOperator::single(n, q, letters[l]));
        }
    }
    for (size_t w = 1; w <= weight_cap; w++) {
        std::optional<PauliOperator> best;
        std::vector<size_t> qubits(w);
        for (size_t i = 0; i < w; i++) {
            qubits[i] = i;
        }
        while (true) {
            std::vector<int> lets(w, 0);
            while (true) {
                BitVector s = single[qubits[0]][lets[0]];
                for (size_t i = 1; i < w; i++) {
                    s ^= single[qubits[i]][lets[i]];
                }
                if (!s.any()) {
                    PauliOperator p(n);
                    for (size_t i = 0; i < w; i++) {
                        p.set_letter(qubits[i], letters[lets[i]]);
                    }
                    if (!g.echelon().in_span(to_symplectic(p)) && (!filter || filter(p))) {
                        if (!best.has_value() || p < *best) {
                            best = std::move(p);
                        }
                    }
                }
                size_t i = 0;
                while (i < w && ++lets[i] == 3) {
                    lets[i] = 0;
                    i++;
                }
                if (i == w) {
                    break;
                }
            }
            // Next combination in lexicographic order.
            size_t i = w;
            while (i > 0 && qubits[i - 1] == n - w + i - 1) {
                i--;
            }
            if (i == 0) {
                break;
            }
            qubits[i - 1]++;
            for (size_t j = i; j < w; j++) {
                qubits[j] = qubits[j - 1] + 1;
            }
        }
        if (best.has_value()) {
            result.distance = w;
            result.searched_up_to = w - 1;
            result.witness = std::move(best);
            return result;
        }
        result.searched_up_to = w;
    }
    return result;
}

KlResult kl_constant(const PauliOperator &e, const StabilizerGroup &g) {
    if (e.num_qubits() != g.num_qubits()) {
        throw DimensionError("error operator acts on the wrong number of qubits");
    }
    KlResult r;
    if (g.syndrome(e).any()) {
        r.eta = 0;
        return r;
    }
    auto s = g.group_sign(e);
    if (s.has_value()) {
        r.eta = *s * e.sign();
        return r;
    }
    r.violation = true;
    return r;
}

}  // namespace codedepth
