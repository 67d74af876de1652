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

#include "codedepth/stabilizer_state.h"

#include "codedepth/errors.h"

namespace codedepth {

namespace {

std::optional<int> sign_in_span(const std::vector<PauliOperator> &gens, const PauliOperator &p) {
    BitMatrix rows;
    for (const auto &g : gens) {
        rows.push_back(to_symplectic(g));
    }
    RowEchelon ech(rows, 2 * p.num_qubits());
    auto combo = ech.solve(to_symplectic(p));
    if (!combo.has_value()) {
        return std::nullopt;
    }
    PauliOperator acc(p.num_qubits());
    for (size_t i : combo->ones()) {
        acc = multiply(acc, gens[i]);
    }
    return acc.sign();
}

}  // namespace

StabilizerState::StabilizerState(size_t num_qubits, std::vector<PauliOperator> generators) : num_qubits_(num_qubits) {
    for (size_t i = 0; i < generators.size(); i++) {
        if (generators[i].num_qubits() != num_qubits) {
            throw DimensionError("generator acts on the wrong number of qubits");
        }
        for (size_t j = 0; j < i; j++) {
            if (!commutes(generators[i], generators[j])) {
                throw ConstructionError("state generators anti-commute");
            }
        }
    }
    BitMatrix rows;
    for (const auto &g : generators) {
        rows.push_back(to_symplectic(g));
    }
    RowEchelon ech(rows, 2 * num_qubits);
    for (const auto &rel : ech.relations) {
        PauliOperator acc(num_qubits);
        for (size_t i : rel.ones()) {
            acc = multiply(acc, generators[i]);
        }
        if (acc.negative) {
            throw ConstructionError("state generators include -I");
        }
    }
    std::vector<bool> dependent(generators.size(), false);
    for (const auto &rel : ech.relations) {
        // Each relation ends at the row that was found dependent.
        dependent[rel.ones().back()] = true;
    }
    for (size_t i = 0; i < generators.size(); i++) {
        if (!dependent[i]) {
            generators_.push_back(std::move(generators[i]));
        }
    }
}

StabilizerState StabilizerState::zero_state(size_t num_qubits) {
    std::vector<PauliOperator> gens;
    for (size_t q = 0; q < num_qubits; q++) {
        gens.push_back(PauliOperator::single(num_qubits, q, 'Z'));
    }
    return StabilizerState(num_qubits, std::move(gens));
}

StabilizerState StabilizerState::maximally_mixed(size_t num_qubits) {
    return StabilizerState(num_qubits, {});
}

StabilizerState StabilizerState::code_mixture(const StabilizerGroup &g) {
    return StabilizerState(g.num_qubits(), g.generators());
}

StabilizerState StabilizerState::logical_basis_state(const StabilizerGroup &g, uint64_t bits) {
    auto gens = g.generators();
    auto pairs = logical_pairs(g, false);
    for (size_t j = 0; j < pairs.size(); j++) {
        auto z = pairs[j].zbar;
        if (j < 64 && ((bits >> j) & 1)) {
            z.negative = !z.negative;
        }
        gens.push_back(z);
    }
    return StabilizerState(g.num_qubits(), std::move(gens));
}

int StabilizerState::expectation(const PauliOperator &p) const {
    if (p.num_qubits() != num_qubits_) {
        throw DimensionError("operator acts on the wrong number of qubits");
    }
    for (const auto &g : generators_) {
        if (!commutes(g, p)) {
            return 0;
        }
    }
    auto s = sign_in_span(generators_, p);
    if (!s.has_value()) {
        return 0;
    }
    return *s * p.sign();
}

void StabilizerState::conjugate_named(PauliOperator &p, const std::string &name, const std::vector<size_t> &q) {
    auto x = [&](size_t k) { return p.xs.get(q[k]); };
    auto z = [&](size_t k) { return p.zs.get(q[k]); };
    if (name == "I") {
        return;
    }
    if (name == "H") {
        bool a = x(0), b = z(0);
        p.negative ^= a && b;
        p.xs.set(q[0], b);
        p.zs.set(q[0], a);
    } else if (name == "S") {
        p.negative ^= x(0) && z(0);
        p.zs.set(q[0], z(0) ^ x(0));
    } else if (name == "SDG") {
        p.negative ^= x(0) && !z(0);
        p.zs.set(q[0], z(0) ^ x(0));
    } else if (name == "X") {
        p.negative ^= z(0);
    } else if (name == "Z") {
        p.negative ^= x(0);
    } else if (name == "Y") {
        p.negative ^= x(0) ^ z(0);
    } else if (name == "CX") {
        bool xc = x(0), zc = z(0), xt = x(1), zt = z(1);
        p.negative ^= xc && zt && (xt ^ zc ^ true);
        p.xs.set(q[1], xt ^ xc);
        p.zs.set(q[0], zc ^ zt);
    } else if (name == "CZ") {
        bool xa = x(0), za = z(0), xb = x(1), zb = z(1);
        p.negative ^= xa && xb && (za ^ zb);
        p.zs.set(q[0], za ^ xb);
        p.zs.set(q[1], zb ^ xa);
    } else if (name == "CY") {
        conjugate_named(p, "SDG", {q[1]});
        conjugate_named(p, "CX", q);
        conjugate_named(p, "S", {q[1]});
    } else if (name == "SWAP") {
        bool xa = x(0), za = z(0), xb = x(1), zb = z(1);
        p.xs.set(q[0], xb);
        p.zs.set(q[0], zb);
        p.xs.set(q[1], xa);
        p.zs.set(q[1], za);
    } else {
        throw BackendError("gate " + name + " is not supported by the tableau backend");
    }
}

void StabilizerState::apply_gate(const Gate &g) {
    for (size_t q : g.qubits) {
        if (q >= num_qubits_) {
            throw DimensionError("gate qubit out of range");
        }
    }
    if (g.kind == Gate::Kind::Dense) {
        throw BackendError("dense gates cannot be applied to a stabilizer tableau");
    }
    if (g.kind == Gate::Kind::Named) {
        for (auto &p : generators_) {
            conjugate_named(p, g.name, g.qubits);
        }
        return;
    }
    for (const auto &op : g.program) {
        std::vector<size_t> qs;
        for (size_t l : op.local) {
            qs.push_back(g.qubits[l]);
        }
        for (auto &p : generators_) {
            conjugate_named(p, op.name, qs);
        }
    }
}

void StabilizerState::apply_circuit(const LayeredCircuit &c) {
    if (c.m != num_qubits_) {
        throw DimensionError("circuit and state qubit counts differ");
    }
    for (const auto &layer : c.layers) {
        for (const auto &g : layer) {
            apply_gate(g);
        }
    }
}

double StabilizerState::project(const PauliOperator &p, bool outcome) {
    if (p.num_qubits() != num_qubits_) {
        throw DimensionError("operator acts on the wrong number of qubits");
    }
    PauliOperator target = p;
    target.negative ^= outcome;
    size_t pivot = generators_.size();
    for (size_t i = 0; i < generators_.size(); i++) {
        if (!commutes(generators_[i], target)) {
            if (pivot == generators_.size()) {
                pivot = i;
            } else {
                generators_[i] = multiply(generators_[i], generators_[pivot]);
            }
        }
    }
    if (pivot < generators_.size()) {
        generators_[pivot] = target;
        return 0.5;
    }
    auto s = sign_in_span(generators_, target);
    if (s.has_value()) {
        return *s == target.sign() ? 1.0 : 0.0;
    }
    if (target.is_identity()) {
        return target.negative ? 0.0 : 1.0;
    }
    generators_.push_back(target);
    return 0.5;
}

double StabilizerState::project_syndrome(const StabilizerGroup &g, const BitVector &s) {
    if (g.num_qubits() != num_qubits_ || s.size() != g.num_checks()) {
        throw DimensionError("syndrome does not match the code");
    }
    double prob = 1;
    StabilizerState copy = *this;
    for (size_t i = 0; i < g.num_checks(); i++) {
        prob *= copy.project(g[i], s.get(i));
        if (prob == 0) {
            return 0;
        }
    }
    *this = std::move(copy);
    return prob;
}

StabilizerState StabilizerState::marginal(const std::vector<size_t> &region) const {
    std::vector<int> pos(num_qubits_, -1);
    for (size_t j = 0; j < region.size(); j++) {
        if (region[j] >= num_qubits_ || pos[region[j]] >= 0) {
            throw DimensionError("invalid marginal region");
        }
        pos[region[j]] = (int)j;
    }
    std::vector<size_t> rest;
    for (size_t q = 0; q < num_qubits_; q++) {
        if (pos[q] < 0) {
            rest.push_back(q);
        }
    }
    BitMatrix rows;
    for (const auto &g : generators_) {
        BitVector v(2 * rest.size());
        for (size_t j = 0; j < rest.size(); j++) {
            v.set(j, g.xs.get(rest[j]));
            v.set(rest.size() + j, g.zs.get(rest[j]));
        }
        rows.push_back(std::move(v));
    }
    RowEchelon ech(rows, 2 * rest.size());
    std::vector<PauliOperator> gens;
    for (const auto &rel : ech.relations) {
        PauliOperator acc(num_qubits_);
        for (size_t i : rel.ones()) {
            acc = multiply(acc, generators_[i]);
        }
        PauliOperator local(region.size());
        local.negative = acc.negative;
        for (size_t j = 0; j < region.size(); j++) {
            local.xs.set(j, acc.xs.get(region[j]));
            local.zs.set(j, acc.zs.get(region[j]));
        }
        gens.push_back(std::move(local));
    }
    return StabilizerState(region.size(), std::move(gens));
}

CMat StabilizerState::to_density() const {
    require_density_limit(num_qubits_);
    size_t dim = size_t{1} << num_qubits_;
    CMat m = CMat::Identity(dim, dim);
    for (const auto &g : generators_) {
        m = (m + apply_pauli_left(g, m)) / 2.0;
    }
    return m / std::ldexp(1.0, (int)(num_qubits_ - generators_.size()));
}

CVec StabilizerState::to_vector() const {
    if (!is_pure()) {
        throw BackendError("mixed stabilizer state has no state vector");
    }
    require_vector_limit(num_qubits_);
    size_t n = num_qubits_;
    // Z-type group elements fix the support of the state in the computational basis.
    BitMatrix xparts;
    for (const auto &g : generators_) {
        xparts.push_back(g.xs);
    }
    RowEchelon ech(xparts, n);
    BitMatrix constraints;
    for (const auto &rel : ech.relations) {
        PauliOperator acc(n);
        for (size_t i : rel.ones()) {
            acc = multiply(acc, generators_[i]);
        }
        BitVector row(n + 1);
        for (size_t q : acc.zs.ones()) {
            row.set(q, true);
        }
        // sign * Z^z |j> = |j> needs parity(z.j) == negative.
        row.set(n, acc.negative);
        constraints.push_back(std::move(row));
    }
    uint64_t seed = 0;
    for (const auto &v : gf2_nullspace(constraints, n + 1)) {
        if (v.get(n)) {
            for (size_t q = 0; q < n; q++) {
                if (v.get(q)) {
                    seed |= uint64_t{1} << q;
                }
            }
            break;
        }
    }
    CVec psi = basis_vector(n, seed);
    for (const auto &g : generators_) {
        psi = (psi + apply_pauli(g, psi)) / 2.0;
    }
    double norm = psi.norm();
    if (norm < 1e-12) {
        throw BackendError("failed to locate the stabilizer state support");
    }
    return psi / norm;
}

}  // namespace codedepth
