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

#include "codedepth/entropy.h"

#include <cmath>
#include <random>

#include "codedepth/errors.h"
#include "codedepth/json_util.h"

namespace codedepth {

namespace {

constexpr size_t kMaxDenseLogicals = 6;

/// Drops the generators anti-commuting with `op`, keeping the commuting
/// subgroup: the first offender becomes the pivot and multiplies the others.
void average_over_conjugation(std::vector<PauliOperator> &gens, const PauliOperator &op) {
    size_t pivot = gens.size();
    for (size_t i = 0; i < gens.size(); i++) {
        if (!commutes(gens[i], op)) {
            if (pivot == gens.size()) {
                pivot = i;
            } else {
                gens[i] = multiply(gens[i], gens[pivot]);
            }
        }
    }
    if (pivot < gens.size()) {
        gens.erase(gens.begin() + pivot);
    }
}

void require_distance_above(const StabilizerGroup &g, size_t size) {
    auto d = min_weight_logical(g, size);
    if (d.distance.has_value()) {
        throw ParameterError(
            "region of size " + std::to_string(size) + " is not below the code distance " +
            std::to_string(*d.distance));
    }
}

void require_dense_logicals(size_t k) {
    if (k > kMaxDenseLogicals) {
        throw ParameterError("too many logical qubits for a dense 4^k sum: " + std::to_string(k));
    }
}

double max_abs(const CMat &a) {
    return a.size() ? a.cwiseAbs().maxCoeff() : 0.0;
}

/// Xbar^a Zbar^b for the bit masks a, b.
PauliOperator logical_product(const std::vector<LogicalPair> &pairs, uint64_t a, uint64_t b, size_t n) {
    PauliOperator p(n);
    for (size_t j = 0; j < pairs.size(); j++) {
        if ((a >> j) & 1) {
            p.xs ^= pairs[j].xbar.xs;
            p.zs ^= pairs[j].xbar.zs;
        }
        if ((b >> j) & 1) {
            p.xs ^= pairs[j].zbar.xs;
            p.zs ^= pairs[j].zbar.zs;
        }
    }
    // Conjugation ignores phases; keep the Hermitian representative.
    return p;
}

/// Marginal on `region` of E(|psi><psi|) via the 4^k conjugated vectors.
CMat depolarized_marginal(
    const CVec &psi, size_t m, const std::vector<LogicalPair> &pairs, const std::vector<size_t> &positions,
    const std::vector<size_t> &region) {
    size_t k = pairs.size();
    CMat acc;
    for (uint64_t a = 0; a < (uint64_t{1} << k); a++) {
        for (uint64_t b = 0; b < (uint64_t{1} << k); b++) {
            auto p = embed(logical_product(pairs, a, b, positions.size()), m, positions);
            CMat r = partial_trace(apply_pauli(p, psi), m, region);
            acc = acc.size() ? CMat(acc + r) : r;
        }
    }
    return acc / double(uint64_t{1} << (2 * k));
}

CVec random_code_vector(const std::vector<CVec> &basis, std::mt19937_64 &rng) {
    std::normal_distribution<double> gauss;
    CVec v = CVec::Zero(basis[0].size());
    for (const auto &b : basis) {
        v += Complex(gauss(rng), gauss(rng)) * b;
    }
    return v / v.norm();
}

std::vector<CVec> logical_basis_vectors(const StabilizerGroup &g) {
    size_t k = g.num_logical();
    require_dense_logicals(k);
    std::vector<CVec> out;
    for (uint64_t bits = 0; bits < (uint64_t{1} << k); bits++) {
        out.push_back(StabilizerState::logical_basis_state(g, bits).to_vector());
    }
    return out;
}

PauliOperator random_pauli(size_t n, std::mt19937_64 &rng) {
    PauliOperator p(n);
    for (size_t q = 0; q < n; q++) {
        p.set_letter(q, "IXYZ"[rng() % 4]);
    }
    return p;
}

/// A random pure state projected onto D_s.
CVec random_syndrome_state(const StabilizerGroup &g, const BitVector &s, std::mt19937_64 &rng) {
    size_t n = g.num_qubits();
    for (int attempt = 0; attempt < 100; attempt++) {
        auto proj = project_eigenspace(QuantumState::from_vector(random_pure_state(n, rng)), g, s);
        if (proj.state.has_value() && proj.probability > 1e-12) {
            return proj.state->vector();
        }
    }
    throw ParameterError("could not sample a state in the requested syndrome space");
}

}  // namespace

QuantumState logical_depolarize(const QuantumState &state, const std::vector<LogicalPair> &pairs) {
    if (pairs.empty()) {
        return state;
    }
    QuantumState out;
    if (auto tab = std::get_if<StabilizerState>(&state.data)) {
        auto gens = tab->generators();
        for (const auto &pair : pairs) {
            average_over_conjugation(gens, embed_in_state(pair.xbar, state));
            average_over_conjugation(gens, embed_in_state(pair.zbar, state));
        }
        out = QuantumState::from_tableau(StabilizerState(state.m, std::move(gens)));
    } else {
        CMat rho = state.density();
        for (const auto &pair : pairs) {
            auto x = embed_in_state(pair.xbar, state);
            auto z = embed_in_state(pair.zbar, state);
            rho = (rho + conjugate_by_pauli(x, rho)) / 2.0;
            rho = (rho + conjugate_by_pauli(z, rho)) / 2.0;
        }
        out = QuantumState::from_density(std::move(rho));
    }
    out.code_qubits = state.code_qubits;
    return out;
}

size_t stabilizer_entropy(const QuantumState &state) {
    auto tab = std::get_if<StabilizerState>(&state.data);
    if (tab == nullptr) {
        throw BackendError("stabilizer entropy needs a stabilizer tableau state");
    }
    return tab->entropy();
}

double state_entropy(const QuantumState &state) {
    if (std::holds_alternative<CVec>(state.data)) {
        return 0.0;
    }
    if (auto r = std::get_if<CMat>(&state.data)) {
        return von_neumann_entropy(*r);
    }
    return double(stabilizer_entropy(state));
}

bool syndrome_realizable(const StabilizerGroup &g, const BitVector &s) {
    if (s.size() != g.num_checks()) {
        throw DimensionError("syndrome length does not match the number of checks");
    }
    for (const auto &rel : g.echelon().relations) {
        if (dot(rel, s)) {
            return false;
        }
    }
    return true;
}

double EncodedMixedState::entropy() const {
    double total = 0;
    for (const auto &[s, b] : branches) {
        if (b.probability > 0) {
            total += b.probability * (std::log2(1.0 / b.probability) + state_entropy(b.mu));
        }
    }
    return total;
}

CMat EncodedMixedState::density() const {
    require_density_limit(m + num_checks);
    Eigen::Index dim = Eigen::Index{1} << (m + num_checks);
    CMat theta = CMat::Zero(dim, dim);
    Eigen::Index block = Eigen::Index{1} << m;
    for (const auto &[s, b] : branches) {
        Eigen::Index offset = 0;
        for (size_t i = 0; i < s.size(); i++) {
            if (s[i] == '1') {
                offset |= Eigen::Index{1} << i;
            }
        }
        theta.block(offset * block, offset * block, block, block) += b.probability * b.mu.density();
    }
    return theta;
}

EncodedMixedState encode_branches(const DecoheredState &psi, const std::vector<LogicalPair> &pairs, size_t num_checks) {
    EncodedMixedState out;
    out.num_checks = num_checks;
    out.k = pairs.size();
    for (const auto &[s, b] : psi.branches) {
        out.m = b.state.m;
        out.branches.emplace(s, EncodedBranch{b.probability, logical_depolarize(b.state, pairs)});
    }
    return out;
}

EncodedMixedState build_theta(const QuantumState &phi, const StabilizerGroup &g) {
    auto out = encode_branches(decohere(phi, g), logical_pairs(g), g.num_checks());
    out.m = phi.m;
    return out;
}

double code_state_marginal_spread(const StabilizerGroup &g, const std::vector<size_t> &region, size_t samples, uint64_t seed) {
    size_t k = g.num_logical();
    require_dense_logicals(k);
    CMat ref = reduced_density(QuantumState::from_tableau(StabilizerState::logical_basis_state(g, 0)), region);
    double worst = 0;
    for (uint64_t bits = 1; bits < (uint64_t{1} << k); bits++) {
        auto st = QuantumState::from_tableau(StabilizerState::logical_basis_state(g, bits));
        worst = std::max(worst, max_abs(reduced_density(st, region) - ref));
    }
    if (k > 0 && samples > 0) {
        auto basis = logical_basis_vectors(g);
        std::mt19937_64 rng(seed);
        for (size_t i = 0; i < samples; i++) {
            CVec v = random_code_vector(basis, rng);
            worst = std::max(worst, max_abs(partial_trace(v, g.num_qubits(), region) - ref));
        }
    }
    return worst;
}

MarginalInvarianceReport marginal_invariance_suite(
    const StabilizerGroup &g, const std::vector<size_t> &region, size_t samples, uint64_t seed) {
    require_distance_above(g, region.size());
    size_t n = g.num_qubits();
    auto pairs = logical_pairs(g);
    require_dense_logicals(pairs.size());
    std::vector<size_t> positions(n);
    for (size_t q = 0; q < n; q++) {
        positions[q] = q;
    }
    MarginalInvarianceReport r;
    r.code_state_spread = code_state_marginal_spread(g, region, samples, seed);

    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    for (size_t i = 0; i < samples; i++) {
        BitVector s = g.syndrome(random_pauli(n, rng));
        CVec psi = random_syndrome_state(g, s, rng);
        CMat ref = partial_trace(psi, n, region);
        std::vector<PauliOperator> logicals;
        for (const auto &p : pairs) {
            logicals.push_back(p.xbar);
            logicals.push_back(p.zbar);
        }
        if (!pairs.empty()) {
            uint64_t mask = (uint64_t{1} << pairs.size()) - 1;
            logicals.push_back(logical_product(pairs, rng() & mask, rng() & mask, n));
        }
        for (const auto &l : logicals) {
            r.logical_conjugation_deviation =
                std::max(r.logical_conjugation_deviation, max_abs(partial_trace(apply_pauli(l, psi), n, region) - ref));
        }
        r.depolarizer_deviation =
            std::max(r.depolarizer_deviation, max_abs(depolarized_marginal(psi, n, pairs, positions, region) - ref));
    }
    r.code_states_agree = r.code_state_spread <= 1e-10;
    r.logical_conjugation_preserves = r.logical_conjugation_deviation <= 1e-10;
    r.depolarizer_preserves = r.depolarizer_deviation <= 1e-10;
    return r;
}

double extended_invariance_deviation(
    const StabilizerGroup &g, const std::vector<size_t> &code_region, size_t ancillas, uint64_t seed) {
    require_distance_above(g, code_region.size());
    size_t n = g.num_qubits();
    size_t m = n + ancillas;
    require_vector_limit(m);
    auto pairs = logical_pairs(g);
    auto basis = logical_basis_vectors(g);
    std::mt19937_64 rng(seed);
    CVec phi = CVec::Zero(Eigen::Index{1} << m);
    for (const auto &b : basis) {
        CVec anc = random_pure_state(ancillas, rng);
        std::normal_distribution<double> gauss;
        phi += Complex(gauss(rng), gauss(rng)) * kron(anc, b);
    }
    phi /= phi.norm();
    std::vector<size_t> region = code_region;
    for (size_t j = 0; j < ancillas; j++) {
        region.push_back(n + j);
    }
    std::vector<size_t> positions(n);
    for (size_t q = 0; q < n; q++) {
        positions[q] = q;
    }
    return max_abs(depolarized_marginal(phi, m, pairs, positions, region) - partial_trace(phi, m, region));
}

ZeroExpectationReport zero_expectation_suite(const StabilizerGroup &g, const BitVector &s, size_t samples, uint64_t seed) {
    if (!syndrome_realizable(g, s)) {
        throw ParameterError("syndrome violates a check relation; D_s is empty");
    }
    size_t n = g.num_qubits();
    auto pairs = logical_pairs(g);
    std::mt19937_64 rng(seed);
    ZeroExpectationReport r;
    r.samples = samples;
    for (size_t i = 0; i < samples; i++) {
        CVec psi = random_syndrome_state(g, s, rng);
        PauliOperator p = random_pauli(n, rng);
        while (!g.syndrome(p).any()) {
            p = random_pauli(n, rng);
        }
        r.max_anticommuting_expectation = std::max(r.max_anticommuting_expectation, std::abs(pauli_expectation(p, psi)));
        if (!pairs.empty()) {
            uint64_t mask = (uint64_t{1} << std::min<size_t>(pairs.size(), 63)) - 1;
            auto l = logical_product(pairs, rng() & mask, rng() & mask, n);
            CVec moved = apply_pauli(l, psi);
            for (size_t c = 0; c < g.num_checks(); c++) {
                double expected = s.get(c) ? -1.0 : 1.0;
                r.max_syndrome_deviation = std::max(r.max_syndrome_deviation, std::abs(pauli_expectation(g[c], moved) - expected));
            }
        }
    }
    r.holds = r.max_anticommuting_expectation <= 1e-10 && r.max_syndrome_deviation <= 1e-10;
    return r;
}

std::string EntropyAudit::to_json() const {
    nlohmann::json j;
    j["k"] = k;
    j["S_Theta"] = s_theta;
    j["per_qubit_sum"] = per_qubit_sum;
    return dump_json(j);
}

EntropyAudit entropy_audit(const EncodedMixedState &theta, const LayeredCircuit &w) {
    size_t total = theta.m + theta.num_checks;
    if (w.m != total) {
        throw DimensionError("audit circuit must act on the m + N register");
    }
    EntropyAudit a;
    a.k = theta.k;
    a.s_theta = theta.entropy();
    auto rotated = apply_circuit(w.inverse(), QuantumState::from_density(theta.density()));
    for (size_t j = 0; j < total; j++) {
        a.per_qubit_sum += von_neumann_entropy(reduced_density(rotated, {j}));
    }
    a.holds = double(a.k) <= a.s_theta + 1e-9 && a.s_theta <= a.per_qubit_sum + 1e-9;
    return a;
}

}  // namespace codedepth
