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

#include "codedepth/hamiltonian.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <sstream>

#include "codedepth/errors.h"
#include "codedepth/json_util.h"

namespace codedepth {

namespace {

/// Number of surjections from a p-set onto a j-set.
double surjections(size_t p, size_t j) {
    double total = 0;
    double binom = 1;
    for (size_t i = 0; i <= j; i++) {
        double term = binom * std::pow(double(j - i), double(p));
        total += (i & 1) ? -term : term;
        binom = binom * double(j - i) / double(i + 1);
    }
    return total;
}

/// rho -> (rho + sign * C rho) / 2 on the left.
CMat half_project_left(const PauliOperator &c, const CMat &rho, bool negate) {
    CMat prod = apply_pauli_left(c, rho);
    return negate ? CMat((rho - prod) / 2.0) : CMat((rho + prod) / 2.0);
}

CVec half_project(const PauliOperator &c, const CVec &psi, bool negate) {
    CVec prod = apply_pauli(c, psi);
    return negate ? CVec((psi - prod) / 2.0) : CVec((psi + prod) / 2.0);
}

QuantumState with_layout(QuantumState s, const QuantumState &like) {
    s.code_qubits = like.code_qubits;
    return s;
}

}  // namespace

double CodeHamiltonian::scale() const {
    if (normalization == Normalization::Mean && num_terms() > 0) {
        return 1.0 / double(num_terms());
    }
    return 1.0;
}

CMat CodeHamiltonian::term(size_t i) const {
    size_t n = num_qubits();
    require_density_limit(n);
    size_t dim = size_t{1} << n;
    return (CMat::Identity(dim, dim) - pauli_matrix(checks[i])) / 2.0;
}

CMat CodeHamiltonian::dense() const {
    size_t n = num_qubits();
    require_density_limit(n);
    size_t dim = size_t{1} << n;
    CMat h = CMat::Zero(dim, dim);
    for (size_t i = 0; i < num_terms(); i++) {
        h += term(i);
    }
    return h * scale();
}

CodeHamiltonian build_code_hamiltonian(const StabilizerGroup &g, Normalization normalization) {
    return CodeHamiltonian{g, normalization};
}

PauliOperator embed_in_state(const PauliOperator &p, const QuantumState &state) {
    if (state.code_qubits.size() != p.num_qubits()) {
        throw DimensionError(
            "partition mismatch: state has " + std::to_string(state.code_qubits.size()) +
            " code qubits, Hamiltonian acts on " + std::to_string(p.num_qubits()));
    }
    return embed(p, state.m, state.code_qubits);
}

std::string EnergyReport::to_json() const {
    nlohmann::json j;
    j["per_term"] = per_term;
    j["total"] = total;
    j["mean"] = mean;
    return dump_json(j);
}

std::string EnergyReport::to_csv() const {
    std::ostringstream out;
    out << "term,energy\n";
    for (size_t i = 0; i < per_term.size(); i++) {
        out << i << "," << nlohmann::json(per_term[i]).dump() << "\n";
    }
    return out.str();
}

EnergyReport energy_report(const QuantumState &state, const CodeHamiltonian &h) {
    EnergyReport r;
    for (size_t i = 0; i < h.num_terms(); i++) {
        double e = state.expectation(embed_in_state(h.checks[i], state));
        double eps = std::clamp(0.5 - 0.5 * e, 0.0, 1.0);
        r.per_term.push_back(eps);
        r.total += eps;
    }
    r.mean = h.num_terms() ? r.total / double(h.num_terms()) : 0.0;
    return r;
}

EigenspaceProjection project_eigenspace(const QuantumState &state, const StabilizerGroup &g, const BitVector &s) {
    if (s.size() != g.num_checks()) {
        throw DimensionError("syndrome length does not match the number of checks");
    }
    EigenspaceProjection out;
    if (auto tab = std::get_if<StabilizerState>(&state.data)) {
        StabilizerState t = *tab;
        double prob = 1;
        for (size_t i = 0; i < g.num_checks(); i++) {
            prob *= t.project(embed_in_state(g[i], state), s.get(i));
            if (prob < 1e-14) {
                out.probability = 0;
                return out;
            }
        }
        out.probability = prob;
        out.state = with_layout(QuantumState::from_tableau(std::move(t)), state);
        return out;
    }
    if (auto v = std::get_if<CVec>(&state.data)) {
        CVec psi = *v;
        for (size_t i = 0; i < g.num_checks(); i++) {
            psi = half_project(embed_in_state(g[i], state), psi, s.get(i));
        }
        out.probability = psi.squaredNorm();
        if (out.probability >= 1e-14) {
            out.state = with_layout(QuantumState::from_vector(psi / std::sqrt(out.probability)), state);
        }
        return out;
    }
    CMat rho = std::get<CMat>(state.data);
    for (size_t i = 0; i < g.num_checks(); i++) {
        auto c = embed_in_state(g[i], state);
        rho = half_project_left(c, rho, s.get(i));
        rho = half_project_left(c, CMat(rho.adjoint()), s.get(i)).adjoint();
    }
    out.probability = rho.trace().real();
    if (out.probability >= 1e-14) {
        out.state = with_layout(QuantumState::from_density(rho / out.probability), state);
    }
    return out;
}

size_t AmplifiedHamiltonian::term_locality() const {
    return p * base.checks.locality();
}

CMat AmplifiedHamiltonian::dense() const {
    CMat h = base.dense();
    CMat id = CMat::Identity(h.rows(), h.cols());
    CMat g = id - h;
    CMat gp = id;
    for (size_t k = 0; k < p; k++) {
        gp = gp * g;
    }
    return id - gp;
}

double AmplifiedHamiltonian::g_power_expectation_dense(const QuantumState &state) const {
    size_t num = base.num_terms();
    if (num == 0) {
        return 1.0;
    }
    std::vector<PauliOperator> checks;
    for (size_t i = 0; i < num; i++) {
        checks.push_back(embed_in_state(base.checks[i], state));
    }
    if (!std::holds_alternative<CMat>(state.data) &&
        (std::holds_alternative<CVec>(state.data) || std::get<StabilizerState>(state.data).is_pure())) {
        CVec psi = state.vector();
        CVec v = psi;
        for (size_t k = 0; k < p; k++) {
            CVec next = CVec::Zero(v.size());
            for (const auto &c : checks) {
                next += half_project(c, v, false);
            }
            v = next / double(num);
        }
        return psi.dot(v).real();
    }
    CMat rho = state.density();
    CMat r = rho;
    for (size_t k = 0; k < p; k++) {
        CMat next = CMat::Zero(r.rows(), r.cols());
        for (const auto &c : checks) {
            next += half_project_left(c, r, false);
        }
        r = next / double(num);
    }
    return r.trace().real();
}

double AmplifiedHamiltonian::g_power_expectation_subsets(const QuantumState &state) const {
    auto tab = std::get_if<StabilizerState>(&state.data);
    if (tab == nullptr) {
        throw BackendError("subset expansion needs a stabilizer tableau state");
    }
    size_t num = base.num_terms();
    if (num == 0) {
        return 1.0;
    }
    size_t top = std::min(p, num);
    double work = 0;
    double binom = 1;
    for (size_t j = 1; j <= top; j++) {
        binom = binom * double(num - j + 1) / double(j);
        work += binom * std::pow(2.0, double(j));
    }
    if (work > 2e7) {
        throw ParameterError("subset expansion too large: " + std::to_string(size_t(work)) + " products");
    }
    double norm = std::pow(double(num), double(p));
    double total = 0;
    std::vector<size_t> subset;
    // Walks all subsets of size 1..top in lexicographic order.
    auto visit = [&](auto &&self, size_t start) -> void {
        if (!subset.empty()) {
            size_t j = subset.size();
            double sum = 0;
            for (uint64_t mask = 0; mask < (uint64_t{1} << j); mask++) {
                BitVector combo(num);
                for (size_t b = 0; b < j; b++) {
                    if ((mask >> b) & 1) {
                        combo.set(subset[b], true);
                    }
                }
                sum += tab->expectation(embed_in_state(product_of_checks(base.checks, combo), state));
            }
            total += surjections(p, j) / norm * sum / std::pow(2.0, double(j));
        }
        if (subset.size() == top) {
            return;
        }
        for (size_t i = start; i < num; i++) {
            subset.push_back(i);
            self(self, i + 1);
            subset.pop_back();
        }
    };
    visit(visit, 0);
    return total;
}

double AmplifiedHamiltonian::expectation(const QuantumState &state) const {
    if (std::holds_alternative<StabilizerState>(state.data)) {
        return 1.0 - g_power_expectation_subsets(state);
    }
    return 1.0 - g_power_expectation_dense(state);
}

AmplifiedHamiltonian amplify(const CodeHamiltonian &h, size_t p) {
    if (p < 1) {
        throw ParameterError("amplification power must be at least 1");
    }
    AmplifiedHamiltonian out{h, p};
    out.base.normalization = Normalization::Mean;
    return out;
}

GapCheck amplification_gap_check(const QuantumState &state, const CodeHamiltonian &h, size_t p, size_t t) {
    if (auto depth = state.depth_upper_bound(); depth.has_value() && *depth > t) {
        throw ParameterError(
            "state circuit depth " + std::to_string(*depth) + " exceeds the claimed depth " + std::to_string(t));
    }
    auto hp = amplify(h, p);
    double energy = energy_report(state, hp.base).mean;
    double ell = double(h.checks.locality());
    double n = double(h.num_qubits());
    GapCheck r;
    r.lhs = hp.expectation(state);
    r.rhs = 0.5 * std::min(1.0, double(p) * energy) - std::pow(2.0, double(t)) * double(p * p) * ell * ell / n;
    r.holds = r.lhs >= r.rhs - 1e-12;
    return r;
}

CMat SparsifiedHamiltonian::dense_g() const {
    const auto &checks = source.base.checks;
    size_t n = checks.num_qubits();
    require_density_limit(n);
    size_t dim = size_t{1} << n;
    // g_i are commuting projectors, so a tuple's product depends only on its
    // set of distinct indices.
    std::map<std::vector<size_t>, size_t> counts;
    for (auto tuple : sampled_indices) {
        std::sort(tuple.begin(), tuple.end());
        tuple.erase(std::unique(tuple.begin(), tuple.end()), tuple.end());
        counts[tuple]++;
    }
    CMat g = CMat::Zero(dim, dim);
    for (const auto &[set, count] : counts) {
        CMat term = CMat::Identity(dim, dim);
        for (size_t i : set) {
            term = half_project_left(checks[i], term, false);
        }
        g += double(count) * term;
    }
    return g / double(sampled_indices.size());
}

CMat SparsifiedHamiltonian::dense() const {
    CMat g = dense_g();
    return CMat::Identity(g.rows(), g.cols()) - g;
}

size_t sparsify_sample_count(size_t n, size_t locality, double delta) {
    if (!(delta > 0)) {
        throw ParameterError("delta must be positive");
    }
    if (n == 0 || locality == 0) {
        throw ParameterError("sample count needs n >= 1 and locality >= 1");
    }
    double k = double(n) * std::max(32.0 / (delta * delta), std::log2(double(n)) / double(locality));
    return size_t(std::ceil(k));
}

SparsifiedHamiltonian sparsify(const AmplifiedHamiltonian &hp, size_t k_samples, uint64_t seed) {
    if (k_samples < 1) {
        throw ParameterError("k_samples must be at least 1");
    }
    size_t num = hp.base.num_terms();
    if (num == 0) {
        throw ParameterError("cannot sparsify a Hamiltonian with no terms");
    }
    SparsifiedHamiltonian out{hp, {}, seed};
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<size_t> pick(0, num - 1);
    out.sampled_indices.reserve(k_samples);
    for (size_t k = 0; k < k_samples; k++) {
        std::vector<size_t> tuple(hp.p);
        for (auto &i : tuple) {
            i = pick(rng);
        }
        out.sampled_indices.push_back(std::move(tuple));
    }
    return out;
}

double spectral_deviation(const CMat &a, const CMat &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionError("operators have different dimensions");
    }
    if (a.rows() > (Eigen::Index{1} << 12)) {
        throw DenseLimitError("dense limit exceeded: operator dimension " + std::to_string(a.rows()));
    }
    return operator_norm(a - b);
}

std::vector<size_t> CatHamiltonian::block(size_t j) const {
    std::vector<size_t> out;
    for (size_t q = j * p; q < (j + 1) * p; q++) {
        out.push_back(q);
    }
    return out;
}

CMat CatHamiltonian::dense() const {
    require_density_limit(n);
    size_t dim = size_t{1} << n;
    CMat h = CMat::Zero(dim, dim);
    for (size_t j = 0; j < num_terms(); j++) {
        uint64_t mask = ((uint64_t{1} << p) - 1) << (j * p);
        // I - |cat><cat| on the block: |cat><cat| couples b|0..0> and b|1..1>.
        for (uint64_t i = 0; i < dim; i++) {
            h(i, i) += 1.0;
            if ((i & mask) == 0 || (i & mask) == mask) {
                h(i, i) -= 0.5;
                h(i ^ mask, i) -= 0.5;
            }
        }
    }
    return h;
}

std::vector<double> CatHamiltonian::term_energies(const QuantumState &state) const {
    if (state.code_qubits.size() != n) {
        throw DimensionError("partition mismatch: state has the wrong number of code qubits");
    }
    std::vector<double> out;
    uint64_t last = (uint64_t{1} << p) - 1;
    for (size_t j = 0; j < num_terms(); j++) {
        std::vector<size_t> region;
        for (size_t q : block(j)) {
            region.push_back(state.code_qubits[q]);
        }
        CMat rho = reduced_density(state, region);
        double overlap = 0.5 * (rho(0, 0) + rho(0, last) + rho(last, 0) + rho(last, last)).real();
        out.push_back(1.0 - overlap);
    }
    return out;
}

CatHamiltonian cat_state_hamiltonian(size_t n, size_t p) {
    if (p == 0 || n % p != 0) {
        throw ParameterError("block size " + std::to_string(p) + " does not divide " + std::to_string(n));
    }
    return CatHamiltonian{n, p};
}

}  // namespace codedepth
