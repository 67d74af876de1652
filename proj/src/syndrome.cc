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

#include "codedepth/syndrome.h"

#include <algorithm>
#include <numeric>

#include "codedepth/errors.h"
#include "codedepth/json_util.h"

namespace codedepth {

size_t CheckOverlapGraph::max_degree() const {
    size_t best = 0;
    for (const auto &a : adjacency) {
        best = std::max(best, a.size());
    }
    return best;
}

bool CheckOverlapGraph::has_edge(size_t a, size_t b) const {
    return std::binary_search(adjacency[a].begin(), adjacency[a].end(), b);
}

CheckOverlapGraph overlap_graph(const StabilizerGroup &g) {
    size_t num = g.num_checks();
    CheckOverlapGraph graph;
    graph.adjacency.resize(num);
    std::vector<BitVector> supports;
    for (size_t i = 0; i < num; i++) {
        supports.push_back(g[i].support());
    }
    for (size_t i = 0; i < num; i++) {
        for (size_t j = i + 1; j < num; j++) {
            if ((supports[i] & supports[j]).any()) {
                graph.adjacency[i].push_back(j);
                graph.adjacency[j].push_back(i);
            }
        }
    }
    for (auto &a : graph.adjacency) {
        std::sort(a.begin(), a.end());
    }
    return graph;
}

bool Coloring::is_proper(const CheckOverlapGraph &graph) const {
    if (color.size() != graph.num_vertices()) {
        return false;
    }
    for (size_t v = 0; v < color.size(); v++) {
        if (color[v] >= color_count) {
            return false;
        }
        for (size_t w : graph.adjacency[v]) {
            if (color[w] == color[v]) {
                return false;
            }
        }
    }
    return true;
}

Coloring greedy_coloring(const CheckOverlapGraph &graph) {
    size_t num = graph.num_vertices();
    std::vector<size_t> order(num);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) { return graph.degree(a) > graph.degree(b); });
    Coloring out;
    const size_t none = SIZE_MAX;
    out.color.assign(num, none);
    for (size_t v : order) {
        std::vector<bool> taken(graph.degree(v) + 1, false);
        for (size_t w : graph.adjacency[v]) {
            if (out.color[w] != none && out.color[w] < taken.size()) {
                taken[out.color[w]] = true;
            }
        }
        size_t c = 0;
        while (taken[c]) {
            c++;
        }
        out.color[v] = c;
        out.color_count = std::max(out.color_count, c + 1);
    }
    return out;
}

SyndromeCircuit build_syndrome_circuit(
    const StabilizerGroup &g, const Coloring &coloring, size_t m, std::vector<size_t> code_qubits) {
    size_t n = g.num_qubits();
    size_t num = g.num_checks();
    if (code_qubits.empty()) {
        code_qubits.resize(n);
        std::iota(code_qubits.begin(), code_qubits.end(), 0);
        m = std::max(m, n);
    }
    if (code_qubits.size() != n) {
        throw DimensionError("code qubit layout does not match the code length");
    }
    if (!coloring.is_proper(overlap_graph(g))) {
        throw ConstructionError("coloring is not proper for the check overlap graph");
    }
    SyndromeCircuit out;
    out.circuit = LayeredCircuit(m + num, code_qubits);
    out.locality = g.locality();
    size_t ell = out.locality;
    out.depth_bound = 2 * ell * ell * ell;
    out.construction_bound = ell * (ell * ell + 1) + 2;
    if (num == 0) {
        return out;
    }

    std::vector<Gate> hadamards;
    for (size_t i = 0; i < num; i++) {
        hadamards.push_back(Gate::named("H", {m + i}));
    }
    out.circuit.append_layer(hadamards);

    std::vector<std::vector<size_t>> by_color(coloring.color_count);
    for (size_t i = 0; i < num; i++) {
        by_color[coloring.color[i]].push_back(i);
    }
    for (const auto &checks : by_color) {
        std::vector<std::vector<Gate>> per_check;
        size_t width = 0;
        for (size_t i : checks) {
            std::vector<Gate> gates;
            for (size_t q : g[i].support().ones()) {
                std::string name = std::string("C") + g[i].letter(q);
                std::vector<size_t> qs{m + i, code_qubits[q]};
                if (gates.empty() && g[i].negative) {
                    gates.push_back(Gate::from_program("Z@0 " + name + "@0,1", qs));
                } else {
                    gates.push_back(Gate::named(name, qs));
                }
            }
            width = std::max(width, gates.size());
            per_check.push_back(std::move(gates));
        }
        for (size_t step = 0; step < width; step++) {
            std::vector<Gate> layer;
            for (const auto &gates : per_check) {
                if (step < gates.size()) {
                    layer.push_back(gates[step]);
                }
            }
            out.circuit.append_layer(std::move(layer));
        }
    }
    out.circuit.append_layer(hadamards);

    if (ell >= 2 && out.depth() > out.depth_bound) {
        throw ConstructionError(
            "syndrome circuit depth " + std::to_string(out.depth()) + " exceeds 2 l^3 = " +
            std::to_string(out.depth_bound));
    }
    return out;
}

SyndromeCircuit build_syndrome_circuit(const StabilizerGroup &g) {
    return build_syndrome_circuit(g, greedy_coloring(overlap_graph(g)));
}

LayeredCircuit widen_circuit(const LayeredCircuit &u, size_t m) {
    if (m < u.m) {
        throw DimensionError("cannot narrow a circuit");
    }
    LayeredCircuit out(m, u.code_qubits);
    out.layers = u.layers;
    return out;
}

QuantumState append_zero_qubits(const QuantumState &state, size_t extra) {
    size_t total = state.m + extra;
    QuantumState out;
    if (auto v = std::get_if<CVec>(&state.data)) {
        require_vector_limit(total);
        CVec psi = CVec::Zero(Eigen::Index{1} << total);
        psi.head(v->size()) = *v;
        out = QuantumState::from_vector(std::move(psi));
    } else if (auto r = std::get_if<CMat>(&state.data)) {
        require_density_limit(total);
        Eigen::Index dim = Eigen::Index{1} << total;
        CMat rho = CMat::Zero(dim, dim);
        rho.topLeftCorner(r->rows(), r->cols()) = *r;
        out = QuantumState::from_density(std::move(rho));
    } else {
        const auto &s = std::get<StabilizerState>(state.data);
        std::vector<size_t> positions(state.m);
        std::iota(positions.begin(), positions.end(), 0);
        std::vector<PauliOperator> gens;
        for (const auto &gen : s.generators()) {
            gens.push_back(embed(gen, total, positions));
        }
        for (size_t q = state.m; q < total; q++) {
            gens.push_back(PauliOperator::single(total, q, 'Z'));
        }
        out = QuantumState::from_tableau(StabilizerState(total, std::move(gens)));
    }
    out.code_qubits = state.code_qubits;
    if (state.provenance.has_value()) {
        out.provenance = widen_circuit(*state.provenance, total);
    }
    return out;
}

namespace {

/// Projects onto the (-1)^outcome eigenspace of p; returns the probability and
/// leaves the normalized post-measurement state (unchanged when it is zero).
double measure_pauli(QuantumState &state, const PauliOperator &p, bool outcome) {
    if (auto tab = std::get_if<StabilizerState>(&state.data)) {
        return tab->project(p, outcome);
    }
    if (auto v = std::get_if<CVec>(&state.data)) {
        CVec prod = apply_pauli(p, *v);
        CVec next = outcome ? CVec((*v - prod) / 2.0) : CVec((*v + prod) / 2.0);
        double prob = next.squaredNorm();
        if (prob > 0) {
            *v = next / std::sqrt(prob);
        }
        return prob;
    }
    CMat &rho = std::get<CMat>(state.data);
    CMat left = apply_pauli_left(p, rho);
    left = outcome ? CMat((rho - left) / 2.0) : CMat((rho + left) / 2.0);
    CMat right = apply_pauli_left(p, CMat(left.adjoint())).adjoint();
    CMat next = outcome ? CMat((left - right) / 2.0) : CMat((left + right) / 2.0);
    double prob = next.trace().real();
    if (prob > 0) {
        rho = next / prob;
    }
    return prob;
}

}  // namespace

double DecoheredState::total_probability() const {
    double total = 0;
    for (const auto &[s, b] : branches) {
        total += b.probability;
    }
    return total;
}

double DecoheredState::mean_syndrome_weight() const {
    double total = 0;
    for (const auto &[s, b] : branches) {
        total += b.probability * double(std::count(s.begin(), s.end(), '1'));
    }
    return total;
}

std::string DecoheredState::to_json() const {
    nlohmann::json list = nlohmann::json::array();
    for (const auto &[s, b] : branches) {
        list.push_back({{"s", s}, {"p", b.probability}});
    }
    return dump_json({{"branches", list}});
}

DecoheredState decohere(const QuantumState &state, const StabilizerGroup &g, std::vector<size_t> order) {
    size_t num = g.num_checks();
    if (order.empty()) {
        order.resize(num);
        std::iota(order.begin(), order.end(), 0);
    }
    std::vector<size_t> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    for (size_t i = 0; i < sorted.size(); i++) {
        if (sorted[i] != i || sorted.size() != num) {
            throw ParameterError("measurement order must be a permutation of the checks");
        }
    }
    std::vector<PauliOperator> checks;
    for (size_t i = 0; i < num; i++) {
        checks.push_back(embed_in_state(g[i], state));
    }
    const size_t branch_cap = size_t{1} << 20;
    DecoheredState out;
    std::string s(num, '0');
    auto walk = [&](auto &&self, const QuantumState &current, double prob, size_t depth) -> void {
        if (depth == num) {
            if (out.branches.size() >= branch_cap) {
                throw ParameterError("too many syndrome branches");
            }
            QuantumState st = current;
            st.provenance.reset();
            out.branches.emplace(s, SyndromeBranch{prob, std::move(st)});
            return;
        }
        size_t i = order[depth];
        for (bool outcome : {false, true}) {
            QuantumState next = current;
            double p = prob * measure_pauli(next, checks[i], outcome);
            if (p < 1e-14) {
                continue;
            }
            s[i] = outcome ? '1' : '0';
            self(self, next, p, depth + 1);
            s[i] = '0';
        }
    };
    walk(walk, state, 1.0, 0);
    return out;
}

GentleMeasurementReport gentle_measurement_report(
    const QuantumState &state, const StabilizerGroup &g, const std::vector<size_t> &region) {
    size_t num = g.num_checks();
    size_t m = state.m;
    auto sc = build_syndrome_circuit(g, greedy_coloring(overlap_graph(g)), m, state.code_qubits);
    QuantumState base = state;
    if (auto tab = std::get_if<StabilizerState>(&state.data)) {
        base.data = tab->is_pure() ? std::variant<CVec, CMat, StabilizerState>(tab->to_vector())
                                   : std::variant<CVec, CMat, StabilizerState>(tab->to_density());
    }
    base.provenance.reset();
    QuantumState psi = apply_circuit(sc.circuit, append_zero_qubits(base, num));

    std::vector<bool> seen(m + num, false);
    GentleMeasurementReport r;
    std::vector<size_t> local_sma;
    for (size_t j = 0; j < region.size(); j++) {
        size_t q = region[j];
        if (q >= m + num || seen[q]) {
            throw ParameterError("region qubits must be distinct and inside the m + N register");
        }
        seen[q] = true;
        if (q >= m) {
            r.sma_in_region.push_back(q - m);
            local_sma.push_back(j);
        }
    }
    CMat psi_r = reduced_density(psi, region);
    CMat big_psi_r = dephase(psi_r, local_sma);
    auto energy = energy_report(state, build_code_hamiltonian(g));
    double violated = 0;
    for (size_t i : r.sma_in_region) {
        violated += energy.per_term[i];
    }
    r.fidelity = fidelity(psi_r, big_psi_r);
    r.bound = 1.0 - violated;
    r.holds = r.fidelity >= r.bound - 1e-10;
    return r;
}

}  // namespace codedepth
