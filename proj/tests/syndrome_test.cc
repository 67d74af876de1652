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

#include <gtest/gtest.h>

#include <random>

#include "codedepth/codes.h"
#include "codedepth/errors.h"
#include "oracles.h"

using namespace codedepth;

namespace {

/// D_s from kron-built matrices.
oracle::Mat oracle_projector(const StabilizerGroup &g, uint64_t s) {
    size_t dim = size_t{1} << g.num_qubits();
    oracle::Mat d = oracle::Mat::Identity(dim, dim);
    for (size_t i = 0; i < g.num_checks(); i++) {
        double sign = ((s >> i) & 1) ? -1.0 : 1.0;
        d = d * (oracle::Mat::Identity(dim, dim) + sign * oracle::pauli(g[i].str())) / 2.0;
    }
    return d;
}

/// Pairwise support intersection from the printed check strings.
std::vector<size_t> oracle_degrees(const StabilizerGroup &g) {
    std::vector<std::string> s;
    for (const auto &c : g.generators()) {
        s.push_back(c.str());
    }
    std::vector<size_t> deg(s.size(), 0);
    for (size_t i = 0; i < s.size(); i++) {
        for (size_t j = 0; j < s.size(); j++) {
            bool overlap = false;
            for (size_t q = 0; q < g.num_qubits(); q++) {
                overlap |= i != j && s[i][q] != 'I' && s[j][q] != 'I';
            }
            deg[i] += overlap;
        }
    }
    return deg;
}

QuantumState with_error(const StabilizerGroup &g, size_t q, char letter) {
    auto s = StabilizerState::logical_basis_state(g, 0);
    LayeredCircuit c(g.num_qubits());
    c.append_layer({Gate::named(std::string(1, letter), {q})});
    s.apply_circuit(c);
    return QuantumState::from_tableau(s);
}

std::string syndrome_string(const BitVector &b) {
    std::string s;
    for (size_t i = 0; i < b.size(); i++) {
        s.push_back(b.get(i) ? '1' : '0');
    }
    return s;
}

}  // namespace

TEST(syndrome, edgeless_graph_one_color) {
    StabilizerGroup g(3, {PauliOperator::from_string("ZII"), PauliOperator::from_string("IZI")});
    auto graph = overlap_graph(g);
    EXPECT_EQ(graph.max_degree(), 0u);
    auto c = greedy_coloring(graph);
    EXPECT_EQ(c.color_count, 1u);
    EXPECT_TRUE(c.is_proper(graph));
}

TEST(syndrome, complete_graph_needs_all_colors) {
    CheckOverlapGraph graph;
    graph.adjacency.resize(5);
    for (size_t i = 0; i < 5; i++) {
        for (size_t j = 0; j < 5; j++) {
            if (i != j) {
                graph.adjacency[i].push_back(j);
            }
        }
    }
    auto c = greedy_coloring(graph);
    EXPECT_EQ(c.color_count, 5u);
    EXPECT_TRUE(c.is_proper(graph));
}

TEST(syndrome, degrees_match_oracle) {
    for (const auto &name : builtin_code_names()) {
        auto g = builtin_code(name);
        auto graph = overlap_graph(g);
        auto deg = oracle_degrees(g);
        for (size_t i = 0; i < g.num_checks(); i++) {
            EXPECT_EQ(graph.degree(i), deg[i]) << name;
        }
        size_t ell = g.locality();
        EXPECT_LE(graph.max_degree(), ell * ell) << name;
        auto c = greedy_coloring(graph);
        EXPECT_TRUE(c.is_proper(graph));
        EXPECT_LE(c.color_count, graph.max_degree() + 1);
        for (size_t i = 0; i < g.num_checks(); i++) {
            for (size_t j : graph.adjacency[i]) {
                EXPECT_NE(c.color[i], c.color[j]);
            }
        }
    }
    auto toric = overlap_graph(toric_code(3));
    EXPECT_LE(toric.max_degree(), 16u);
    EXPECT_LE(greedy_coloring(toric).color_count, 17u);
}

TEST(syndrome, greedy_is_deterministic) {
    auto graph = overlap_graph(toric_code(3));
    EXPECT_EQ(greedy_coloring(graph).color, greedy_coloring(graph).color);
}

TEST(syndrome, single_z_check) {
    StabilizerGroup g(1, {PauliOperator::from_string("Z")});
    auto sc = build_syndrome_circuit(g);
    EXPECT_EQ(sc.depth(), 3u);
    LayeredCircuit prep(2);
    prep.append_layer({Gate::named("X", {0})});
    prep.append(sc.circuit);
    auto out = QuantumState::prepared(prep, Backend::Vector);
    EXPECT_NEAR(std::abs(out.vector()(3)), 1.0, 1e-12);
    auto zero = apply_circuit(sc.circuit, QuantumState::zero(2, Backend::Vector));
    EXPECT_NEAR(std::abs(zero.vector()(0)), 1.0, 1e-12);
}

TEST(syndrome, negative_check_sign) {
    StabilizerGroup g(2, {PauliOperator::from_string("-ZZ")});
    auto sc = build_syndrome_circuit(g);
    for (uint64_t basis = 0; basis < 4; basis++) {
        CVec psi = CVec::Zero(8);
        psi(basis) = 1;
        auto out = apply_circuit(sc.circuit, QuantumState::from_vector(psi)).vector();
        bool parity = std::popcount(basis) & 1;
        // -ZZ = +1 exactly on odd parity, so the ancilla flags even parity.
        EXPECT_NEAR(std::abs(out(basis + (parity ? 0 : 4))), 1.0, 1e-12);
    }
}

TEST(syndrome, depth_bounds_for_builtins) {
    for (const auto &name : builtin_code_names()) {
        auto g = builtin_code(name);
        auto sc = build_syndrome_circuit(g);
        size_t ell = g.locality();
        ASSERT_GE(ell, 2u);
        EXPECT_LE(sc.depth(), 2 * ell * ell * ell) << name;
        EXPECT_LE(sc.depth(), sc.construction_bound) << name;
        EXPECT_EQ(sc.circuit.m, g.num_qubits() + g.num_checks());
    }
    auto five = build_syndrome_circuit(five_qubit_code());
    EXPECT_EQ(five.depth_bound, 128u);
}

TEST(syndrome, circuit_matches_projector_decomposition) {
    auto g = five_qubit_code();
    auto sc = build_syndrome_circuit(g);
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 5; trial++) {
        CVec phi = random_pure_state(5, rng);
        auto out = apply_circuit(sc.circuit, append_zero_qubits(QuantumState::from_vector(phi), 4)).vector();
        CVec expected = CVec::Zero(512);
        for (uint64_t s = 0; s < 16; s++) {
            expected.segment(s * 32, 32) = oracle_projector(g, s) * phi;
        }
        EXPECT_LT((out - expected).cwiseAbs().maxCoeff(), 1e-10);
    }
}

TEST(syndrome, improper_coloring_rejected) {
    auto g = five_qubit_code();
    Coloring bad{{0, 0, 0, 0}, 1};
    EXPECT_THROW(build_syndrome_circuit(g, bad), ConstructionError);
}

TEST(syndrome, code_state_gives_zero_ancillas) {
    for (const auto &name : builtin_code_names()) {
        auto g = builtin_code(name);
        auto sc = build_syndrome_circuit(g);
        auto st = append_zero_qubits(QuantumState::from_tableau(StabilizerState::logical_basis_state(g, 0)), g.num_checks());
        auto out = apply_circuit(sc.circuit, st);
        for (size_t i = 0; i < g.num_checks(); i++) {
            EXPECT_EQ(out.expectation(PauliOperator::single(sc.circuit.m, g.num_qubits() + i, 'Z')), 1.0) << name;
        }
    }
}

TEST(syndrome, decohere_code_state) {
    auto g = toric_code(3);
    auto d = decohere(QuantumState::from_tableau(StabilizerState::logical_basis_state(g, 2)), g);
    ASSERT_EQ(d.branches.size(), 1u);
    EXPECT_EQ(d.branches.begin()->first, std::string(18, '0'));
    EXPECT_EQ(d.branches.begin()->second.probability, 1.0);
}

TEST(syndrome, decohere_single_errors) {
    for (const auto &name : builtin_code_names()) {
        auto g = builtin_code(name);
        for (size_t q = 0; q < g.num_qubits(); q++) {
            for (char letter : {'X', 'Y', 'Z'}) {
                auto d = decohere(with_error(g, q, letter), g);
                ASSERT_EQ(d.branches.size(), 1u);
                auto expected = syndrome_string(g.syndrome(PauliOperator::single(g.num_qubits(), q, letter)));
                EXPECT_EQ(d.branches.begin()->first, expected) << name << " " << q << letter;
            }
        }
    }
    auto toric = toric_code(2);
    auto dense = with_error(toric, 5, 'X');
    auto d = decohere(QuantumState::from_vector(dense.vector()), toric);
    ASSERT_EQ(d.branches.size(), 1u);
    EXPECT_EQ(std::count(d.branches.begin()->first.begin(), d.branches.begin()->first.end(), '1'), 2);
    EXPECT_NEAR(d.branches.begin()->second.probability, 1.0, 1e-12);
}

TEST(syndrome, decohere_reproduces_energy) {
    auto g = five_qubit_code();
    auto h = build_code_hamiltonian(g);
    for (uint64_t seed = 0; seed < 20; seed++) {
        auto c = random_low_depth(5, 1, seed % 2 ? GateFamily::HaarDense : GateFamily::Clifford, seed);
        auto st = QuantumState::prepared(c, Backend::Vector);
        auto d = decohere(st, g);
        EXPECT_NEAR(d.total_probability(), 1.0, 1e-10);
        EXPECT_NEAR(d.mean_syndrome_weight(), energy_report(st, h).total, 1e-9);
        for (const auto &[s, b] : d.branches) {
            for (size_t i = 0; i < 4; i++) {
                EXPECT_NEAR(b.state.expectation(g[i]), s[i] == '1' ? -1.0 : 1.0, 1e-10);
            }
        }
        if (seed % 2 == 0) {
            auto tab = decohere(QuantumState::prepared(c, Backend::Tableau), g);
            ASSERT_EQ(tab.branches.size(), d.branches.size());
            for (const auto &[s, b] : tab.branches) {
                EXPECT_NEAR(b.probability, d.branches.at(s).probability, 1e-10);
                EXPECT_NEAR(std::abs(b.state.vector().dot(d.branches.at(s).state.vector())), 1.0, 1e-10);
            }
        }
    }
}

TEST(syndrome, decohere_order_invariant) {
    auto g = toric_code(2);
    std::mt19937_64 rng(2);
    auto st = QuantumState::prepared(random_low_depth(8, 2, GateFamily::HaarDense, 4), Backend::Vector);
    auto base = decohere(st, g);
    for (int k = 0; k < 3; k++) {
        std::vector<size_t> order{0, 1, 2, 3, 4, 5, 6, 7};
        std::shuffle(order.begin(), order.end(), rng);
        auto other = decohere(st, g, order);
        ASSERT_EQ(other.branches.size(), base.branches.size());
        for (const auto &[s, b] : base.branches) {
            ASSERT_TRUE(other.branches.count(s));
            EXPECT_NEAR(other.branches.at(s).probability, b.probability, 1e-12);
            EXPECT_NEAR(std::abs(other.branches.at(s).state.vector().dot(b.state.vector())), 1.0, 1e-10);
        }
    }
    EXPECT_THROW(decohere(st, g, {0, 1}), ParameterError);
}

TEST(syndrome, decohere_json) {
    StabilizerGroup g(1, {PauliOperator::from_string("Z")});
    LayeredCircuit h(1);
    h.append_layer({Gate::named("H", {0})});
    auto d = decohere(QuantumState::prepared(h, Backend::Tableau), g);
    EXPECT_EQ(d.to_json(), "{\n  \"branches\": [\n    {\n      \"p\": 0.5,\n      \"s\": \"0\"\n    },\n    {\n      \"p\": 0.5,\n      \"s\": \"1\"\n    }\n  ]\n}\n");
}

TEST(syndrome, gentle_measurement_code_state) {
    auto g = five_qubit_code();
    auto st = QuantumState::from_tableau(StabilizerState::logical_basis_state(g, 1));
    for (std::vector<size_t> region : {std::vector<size_t>{0, 5}, {5, 6, 7, 8}, {1, 2, 8}}) {
        auto r = gentle_measurement_report(st, g, region);
        EXPECT_NEAR(r.fidelity, 1.0, 1e-9);
        EXPECT_EQ(r.bound, 1.0);
        EXPECT_TRUE(r.holds);
    }
}

TEST(syndrome, gentle_measurement_perturbed_state) {
    auto g = five_qubit_code();
    auto code = StabilizerState::logical_basis_state(g, 0).to_vector();
    LayeredCircuit tilt(5);
    CMat ry(2, 2);
    double a = 0.15;
    ry << std::cos(a), -std::sin(a), std::sin(a), std::cos(a);
    tilt.append_layer({Gate::dense(ry, {2})});
    auto st = apply_circuit(tilt, QuantumState::from_vector(code));
    auto r = gentle_measurement_report(st, g, {1, 2, 6});
    EXPECT_TRUE(r.holds);
    EXPECT_EQ(r.sma_in_region, (std::vector<size_t>{1}));
    EXPECT_LT(r.bound, 1.0);
    EXPECT_GE(r.fidelity, r.bound);
}

TEST(syndrome, gentle_measurement_sweep) {
    auto g = five_qubit_code();
    std::mt19937_64 rng(5);
    for (uint64_t seed = 0; seed < 100; seed++) {
        auto st = QuantumState::prepared(random_low_depth(5, 1, GateFamily::HaarDense, seed), Backend::Vector);
        std::vector<size_t> all{0, 1, 2, 3, 4, 5, 6, 7, 8};
        std::shuffle(all.begin(), all.end(), rng);
        all.resize(1 + rng() % 4);
        auto r = gentle_measurement_report(st, g, all);
        EXPECT_TRUE(r.holds) << r.fidelity << " " << r.bound;
    }
}
