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

#include <gtest/gtest.h>

#include <random>

#include "codedepth/codes.h"
#include "codedepth/errors.h"
#include "codedepth/json_util.h"
#include "oracles.h"

using namespace codedepth;

namespace {

CMat random_density(size_t n, std::mt19937_64 &rng) {
    size_t dim = size_t{1} << n;
    std::normal_distribution<double> gauss;
    CMat a(dim, dim);
    for (size_t i = 0; i < dim; i++) {
        for (size_t j = 0; j < dim; j++) {
            a(i, j) = Complex(gauss(rng), gauss(rng));
        }
    }
    CMat rho = a * a.adjoint();
    return rho / rho.trace();
}

QuantumState code_state(const StabilizerGroup &g, uint64_t bits = 0) {
    return QuantumState::from_tableau(StabilizerState::logical_basis_state(g, bits));
}

/// E by explicit 4^k sum of kron-built logical products X^a Z^b rho Z^b X^a.
oracle::Mat oracle_depolarize(const oracle::Mat &rho, const std::vector<LogicalPair> &pairs) {
    size_t k = pairs.size();
    oracle::Mat out = oracle::Mat::Zero(rho.rows(), rho.cols());
    for (uint64_t a = 0; a < (uint64_t{1} << k); a++) {
        for (uint64_t b = 0; b < (uint64_t{1} << k); b++) {
            oracle::Mat x = oracle::Mat::Identity(rho.rows(), rho.cols());
            oracle::Mat z = x;
            for (size_t j = 0; j < k; j++) {
                if ((a >> j) & 1) {
                    x = x * oracle::pauli(pairs[j].xbar.str());
                }
                if ((b >> j) & 1) {
                    z = z * oracle::pauli(pairs[j].zbar.str());
                }
            }
            oracle::Mat p = x * z;
            out += p * rho * p.adjoint();
        }
    }
    return out / double(uint64_t{1} << (2 * k));
}

}  // namespace

TEST(entropy, von_neumann_cases) {
    CMat pure = pure_density(basis_vector(2, 1));
    EXPECT_NEAR(von_neumann_entropy(pure), 0.0, 1e-12);
    EXPECT_NEAR(von_neumann_entropy(CMat::Identity(2, 2) / 2.0), 1.0, 1e-12);
    CMat mix = CMat::Zero(2, 2);
    mix(0, 0) = 0.75;
    mix(1, 1) = 0.25;
    EXPECT_NEAR(von_neumann_entropy(mix), oracle::shannon({0.75, 0.25}), 1e-12);
    EXPECT_NEAR(von_neumann_entropy(mix), 0.8112781244591328, 1e-12);
    CMat bad = mix;
    bad(0, 0) = 1.75;
    EXPECT_THROW(von_neumann_entropy(bad), ParameterError);
}

TEST(entropy, trivial_code_is_identity_channel) {
    StabilizerGroup g(2, {PauliOperator::from_string("ZZ"), PauliOperator::from_string("XX")});
    auto pairs = logical_pairs(g);
    EXPECT_TRUE(pairs.empty());
    std::mt19937_64 rng(1);
    CMat rho = random_density(2, rng);
    auto out = logical_depolarize(QuantumState::from_density(rho), pairs);
    EXPECT_LT((out.density() - rho).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(entropy, dense_channel_matches_oracle) {
    std::mt19937_64 rng(2);
    for (const auto &g : {five_qubit_code(), toric_code(2), steane_code()}) {
        auto pairs = logical_pairs(g);
        CMat rho = random_density(g.num_qubits(), rng);
        auto out = logical_depolarize(QuantumState::from_density(rho), pairs).density();
        EXPECT_LT((out - oracle_depolarize(rho, pairs)).cwiseAbs().maxCoeff(), 1e-12);
    }
}

TEST(entropy, channel_unital_trace_preserving_idempotent) {
    std::mt19937_64 rng(3);
    for (const auto &g : {five_qubit_code(), toric_code(2)}) {
        auto pairs = logical_pairs(g);
        size_t dim = size_t{1} << g.num_qubits();
        CMat id = CMat::Identity(dim, dim) / double(dim);
        EXPECT_LT((logical_depolarize(QuantumState::from_density(id), pairs).density() - id).cwiseAbs().maxCoeff(), 1e-12);
        CMat rho = random_density(g.num_qubits(), rng);
        auto once = logical_depolarize(QuantumState::from_density(rho), pairs);
        EXPECT_NEAR(once.density().trace().real(), 1.0, 1e-12);
        auto twice = logical_depolarize(once, pairs);
        EXPECT_LT((twice.density() - once.density()).cwiseAbs().maxCoeff(), 1e-12);
    }
}

TEST(entropy, code_states_reach_k) {
    for (const auto &g : {five_qubit_code(), toric_code(2)}) {
        auto pairs = logical_pairs(g);
        auto st = code_state(g, 1);
        auto dense = logical_depolarize(QuantumState::from_vector(st.vector()), pairs);
        EXPECT_NEAR(state_entropy(dense), double(g.num_logical()), 1e-9);
        auto tab = logical_depolarize(st, pairs);
        EXPECT_EQ(stabilizer_entropy(tab), g.num_logical());
        EXPECT_LT((tab.density() - dense.density()).cwiseAbs().maxCoeff(), 1e-12);
    }
    for (const auto &name : builtin_code_names()) {
        auto g = builtin_code(name);
        EXPECT_EQ(stabilizer_entropy(logical_depolarize(code_state(g), logical_pairs(g))), g.num_logical()) << name;
    }
}

TEST(entropy, stabilizer_entropy_cases) {
    EXPECT_EQ(stabilizer_entropy(QuantumState::zero(4, Backend::Tableau)), 0u);
    auto mix = QuantumState::from_tableau(StabilizerState::code_mixture(five_qubit_code()));
    EXPECT_EQ(stabilizer_entropy(mix), 1u);
    EXPECT_NEAR(von_neumann_entropy(mix.density()), 1.0, 1e-9);
    EXPECT_THROW(stabilizer_entropy(QuantumState::zero(2, Backend::Vector)), BackendError);
}

TEST(entropy, stabilizer_entropy_matches_dense_everywhere) {
    size_t checked = 0;
    for (const auto &g : {five_qubit_code(), toric_code(2), steane_code(), builtin_code("hgp_rep2")}) {
        auto pairs = logical_pairs(g);
        for (uint64_t seed = 0; seed < 10; seed++) {
            auto st = QuantumState::prepared(random_low_depth(g.num_qubits(), 2, GateFamily::Clifford, seed), Backend::Tableau);
            auto d = decohere(st, g);
            size_t taken = 0;
            for (const auto &[s, b] : d.branches) {
                if (taken++ == 3) {
                    break;
                }
                auto mu = logical_depolarize(b.state, pairs);
                for (const auto &candidate : {b.state, mu}) {
                    double dense = von_neumann_entropy(candidate.density());
                    EXPECT_NEAR(dense, double(stabilizer_entropy(candidate)), 1e-9);
                    checked++;
                }
            }
        }
    }
    EXPECT_GE(checked, 200u);
}

TEST(entropy, depolarized_entropy_at_least_k) {
    std::mt19937_64 rng(4);
    for (const auto &name : builtin_code_names()) {
        auto g = builtin_code(name);
        auto pairs = logical_pairs(g);
        for (int i = 0; i < 100; i++) {
            if (g.num_qubits() <= 8) {
                auto out = logical_depolarize(QuantumState::from_density(random_density(g.num_qubits(), rng)), pairs);
                EXPECT_GE(state_entropy(out), double(g.num_logical()) - 1e-9) << name;
            } else {
                auto c = random_low_depth(g.num_qubits(), 3, GateFamily::Clifford, i);
                auto out = logical_depolarize(QuantumState::prepared(c, Backend::Tableau), pairs);
                EXPECT_GE(stabilizer_entropy(out), g.num_logical()) << name;
            }
        }
    }
}

TEST(entropy, marginal_suite_five_qubit_pairs) {
    auto g = five_qubit_code();
    for (size_t a = 0; a < 5; a++) {
        for (size_t b = a + 1; b < 5; b++) {
            auto r = marginal_invariance_suite(g, {a, b}, 3, a * 5 + b);
            EXPECT_TRUE(r.all()) << a << b << " " << r.code_state_spread << " " << r.logical_conjugation_deviation << " "
                                 << r.depolarizer_deviation;
        }
    }
}

TEST(entropy, marginal_suite_toric2_single_qubits) {
    auto g = toric_code(2);
    for (size_t q = 0; q < 8; q++) {
        EXPECT_TRUE(marginal_invariance_suite(g, {q}, 2, q).all());
    }
}

TEST(entropy, marginal_suite_precondition_and_negative_control) {
    auto g = five_qubit_code();
    EXPECT_THROW(marginal_invariance_suite(g, {0, 1, 2}), ParameterError);
    auto pairs = logical_pairs(g);
    auto support = pairs[0].zbar.support().ones();
    ASSERT_EQ(support.size(), 3u);
    EXPECT_GT(code_state_marginal_spread(g, support, 0, 0), 0.1);
}

TEST(entropy, extended_invariance_with_ancillas) {
    auto g = five_qubit_code();
    EXPECT_LT(extended_invariance_deviation(g, {0, 3}, 1, 7), 1e-10);
    EXPECT_LT(extended_invariance_deviation(toric_code(2), {2}, 2, 8), 1e-10);
    // The ancilla alone can be entangled with the logical qubit; a weight-3
    // region is past the distance and rejected.
    EXPECT_THROW(extended_invariance_deviation(g, {0, 1, 2}, 1, 0), ParameterError);
}

TEST(entropy, zero_expectation_cases) {
    auto g = toric_code(3);
    auto st = code_state(g);
    // Qubit 0 sits in a plaquette (Z check), so X on it anti-commutes.
    auto x = PauliOperator::single(18, 0, 'X');
    EXPECT_TRUE(g.syndrome(x).any());
    EXPECT_EQ(st.expectation(x), 0.0);

    auto five = five_qubit_code();
    for (uint64_t s = 0; s < 16; s += 5) {
        BitVector bits(4);
        for (size_t i = 0; i < 4; i++) {
            bits.set(i, (s >> i) & 1);
        }
        auto r = zero_expectation_suite(five, bits, 125, s);
        EXPECT_TRUE(r.holds) << r.max_anticommuting_expectation << " " << r.max_syndrome_deviation;
        EXPECT_EQ(r.samples, 125u);
    }
    auto toric = toric_code(2);
    BitVector odd(8);
    odd.set(0, true);
    EXPECT_FALSE(syndrome_realizable(toric, odd));
    EXPECT_THROW(zero_expectation_suite(toric, odd, 1, 0), ParameterError);
    BitVector even(8);
    even.set(0, true);
    even.set(1, true);
    EXPECT_TRUE(syndrome_realizable(toric, even));
}

TEST(entropy, theta_branch_entropy_matches_dense) {
    auto g = five_qubit_code();
    for (uint64_t seed = 0; seed < 5; seed++) {
        auto st = QuantumState::prepared(random_low_depth(5, 1, GateFamily::HaarDense, seed), Backend::Vector);
        auto theta = build_theta(st, g);
        EXPECT_NEAR(theta.entropy(), von_neumann_entropy(theta.density()), 1e-8);
        EXPECT_GE(theta.entropy(), 1.0 - 1e-9);
    }
}

TEST(entropy, audit_code_state) {
    auto g = five_qubit_code();
    auto theta = build_theta(code_state(g), g);
    EXPECT_EQ(theta.branches.size(), 1u);
    EXPECT_NEAR(theta.entropy(), 1.0, 1e-12);
    auto audit = entropy_audit(theta, build_syndrome_circuit(g).circuit);
    EXPECT_EQ(audit.k, 1u);
    EXPECT_NEAR(audit.s_theta, 1.0, 1e-12);
    EXPECT_TRUE(audit.holds);
}

TEST(entropy, audit_product_is_tight) {
    StabilizerGroup g(2, {PauliOperator::from_string("ZI")});
    auto theta = build_theta(QuantumState::zero(2, Backend::Tableau), g);
    auto audit = entropy_audit(theta, LayeredCircuit(3));
    EXPECT_NEAR(audit.s_theta, 1.0, 1e-12);
    EXPECT_NEAR(audit.per_qubit_sum, 1.0, 1e-9);
    EXPECT_TRUE(audit.holds);
    EXPECT_EQ(audit.to_json(), "{\n  \"S_Theta\": 1.0,\n  \"k\": 1,\n  \"per_qubit_sum\": " +
                                   nlohmann::json(audit.per_qubit_sum).dump() + "\n}\n");
}

TEST(entropy, audit_perturbed_states) {
    auto g = five_qubit_code();
    auto v = build_syndrome_circuit(g).circuit;
    for (uint64_t seed = 0; seed < 5; seed++) {
        auto u = random_low_depth(5, 1, GateFamily::HaarDense, seed);
        auto st = QuantumState::prepared(u, Backend::Vector);
        auto w = widen_circuit(u, 9);
        w.append(v);
        auto audit = entropy_audit(build_theta(st, g), w);
        EXPECT_TRUE(audit.holds) << audit.s_theta << " " << audit.per_qubit_sum;
        EXPECT_LE(1.0, audit.s_theta + 1e-9);
    }
}
