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

#include <gtest/gtest.h>

#include "codedepth/codes.h"
#include "codedepth/errors.h"
#include "oracles.h"

using namespace codedepth;

namespace {

std::vector<std::string> check_strings(const StabilizerGroup &g) {
    std::vector<std::string> out;
    for (const auto &c : g.generators()) {
        out.push_back(c.str());
    }
    return out;
}

size_t oracle_rank(const StabilizerGroup &g) {
    std::vector<std::vector<int>> rows;
    for (const auto &c : g.generators()) {
        rows.push_back(oracle::symplectic_row(c.str()));
    }
    return oracle::rank(rows);
}

/// Minimum weight logical by enumerating every Pauli of the given weight or less.
size_t brute_force_distance(const StabilizerGroup &g, size_t cap) {
    size_t n = g.num_qubits();
    size_t best = SIZE_MAX;
    std::vector<std::vector<int>> base;
    for (const auto &c : g.generators()) {
        base.push_back(oracle::symplectic_row(c.str()));
    }
    size_t r = oracle::rank(base);
    uint64_t total = 1;
    for (size_t q = 0; q < n; q++) {
        total *= 4;
    }
    for (uint64_t code = 1; code < total; code++) {
        std::string s(n, 'I');
        uint64_t v = code;
        size_t w = 0;
        for (size_t q = 0; q < n; q++) {
            s[q] = "IXYZ"[v & 3];
            w += (v & 3) != 0;
            v >>= 2;
        }
        if (w > cap || w >= best) {
            continue;
        }
        auto p = PauliOperator::from_string(s);
        bool ok = true;
        for (const auto &c : g.generators()) {
            ok &= commutes(c, p);
        }
        if (!ok) {
            continue;
        }
        auto rows = base;
        rows.push_back(oracle::symplectic_row(s));
        if (oracle::rank(rows) > r) {
            best = w;
        }
    }
    return best;
}

}  // namespace

TEST(stabilizer_group, five_qubit_rank) {
    auto g = five_qubit_code();
    EXPECT_EQ(symplectic_rank(g), 4u);
    EXPECT_EQ(symplectic_rank(g), oracle_rank(g));
    EXPECT_EQ(g.num_logical(), 1u);
}

TEST(stabilizer_group, empty_group) {
    StabilizerGroup g(3, {});
    EXPECT_EQ(symplectic_rank(g), 0u);
    EXPECT_EQ(g.num_logical(), 3u);
}

TEST(stabilizer_group, toric3_rank) {
    auto g = toric_code(3);
    EXPECT_EQ(g.num_checks(), 18u);
    EXPECT_EQ(symplectic_rank(g), 16u);
    EXPECT_EQ(oracle_rank(g), 16u);
    EXPECT_EQ(g.num_logical(), 2u);
}

TEST(stabilizer_group, rejects_anticommuting_checks) {
    EXPECT_THROW(StabilizerGroup(1, {PauliOperator::from_string("X"), PauliOperator::from_string("Z")}), ConstructionError);
}

TEST(stabilizer_group, rejects_minus_identity) {
    EXPECT_THROW(
        StabilizerGroup(2, {PauliOperator::from_string("XX"), PauliOperator::from_string("ZZ"),
                            PauliOperator::from_string("YY")}),
        ConstructionError);
    EXPECT_NO_THROW(StabilizerGroup(
        2, {PauliOperator::from_string("XX"), PauliOperator::from_string("ZZ"), PauliOperator::from_string("-YY")}));
}

TEST(stabilizer_group, group_sign) {
    auto g = five_qubit_code();
    auto prod = multiply(g[0], g[1]);
    EXPECT_TRUE(g.contains(prod));
    auto neg = prod;
    neg.negative = !neg.negative;
    EXPECT_FALSE(g.contains(neg));
    EXPECT_EQ(g.group_sign(neg), prod.sign());
    EXPECT_FALSE(g.group_sign(PauliOperator::from_string("XXXXX")).has_value());
}

void check_pairs(const StabilizerGroup &g, const std::vector<LogicalPair> &pairs) {
    ASSERT_EQ(pairs.size(), g.num_logical());
    std::vector<PauliOperator> all;
    for (const auto &p : pairs) {
        all.push_back(p.xbar);
        all.push_back(p.zbar);
    }
    for (const auto &l : all) {
        for (const auto &c : g.generators()) {
            EXPECT_TRUE(commutes(l, c));
        }
        EXPECT_FALSE(g.group_sign(l).has_value());
    }
    for (size_t i = 0; i < all.size(); i++) {
        for (size_t j = 0; j < all.size(); j++) {
            bool should_anticommute = (i / 2 == j / 2) && i != j;
            EXPECT_EQ(!commutes(all[i], all[j]), should_anticommute);
        }
    }
    std::vector<std::vector<int>> rows;
    for (const auto &c : g.generators()) {
        rows.push_back(oracle::symplectic_row(c.str()));
    }
    for (const auto &l : all) {
        rows.push_back(oracle::symplectic_row(l.str()));
    }
    EXPECT_EQ(oracle::rank(rows), g.rank() + 2 * g.num_logical());
}

TEST(stabilizer_group, logical_pairs_five_qubit_dense) {
    auto g = five_qubit_code();
    auto pairs = logical_pairs(g);
    check_pairs(g, pairs);
    ASSERT_EQ(pairs.size(), 1u);
    oracle::Mat x = oracle::pauli(pairs[0].xbar.str());
    oracle::Mat z = oracle::pauli(pairs[0].zbar.str());
    EXPECT_LT((x * z + z * x).cwiseAbs().maxCoeff(), 1e-12);
    for (const auto &c : check_strings(g)) {
        oracle::Mat m = oracle::pauli(c);
        EXPECT_LT((x * m - m * x).cwiseAbs().maxCoeff(), 1e-12);
        EXPECT_LT((z * m - m * z).cwiseAbs().maxCoeff(), 1e-12);
    }
}

TEST(stabilizer_group, logical_pairs_zero_rate) {
    StabilizerGroup g(2, {PauliOperator::from_string("XX"), PauliOperator::from_string("ZZ")});
    EXPECT_TRUE(logical_pairs(g).empty());
}

TEST(stabilizer_group, logical_pairs_toric3_weight_three) {
    auto g = toric_code(3);
    auto pairs = logical_pairs(g);
    check_pairs(g, pairs);
    ASSERT_EQ(pairs.size(), 2u);
    for (const auto &p : pairs) {
        EXPECT_EQ(p.xbar.weight(), 3u);
        EXPECT_EQ(p.zbar.weight(), 3u);
        EXPECT_EQ(p.xbar.zs.popcount(), 0u);
        EXPECT_EQ(p.zbar.xs.popcount(), 0u);
    }
}

TEST(stabilizer_group, logical_pairs_all_builtins) {
    for (const auto &name : builtin_code_names()) {
        auto g = builtin_code(name);
        check_pairs(g, logical_pairs(g));
        check_pairs(g, logical_pairs(g, false));
    }
}

TEST(stabilizer_group, logical_pairs_deterministic) {
    auto g = toric_code(3);
    auto a = logical_pairs(g);
    auto b = logical_pairs(g);
    for (size_t i = 0; i < a.size(); i++) {
        EXPECT_EQ(a[i].xbar, b[i].xbar);
        EXPECT_EQ(a[i].zbar, b[i].zbar);
    }
}

TEST(stabilizer_group, distance_five_qubit) {
    auto g = five_qubit_code();
    auto r = min_weight_logical(g, 5);
    ASSERT_TRUE(r.distance.has_value());
    EXPECT_EQ(*r.distance, 3u);
    EXPECT_EQ(brute_force_distance(g, 5), 3u);
    ASSERT_TRUE(r.witness.has_value());
    EXPECT_EQ(r.witness->weight(), 3u);
    EXPECT_FALSE(g.syndrome(*r.witness).any());
    EXPECT_FALSE(g.group_sign(*r.witness).has_value());
}

TEST(stabilizer_group, distance_cap_marker) {
    auto r = min_weight_logical(five_qubit_code(), 2);
    EXPECT_FALSE(r.distance.has_value());
    EXPECT_FALSE(r.witness.has_value());
    EXPECT_EQ(r.searched_up_to, 2u);
    EXPECT_EQ(r.str(), ">2");
}

TEST(stabilizer_group, distance_toric3) {
    auto g = toric_code(3);
    auto r = min_weight_logical(g, 4);
    ASSERT_TRUE(r.distance.has_value());
    EXPECT_EQ(*r.distance, 3u);
    EXPECT_EQ(r.witness->weight(), 3u);
}

TEST(stabilizer_group, distance_no_logicals) {
    StabilizerGroup g(2, {PauliOperator::from_string("XX"), PauliOperator::from_string("ZZ")});
    auto r = min_weight_logical(g, 2);
    EXPECT_FALSE(r.has_logicals);
    EXPECT_EQ(r.str(), "n/a");
}

TEST(stabilizer_group, distance_matches_brute_force_small_builtins) {
    for (const char *name : {"five_qubit", "steane7", "toric2", "hgp_rep2"}) {
        auto g = builtin_code(name);
        auto r = min_weight_logical(g, g.num_qubits());
        ASSERT_TRUE(r.distance.has_value()) << name;
        EXPECT_EQ(*r.distance, brute_force_distance(g, g.num_qubits())) << name;
    }
}

TEST(stabilizer_group, distance_larger_builtins_by_coset_enumeration) {
    // Minimum weight over the explicit cosets L * S for every nontrivial logical
    // class L in the span of the logical pairs.
    for (const char *name : {"toric3", "hgp_rep3"}) {
        auto g = builtin_code(name);
        auto pairs = logical_pairs(g, false);
        std::vector<PauliOperator> gens;
        for (const auto &p : pairs) {
            gens.push_back(p.xbar);
            gens.push_back(p.zbar);
        }
        size_t best = SIZE_MAX;
        const auto &rows = g.echelon().rows;
        for (uint64_t cls = 1; cls < (uint64_t{1} << gens.size()); cls++) {
            PauliOperator l(g.num_qubits());
            for (size_t b = 0; b < gens.size(); b++) {
                if ((cls >> b) & 1) {
                    l.xs ^= gens[b].xs;
                    l.zs ^= gens[b].zs;
                }
            }
            for (uint64_t s = 0; s < (uint64_t{1} << rows.size()); s++) {
                PauliOperator e = l;
                for (size_t b = 0; b < rows.size(); b++) {
                    if ((s >> b) & 1) {
                        auto p = from_symplectic(rows[b], g.num_qubits());
                        e.xs ^= p.xs;
                        e.zs ^= p.zs;
                    }
                }
                best = std::min(best, e.weight());
            }
        }
        auto r = min_weight_logical(g, g.num_qubits());
        ASSERT_TRUE(r.distance.has_value());
        EXPECT_EQ(*r.distance, best) << name;
    }
}

TEST(stabilizer_group, kl_constant_cases) {
    auto g = five_qubit_code();
    EXPECT_EQ(kl_constant(PauliOperator(5), g).eta, 1);
    auto x1 = PauliOperator::from_string("XIIII");
    auto r = kl_constant(x1, g);
    EXPECT_FALSE(r.violation);
    EXPECT_EQ(r.eta, 0);
    oracle::Mat pi = oracle::code_projector(check_strings(g), 5);
    oracle::Mat sandwich = pi * oracle::pauli("XIIII") * pi;
    EXPECT_LT(sandwich.cwiseAbs().maxCoeff(), 1e-12);
    auto stab = g[2];
    stab.negative = true;
    EXPECT_EQ(kl_constant(stab, g).eta, -1);
}

TEST(stabilizer_group, kl_constant_logical_violation) {
    auto g = toric_code(2);
    auto pairs = logical_pairs(g);
    auto r = kl_constant(pairs[0].xbar, g);
    EXPECT_TRUE(r.violation);
    std::vector<std::string> checks = check_strings(g);
    oracle::Mat pi = oracle::code_projector(checks, 8);
    oracle::Mat s = pi * oracle::pauli(pairs[0].xbar.str()) * pi;
    // Not proportional to pi: the trace vanishes while the operator does not.
    EXPECT_LT(std::abs(s.trace()), 1e-9);
    EXPECT_GT(s.cwiseAbs().maxCoeff(), 0.1);
    auto g3 = toric_code(3);
    auto w = min_weight_logical(g3, 3);
    EXPECT_TRUE(kl_constant(*w.witness, g3).violation);
}

TEST(stabilizer_group, kl_zero_below_distance_all_builtins) {
    for (const char *name : {"five_qubit", "steane7", "toric2", "hgp_rep2"}) {
        auto g = builtin_code(name);
        size_t d = *min_weight_logical(g, g.num_qubits()).distance;
        size_t n = g.num_qubits();
        uint64_t total = 1;
        for (size_t q = 0; q < n; q++) {
            total *= 4;
        }
        for (uint64_t code = 1; code < total; code++) {
            PauliOperator p(n);
            uint64_t v = code;
            for (size_t q = 0; q < n; q++) {
                p.set_letter(q, "IXYZ"[v & 3]);
                v >>= 2;
            }
            if (p.weight() >= d) {
                continue;
            }
            auto r = kl_constant(p, g);
            ASSERT_FALSE(r.violation) << name << " " << p.str();
            if (!g.group_sign(p).has_value()) {
                ASSERT_EQ(r.eta, 0) << name << " " << p.str();
            }
        }
    }
}
