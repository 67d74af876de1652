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

#include "codedepth/frontier.h"

#include <gtest/gtest.h>

#include <chrono>
#include <functional>

#include "codedepth/codes.h"
#include "codedepth/errors.h"
#include "codedepth/json_util.h"
#include "oracles.h"

using namespace codedepth;

namespace {

/// Minimum energy over all 6^n stabilizer product states by direct enumeration,
/// using <C> = sign(C) prod_q <P_q> with <P_q> in {0, +-1}.
std::vector<std::string> check_strings(const StabilizerGroup &g) {
    std::vector<std::string> out;
    for (const auto &c : g.generators()) {
        out.push_back(c.str());
    }
    return out;
}

double exhaustive_product_minimum(const StabilizerGroup &g) {
    size_t n = g.num_qubits();
    uint64_t total = 1;
    for (size_t q = 0; q < n; q++) {
        total *= 6;
    }
    double best = 1e300;
    std::vector<int> axis(n), sign(n);
    for (uint64_t code = 0; code < total; code++) {
        uint64_t c = code;
        for (size_t q = 0; q < n; q++) {
            axis[q] = int(c % 3);
            sign[q] = (c / 3) % 2 ? -1 : 1;
            c /= 6;
        }
        double e = 0;
        for (const auto &chk : g.generators()) {
            std::string s = chk.str();
            int value = chk.negative ? -1 : 1;
            std::string body = chk.negative ? s.substr(1) : s;
            for (size_t q = 0; q < n && value != 0; q++) {
                if (body[q] == 'I') {
                    continue;
                }
                value = body[q] == "XYZ"[axis[q]] ? value * sign[q] : 0;
            }
            e += (1 - value) / 2.0;
        }
        best = std::min(best, e);
    }
    return best;
}

/// N/2 - s/2 with s the largest set of checks that can all be +1 on one
/// product state: letters agree on shared qubits and the sign system is consistent.
}  // namespace

TEST(frontier, toric3_product_baseline) {
    auto g = toric_code(3);
    auto start = std::chrono::steady_clock::now();
    auto r = best_product_state(g);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    EXPECT_EQ(r.best_energy.total, 4.5);
    EXPECT_EQ(oracle::min_product_energy(check_strings(g), g.num_qubits()), 4.5);
    EXPECT_LT(secs, 60.0);
    EXPECT_EQ(circuit_energy(r.best_circuit, g).total, 4.5);
    EXPECT_EQ(r.t, 0u);
}

TEST(frontier, product_search_matches_enumeration) {
    for (const auto &name : {"five_qubit", "steane7", "toric2", "hgp_rep2"}) {
        auto g = builtin_code(name);
        auto r = best_product_state(g);
        EXPECT_EQ(r.best_energy.total, exhaustive_product_minimum(g)) << name;
        EXPECT_GE(r.best_energy.total, oracle::min_product_energy(check_strings(g), g.num_qubits())) << name;
    }
}

TEST(frontier, signed_and_trivial_groups) {
    std::vector<PauliOperator> checks = {PauliOperator::from_string("-ZZI"), PauliOperator::from_string("XXX")};
    StabilizerGroup g(3, checks);
    EXPECT_EQ(best_product_state(g).best_energy.total, exhaustive_product_minimum(g));
    std::vector<PauliOperator> full = {
        PauliOperator::from_string("ZII"), PauliOperator::from_string("-IXI"), PauliOperator::from_string("IIY")};
    StabilizerGroup k0(3, full);
    EXPECT_EQ(best_product_state(k0).best_energy.total, 0.0);
    StabilizerGroup empty(4, {});
    auto recs = frontier_search(empty, 2, FrontierStrategy::RandomClifford, 3, 1);
    for (const auto &r : recs) {
        EXPECT_EQ(r.best_energy.total, 0.0);
    }
}

TEST(frontier, reproducible_per_seed) {
    auto g = five_qubit_code();
    for (auto s : {FrontierStrategy::RandomClifford, FrontierStrategy::CoordinateDescent}) {
        auto a = frontier_search(g, 3, s, 300, 77);
        auto b = frontier_search(g, 3, s, 300, 77);
        EXPECT_EQ(frontier_to_json(a), frontier_to_json(b));
        EXPECT_EQ(frontier_to_csv(a), frontier_to_csv(b));
        ASSERT_EQ(a.size(), 4u);
        for (const auto &r : a) {
            EXPECT_EQ(circuit_energy(r.best_circuit, g).total, r.best_energy.total);
            EXPECT_EQ(r.evaluations, 300u);
            EXPECT_EQ(r.seed, 77u);
        }
    }
}

TEST(frontier, merged_is_monotone) {
    auto g = toric_code(3);
    std::vector<FrontierRecord> all;
    for (auto s : {FrontierStrategy::PauliProducts, FrontierStrategy::RandomClifford, FrontierStrategy::CoordinateDescent}) {
        auto recs = frontier_search(g, 3, s, 200, 5);
        all.insert(all.end(), recs.begin(), recs.end());
    }
    auto merged = merge_frontier(all, 3);
    ASSERT_EQ(merged.size(), 4u);
    for (size_t t = 0; t < merged.size(); t++) {
        EXPECT_EQ(merged[t].t, t);
        if (t > 0) {
            EXPECT_LE(merged[t].best_energy.total, merged[t - 1].best_energy.total);
        }
    }
    EXPECT_EQ(merged[0].best_energy.total, 4.5);
    EXPECT_EQ(merged[0].strategy, FrontierStrategy::PauliProducts);
}

TEST(frontier, csv_and_json_layout) {
    auto g = five_qubit_code();
    auto recs = frontier_search(g, 1, FrontierStrategy::RandomClifford, 10, 3);
    auto csv = frontier_to_csv(recs);
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "t,strategy,seed,total_energy,mean_energy");
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 3);
    auto json = nlohmann::json::parse(frontier_to_json(recs));
    ASSERT_EQ(json.size(), 2u);
    EXPECT_EQ(json[1]["strategy"], "random-clifford");
    EXPECT_EQ(LayeredCircuit::from_json(json[1]["circuit"].dump()).depth(), 1u);
}

TEST(frontier, strategy_names_and_errors) {
    for (auto s : {FrontierStrategy::PauliProducts, FrontierStrategy::RandomClifford, FrontierStrategy::CoordinateDescent}) {
        EXPECT_EQ(parse_strategy(strategy_name(s)), s);
    }
    EXPECT_THROW(parse_strategy("annealing"), ParameterError);
    EXPECT_THROW(frontier_search(five_qubit_code(), 1, FrontierStrategy::RandomClifford, 0, 0), ParameterError);
}

TEST(frontier, consistency_with_bounds) {
    auto g = toric_code(3);
    std::vector<FrontierRecord> all;
    for (auto s : {FrontierStrategy::PauliProducts, FrontierStrategy::RandomClifford}) {
        auto recs = frontier_search(g, 2, s, 50, 2);
        all.insert(all.end(), recs.begin(), recs.end());
    }
    auto c = frontier_consistency(merge_frontier(all, 2), g);
    EXPECT_EQ(c.records_checked, 3u);
    EXPECT_TRUE(c.violations.empty());
    EXPECT_GT(c.applicable_bounds, 0u);

    // Synthetic parameters where the distance bound is applicable and large.
    BoundInputs in;
    in.n = 1000;
    in.k = 500;
    in.d = 1 << 20;
    in.locality = 2;
    in.eps = 1e-6;
    in.t = 0;
    EXPECT_EQ(consistency_violations(in), std::vector<std::string>{"thm3_distance"});
    in.t = 6;
    EXPECT_TRUE(consistency_violations(in).empty());
    in.t = 0;
    auto with_rate = consistency_violations(in, true);
    EXPECT_NE(std::find(with_rate.begin(), with_rate.end(), "thm2_rate"), with_rate.end());
}
