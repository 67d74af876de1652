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

#include "codedepth/pauli.h"

#include <gtest/gtest.h>

#include <random>

#include "codedepth/dense.h"
#include "codedepth/errors.h"
#include "oracles.h"

using namespace codedepth;

namespace {

PauliOperator random_pauli(size_t n, std::mt19937_64 &rng) {
    std::uniform_int_distribution<int> d(0, 3);
    PauliOperator p(n);
    for (size_t q = 0; q < n; q++) {
        p.set_letter(q, "IXYZ"[d(rng)]);
    }
    p.negative = d(rng) & 1;
    return p;
}

}  // namespace

TEST(pauli, parse_print_round_trip) {
    for (const char *s : {"XZZXI", "-IXYZ", "I", "-Y", "ZZZZZZZZZZZZZZZZZZZZZZZZZZZZZZZZZZZZZZZZZZZZZZZZZZZZZZZZZZZZZZZZZZZX"}) {
        EXPECT_EQ(PauliOperator::from_string(s).str(), s);
    }
    EXPECT_EQ(PauliOperator::from_string("+XY").str(), "XY");
}

TEST(pauli, parse_error_reports_column) {
    try {
        PauliOperator::from_string("XZQ");
        FAIL();
    } catch (const ParseError &e) {
        EXPECT_EQ(e.line, 1u);
        EXPECT_EQ(e.column, 3u);
    }
}

TEST(pauli, weight_and_identity) {
    EXPECT_EQ(PauliOperator(4).weight(), 0u);
    EXPECT_FALSE(PauliOperator(4).negative);
    EXPECT_EQ(PauliOperator::from_string("XIYZ").weight(), 3u);
}

TEST(pauli, multiply_trivial_cases) {
    auto x = PauliOperator::from_string("X");
    auto z = PauliOperator::from_string("Z");
    EXPECT_TRUE(multiply(x, x).is_identity());
    EXPECT_FALSE(multiply(x, x).negative);
    auto xz = multiply(x, z);
    EXPECT_EQ(xz.weight(), 1u);
    EXPECT_EQ(xz.letter(0), 'Y');
}

TEST(pauli, square_is_plus_identity) {
    std::mt19937_64 rng(3);
    for (int k = 0; k < 200; k++) {
        auto p = random_pauli(6, rng);
        auto sq = multiply(p, p);
        EXPECT_TRUE(sq.is_identity());
        EXPECT_FALSE(sq.negative);
    }
}

TEST(pauli, five_qubit_product_matches_dense) {
    auto a = PauliOperator::from_string("XZZXI");
    auto b = PauliOperator::from_string("IXZZX");
    ASSERT_TRUE(commutes(a, b));
    auto r = multiply(a, b);
    EXPECT_TRUE(r.equal_up_to_sign(PauliOperator::from_string("XYIYX")));
    oracle::Mat expected = oracle::pauli("XZZXI") * oracle::pauli("IXZZX");
    EXPECT_LT((oracle::pauli(r.str()) - expected).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_EQ(r.str(), "XYIYX");
}

TEST(pauli, multiply_matches_dense_oracle) {
    std::mt19937_64 rng(11);
    const oracle::C i(0, 1);
    for (int k = 0; k < 500; k++) {
        auto a = random_pauli(4, rng);
        auto b = random_pauli(4, rng);
        auto r = multiply(a, b);
        oracle::Mat prod = oracle::pauli(a.str()) * oracle::pauli(b.str());
        oracle::Mat expect = commutes(a, b) ? oracle::pauli(r.str()) : oracle::Mat(i * oracle::pauli(r.str()));
        EXPECT_LT((prod - expect).cwiseAbs().maxCoeff(), 1e-12) << a.str() << " * " << b.str();
    }
}

TEST(pauli, multiply_associative) {
    std::mt19937_64 rng(5);
    for (int k = 0; k < 500; k++) {
        auto a = random_pauli(5, rng);
        auto b = random_pauli(5, rng);
        auto c = random_pauli(5, rng);
        auto left = multiply(multiply(a, b), c);
        auto right = multiply(a, multiply(b, c));
        EXPECT_TRUE(left.equal_up_to_sign(right));
        if (commutes(a, b) && commutes(b, c) && commutes(a, c)) {
            EXPECT_EQ(left, right);
        }
    }
}

TEST(pauli, commutes_examples) {
    EXPECT_TRUE(commutes(PauliOperator::from_string("XI"), PauliOperator::from_string("IZ")));
    EXPECT_FALSE(commutes(PauliOperator::from_string("X"), PauliOperator::from_string("Z")));
    auto a = PauliOperator::from_string("XZZXI");
    auto b = PauliOperator::from_string("ZXXZI");
    oracle::Mat pa = oracle::pauli("XZZXI"), pb = oracle::pauli("ZXXZI");
    bool dense_commutes = (pa * pb - pb * pa).cwiseAbs().maxCoeff() < 1e-12;
    EXPECT_EQ(commutes(a, b), dense_commutes);
}

TEST(pauli, commutes_matches_dense_commutator) {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<size_t> dn(1, 6);
    for (int k = 0; k < 1000; k++) {
        size_t n = dn(rng);
        auto a = random_pauli(n, rng);
        auto b = random_pauli(n, rng);
        oracle::Mat pa = oracle::pauli(a.str()), pb = oracle::pauli(b.str());
        bool dense_commutes = (pa * pb - pb * pa).cwiseAbs().maxCoeff() < 1e-12;
        ASSERT_EQ(commutes(a, b), dense_commutes);
    }
}

TEST(pauli, dimension_mismatch) {
    EXPECT_THROW(multiply(PauliOperator(2), PauliOperator(3)), DimensionError);
    EXPECT_THROW(commutes(PauliOperator(2), PauliOperator(3)), DimensionError);
}

TEST(pauli, dense_matrix_matches_kron_oracle) {
    std::mt19937_64 rng(23);
    for (int k = 0; k < 50; k++) {
        auto p = random_pauli(4, rng);
        EXPECT_LT((pauli_matrix(p) - oracle::pauli(p.str())).cwiseAbs().maxCoeff(), 1e-14);
    }
}

TEST(pauli, ordering_weight_first) {
    auto a = PauliOperator::from_string("IIX");
    auto b = PauliOperator::from_string("XXI");
    EXPECT_LT(a, b);
    EXPECT_LT(PauliOperator::from_string("XII"), PauliOperator::from_string("IXI"));
}
