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

#include "codedepth/kls.h"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "codedepth/errors.h"
#include "oracles.h"

using namespace codedepth;

namespace {

std::vector<size_t> grid_degrees(size_t n) {
    std::vector<size_t> out;
    size_t lo = size_t(std::ceil(std::sqrt(double(n))));
    out.push_back(lo);
    for (size_t p = 1; p <= n; p *= 2) {
        if (p > lo) {
            out.push_back(p);
        }
    }
    return out;
}

}  // namespace

TEST(kls, full_degree_interpolates) {
    for (size_t n : {1, 4, 9, 16, 32, 64}) {
        auto k = kls_polynomial(n, n);
        EXPECT_NEAR(k(0), 1.0, 1e-12) << n;
        EXPECT_LE(k.achieved_error, 1e-9) << n;
    }
}

TEST(kls, constraint_at_zero) {
    for (size_t n : {16, 32, 64}) {
        for (size_t deg : grid_degrees(n)) {
            auto k = kls_polynomial(n, deg);
            EXPECT_NEAR(k(0), 1.0, 1e-9) << n << " " << deg;
            EXPECT_EQ(k.chebyshev.size(), deg + 1);
        }
    }
}

TEST(kls, matches_lp_optimum) {
    std::vector<std::pair<size_t, size_t>> cases = {{4, 2}, {9, 3}, {16, 4}, {16, 8}, {16, 12}, {32, 6}, {32, 8}, {24, 10}};
    for (auto [n, deg] : cases) {
        auto k = kls_polynomial(n, deg);
        double lp = oracle::kls_lp_optimum(n, deg);
        EXPECT_NEAR(k.achieved_error, lp, 1e-6 * std::max(lp, 1e-3)) << n << " " << deg;
        EXPECT_NEAR(k.levelled_error, k.achieved_error, 1e-8) << n << " " << deg;
    }
}

TEST(kls, grid_bound) {
    for (size_t n : {16, 32, 64}) {
        for (size_t deg : grid_degrees(n)) {
            auto k = kls_polynomial(n, deg);
            EXPECT_TRUE(k.within_bound()) << n << " " << deg << " " << k.achieved_error;
        }
    }
    auto k = kls_polynomial(16, 8);
    EXPECT_NEAR(k.error_bound(), std::exp(-64.0 / 4096.0), 1e-15);
    EXPECT_LT(k.achieved_error, 0.1);
}

TEST(kls, error_decreases_with_degree) {
    double prev = 2;
    for (size_t deg = 6; deg <= 36; deg++) {
        auto k = kls_polynomial(36, deg);
        EXPECT_LE(k.achieved_error, prev * (1 + 1e-9)) << deg;
        prev = k.achieved_error;
    }
}

TEST(kls, rejects_degree_range) {
    EXPECT_THROW(kls_polynomial(16, 3), ParameterError);
    EXPECT_THROW(kls_polynomial(16, 17), ParameterError);
    EXPECT_THROW(kls_polynomial(0, 0), ParameterError);
    EXPECT_NO_THROW(kls_polynomial(16, 4));
}

TEST(kls, matrix_evaluation) {
    auto k = kls_polynomial(8, 4);
    std::mt19937_64 rng(5);
    size_t dim = 12;
    CMat q = random_unitary(dim, rng);
    Eigen::VectorXd eig(dim);
    std::uniform_real_distribution<double> u(0, 8);
    for (size_t i = 0; i < dim; i++) {
        eig(i) = i < 9 ? double(i) : u(rng);
    }
    CMat a = q * eig.cast<Complex>().asDiagonal() * q.adjoint();
    CMat expect = CMat::Zero(dim, dim);
    for (size_t i = 0; i < dim; i++) {
        expect += k(eig(i)) * q.col(i) * q.col(i).adjoint();
    }
    EXPECT_LT((k.of_matrix(a) - expect).norm(), 1e-10);
}
