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

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "oracles.h"

namespace oracle {

double kls_lp_optimum(size_t n, size_t deg) {
    size_t vars = 2 * deg + 1;
    size_t cons = 2 * n;
    // Tableau rows 0..cons-1 are constraints, the last row is the reduced cost.
    // Columns: structural variables, then slacks, then the right-hand side.
    size_t cols = vars + cons + 1;
    Eigen::MatrixXd t = Eigen::MatrixXd::Zero(cons + 1, cols);
    for (size_t j = 1; j <= n; j++) {
        double x = 2.0 * double(j) / double(n) - 1.0;
        double xp = 1;
        for (size_t i = 1; i <= deg; i++) {
            xp *= x;
            double a = xp - ((i & 1) ? -1.0 : 1.0);
            size_t r0 = 2 * (j - 1);
            t(r0, i - 1) = a;
            t(r0, deg + i - 1) = -a;
            t(r0 + 1, i - 1) = -a;
            t(r0 + 1, deg + i - 1) = a;
        }
        size_t r0 = 2 * (j - 1);
        t(r0, 2 * deg) = 1;
        t(r0 + 1, 2 * deg) = 1;
        t(r0, vars + r0) = 1;
        t(r0 + 1, vars + r0 + 1) = 1;
        t(r0, cols - 1) = 0;
        t(r0 + 1, cols - 1) = 2;
    }
    // Maximise g: reduced cost row holds -c.
    t(cons, 2 * deg) = -1;
    std::vector<size_t> basis(cons);
    for (size_t r = 0; r < cons; r++) {
        basis[r] = vars + r;
    }
    const double eps = 1e-11;
    for (size_t iter = 0; iter < 200000; iter++) {
        size_t enter = cols;
        for (size_t c = 0; c + 1 < cols; c++) {
            if (t(cons, c) < -eps) {
                enter = c;
                break;
            }
        }
        if (enter == cols) {
            return 1.0 - t(cons, cols - 1);
        }
        size_t leave = cons;
        double best = 0;
        for (size_t r = 0; r < cons; r++) {
            if (t(r, enter) > eps) {
                double ratio = t(r, cols - 1) / t(r, enter);
                if (leave == cons || ratio < best - 1e-14 ||
                    (std::abs(ratio - best) <= 1e-14 && basis[r] < basis[leave])) {
                    leave = r;
                    best = ratio;
                }
            }
        }
        if (leave == cons) {
            throw std::runtime_error("LP unbounded");
        }
        t.row(leave) /= t(leave, enter);
        for (size_t r = 0; r <= cons; r++) {
            if (r != leave && t(r, enter) != 0) {
                t.row(r) -= t(r, enter) * t.row(leave);
            }
        }
        basis[leave] = enter;
    }
    throw std::runtime_error("LP iteration limit");
}

double min_product_energy(const std::vector<std::string> &checks, size_t n) {
    std::vector<std::string> bodies;
    std::vector<int> rhs;
    for (const auto &s : checks) {
        bool negative = !s.empty() && s[0] == '-';
        bodies.push_back(negative || (!s.empty() && s[0] == '+') ? s.substr(1) : s);
        rhs.push_back(negative ? 1 : 0);
    }
    size_t num = bodies.size();
    auto compatible = [&](size_t a, size_t b) {
        for (size_t q = 0; q < n; q++) {
            if (bodies[a][q] != 'I' && bodies[b][q] != 'I' && bodies[a][q] != bodies[b][q]) {
                return false;
            }
        }
        return true;
    };
    auto consistent = [&](const std::vector<size_t> &set) {
        std::vector<std::vector<int>> a, ab;
        for (size_t i : set) {
            std::vector<int> row(n);
            for (size_t q = 0; q < n; q++) {
                row[q] = bodies[i][q] != 'I';
            }
            a.push_back(row);
            row.push_back(rhs[i]);
            ab.push_back(row);
        }
        return oracle::rank(a) == oracle::rank(ab);
    };
    size_t best = 0;
    std::vector<size_t> chosen;
    std::function<void(size_t)> dfs = [&](size_t next) {
        if (chosen.size() + (num - next) <= best) {
            return;
        }
        if (next == num) {
            best = std::max(best, chosen.size());
            return;
        }
        bool ok = std::all_of(chosen.begin(), chosen.end(), [&](size_t c) { return compatible(c, next); });
        if (ok) {
            chosen.push_back(next);
            if (consistent(chosen)) {
                best = std::max(best, chosen.size());
                dfs(next + 1);
            }
            chosen.pop_back();
        }
        dfs(next + 1);
    };
    dfs(0);
    return double(num) / 2 - double(best) / 2;
}

}  // namespace oracle
