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

#include <algorithm>
#include <cmath>
#include <numbers>

#include "codedepth/errors.h"

namespace codedepth {

namespace {

/// T_0(x) .. T_{count-1}(x).
std::vector<double> chebyshev_row(double x, size_t count) {
    std::vector<double> t(count);
    if (count > 0) {
        t[0] = 1;
    }
    if (count > 1) {
        t[1] = x;
    }
    for (size_t i = 2; i < count; i++) {
        t[i] = 2 * x * t[i - 1] - t[i - 2];
    }
    return t;
}

double clenshaw(const std::vector<double> &c, double x) {
    double b1 = 0;
    double b2 = 0;
    for (size_t i = c.size(); i-- > 1;) {
        double b0 = 2 * x * b1 - b2 + c[i];
        b2 = b1;
        b1 = b0;
    }
    return x * b1 - b2 + (c.empty() ? 0 : c[0]);
}

/// Coefficients of 1 + (x + 1) R(x) from those of R.
std::vector<double> shift_multiply(const std::vector<double> &r) {
    std::vector<double> k(r.size() + 1, 0.0);
    k[0] = 1;
    for (size_t i = 0; i < r.size(); i++) {
        k[i] += r[i];
        if (i == 0) {
            k[1] += r[0];
        } else {
            k[i + 1] += r[i] / 2;
            k[i - 1] += r[i] / 2;
        }
    }
    return k;
}

std::vector<double> interpolate_product(size_t n) {
    size_t count = n + 1;
    std::vector<double> c(count, 0.0);
    for (size_t node = 0; node < count; node++) {
        double x = std::cos(std::numbers::pi * (double(node) + 0.5) / double(count));
        double j = (x + 1) * double(n) / 2;
        double f = 1;
        for (size_t i = 1; i <= n; i++) {
            f *= 1 - j / double(i);
        }
        auto t = chebyshev_row(x, count);
        for (size_t i = 0; i < count; i++) {
            c[i] += 2.0 / double(count) * f * t[i];
        }
    }
    c[0] /= 2;
    return c;
}

std::vector<size_t> initial_reference(size_t n, size_t size) {
    std::vector<size_t> ref(size);
    for (size_t k = 0; k < size; k++) {
        double x = -std::cos(std::numbers::pi * double(k) / double(size - 1));
        ref[k] = size_t(std::llround(1 + (x + 1) / 2 * double(n - 1)));
    }
    for (size_t k = 0; k < size; k++) {
        size_t lo = k == 0 ? 1 : ref[k - 1] + 1;
        size_t hi = n - (size - 1 - k);
        ref[k] = std::clamp(ref[k], lo, hi);
    }
    return ref;
}

}  // namespace

double KlsPolynomial::error_bound() const {
    return std::exp(-double(deg) * double(deg) / (256.0 * double(n_domain)));
}

double KlsPolynomial::operator()(double j) const {
    return clenshaw(chebyshev, 2 * j / double(n_domain) - 1);
}

CMat KlsPolynomial::of_matrix(const CMat &a) const {
    Eigen::Index dim = a.rows();
    CMat id = CMat::Identity(dim, dim);
    CMat x = a * (2.0 / double(n_domain)) - id;
    CMat b1 = CMat::Zero(dim, dim);
    CMat b2 = CMat::Zero(dim, dim);
    for (size_t i = chebyshev.size(); i-- > 1;) {
        CMat b0 = 2.0 * x * b1 - b2 + chebyshev[i] * id;
        b2 = std::move(b1);
        b1 = std::move(b0);
    }
    return x * b1 - b2 + chebyshev[0] * id;
}

KlsPolynomial kls_polynomial(size_t n_domain, size_t deg) {
    size_t n = n_domain;
    if (n == 0 || deg > n || deg * deg < n) {
        throw ParameterError(
            "infeasible degree range: need sqrt(n) <= deg <= n, got n=" + std::to_string(n) +
            " deg=" + std::to_string(deg));
    }
    KlsPolynomial out;
    out.n_domain = n;
    out.deg = deg;

    if (deg == n) {
        out.chebyshev = interpolate_product(n);
    } else {
        // K(x) = 1 + (x + 1) R(x). On the grid the error -K(x_j) equals
        // w_j (f_j - R(x_j)) with w_j = x_j + 1 and f_j = -1 / w_j, a weighted
        // approximation problem for R of degree deg - 1.
        std::vector<double> xs(n + 1);
        std::vector<std::vector<double>> rows(n + 1);
        for (size_t j = 1; j <= n; j++) {
            xs[j] = 2 * double(j) / double(n) - 1;
            rows[j] = chebyshev_row(xs[j], deg);
        }
        auto ref = initial_reference(n, deg + 1);
        std::vector<double> r(deg, 0.0);
        std::vector<double> err(n + 1, 0.0);
        for (size_t iter = 0; iter < 200; iter++) {
            out.iterations = iter + 1;
            Eigen::MatrixXd a(deg + 1, deg + 1);
            Eigen::VectorXd rhs(deg + 1);
            for (size_t k = 0; k <= deg; k++) {
                size_t j = ref[k];
                double w = xs[j] + 1;
                for (size_t i = 0; i < deg; i++) {
                    a(k, i) = rows[j][i];
                }
                a(k, deg) = ((k & 1) ? -1.0 : 1.0) / w;
                rhs(k) = -1 / w;
            }
            Eigen::VectorXd sol = a.fullPivLu().solve(rhs);
            for (size_t i = 0; i < deg; i++) {
                r[i] = sol(i);
            }
            double level = std::abs(sol(deg));
            out.levelled_error = level;

            size_t worst = 1;
            for (size_t j = 1; j <= n; j++) {
                double rv = 0;
                for (size_t i = 0; i < deg; i++) {
                    rv += r[i] * rows[j][i];
                }
                err[j] = -1 - (xs[j] + 1) * rv;
                if (std::abs(err[j]) > std::abs(err[worst])) {
                    worst = j;
                }
            }
            if (std::abs(err[worst]) <= level * (1 + 1e-10) + 1e-300) {
                break;
            }

            // Multiple exchange: the largest |err| of each same-sign run.
            std::vector<size_t> peaks;
            for (size_t j = 1; j <= n; j++) {
                bool positive = err[j] >= 0;
                if (!peaks.empty() && (err[peaks.back()] >= 0) == positive) {
                    if (std::abs(err[j]) > std::abs(err[peaks.back()])) {
                        peaks.back() = j;
                    }
                } else {
                    peaks.push_back(j);
                }
            }
            if (peaks.size() < deg + 1) {
                break;
            }
            size_t lo = 0;
            size_t hi = peaks.size();
            while (hi - lo > deg + 1) {
                bool drop_front;
                if (peaks[lo] == worst) {
                    drop_front = false;
                } else if (peaks[hi - 1] == worst) {
                    drop_front = true;
                } else {
                    drop_front = std::abs(err[peaks[lo]]) <= std::abs(err[peaks[hi - 1]]);
                }
                if (drop_front) {
                    lo++;
                } else {
                    hi--;
                }
            }
            std::vector<size_t> next(peaks.begin() + lo, peaks.begin() + hi);
            if (next == ref) {
                break;
            }
            ref = std::move(next);
        }
        out.chebyshev = shift_multiply(r);
    }

    double worst = 0;
    for (size_t j = 1; j <= n; j++) {
        worst = std::max(worst, std::abs(out(double(j))));
    }
    out.achieved_error = worst;
    return out;
}

}  // namespace codedepth
