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

#ifndef CODEDEPTH_KLS_H
#define CODEDEPTH_KLS_H

#include <vector>

#include "codedepth/dense.h"

namespace codedepth {

/// Degree-`deg` polynomial K with K(0) = 1 that minimises max_{1<=j<=n} |K(j)|
/// on the integers {0..n}, n = n_domain. Stored as Chebyshev coefficients in
/// the variable x = 2j/n - 1.
struct KlsPolynomial {
    size_t n_domain = 0;
    size_t deg = 0;
    std::vector<double> chebyshev;
    /// max_{j in 1..n} |K(j)|, evaluated from the stored coefficients.
    double achieved_error = 0;
    /// Levelled error of the final exchange reference (0 for interpolation).
    double levelled_error = 0;
    size_t iterations = 0;

    /// exp(-deg^2 / (2^8 n)).
    double error_bound() const;
    bool within_bound() const {
        return achieved_error <= error_bound();
    }
    double operator()(double j) const;
    /// K(A) for a Hermitian matrix A, by Clenshaw on 2A/n - I.
    CMat of_matrix(const CMat &a) const;
};

/// Discrete Remez exchange on {1..n}. deg == n is exact interpolation,
/// K(j) = prod_i (1 - j/i). Throws ParameterError unless sqrt(n) <= deg <= n.
KlsPolynomial kls_polynomial(size_t n_domain, size_t deg);

}  // namespace codedepth

#endif
