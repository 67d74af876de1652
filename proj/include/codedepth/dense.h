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

#ifndef CODEDEPTH_DENSE_H
#define CODEDEPTH_DENSE_H

#include <Eigen/Dense>
#include <complex>
#include <random>
#include <string>
#include <vector>

#include "codedepth/pauli.h"

namespace codedepth {

using Complex = std::complex<double>;
using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;

/// Qubit q is bit q of a basis index.

/// Largest qubit counts for dense vectors, density matrices and marginals.
/// Overridden by CODEDEPTH_DENSE_LIMITS="vector,density,marginal".
struct DenseLimits {
    size_t vector_qubits = 24;
    size_t density_qubits = 12;
    size_t marginal_qubits = 10;

    static const DenseLimits &get();
    static void set(const DenseLimits &limits);
    /// "v,d,m"; empty fields keep the defaults.
    static DenseLimits parse(const std::string &text);
};

void require_vector_limit(size_t num_qubits);
void require_density_limit(size_t num_qubits);
void require_marginal_limit(size_t num_qubits);

CVec basis_vector(size_t num_qubits, uint64_t index);
CMat pure_density(const CVec &psi);

/// Full 2^n x 2^n matrix of a Pauli operator.
CMat pauli_matrix(const PauliOperator &p);
CVec apply_pauli(const PauliOperator &p, const CVec &psi);
/// p * rho (left multiplication only).
CMat apply_pauli_left(const PauliOperator &p, const CMat &rho);
/// p * rho * p.
CMat conjugate_by_pauli(const PauliOperator &p, const CMat &rho);
double pauli_expectation(const PauliOperator &p, const CVec &psi);
double pauli_expectation(const PauliOperator &p, const CMat &rho);

/// Applies a 2x2 or 4x4 unitary. For two qubits the local index is b0 + 2*b1
/// where b0 is the bit of qubits[0].
void apply_local_unitary(CVec &psi, const CMat &u, const std::vector<size_t> &qubits);
/// u on the left of every column.
void apply_local_unitary_left(CMat &rho, const CMat &u, const std::vector<size_t> &qubits);
/// u rho u^dagger.
void conjugate_local_unitary(CMat &rho, const CMat &u, const std::vector<size_t> &qubits);

/// Reduced state on `keep`; keep[j] becomes bit j of the output index.
CMat partial_trace(const CVec &psi, size_t num_qubits, const std::vector<size_t> &keep);
CMat partial_trace(const CMat &rho, size_t num_qubits, const std::vector<size_t> &keep);

/// Zeroes coherences between different values of the listed qubits.
CMat dephase(const CMat &rho, const std::vector<size_t> &qubits);

/// Entropy in bits. Requires a Hermitian PSD unit-trace input within 1e-8.
double von_neumann_entropy(const CMat &rho);
/// Root fidelity ||sqrt(rho) sqrt(sigma)||_1.
double fidelity(const CMat &rho, const CMat &sigma);
/// (1/2) ||rho - sigma||_1.
double trace_distance(const CMat &rho, const CMat &sigma);
/// Largest |eigenvalue| of a Hermitian matrix. Full eigensolver up to 2^10,
/// power iteration (tolerance 1e-9) up to 2^12.
double operator_norm(const CMat &h);
/// Eigenvalues of a Hermitian matrix in ascending order.
Eigen::VectorXd hermitian_eigenvalues(const CMat &h);

/// Haar-random pure state.
CVec random_pure_state(size_t num_qubits, std::mt19937_64 &rng);
/// Haar-random d x d unitary.
CMat random_unitary(size_t dim, std::mt19937_64 &rng);

/// Kronecker product a (x) b where a acts on the higher bits.
CMat kron(const CMat &a, const CMat &b);

}  // namespace codedepth

#endif
