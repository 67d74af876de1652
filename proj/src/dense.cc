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

#include "codedepth/dense.h"

#include <Eigen/Eigenvalues>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <sstream>

#include "codedepth/errors.h"

namespace codedepth {

namespace {

uint64_t bits_to_mask(const BitVector &v) {
    uint64_t m = 0;
    for (size_t q : v.ones()) {
        m |= uint64_t{1} << q;
    }
    return m;
}

Complex pauli_prefactor(const PauliOperator &p) {
    // i^(#Y) times the sign.
    static const Complex powers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    size_t ys = (p.xs & p.zs).popcount();
    Complex c = powers[ys & 3];
    return p.negative ? -c : c;
}

template <typename Fn>
void for_each_column(CMat &rho, Fn &&fn) {
    for (Eigen::Index c = 0; c < rho.cols(); c++) {
        fn(rho.col(c).data());
    }
}

void apply_local(Complex *data, size_t dim, const CMat &u, const std::vector<size_t> &qubits) {
    if (qubits.size() == 1) {
        uint64_t b = uint64_t{1} << qubits[0];
        Complex u00 = u(0, 0), u01 = u(0, 1), u10 = u(1, 0), u11 = u(1, 1);
        for (uint64_t i = 0; i < dim; i++) {
            if (i & b) {
                continue;
            }
            Complex a0 = data[i], a1 = data[i | b];
            data[i] = u00 * a0 + u01 * a1;
            data[i | b] = u10 * a0 + u11 * a1;
        }
        return;
    }
    uint64_t b0 = uint64_t{1} << qubits[0];
    uint64_t b1 = uint64_t{1} << qubits[1];
    for (uint64_t i = 0; i < dim; i++) {
        if (i & (b0 | b1)) {
            continue;
        }
        uint64_t idx[4] = {i, i | b0, i | b1, i | b0 | b1};
        Complex in[4];
        for (int k = 0; k < 4; k++) {
            in[k] = data[idx[k]];
        }
        for (int r = 0; r < 4; r++) {
            Complex acc = 0;
            for (int k = 0; k < 4; k++) {
                acc += u(r, k) * in[k];
            }
            data[idx[r]] = acc;
        }
    }
}

void check_local(const CMat &u, const std::vector<size_t> &qubits, size_t num_qubits) {
    size_t expected = qubits.size() == 1 ? 2 : qubits.size() == 2 ? 4 : 0;
    if (expected == 0 || (size_t)u.rows() != expected || (size_t)u.cols() != expected) {
        throw DimensionError("local unitary must be 2x2 on one qubit or 4x4 on two qubits");
    }
    for (size_t q : qubits) {
        if (q >= num_qubits) {
            throw DimensionError("gate qubit out of range");
        }
    }
    if (qubits.size() == 2 && qubits[0] == qubits[1]) {
        throw DimensionError("two-qubit gate on a repeated qubit");
    }
}

size_t qubits_of_dim(Eigen::Index dim) {
    return (size_t)std::countr_zero((uint64_t)dim);
}

uint64_t scatter(uint64_t value, const std::vector<size_t> &positions) {
    uint64_t out = 0;
    for (size_t j = 0; j < positions.size(); j++) {
        if ((value >> j) & 1) {
            out |= uint64_t{1} << positions[j];
        }
    }
    return out;
}

std::vector<size_t> complement(size_t num_qubits, const std::vector<size_t> &keep) {
    std::vector<bool> kept(num_qubits, false);
    for (size_t q : keep) {
        if (q >= num_qubits) {
            throw DimensionError("region qubit out of range");
        }
        if (kept[q]) {
            throw DimensionError("region lists a qubit twice");
        }
        kept[q] = true;
    }
    std::vector<size_t> rest;
    for (size_t q = 0; q < num_qubits; q++) {
        if (!kept[q]) {
            rest.push_back(q);
        }
    }
    return rest;
}

}  // namespace

namespace {

DenseLimits &limits_storage() {
    static DenseLimits limits = [] {
        DenseLimits l;
        if (const char *env = std::getenv("CODEDEPTH_DENSE_LIMITS")) {
            l = DenseLimits::parse(env);
        }
        return l;
    }();
    return limits;
}

}  // namespace

DenseLimits DenseLimits::parse(const std::string &text) {
    DenseLimits l;
    std::stringstream ss(text);
    std::string item;
    size_t *fields[3] = {&l.vector_qubits, &l.density_qubits, &l.marginal_qubits};
    for (int i = 0; i < 3 && std::getline(ss, item, ','); i++) {
        if (!item.empty()) {
            *fields[i] = std::stoul(item);
        }
    }
    return l;
}

const DenseLimits &DenseLimits::get() {
    return limits_storage();
}

void DenseLimits::set(const DenseLimits &limits) {
    limits_storage() = limits;
}

void require_vector_limit(size_t num_qubits) {
    if (num_qubits > DenseLimits::get().vector_qubits) {
        throw DenseLimitError(
            "dense limit exceeded: state vector on " + std::to_string(num_qubits) + " qubits (limit " +
            std::to_string(DenseLimits::get().vector_qubits) + ")");
    }
}

void require_density_limit(size_t num_qubits) {
    if (num_qubits > DenseLimits::get().density_qubits) {
        throw DenseLimitError(
            "dense limit exceeded: density matrix on " + std::to_string(num_qubits) + " qubits (limit " +
            std::to_string(DenseLimits::get().density_qubits) + ")");
    }
}

void require_marginal_limit(size_t num_qubits) {
    if (num_qubits > DenseLimits::get().marginal_qubits) {
        throw DenseLimitError(
            "dense limit exceeded: marginal on " + std::to_string(num_qubits) + " qubits (limit " +
            std::to_string(DenseLimits::get().marginal_qubits) + ")");
    }
}

CVec basis_vector(size_t num_qubits, uint64_t index) {
    require_vector_limit(num_qubits);
    CVec v = CVec::Zero(Eigen::Index{1} << num_qubits);
    v(index) = 1;
    return v;
}

CMat pure_density(const CVec &psi) {
    return psi * psi.adjoint();
}

CMat pauli_matrix(const PauliOperator &p) {
    size_t n = p.num_qubits();
    require_density_limit(n);
    uint64_t dim = uint64_t{1} << n;
    CMat m = CMat::Zero(dim, dim);
    uint64_t x = bits_to_mask(p.xs), z = bits_to_mask(p.zs);
    Complex c = pauli_prefactor(p);
    for (uint64_t j = 0; j < dim; j++) {
        m(j ^ x, j) = (std::popcount(j & z) & 1) ? -c : c;
    }
    return m;
}

CVec apply_pauli(const PauliOperator &p, const CVec &psi) {
    uint64_t dim = psi.size();
    if (dim != uint64_t{1} << p.num_qubits()) {
        throw DimensionError("Pauli and state sizes differ");
    }
    uint64_t x = bits_to_mask(p.xs), z = bits_to_mask(p.zs);
    Complex c = pauli_prefactor(p);
    CVec out(dim);
    for (uint64_t j = 0; j < dim; j++) {
        out(j ^ x) = ((std::popcount(j & z) & 1) ? -c : c) * psi(j);
    }
    return out;
}

CMat apply_pauli_left(const PauliOperator &p, const CMat &rho) {
    uint64_t dim = rho.rows();
    if (dim != uint64_t{1} << p.num_qubits()) {
        throw DimensionError("Pauli and state sizes differ");
    }
    uint64_t x = bits_to_mask(p.xs), z = bits_to_mask(p.zs);
    Complex c = pauli_prefactor(p);
    CMat out(dim, rho.cols());
    for (uint64_t j = 0; j < dim; j++) {
        out.row(j ^ x) = ((std::popcount(j & z) & 1) ? -c : c) * rho.row(j);
    }
    return out;
}

CMat conjugate_by_pauli(const PauliOperator &p, const CMat &rho) {
    CMat left = apply_pauli_left(p, rho);
    return apply_pauli_left(p, left.adjoint()).adjoint();
}

double pauli_expectation(const PauliOperator &p, const CVec &psi) {
    return psi.dot(apply_pauli(p, psi)).real();
}

double pauli_expectation(const PauliOperator &p, const CMat &rho) {
    uint64_t dim = rho.rows();
    if (dim != uint64_t{1} << p.num_qubits()) {
        throw DimensionError("Pauli and state sizes differ");
    }
    uint64_t x = bits_to_mask(p.xs), z = bits_to_mask(p.zs);
    Complex c = pauli_prefactor(p);
    // tr(P rho) = sum_j <j^x| ... = sum_j c_j rho(j, j^x).
    Complex acc = 0;
    for (uint64_t j = 0; j < dim; j++) {
        acc += ((std::popcount(j & z) & 1) ? -c : c) * rho(j, j ^ x);
    }
    return acc.real();
}

void apply_local_unitary(CVec &psi, const CMat &u, const std::vector<size_t> &qubits) {
    check_local(u, qubits, qubits_of_dim(psi.size()));
    apply_local(psi.data(), psi.size(), u, qubits);
}

void apply_local_unitary_left(CMat &rho, const CMat &u, const std::vector<size_t> &qubits) {
    check_local(u, qubits, qubits_of_dim(rho.rows()));
    size_t dim = rho.rows();
    for_each_column(rho, [&](Complex *col) { apply_local(col, dim, u, qubits); });
}

void conjugate_local_unitary(CMat &rho, const CMat &u, const std::vector<size_t> &qubits) {
    apply_local_unitary_left(rho, u, qubits);
    CMat t = rho.adjoint();
    apply_local_unitary_left(t, u, qubits);
    rho = t.adjoint();
}

CMat partial_trace(const CVec &psi, size_t num_qubits, const std::vector<size_t> &keep) {
    if ((uint64_t)psi.size() != uint64_t{1} << num_qubits) {
        throw DimensionError("state size does not match qubit count");
    }
    require_marginal_limit(keep.size());
    std::vector<size_t> rest = complement(num_qubits, keep);
    uint64_t da = uint64_t{1} << keep.size();
    uint64_t db = uint64_t{1} << rest.size();
    CMat m(da, db);
    for (uint64_t a = 0; a < da; a++) {
        uint64_t ia = scatter(a, keep);
        for (uint64_t b = 0; b < db; b++) {
            m(a, b) = psi(ia | scatter(b, rest));
        }
    }
    return m * m.adjoint();
}

CMat partial_trace(const CMat &rho, size_t num_qubits, const std::vector<size_t> &keep) {
    if ((uint64_t)rho.rows() != uint64_t{1} << num_qubits) {
        throw DimensionError("density size does not match qubit count");
    }
    require_marginal_limit(keep.size());
    std::vector<size_t> rest = complement(num_qubits, keep);
    uint64_t da = uint64_t{1} << keep.size();
    uint64_t db = uint64_t{1} << rest.size();
    std::vector<uint64_t> sa(da), sb(db);
    for (uint64_t a = 0; a < da; a++) {
        sa[a] = scatter(a, keep);
    }
    for (uint64_t b = 0; b < db; b++) {
        sb[b] = scatter(b, rest);
    }
    CMat out = CMat::Zero(da, da);
    for (uint64_t a = 0; a < da; a++) {
        for (uint64_t a2 = 0; a2 < da; a2++) {
            Complex acc = 0;
            for (uint64_t b = 0; b < db; b++) {
                acc += rho(sa[a] | sb[b], sa[a2] | sb[b]);
            }
            out(a, a2) = acc;
        }
    }
    return out;
}

CMat dephase(const CMat &rho, const std::vector<size_t> &qubits) {
    uint64_t mask = 0;
    for (size_t q : qubits) {
        mask |= uint64_t{1} << q;
    }
    CMat out = rho;
    for (Eigen::Index i = 0; i < rho.rows(); i++) {
        for (Eigen::Index j = 0; j < rho.cols(); j++) {
            if (((uint64_t)i ^ (uint64_t)j) & mask) {
                out(i, j) = 0;
            }
        }
    }
    return out;
}

Eigen::VectorXd hermitian_eigenvalues(const CMat &h) {
    Eigen::SelfAdjointEigenSolver<CMat> es(h, Eigen::EigenvaluesOnly);
    return es.eigenvalues();
}

double von_neumann_entropy(const CMat &rho) {
    if (rho.rows() != rho.cols()) {
        throw DimensionError("density matrix must be square");
    }
    if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > 1e-8) {
        throw ParameterError("density matrix is not Hermitian");
    }
    if (std::abs(rho.trace() - Complex(1, 0)) > 1e-8) {
        throw ParameterError("density matrix does not have unit trace");
    }
    Eigen::VectorXd ev = hermitian_eigenvalues(rho);
    double s = 0;
    for (double l : ev) {
        if (l < -1e-8) {
            throw ParameterError("density matrix is not positive semidefinite");
        }
        if (l > 0) {
            s -= l * std::log2(l);
        }
    }
    return s;
}

namespace {

CMat psd_sqrt(const CMat &rho) {
    Eigen::SelfAdjointEigenSolver<CMat> es(rho);
    Eigen::VectorXd ev = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
    return es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace

double fidelity(const CMat &rho, const CMat &sigma) {
    if (rho.rows() != sigma.rows()) {
        throw DimensionError("fidelity operands differ in size");
    }
    CMat s = psd_sqrt(rho);
    CMat m = s * sigma * s;
    m = (m + m.adjoint()) / 2.0;
    Eigen::VectorXd ev = hermitian_eigenvalues(m);
    double f = 0;
    for (double l : ev) {
        if (l > 0) {
            f += std::sqrt(l);
        }
    }
    return f;
}

double trace_distance(const CMat &rho, const CMat &sigma) {
    if (rho.rows() != sigma.rows()) {
        throw DimensionError("trace distance operands differ in size");
    }
    CMat d = rho - sigma;
    d = (d + d.adjoint()) / 2.0;
    return hermitian_eigenvalues(d).cwiseAbs().sum() / 2;
}

double operator_norm(const CMat &h) {
    Eigen::Index dim = h.rows();
    if (dim <= 1024) {
        CMat s = (h + h.adjoint()) / 2.0;
        return hermitian_eigenvalues(s).cwiseAbs().maxCoeff();
    }
    if (dim > 4096) {
        throw DenseLimitError("dense limit exceeded: operator norm beyond dimension 4096");
    }
    std::mt19937_64 rng(12345);
    std::normal_distribution<double> nd;
    CVec v(dim);
    for (Eigen::Index i = 0; i < dim; i++) {
        v(i) = Complex(nd(rng), nd(rng));
    }
    v.normalize();
    double est = 0;
    for (int it = 0; it < 100000; it++) {
        CVec w = h * (h * v);
        double next = std::sqrt(w.norm());
        if (next == 0) {
            return 0;
        }
        v = w / w.norm();
        if (std::abs(next - est) < 1e-9 * std::max(1.0, next) && it > 10) {
            return next;
        }
        est = next;
    }
    return est;
}

CVec random_pure_state(size_t num_qubits, std::mt19937_64 &rng) {
    require_vector_limit(num_qubits);
    std::normal_distribution<double> nd;
    CVec v(Eigen::Index{1} << num_qubits);
    for (Eigen::Index i = 0; i < v.size(); i++) {
        v(i) = Complex(nd(rng), nd(rng));
    }
    return v.normalized();
}

CMat random_unitary(size_t dim, std::mt19937_64 &rng) {
    std::normal_distribution<double> nd;
    CMat g(dim, dim);
    for (size_t i = 0; i < dim; i++) {
        for (size_t j = 0; j < dim; j++) {
            g(i, j) = Complex(nd(rng), nd(rng)) / std::sqrt(2.0);
        }
    }
    Eigen::HouseholderQR<CMat> qr(g);
    CMat q = qr.householderQ();
    CMat r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (size_t j = 0; j < dim; j++) {
        Complex d = r(j, j);
        q.col(j) *= std::abs(d) > 0 ? d / std::abs(d) : Complex(1, 0);
    }
    return q;
}

CMat kron(const CMat &a, const CMat &b) {
    CMat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); i++) {
        for (Eigen::Index j = 0; j < a.cols(); j++) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

}  // namespace codedepth
