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

#include "codedepth/quantum_state.h"

#include <bit>

#include "codedepth/errors.h"

namespace codedepth {

namespace {

std::vector<size_t> all_qubits(size_t m) {
    std::vector<size_t> q(m);
    for (size_t i = 0; i < m; i++) {
        q[i] = i;
    }
    return q;
}

size_t log2_dim(Eigen::Index dim) {
    if (dim <= 0 || (dim & (dim - 1)) != 0) {
        throw DimensionError("state dimension is not a power of two");
    }
    return (size_t)std::countr_zero((uint64_t)dim);
}

}  // namespace

QuantumState QuantumState::from_vector(CVec psi) {
    QuantumState s;
    s.m = log2_dim(psi.size());
    require_vector_limit(s.m);
    s.data = std::move(psi);
    s.code_qubits = all_qubits(s.m);
    return s;
}

QuantumState QuantumState::from_density(CMat rho) {
    QuantumState s;
    if (rho.rows() != rho.cols()) {
        throw DimensionError("density matrix must be square");
    }
    s.m = log2_dim(rho.rows());
    require_density_limit(s.m);
    s.data = std::move(rho);
    s.code_qubits = all_qubits(s.m);
    return s;
}

QuantumState QuantumState::from_tableau(StabilizerState t) {
    QuantumState s;
    s.m = t.num_qubits();
    s.data = std::move(t);
    s.code_qubits = all_qubits(s.m);
    return s;
}

QuantumState QuantumState::zero(size_t m, Backend backend) {
    switch (backend) {
        case Backend::Vector:
            return from_vector(basis_vector(m, 0));
        case Backend::Density: {
            require_density_limit(m);
            CMat rho = CMat::Zero(size_t{1} << m, size_t{1} << m);
            rho(0, 0) = 1;
            return from_density(std::move(rho));
        }
        case Backend::Tableau:
            return from_tableau(StabilizerState::zero_state(m));
    }
    return {};
}

QuantumState QuantumState::maximally_mixed(size_t m, Backend backend) {
    switch (backend) {
        case Backend::Vector:
            throw BackendError("the maximally mixed state has no state vector");
        case Backend::Density: {
            require_density_limit(m);
            size_t dim = size_t{1} << m;
            return from_density(CMat::Identity(dim, dim) / (double)dim);
        }
        case Backend::Tableau:
            return from_tableau(StabilizerState::maximally_mixed(m));
    }
    return {};
}

QuantumState QuantumState::prepared(const LayeredCircuit &u, Backend backend) {
    QuantumState s = apply_circuit(u, zero(u.m, backend));
    s.code_qubits = u.code_qubits;
    s.provenance = u;
    return s;
}

Backend QuantumState::backend() const {
    if (std::holds_alternative<CVec>(data)) {
        return Backend::Vector;
    }
    if (std::holds_alternative<CMat>(data)) {
        return Backend::Density;
    }
    return Backend::Tableau;
}

void QuantumState::validate() const {
    if (auto v = std::get_if<CVec>(&data)) {
        if (std::abs(v->norm() - 1) > 1e-12) {
            throw ParameterError("state vector is not normalized");
        }
    } else if (auto r = std::get_if<CMat>(&data)) {
        if ((*r - r->adjoint()).cwiseAbs().maxCoeff() > 1e-10) {
            throw ParameterError("density matrix is not Hermitian");
        }
        if (std::abs(r->trace() - Complex(1, 0)) > 1e-10) {
            throw ParameterError("density matrix does not have unit trace");
        }
        if (hermitian_eigenvalues(*r).minCoeff() < -1e-10) {
            throw ParameterError("density matrix is not positive semidefinite");
        }
    }
}

double QuantumState::expectation(const PauliOperator &p) const {
    if (auto v = std::get_if<CVec>(&data)) {
        return pauli_expectation(p, *v);
    }
    if (auto r = std::get_if<CMat>(&data)) {
        return pauli_expectation(p, *r);
    }
    return std::get<StabilizerState>(data).expectation(p);
}

CMat QuantumState::density() const {
    require_density_limit(m);
    if (auto v = std::get_if<CVec>(&data)) {
        return pure_density(*v);
    }
    if (auto r = std::get_if<CMat>(&data)) {
        return *r;
    }
    return std::get<StabilizerState>(data).to_density();
}

CVec QuantumState::vector() const {
    if (auto v = std::get_if<CVec>(&data)) {
        return *v;
    }
    if (std::holds_alternative<CMat>(data)) {
        throw BackendError("density-matrix state has no state vector");
    }
    return std::get<StabilizerState>(data).to_vector();
}

std::optional<size_t> QuantumState::depth_upper_bound() const {
    if (provenance.has_value()) {
        return provenance->depth();
    }
    return std::nullopt;
}

QuantumState apply_circuit(const LayeredCircuit &u, const QuantumState &state) {
    if (u.m != state.m) {
        throw DimensionError("circuit and state qubit counts differ");
    }
    QuantumState out = state;
    if (auto v = std::get_if<CVec>(&out.data)) {
        for (const auto &layer : u.layers) {
            for (const auto &g : layer) {
                apply_local_unitary(*v, g.unitary(), g.qubits);
            }
        }
    } else if (auto r = std::get_if<CMat>(&out.data)) {
        for (const auto &layer : u.layers) {
            for (const auto &g : layer) {
                conjugate_local_unitary(*r, g.unitary(), g.qubits);
            }
        }
    } else {
        std::get<StabilizerState>(out.data).apply_circuit(u);
    }
    if (out.provenance.has_value()) {
        out.provenance->append(u);
    }
    return out;
}

CMat reduced_density(const QuantumState &state, const std::vector<size_t> &region) {
    if (auto v = std::get_if<CVec>(&state.data)) {
        return partial_trace(*v, state.m, region);
    }
    if (auto r = std::get_if<CMat>(&state.data)) {
        return partial_trace(*r, state.m, region);
    }
    require_marginal_limit(region.size());
    return std::get<StabilizerState>(state.data).marginal(region).to_density();
}

CMat extend_with_mixed(const CMat &rho_region, size_t m, const std::vector<size_t> &region) {
    require_density_limit(m);
    size_t dim = size_t{1} << m;
    std::vector<uint64_t> a_of(dim);
    uint64_t region_mask = 0;
    for (size_t q : region) {
        region_mask |= uint64_t{1} << q;
    }
    for (uint64_t i = 0; i < dim; i++) {
        uint64_t a = 0;
        for (size_t j = 0; j < region.size(); j++) {
            a |= ((i >> region[j]) & 1) << j;
        }
        a_of[i] = a;
    }
    double scale = std::ldexp(1.0, -(int)(m - region.size()));
    CMat out = CMat::Zero(dim, dim);
    for (uint64_t i = 0; i < dim; i++) {
        for (uint64_t j = 0; j < dim; j++) {
            if (((i ^ j) & ~region_mask) == 0) {
                out(i, j) = rho_region(a_of[i], a_of[j]) * scale;
            }
        }
    }
    return out;
}

SubstitutionReport marginal_substitution_check(
    const LayeredCircuit &u, const QuantumState &state, const std::vector<size_t> &region, double tol) {
    std::vector<size_t> cone = lightcone(u, region);
    QuantumState direct = apply_circuit(u, state);
    CMat lhs = reduced_density(direct, region);
    CMat rho_cone = reduced_density(state, cone);
    QuantumState substituted = QuantumState::from_density(extend_with_mixed(rho_cone, state.m, cone));
    CMat rhs = reduced_density(apply_circuit(u, substituted), region);
    SubstitutionReport r;
    r.deviation = (lhs - rhs).cwiseAbs().maxCoeff();
    r.holds = r.deviation <= tol;
    return r;
}

}  // namespace codedepth
