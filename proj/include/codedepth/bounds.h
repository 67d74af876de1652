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

#ifndef CODEDEPTH_BOUNDS_H
#define CODEDEPTH_BOUNDS_H

#include <optional>
#include <string>
#include <vector>

#include "codedepth/hamiltonian.h"
#include "codedepth/kls.h"
#include "codedepth/quantum_state.h"
#include "codedepth/stabilizer_group.h"

namespace codedepth {

/// Parameters for the closed-form depth bounds. Logs are base 2. `eps` is the
/// energy fraction: tr(H phi) <= eps * N for the sum-normalized Hamiltonian.
/// `m` defaults to n where a formula needs it.
struct BoundInputs {
    std::optional<double> n;
    std::optional<double> k;
    std::optional<double> d;
    std::optional<double> locality;
    std::optional<double> num_checks;
    std::optional<double> eps;
    std::optional<double> delta;
    std::optional<double> t;
    std::optional<double> f;
    std::optional<double> m;
    /// The unspecified constant of the rate bound, exposed as a slot.
    double c_l = 1;

    /// Throws ParameterError for eps outside (0,1), delta outside (0,1/2),
    /// f outside (0,1] or non-positive sizes.
    void validate() const;
};

/// A depth lower bound t >= value, in the rearranged form of its inequality.
struct BoundValue {
    std::optional<double> value;
    bool applicable = false;
    std::string expression;
    std::vector<std::string> flags;
    std::vector<std::string> missing;
};

struct DepthBoundReport {
    BoundValue thm1;
    BoundValue thm2_rate;
    BoundValue thm3_distance;
    BoundValue cor1_warmup;
    BoundValue lem1_entropy;
    BoundValue lem2_agsp;
    BoundValue lem4_lineardist;
    BoundValue cor2_amplified;

    std::vector<std::pair<std::string, const BoundValue *>> fields() const;
    std::string to_json() const;
    /// name,value,applicable
    std::string to_csv() const;
};

DepthBoundReport depth_lower_bounds(const BoundInputs &in);

/// One point of the k = n/2, d = sqrt(n), eps = n^-delta' scan.
struct RegimePoint {
    double n = 0;
    double bound = 0;
    /// (delta'/2) log n.
    double scaling = 0;
    double residual = 0;
    /// |residual| <= log log n + 1.
    bool within = false;
};

std::vector<RegimePoint> regime_scan(double delta_prime, size_t min_exponent = 10, size_t max_exponent = 20);

/// Fidelity f = ||(Pi (x) id) psi|| of a pure state with the code space and
/// the pure-state distance sqrt(1 - f^2).
struct CodeDistanceReport {
    double fidelity = 0;
    double fidelity_squared = 0;
    double trace_distance = 0;
};

/// Vector and pure tableau states. Tableau states use sequential projection.
CodeDistanceReport trace_distance_to_code(const QuantumState &state, const StabilizerGroup &g);

struct ZeroStateDistanceReport {
    double fidelity_squared = 0;
    double distance = 0;
    size_t d = 0;
    double threshold = 0;
    bool holds = false;
};

/// Distance of |0^n> to the code against d / (6n). Throws ParameterError when k = 0.
ZeroStateDistanceReport zero_state_distance_check(const StabilizerGroup &g);

struct AgspReport {
    size_t m = 0;
    size_t t = 0;
    size_t deg = 0;
    double norm_error = 0;
    double kls_error = 0;
    double kls_bound = 0;
    bool projector_holds = false;
    double fidelity_squared = 0;
    size_t d = 0;
    double overlap_rhs = 0;
    /// 2^t <= d/2.
    bool overlap_applicable = false;
    bool overlap_holds = false;
};

/// Parent Hamiltonian G = sum_j U |1><1|_j U^dagger of psi = U|0^m>, the
/// norm distance ||K_deg(G) - |psi><psi|||, and f^2 <= 2 exp(-d^2 / (2^{2t+10} m)).
/// The group acts on the m qubits of U.
AgspReport agsp_projector_check(const LayeredCircuit &u, const StabilizerGroup &g, size_t deg);

/// Operator Schmidt rank across `part_a` and the rest: singular values of the
/// realigned matrix above 1e-10 times the largest.
size_t schmidt_rank(const CMat &op, size_t num_qubits, const std::vector<size_t> &part_a);

/// Checks restricted to the qubits around a region. Terms are the violated
/// projectors (I - C_j)/2, rotated to U^dagger (.) U when a circuit is given.
struct TruncatedHamiltonian {
    size_t num_qubits = 0;
    size_t t = 0;
    size_t locality = 0;
    std::vector<size_t> region;
    /// Qubits sharing a rotated check with the region.
    std::vector<size_t> extended_region;
    CMat boundary;
    CMat inside;
    /// Terms outside the region plus id - Pi_c.
    CMat outside;
    size_t boundary_terms = 0;
    size_t num_terms = 0;

    CMat dense() const {
        return boundary + inside + outside;
    }
};

TruncatedHamiltonian truncated_hamiltonian(
    const StabilizerGroup &g, const std::vector<size_t> &region, const LayeredCircuit *rotation = nullptr);

struct SchmidtRankCheck {
    size_t boundary_rank = 0;
    /// 2^{2t} l^2 |R|.
    double boundary_bound = 0;
    std::vector<size_t> power_ranks;
    /// q^2 (2^{2t} l^2 |R|)^q, and 1 for q = 0.
    std::vector<double> power_bounds;
    size_t polynomial_rank = 0;
    /// deg^3 (2^{2t} l^2 |R|)^deg.
    double polynomial_bound = 0;
    bool holds = false;
};

/// Ranks of H_trunc^q for q <= deg and of a KLS polynomial of H_trunc.
SchmidtRankCheck truncated_schmidt_check(const TruncatedHamiltonian &h, size_t deg);

struct BestDistancePair {
    size_t w = 0;
    std::optional<size_t> d_prime;
    /// The search stopped at the cap; d' > searched_up_to.
    bool lower_bound_only = false;
    size_t searched_up_to = 0;
};

struct BestDistanceReport {
    std::vector<BestDistancePair> pairs;
    std::vector<LogicalPair> logicals;
    std::optional<size_t> best;
    /// Index of the pair maximizing d'/w.
    size_t best_ratio_pair = 0;
};

BestDistanceReport best_distance(const StabilizerGroup &g, size_t weight_cap = 8);

struct UncertaintyReport {
    double ex = 0;
    double ez = 0;
    bool holds = false;
};

/// <Xbar>^2 + <Zbar>^2 <= 1 + 1e-9 for a pure state.
UncertaintyReport uncertainty_check(const QuantumState &state, const LogicalPair &pair);

/// Each single-qubit marginal is pure to 1e-9.
bool is_product_state(const QuantumState &state);

struct SeparationReport {
    double distance = 0;
    double bound = 0;
    size_t d_prime = 0;
    size_t w = 0;
    bool holds = false;
};

/// Pure-state distance to the code against d'/(8w). Throws ParameterError for
/// a non-product state.
SeparationReport product_state_separation_check(
    const QuantumState &state, const StabilizerGroup &g, size_t weight_cap = 8);

/// K / (2^{t+4} w).
double claim3_threshold(size_t K, size_t t, size_t w);

struct RegionResult {
    std::vector<size_t> region;
    double distance = 0;
};

/// Regions by size then lexicographically, up to `size_cap` qubits. Returns
/// the first region whose marginal trace distance exceeds `threshold`, or,
/// without a threshold, the maximizer when it is above 1e-10.
std::optional<RegionResult> distinguishing_region(
    const QuantumState &psi, const QuantumState &theta, size_t size_cap, std::optional<double> threshold = {});

struct LightconeCountReport {
    size_t m = 0;
    size_t num_checks = 0;
    size_t depth = 0;
    /// |{j : SMA qubit m + i in L_j}| with L_j the lightcone of j under W^dagger.
    std::vector<size_t> membership;
    std::vector<double> check_energies;
    double lower = 0;
    double middle = 0;
    double upper = 0;
    bool holds = false;
};

/// Sandwich eps N / (m + N) <= E_j sum_{i in S_{L_j}} eps_i <= 2^{2 depth} eps N / (m + N)
/// over j in the m + N register.
LightconeCountReport lightcone_count_check(const LayeredCircuit &w, const std::vector<double> &check_energies, size_t m);

/// W = V U for a state with a provenance circuit U and the syndrome circuit V.
LightconeCountReport lightcone_count_check(const QuantumState &phi, const StabilizerGroup &g);

}  // namespace codedepth

#endif
