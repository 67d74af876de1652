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

#ifndef CODEDEPTH_ENTROPY_H
#define CODEDEPTH_ENTROPY_H

#include <map>
#include <string>
#include <vector>

#include "codedepth/syndrome.h"

namespace codedepth {

/// Average over the 4^k conjugations by Xbar^a Zbar^b. Density and vector
/// states take the dense path (pair by pair); tableau states drop the
/// generators that anti-commute with each Xbar_j and Zbar_j.
QuantumState logical_depolarize(const QuantumState &state, const std::vector<LogicalPair> &pairs);

/// Exact entropy of a stabilizer mixture: qubits minus independent generators.
size_t stabilizer_entropy(const QuantumState &state);

/// Entropy in bits on whichever backend the state uses.
double state_entropy(const QuantumState &state);

/// Whether D_s is nonzero: s has even parity on every product of checks equal to I.
bool syndrome_realizable(const StabilizerGroup &g, const BitVector &s);

struct EncodedBranch {
    double probability = 0;
    QuantumState mu;
};

/// Theta = sum_s p_s mu_s (x) |s><s| with mu_s = E(D_s phi D_s / p_s).
struct EncodedMixedState {
    std::map<std::string, EncodedBranch> branches;
    size_t m = 0;
    size_t num_checks = 0;
    size_t k = 0;

    /// H({p_s}) + sum_s p_s S(mu_s).
    double entropy() const;
    /// Dense Theta on the m + N register; SMA qubit i is m + i.
    CMat density() const;
};

EncodedMixedState encode_branches(const DecoheredState &psi, const std::vector<LogicalPair> &pairs, size_t num_checks);
EncodedMixedState build_theta(const QuantumState &phi, const StabilizerGroup &g);

/// Largest entry-wise difference between rho_T over logical basis states and
/// random code states. No precondition on |T|.
double code_state_marginal_spread(const StabilizerGroup &g, const std::vector<size_t> &region, size_t samples, uint64_t seed);

struct MarginalInvarianceReport {
    double code_state_spread = 0;
    double logical_conjugation_deviation = 0;
    double depolarizer_deviation = 0;
    bool code_states_agree = false;
    bool logical_conjugation_preserves = false;
    bool depolarizer_preserves = false;

    bool all() const {
        return code_states_agree && logical_conjugation_preserves && depolarizer_preserves;
    }
};

/// (a) code states share rho_T; (b) P rho P has the marginal of rho for D_s
/// states and logical P; (c) E(rho)_T = rho_T for D_s states. Requires |T| < d.
MarginalInvarianceReport marginal_invariance_suite(
    const StabilizerGroup &g, const std::vector<size_t> &region, size_t samples = 4, uint64_t seed = 0);

/// Code states purified by `ancillas` extra qubits (ancilla j is qubit n + j):
/// largest deviation between rho and (E (x) id)(rho) on code_region plus all
/// ancillas. Requires |code_region| < d.
double extended_invariance_deviation(
    const StabilizerGroup &g, const std::vector<size_t> &code_region, size_t ancillas, uint64_t seed);

struct ZeroExpectationReport {
    size_t samples = 0;
    double max_anticommuting_expectation = 0;
    double max_syndrome_deviation = 0;
    bool holds = false;
};

/// Random D_s states: every Pauli anti-commuting with a check has zero
/// expectation, and logical conjugates stay in D_s.
ZeroExpectationReport zero_expectation_suite(
    const StabilizerGroup &g, const BitVector &s, size_t samples = 100, uint64_t seed = 0);

struct EntropyAudit {
    size_t k = 0;
    double s_theta = 0;
    double per_qubit_sum = 0;
    bool holds = false;

    std::string to_json() const;
};

/// k <= S(Theta) <= sum_j S(tr_{-j}(W^dagger Theta W)) for W on the m + N register.
EntropyAudit entropy_audit(const EncodedMixedState &theta, const LayeredCircuit &w);

}  // namespace codedepth

#endif
