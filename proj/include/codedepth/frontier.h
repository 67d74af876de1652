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

#ifndef CODEDEPTH_FRONTIER_H
#define CODEDEPTH_FRONTIER_H

#include <string>
#include <vector>

#include "codedepth/bounds.h"
#include "codedepth/hamiltonian.h"

namespace codedepth {

enum class FrontierStrategy { PauliProducts, RandomClifford, CoordinateDescent };

std::string strategy_name(FrontierStrategy s);
/// "pauli-products", "random-clifford", "coordinate-descent".
FrontierStrategy parse_strategy(const std::string &name);

/// Best state found at depth t. Depth counts two-qubit layers; the t = 0
/// family is products of single-qubit stabilizer states.
struct FrontierRecord {
    size_t t = 0;
    FrontierStrategy strategy = FrontierStrategy::PauliProducts;
    uint64_t seed = 0;
    EnergyReport best_energy;
    LayeredCircuit best_circuit;
    size_t evaluations = 0;
};

/// Sum-normalized energy of C|0^n> on the tableau backend.
EnergyReport circuit_energy(const LayeredCircuit &c, const StabilizerGroup &g);

/// Exhaustive branch and bound over the 6^n single-qubit stabilizer products
/// (n <= 20).
FrontierRecord best_product_state(const StabilizerGroup &g);

/// One record per t in [0, t_max] for the sampling strategies; pauli-products
/// yields the t = 0 record only. `budget` is the number of energy evaluations
/// per depth.
std::vector<FrontierRecord> frontier_search(
    const StabilizerGroup &g, size_t t_max, FrontierStrategy strategy, size_t budget, uint64_t seed);

/// For each t <= t_max the best record with depth <= t, ties broken by
/// (energy, seed, strategy).
std::vector<FrontierRecord> merge_frontier(const std::vector<FrontierRecord> &records, size_t t_max);

/// t,strategy,seed,total_energy,mean_energy
std::string frontier_to_csv(const std::vector<FrontierRecord> &records);
std::string frontier_to_json(const std::vector<FrontierRecord> &records);

/// Names of explicit-constant bounds (thm3_distance, cor1_warmup,
/// lem1_entropy, lem2_agsp, and thm2_rate when `include_rate`) that are
/// applicable at in.t and exceed it.
std::vector<std::string> consistency_violations(const BoundInputs &in, bool include_rate = false);

struct FrontierConsistency {
    size_t records_checked = 0;
    size_t applicable_bounds = 0;
    std::vector<std::string> violations;
};

/// Applies consistency_violations to every record, with eps the mean energy
/// and f, delta from the record's distance to the code.
FrontierConsistency frontier_consistency(const std::vector<FrontierRecord> &records, const StabilizerGroup &g);

}  // namespace codedepth

#endif
