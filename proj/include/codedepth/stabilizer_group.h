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

#ifndef CODEDEPTH_STABILIZER_GROUP_H
#define CODEDEPTH_STABILIZER_GROUP_H

#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "codedepth/gf2.h"
#include "codedepth/pauli.h"

namespace codedepth {

/// A commuting list of Hermitian checks C_0..C_{N-1} on n qubits. Dependent
/// checks are kept; -I must not be generated.
class StabilizerGroup {
   public:
    StabilizerGroup() = default;
    /// Validates commutation and that no product of checks equals -I.
    StabilizerGroup(size_t num_qubits, std::vector<PauliOperator> generators);

    size_t num_qubits() const {
        return num_qubits_;
    }
    size_t num_checks() const {
        return generators_.size();
    }
    const std::vector<PauliOperator> &generators() const {
        return generators_;
    }
    const PauliOperator &operator[](size_t i) const {
        return generators_[i];
    }
    size_t rank() const {
        return echelon_->rank();
    }
    size_t num_logical() const {
        return num_qubits_ - rank();
    }
    /// Echelon form of the generator matrix in [x | z] coordinates.
    const RowEchelon &echelon() const {
        return *echelon_;
    }

    /// The sign s with s * |P| in the group (|P| drops P's sign), or nullopt.
    std::optional<int> group_sign(const PauliOperator &p) const;
    bool contains(const PauliOperator &p) const {
        auto s = group_sign(p);
        return s.has_value() && *s == p.sign();
    }
    /// Bit i set iff check i anti-commutes with p.
    BitVector syndrome(const PauliOperator &p) const;
    /// max(check weight, per-qubit check count).
    size_t locality() const;

   private:
    size_t num_qubits_ = 0;
    std::vector<PauliOperator> generators_;
    std::shared_ptr<const RowEchelon> echelon_ = std::make_shared<RowEchelon>(BitMatrix{}, 0);
};

struct LogicalPair {
    PauliOperator xbar;
    PauliOperator zbar;
};

size_t symplectic_rank(const StabilizerGroup &g);

/// k symplectically paired logical operators from Gram-Schmidt over the
/// normalizer modulo the group. For CSS inputs X-bar is X-type and Z-bar is
/// Z-type. When `reduce_weight` is set each operator is replaced by the lowest
/// weight element of its stabilizer coset (groups of rank <= 22 only).
std::vector<LogicalPair> logical_pairs(const StabilizerGroup &g, bool reduce_weight = true);

struct DistanceResult {
    bool has_logicals = true;
    /// Set when a logical of weight <= cap exists.
    std::optional<size_t> distance;
    /// Largest weight exhaustively ruled out; distance > searched_up_to when unset.
    size_t searched_up_to = 0;
    std::optional<PauliOperator> witness;

    std::string str() const;
};

/// Exhaustive search by increasing weight for a Pauli that commutes with every
/// check and lies outside the group. An optional filter restricts the logicals
/// that count. Ties at the minimal weight go to the smallest operator.
DistanceResult min_weight_logical(
    const StabilizerGroup &g,
    size_t weight_cap,
    const std::function<bool(const PauliOperator &)> &filter = nullptr);

struct KlResult {
    /// E is a nontrivial logical, so Pi E Pi is not proportional to Pi.
    bool violation = false;
    int eta = 0;
};

/// eta_E with Pi E Pi = eta_E Pi, or a violation when E is a logical.
KlResult kl_constant(const PauliOperator &e, const StabilizerGroup &g);

/// Product of the checks marked in `combo`, in index order.
PauliOperator product_of_checks(const StabilizerGroup &g, const BitVector &combo);

}  // namespace codedepth

#endif
