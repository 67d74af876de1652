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

#ifndef CODEDEPTH_CODES_H
#define CODEDEPTH_CODES_H

#include <string>
#include <utility>
#include <vector>

#include "codedepth/gf2.h"
#include "codedepth/stabilizer_group.h"

namespace codedepth {

/// CSS code from two binary check matrices over the same n columns.
struct CssCode {
    size_t n = 0;
    BitMatrix hx;
    BitMatrix hz;
};

/// Binary matrix from 0/1 rows, e.g. {{1,1,0},{0,1,1}}.
BitMatrix binary_matrix(const std::vector<std::vector<int>> &rows);

/// Periodic L x L toric code. Plaquette Z checks come first, then star X
/// checks; all 2L^2 checks are kept.
StabilizerGroup toric_code(size_t L);
/// Toric code without the listed plaquette checks. Coordinates are (x, y).
StabilizerGroup punctured_toric_code(size_t L, const std::vector<std::pair<size_t, size_t>> &punctures);
/// Edge indexing used by the toric constructors.
size_t toric_horizontal_edge(size_t L, size_t x, size_t y);
size_t toric_vertical_edge(size_t L, size_t x, size_t y);

/// Tillich-Zemor product. Qubits are the n1*n2 block (v1*n2 + v2) followed by
/// the m1*m2 block (c1*m2 + c2).
CssCode hypergraph_product(const BitMatrix &h1, const BitMatrix &h2);
/// X rows become X-type checks followed by Z rows as Z-type checks. All-zero
/// rows are dropped.
StabilizerGroup css_to_stabilizer(const CssCode &c);

struct CodeSpec {
    size_t n = 0;
    size_t k = 0;
    DistanceResult d;
    size_t locality = 0;
    size_t num_checks = 0;

    std::string str() const;
};

CodeSpec code_parameters(const StabilizerGroup &g, size_t distance_cap);

StabilizerGroup five_qubit_code();
StabilizerGroup steane_code();

/// five_qubit, steane7, toric2, toric3, hgp_rep2, hgp_rep3.
const std::vector<std::string> &builtin_code_names();
/// Throws ParameterError listing the valid names.
StabilizerGroup builtin_code(const std::string &name);

/// Code file text: {"n": 5, "checks": [...]} or {"css": {"hx": [[cols]...], "hz": [...]}, "n": 7}.
StabilizerGroup parse_code_json(const std::string &text);
std::string code_to_json(const StabilizerGroup &g);
std::string css_to_json(const CssCode &c);

}  // namespace codedepth

#endif
