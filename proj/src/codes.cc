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

#include "codedepth/codes.h"

#include <algorithm>
#include <json.hpp>

#include "codedepth/errors.h"
#include "codedepth/json_util.h"

namespace codedepth {

BitMatrix binary_matrix(const std::vector<std::vector<int>> &rows) {
    BitMatrix out;
    for (const auto &r : rows) {
        if (!out.empty() && r.size() != out[0].size()) {
            throw DimensionError("binary matrix rows have different lengths");
        }
        BitVector v(r.size());
        for (size_t c = 0; c < r.size(); c++) {
            v.set(c, r[c] & 1);
        }
        out.push_back(std::move(v));
    }
    return out;
}

size_t toric_horizontal_edge(size_t L, size_t x, size_t y) {
    return (y % L) * L + (x % L);
}

size_t toric_vertical_edge(size_t L, size_t x, size_t y) {
    return L * L + (y % L) * L + (x % L);
}

StabilizerGroup punctured_toric_code(size_t L, const std::vector<std::pair<size_t, size_t>> &punctures) {
    if (L < 2) {
        throw ParameterError("toric code needs L >= 2");
    }
    std::vector<bool> removed(L * L, false);
    for (auto [x, y] : punctures) {
        if (x >= L || y >= L) {
            throw ParameterError(
                "puncture (" + std::to_string(x) + "," + std::to_string(y) + ") is outside the " +
                std::to_string(L) + "x" + std::to_string(L) + " lattice");
        }
        if (removed[y * L + x]) {
            throw ParameterError("puncture (" + std::to_string(x) + "," + std::to_string(y) + ") listed twice");
        }
        removed[y * L + x] = true;
    }
    size_t n = 2 * L * L;
    std::vector<PauliOperator> checks;
    for (size_t y = 0; y < L; y++) {
        for (size_t x = 0; x < L; x++) {
            if (removed[y * L + x]) {
                continue;
            }
            PauliOperator p(n);
            for (size_t q : {toric_horizontal_edge(L, x, y), toric_horizontal_edge(L, x, y + 1),
                             toric_vertical_edge(L, x, y), toric_vertical_edge(L, x + 1, y)}) {
                p.zs.set(q, true);
            }
            checks.push_back(std::move(p));
        }
    }
    for (size_t y = 0; y < L; y++) {
        for (size_t x = 0; x < L; x++) {
            PauliOperator p(n);
            for (size_t q : {toric_horizontal_edge(L, x, y), toric_horizontal_edge(L, x + L - 1, y),
                             toric_vertical_edge(L, x, y), toric_vertical_edge(L, x, y + L - 1)}) {
                p.xs.set(q, true);
            }
            checks.push_back(std::move(p));
        }
    }
    return StabilizerGroup(n, std::move(checks));
}

StabilizerGroup toric_code(size_t L) {
    return punctured_toric_code(L, {});
}

CssCode hypergraph_product(const BitMatrix &h1, const BitMatrix &h2) {
    if (h1.empty() || h2.empty() || h1[0].size() == 0 || h2[0].size() == 0) {
        throw ParameterError("hypergraph product needs non-empty matrices");
    }
    size_t m1 = h1.size(), n1 = h1[0].size();
    size_t m2 = h2.size(), n2 = h2[0].size();
    CssCode c;
    c.n = n1 * n2 + m1 * m2;
    auto a = [&](size_t v1, size_t v2) { return v1 * n2 + v2; };
    auto b = [&](size_t c1, size_t c2) { return n1 * n2 + c1 * m2 + c2; };
    for (size_t c1 = 0; c1 < m1; c1++) {
        for (size_t v2 = 0; v2 < n2; v2++) {
            BitVector row(c.n);
            for (size_t v1 = 0; v1 < n1; v1++) {
                if (h1[c1].get(v1)) {
                    row.set(a(v1, v2), true);
                }
            }
            for (size_t c2 = 0; c2 < m2; c2++) {
                if (h2[c2].get(v2)) {
                    row.set(b(c1, c2), true);
                }
            }
            c.hx.push_back(std::move(row));
        }
    }
    for (size_t v1 = 0; v1 < n1; v1++) {
        for (size_t c2 = 0; c2 < m2; c2++) {
            BitVector row(c.n);
            for (size_t v2 = 0; v2 < n2; v2++) {
                if (h2[c2].get(v2)) {
                    row.set(a(v1, v2), true);
                }
            }
            for (size_t c1 = 0; c1 < m1; c1++) {
                if (h1[c1].get(v1)) {
                    row.set(b(c1, c2), true);
                }
            }
            c.hz.push_back(std::move(row));
        }
    }
    return c;
}

StabilizerGroup css_to_stabilizer(const CssCode &c) {
    for (size_t i = 0; i < c.hx.size(); i++) {
        for (size_t j = 0; j < c.hz.size(); j++) {
            if (c.hx[i].size() != c.n || c.hz[j].size() != c.n) {
                throw DimensionError("CSS rows must have n columns");
            }
            if (dot(c.hx[i], c.hz[j])) {
                throw ConstructionError(
                    "X row " + std::to_string(i) + " and Z row " + std::to_string(j) + " overlap oddly");
            }
        }
    }
    std::vector<PauliOperator> checks;
    for (const auto &r : c.hx) {
        if (r.any()) {
            PauliOperator p(c.n);
            p.xs = r;
            checks.push_back(std::move(p));
        }
    }
    for (const auto &r : c.hz) {
        if (r.any()) {
            PauliOperator p(c.n);
            p.zs = r;
            checks.push_back(std::move(p));
        }
    }
    return StabilizerGroup(c.n, std::move(checks));
}

std::string CodeSpec::str() const {
    return "[[" + std::to_string(n) + "," + std::to_string(k) + "," + d.str() + "]]";
}

CodeSpec code_parameters(const StabilizerGroup &g, size_t distance_cap) {
    CodeSpec s;
    s.n = g.num_qubits();
    s.k = g.num_logical();
    s.num_checks = g.num_checks();
    s.locality = g.locality();
    if (s.k == 0) {
        s.d.has_logicals = false;
    } else {
        s.d = min_weight_logical(g, std::max<size_t>(distance_cap, 1));
    }
    return s;
}

StabilizerGroup five_qubit_code() {
    std::vector<PauliOperator> checks;
    for (const char *s : {"XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"}) {
        checks.push_back(PauliOperator::from_string(s));
    }
    return StabilizerGroup(5, std::move(checks));
}

StabilizerGroup steane_code() {
    BitMatrix h = binary_matrix({{1, 0, 1, 0, 1, 0, 1}, {0, 1, 1, 0, 0, 1, 1}, {0, 0, 0, 1, 1, 1, 1}});
    return css_to_stabilizer(CssCode{7, h, h});
}

const std::vector<std::string> &builtin_code_names() {
    static const std::vector<std::string> names{"five_qubit", "steane7", "toric2", "toric3", "hgp_rep2", "hgp_rep3"};
    return names;
}

StabilizerGroup builtin_code(const std::string &name) {
    if (name == "five_qubit") {
        return five_qubit_code();
    }
    if (name == "steane7") {
        return steane_code();
    }
    if (name == "toric2") {
        return toric_code(2);
    }
    if (name == "toric3") {
        return toric_code(3);
    }
    if (name == "hgp_rep2") {
        BitMatrix h = binary_matrix({{1, 1}});
        return css_to_stabilizer(hypergraph_product(h, h));
    }
    if (name == "hgp_rep3") {
        BitMatrix h = binary_matrix({{1, 1, 0}, {0, 1, 1}});
        return css_to_stabilizer(hypergraph_product(h, h));
    }
    std::string msg = "unknown built-in code '" + name + "'; valid names:";
    for (const auto &n : builtin_code_names()) {
        msg += " " + n;
    }
    throw ParameterError(msg);
}

namespace {

BitMatrix rows_from_json(const nlohmann::json &j, size_t n, const char *what) {
    BitMatrix out;
    for (const auto &row : j) {
        BitVector v(n);
        for (const auto &c : row) {
            size_t col = c.get<size_t>();
            if (col >= n) {
                throw ParseError(std::string(what) + " column " + std::to_string(col) + " is out of range", 1, 1);
            }
            v.set(col, true);
        }
        out.push_back(std::move(v));
    }
    return out;
}

nlohmann::json rows_to_json(const BitMatrix &rows) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto &r : rows) {
        auto ones = r.ones();
        out.push_back(ones);
    }
    return out;
}

}  // namespace

StabilizerGroup parse_code_json(const std::string &text) {
    nlohmann::json j = parse_json_text(text);
    try {
        if (j.contains("css")) {
            const auto &css = j.at("css");
            size_t n = 0;
            if (j.contains("n")) {
                n = j.at("n").get<size_t>();
            } else {
                for (const char *key : {"hx", "hz"}) {
                    if (css.contains(key)) {
                        for (const auto &row : css.at(key)) {
                            for (const auto &c : row) {
                                n = std::max(n, c.get<size_t>() + 1);
                            }
                        }
                    }
                }
            }
            CssCode c;
            c.n = n;
            if (css.contains("hx")) {
                c.hx = rows_from_json(css.at("hx"), n, "hx");
            }
            if (css.contains("hz")) {
                c.hz = rows_from_json(css.at("hz"), n, "hz");
            }
            return css_to_stabilizer(c);
        }
        std::vector<PauliOperator> checks;
        size_t search_from = 0;
        for (const auto &s : j.at("checks")) {
            std::string str = s.get<std::string>();
            size_t at = text.find("\"" + str + "\"", search_from);
            try {
                checks.push_back(PauliOperator::from_string(str));
            } catch (const ParseError &e) {
                if (at == std::string::npos) {
                    throw;
                }
                auto [line, column] = line_column_at(text, at + e.column);
                throw ParseError(std::string("unexpected Pauli character in check \"") + str + "\"", line, column);
            }
            if (at != std::string::npos) {
                search_from = at + str.size();
            }
        }
        size_t n = j.contains("n") ? j.at("n").get<size_t>() : (checks.empty() ? 0 : checks[0].num_qubits());
        return StabilizerGroup(n, std::move(checks));
    } catch (const nlohmann::json::exception &e) {
        throw ParseError(std::string("invalid code file: ") + e.what(), 1, 1);
    }
}

std::string code_to_json(const StabilizerGroup &g) {
    nlohmann::json j;
    j["n"] = g.num_qubits();
    j["checks"] = nlohmann::json::array();
    for (const auto &c : g.generators()) {
        j["checks"].push_back(c.str());
    }
    return j.dump(2) + "\n";
}

std::string css_to_json(const CssCode &c) {
    nlohmann::json j;
    j["n"] = c.n;
    j["css"]["hx"] = rows_to_json(c.hx);
    j["css"]["hz"] = rows_to_json(c.hz);
    return j.dump(2) + "\n";
}

}  // namespace codedepth
