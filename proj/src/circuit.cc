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

#include "codedepth/circuit.h"

#include <algorithm>
#include <cmath>
#include <deque>
#include <json.hpp>
#include <random>
#include <set>
#include <sstream>

#include "codedepth/errors.h"
#include "codedepth/json_util.h"

namespace codedepth {

size_t named_gate_arity(const std::string &name) {
    static const std::set<std::string> one{"I", "H", "S", "SDG", "X", "Y", "Z"};
    static const std::set<std::string> two{"CX", "CY", "CZ", "SWAP"};
    if (one.count(name)) {
        return 1;
    }
    if (two.count(name)) {
        return 2;
    }
    throw ParameterError("unknown gate '" + name + "'");
}

CMat named_gate_matrix(const std::string &name) {
    const Complex i(0, 1);
    const double r = 1 / std::sqrt(2.0);
    CMat m;
    if (name == "I") {
        m = CMat::Identity(2, 2);
    } else if (name == "H") {
        m.resize(2, 2);
        m << r, r, r, -r;
    } else if (name == "S") {
        m.resize(2, 2);
        m << 1, 0, 0, i;
    } else if (name == "SDG") {
        m.resize(2, 2);
        m << 1, 0, 0, -i;
    } else if (name == "X") {
        m.resize(2, 2);
        m << 0, 1, 1, 0;
    } else if (name == "Y") {
        m.resize(2, 2);
        m << 0, -i, i, 0;
    } else if (name == "Z") {
        m.resize(2, 2);
        m << 1, 0, 0, -1;
    } else if (name == "CX" || name == "CY" || name == "CZ") {
        // Control is local bit 0; the target block is indices {b0=1} = {1, 3}.
        CMat t = named_gate_matrix(name.substr(1));
        m = CMat::Identity(4, 4);
        m(1, 1) = t(0, 0);
        m(1, 3) = t(0, 1);
        m(3, 1) = t(1, 0);
        m(3, 3) = t(1, 1);
    } else if (name == "SWAP") {
        m = CMat::Zero(4, 4);
        m(0, 0) = 1;
        m(1, 2) = 1;
        m(2, 1) = 1;
        m(3, 3) = 1;
    } else {
        throw ParameterError("unknown gate '" + name + "'");
    }
    return m;
}

Gate Gate::named(const std::string &name, std::vector<size_t> qubits) {
    if (named_gate_arity(name) != qubits.size()) {
        throw ParameterError("gate " + name + " expects " + std::to_string(named_gate_arity(name)) + " qubits");
    }
    Gate g;
    g.kind = Kind::Named;
    g.name = name;
    g.qubits = std::move(qubits);
    return g;
}

Gate Gate::from_program(const std::string &text, std::vector<size_t> qubits) {
    Gate g;
    g.kind = Kind::Program;
    g.qubits = std::move(qubits);
    if (g.qubits.empty() || g.qubits.size() > 2) {
        throw ParameterError("program gates act on one or two qubits");
    }
    std::stringstream ss(text);
    std::string tok;
    while (ss >> tok) {
        auto at = tok.find('@');
        if (at == std::string::npos) {
            throw ParameterError("program token '" + tok + "' lacks '@'");
        }
        GateOp op;
        op.name = tok.substr(0, at);
        std::stringstream ls(tok.substr(at + 1));
        std::string idx;
        while (std::getline(ls, idx, ',')) {
            size_t v = std::stoul(idx);
            if (v >= g.qubits.size()) {
                throw ParameterError("program token '" + tok + "' uses a local index out of range");
            }
            op.local.push_back(v);
        }
        if (named_gate_arity(op.name) != op.local.size()) {
            throw ParameterError("program token '" + tok + "' has the wrong arity");
        }
        g.program.push_back(std::move(op));
    }
    if (g.program.empty()) {
        throw ParameterError("empty gate program");
    }
    g.name = "PROGRAM";
    return g;
}

Gate Gate::dense(const CMat &matrix, std::vector<size_t> qubits) {
    size_t dim = size_t{1} << qubits.size();
    if (qubits.empty() || qubits.size() > 2 || (size_t)matrix.rows() != dim || (size_t)matrix.cols() != dim) {
        throw DimensionError("dense gate must be 2x2 on one qubit or 4x4 on two");
    }
    if ((matrix * matrix.adjoint() - CMat::Identity(dim, dim)).cwiseAbs().maxCoeff() > 1e-9) {
        throw ParameterError("dense gate is not unitary");
    }
    Gate g;
    g.kind = Kind::Dense;
    g.name = "DENSE";
    g.qubits = std::move(qubits);
    g.matrix = matrix;
    return g;
}

namespace {

/// Embeds a primitive acting on `local` into the gate's local space.
CMat embed_local(const CMat &u, const std::vector<size_t> &local, size_t arity) {
    if (arity == 1) {
        return u;
    }
    CMat out = CMat::Identity(4, 4);
    for (int c = 0; c < 4; c++) {
        CVec col = CVec::Zero(4);
        col(c) = 1;
        apply_local_unitary(col, u, local);
        out.col(c) = col;
    }
    return out;
}

std::string inverse_name(const std::string &name) {
    if (name == "S") {
        return "SDG";
    }
    if (name == "SDG") {
        return "S";
    }
    return name;
}

}  // namespace

CMat Gate::unitary() const {
    switch (kind) {
        case Kind::Named:
            return named_gate_matrix(name);
        case Kind::Dense:
            return matrix;
        case Kind::Program: {
            size_t dim = size_t{1} << qubits.size();
            CMat acc = CMat::Identity(dim, dim);
            for (const auto &op : program) {
                acc = embed_local(named_gate_matrix(op.name), op.local, qubits.size()) * acc;
            }
            return acc;
        }
    }
    return {};
}

Gate Gate::inverse() const {
    Gate g = *this;
    switch (kind) {
        case Kind::Named:
            g.name = inverse_name(name);
            break;
        case Kind::Dense:
            g.matrix = matrix.adjoint();
            break;
        case Kind::Program:
            std::reverse(g.program.begin(), g.program.end());
            for (auto &op : g.program) {
                op.name = inverse_name(op.name);
            }
            break;
    }
    return g;
}

std::string Gate::program_text() const {
    if (kind != Kind::Program) {
        return name;
    }
    std::string out;
    for (const auto &op : program) {
        if (!out.empty()) {
            out += " ";
        }
        out += op.name + "@";
        for (size_t j = 0; j < op.local.size(); j++) {
            out += (j ? "," : "") + std::to_string(op.local[j]);
        }
    }
    return out;
}

LayeredCircuit::LayeredCircuit(size_t m) : m(m) {
    for (size_t q = 0; q < m; q++) {
        code_qubits.push_back(q);
    }
}

LayeredCircuit::LayeredCircuit(size_t m, std::vector<size_t> code_qubits) : m(m), code_qubits(std::move(code_qubits)) {
    for (size_t q : this->code_qubits) {
        if (q >= m) {
            throw DimensionError("code qubit index out of range");
        }
    }
}

size_t LayeredCircuit::gate_count() const {
    size_t c = 0;
    for (const auto &l : layers) {
        c += l.size();
    }
    return c;
}

bool LayeredCircuit::is_clifford() const {
    for (const auto &l : layers) {
        for (const auto &g : l) {
            if (!g.is_clifford()) {
                return false;
            }
        }
    }
    return true;
}

void LayeredCircuit::append_layer(std::vector<Gate> layer) {
    std::vector<bool> used(m, false);
    for (const auto &g : layer) {
        for (size_t q : g.qubits) {
            if (q >= m) {
                throw DimensionError("gate qubit " + std::to_string(q) + " out of range for m=" + std::to_string(m));
            }
            if (used[q]) {
                throw ParameterError("layer gates overlap on qubit " + std::to_string(q));
            }
            used[q] = true;
        }
    }
    layers.push_back(std::move(layer));
}

void LayeredCircuit::append(const LayeredCircuit &other) {
    if (other.m != m) {
        throw DimensionError("appended circuit has a different qubit count");
    }
    for (const auto &l : other.layers) {
        layers.push_back(l);
    }
}

LayeredCircuit LayeredCircuit::inverse() const {
    LayeredCircuit out(m, code_qubits);
    for (auto it = layers.rbegin(); it != layers.rend(); ++it) {
        std::vector<Gate> layer;
        for (const auto &g : *it) {
            layer.push_back(g.inverse());
        }
        out.layers.push_back(std::move(layer));
    }
    return out;
}

std::string LayeredCircuit::to_json() const {
    nlohmann::json j;
    j["m"] = m;
    j["code_qubits"] = code_qubits;
    j["layers"] = nlohmann::json::array();
    for (const auto &layer : layers) {
        nlohmann::json jl = nlohmann::json::array();
        for (const auto &g : layer) {
            nlohmann::json jg;
            jg["qubits"] = g.qubits;
            if (g.kind == Gate::Kind::Named) {
                jg["gate"] = g.name;
            } else if (g.kind == Gate::Kind::Program) {
                jg["gate"]["program"] = g.program_text();
            } else {
                nlohmann::json entries = nlohmann::json::array();
                for (Eigen::Index r = 0; r < g.matrix.rows(); r++) {
                    for (Eigen::Index c = 0; c < g.matrix.cols(); c++) {
                        entries.push_back({g.matrix(r, c).real(), g.matrix(r, c).imag()});
                    }
                }
                jg["gate"]["dense"] = entries;
            }
            jl.push_back(jg);
        }
        j["layers"].push_back(jl);
    }
    return dump_json(j);
}

LayeredCircuit LayeredCircuit::from_json(const std::string &text) {
    nlohmann::json j = parse_json_text(text);
    size_t li = 0, gi = 0;
    try {
        LayeredCircuit c(j.at("m").get<size_t>());
        if (j.contains("code_qubits")) {
            c = LayeredCircuit(c.m, j.at("code_qubits").get<std::vector<size_t>>());
        }
        for (const auto &jl : j.at("layers")) {
            std::vector<Gate> layer;
            gi = 0;
            for (const auto &jg : jl) {
                auto qubits = jg.at("qubits").get<std::vector<size_t>>();
                const auto &spec = jg.at("gate");
                if (spec.is_string()) {
                    layer.push_back(Gate::named(spec.get<std::string>(), qubits));
                } else if (spec.contains("program")) {
                    layer.push_back(Gate::from_program(spec.at("program").get<std::string>(), qubits));
                } else {
                    const auto &entries = spec.at("dense");
                    size_t dim = (size_t)std::lround(std::sqrt((double)entries.size()));
                    if (dim * dim != entries.size()) {
                        throw ParameterError("dense entry count is not a square");
                    }
                    CMat u(dim, dim);
                    for (size_t k = 0; k < entries.size(); k++) {
                        u(k / dim, k % dim) = Complex(entries[k].at(0).get<double>(), entries[k].at(1).get<double>());
                    }
                    layer.push_back(Gate::dense(u, qubits));
                }
                gi++;
            }
            c.append_layer(std::move(layer));
            li++;
        }
        return c;
    } catch (const nlohmann::json::exception &e) {
        throw ParseError("layer " + std::to_string(li) + ", gate " + std::to_string(gi) + ": " + e.what(), 1, 1);
    } catch (const std::invalid_argument &e) {
        throw ParseError("layer " + std::to_string(li) + ", gate " + std::to_string(gi) + ": " + e.what(), 1, 1);
    }
}

std::vector<size_t> lightcone(const LayeredCircuit &u, const std::vector<size_t> &region) {
    std::vector<bool> in(u.m, false);
    for (size_t q : region) {
        if (q >= u.m) {
            throw DimensionError("region qubit out of range");
        }
        in[q] = true;
    }
    for (auto it = u.layers.rbegin(); it != u.layers.rend(); ++it) {
        for (const auto &g : *it) {
            bool touches = false;
            for (size_t q : g.qubits) {
                touches |= in[q];
            }
            if (touches) {
                for (size_t q : g.qubits) {
                    in[q] = true;
                }
            }
        }
    }
    std::vector<size_t> out;
    for (size_t q = 0; q < u.m; q++) {
        if (in[q]) {
            out.push_back(q);
        }
    }
    return out;
}

LayeredCircuit restrict_to_lightcone(const LayeredCircuit &u, const std::vector<size_t> &region) {
    std::vector<bool> in(u.m, false);
    for (size_t q : region) {
        if (q >= u.m) {
            throw DimensionError("region qubit out of range");
        }
        in[q] = true;
    }
    std::vector<std::vector<Gate>> kept(u.layers.size());
    for (size_t li = u.layers.size(); li-- > 0;) {
        for (const auto &g : u.layers[li]) {
            bool touches = false;
            for (size_t q : g.qubits) {
                touches |= in[q];
            }
            if (touches) {
                kept[li].push_back(g);
            }
        }
        for (const auto &g : kept[li]) {
            for (size_t q : g.qubits) {
                in[q] = true;
            }
        }
    }
    LayeredCircuit out(u.m, u.code_qubits);
    out.layers = std::move(kept);
    return out;
}

const std::vector<std::string> &single_qubit_clifford_words() {
    static const std::vector<std::string> words = [] {
        auto canonical = [](CMat u) {
            for (Eigen::Index k = 0; k < u.size(); k++) {
                if (std::abs(u(k)) > 1e-9) {
                    u /= u(k) / std::abs(u(k));
                    break;
                }
            }
            return u;
        };
        auto same = [](const CMat &a, const CMat &b) { return (a - b).cwiseAbs().maxCoeff() < 1e-9; };
        std::vector<std::string> out{""};
        std::vector<CMat> mats{CMat::Identity(2, 2)};
        std::deque<size_t> queue{0};
        while (!queue.empty()) {
            size_t cur = queue.front();
            queue.pop_front();
            for (const char *g : {"H", "S"}) {
                CMat next = canonical(named_gate_matrix(g) * mats[cur]);
                bool seen = false;
                for (const auto &m : mats) {
                    seen |= same(m, next);
                }
                if (!seen) {
                    mats.push_back(next);
                    out.push_back(out[cur] + g);
                    queue.push_back(out.size() - 1);
                }
            }
        }
        return out;
    }();
    return words;
}

namespace {

std::string word_program(const std::string &word, size_t local) {
    if (word.empty()) {
        return "I@" + std::to_string(local);
    }
    std::string out;
    for (char c : word) {
        if (!out.empty()) {
            out += " ";
        }
        out += std::string(1, c) + "@" + std::to_string(local);
    }
    return out;
}

}  // namespace

LayeredCircuit random_low_depth(size_t m, size_t t, GateFamily family, uint64_t seed) {
    std::mt19937_64 rng(seed);
    LayeredCircuit c(m);
    const auto &words = single_qubit_clifford_words();
    std::uniform_int_distribution<size_t> pick_word(0, words.size() - 1);
    std::uniform_int_distribution<int> pick_entangler(0, 2);
    for (size_t layer = 0; layer < t; layer++) {
        std::vector<size_t> order(m);
        for (size_t q = 0; q < m; q++) {
            order[q] = q;
        }
        std::shuffle(order.begin(), order.end(), rng);
        std::vector<Gate> gates;
        for (size_t i = 0; i + 1 < m; i += 2) {
            std::vector<size_t> qs{order[i], order[i + 1]};
            if (family == GateFamily::HaarDense) {
                gates.push_back(Gate::dense(random_unitary(4, rng), qs));
                continue;
            }
            std::string prog = word_program(words[pick_word(rng)], 0) + " " + word_program(words[pick_word(rng)], 1);
            int e = pick_entangler(rng);
            if (e == 1) {
                prog += " CX@0,1";
            } else if (e == 2) {
                prog += " CZ@0,1";
            }
            prog += " " + word_program(words[pick_word(rng)], 0) + " " + word_program(words[pick_word(rng)], 1);
            gates.push_back(Gate::from_program(prog, qs));
        }
        if (m % 2 == 1) {
            std::vector<size_t> qs{order[m - 1]};
            if (family == GateFamily::HaarDense) {
                gates.push_back(Gate::dense(random_unitary(2, rng), qs));
            } else {
                gates.push_back(Gate::from_program(word_program(words[pick_word(rng)], 0), qs));
            }
        }
        c.append_layer(std::move(gates));
    }
    return c;
}

}  // namespace codedepth
