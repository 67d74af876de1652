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

#include "codedepth/frontier.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "codedepth/errors.h"
#include "codedepth/json_util.h"

namespace codedepth {

namespace {

// Axis/sign options in search order, with the single-qubit program preparing each.
struct ProductOption {
    char axis;
    bool negative;
    const char *program;
};
constexpr ProductOption kOptions[6] = {
    {'Z', false, "I@0"},
    {'X', false, "H@0"},
    {'Y', false, "H@0 S@0"},
    {'Z', true, "X@0"},
    {'X', true, "X@0 H@0"},
    {'Y', true, "X@0 H@0 S@0"},
};

struct CheckState {
    bool dead = false;
    bool parity = false;
    size_t remaining = 0;
};

class ProductSearch {
   public:
    explicit ProductSearch(const StabilizerGroup &g) : g_(g), n_(g.num_qubits()) {
        incident_.resize(n_);
        state_.resize(g.num_checks());
        for (size_t c = 0; c < g.num_checks(); c++) {
            for (size_t q : g[c].support().ones()) {
                incident_[q].emplace_back(c, g[c].letter(q));
            }
            state_[c].remaining = g[c].weight();
        }
        choice_.assign(n_, 0);
    }

    void run() {
        // Checks with empty support contribute a constant.
        double base = 0;
        for (size_t c = 0; c < g_.num_checks(); c++) {
            if (g_[c].weight() == 0) {
                base += g_[c].negative ? 1 : 0;
            }
        }
        dfs(0, base);
    }

    double best = std::numeric_limits<double>::infinity();
    std::vector<size_t> best_choice;
    size_t nodes = 0;

   private:
    void dfs(size_t q, double energy) {
        nodes++;
        if (energy >= best - 1e-12) {
            return;
        }
        if (q == n_) {
            best = energy;
            best_choice = choice_;
            return;
        }
        std::vector<CheckState> saved;
        saved.reserve(incident_[q].size());
        for (size_t o = 0; o < 6; o++) {
            const auto &opt = kOptions[o];
            double e = energy;
            saved.clear();
            for (auto [c, letter] : incident_[q]) {
                CheckState &s = state_[c];
                saved.push_back(s);
                s.remaining--;
                if (!s.dead) {
                    if (letter != opt.axis) {
                        s.dead = true;
                        e += 0.5;
                    } else {
                        s.parity ^= opt.negative;
                        if (s.remaining == 0 && (s.parity ^ g_[c].negative)) {
                            e += 1;
                        }
                    }
                }
            }
            choice_[q] = o;
            dfs(q + 1, e);
            for (size_t i = 0; i < incident_[q].size(); i++) {
                state_[incident_[q][i].first] = saved[i];
            }
        }
    }

    const StabilizerGroup &g_;
    size_t n_;
    std::vector<std::vector<std::pair<size_t, char>>> incident_;
    std::vector<CheckState> state_;
    std::vector<size_t> choice_;
};

LayeredCircuit product_circuit(size_t n, const std::vector<size_t> &choice) {
    LayeredCircuit c(n);
    std::vector<Gate> layer;
    for (size_t q = 0; q < n; q++) {
        layer.push_back(Gate::from_program(kOptions[choice[q]].program, {q}));
    }
    c.append_layer(std::move(layer));
    return c;
}

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

Gate random_gate(const std::vector<size_t> &qubits, std::mt19937_64 &rng) {
    const auto &words = single_qubit_clifford_words();
    std::uniform_int_distribution<size_t> pick_word(0, words.size() - 1);
    if (qubits.size() == 1) {
        return Gate::from_program(word_program(words[pick_word(rng)], 0), qubits);
    }
    std::uniform_int_distribution<int> pick_entangler(0, 2);
    std::string prog = word_program(words[pick_word(rng)], 0) + " " + word_program(words[pick_word(rng)], 1);
    int e = pick_entangler(rng);
    if (e == 1) {
        prog += " CX@0,1";
    } else if (e == 2) {
        prog += " CZ@0,1";
    }
    prog += " " + word_program(words[pick_word(rng)], 0) + " " + word_program(words[pick_word(rng)], 1);
    return Gate::from_program(prog, qubits);
}

/// Member of the depth-t family: a product layer at t = 0, random Clifford layers otherwise.
LayeredCircuit sample_family(size_t n, size_t t, std::mt19937_64 &rng) {
    if (t > 0) {
        return random_low_depth(n, t, GateFamily::Clifford, rng());
    }
    LayeredCircuit c(n);
    std::vector<Gate> layer;
    for (size_t q = 0; q < n; q++) {
        layer.push_back(random_gate({q}, rng));
    }
    c.append_layer(std::move(layer));
    return c;
}

EnergyReport energy_of(const LayeredCircuit &c, const CodeHamiltonian &h) {
    StabilizerState s = StabilizerState::zero_state(c.m);
    s.apply_circuit(c);
    return energy_report(QuantumState::from_tableau(s), h);
}

bool better(const FrontierRecord &a, const FrontierRecord &b) {
    if (a.best_energy.total != b.best_energy.total) {
        return a.best_energy.total < b.best_energy.total;
    }
    if (a.seed != b.seed) {
        return a.seed < b.seed;
    }
    return int(a.strategy) < int(b.strategy);
}

}  // namespace

std::string strategy_name(FrontierStrategy s) {
    switch (s) {
        case FrontierStrategy::PauliProducts:
            return "pauli-products";
        case FrontierStrategy::RandomClifford:
            return "random-clifford";
        case FrontierStrategy::CoordinateDescent:
            return "coordinate-descent";
    }
    return "";
}

FrontierStrategy parse_strategy(const std::string &name) {
    for (auto s : {FrontierStrategy::PauliProducts, FrontierStrategy::RandomClifford, FrontierStrategy::CoordinateDescent}) {
        if (strategy_name(s) == name) {
            return s;
        }
    }
    throw ParameterError("unknown strategy '" + name + "' (pauli-products, random-clifford, coordinate-descent)");
}

EnergyReport circuit_energy(const LayeredCircuit &c, const StabilizerGroup &g) {
    if (c.m != g.num_qubits()) {
        throw DimensionError("circuit and code act on different qubit counts");
    }
    return energy_of(c, build_code_hamiltonian(g));
}

FrontierRecord best_product_state(const StabilizerGroup &g) {
    if (g.num_qubits() > 20) {
        throw ParameterError("exhaustive product search is limited to 20 qubits");
    }
    ProductSearch search(g);
    search.run();
    FrontierRecord r;
    r.t = 0;
    r.strategy = FrontierStrategy::PauliProducts;
    r.best_circuit = product_circuit(g.num_qubits(), search.best_choice);
    r.best_energy = circuit_energy(r.best_circuit, g);
    r.evaluations = search.nodes;
    return r;
}

std::vector<FrontierRecord> frontier_search(
    const StabilizerGroup &g, size_t t_max, FrontierStrategy strategy, size_t budget, uint64_t seed) {
    if (budget < 1) {
        throw ParameterError("budget must be at least 1");
    }
    if (strategy == FrontierStrategy::PauliProducts) {
        auto r = best_product_state(g);
        r.seed = seed;
        return {r};
    }
    size_t n = g.num_qubits();
    auto h = build_code_hamiltonian(g);
    std::vector<FrontierRecord> out;
    for (size_t t = 0; t <= t_max; t++) {
        std::seed_seq seq{uint64_t(seed), uint64_t(t), uint64_t(strategy)};
        std::mt19937_64 rng(seq);
        FrontierRecord rec;
        rec.t = t;
        rec.strategy = strategy;
        rec.seed = seed;
        rec.best_circuit = sample_family(n, t, rng);
        rec.best_energy = energy_of(rec.best_circuit, h);
        rec.evaluations = 1;
        if (strategy == FrontierStrategy::RandomClifford) {
            while (rec.evaluations < budget) {
                auto c = sample_family(n, t, rng);
                auto e = energy_of(c, h);
                rec.evaluations++;
                if (e.total < rec.best_energy.total - 1e-12) {
                    rec.best_energy = e;
                    rec.best_circuit = std::move(c);
                }
            }
        } else {
            const size_t candidates = 16;
            while (rec.evaluations < budget) {
                for (size_t l = 0; l < rec.best_circuit.layers.size() && rec.evaluations < budget; l++) {
                    for (size_t gi = 0; gi < rec.best_circuit.layers[l].size() && rec.evaluations < budget; gi++) {
                        for (size_t k = 0; k < candidates && rec.evaluations < budget; k++) {
                            LayeredCircuit c = rec.best_circuit;
                            c.layers[l][gi] = random_gate(c.layers[l][gi].qubits, rng);
                            auto e = energy_of(c, h);
                            rec.evaluations++;
                            if (e.total < rec.best_energy.total - 1e-12) {
                                rec.best_energy = e;
                                rec.best_circuit = std::move(c);
                            }
                        }
                    }
                }
            }
        }
        out.push_back(std::move(rec));
    }
    return out;
}

std::vector<FrontierRecord> merge_frontier(const std::vector<FrontierRecord> &records, size_t t_max) {
    std::vector<FrontierRecord> out;
    for (size_t t = 0; t <= t_max; t++) {
        const FrontierRecord *best = nullptr;
        for (const auto &r : records) {
            if (r.t <= t && (!best || better(r, *best))) {
                best = &r;
            }
        }
        if (best) {
            FrontierRecord r = *best;
            r.t = t;
            out.push_back(std::move(r));
        }
    }
    return out;
}

std::string frontier_to_csv(const std::vector<FrontierRecord> &records) {
    std::ostringstream out;
    out.precision(17);
    out << "t,strategy,seed,total_energy,mean_energy\n";
    for (const auto &r : records) {
        out << r.t << "," << strategy_name(r.strategy) << "," << r.seed << "," << r.best_energy.total << ","
            << r.best_energy.mean << "\n";
    }
    return out.str();
}

std::string frontier_to_json(const std::vector<FrontierRecord> &records) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto &r : records) {
        nlohmann::json j;
        j["t"] = r.t;
        j["strategy"] = strategy_name(r.strategy);
        j["seed"] = r.seed;
        j["total_energy"] = r.best_energy.total;
        j["mean_energy"] = r.best_energy.mean;
        j["per_term"] = r.best_energy.per_term;
        j["evaluations"] = r.evaluations;
        j["circuit"] = nlohmann::json::parse(r.best_circuit.to_json());
        arr.push_back(j);
    }
    return dump_json(arr);
}

std::vector<std::string> consistency_violations(const BoundInputs &in, bool include_rate) {
    if (!in.t) {
        throw ParameterError("consistency needs a depth");
    }
    auto r = depth_lower_bounds(in);
    std::vector<std::pair<std::string, const BoundValue *>> checked = {
        {"thm3_distance", &r.thm3_distance},
        {"cor1_warmup", &r.cor1_warmup},
        {"lem1_entropy", &r.lem1_entropy},
        {"lem2_agsp", &r.lem2_agsp},
    };
    if (include_rate) {
        checked.emplace_back("thm2_rate", &r.thm2_rate);
    }
    std::vector<std::string> out;
    for (auto &[name, b] : checked) {
        if (b->applicable && b->value && *in.t < *b->value) {
            out.push_back(name);
        }
    }
    return out;
}

FrontierConsistency frontier_consistency(const std::vector<FrontierRecord> &records, const StabilizerGroup &g) {
    FrontierConsistency out;
    size_t n = g.num_qubits();
    auto dist = min_weight_logical(g, n);
    for (const auto &r : records) {
        out.records_checked++;
        BoundInputs in;
        in.n = double(n);
        in.k = double(g.num_logical());
        if (dist.distance) {
            in.d = double(*dist.distance);
        }
        in.locality = double(g.locality());
        in.t = double(r.t);
        double eps = r.best_energy.mean;
        if (eps > 0 && eps < 1) {
            in.eps = eps;
        }
        StabilizerState s = StabilizerState::zero_state(n);
        s.apply_circuit(r.best_circuit);
        auto code = trace_distance_to_code(QuantumState::from_tableau(s), g);
        if (code.fidelity > 0) {
            in.f = std::min(code.fidelity, 1.0);
        }
        if (code.trace_distance > 0 && code.trace_distance < 0.5) {
            in.delta = code.trace_distance;
        }
        auto report = depth_lower_bounds(in);
        for (auto &[name, b] : report.fields()) {
            out.applicable_bounds += b->applicable;
        }
        for (const auto &v : consistency_violations(in)) {
            out.violations.push_back("t=" + std::to_string(r.t) + " " + v);
        }
    }
    return out;
}

}  // namespace codedepth
