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

#include "cli.h"

#include <CLI11.hpp>
#include <cmath>
#include <algorithm>
#include <cstdio>
#include <fstream>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>

#include "codedepth/bounds.h"
#include "codedepth/codes.h"
#include "codedepth/entropy.h"
#include "codedepth/errors.h"
#include "codedepth/frontier.h"
#include "codedepth/json_util.h"
#include "codedepth/kls.h"
#include "codedepth/syndrome.h"

namespace codedepth {

namespace {

using nlohmann::json;

/// A check whose inequality came out false.
struct CheckFailure : std::runtime_error {
    std::string output;
    CheckFailure(std::string output) : std::runtime_error("check failed"), output(std::move(output)) {
    }
};

struct RunConfig {
    std::string builtin;
    std::string code_file;
    uint64_t seed = 0;
    std::string format = "json";
    std::string output;
    std::string dense_limits;
    // State selection for commands acting on a state.
    std::string state = "zero";
    size_t depth = 1;
};

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParameterError("cannot read " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_atomically(const std::string &path, const std::string &text) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw ParameterError("cannot write " + path);
        }
        out << text;
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        std::remove(tmp.c_str());
        throw ParameterError("cannot write " + path);
    }
}

void add_format_options(CLI::App *sub, RunConfig &cfg) {
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--output", cfg.output, "Write the report to this path");
}

void add_code_options(CLI::App *sub, RunConfig &cfg) {
    auto *b = sub->add_option("--builtin", cfg.builtin, "Built-in code name");
    auto *c = sub->add_option("--code", cfg.code_file, "Code JSON file");
    b->excludes(c);
    add_format_options(sub, cfg);
}

void add_state_options(CLI::App *sub, RunConfig &cfg) {
    sub->add_option("--state", cfg.state, "zero | code | random")->check(CLI::IsMember({"zero", "code", "random"}));
    sub->add_option("--depth", cfg.depth, "Depth of the random Clifford state");
    sub->add_option("--seed", cfg.seed, "Random seed (default 0)");
}

StabilizerGroup load_code(const RunConfig &cfg) {
    if (!cfg.code_file.empty()) {
        return parse_code_json(read_file(cfg.code_file));
    }
    if (cfg.builtin.empty()) {
        throw ParameterError("one of --builtin or --code is required");
    }
    return builtin_code(cfg.builtin);
}

bool randomized_state(const RunConfig &cfg) {
    return cfg.state == "random";
}

QuantumState load_state(const RunConfig &cfg, const StabilizerGroup &g) {
    size_t n = g.num_qubits();
    if (cfg.state == "code") {
        return QuantumState::from_tableau(StabilizerState::logical_basis_state(g, 0));
    }
    if (cfg.state == "random") {
        return QuantumState::prepared(random_low_depth(n, cfg.depth, GateFamily::Clifford, cfg.seed), Backend::Tableau);
    }
    return QuantumState::prepared(LayeredCircuit(n), Backend::Tableau);
}

std::string number_csv(double v) {
    std::ostringstream s;
    s.precision(17);
    s << v;
    return s.str();
}

std::vector<size_t> parse_index_list(const std::string &text) {
    std::vector<size_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) {
            continue;
        }
        size_t pos = 0;
        unsigned long v;
        try {
            v = std::stoul(item, &pos);
        } catch (const std::exception &) {
            throw ParameterError("bad index '" + item + "'");
        }
        if (pos != item.size()) {
            throw ParameterError("bad index '" + item + "'");
        }
        out.push_back(v);
    }
    return out;
}

// ---------------------------------------------------------------- commands

std::string cmd_code_params(const RunConfig &cfg, size_t cap) {
    auto g = load_code(cfg);
    auto spec = code_parameters(g, cap);
    if (cfg.format == "csv") {
        std::string d = spec.d.distance ? std::to_string(*spec.d.distance) : "";
        return "n,k,d,locality,num_checks\n" + std::to_string(spec.n) + "," + std::to_string(spec.k) + "," + d + "," +
               std::to_string(spec.locality) + "," + std::to_string(spec.num_checks) + "\n";
    }
    json j;
    j["n"] = spec.n;
    j["k"] = spec.k;
    j["d"] = spec.d.distance ? json(*spec.d.distance) : json(nullptr);
    j["d_searched_up_to"] = spec.d.searched_up_to;
    j["locality"] = spec.locality;
    j["num_checks"] = spec.num_checks;
    j["label"] = spec.str();
    return dump_json(j);
}

std::string cmd_ham_energy(const RunConfig &cfg) {
    auto g = load_code(cfg);
    auto rep = energy_report(load_state(cfg, g), build_code_hamiltonian(g));
    return cfg.format == "csv" ? rep.to_csv() : rep.to_json();
}

std::string cmd_circuit_lightcone(const RunConfig &cfg, const std::string &circuit_file, const std::string &region_text) {
    auto c = LayeredCircuit::from_json(read_file(circuit_file));
    auto region = parse_index_list(region_text);
    for (size_t q : region) {
        if (q >= c.m) {
            throw ParameterError("region qubit " + std::to_string(q) + " is outside the circuit");
        }
    }
    auto cone = lightcone(c, region);
    std::sort(cone.begin(), cone.end());
    if (cfg.format == "csv") {
        std::string out = "qubit\n";
        for (size_t q : cone) {
            out += std::to_string(q) + "\n";
        }
        return out;
    }
    json j;
    j["depth"] = c.depth();
    j["region"] = region;
    j["lightcone"] = cone;
    j["size"] = cone.size();
    j["bound"] = double(region.size()) * std::ldexp(1.0, int(c.depth()));
    return dump_json(j);
}

std::string cmd_syndrome_build(const RunConfig &cfg) {
    auto g = load_code(cfg);
    auto coloring = greedy_coloring(overlap_graph(g));
    SyndromeCircuit sc;
    try {
        sc = build_syndrome_circuit(g, coloring);
    } catch (const ConstructionError &e) {
        throw CheckFailure(std::string("{\"error\": \"") + e.what() + "\"}\n");
    }
    if (cfg.format == "csv") {
        return "locality,depth,depth_bound,construction_bound,colors\n" + std::to_string(sc.locality) + "," +
               std::to_string(sc.depth()) + "," + std::to_string(sc.depth_bound) + "," +
               std::to_string(sc.construction_bound) + "," + std::to_string(coloring.color_count) + "\n";
    }
    json j;
    j["locality"] = sc.locality;
    j["depth"] = sc.depth();
    j["depth_bound"] = sc.depth_bound;
    j["construction_bound"] = sc.construction_bound;
    j["colors"] = coloring.color_count;
    j["num_ancillas"] = g.num_checks();
    j["circuit"] = json::parse(sc.circuit.to_json());
    return dump_json(j);
}

std::string cmd_syndrome_decohere(const RunConfig &cfg) {
    auto g = load_code(cfg);
    auto psi = decohere(load_state(cfg, g), g);
    if (cfg.format == "csv") {
        std::string out = "syndrome,probability\n";
        for (const auto &[s, b] : psi.branches) {
            out += s + "," + number_csv(b.probability) + "\n";
        }
        return out;
    }
    return psi.to_json();
}

std::string cmd_entropy_audit(const RunConfig &cfg) {
    auto g = load_code(cfg);
    auto phi = load_state(cfg, g);
    auto theta = build_theta(phi, g);
    size_t m = phi.m;
    auto v = build_syndrome_circuit(g, greedy_coloring(overlap_graph(g)), m, phi.code_qubits);
    LayeredCircuit w = widen_circuit(phi.provenance ? *phi.provenance : LayeredCircuit(m), m + g.num_checks());
    w.append(v.circuit);
    auto audit = entropy_audit(theta, w);
    std::string text = cfg.format == "csv" ? "k,S_Theta,per_qubit_sum,holds\n" + std::to_string(audit.k) + "," +
                                                 number_csv(audit.s_theta) + "," + number_csv(audit.per_qubit_sum) +
                                                 "," + (audit.holds ? "true" : "false") + "\n"
                                           : audit.to_json();
    if (!audit.holds) {
        throw CheckFailure(text);
    }
    return text;
}

struct EvalOptions {
    std::optional<double> n, k, d, l, eps, delta, t, f, m;
    double c_l = 1;
    std::optional<double> regime;
};

std::string cmd_bounds_eval(const RunConfig &cfg, const EvalOptions &o) {
    if (o.regime) {
        auto pts = regime_scan(*o.regime);
        if (cfg.format == "csv") {
            std::string out = "n,bound,scaling,residual,within\n";
            for (const auto &p : pts) {
                out += number_csv(p.n) + "," + number_csv(p.bound) + "," + number_csv(p.scaling) + "," +
                       number_csv(p.residual) + "," + (p.within ? "true" : "false") + "\n";
            }
            return out;
        }
        json arr = json::array();
        for (const auto &p : pts) {
            arr.push_back({{"n", p.n}, {"bound", p.bound}, {"scaling", p.scaling}, {"residual", p.residual}, {"within", p.within}});
        }
        return dump_json({{"delta_prime", *o.regime}, {"points", arr}});
    }
    BoundInputs in;
    in.n = o.n;
    in.k = o.k;
    in.d = o.d;
    in.locality = o.l;
    in.eps = o.eps;
    in.delta = o.delta;
    in.t = o.t;
    in.f = o.f;
    in.m = o.m;
    in.c_l = o.c_l;
    auto r = depth_lower_bounds(in);
    return cfg.format == "csv" ? r.to_csv() : r.to_json();
}

// ---------------------------------------------------------------- suite

struct SuiteResult {
    bool holds = false;
    std::string detail;
};

using SuiteCheck = std::function<SuiteResult(uint64_t seed)>;

std::string fmt(double v) {
    std::ostringstream s;
    s.precision(6);
    s << v;
    return s.str();
}

std::vector<std::pair<std::string, SuiteCheck>> suite_checks() {
    std::vector<std::pair<std::string, SuiteCheck>> checks;
    checks.emplace_back("local_indistinguishability", [](uint64_t seed) {
        size_t regions = 0;
        for (const auto &name : {"five_qubit", "toric2"}) {
            auto g = builtin_code(name);
            size_t d = *min_weight_logical(g, g.num_qubits()).distance;
            size_t n = g.num_qubits();
            for (size_t a = 0; a < n; a++) {
                std::vector<std::vector<size_t>> rs = {{a}};
                if (d > 2) {
                    for (size_t b = a + 1; b < n; b++) {
                        rs.push_back({a, b});
                    }
                }
                for (const auto &r : rs) {
                    if (!marginal_invariance_suite(g, r, 2, seed).all()) {
                        return SuiteResult{false, std::string(name) + " region failed"};
                    }
                    regions++;
                }
            }
        }
        return SuiteResult{true, std::to_string(regions) + " regions"};
    });
    checks.emplace_back("syndrome_depth", [](uint64_t) {
        for (const auto &name : builtin_code_names()) {
            auto g = builtin_code(name);
            auto sc = build_syndrome_circuit(g);
            if (sc.locality >= 2 && sc.depth() > sc.depth_bound) {
                return SuiteResult{false, name};
            }
        }
        return SuiteResult{true, std::to_string(builtin_code_names().size()) + " codes"};
    });
    checks.emplace_back("gentle_measurement", [](uint64_t seed) {
        auto g = five_qubit_code();
        std::mt19937_64 rng(seed);
        size_t total = 5 + g.num_checks();
        for (size_t i = 0; i < 20; i++) {
            auto phi = QuantumState::prepared(random_low_depth(5, 1 + i % 2, GateFamily::Clifford, rng()), Backend::Tableau);
            std::vector<size_t> all(total);
            std::iota(all.begin(), all.end(), 0);
            std::shuffle(all.begin(), all.end(), rng);
            std::vector<size_t> region(all.begin(), all.begin() + 2 + i % 2);
            std::sort(region.begin(), region.end());
            auto r = gentle_measurement_report(phi, g, region);
            if (!r.holds) {
                return SuiteResult{false, "F=" + fmt(r.fidelity) + " bound=" + fmt(r.bound)};
            }
        }
        return SuiteResult{true, "20 pairs"};
    });
    checks.emplace_back("entropy_pipeline", [](uint64_t seed) {
        for (const auto &name : {"five_qubit", "steane7", "toric2"}) {
            auto g = builtin_code(name);
            auto pairs = logical_pairs(g);
            size_t k = g.num_logical();
            for (uint64_t i = 0; i < 10; i++) {
                auto phi = QuantumState::prepared(
                    random_low_depth(g.num_qubits(), 2, GateFamily::Clifford, seed * 131 + i), Backend::Tableau);
                if (stabilizer_entropy(logical_depolarize(phi, pairs)) < k) {
                    return SuiteResult{false, std::string(name) + " entropy below k"};
                }
            }
            auto code = QuantumState::from_tableau(StabilizerState::logical_basis_state(g, 0));
            if (stabilizer_entropy(logical_depolarize(code, pairs)) != k) {
                return SuiteResult{false, std::string(name) + " code state entropy differs from k"};
            }
        }
        return SuiteResult{true, "3 codes"};
    });
    checks.emplace_back("amplification", [](uint64_t seed) {
        size_t count = 0;
        for (const auto &name : {"five_qubit", "toric2"}) {
            auto g = builtin_code(name);
            auto h = build_code_hamiltonian(g);
            for (size_t t = 0; t <= 2; t++) {
                for (uint64_t i = 0; i < 3; i++) {
                    auto phi = QuantumState::prepared(
                        random_low_depth(g.num_qubits(), t, GateFamily::Clifford, seed * 977 + i), Backend::Tableau);
                    for (size_t p = 1; p <= 3; p++) {
                        auto r = amplification_gap_check(phi, h, p, t);
                        count++;
                        if (!r.holds) {
                            return SuiteResult{false, std::string(name) + " lhs=" + fmt(r.lhs) + " rhs=" + fmt(r.rhs)};
                        }
                    }
                }
            }
        }
        return SuiteResult{true, std::to_string(count) + " checks"};
    });
    checks.emplace_back("sparsification", [](uint64_t seed) {
        auto g = five_qubit_code();
        auto hp = amplify(build_code_hamiltonian(g), 2);
        size_t k = sparsify_sample_count(5, hp.term_locality(), 0.25);
        CMat full = hp.dense();
        size_t ok = 0;
        const size_t runs = 12;
        for (uint64_t s = 0; s < runs; s++) {
            ok += spectral_deviation(full, sparsify(hp, k, seed * 1000 + s).dense()) <= 0.25;
        }
        return SuiteResult{3 * ok >= runs, std::to_string(ok) + "/" + std::to_string(runs) + " within delta"};
    });
    checks.emplace_back("kls_grid", [](uint64_t) {
        for (size_t n : {16, 32, 64}) {
            size_t lo = size_t(std::ceil(std::sqrt(double(n))));
            std::vector<size_t> degs = {lo};
            for (size_t p = 1; p <= n; p *= 2) {
                if (p > lo) {
                    degs.push_back(p);
                }
            }
            for (size_t deg : degs) {
                if (!kls_polynomial(n, deg).within_bound()) {
                    return SuiteResult{false, "n=" + std::to_string(n) + " deg=" + std::to_string(deg)};
                }
            }
        }
        return SuiteResult{true, "grid n in {16,32,64}"};
    });
    checks.emplace_back("agsp_projector", [](uint64_t seed) {
        auto g = toric_code(2);
        for (uint64_t i = 0; i < 3; i++) {
            auto r = agsp_projector_check(random_low_depth(8, 1, GateFamily::HaarDense, seed * 31 + i), g, 4);
            if (!r.projector_holds || !r.overlap_holds) {
                return SuiteResult{false, "norm error " + fmt(r.norm_error)};
            }
        }
        return SuiteResult{true, "3 circuits, m=8"};
    });
    checks.emplace_back("zero_state_distance", [](uint64_t) {
        for (const auto &name : builtin_code_names()) {
            auto r = zero_state_distance_check(builtin_code(name));
            if (r.d >= 2 && !r.holds) {
                return SuiteResult{false, name};
            }
        }
        return SuiteResult{true, "all built-in codes"};
    });
    checks.emplace_back("uncertainty", [](uint64_t seed) {
        std::mt19937_64 rng(seed);
        for (const auto &name : {"five_qubit", "steane7"}) {
            auto g = builtin_code(name);
            auto pairs = logical_pairs(g);
            for (int i = 0; i < 50; i++) {
                auto s = QuantumState::from_vector(random_pure_state(g.num_qubits(), rng));
                for (const auto &p : pairs) {
                    if (!uncertainty_check(s, p).holds) {
                        return SuiteResult{false, name};
                    }
                }
            }
        }
        return SuiteResult{true, "100 states"};
    });
    checks.emplace_back("lightcone_counting", [](uint64_t seed) {
        auto g = five_qubit_code();
        for (uint64_t i = 0; i < 10; i++) {
            auto phi = QuantumState::prepared(random_low_depth(5, 2, GateFamily::Clifford, seed * 7 + i), Backend::Tableau);
            if (!lightcone_count_check(phi, g).holds) {
                return SuiteResult{false, "seed offset " + std::to_string(i)};
            }
        }
        return SuiteResult{true, "10 states"};
    });
    checks.emplace_back("best_distance", [](uint64_t) {
        for (const auto &name : builtin_code_names()) {
            auto g = builtin_code(name);
            auto d = min_weight_logical(g, 6).distance;
            for (const auto &p : best_distance(g, 6).pairs) {
                if (!d || !p.d_prime || *p.d_prime < *d) {
                    return SuiteResult{false, name};
                }
            }
        }
        return SuiteResult{true, "d' >= d on all built-in codes"};
    });
    checks.emplace_back("product_separation", [](uint64_t) {
        for (const auto &name : {"five_qubit", "toric2", "steane7"}) {
            auto g = builtin_code(name);
            auto r = product_state_separation_check(QuantumState::zero(g.num_qubits(), Backend::Tableau), g);
            if (!r.holds) {
                return SuiteResult{false, name};
            }
        }
        return SuiteResult{true, "|0^n> on 3 codes"};
    });
    checks.emplace_back("frontier_baseline", [](uint64_t seed) {
        auto g = toric_code(3);
        std::vector<FrontierRecord> all = frontier_search(g, 0, FrontierStrategy::PauliProducts, 1, seed);
        auto rc = frontier_search(g, 2, FrontierStrategy::RandomClifford, 50, seed);
        all.insert(all.end(), rc.begin(), rc.end());
        auto merged = merge_frontier(all, 2);
        bool monotone = true;
        for (size_t t = 1; t < merged.size(); t++) {
            monotone &= merged[t].best_energy.total <= merged[t - 1].best_energy.total;
        }
        bool consistent = frontier_consistency(merged, g).violations.empty();
        return SuiteResult{
            merged[0].best_energy.total == 4.5 && monotone && consistent,
            "t=0 energy " + fmt(merged[0].best_energy.total)};
    });
    checks.emplace_back("bound_regime", [](uint64_t) {
        for (double dp : {0.1, 0.5, 0.9}) {
            for (const auto &p : regime_scan(dp)) {
                if (!p.within) {
                    return SuiteResult{false, "delta'=" + fmt(dp)};
                }
            }
        }
        return SuiteResult{true, "n = 2^10..2^20"};
    });
    return checks;
}

std::string cmd_bounds_suite(const RunConfig &cfg, bool all, const std::string &only) {
    auto checks = suite_checks();
    std::vector<std::string> selected;
    if (!only.empty()) {
        std::stringstream ss(only);
        std::string item;
        while (std::getline(ss, item, ',')) {
            bool known = std::any_of(checks.begin(), checks.end(), [&](const auto &c) { return c.first == item; });
            if (!known) {
                std::string names;
                for (const auto &c : checks) {
                    names += (names.empty() ? "" : ", ") + c.first;
                }
                throw ParameterError("unknown suite check '" + item + "' (valid: " + names + ")");
            }
            selected.push_back(item);
        }
    } else if (!all) {
        throw ParameterError("bounds suite needs --all or --only");
    }
    json arr = json::array();
    bool passed = true;
    std::string csv = "name,holds,detail\n";
    for (const auto &[name, fn] : checks) {
        if (!selected.empty() && std::find(selected.begin(), selected.end(), name) == selected.end()) {
            continue;
        }
        auto r = fn(cfg.seed);
        passed &= r.holds;
        arr.push_back({{"name", name}, {"holds", r.holds}, {"detail", r.detail}});
        csv += name + "," + (r.holds ? "true" : "false") + "," + r.detail + "\n";
    }
    std::string text = cfg.format == "csv" ? csv : dump_json({{"all_passed", passed}, {"checks", arr}});
    if (!passed) {
        throw CheckFailure(text);
    }
    return text;
}

std::string cmd_frontier(const RunConfig &cfg, size_t t_max, const std::string &strategy, size_t budget, bool raw) {
    auto g = load_code(cfg);
    std::vector<FrontierRecord> records;
    std::vector<FrontierStrategy> strategies;
    if (strategy == "all") {
        strategies = {FrontierStrategy::PauliProducts, FrontierStrategy::RandomClifford, FrontierStrategy::CoordinateDescent};
    } else {
        strategies = {parse_strategy(strategy)};
    }
    for (auto s : strategies) {
        auto recs = frontier_search(g, t_max, s, budget, cfg.seed);
        records.insert(records.end(), recs.begin(), recs.end());
    }
    if (!raw) {
        records = merge_frontier(records, t_max);
    }
    return cfg.format == "csv" ? frontier_to_csv(records) : frontier_to_json(records);
}

std::string cmd_amplify_check(const RunConfig &cfg, size_t p, size_t t, size_t samples) {
    auto g = load_code(cfg);
    auto h = build_code_hamiltonian(g);
    json arr = json::array();
    std::string csv = "sample,lhs,rhs,holds\n";
    bool passed = true;
    double margin = 1e300;
    for (size_t i = 0; i < samples; i++) {
        auto phi = QuantumState::prepared(random_low_depth(g.num_qubits(), t, GateFamily::Clifford, cfg.seed + i), Backend::Tableau);
        auto r = amplification_gap_check(phi, h, p, t);
        passed &= r.holds;
        margin = std::min(margin, r.lhs - r.rhs);
        arr.push_back({{"lhs", r.lhs}, {"rhs", r.rhs}, {"holds", r.holds}});
        csv += std::to_string(i) + "," + number_csv(r.lhs) + "," + number_csv(r.rhs) + "," + (r.holds ? "true" : "false") + "\n";
    }
    std::string text = cfg.format == "csv"
                           ? csv
                           : dump_json({{"p", p}, {"t", t}, {"seed", cfg.seed}, {"samples", samples}, {"all_hold", passed},
                                        {"min_margin", samples ? json(margin) : json(nullptr)}, {"checks", arr}});
    if (!passed) {
        throw CheckFailure(text);
    }
    return text;
}

std::string cmd_sparsify(const RunConfig &cfg, size_t p, double delta, size_t k) {
    if (!(delta > 0)) {
        throw ParameterError("delta must be positive");
    }
    auto g = load_code(cfg);
    auto hp = amplify(build_code_hamiltonian(g), p);
    if (k == 0) {
        k = sparsify_sample_count(g.num_qubits(), hp.term_locality(), delta);
    }
    double dev = spectral_deviation(hp.dense(), sparsify(hp, k, cfg.seed).dense());
    bool within = dev <= delta;
    if (cfg.format == "csv") {
        return "k,p,delta,deviation,within\n" + std::to_string(k) + "," + std::to_string(p) + "," + number_csv(delta) +
               "," + number_csv(dev) + "," + (within ? "true" : "false") + "\n";
    }
    return dump_json({{"k", k}, {"p", p}, {"delta", delta}, {"seed", cfg.seed}, {"deviation", dev}, {"within", within}});
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Stabilizer-code circuit-depth laboratory", "codedepth"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto *code = app.add_subcommand("code", "Code construction");
    code->require_subcommand(1);
    auto *code_params = code->add_subcommand("params", "Print [[n,k,d]] and locality");
    add_code_options(code_params, cfg);
    size_t distance_cap = 8;
    code_params->add_option("--distance-cap", distance_cap, "Largest weight searched for the distance");

    auto *ham = app.add_subcommand("ham", "Code Hamiltonian");
    ham->require_subcommand(1);
    auto *ham_energy = ham->add_subcommand("energy", "Energy report of a state");
    add_code_options(ham_energy, cfg);
    add_state_options(ham_energy, cfg);

    auto *circ = app.add_subcommand("circuit", "Layered circuits");
    circ->require_subcommand(1);
    auto *circ_cone = circ->add_subcommand("lightcone", "Backward lightcone of a region");
    std::string circuit_file, region_text;
    circ_cone->add_option("--circuit", circuit_file, "Circuit JSON file")->required();
    circ_cone->add_option("--region", region_text, "Comma separated qubits")->required();
    add_format_options(circ_cone, cfg);

    auto *syn = app.add_subcommand("syndrome", "Syndrome extraction");
    syn->require_subcommand(1);
    auto *syn_build = syn->add_subcommand("build", "Build the syndrome circuit");
    add_code_options(syn_build, cfg);
    auto *syn_dec = syn->add_subcommand("decohere", "Syndrome branches of a state");
    add_code_options(syn_dec, cfg);
    add_state_options(syn_dec, cfg);

    auto *ent = app.add_subcommand("entropy", "Entropy channels");
    ent->require_subcommand(1);
    auto *ent_audit = ent->add_subcommand("audit", "k <= S(Theta) <= per-qubit entropy sum");
    add_code_options(ent_audit, cfg);
    add_state_options(ent_audit, cfg);

    auto *bounds = app.add_subcommand("bounds", "Depth lower bounds");
    bounds->require_subcommand(1);
    auto *eval = bounds->add_subcommand("eval", "Evaluate the closed-form bounds");
    EvalOptions eo;
    eval->add_option("--n", eo.n);
    eval->add_option("--k", eo.k);
    eval->add_option("--d", eo.d);
    eval->add_option("--l", eo.l, "Locality");
    eval->add_option("--eps", eo.eps, "Energy fraction");
    eval->add_option("--delta", eo.delta, "Trace distance to the code");
    eval->add_option("--t", eo.t, "Depth");
    eval->add_option("--f", eo.f, "Fidelity with the code space");
    eval->add_option("--m", eo.m, "Total qubits");
    eval->add_option("--c-l", eo.c_l, "Constant of the rate bound");
    eval->add_option("--regime", eo.regime, "Scan k=n/2, d=sqrt(n), eps=n^-x for this x");
    add_format_options(eval, cfg);
    auto *suite = bounds->add_subcommand("suite", "Run the theorem checks");
    bool suite_all = false;
    std::string suite_only;
    suite->add_flag("--all", suite_all, "Run every check");
    suite->add_option("--only", suite_only, "Comma separated check names");
    suite->add_option("--seed", cfg.seed, "Random seed (default 0)");
    add_format_options(suite, cfg);

    auto *front = app.add_subcommand("frontier", "Energy versus depth search");
    add_code_options(front, cfg);
    size_t t_max = 3, budget = 1000;
    std::string strategy = "all";
    bool raw = false;
    front->add_option("--t-max", t_max);
    front->add_option("--strategy", strategy, "all | pauli-products | random-clifford | coordinate-descent");
    front->add_option("--budget", budget, "Energy evaluations per depth");
    front->add_option("--seed", cfg.seed, "Random seed (default 0)");
    front->add_flag("--raw", raw, "Do not merge strategies");

    auto *amp = app.add_subcommand("amplify", "Gap amplification");
    amp->require_subcommand(1);
    auto *amp_check = amp->add_subcommand("check", "Amplified energy inequality on random states");
    add_code_options(amp_check, cfg);
    size_t amp_p = 2, amp_t = 1, amp_samples = 20;
    amp_check->add_option("--p", amp_p);
    amp_check->add_option("--t", amp_t);
    amp_check->add_option("--samples", amp_samples);
    amp_check->add_option("--seed", cfg.seed, "Random seed (default 0)");

    auto *spar = app.add_subcommand("sparsify", "Sampled amplified Hamiltonian");
    add_code_options(spar, cfg);
    size_t sp_p = 2, sp_k = 0;
    double sp_delta = 0.25;
    spar->add_option("--p", sp_p);
    spar->add_option("--delta", sp_delta);
    spar->add_option("--k", sp_k, "Sample count (default from the formula)");
    spar->add_option("--seed", cfg.seed, "Random seed (default 0)");

    app.add_option("--dense-limits", cfg.dense_limits, "vector,density,marginal qubit limits");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (!cfg.dense_limits.empty()) {
            try {
                DenseLimits::set(DenseLimits::parse(cfg.dense_limits));
            } catch (const std::logic_error &) {
                throw ParameterError("bad --dense-limits '" + cfg.dense_limits + "'");
            }
        }
        std::string text;
        bool randomized = false;
        if (*code_params) {
            text = cmd_code_params(cfg, distance_cap);
        } else if (*ham_energy) {
            randomized = randomized_state(cfg);
            text = cmd_ham_energy(cfg);
        } else if (*circ_cone) {
            text = cmd_circuit_lightcone(cfg, circuit_file, region_text);
        } else if (*syn_build) {
            text = cmd_syndrome_build(cfg);
        } else if (*syn_dec) {
            randomized = randomized_state(cfg);
            text = cmd_syndrome_decohere(cfg);
        } else if (*ent_audit) {
            randomized = randomized_state(cfg);
            text = cmd_entropy_audit(cfg);
        } else if (*eval) {
            text = cmd_bounds_eval(cfg, eo);
        } else if (*suite) {
            randomized = true;
            err << "seed: " << cfg.seed << "\n";
            text = cmd_bounds_suite(cfg, suite_all, suite_only);
        } else if (*front) {
            randomized = true;
            text = cmd_frontier(cfg, t_max, strategy, budget, raw);
        } else if (*amp_check) {
            randomized = true;
            text = cmd_amplify_check(cfg, amp_p, amp_t, amp_samples);
        } else if (*spar) {
            randomized = true;
            text = cmd_sparsify(cfg, sp_p, sp_delta, sp_k);
        }
        if (randomized && !*suite) {
            err << "seed: " << cfg.seed << "\n";
        }
        if (cfg.output.empty()) {
            out << text;
        } else {
            write_atomically(cfg.output, text);
        }
        return 0;
    } catch (const CheckFailure &f) {
        if (cfg.output.empty()) {
            out << f.output;
        } else {
            write_atomically(cfg.output, f.output);
        }
        err << "error: a theorem check returned false\n";
        return 1;
    } catch (const ParseError &e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const DenseLimitError &e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace codedepth
