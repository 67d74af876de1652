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

#include "codedepth/bounds.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "codedepth/errors.h"
#include "codedepth/json_util.h"
#include "codedepth/syndrome.h"

namespace codedepth {

namespace {

double lg(double x) {
    return std::log2(x);
}

/// Collects the missing names; true when all present.
bool need(BoundValue &b, std::initializer_list<std::pair<const char *, const std::optional<double> *>> items) {
    for (auto &[name, v] : items) {
        if (!v->has_value()) {
            b.missing.emplace_back(name);
        }
    }
    return b.missing.empty();
}

/// Sets the value when the argument of the log is positive and finite.
void set_log_value(BoundValue &b, double scale, double argument) {
    if (!(argument > 0) || !std::isfinite(argument)) {
        b.flags.emplace_back("log argument not positive");
        return;
    }
    b.value = scale * lg(argument);
}

/// Whether depth t (or, when absent, some depth >= 0) lies below `limit`.
bool below(const BoundInputs &in, double limit) {
    return in.t ? *in.t < limit : limit > 0;
}

CMat circuit_unitary(const LayeredCircuit &u) {
    require_density_limit(u.m);
    size_t dim = size_t{1} << u.m;
    CMat out(dim, dim);
    for (size_t b = 0; b < dim; b++) {
        out.col(b) = apply_circuit(u, QuantumState::from_vector(basis_vector(u.m, b))).vector();
    }
    return out;
}

bool contains(const std::vector<size_t> &sorted, size_t q) {
    return std::binary_search(sorted.begin(), sorted.end(), q);
}

nlohmann::json value_json(const BoundValue &b) {
    nlohmann::json j;
    j["value"] = b.value ? nlohmann::json(*b.value) : nlohmann::json(nullptr);
    j["applicable"] = b.applicable;
    j["expression"] = b.expression;
    j["flags"] = b.flags;
    j["missing"] = b.missing;
    return j;
}

}  // namespace

void BoundInputs::validate() const {
    if (eps && !(*eps > 0 && *eps < 1)) {
        throw ParameterError("eps must lie in (0, 1)");
    }
    if (delta && !(*delta > 0 && *delta < 0.5)) {
        throw ParameterError("delta must lie in (0, 1/2)");
    }
    if (f && !(*f > 0 && *f <= 1)) {
        throw ParameterError("f must lie in (0, 1]");
    }
    for (auto *v : {&n, &d, &locality, &m, &num_checks}) {
        if (*v && !(**v > 0)) {
            throw ParameterError("sizes must be positive");
        }
    }
    if (k && *k < 0) {
        throw ParameterError("k must be non-negative");
    }
    if (t && *t < 0) {
        throw ParameterError("t must be non-negative");
    }
    if (!(c_l > 0)) {
        throw ParameterError("c_l must be positive");
    }
}

std::vector<std::pair<std::string, const BoundValue *>> DepthBoundReport::fields() const {
    return {
        {"thm1", &thm1},
        {"thm2_rate", &thm2_rate},
        {"thm3_distance", &thm3_distance},
        {"cor1_warmup", &cor1_warmup},
        {"lem1_entropy", &lem1_entropy},
        {"lem2_agsp", &lem2_agsp},
        {"lem4_lineardist", &lem4_lineardist},
        {"cor2_amplified", &cor2_amplified},
    };
}

std::string DepthBoundReport::to_json() const {
    nlohmann::json j;
    for (auto &[name, b] : fields()) {
        j[name] = value_json(*b);
    }
    return dump_json(j);
}

std::string DepthBoundReport::to_csv() const {
    std::ostringstream out;
    out.precision(17);
    out << "name,value,applicable\n";
    for (auto &[name, b] : fields()) {
        out << name << ",";
        if (b->value) {
            out << *b->value;
        }
        out << "," << (b->applicable ? "true" : "false") << "\n";
    }
    return out.str();
}

DepthBoundReport depth_lower_bounds(const BoundInputs &in) {
    in.validate();
    DepthBoundReport r;
    const char *dropped = "constants: dropped";

    {
        auto &b = r.thm1;
        b.expression = "min{log d, log((k + d) / (n sqrt(eps log(1/eps))))}";
        b.flags.emplace_back(dropped);
        if (need(b, {{"n", &in.n}, {"k", &in.k}, {"d", &in.d}, {"eps", &in.eps}})) {
            double e = *in.eps;
            double second = (*in.k + *in.d) / (*in.n * std::sqrt(e * lg(1 / e)));
            b.value = std::min(lg(*in.d), lg(second));
            b.applicable = true;
        }
    }
    {
        auto &b = r.thm2_rate;
        b.expression = "(1/2) log(k / (c_l n eps log(1/eps)))";
        std::ostringstream slot;
        slot << "c_l = " << in.c_l << " (free slot)";
        b.flags.push_back(slot.str());
        b.flags.emplace_back("requires t < log d - 2 l^3");
        if (need(b, {{"n", &in.n}, {"k", &in.k}, {"d", &in.d}, {"l", &in.locality}, {"eps", &in.eps}})) {
            double e = *in.eps;
            set_log_value(b, 0.5, *in.k / (in.c_l * *in.n * e * lg(1 / e)));
            double l = *in.locality;
            b.applicable = b.value.has_value() && below(in, lg(*in.d) - 2 * l * l * l);
        }
    }
    {
        auto &b = r.thm3_distance;
        b.expression = "(1/2) log(d / (2^6 n sqrt(l eps log(1/eps))))";
        b.flags.emplace_back("requires t < log d - 1");
        if (need(b, {{"n", &in.n}, {"d", &in.d}, {"l", &in.locality}, {"eps", &in.eps}})) {
            double e = *in.eps;
            set_log_value(b, 0.5, *in.d / (64 * *in.n * std::sqrt(*in.locality * e * lg(1 / e))));
            b.applicable = b.value.has_value() && below(in, lg(*in.d) - 1);
        }
    }
    {
        auto &b = r.cor1_warmup;
        b.expression = "log min{d, k / (2 delta log(1/delta) n)}";
        b.flags.emplace_back("requires k > 2 delta log(1/delta) n");
        if (need(b, {{"n", &in.n}, {"k", &in.k}, {"d", &in.d}, {"delta", &in.delta}})) {
            double gate = 2 * *in.delta * lg(1 / *in.delta);
            set_log_value(b, 1, std::min(*in.d, *in.k / (gate * *in.n)));
            b.applicable = b.value.has_value() && *in.k > gate * *in.n;
        }
    }
    {
        auto &b = r.lem1_entropy;
        b.expression = "log d";
        b.flags.emplace_back("requires k > 2 delta log(1/delta) m");
        std::optional<double> m = in.m ? in.m : in.n;
        if (need(b, {{"k", &in.k}, {"d", &in.d}, {"delta", &in.delta}, {"m", &m}})) {
            b.value = lg(*in.d);
            b.applicable = *in.k > 2 * *in.delta * lg(1 / *in.delta) * *m;
        }
    }
    {
        auto &b = r.lem2_agsp;
        b.expression = "(1/2) log min{d, k sqrt(d) / (64 sqrt(l) log^2(d l) n sqrt(log(1/f)))}";
        if (need(b, {{"n", &in.n}, {"k", &in.k}, {"d", &in.d}, {"l", &in.locality}, {"f", &in.f}})) {
            double d = *in.d;
            double l = *in.locality;
            double root = std::sqrt(lg(1 / *in.f));
            double second = root > 0
                                ? *in.k * std::sqrt(d) / (64 * std::sqrt(l) * std::pow(lg(d * l), 2) * *in.n * root)
                                : d;
            set_log_value(b, 0.5, std::min(d, second));
            b.applicable = b.value.has_value();
        }
    }
    {
        auto &b = r.lem4_lineardist;
        b.expression = "log(d / (delta n))";
        b.flags.emplace_back(dropped);
        b.flags.emplace_back("ancilla-free circuits, k > 0");
        if (need(b, {{"n", &in.n}, {"d", &in.d}, {"delta", &in.delta}})) {
            set_log_value(b, 1, *in.d / (*in.delta * *in.n));
            b.applicable = b.value.has_value() && (!in.k || *in.k > 0);
        }
    }
    {
        auto &b = r.cor2_amplified;
        b.expression = "min{log n, log(1/eps)}";
        b.flags.emplace_back(dropped);
        b.flags.emplace_back("eps is a mean-normalized energy");
        if (need(b, {{"n", &in.n}, {"eps", &in.eps}})) {
            b.value = std::min(lg(*in.n), lg(1 / *in.eps));
            b.applicable = true;
        }
    }
    return r;
}

std::vector<RegimePoint> regime_scan(double delta_prime, size_t min_exponent, size_t max_exponent) {
    if (!(delta_prime > 0 && delta_prime < 1)) {
        throw ParameterError("delta' must lie in (0, 1)");
    }
    std::vector<RegimePoint> out;
    for (size_t e = min_exponent; e <= max_exponent; e++) {
        BoundInputs in;
        double n = std::ldexp(1.0, int(e));
        in.n = n;
        in.k = n / 2;
        in.d = std::sqrt(n);
        in.locality = 4;
        in.eps = std::pow(n, -delta_prime);
        RegimePoint p;
        p.n = n;
        p.bound = *depth_lower_bounds(in).thm2_rate.value;
        p.scaling = delta_prime / 2 * lg(n);
        p.residual = p.bound - p.scaling;
        p.within = std::abs(p.residual) <= lg(lg(n)) + 1;
        out.push_back(p);
    }
    return out;
}

CodeDistanceReport trace_distance_to_code(const QuantumState &state, const StabilizerGroup &g) {
    CodeDistanceReport r;
    double f2;
    switch (state.backend()) {
        case Backend::Tableau: {
            StabilizerState s = std::get<StabilizerState>(state.data);
            if (!s.is_pure()) {
                throw ParameterError("pure state required");
            }
            f2 = 1;
            for (const auto &c : g.generators()) {
                f2 *= s.project(embed_in_state(c, state), false);
                if (f2 == 0) {
                    break;
                }
            }
            break;
        }
        case Backend::Vector: {
            CVec psi = std::get<CVec>(state.data);
            for (const auto &c : g.generators()) {
                psi = (psi + apply_pauli(embed_in_state(c, state), psi)) / 2.0;
            }
            f2 = psi.squaredNorm();
            break;
        }
        default:
            throw ParameterError("pure state required");
    }
    f2 = std::clamp(f2, 0.0, 1.0);
    r.fidelity_squared = f2;
    r.fidelity = std::sqrt(f2);
    r.trace_distance = std::sqrt(1 - f2);
    return r;
}

ZeroStateDistanceReport zero_state_distance_check(const StabilizerGroup &g) {
    if (g.num_logical() == 0) {
        throw ParameterError("the code encodes no logical qubits");
    }
    size_t n = g.num_qubits();
    auto rep = trace_distance_to_code(QuantumState::zero(n, Backend::Tableau), g);
    ZeroStateDistanceReport out;
    out.fidelity_squared = rep.fidelity_squared;
    out.distance = rep.trace_distance;
    out.d = *min_weight_logical(g, n).distance;
    out.threshold = double(out.d) / (6.0 * double(n));
    out.holds = out.distance > out.threshold;
    return out;
}

AgspReport agsp_projector_check(const LayeredCircuit &u, const StabilizerGroup &g, size_t deg) {
    if (g.num_qubits() != u.m) {
        throw DimensionError("the code must act on the circuit's qubits");
    }
    AgspReport r;
    r.m = u.m;
    r.t = u.depth();
    r.deg = deg;
    auto kls = kls_polynomial(u.m, deg);
    r.kls_error = kls.achieved_error;
    r.kls_bound = kls.error_bound();

    CMat unitary = circuit_unitary(u);
    size_t dim = size_t{1} << u.m;
    Eigen::VectorXd counts(dim);
    for (size_t b = 0; b < dim; b++) {
        counts(b) = double(std::popcount(b));
    }
    CMat parent = unitary * counts.cast<Complex>().asDiagonal() * unitary.adjoint();
    CVec psi = unitary.col(0);
    CMat diff = kls.of_matrix(parent) - psi * psi.adjoint();
    diff = (diff + diff.adjoint().eval()) / 2.0;
    r.norm_error = operator_norm(diff);
    r.projector_holds = r.norm_error <= r.kls_bound + 1e-10 && r.norm_error <= r.kls_error + 1e-9;

    r.fidelity_squared = trace_distance_to_code(QuantumState::from_vector(psi), g).fidelity_squared;
    auto dist = min_weight_logical(g, g.num_qubits());
    if (dist.distance) {
        r.d = *dist.distance;
        double d = double(r.d);
        r.overlap_rhs = 2 * std::exp(-d * d / (std::ldexp(1.0, int(2 * r.t + 10)) * double(r.m)));
        r.overlap_applicable = std::ldexp(1.0, int(r.t)) <= d / 2;
        r.overlap_holds = r.fidelity_squared <= r.overlap_rhs;
    }
    return r;
}

size_t schmidt_rank(const CMat &op, size_t num_qubits, const std::vector<size_t> &part_a) {
    size_t dim = size_t{1} << num_qubits;
    if (size_t(op.rows()) != dim || size_t(op.cols()) != dim) {
        throw DimensionError("operator size does not match the qubit count");
    }
    std::vector<bool> in_a(num_qubits, false);
    for (size_t q : part_a) {
        if (q >= num_qubits || in_a[q]) {
            throw DimensionError("bad bipartition");
        }
        in_a[q] = true;
    }
    std::vector<size_t> part_b;
    for (size_t q = 0; q < num_qubits; q++) {
        if (!in_a[q]) {
            part_b.push_back(q);
        }
    }
    auto split = [&](size_t index, const std::vector<size_t> &part) {
        size_t out = 0;
        for (size_t j = 0; j < part.size(); j++) {
            out |= ((index >> part[j]) & 1) << j;
        }
        return out;
    };
    size_t da = size_t{1} << part_a.size();
    size_t db = size_t{1} << part_b.size();
    CMat realigned = CMat::Zero(da * da, db * db);
    for (size_t row = 0; row < dim; row++) {
        size_t ra = split(row, part_a);
        size_t rb = split(row, part_b);
        for (size_t col = 0; col < dim; col++) {
            realigned(ra * da + split(col, part_a), rb * db + split(col, part_b)) = op(row, col);
        }
    }
    Eigen::BDCSVD<CMat> svd(realigned);
    const auto &sv = svd.singularValues();
    if (sv.size() == 0 || sv(0) == 0) {
        return 0;
    }
    size_t rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); i++) {
        rank += sv(i) > 1e-10 * sv(0);
    }
    return rank;
}

TruncatedHamiltonian truncated_hamiltonian(
    const StabilizerGroup &g, const std::vector<size_t> &region, const LayeredCircuit *rotation) {
    size_t n = g.num_qubits();
    require_density_limit(n);
    if (rotation && rotation->m != n) {
        throw DimensionError("rotation must act on the code qubits");
    }
    TruncatedHamiltonian h;
    h.num_qubits = n;
    h.t = rotation ? rotation->depth() : 0;
    h.locality = g.locality();
    h.region = region;
    std::sort(h.region.begin(), h.region.end());

    size_t dim = size_t{1} << n;
    CMat id = CMat::Identity(dim, dim);
    CMat unitary = rotation ? circuit_unitary(*rotation) : id;
    std::vector<std::vector<size_t>> supports;
    std::vector<CMat> projectors;
    for (const auto &c : g.generators()) {
        auto supp = c.support().ones();
        if (rotation) {
            supp = lightcone(*rotation, supp);
            std::sort(supp.begin(), supp.end());
        }
        supports.push_back(supp);
        projectors.push_back(unitary.adjoint() * ((id + pauli_matrix(c)) / 2.0) * unitary);
    }

    std::vector<size_t> extended;
    for (const auto &supp : supports) {
        bool touches = std::any_of(supp.begin(), supp.end(), [&](size_t q) { return contains(h.region, q); });
        if (touches) {
            extended.insert(extended.end(), supp.begin(), supp.end());
        }
    }
    extended.insert(extended.end(), h.region.begin(), h.region.end());
    std::sort(extended.begin(), extended.end());
    extended.erase(std::unique(extended.begin(), extended.end()), extended.end());
    h.extended_region = extended;

    h.boundary = CMat::Zero(dim, dim);
    h.inside = CMat::Zero(dim, dim);
    h.outside = CMat::Zero(dim, dim);
    CMat pi_c = id;
    bool any_truncated = false;
    for (size_t j = 0; j < supports.size(); j++) {
        const auto &supp = supports[j];
        bool kept = std::all_of(supp.begin(), supp.end(), [&](size_t q) { return contains(extended, q); });
        if (!kept) {
            pi_c = pi_c * projectors[j];
            any_truncated = true;
            continue;
        }
        h.num_terms++;
        size_t hits = std::count_if(supp.begin(), supp.end(), [&](size_t q) { return contains(h.region, q); });
        CMat term = id - projectors[j];
        if (hits == 0) {
            h.outside += term;
        } else if (hits == supp.size()) {
            h.inside += term;
        } else {
            h.boundary += term;
            h.boundary_terms++;
        }
    }
    if (any_truncated) {
        h.outside += id - pi_c;
        h.num_terms++;
    }
    return h;
}

SchmidtRankCheck truncated_schmidt_check(const TruncatedHamiltonian &h, size_t deg) {
    SchmidtRankCheck r;
    double base = std::ldexp(1.0, int(2 * h.t)) * double(h.locality * h.locality) * double(h.region.size());
    r.boundary_rank = schmidt_rank(h.boundary, h.num_qubits, h.region);
    r.boundary_bound = base;
    CMat full = h.dense();
    size_t dim = size_t{1} << h.num_qubits;
    CMat power = CMat::Identity(dim, dim);
    bool ok = r.boundary_rank <= r.boundary_bound;
    for (size_t q = 0; q <= deg; q++) {
        if (q > 0) {
            power = power * full;
        }
        r.power_ranks.push_back(schmidt_rank(power, h.num_qubits, h.region));
        r.power_bounds.push_back(q == 0 ? 1.0 : double(q * q) * std::pow(base, double(q)));
        ok &= r.power_ranks.back() <= r.power_bounds.back();
    }
    auto kls = kls_polynomial(std::max<size_t>(h.num_terms, 1), deg);
    r.polynomial_rank = schmidt_rank(kls.of_matrix(full), h.num_qubits, h.region);
    r.polynomial_bound = std::pow(double(deg), 3) * std::pow(base, double(deg));
    ok &= r.polynomial_rank <= r.polynomial_bound;
    r.holds = ok;
    return r;
}

BestDistanceReport best_distance(const StabilizerGroup &g, size_t weight_cap) {
    if (g.num_logical() == 0) {
        throw ParameterError("the code encodes no logical qubits");
    }
    BestDistanceReport r;
    r.logicals = logical_pairs(g);
    double best_ratio = -1;
    for (size_t i = 0; i < r.logicals.size(); i++) {
        const auto &pair = r.logicals[i];
        BestDistancePair p;
        p.w = std::max(pair.xbar.weight(), pair.zbar.weight());
        auto res = min_weight_logical(g, weight_cap, [&](const PauliOperator &op) {
            return !commutes(op, pair.xbar) || !commutes(op, pair.zbar);
        });
        p.d_prime = res.distance;
        p.searched_up_to = res.searched_up_to;
        p.lower_bound_only = !res.distance.has_value();
        if (p.d_prime) {
            if (!r.best || *p.d_prime > *r.best) {
                r.best = p.d_prime;
            }
            double ratio = double(*p.d_prime) / double(p.w);
            if (ratio > best_ratio) {
                best_ratio = ratio;
                r.best_ratio_pair = i;
            }
        }
        r.pairs.push_back(p);
    }
    return r;
}

UncertaintyReport uncertainty_check(const QuantumState &state, const LogicalPair &pair) {
    UncertaintyReport r;
    r.ex = state.expectation(embed_in_state(pair.xbar, state));
    r.ez = state.expectation(embed_in_state(pair.zbar, state));
    r.holds = r.ex * r.ex + r.ez * r.ez <= 1 + 1e-9;
    return r;
}

bool is_product_state(const QuantumState &state) {
    for (size_t q = 0; q < state.m; q++) {
        CMat rho = reduced_density(state, {q});
        if ((rho * rho).trace().real() < 1 - 1e-9) {
            return false;
        }
    }
    return true;
}

SeparationReport product_state_separation_check(const QuantumState &state, const StabilizerGroup &g, size_t weight_cap) {
    if (!is_product_state(state)) {
        throw ParameterError("the separation bound needs a product state");
    }
    auto best = best_distance(g, weight_cap);
    const auto &pair = best.pairs[best.best_ratio_pair];
    if (!pair.d_prime) {
        throw ParameterError("best distance search exceeded the weight cap");
    }
    SeparationReport r;
    r.d_prime = *pair.d_prime;
    r.w = pair.w;
    r.bound = double(r.d_prime) / (8.0 * double(r.w));
    r.distance = trace_distance_to_code(state, g).trace_distance;
    r.holds = r.distance >= r.bound - 1e-12;
    return r;
}

double claim3_threshold(size_t K, size_t t, size_t w) {
    return double(K) / (std::ldexp(1.0, int(t + 4)) * double(w));
}

std::optional<RegionResult> distinguishing_region(
    const QuantumState &psi, const QuantumState &theta, size_t size_cap, std::optional<double> threshold) {
    if (psi.m != theta.m) {
        throw DimensionError("states act on different qubit counts");
    }
    size_t m = psi.m;
    size_cap = std::min(size_cap, m);
    require_marginal_limit(size_cap);
    std::optional<RegionResult> best;
    std::vector<size_t> region;
    std::optional<RegionResult> found;
    std::function<bool(size_t, size_t)> visit = [&](size_t start, size_t remaining) -> bool {
        if (remaining == 0) {
            double dist = trace_distance(reduced_density(psi, region), reduced_density(theta, region));
            if (threshold) {
                if (dist > *threshold) {
                    found = RegionResult{region, dist};
                    return true;
                }
            } else if (!best || dist > best->distance + 1e-12) {
                best = RegionResult{region, dist};
            }
            return false;
        }
        for (size_t q = start; q + remaining <= m; q++) {
            region.push_back(q);
            bool stop = visit(q + 1, remaining - 1);
            region.pop_back();
            if (stop) {
                return true;
            }
        }
        return false;
    };
    for (size_t size = 1; size <= size_cap; size++) {
        if (visit(0, size)) {
            return found;
        }
    }
    if (!threshold && best && best->distance > 1e-10) {
        return best;
    }
    return std::nullopt;
}

LightconeCountReport lightcone_count_check(const LayeredCircuit &w, const std::vector<double> &check_energies, size_t m) {
    size_t num = check_energies.size();
    if (w.m != m + num) {
        throw DimensionError("circuit register must hold m qubits plus one ancilla per check");
    }
    LightconeCountReport r;
    r.m = m;
    r.num_checks = num;
    r.depth = w.depth();
    r.check_energies = check_energies;
    r.membership.assign(num, 0);
    LayeredCircuit inv = w.inverse();
    for (size_t j = 0; j < m + num; j++) {
        for (size_t q : lightcone(inv, {j})) {
            if (q >= m) {
                r.membership[q - m]++;
            }
        }
    }
    double total = 0;
    double weighted = 0;
    for (size_t i = 0; i < num; i++) {
        total += check_energies[i];
        weighted += check_energies[i] * double(r.membership[i]);
    }
    double reg = double(m + num);
    r.lower = total / reg;
    r.middle = weighted / reg;
    r.upper = std::ldexp(1.0, int(2 * r.depth)) * total / reg;
    r.holds = r.lower <= r.middle + 1e-12 && r.middle <= r.upper + 1e-12;
    return r;
}

LightconeCountReport lightcone_count_check(const QuantumState &phi, const StabilizerGroup &g) {
    if (!phi.provenance) {
        throw ParameterError("the state has no provenance circuit");
    }
    size_t m = phi.m;
    auto v = build_syndrome_circuit(g, greedy_coloring(overlap_graph(g)), m, phi.code_qubits);
    LayeredCircuit w = widen_circuit(*phi.provenance, m + g.num_checks());
    w.append(v.circuit);
    auto energies = energy_report(phi, build_code_hamiltonian(g)).per_term;
    return lightcone_count_check(w, energies, m);
}

}  // namespace codedepth
