// Copyright 2026 The qclone Authors
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

#include "qclone/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <string>

#include "qclone/bounds.hpp"
#include "qclone/cloner.hpp"
#include "qclone/errors.hpp"
#include "qclone/estimator.hpp"
#include "qclone/linalg.hpp"
#include "qclone/symspace.hpp"

namespace qclone {

using nlohmann::ordered_json;

namespace {

// Independent substreams per suite section.
enum Section : std::uint64_t {
    kSectionClone = 1,
    kSectionEstimate = 2,
    kSectionConcat = 3,
    kSectionStatementB = 4,
    kSectionMixed = 5,
    kSectionPseudoMixture = 6,
};

constexpr int kDefaultCloneSamples = 50;
constexpr int kDefaultMonteCarloShots = 100000;
constexpr double kSupportTol = 1e-11;
constexpr double kQuadratureTol = 1e-10;
constexpr double kMinMixedBloch = 0.1;

const char* kAnchorEta = "eta(N,M) = N(M+2)/(M(N+2))";
const char* kAnchorFidelity = "F(N,M) = (NM+N+M)/(M(N+2))";
const char* kAnchorUniversal = "universal cloners only shrink the Bloch vector, independent of the input";
const char* kAnchorChannel = "Tr_{M-1}[C_NM(rho_N)] = eta rho + (1-eta) 1/2";
const char* kAnchorSymmetric = "output supported on the symmetric subspace";
const char* kAnchorMultiplicative = "eta(N,L) = eta(N,M) eta(M,L)";
const char* kAnchorEstimation = "F_meas(M) = (M+1)/(M+2)";
const char* kAnchorEtaMeas = "eta_meas(M) = M/(M+2)";
const char* kAnchorRhoBar = "rho_bar = eta_meas(M) |psi><psi| + (1-eta_meas(M)) 1/2";
const char* kAnchorStatementB = "cloner M->L then estimation on L copies: F = (1 + eta(M,L) eta_meas(L))/2";
const char* kAnchorPseudo = "rho_N = sum_i alpha_i |psi_i><psi_i|^N, sum alpha_i = 1, alpha_i may be negative";

std::uint64_t cell_key(int n, int m, int l) {
    return static_cast<std::uint64_t>(n) * 1000000ULL + static_cast<std::uint64_t>(m) * 1000ULL +
           static_cast<std::uint64_t>(l);
}

Check& tag(Check& c, std::optional<int> n, std::optional<int> m, std::optional<int> l) {
    c.n = n;
    c.m = m;
    c.l = l;
    return c;
}

Check& add(Report& r, Check c, std::optional<int> n = {}, std::optional<int> m = {}, std::optional<int> l = {}) {
    return tag(r.add(std::move(c)), n, m, l);
}

ordered_json bloch_json(const BlochVector& s) {
    return ordered_json::array({s.x, s.y, s.z});
}

ordered_json config_json(const RunConfig& cfg) {
    ordered_json j;
    j["command"] = to_string(cfg.command);
    j["n"] = cfg.n ? ordered_json(*cfg.n) : nullptr;
    j["m"] = cfg.m ? ordered_json(*cfg.m) : nullptr;
    j["l"] = cfg.l ? ordered_json(*cfg.l) : nullptr;
    j["samples"] = cfg.samples ? ordered_json(*cfg.samples) : nullptr;
    j["seed"] = cfg.seed;
    j["output_format"] = to_string(cfg.format);
    j["tolerances"] = {{"structural", cfg.tol.structural},
                       {"physics", cfg.tol.physics},
                       {"estimation", cfg.tol.estimation},
                       {"mc_sigmas", cfg.tol.mc_sigmas}};
    return j;
}

// ---------------------------------------------------------------------------
// Cloning

void clone_cell(Report& report, const RunConfig& cfg, int n, int m, int samples) {
    const CloneChannel ch(n, m);
    const std::uint64_t seed = SeedStream(cfg.seed).substream(kSectionClone).at(cell_key(n, m, 0));
    const CloneReport r = certify_universality(ch, samples, seed);
    const Rational eta = eta_opt(n, m);
    const Rational fid = fidelity_opt(n, m);
    const bool full_space = m <= kMaxFullSpaceCloneQubits;

    add(report, check_close("eta_measured", kAnchorEta, eta, r.eta_measured, cfg.tol.physics), n, m);
    add(report, check_below("universality_spread", kAnchorUniversal, r.universality_spread, cfg.tol.physics), n, m);
    add(report, check_below("orientation_deviation", kAnchorUniversal, r.orientation_deviation, cfg.tol.physics), n,
        m);
    add(report, check_close("fidelity_measured", kAnchorFidelity, fid, r.fidelity_measured, cfg.tol.physics), n, m);
    add(report, check_below("trace_error", kAnchorChannel, r.trace_error, cfg.tol.structural), n, m);
    add(report, check_at_least("min_output_eigenvalue", kAnchorChannel, r.min_output_eigenvalue, tol::kPositivity), n,
        m);
    if (full_space) {
        add(report, check_below("output_symmetric_residual", kAnchorSymmetric, r.output_symmetric_residual, kSupportTol),
            n, m);
        add(report, check_below("reduction_spread", kAnchorSymmetric, r.reduction_spread, kSupportTol), n, m);

        // Both evaluation routes on one input.
        Engine rng = SeedStream(seed).substream(99).engine(0);
        const PureQubitState psi = haar_random_pure(rng);
        const DensityOperator out = apply_cloner(ch, DensityOperator::tensor_power(psi, n));
        const ComplexVector v = tensor_power_dicke(psi, n);
        const double route_gap = max_abs(project_dicke(out) - apply_cloner_dicke(ch, v * v.adjoint()));
        add(report, check_below("full_vs_dicke_route", kAnchorChannel, route_gap, 1e-10), n, m);
    }

    ordered_json rec;
    rec["kind"] = "clone";
    rec["n"] = n;
    rec["m"] = m;
    rec["samples"] = samples;
    rec["seed"] = seed;
    rec["route"] = full_space ? "full-space" : "dicke";
    rec["eta_measured"] = r.eta_measured;
    rec["eta_predicted"] = to_string(eta);
    rec["eta_predicted_float"] = to_double(eta);
    rec["fidelity_measured"] = r.fidelity_measured;
    rec["fidelity_predicted"] = to_string(fid);
    rec["fidelity_predicted_float"] = to_double(fid);
    rec["universality_spread"] = r.universality_spread;
    rec["orientation_deviation"] = r.orientation_deviation;
    rec["output_symmetric_residual"] = r.output_symmetric_residual;
    rec["reduction_spread"] = r.reduction_spread;
    rec["trace_error"] = r.trace_error;
    rec["min_output_eigenvalue"] = r.min_output_eigenvalue;
    report.add_result(std::move(rec));
}

// ---------------------------------------------------------------------------
// Estimation

void estimate_exact_cell(Report& report, const RunConfig& cfg, int m) {
    const SeedStream stream = SeedStream(cfg.seed).substream(kSectionEstimate);
    Engine rng = stream.engine(cell_key(0, m, 0));
    const PureQubitState psi = haar_random_pure(rng);
    const PureQubitState psi2 = haar_random_pure(rng);
    const EstimationReport r = estimation_fidelity_exact(m, psi);
    const EstimationReport r2 = estimation_fidelity_exact(m, psi2);

    add(report, check_close("exact_fidelity", kAnchorEstimation, fidelity_meas_opt(m), r.fidelity_measured,
                            cfg.tol.estimation),
        {}, m);
    add(report, check_close("exact_eta", kAnchorEtaMeas, eta_meas_opt(m), r.eta_measured, cfg.tol.estimation), {},
        m);
    add(report, check_below("exact_fidelity_input_dependence", kAnchorEstimation,
                            std::abs(r.fidelity_measured - r2.fidelity_measured), kQuadratureTol),
        {}, m);
    add(report, check_below("rho_bar_orientation", kAnchorRhoBar, r.orientation_deviation, cfg.tol.physics), {}, m);

    const CovariantPovm povm = CovariantPovm::exact(m);
    if (m <= kMaxFullSpaceEstimationCopies) {
        const double completeness = max_abs(povm.completeness() - symmetrizer(m).matrix());
        add(report, check_below("povm_completeness", "int (M+1)|phi><phi|^M dmu = S_M", completeness, kQuadratureTol),
            {}, m);

        const DensityOperator rho_bar = measure_and_prepare_channel(m, DensityOperator::tensor_power(psi, m));
        const BlochVector expected = psi.bloch().scaled(to_double(eta_meas_opt(m)));
        add(report, check_below("measure_prepare_bloch", kAnchorRhoBar, bloch_of(rho_bar).max_abs_diff(expected),
                                kQuadratureTol),
            {}, m);
    }

    ordered_json rec;
    rec["kind"] = "estimate-exact";
    rec["m"] = m;
    rec["polar_nodes"] = r.polar_nodes;
    rec["azimuth_nodes"] = r.azimuth_nodes;
    rec["fidelity_measured"] = r.fidelity_measured;
    rec["fidelity_predicted"] = to_string(fidelity_meas_opt(m));
    rec["eta_measured"] = r.eta_measured;
    rec["eta_predicted"] = to_string(eta_meas_opt(m));
    rec["input_bloch"] = bloch_json(psi.bloch());
    rec["rho_bar_bloch"] = bloch_json(bloch_of(r.rho_bar));
    report.add_result(std::move(rec));
}

void estimate_mc_cell(Report& report, const RunConfig& cfg, int m, int shots) {
    const SeedStream stream = SeedStream(cfg.seed).substream(kSectionEstimate);
    Engine rng = stream.engine(cell_key(0, m, 0));
    const PureQubitState psi = haar_random_pure(rng);
    const std::uint64_t seed = stream.at(cell_key(1, m, 0));
    const EstimationReport r = estimate_monte_carlo(m, psi, shots, seed);
    const double exact = estimation_fidelity_exact(m, psi).fidelity_measured;
    const double band = cfg.tol.mc_sigmas * r.statistical_error;

    add(report, check_close("monte_carlo_fidelity", kAnchorEstimation, exact, r.fidelity_measured, band), {}, m);

    ordered_json rec;
    rec["kind"] = "estimate-monte-carlo";
    rec["m"] = m;
    rec["shots"] = shots;
    rec["seed"] = seed;
    rec["proposals"] = r.proposals;
    rec["fidelity_measured"] = r.fidelity_measured;
    rec["statistical_error"] = r.statistical_error;
    rec["fidelity_predicted"] = to_string(fidelity_meas_opt(m));
    rec["eta_measured"] = r.eta_measured;
    rec["rho_bar_bloch"] = bloch_json(bloch_of(r.rho_bar));
    rec["orientation_deviation"] = r.orientation_deviation;
    report.add_result(std::move(rec));
}

// ---------------------------------------------------------------------------
// Concatenation

void concat_cell(Report& report, const RunConfig& cfg, int n, int m, int l) {
    Engine rng = SeedStream(cfg.seed).substream(kSectionConcat).engine(cell_key(n, m, l));
    const PureQubitState psi = haar_random_pure(rng);
    const DensityOperator input = DensityOperator::tensor_power(psi, n);
    const CloneChannel first(n, m);
    const CloneChannel second(m, l);
    const CloneChannel direct(n, l);

    const double eta_first = measure_shrinking(first, input).eta_measured;
    const double eta_second = measure_shrinking(second, apply_cloner(first, input)).eta_measured;
    const DensityOperator chained = concat_channels(first, second, input);
    const double eta_chain = bloch_of(reduce_to_qubit(chained, 0)).norm() / psi.bloch().norm();
    const double eta_direct = measure_shrinking(direct, input).eta_measured;

    add(report, check_close("chain_vs_stage_product", kAnchorMultiplicative, eta_first * eta_second, eta_chain,
                            cfg.tol.physics),
        n, m, l);
    add(report, check_close("chain_vs_direct", kAnchorMultiplicative, eta_direct, eta_chain, cfg.tol.physics), n, m,
        l);
    add(report, check_close("chain_vs_closed_form", kAnchorEta, eta_opt(n, l), eta_chain, cfg.tol.physics), n, m, l);

    ordered_json rec;
    rec["kind"] = "concat";
    rec["n"] = n;
    rec["m"] = m;
    rec["l"] = l;
    rec["eta_first"] = eta_first;
    rec["eta_second"] = eta_second;
    rec["eta_chain"] = eta_chain;
    rec["eta_direct"] = eta_direct;
    rec["eta_predicted"] = to_string(eta_opt(n, l));
    report.add_result(std::move(rec));
}

void identity_cell(Report& report, int n, int m, int l) {
    const BoundsReport b = check_identities(n, m, l);
    ordered_json slacks = ordered_json::object();
    for (const IdentityCheck& c : b.inequality_checks) {
        add(report, check_exact(c.name, kAnchorMultiplicative, c.holds), n, m, l);
        slacks[c.name] = to_string(c.slack);
    }
    ordered_json rec;
    rec["kind"] = "identities";
    rec["n"] = n;
    rec["m"] = m;
    rec["l"] = l;
    rec["slacks"] = std::move(slacks);
    report.add_result(std::move(rec));
}

// Exhaustive exact checks over N <= M <= L <= limit, aggregated into a few rows.
void exhaustive_bounds(Report& report, int limit) {
    std::int64_t triples = 0;
    std::int64_t failures = 0;
    for (int n = 1; n <= limit; ++n) {
        for (int m = n; m <= limit; ++m) {
            const Rational eta_nm = eta_opt(n, m);
            for (int l = m; l <= limit; ++l) {
                ++triples;
                if (eta_nm * eta_opt(m, l) != eta_opt(n, l)) {
                    ++failures;
                }
            }
        }
    }
    add(report, check_exact("multiplicativity_all_triples_le_" + std::to_string(limit), kAnchorMultiplicative,
                            failures == 0));

    bool monotone = true;
    bool bloch_relation = true;
    for (int n = 1; n <= limit; ++n) {
        for (int m = n; m <= limit; ++m) {
            if (m > n && !(eta_opt(n, m) < eta_opt(n, m - 1))) {
                monotone = false;
            }
            if (n > 1 && !(eta_opt(n, m) > eta_opt(n - 1, m))) {
                monotone = false;
            }
            if (fidelity_opt(n, m) != (1 + eta_opt(n, m)) / 2) {
                bloch_relation = false;
            }
        }
    }
    add(report, check_exact("eta_monotone_le_" + std::to_string(limit), kAnchorEta, monotone));
    add(report, check_exact("fidelity_bloch_relation_le_" + std::to_string(limit), kAnchorFidelity, bloch_relation));

    bool cloning_beats_measurement = true;
    for (std::int64_t n : {1, 2, 3, 5, 10, 50}) {
        for (std::int64_t m : {std::int64_t{50}, std::int64_t{1000}, std::int64_t{1000000}}) {
            if (m >= n && !(eta_opt(n, m) > eta_meas_opt(n))) {
                cloning_beats_measurement = false;
            }
        }
    }
    add(report, check_exact("eta_opt_above_eta_meas_sampled_to_1e6", kAnchorEtaMeas, cloning_beats_measurement));

    ordered_json rec;
    rec["kind"] = "exhaustive-bounds";
    rec["limit"] = limit;
    rec["triples"] = triples;
    rec["multiplicativity_failures"] = failures;
    report.add_result(std::move(rec));
}

// ---------------------------------------------------------------------------
// Measure-and-prepare composition

void statement_b_cell(Report& report, const RunConfig& cfg, int m, int l) {
    Engine rng = SeedStream(cfg.seed).substream(kSectionStatementB).engine(cell_key(0, m, l));
    const PureQubitState psi = haar_random_pure(rng);
    const StatementBReport r = verify_statement_b(m, l, psi);
    const Rational predicted = (1 + eta_opt(m, l) * eta_meas_opt(l)) / 2;

    add(report, check_close("composed_fidelity", kAnchorStatementB, predicted, r.composed_fidelity, cfg.tol.estimation),
        {}, m, l);
    add(report, check_close("composed_equals_estimation", kAnchorEstimation, fidelity_meas_opt(m), r.composed_fidelity,
                            cfg.tol.estimation),
        {}, m, l);
    add(report, check_close("implied_cloner_eta", kAnchorEta, eta_opt(m, l), r.implied_cloner_eta, cfg.tol.estimation),
        {}, m, l);

    ordered_json rec;
    rec["kind"] = "statement-b";
    rec["m"] = m;
    rec["l"] = l;
    rec["composed_fidelity"] = r.composed_fidelity;
    rec["predicted_fidelity"] = to_string(predicted);
    rec["estimation_fidelity"] = to_string(fidelity_meas_opt(m));
    rec["implied_cloner_eta"] = r.implied_cloner_eta;
    report.add_result(std::move(rec));
}

// ---------------------------------------------------------------------------
// Mixed / entangled symmetric inputs

ComplexMatrix draw_mixed_input(int n, int index, Engine& rng) {
    for (int attempt = 0; attempt < 10000; ++attempt) {
        const ComplexMatrix coords = random_symmetric_dicke(n, 1 + index % (n + 1), rng);
        if (bloch_of(reduce_dicke(coords)).norm() >= kMinMixedBloch) {
            return coords;
        }
    }
    throw InternalError("could not draw a symmetric input with reduced Bloch length >= 0.1");
}

void mixed_input_suite(Report& report, const RunConfig& cfg, int count) {
    const SeedStream stream = SeedStream(cfg.seed).substream(kSectionMixed);
    double worst_clone = 0.0;
    double worst_measure = 0.0;
    double worst_spread = 0.0;
    double worst_residual = 0.0;
    double worst_trace = 0.0;
    double lowest_eig = 1.0;
    double longest_input = 0.0;
    double shortest_input = 1.0;
    for (int i = 0; i < count; ++i) {
        Engine rng = stream.engine(static_cast<std::uint64_t>(i));
        const int n = 1 + i % 3;
        const int m = n + 1 + (i / 3) % 4;
        const DensityOperator input = embed_dicke(draw_mixed_input(n, i, rng));
        const CloneReport r = measure_shrinking(CloneChannel(n, m), input);
        const BlochVector expected = r.input_bloch.scaled(to_double(eta_opt(n, m)));
        worst_clone = std::max(worst_clone, r.output_bloch.max_abs_diff(expected));
        worst_spread = std::max(worst_spread, r.reduction_spread);
        worst_residual = std::max(worst_residual, r.output_symmetric_residual);
        worst_trace = std::max(worst_trace, r.trace_error);
        lowest_eig = std::min(lowest_eig, r.min_output_eigenvalue);
        longest_input = std::max(longest_input, r.input_bloch.norm());
        shortest_input = std::min(shortest_input, r.input_bloch.norm());

        const int copies = 1 + i % 6;
        const ComplexMatrix coords = draw_mixed_input(copies, i, rng);
        const DensityOperator rho_m = embed_dicke(coords);
        const BlochVector s_in = bloch_of(reduce_to_qubit(rho_m, 0));
        const BlochVector s_bar = bloch_of(measure_and_prepare_channel(copies, rho_m));
        worst_measure = std::max(worst_measure, s_bar.max_abs_diff(s_in.scaled(to_double(eta_meas_opt(copies)))));
    }
    add(report, check_below("mixed_input_cloner_bloch", kAnchorChannel, worst_clone, cfg.tol.physics));
    add(report, check_below("mixed_input_measure_prepare_bloch", kAnchorRhoBar, worst_measure, cfg.tol.physics));
    add(report, check_below("mixed_input_trace_error", kAnchorChannel, worst_trace, cfg.tol.structural));
    add(report, check_at_least("mixed_input_min_eigenvalue", kAnchorChannel, lowest_eig, tol::kPositivity));
    add(report, check_below("mixed_input_symmetric_residual", kAnchorSymmetric, worst_residual, kSupportTol));
    add(report, check_below("mixed_input_reduction_spread", kAnchorSymmetric, worst_spread, kSupportTol));

    ordered_json rec;
    rec["kind"] = "mixed-inputs";
    rec["count"] = count;
    rec["worst_cloner_bloch_error"] = worst_clone;
    rec["worst_measure_prepare_bloch_error"] = worst_measure;
    rec["input_bloch_length_range"] = ordered_json::array({shortest_input, longest_input});
    report.add_result(std::move(rec));
}

void pseudo_mixture_suite(Report& report, const RunConfig& cfg, int count) {
    const SeedStream stream = SeedStream(cfg.seed).substream(kSectionPseudoMixture);
    double worst_reconstruction = 0.0;
    double worst_sum = 0.0;
    double most_negative = 0.0;
    int with_negative = 0;
    for (int i = 0; i < count; ++i) {
        Engine rng = stream.engine(static_cast<std::uint64_t>(i));
        const int n = 1 + i % 4;
        const DensityOperator rho = embed_dicke(random_symmetric_dicke(n, 1 + i % (n + 1), rng));
        const PseudoMixture pm = pseudo_mixture_decompose(rho);
        worst_reconstruction = std::max(worst_reconstruction, max_abs(pm.reconstruct() - rho.matrix()));
        worst_sum = std::max(worst_sum, std::abs(pm.weight_sum() - 1.0));
        most_negative = std::min(most_negative, pm.min_weight());
        with_negative += pm.negative_count() > 0 ? 1 : 0;
    }
    add(report, check_below("pseudo_mixture_reconstruction", kAnchorPseudo, worst_reconstruction, cfg.tol.physics));
    add(report, check_below("pseudo_mixture_weight_sum", kAnchorPseudo, worst_sum, 1e-10));
    add(report, check_exact("pseudo_mixture_has_negative_weight", kAnchorPseudo, with_negative > 0));

    ordered_json rec;
    rec["kind"] = "pseudo-mixture";
    rec["count"] = count;
    rec["worst_reconstruction_error"] = worst_reconstruction;
    rec["worst_weight_sum_error"] = worst_sum;
    rec["most_negative_weight"] = most_negative;
    rec["cases_with_negative_weight"] = with_negative;
    report.add_result(std::move(rec));
}

template <typename Body>
Report timed(const RunConfig& cfg, const char* name, Body body) {
    const auto start = std::chrono::steady_clock::now();
    Report report(name);
    report.set_config(config_json(cfg));
    body(report);
    if (cfg.timing) {
        report.set_wall_seconds(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
    }
    return report;
}

}  // namespace

const char* to_string(Command c) {
    switch (c) {
        case Command::kBounds:
            return "bounds";
        case Command::kClone:
            return "clone";
        case Command::kEstimate:
            return "estimate";
        case Command::kConcat:
            return "concat";
        case Command::kVerifyAll:
            return "verify-all";
    }
    return "?";
}

const char* to_string(OutputFormat f) {
    switch (f) {
        case OutputFormat::kJson:
            return "json";
        case OutputFormat::kCsv:
            return "csv";
        case OutputFormat::kTable:
            return "table";
    }
    return "?";
}

void validate(const RunConfig& cfg) {
    auto positive = [](const std::optional<int>& v, const char* name) {
        if (v && *v < 1) {
            throw ArgumentError(std::string("--") + name + " must be at least 1");
        }
    };
    positive(cfg.n, "n");
    positive(cfg.m, "m");
    positive(cfg.l, "l");
    positive(cfg.samples, "samples");
    if (cfg.n && cfg.m && *cfg.n > *cfg.m) {
        throw ArgumentError("require n <= m");
    }
    if (cfg.m && cfg.l && *cfg.m > *cfg.l) {
        throw ArgumentError("require m <= l");
    }
    if (cfg.n && cfg.l && *cfg.n > *cfg.l) {
        throw ArgumentError("require n <= l");
    }
    if (!(cfg.tol.physics > 0) || !(cfg.tol.structural > 0) || !(cfg.tol.estimation > 0) || !(cfg.tol.mc_sigmas > 0)) {
        throw ArgumentError("tolerances must be positive");
    }
    switch (cfg.command) {
        case Command::kBounds:
            if (cfg.l && !(cfg.n && cfg.m)) {
                throw ArgumentError("bounds: --l requires --n and --m");
            }
            if (cfg.n.has_value() != cfg.m.has_value()) {
                throw ArgumentError("bounds: give both --n and --m, or neither for the full grid");
            }
            break;
        case Command::kClone:
            if (!cfg.n || !cfg.m) {
                throw ArgumentError("clone: --n and --m are required");
            }
            if (*cfg.m > kMaxDickeQubits) {
                throw ArgumentError("clone: --m at most " + std::to_string(kMaxDickeQubits));
            }
            if (*cfg.n > kMaxFullSpaceQubits) {
                throw ArgumentError("clone: --n at most " + std::to_string(kMaxFullSpaceQubits));
            }
            if (cfg.samples && *cfg.samples < 2) {
                throw ArgumentError("clone: --samples must be at least 2");
            }
            break;
        case Command::kEstimate:
            if (cfg.m && *cfg.m > kMaxExactEstimationCopies) {
                throw ArgumentError("estimate: --m at most " + std::to_string(kMaxExactEstimationCopies));
            }
            break;
        case Command::kConcat:
            if (!cfg.n || !cfg.m || !cfg.l) {
                throw ArgumentError("concat: --n, --m and --l are required");
            }
            if (*cfg.l > kMaxFullSpaceCloneQubits) {
                throw ArgumentError("concat: --l at most " + std::to_string(kMaxFullSpaceCloneQubits));
            }
            break;
        case Command::kVerifyAll:
            break;
    }
}

Report run_bounds(const RunConfig& cfg) {
    return timed(cfg, "bounds", [&](Report& report) {
        auto row = [&](int n, int m) {
            const Rational eta = eta_opt(n, m);
            const Rational fid = fidelity_opt(n, m);
            ordered_json rec;
            rec["kind"] = "ledger";
            rec["n"] = n;
            rec["m"] = m;
            rec["eta"] = to_string(eta);
            rec["eta_float"] = to_double(eta);
            rec["fidelity"] = to_string(fid);
            rec["fidelity_float"] = to_double(fid);
            rec["eta_meas_n"] = to_string(eta_meas_opt(n));
            rec["fidelity_meas_n"] = to_string(fidelity_meas_opt(n));
            report.add_result(std::move(rec));
            add(report, check_exact("fidelity_bloch_relation", kAnchorFidelity, fid == (1 + eta) / 2), n, m);
            add(report, check_exact("upper_bound_saturated", kAnchorEta, eta == eta_meas_opt(n) / eta_meas_opt(m)), n,
                m);
        };
        if (cfg.n && cfg.m) {
            row(*cfg.n, *cfg.m);
            if (cfg.l) {
                identity_cell(report, *cfg.n, *cfg.m, *cfg.l);
            }
        } else {
            for (int n = 1; n <= 8; ++n) {
                for (int m = n; m <= 8; ++m) {
                    row(n, m);
                }
            }
            exhaustive_bounds(report, 50);
        }
    });
}

Report run_clone(const RunConfig& cfg) {
    validate(cfg);
    return timed(cfg, "clone", [&](Report& report) {
        clone_cell(report, cfg, *cfg.n, *cfg.m, cfg.samples.value_or(kDefaultCloneSamples));
    });
}

Report run_estimate(const RunConfig& cfg) {
    validate(cfg);
    return timed(cfg, "estimate", [&](Report& report) {
        const int shots = cfg.samples.value_or(kDefaultMonteCarloShots);
        if (cfg.m) {
            estimate_exact_cell(report, cfg, *cfg.m);
            if (*cfg.m <= kMaxFullSpaceEstimationCopies) {
                estimate_mc_cell(report, cfg, *cfg.m, shots);
            }
        } else {
            for (int m = 1; m <= 5; ++m) {
                estimate_exact_cell(report, cfg, m);
            }
            for (int m = 1; m <= 3; ++m) {
                estimate_mc_cell(report, cfg, m, shots);
            }
        }
    });
}

Report run_concat(const RunConfig& cfg) {
    validate(cfg);
    return timed(cfg, "concat", [&](Report& report) {
        concat_cell(report, cfg, *cfg.n, *cfg.m, *cfg.l);
        identity_cell(report, *cfg.n, *cfg.m, *cfg.l);
    });
}

Report run_verify_all(const RunConfig& cfg) {
    validate(cfg);
    return timed(cfg, "verify-all", [&](Report& report) {
        const int samples = cfg.samples.value_or(kDefaultCloneSamples);
        for (int n = 1; n <= 4; ++n) {
            for (int m = n; m <= 8; ++m) {
                clone_cell(report, cfg, n, m, samples);
            }
        }
        for (int n = 1; n <= 8; ++n) {
            for (int m = n; m <= 8; ++m) {
                for (int l = m; l <= 8; ++l) {
                    concat_cell(report, cfg, n, m, l);
                }
            }
        }
        exhaustive_bounds(report, 50);
        for (int m = 1; m <= 5; ++m) {
            estimate_exact_cell(report, cfg, m);
        }
        for (int m = 1; m <= 3; ++m) {
            estimate_mc_cell(report, cfg, m, kDefaultMonteCarloShots);
        }
        for (int m = 1; m <= 2; ++m) {
            for (int l = m; l <= 6; ++l) {
                statement_b_cell(report, cfg, m, l);
            }
        }
        mixed_input_suite(report, cfg, 50);
        pseudo_mixture_suite(report, cfg, 50);
    });
}

Report run(const RunConfig& cfg) {
    validate(cfg);
    switch (cfg.command) {
        case Command::kBounds:
            return run_bounds(cfg);
        case Command::kClone:
            return run_clone(cfg);
        case Command::kEstimate:
            return run_estimate(cfg);
        case Command::kConcat:
            return run_concat(cfg);
        case Command::kVerifyAll:
            return run_verify_all(cfg);
    }
    throw InternalError("unknown command");
}

void write_report(const Report& report, OutputFormat format, std::ostream& os, bool color) {
    switch (format) {
        case OutputFormat::kJson:
            report.write_json(os);
            break;
        case OutputFormat::kCsv:
            report.write_csv(os);
            break;
        case OutputFormat::kTable:
            report.write_table(os, color);
            break;
    }
}

}  // namespace qclone
