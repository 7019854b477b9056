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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on failure.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "qclone/bounds.hpp"
#include "qclone/cloner.hpp"
#include "qclone/estimator.hpp"
#include "qclone/symspace.hpp"
#include "qclone/verify.hpp"

using namespace qclone;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok && pass) {
            pass = false;
            detail = what;
        }
    }
};

std::string cell(int n, int m, int l = 0) {
    std::string s = "(" + std::to_string(n) + "," + std::to_string(m);
    if (l) s += "," + std::to_string(l);
    return s + ")";
}

// Structural checks shared by every channel output (criterion 7).
struct Sanity {
    long inputs = 0;
    double worst_trace = 0.0;
    double worst_eig = 0.0;
    double worst_support = 0.0;
    double worst_spread = 0.0;

    void record(const CloneReport& r) {
        ++inputs;
        worst_trace = std::max(worst_trace, r.trace_error);
        worst_eig = std::min(worst_eig, r.min_output_eigenvalue);
        worst_support = std::max(worst_support, r.output_symmetric_residual);
        worst_spread = std::max(worst_spread, r.reduction_spread);
    }
    void record(const DensityOperator& out) {
        ++inputs;
        worst_trace = std::max(worst_trace, out.trace_error());
        worst_eig = std::min(worst_eig, out.min_eigenvalue());
        const int m = out.num_qubits();
        worst_support = std::max(worst_support, symmetric_support_residual(out.matrix(), m));
        const ComplexMatrix first = reduce_to_qubit(out, 0).matrix();
        for (int q = 1; q < m; ++q) {
            worst_spread = std::max(worst_spread, max_abs(reduce_to_qubit(out, q).matrix() - first));
        }
    }
};

Sanity g_sanity;

double eta_double(int n, int m) { return to_double(eta_opt(n, m)); }

Outcome criterion_shrinking_grid() {
    Outcome o;
    for (int n = 1; n <= 4; ++n) {
        for (int m = n; m <= 8; ++m) {
            CloneReport r = certify_universality(CloneChannel(n, m), 50, 100 + 16 * n + m);
            g_sanity.record(r);
            o.require(std::abs(r.eta_measured - eta_double(n, m)) < 1e-9, "eta mismatch at " + cell(n, m));
            o.require(r.universality_spread < 1e-9, "spread too large at " + cell(n, m));
        }
    }
    return o;
}

Outcome criterion_fidelity() {
    Outcome o;
    const Rational five_sixths = Rational(5) / 6;
    o.require(fidelity_opt(1, 2) == five_sixths, "ledger F(1,2) != 5/6");
    for (int n = 1; n <= 4; ++n) {
        for (int m = n; m <= 8; ++m) {
            const Rational exact = Rational(n * m + n + m) / Rational(m * (n + 2));
            o.require(fidelity_opt(n, m) == exact, "ledger fidelity formula at " + cell(n, m));
            CloneReport r = certify_universality(CloneChannel(n, m), 10, 900 + 16 * n + m);
            o.require(cross_check(r.fidelity_measured, exact, 1e-9), "simulated fidelity at " + cell(n, m));
        }
    }
    return o;
}

Outcome criterion_estimation() {
    Outcome o;
    Engine rng(2024);
    for (int m = 1; m <= 5; ++m) {
        EstimationReport r = estimation_fidelity_exact(m, haar_random_pure(rng));
        o.require(std::abs(r.fidelity_measured - (m + 1.0) / (m + 2.0)) < 1e-8, "exact estimation at M=" +
                                                                                     std::to_string(m));
    }
    for (int m = 1; m <= 3; ++m) {
        EstimationReport r = estimate_monte_carlo(m, haar_random_pure(rng), 100000, 31 + m);
        o.require(std::abs(r.fidelity_measured - (m + 1.0) / (m + 2.0)) < 4.0 * r.statistical_error,
                  "Monte Carlo outside 4 SE at M=" + std::to_string(m));
    }
    return o;
}

Outcome criterion_concatenation() {
    Outcome o;
    Engine rng(77);
    for (int n = 1; n <= 7; ++n) {
        for (int m = n; m <= 7; ++m) {
            for (int l = m; l <= 7; ++l) {
                const PureQubitState psi = haar_random_pure(rng);
                const DensityOperator in = DensityOperator::tensor_power(psi, n);
                const DensityOperator chained = concat_channels(CloneChannel(n, m), CloneChannel(m, l), in);
                g_sanity.record(chained);
                const double eta_chain = bloch_of(reduce_to_qubit(chained, 0)).dot(psi.bloch());
                const double eta_nm = measure_shrinking(CloneChannel(n, m), in).eta_measured;
                const DensityOperator mid = DensityOperator::tensor_power(psi, m);
                const double eta_ml = measure_shrinking(CloneChannel(m, l), mid).eta_measured;
                const double eta_direct = measure_shrinking(CloneChannel(n, l), in).eta_measured;
                o.require(std::abs(eta_chain - eta_nm * eta_ml) < 1e-9, "chain != product at " + cell(n, m, l));
                o.require(std::abs(eta_chain - eta_direct) < 1e-9, "chain != direct at " + cell(n, m, l));
            }
        }
    }
    for (int n = 1; n <= 50 && o.pass; ++n) {
        for (int m = n; m <= 50; ++m) {
            const Rational e = eta_opt(n, m);
            for (int l = m; l <= 50; ++l) {
                o.require(e * eta_opt(m, l) == eta_opt(n, l), "exact identity at " + cell(n, m, l));
            }
        }
    }
    return o;
}

Outcome criterion_statement_b() {
    Outcome o;
    const PureQubitState psi = PureQubitState::from_angles(1.234, 0.567);
    for (int m = 1; m <= 2; ++m) {
        const double target = (m + 1.0) / (m + 2.0);
        for (int l = m; l <= 6; ++l) {
            StatementBReport r = verify_statement_b(m, l, psi);
            const double predicted = 0.5 * (1.0 + eta_double(m, l) * to_double(eta_meas_opt(l)));
            o.require(std::abs(r.composed_fidelity - predicted) < 1e-8, "composition at " + cell(m, l));
            o.require(std::abs(r.composed_fidelity - target) < 1e-8, "not equal to F_meas at " + cell(m, l));
        }
    }
    return o;
}

ComplexMatrix mixed_symmetric(int n, Engine& rng) {
    for (;;) {
        ComplexMatrix coords = random_symmetric_dicke(n, 1 + static_cast<int>(rng() % (n + 1)), rng);
        if (bloch_of(reduce_dicke(coords)).norm() >= 0.1) return coords;
    }
}

Outcome criterion_mixed_inputs() {
    Outcome o;
    Engine rng(4242);
    for (int i = 0; i < 50; ++i) {
        const int n = 1 + i % 3;
        const int m = n + 1 + i % 4;
        const DensityOperator rho = embed_dicke(mixed_symmetric(n, rng));
        CloneReport r = measure_shrinking(CloneChannel(n, m), rho);
        g_sanity.record(r);
        const BlochVector expected = r.input_bloch.scaled(eta_double(n, m));
        o.require(r.output_bloch.max_abs_diff(expected) < 1e-9, "cloner scaling, sample " + std::to_string(i));
    }
    for (int i = 0; i < 50; ++i) {
        const int m = 1 + i % 5;
        const DensityOperator rho = embed_dicke(mixed_symmetric(m, rng));
        const BlochVector in = bloch_of(reduce_to_qubit(rho, 0));
        const BlochVector out = bloch_of(measure_and_prepare_channel(m, rho));
        o.require(out.max_abs_diff(in.scaled(m / (m + 2.0))) < 1e-9,
                  "measure-and-prepare scaling, sample " + std::to_string(i));
    }
    return o;
}

Outcome criterion_sanity() {
    Outcome o;
    o.require(g_sanity.inputs > 0, "no inputs recorded");
    o.require(g_sanity.worst_trace < 1e-12, "trace error " + std::to_string(g_sanity.worst_trace));
    o.require(g_sanity.worst_eig >= -1e-10, "negative eigenvalue " + std::to_string(g_sanity.worst_eig));
    o.require(g_sanity.worst_support < 1e-11, "support residual " + std::to_string(g_sanity.worst_support));
    o.require(g_sanity.worst_spread < 1e-11, "reduction spread " + std::to_string(g_sanity.worst_spread));
    if (o.pass) o.detail = std::to_string(g_sanity.inputs) + " outputs";
    return o;
}

Outcome criterion_pseudo_mixture() {
    Outcome o;
    Engine rng(8080);
    int negatives = 0;
    for (int i = 0; i < 50; ++i) {
        const int n = 1 + i % 4;
        const ComplexMatrix coords = random_symmetric_dicke(n, 1 + i % (n + 1), rng);
        const DensityOperator rho = embed_dicke(coords);
        const PseudoMixture mix = pseudo_mixture_decompose(rho);
        o.require(max_abs(mix.reconstruct().matrix() - rho.matrix()) < 1e-9,
                  "reconstruction, sample " + std::to_string(i));
        o.require(std::abs(mix.weight_sum() - 1.0) < 1e-10, "weight sum, sample " + std::to_string(i));
        if (mix.negative_count() > 0) ++negatives;
    }
    o.require(negatives > 0, "no negative weight observed");
    if (o.pass) o.detail = std::to_string(negatives) + "/50 with negative weights";
    return o;
}

Outcome criterion_determinism() {
    Outcome o;
    RunConfig cfg;
    cfg.command = Command::kVerifyAll;
    cfg.seed = 1;
    const Report a = run(cfg);
    const Report b = run(cfg);
    o.require(a.all_pass(), std::to_string(a.failures().size()) + " verify-all checks failed");
    o.require(a.to_json().dump(2) == b.to_json().dump(2), "reports differ");
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
        {"1 optimal shrinking factor grid", criterion_shrinking_grid},
        {"2 optimal fidelity values", criterion_fidelity},
        {"3 estimation fidelity", criterion_estimation},
        {"4 concatenation multiplicativity", criterion_concatenation},
        {"5 composition with measure-and-prepare", criterion_statement_b},
        {"6 mixed and entangled symmetric inputs", criterion_mixed_inputs},
        {"7 channel sanity", criterion_sanity},
        {"8 pseudo-mixture decomposition", criterion_pseudo_mixture},
        {"9 determinism", criterion_determinism},
    };
    int failed = 0;
    for (const auto& [name, fn] : criteria) {
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        std::printf("%s: %s%s%s\n", o.pass ? "PASS" : "FAIL", name, o.detail.empty() ? "" : " -- ",
                    o.detail.c_str());
        std::fflush(stdout);
        if (!o.pass) ++failed;
    }
    return failed == 0 ? 0 : 1;
}
