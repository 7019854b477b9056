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

#include "qclone/estimator.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qclone/cloner.hpp"
#include "qclone/errors.hpp"
#include "qclone/quadrature.hpp"
#include "qclone/symspace.hpp"

namespace qclone {

namespace {

constexpr std::uint64_t kMaxProposalsPerShot = 10'000'000;

void require_exact_copies(int m, const char* what) {
    if (m < 1 || m > kMaxExactEstimationCopies) {
        throw ArgumentError(std::string(what) + ": copy count " + std::to_string(m) + " outside [1, " +
                            std::to_string(kMaxExactEstimationCopies) + "]");
    }
}

void finish_report(EstimationReport& r, const PureQubitState& psi) {
    const Eigen::Vector2cd v = psi.vector();
    r.fidelity_measured = (v.adjoint() * r.rho_bar * v)(0, 0).real();
    const BlochVector s_bar = bloch_of(r.rho_bar);
    r.eta_measured = s_bar.norm();
    r.orientation_deviation = r.eta_measured == 0.0 ? 0.0 : angle_between(s_bar, psi.bloch());
    const double m = r.m_copies;
    r.fidelity_predicted = (m + 1.0) / (m + 2.0);
    r.eta_predicted = m / (m + 2.0);
}

}  // namespace

const char* to_string(EstimationMode mode) {
    return mode == EstimationMode::kExactQuadrature ? "exact-quadrature" : "monte-carlo";
}

CovariantPovm CovariantPovm::exact(int m) {
    require_exact_copies(m, "CovariantPovm::exact");
    CovariantPovm p;
    p.m_copies = m;
    p.mode = EstimationMode::kExactQuadrature;
    p.polar_nodes = estimation_polar_nodes(m);
    p.azimuth_nodes = estimation_azimuth_nodes(m);
    return p;
}

CovariantPovm CovariantPovm::monte_carlo(int m, int n_shots) {
    if (m < 1 || m > kMaxFullSpaceEstimationCopies || n_shots < 1) {
        throw ArgumentError("CovariantPovm::monte_carlo: bad copy count or shot count");
    }
    CovariantPovm p;
    p.m_copies = m;
    p.mode = EstimationMode::kMonteCarlo;
    p.n_shots = n_shots;
    return p;
}

ComplexMatrix CovariantPovm::completeness_dicke() const {
    if (mode != EstimationMode::kExactQuadrature) {
        throw ArgumentError("completeness is evaluated by quadrature only");
    }
    CompensatedMatrixSum acc(m_copies + 1, m_copies + 1);
    for (const SphereNode& node : sphere_rule(polar_nodes, azimuth_nodes)) {
        const ComplexVector v = tensor_power_dicke(node.state, m_copies);
        acc.add((node.weight * (m_copies + 1.0)) * (v * v.adjoint()));
    }
    return acc.value();
}

ComplexMatrix CovariantPovm::completeness() const {
    if (m_copies > kMaxFullSpaceEstimationCopies) {
        throw ArgumentError("CovariantPovm::completeness: full space limited to 12 copies");
    }
    if (mode != EstimationMode::kExactQuadrature) {
        throw ArgumentError("completeness is evaluated by quadrature only");
    }
    const Eigen::Index dim = Eigen::Index{1} << m_copies;
    CompensatedMatrixSum acc(dim, dim);
    for (const SphereNode& node : sphere_rule(polar_nodes, azimuth_nodes)) {
        const ComplexVector v = tensor_power(node.state.vector(), m_copies);
        acc.add((node.weight * (m_copies + 1.0)) * (v * v.adjoint()));
    }
    return acc.value();
}

DensityOperator EstimationReport::rho_bar_operator() const {
    return DensityOperator::from_matrix(rho_bar);
}

EstimationReport estimation_fidelity_exact(int m, const PureQubitState& psi) {
    const CovariantPovm povm = CovariantPovm::exact(m);
    CompensatedMatrixSum acc(2, 2);
    for (const SphereNode& node : sphere_rule(povm.polar_nodes, povm.azimuth_nodes)) {
        // Outcome density relative to Haar: (m+1) |<psi|phi>|^{2m}.
        const double likelihood = (m + 1.0) * std::pow(psi.overlap(node.state), m);
        acc.add((node.weight * likelihood) * node.state.projector());
    }
    EstimationReport r;
    r.m_copies = m;
    r.mode = EstimationMode::kExactQuadrature;
    r.polar_nodes = povm.polar_nodes;
    r.azimuth_nodes = povm.azimuth_nodes;
    r.rho_bar = acc.value();
    finish_report(r, psi);
    return r;
}

EstimationReport estimate_monte_carlo(int m, const PureQubitState& psi, int n_shots, std::uint64_t seed) {
    const CovariantPovm povm = CovariantPovm::monte_carlo(m, n_shots);
    const SeedStream stream(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);

    double fid_sum = 0.0;
    double fid_sq_sum = 0.0;
    std::uint64_t proposals = 0;
    ComplexMatrix rho_sum = ComplexMatrix::Zero(2, 2);
    for (int shot = 0; shot < povm.n_shots; ++shot) {
        Engine rng = stream.engine(static_cast<std::uint64_t>(shot));
        std::uint64_t attempts = 0;
        while (true) {
            if (attempts == kMaxProposalsPerShot) {
                throw InternalError("estimate_monte_carlo: no candidate accepted after " +
                                    std::to_string(kMaxProposalsPerShot) + " proposals");
            }
            ++attempts;
            const PureQubitState candidate = haar_random_pure(rng);
            const double f = psi.overlap(candidate);
            // Target density (m+1) f^m against envelope (m+1) times Haar.
            if (unif(rng) < std::pow(f, m)) {
                fid_sum += f;
                fid_sq_sum += f * f;
                rho_sum += candidate.projector();
                break;
            }
        }
        proposals += attempts;
    }

    EstimationReport r;
    r.m_copies = m;
    r.mode = EstimationMode::kMonteCarlo;
    r.n_shots = n_shots;
    r.seed = seed;
    r.proposals = proposals;
    r.rho_bar = rho_sum / static_cast<double>(n_shots);
    finish_report(r, psi);
    const double n = n_shots;
    const double mean = fid_sum / n;
    r.fidelity_measured = mean;
    if (n_shots > 1) {
        const double var = std::max(0.0, (fid_sq_sum - n * mean * mean) / (n - 1.0));
        r.statistical_error = std::sqrt(var / n);
    }
    return r;
}

ComplexMatrix measure_and_prepare_dicke(const ComplexMatrix& coords) {
    if (coords.rows() != coords.cols() || coords.rows() < 2) {
        throw ArgumentError("measure_and_prepare_dicke: coordinates must be square with dimension >= 2");
    }
    const int m = static_cast<int>(coords.rows()) - 1;
    const CovariantPovm povm = CovariantPovm::exact(m);
    CompensatedMatrixSum acc(2, 2);
    for (const SphereNode& node : sphere_rule(povm.polar_nodes, povm.azimuth_nodes)) {
        const ComplexVector v = tensor_power_dicke(node.state, m);
        const double likelihood = (m + 1.0) * (v.adjoint() * coords * v)(0, 0).real();
        acc.add((node.weight * likelihood) * node.state.projector());
    }
    ComplexMatrix out = acc.value();
    return 0.5 * (out + out.adjoint());
}

DensityOperator measure_and_prepare_channel(int m, const DensityOperator& rho_m) {
    if (m < 1 || m > kMaxFullSpaceEstimationCopies) {
        throw ArgumentError("measure_and_prepare_channel: copy count outside [1, 12]");
    }
    if (rho_m.num_qubits() != m) {
        throw ArgumentError("measure_and_prepare_channel: input has " + std::to_string(rho_m.num_qubits()) +
                            " qubits, expected " + std::to_string(m));
    }
    if (!is_symmetric_support(rho_m, 1e-10)) {
        throw ArgumentError("measure_and_prepare_channel: input is not supported on the symmetric subspace");
    }
    return DensityOperator::from_matrix(measure_and_prepare_dicke(project_dicke(rho_m)));
}

StatementBReport verify_statement_b(int m, int l, const PureQubitState& psi) {
    if (m < 1 || l < m || l > kMaxStatementBQubits) {
        throw ArgumentError("verify_statement_b: need 1 <= M <= L <= " + std::to_string(kMaxStatementBQubits));
    }
    const CloneChannel cloner(m, l);
    const DensityOperator clones = apply_cloner(cloner, DensityOperator::tensor_power(psi, m));
    const DensityOperator rho_bar = measure_and_prepare_channel(l, clones);

    StatementBReport r;
    r.m = m;
    r.l = l;
    r.composed_fidelity = pure_fidelity(psi, rho_bar);
    const double eta_meas_l = l / (l + 2.0);
    r.cloner_eta_predicted = cloner.eta_predicted();
    r.predicted_fidelity = 0.5 * (1.0 + r.cloner_eta_predicted * eta_meas_l);
    r.estimation_fidelity = (m + 1.0) / (m + 2.0);
    r.implied_cloner_eta = (2.0 * r.composed_fidelity - 1.0) / eta_meas_l;
    return r;
}

StatementBSweep sweep_statement_b(int m, const std::vector<int>& ls, const PureQubitState& psi) {
    if (ls.empty()) {
        throw ArgumentError("sweep_statement_b: no L values");
    }
    StatementBSweep sweep;
    for (int l : ls) {
        sweep.points.push_back(verify_statement_b(m, l, psi));
    }
    double lo = sweep.points.front().composed_fidelity;
    double hi = lo;
    const StatementBReport* largest = &sweep.points.front();
    for (const StatementBReport& p : sweep.points) {
        lo = std::min(lo, p.composed_fidelity);
        hi = std::max(hi, p.composed_fidelity);
        if (p.l > largest->l) {
            largest = &p;
        }
    }
    sweep.fidelity_variation = hi - lo;
    sweep.limit_eta = 2.0 * largest->composed_fidelity - 1.0;
    return sweep;
}

}  // namespace qclone
