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

#pragma once

// Optimal covariant state estimation on m copies of an unknown qubit.
//
// The measurement is the continuous covariant family
//     P_phi = (m+1) |phi><phi|^{(x) m} dmu(phi)
// on the symmetric subspace, with dmu the normalized Haar measure. Exact mode
// integrates with a product quadrature that is exact for the polynomial
// integrands involved; Monte Carlo mode draws candidate states from the
// outcome density by rejection against Haar proposals.

#include <cstdint>
#include <optional>
#include <vector>

#include "qclone/linalg.hpp"

namespace qclone {

inline constexpr int kMaxExactEstimationCopies = 20;
inline constexpr int kMaxFullSpaceEstimationCopies = 12;
inline constexpr int kMaxStatementBQubits = 10;

enum class EstimationMode { kExactQuadrature, kMonteCarlo };

const char* to_string(EstimationMode mode);

struct CovariantPovm {
    int m_copies = 1;
    EstimationMode mode = EstimationMode::kExactQuadrature;
    int polar_nodes = 0;
    int azimuth_nodes = 0;
    int n_shots = 0;

    static CovariantPovm exact(int m);
    static CovariantPovm monte_carlo(int m, int n_shots);

    /// Quadrature of the POVM density in Dicke coordinates; equals the
    /// (m+1)-dimensional identity when the family is complete.
    ComplexMatrix completeness_dicke() const;
    /// Same on the full 2^m space (m <= kMaxFullSpaceEstimationCopies); equals S_m.
    ComplexMatrix completeness() const;
};

struct EstimationReport {
    int m_copies = 0;
    double fidelity_measured = 0.0;
    double fidelity_predicted = 0.0;
    double eta_measured = 0.0;
    double eta_predicted = 0.0;
    ComplexMatrix rho_bar;
    EstimationMode mode = EstimationMode::kExactQuadrature;
    int polar_nodes = 0;
    int azimuth_nodes = 0;
    int n_shots = 0;
    std::uint64_t seed = 0;
    std::uint64_t proposals = 0;
    double statistical_error = 0.0;
    /// Angle between the reconstruction's Bloch vector and the true one.
    double orientation_deviation = 0.0;

    DensityOperator rho_bar_operator() const;
};

/// Average fidelity of the covariant measurement on |psi>^{(x) m} by exact
/// quadrature (1 <= m <= kMaxExactEstimationCopies).
EstimationReport estimation_fidelity_exact(int m, const PureQubitState& psi);

/// Monte Carlo estimate of the same quantity from n_shots sampled candidates
/// (m <= kMaxFullSpaceEstimationCopies).
EstimationReport estimate_monte_carlo(int m, const PureQubitState& psi, int n_shots, std::uint64_t seed);

/// rho_bar = int dmu(phi) Tr(P_phi rho_m) |phi><phi| for a symmetric-support rho_m.
DensityOperator measure_and_prepare_channel(int m, const DensityOperator& rho_m);

/// Same, with rho_m in Dicke coordinates; returns the 2x2 output.
ComplexMatrix measure_and_prepare_dicke(const ComplexMatrix& coords);

struct StatementBReport {
    int m = 0;
    int l = 0;
    double composed_fidelity = 0.0;
    /// 1/2 (1 + eta(M,L) * eta_meas(L)) from the closed forms.
    double predicted_fidelity = 0.0;
    /// (M+1)/(M+2): direct optimal estimation on the M originals.
    double estimation_fidelity = 0.0;
    /// (2F - 1) / eta_meas(L): the cloner's shrinking factor implied by the composition.
    double implied_cloner_eta = 0.0;
    double cloner_eta_predicted = 0.0;
};

/// Composes the M -> L cloner with the L-copy measure-and-prepare channel on
/// |psi>^{(x) M}. Requires 1 <= M <= L <= kMaxStatementBQubits.
StatementBReport verify_statement_b(int m, int l, const PureQubitState& psi);

struct StatementBSweep {
    std::vector<StatementBReport> points;
    /// Largest |F_L - F_L'| over the sweep.
    double fidelity_variation = 0.0;
    /// 2 F - 1 at the largest L: approaches eta(M, infinity) as eta_meas(L) -> 1.
    double limit_eta = 0.0;
};

StatementBSweep sweep_statement_b(int m, const std::vector<int>& ls, const PureQubitState& psi);

}  // namespace qclone
