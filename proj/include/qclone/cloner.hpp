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

// Universal symmetric N -> M qubit cloning channel
//
//     rho_N  |->  (d_N / d_M) S_M (rho_N (x) 1^{(x)(M-N)}) S_M,   d_k = k + 1,
//
// together with shrinking-factor measurement, universality certification
// over random inputs, and channel concatenation.
//
// Two evaluation routes are provided. The full-space route builds the
// 2^M-dimensional operator (M <= kMaxFullSpaceCloneQubits) and is the
// reference. The Dicke route works on (N+1)x(N+1) -> (M+1)x(M+1) Dicke
// coordinates using closed-form matrix elements and reaches M <= 60.

#include <cstdint>
#include <vector>

#include "qclone/linalg.hpp"

namespace qclone {

inline constexpr int kMaxFullSpaceCloneQubits = 12;

class CloneChannel {
   public:
    /// Requires 1 <= n_in <= m_out <= kMaxDickeQubits.
    CloneChannel(int n_in, int m_out);

    int n_in() const { return n_in_; }
    int m_out() const { return m_out_; }

    /// Closed-form optimal shrinking factor N(M+2) / (M(N+2)) in floating point.
    double eta_predicted() const;

   private:
    int n_in_;
    int m_out_;
};

/// Full-space route. The input must have n_in qubits and symmetric support
/// (residual < 1e-10).
DensityOperator apply_cloner(const CloneChannel& ch, const DensityOperator& rho_n);

/// Dicke-coordinate route: (n_in+1)^2 coordinates in, (m_out+1)^2 out.
ComplexMatrix apply_cloner_dicke(const CloneChannel& ch, const ComplexMatrix& coords);

struct CloneReport {
    int n_in = 0;
    int m_out = 0;
    double eta_measured = 0.0;
    double eta_predicted = 0.0;
    /// <psi|rho_out|psi> with psi the pure state along the input Bloch direction.
    double fidelity_measured = 0.0;
    /// max - min of eta_measured over the sampled inputs (0 for a single input).
    double universality_spread = 0.0;
    /// Largest angle (radians) between input and output Bloch vectors.
    double orientation_deviation = 0.0;
    double output_symmetric_residual = 0.0;
    /// Largest max-entry difference between any two single-qubit reductions.
    double reduction_spread = 0.0;
    double trace_error = 0.0;
    double min_output_eigenvalue = 0.0;
    /// Largest |rho - rho^dagger| before Hermitization of the channel output.
    double hermiticity_drift = 0.0;
    int samples = 1;
    BlochVector input_bloch;
    BlochVector output_bloch;
};

/// Applies the channel and measures eta = |s_out| / |s_in| on the single-qubit
/// reductions. Throws DegenerateInputError if |s_in| < 1e-6 and InternalError
/// if the output Bloch vector is rotated by more than 1e-9 rad.
CloneReport measure_shrinking(const CloneChannel& ch, const DensityOperator& rho_n);

/// Same measurement on Dicke coordinates (no full-space checks; reductions
/// are identical by construction).
CloneReport measure_shrinking_dicke(const CloneChannel& ch, const ComplexMatrix& coords);

/// Runs measure_shrinking on n_samples Haar-random tensor-power inputs drawn
/// from SeedStream(seed), aggregating worst cases. Samples are distributed over
/// worker threads; the result does not depend on the thread count.
CloneReport certify_universality(const CloneChannel& ch, int n_samples, std::uint64_t seed);

/// apply_cloner(second, apply_cloner(first, rho_n)); requires first.m_out() == second.n_in().
DensityOperator concat_channels(const CloneChannel& first, const CloneChannel& second, const DensityOperator& rho_n);

}  // namespace qclone
