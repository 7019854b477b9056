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

#include "qclone/cloner.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <thread>

#include "qclone/errors.hpp"
#include "qclone/symspace.hpp"

namespace qclone {

namespace {

constexpr double kInputSupportTol = 1e-10;
constexpr double kMinInputBloch = 1e-6;
constexpr double kMaxOrientationDeviation = 1e-9;
constexpr double kMaxHermiticityDrift = 1e-10;
// Full eigen-solves of the output are done up to this size; above it the
// spectrum is taken from the Dicke block plus the support residual.
constexpr int kFullEigenQubits = 8;

ComplexMatrix hermitize(ComplexMatrix m, double* drift) {
    const double d = hermiticity_error(m);
    if (drift != nullptr) {
        *drift = d;
    }
    if (d > kMaxHermiticityDrift) {
        throw InternalError("cloner output drifted from Hermiticity by " + std::to_string(d));
    }
    return 0.5 * (m + m.adjoint());
}

void fill_eta(CloneReport& r, const BlochVector& s_in, const BlochVector& s_out) {
    const double len_in = s_in.norm();
    if (len_in < kMinInputBloch) {
        throw DegenerateInputError("shrinking factor undefined: reduced input Bloch vector has length " +
                                   std::to_string(len_in));
    }
    r.input_bloch = s_in;
    r.output_bloch = s_out;
    r.eta_measured = s_out.norm() / len_in;
    r.orientation_deviation = s_out.norm() == 0.0 ? 0.0 : angle_between(s_in, s_out);
    if (r.orientation_deviation > kMaxOrientationDeviation) {
        throw InternalError("cloner rotated the Bloch vector by " + std::to_string(r.orientation_deviation) + " rad");
    }
    r.fidelity_measured = 0.5 * (1.0 + s_out.dot(s_in) / len_in);
}

}  // namespace

CloneChannel::CloneChannel(int n_in, int m_out) : n_in_(n_in), m_out_(m_out) {
    if (n_in < 1) {
        throw ArgumentError("CloneChannel: N must be at least 1");
    }
    if (m_out < n_in) {
        throw ArgumentError("CloneChannel: M = " + std::to_string(m_out) + " is smaller than N = " +
                            std::to_string(n_in));
    }
    if (m_out > kMaxDickeQubits) {
        throw ArgumentError("CloneChannel: M exceeds " + std::to_string(kMaxDickeQubits));
    }
}

double CloneChannel::eta_predicted() const {
    const double n = n_in_;
    const double m = m_out_;
    return n * (m + 2.0) / (m * (n + 2.0));
}

DensityOperator apply_cloner(const CloneChannel& ch, const DensityOperator& rho_n) {
    const int n = ch.n_in();
    const int m = ch.m_out();
    if (rho_n.num_qubits() != n) {
        throw ArgumentError("apply_cloner: input has " + std::to_string(rho_n.num_qubits()) + " qubits, channel expects " +
                            std::to_string(n));
    }
    if (m > kMaxFullSpaceCloneQubits) {
        throw ArgumentError("apply_cloner: full-space route limited to M <= " +
                            std::to_string(kMaxFullSpaceCloneQubits) + "; use apply_cloner_dicke");
    }
    if (symmetric_support_residual(rho_n.matrix(), n) >= kInputSupportTol) {
        throw ArgumentError("apply_cloner: input is not supported on the symmetric subspace");
    }

    // W = V_M^dagger (rho (x) 1_{M-N}) without materializing the Kronecker product:
    // (rho (x) 1)(x, y) = rho(x_hi, y_hi) [x_lo == y_lo].
    const ComplexMatrix& v = dicke_basis(m)->isometry();
    const int shift = m - n;
    const Eigen::Index dim_m = Eigen::Index{1} << m;
    const Eigen::Index dim_n = Eigen::Index{1} << n;
    const Eigen::Index lo_mask = (Eigen::Index{1} << shift) - 1;
    const ComplexMatrix& rho = rho_n.matrix();
    ComplexMatrix w = ComplexMatrix::Zero(m + 1, dim_m);
    for (Eigen::Index y = 0; y < dim_m; ++y) {
        const Eigen::Index yh = y >> shift;
        const Eigen::Index ylo = y & lo_mask;
        for (Eigen::Index xh = 0; xh < dim_n; ++xh) {
            const Complex r = rho(xh, yh);
            if (r == Complex(0.0)) {
                continue;
            }
            const Eigen::Index x = (xh << shift) | ylo;
            for (int j = 0; j <= m; ++j) {
                w(j, y) += std::conj(v(x, j)) * r;
            }
        }
    }
    const ComplexMatrix y = w * v;
    const double scale = (n + 1.0) / (m + 1.0);
    ComplexMatrix out = scale * (v * y * v.adjoint());
    out = hermitize(std::move(out), nullptr);
    return DensityOperator::from_matrix_unchecked_positivity(std::move(out));
}

ComplexMatrix apply_cloner_dicke(const CloneChannel& ch, const ComplexMatrix& coords) {
    const int n = ch.n_in();
    const int m = ch.m_out();
    if (coords.rows() != n + 1 || coords.cols() != n + 1) {
        throw ArgumentError("apply_cloner_dicke: coordinates must be (N+1)x(N+1)");
    }
    // |D^M_j> = sum_a sqrt(C(N,a) C(M-N,j-a) / C(M,j)) |D^N_a>|D^{M-N}_{j-a}>, so
    // <D^M_j| (|D^N_a><D^N_b| (x) 1) |D^M_k> is nonzero only for j-a = k-b = c.
    std::vector<double> cn(static_cast<std::size_t>(n + 1));
    std::vector<double> cm(static_cast<std::size_t>(m + 1));
    std::vector<double> cr(static_cast<std::size_t>(m - n + 1));
    for (int a = 0; a <= n; ++a) {
        cn[static_cast<std::size_t>(a)] = binomial(n, a);
    }
    for (int j = 0; j <= m; ++j) {
        cm[static_cast<std::size_t>(j)] = binomial(m, j);
    }
    for (int c = 0; c <= m - n; ++c) {
        cr[static_cast<std::size_t>(c)] = binomial(m - n, c);
    }
    const double scale = (n + 1.0) / (m + 1.0);
    ComplexMatrix out = ComplexMatrix::Zero(m + 1, m + 1);
    for (int c = 0; c <= m - n; ++c) {
        for (int a = 0; a <= n; ++a) {
            const int j = a + c;
            const double fa = std::sqrt(cn[static_cast<std::size_t>(a)] / cm[static_cast<std::size_t>(j)]);
            for (int b = 0; b <= n; ++b) {
                const int k = b + c;
                const double fb = std::sqrt(cn[static_cast<std::size_t>(b)] / cm[static_cast<std::size_t>(k)]);
                out(j, k) += coords(a, b) * (scale * cr[static_cast<std::size_t>(c)] * fa * fb);
            }
        }
    }
    return out;
}

CloneReport measure_shrinking_dicke(const CloneChannel& ch, const ComplexMatrix& coords) {
    CloneReport r;
    r.n_in = ch.n_in();
    r.m_out = ch.m_out();
    r.eta_predicted = ch.eta_predicted();
    ComplexMatrix out = hermitize(apply_cloner_dicke(ch, coords), &r.hermiticity_drift);
    r.trace_error = std::abs(out.trace() - Complex(1.0));
    r.min_output_eigenvalue = min_eigenvalue(out);
    fill_eta(r, bloch_of(reduce_dicke(coords)), bloch_of(reduce_dicke(out)));
    return r;
}

CloneReport measure_shrinking(const CloneChannel& ch, const DensityOperator& rho_n) {
    const int m = ch.m_out();
    if (m > kMaxFullSpaceCloneQubits) {
        if (rho_n.num_qubits() != ch.n_in()) {
            throw ArgumentError("measure_shrinking: input qubit count does not match channel");
        }
        if (!is_symmetric_support(rho_n, kInputSupportTol)) {
            throw ArgumentError("measure_shrinking: input is not supported on the symmetric subspace");
        }
        return measure_shrinking_dicke(ch, project_dicke(rho_n));
    }

    const DensityOperator out = apply_cloner(ch, rho_n);
    CloneReport r;
    r.n_in = ch.n_in();
    r.m_out = m;
    r.eta_predicted = ch.eta_predicted();
    r.trace_error = out.trace_error();
    r.output_symmetric_residual = symmetric_support_residual(out.matrix(), m);
    r.min_output_eigenvalue =
        m <= kFullEigenQubits ? out.min_eigenvalue() : min_eigenvalue(project_dicke(out));

    std::vector<ComplexMatrix> reductions;
    reductions.reserve(static_cast<std::size_t>(m));
    for (int q = 0; q < m; ++q) {
        reductions.push_back(reduce_to_qubit(out, q).matrix());
    }
    for (std::size_t p = 0; p < reductions.size(); ++p) {
        for (std::size_t q = p + 1; q < reductions.size(); ++q) {
            r.reduction_spread = std::max(r.reduction_spread, max_abs(reductions[p] - reductions[q]));
        }
    }
    fill_eta(r, bloch_of(reduce_to_qubit(rho_n, 0)), bloch_of(reductions.front()));
    return r;
}

CloneReport certify_universality(const CloneChannel& ch, int n_samples, std::uint64_t seed) {
    if (n_samples < 2) {
        throw ArgumentError("certify_universality: need at least 2 samples");
    }
    const SeedStream stream(seed);
    std::vector<CloneReport> per_sample(static_cast<std::size_t>(n_samples));
    auto work = [&](int begin, int end) {
        for (int i = begin; i < end; ++i) {
            Engine rng = stream.engine(static_cast<std::uint64_t>(i));
            const PureQubitState psi = haar_random_pure(rng);
            if (ch.m_out() <= kMaxFullSpaceCloneQubits) {
                per_sample[static_cast<std::size_t>(i)] =
                    measure_shrinking(ch, DensityOperator::tensor_power(psi, ch.n_in()));
            } else {
                const ComplexVector v = tensor_power_dicke(psi, ch.n_in());
                per_sample[static_cast<std::size_t>(i)] = measure_shrinking_dicke(ch, v * v.adjoint());
            }
        }
    };
    const int workers = std::clamp(static_cast<int>(std::thread::hardware_concurrency()), 1, n_samples);
    if (workers == 1) {
        work(0, n_samples);
    } else {
        std::vector<std::jthread> pool;
        const int chunk = (n_samples + workers - 1) / workers;
        for (int w = 0; w < workers; ++w) {
            const int begin = w * chunk;
            const int end = std::min(n_samples, begin + chunk);
            if (begin < end) {
                pool.emplace_back(work, begin, end);
            }
        }
    }

    CloneReport agg = per_sample.front();
    agg.samples = n_samples;
    double eta_sum = 0.0;
    double fid_sum = 0.0;
    double eta_lo = std::numeric_limits<double>::infinity();
    double eta_hi = -eta_lo;
    for (const CloneReport& r : per_sample) {
        eta_sum += r.eta_measured;
        fid_sum += r.fidelity_measured;
        eta_lo = std::min(eta_lo, r.eta_measured);
        eta_hi = std::max(eta_hi, r.eta_measured);
        agg.orientation_deviation = std::max(agg.orientation_deviation, r.orientation_deviation);
        agg.output_symmetric_residual = std::max(agg.output_symmetric_residual, r.output_symmetric_residual);
        agg.reduction_spread = std::max(agg.reduction_spread, r.reduction_spread);
        agg.trace_error = std::max(agg.trace_error, r.trace_error);
        agg.min_output_eigenvalue = std::min(agg.min_output_eigenvalue, r.min_output_eigenvalue);
        agg.hermiticity_drift = std::max(agg.hermiticity_drift, r.hermiticity_drift);
    }
    agg.eta_measured = eta_sum / n_samples;
    agg.fidelity_measured = fid_sum / n_samples;
    agg.universality_spread = eta_hi - eta_lo;
    return agg;
}

DensityOperator concat_channels(const CloneChannel& first, const CloneChannel& second, const DensityOperator& rho_n) {
    if (first.m_out() != second.n_in()) {
        throw ArgumentError("concat_channels: first stage outputs " + std::to_string(first.m_out()) +
                            " qubits but second stage expects " + std::to_string(second.n_in()));
    }
    return apply_cloner(second, apply_cloner(first, rho_n));
}

}  // namespace qclone
