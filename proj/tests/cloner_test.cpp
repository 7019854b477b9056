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

#include <gtest/gtest.h>

#include <cmath>

#include "qclone/errors.hpp"
#include "qclone/symspace.hpp"

using namespace qclone;

namespace {

// Brute force: materialize rho (x) 1 and the permutation-averaged symmetrizer.
ComplexMatrix cloner_oracle(const ComplexMatrix& rho, int n, int m) {
    ComplexMatrix x = rho;
    if (m > n) {
        const Eigen::Index blank = Eigen::Index{1} << (m - n);
        x = tensor_product(rho, ComplexMatrix::Identity(blank, blank));
    }
    const ComplexMatrix s = symmetrizer_by_permutations(m);
    return ((n + 1.0) / (m + 1.0)) * (s * x * s);
}

double eta_formula(int n, int m) {
    return static_cast<double>(n) * (m + 2) / (static_cast<double>(m) * (n + 2));
}

}  // namespace

TEST(CloneChannel, rejects_bad_dimensions) {
    EXPECT_THROW(CloneChannel(2, 1), ArgumentError);
    EXPECT_THROW(CloneChannel(0, 1), ArgumentError);
    EXPECT_THROW(CloneChannel(1, kMaxDickeQubits + 1), ArgumentError);
}

TEST(ApplyCloner, matches_brute_force_oracle) {
    Engine rng(31);
    for (auto [n, m] : {std::pair{1, 2}, {1, 3}, {2, 3}, {2, 4}, {1, 4}, {3, 5}}) {
        DensityOperator rho = embed_dicke(random_symmetric_dicke(n, 2, rng));
        DensityOperator out = apply_cloner(CloneChannel(n, m), rho);
        EXPECT_LT(max_abs(out.matrix() - cloner_oracle(rho.matrix(), n, m)), 1e-12) << n << "->" << m;
    }
}

TEST(ApplyCloner, identity_when_m_equals_n) {
    Engine rng(32);
    for (int n = 1; n <= 4; ++n) {
        DensityOperator rho = embed_dicke(random_symmetric_dicke(n, n + 1, rng));
        EXPECT_LT(max_abs(apply_cloner(CloneChannel(n, n), rho).matrix() - rho.matrix()), 1e-12);
    }
}

TEST(ApplyCloner, one_to_two_on_zero) {
    // Oracle value: the 4x4 brute-force construction reduces to diag(5/6, 1/6).
    const DensityOperator zero = DensityOperator::pure(PureQubitState::zero());
    const ComplexMatrix oracle = partial_trace(cloner_oracle(zero.matrix(), 1, 2), 2, {0});
    EXPECT_NEAR(oracle(0, 0).real(), 5.0 / 6.0, 1e-14);
    EXPECT_NEAR(oracle(1, 1).real(), 1.0 / 6.0, 1e-14);

    DensityOperator out = apply_cloner(CloneChannel(1, 2), zero);
    ComplexMatrix r = reduce_to_qubit(out, 0).matrix();
    EXPECT_NEAR(r(0, 0).real(), 5.0 / 6.0, 1e-12);
    EXPECT_NEAR(r(1, 1).real(), 1.0 / 6.0, 1e-12);
    EXPECT_NEAR(bloch_of(r).z, 2.0 / 3.0, 1e-12);
}

TEST(ApplyCloner, one_to_three_on_plus) {
    const DensityOperator plus = DensityOperator::pure(PureQubitState::plus());
    const double oracle_x = bloch_of(partial_trace(cloner_oracle(plus.matrix(), 1, 3), 3, {2})).x;
    EXPECT_NEAR(oracle_x, 5.0 / 9.0, 1e-14);
    DensityOperator out = apply_cloner(CloneChannel(1, 3), plus);
    EXPECT_NEAR(bloch_of(reduce_to_qubit(out, 1)).x, 5.0 / 9.0, 1e-12);
}

TEST(ApplyCloner, rejects_bad_inputs) {
    ComplexVector singlet = ComplexVector::Zero(4);
    singlet(1) = M_SQRT1_2;
    singlet(2) = -M_SQRT1_2;
    DensityOperator s = DensityOperator::from_matrix(singlet * singlet.adjoint());
    EXPECT_THROW(apply_cloner(CloneChannel(2, 3), s), ArgumentError);
    EXPECT_THROW(apply_cloner(CloneChannel(1, 3), s), ArgumentError);
    EXPECT_THROW(apply_cloner(CloneChannel(1, 13), DensityOperator::maximally_mixed(1)), ArgumentError);
}

TEST(ApplyCloner, dicke_route_agrees_with_full_space) {
    Engine rng(33);
    for (int n = 1; n <= 4; ++n) {
        for (int m = n; m <= 9; ++m) {
            ComplexMatrix coords = random_symmetric_dicke(n, 1 + (n + m) % (n + 1), rng);
            DensityOperator full = apply_cloner(CloneChannel(n, m), embed_dicke(coords));
            ComplexMatrix dicke = apply_cloner_dicke(CloneChannel(n, m), coords);
            EXPECT_LT(max_abs(project_dicke(full) - dicke), 1e-10) << n << "->" << m;
        }
    }
}

TEST(ApplyCloner, channel_sanity_on_entangled_inputs) {
    Engine rng(34);
    for (int i = 0; i < 20; ++i) {
        const int n = 1 + i % 3;
        const int m = n + i % 5;
        DensityOperator rho = embed_dicke(random_symmetric_dicke(n, 1, rng));
        DensityOperator out = apply_cloner(CloneChannel(n, m), rho);
        EXPECT_LT(out.trace_error(), 1e-12);
        EXPECT_GE(out.min_eigenvalue(), -1e-10);
        EXPECT_LT(symmetric_support_residual(out.matrix(), m), 1e-11);
    }
}

TEST(MeasureShrinking, one_to_two_pure) {
    CloneReport r = measure_shrinking(CloneChannel(1, 2), DensityOperator::pure(PureQubitState::zero()));
    EXPECT_NEAR(r.eta_measured, 2.0 / 3.0, 1e-9);
    EXPECT_NEAR(r.fidelity_measured, 5.0 / 6.0, 1e-9);
    EXPECT_LT(r.reduction_spread, 1e-11);
    EXPECT_LT(r.orientation_deviation, 1e-9);
}

TEST(MeasureShrinking, independent_of_input_length) {
    CloneReport r = measure_shrinking(CloneChannel(1, 2), state_from_bloch({0.0, 0.3, 0.4}));
    EXPECT_NEAR(r.input_bloch.norm(), 0.5, 1e-12);
    EXPECT_NEAR(r.eta_measured, 2.0 / 3.0, 1e-9);
}

TEST(MeasureShrinking, degenerate_input) {
    EXPECT_THROW(measure_shrinking(CloneChannel(1, 2), DensityOperator::maximally_mixed(1)), DegenerateInputError);
    // Maximally mixed on the symmetric subspace also has a zero reduced Bloch vector.
    EXPECT_THROW(measure_shrinking(CloneChannel(2, 3), embed_dicke(ComplexMatrix::Identity(3, 3) / 3.0)),
                 DegenerateInputError);
}

TEST(MeasureShrinking, large_m_uses_dicke_route) {
    Engine rng(35);
    PureQubitState psi = haar_random_pure(rng);
    for (int m : {13, 20, 40, 60}) {
        CloneReport r = measure_shrinking(CloneChannel(2, m), DensityOperator::tensor_power(psi, 2));
        EXPECT_NEAR(r.eta_measured, eta_formula(2, m), 1e-9) << "m=" << m;
        EXPECT_LT(r.trace_error, 1e-12);
        EXPECT_GE(r.min_output_eigenvalue, -1e-10);
    }
}

TEST(CertifyUniversality, one_to_two) {
    CloneReport r = certify_universality(CloneChannel(1, 2), 50, 7);
    EXPECT_EQ(r.samples, 50);
    EXPECT_LT(r.universality_spread, 1e-9);
    EXPECT_NEAR(r.eta_measured, 2.0 / 3.0, 1e-9);
}

TEST(CertifyUniversality, two_to_four) {
    CloneReport r = certify_universality(CloneChannel(2, 4), 50, 8);
    EXPECT_LT(r.universality_spread, 1e-9);
    EXPECT_NEAR(r.eta_measured, 0.75, 1e-9);
}

TEST(CertifyUniversality, identity_channel_eta_one) {
    CloneReport r = certify_universality(CloneChannel(3, 3), 20, 9);
    EXPECT_NEAR(r.eta_measured, 1.0, 1e-12);
    EXPECT_LT(r.universality_spread, 1e-12);
}

TEST(CertifyUniversality, deterministic_and_validated) {
    CloneReport a = certify_universality(CloneChannel(2, 3), 10, 99);
    CloneReport b = certify_universality(CloneChannel(2, 3), 10, 99);
    EXPECT_EQ(a.eta_measured, b.eta_measured);
    EXPECT_EQ(a.universality_spread, b.universality_spread);
    EXPECT_THROW(certify_universality(CloneChannel(1, 2), 1, 0), ArgumentError);
}

TEST(CertifyUniversality, saturates_bound_on_grid) {
    for (int n = 1; n <= 4; ++n) {
        for (int m = n; m <= 8; ++m) {
            CloneReport r = certify_universality(CloneChannel(n, m), 5, 1000 + n * 10 + m);
            EXPECT_NEAR(r.eta_measured, eta_formula(n, m), 1e-9) << n << "->" << m;
        }
    }
}

TEST(ConcatChannels, one_two_four) {
    const DensityOperator zero = DensityOperator::pure(PureQubitState::zero());
    DensityOperator chained = concat_channels(CloneChannel(1, 2), CloneChannel(2, 4), zero);
    const double eta_chain = bloch_of(reduce_to_qubit(chained, 0)).norm();
    EXPECT_NEAR(eta_chain, 0.5, 1e-9);
    EXPECT_NEAR(eta_chain, measure_shrinking(CloneChannel(1, 4), zero).eta_measured, 1e-9);
}

TEST(ConcatChannels, one_three_five) {
    const DensityOperator plus = DensityOperator::pure(PureQubitState::plus());
    DensityOperator chained = concat_channels(CloneChannel(1, 3), CloneChannel(3, 5), plus);
    const double eta_chain = bloch_of(reduce_to_qubit(chained, 4)).norm();
    EXPECT_NEAR(eta_chain, 7.0 / 15.0, 1e-9);
    EXPECT_NEAR(measure_shrinking(CloneChannel(1, 5), plus).eta_measured, 7.0 / 15.0, 1e-9);
}

TEST(ConcatChannels, identity_chain) {
    Engine rng(36);
    DensityOperator rho = embed_dicke(random_symmetric_dicke(3, 2, rng));
    DensityOperator out = concat_channels(CloneChannel(3, 3), CloneChannel(3, 3), rho);
    EXPECT_LT(max_abs(out.matrix() - rho.matrix()), 1e-12);
}

TEST(ConcatChannels, dimension_mismatch) {
    EXPECT_THROW(concat_channels(CloneChannel(1, 2), CloneChannel(3, 4), DensityOperator::maximally_mixed(1)),
                 ArgumentError);
}
