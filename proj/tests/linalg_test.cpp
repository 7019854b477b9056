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

#include "qclone/linalg.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "qclone/errors.hpp"

using namespace qclone;

namespace {

ComplexMatrix ket_projector(std::initializer_list<Complex> amps) {
    ComplexVector v(static_cast<Eigen::Index>(amps.size()));
    Eigen::Index i = 0;
    for (Complex a : amps) {
        v(i++) = a;
    }
    return v * v.adjoint();
}

ComplexMatrix random_matrix(Eigen::Index rows, Eigen::Index cols, Engine& rng) {
    std::normal_distribution<double> g;
    ComplexMatrix m(rows, cols);
    for (Eigen::Index j = 0; j < cols; ++j) {
        for (Eigen::Index i = 0; i < rows; ++i) {
            const double re = g(rng);
            const double im = g(rng);
            m(i, j) = {re, im};
        }
    }
    return m;
}

// Brute-force reduced operator: sum over every (x, y) pair whose traced bits agree.
ComplexMatrix partial_trace_oracle(const ComplexMatrix& op, int n, const std::vector<int>& keep) {
    std::vector<int> sorted = keep;
    std::sort(sorted.begin(), sorted.end());
    const Eigen::Index dk = Eigen::Index{1} << sorted.size();
    ComplexMatrix out = ComplexMatrix::Zero(dk, dk);
    auto bit = [n](Eigen::Index x, int q) { return (x >> (n - 1 - q)) & 1; };
    for (Eigen::Index x = 0; x < op.rows(); ++x) {
        for (Eigen::Index y = 0; y < op.cols(); ++y) {
            bool traced_equal = true;
            for (int q = 0; q < n; ++q) {
                if (std::find(sorted.begin(), sorted.end(), q) == sorted.end() && bit(x, q) != bit(y, q)) {
                    traced_equal = false;
                }
            }
            if (!traced_equal) {
                continue;
            }
            Eigen::Index a = 0;
            Eigen::Index b = 0;
            for (int q : sorted) {
                a = (a << 1) | bit(x, q);
                b = (b << 1) | bit(y, q);
            }
            out(a, b) += op(x, y);
        }
    }
    return out;
}

}  // namespace

TEST(TensorProduct, identity) {
    ComplexMatrix i2 = ComplexMatrix::Identity(2, 2);
    EXPECT_LT(max_abs(tensor_product(i2, i2) - ComplexMatrix::Identity(4, 4)), 1e-15);
}

TEST(TensorProduct, product_projector) {
    ComplexMatrix p0 = PureQubitState::zero().projector();
    ComplexMatrix out = tensor_product(p0, p0);
    ComplexMatrix expected = ComplexMatrix::Zero(4, 4);
    expected(0, 0) = 1.0;
    EXPECT_EQ(out, expected);
}

TEST(TensorProduct, zz_on_01_is_minus_one) {
    ComplexMatrix zz = tensor_product(pauli_z(), pauli_z());
    ComplexVector ket01 = ComplexVector::Zero(4);
    ket01(1) = 1.0;  // |01>: qubit 0 is |0>, qubit 1 is |1>
    EXPECT_LT((zz * ket01 + ket01).norm(), 1e-15);
}

TEST(TensorProduct, big_endian_ordering) {
    // sigma_x on qubit 0 flips the most significant bit.
    ComplexMatrix x0 = tensor_product(pauli_x(), ComplexMatrix::Identity(2, 2));
    ComplexVector ket00 = ComplexVector::Zero(4);
    ket00(0) = 1.0;
    ComplexVector flipped = x0 * ket00;
    EXPECT_EQ(flipped(2), Complex(1.0));
}

TEST(TensorProduct, associative) {
    Engine rng(3);
    ComplexMatrix a = random_matrix(2, 2, rng);
    ComplexMatrix b = random_matrix(2, 3, rng);
    ComplexMatrix c = random_matrix(3, 2, rng);
    EXPECT_LT(max_abs(tensor_product(tensor_product(a, b), c) - tensor_product(a, tensor_product(b, c))), 1e-13);
}

TEST(PartialTrace, bell_state_either_qubit) {
    DensityOperator bell = DensityOperator::from_matrix(ket_projector({0.0, M_SQRT1_2, M_SQRT1_2, 0.0}));
    for (int q : {0, 1}) {
        DensityOperator r = partial_trace(bell, {q});
        EXPECT_LT(max_abs(r.matrix() - 0.5 * ComplexMatrix::Identity(2, 2)), 1e-15);
    }
}

TEST(PartialTrace, product_state) {
    ComplexMatrix rho = tensor_product(PureQubitState::zero().projector(), PureQubitState::one().projector());
    DensityOperator r = partial_trace(DensityOperator::from_matrix(rho), {0});
    EXPECT_LT(max_abs(r.matrix() - PureQubitState::zero().projector()), 1e-15);
}

TEST(PartialTrace, two_qubit_dicke_one_excitation) {
    DensityOperator d = DensityOperator::from_matrix(ket_projector({0.0, M_SQRT1_2, M_SQRT1_2, 0.0}));
    ComplexMatrix r = partial_trace(d, {1}).matrix();
    EXPECT_NEAR(r(0, 0).real(), 0.5, 1e-15);
    EXPECT_NEAR(r(1, 1).real(), 0.5, 1e-15);
    EXPECT_NEAR(std::abs(r(0, 1)), 0.0, 1e-15);
}

TEST(PartialTrace, kron_factor_recovered) {
    Engine rng(11);
    ComplexMatrix a = random_matrix(4, 4, rng);
    ComplexMatrix b = random_matrix(2, 2, rng);
    ComplexMatrix ab = tensor_product(a, b);
    EXPECT_LT(max_abs(partial_trace(ab, 3, {0, 1}) - b.trace() * a), 1e-12);
    EXPECT_LT(max_abs(partial_trace(ab, 3, {2}) - a.trace() * b), 1e-12);
}

TEST(PartialTrace, matches_brute_force_oracle) {
    Engine rng(5);
    ComplexMatrix op = random_matrix(16, 16, rng);
    for (const std::vector<int>& keep :
         {std::vector<int>{0}, {3}, {1, 2}, {0, 3}, {2, 0}, {0, 1, 3}, {0, 1, 2, 3}}) {
        EXPECT_LT(max_abs(partial_trace(op, 4, keep) - partial_trace_oracle(op, 4, keep)), 1e-12);
    }
}

TEST(PartialTrace, preserves_trace_and_hermiticity) {
    Engine rng(8);
    ComplexMatrix g = random_matrix(8, 8, rng);
    ComplexMatrix rho = g * g.adjoint();
    rho /= rho.trace();
    DensityOperator d = DensityOperator::from_matrix(rho);
    for (int q = 0; q < 3; ++q) {
        DensityOperator r = reduce_to_qubit(d, q);
        EXPECT_LT(r.trace_error(), 1e-12);
        EXPECT_EQ(hermiticity_error(r.matrix()), 0.0);
    }
}

TEST(PartialTrace, rejects_bad_keep_sets) {
    DensityOperator d = DensityOperator::maximally_mixed(2);
    EXPECT_THROW(partial_trace(d, {}), ArgumentError);
    EXPECT_THROW(partial_trace(d, {2}), ArgumentError);
    EXPECT_THROW(partial_trace(d, {-1}), ArgumentError);
    EXPECT_THROW(partial_trace(d, {0, 0}), ArgumentError);
}

TEST(Bloch, of_reference_states) {
    EXPECT_LT(bloch_of(DensityOperator::maximally_mixed(1)).norm(), 1e-15);
    BlochVector z = bloch_of(DensityOperator::pure(PureQubitState::zero()));
    EXPECT_NEAR(z.z, 1.0, 1e-15);
    ComplexMatrix shrunk = 0.5 * (ComplexMatrix::Identity(2, 2) + (2.0 / 3.0) * pauli_z());
    BlochVector s = bloch_of(DensityOperator::from_matrix(shrunk));
    EXPECT_NEAR(s.x, 0.0, 1e-15);
    EXPECT_NEAR(s.y, 0.0, 1e-15);
    EXPECT_NEAR(s.z, 2.0 / 3.0, 1e-15);
}

TEST(Bloch, matches_pauli_expectations) {
    Engine rng(2);
    for (int i = 0; i < 20; ++i) {
        PureQubitState psi = haar_random_pure(rng);
        ComplexMatrix rho = psi.projector();
        BlochVector s = bloch_of(DensityOperator::pure(psi));
        EXPECT_NEAR(s.x, (rho * pauli_x()).trace().real(), 1e-12);
        EXPECT_NEAR(s.y, (rho * pauli_y()).trace().real(), 1e-12);
        EXPECT_NEAR(s.z, (rho * pauli_z()).trace().real(), 1e-12);
        EXPECT_LT(s.max_abs_diff(psi.bloch()), 1e-12);
    }
}

TEST(Bloch, requires_single_qubit) {
    EXPECT_THROW(bloch_of(DensityOperator::maximally_mixed(2)), ArgumentError);
}

TEST(StateFromBloch, reference_states) {
    EXPECT_LT(max_abs(state_from_bloch({0, 0, 0}).matrix() - 0.5 * ComplexMatrix::Identity(2, 2)), 1e-15);
    EXPECT_LT(max_abs(state_from_bloch({1, 0, 0}).matrix() - PureQubitState::plus().projector()), 1e-15);
    ComplexMatrix r = state_from_bloch({0, 0, 2.0 / 3.0}).matrix();
    EXPECT_NEAR(r(0, 0).real(), 5.0 / 6.0, 1e-15);
    EXPECT_NEAR(r(1, 1).real(), 1.0 / 6.0, 1e-15);
}

TEST(StateFromBloch, rejects_long_vectors) {
    EXPECT_THROW(state_from_bloch({0.8, 0.8, 0.0}), ArgumentError);
}

TEST(StateFromBloch, round_trips_on_unit_ball) {
    Engine rng(21);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int i = 0; i < 200; ++i) {
        BlochVector s{u(rng), u(rng), u(rng)};
        if (s.norm() > 1.0) {
            s = s.scaled(1.0 / s.norm());
        }
        EXPECT_LT(bloch_of(state_from_bloch(s)).max_abs_diff(s), 1e-12);
    }
}

TEST(HaarRandomPure, deterministic_for_fixed_seed) {
    Engine a = SeedStream(42).engine(0);
    Engine b = SeedStream(42).engine(0);
    PureQubitState pa = haar_random_pure(a);
    PureQubitState pb = haar_random_pure(b);
    EXPECT_EQ(pa.amplitude(0), pb.amplitude(0));
    EXPECT_EQ(pa.amplitude(1), pb.amplitude(1));
    Engine c = SeedStream(42).engine(1);
    EXPECT_NE(haar_random_pure(c).amplitude(0), pa.amplitude(0));
}

TEST(HaarRandomPure, uniform_sphere_moments) {
    // Uniform sphere: E[s] = 0 (sd of mean 1/sqrt(3e5)), E[z^2] = 1/3 (sd of mean sqrt(4/45/1e5)).
    Engine rng(1234);
    constexpr int kSamples = 100000;
    double sx = 0, sy = 0, sz = 0, zz = 0, xx_rot = 0;
    // A fixed non-trivial unitary; its action on the distribution must be invisible.
    ComplexMatrix u(2, 2);
    u << std::cos(0.4), Complex(0, 1) * std::sin(0.4) * std::polar(1.0, 0.3), Complex(0, 1) * std::sin(0.4) * std::polar(1.0, -0.3),
        std::cos(0.4);
    for (int i = 0; i < kSamples; ++i) {
        PureQubitState psi = haar_random_pure(rng);
        EXPECT_NEAR(std::norm(psi.amplitude(0)) + std::norm(psi.amplitude(1)), 1.0, 1e-12);
        BlochVector s = psi.bloch();
        sx += s.x;
        sy += s.y;
        sz += s.z;
        zz += s.z * s.z;
        Eigen::Vector2cd v = u * psi.vector();
        BlochVector r = PureQubitState(v(0), v(1)).bloch();
        xx_rot += r.x * r.x;
    }
    EXPECT_NEAR(sx / kSamples, 0.0, 0.006);
    EXPECT_NEAR(sy / kSamples, 0.0, 0.006);
    EXPECT_NEAR(sz / kSamples, 0.0, 0.006);
    const double three_sigma = 3.0 * std::sqrt(4.0 / 45.0 / kSamples);
    EXPECT_NEAR(zz / kSamples, 1.0 / 3.0, three_sigma);
    EXPECT_NEAR(xx_rot / kSamples, 1.0 / 3.0, three_sigma);
}

TEST(PureFidelity, reference_values) {
    PureQubitState zero = PureQubitState::zero();
    EXPECT_NEAR(pure_fidelity(zero, DensityOperator::pure(zero)), 1.0, 1e-15);
    EXPECT_NEAR(pure_fidelity(zero, DensityOperator::maximally_mixed(1)), 0.5, 1e-15);
    EXPECT_NEAR(pure_fidelity(zero, state_from_bloch({0, 0, 2.0 / 3.0})), 5.0 / 6.0, 1e-15);
}

TEST(PureFidelity, shrunk_state_gives_half_one_plus_eta) {
    Engine rng(77);
    for (int i = 0; i < 100; ++i) {
        PureQubitState psi = haar_random_pure(rng);
        for (double eta : {0.0, 1.0 / 3.0, 2.0 / 3.0, 1.0}) {
            DensityOperator rho = state_from_bloch(psi.bloch().scaled(eta));
            EXPECT_NEAR(pure_fidelity(psi, rho), 0.5 * (1.0 + eta), 1e-12);
        }
    }
}

TEST(DensityOperator, validation) {
    EXPECT_THROW(DensityOperator::from_matrix(ComplexMatrix::Identity(3, 3) / 3.0), ArgumentError);
    EXPECT_THROW(DensityOperator::from_matrix(ComplexMatrix::Identity(2, 2)), ArgumentError);
    ComplexMatrix non_herm = 0.5 * ComplexMatrix::Identity(2, 2);
    non_herm(0, 1) = 0.1;
    EXPECT_THROW(DensityOperator::from_matrix(non_herm), ArgumentError);
    ComplexMatrix negative(2, 2);
    negative << 1.2, 0.0, 0.0, -0.2;
    EXPECT_THROW(DensityOperator::from_matrix(negative), ArgumentError);
    EXPECT_NO_THROW(DensityOperator::from_matrix_unchecked_positivity(negative));
}

TEST(PureQubitState, rejects_unnormalized) {
    EXPECT_THROW(PureQubitState(1.0, 1.0), ArgumentError);
}
