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

// Dense complex linear algebra for small qubit registers.
//
// Qubit ordering is big-endian throughout: qubit 0 is the leftmost tensor
// factor, i.e. the most significant bit of a computational-basis index.

#include <array>
#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "qclone/rng.hpp"

namespace qclone {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

namespace tol {
/// Hermiticity, trace, normalization and other exact-in-principle checks.
inline constexpr double kStructural = 1e-12;
/// Lowest eigenvalue accepted as "positive semidefinite".
inline constexpr double kPositivity = -1e-10;
/// Agreement between a simulated physical quantity and its closed form.
inline constexpr double kPhysics = 1e-9;
}  // namespace tol

/// Largest absolute entry.
double max_abs(const ComplexMatrix& m);

/// max |m - m^dagger|.
double hermiticity_error(const ComplexMatrix& m);

/// Lowest eigenvalue of the Hermitian part of `m`.
double min_eigenvalue(const ComplexMatrix& m);

struct BlochVector {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    double norm() const;
    double dot(const BlochVector& o) const { return x * o.x + y * o.y + z * o.z; }
    BlochVector scaled(double f) const { return {x * f, y * f, z * f}; }
    double max_abs_diff(const BlochVector& o) const;
};

/// Angle in radians between two nonzero vectors (0 for parallel).
double angle_between(const BlochVector& a, const BlochVector& b);

class PureQubitState {
   public:
    /// Amplitudes must have unit norm within tol::kStructural.
    PureQubitState(Complex a0, Complex a1);

    /// The pure state whose Bloch vector is the unit vector along (theta, phi).
    static PureQubitState from_angles(double theta, double phi);

    static PureQubitState zero() { return {1.0, 0.0}; }
    static PureQubitState one() { return {0.0, 1.0}; }
    static PureQubitState plus();

    Complex amplitude(int i) const { return amp_[static_cast<std::size_t>(i)]; }
    Eigen::Vector2cd vector() const { return {amp_[0], amp_[1]}; }
    ComplexMatrix projector() const;
    BlochVector bloch() const;

    /// |<this|other>|^2
    double overlap(const PureQubitState& other) const;

   private:
    std::array<Complex, 2> amp_;
};

/// A validated n-qubit density operator: Hermitian, unit trace, PSD.
class DensityOperator {
   public:
    /// Full validation (including an eigenvalue check); throws ArgumentError.
    static DensityOperator from_matrix(ComplexMatrix m);

    /// Validates dimension, Hermiticity and trace only. For operators that are
    /// positive by construction (reductions, channel outputs) where an
    /// eigen-solve on the full space would dominate the cost.
    static DensityOperator from_matrix_unchecked_positivity(ComplexMatrix m);

    static DensityOperator pure(const PureQubitState& psi);
    static DensityOperator tensor_power(const PureQubitState& psi, int n);
    static DensityOperator maximally_mixed(int n);

    int num_qubits() const { return n_; }
    Eigen::Index dim() const { return m_.rows(); }
    const ComplexMatrix& matrix() const { return m_; }

    double trace_error() const;
    double min_eigenvalue() const;

   private:
    DensityOperator(int n, ComplexMatrix m) : n_(n), m_(std::move(m)) {}
    static DensityOperator validated(ComplexMatrix m, bool check_positivity);

    int n_;
    ComplexMatrix m_;
};

const ComplexMatrix& pauli_x();
const ComplexMatrix& pauli_y();
const ComplexMatrix& pauli_z();

/// Kronecker product a (x) b; a is the more significant factor.
ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix tensor_power(const ComplexMatrix& a, int k);
ComplexVector tensor_power(const Eigen::Vector2cd& v, int k);

/// Reduced operator on the qubits in `keep` (any order; output follows
/// ascending qubit index). Works on any square 2^n operator.
ComplexMatrix partial_trace(const ComplexMatrix& op, int n_qubits, const std::vector<int>& keep);
DensityOperator partial_trace(const DensityOperator& rho, const std::vector<int>& keep);

/// Single-qubit reduction of qubit `q`.
DensityOperator reduce_to_qubit(const DensityOperator& rho, int q);

BlochVector bloch_of(const DensityOperator& rho);
BlochVector bloch_of(const ComplexMatrix& single_qubit_op);
DensityOperator state_from_bloch(const BlochVector& s);

/// <psi|rho|psi> for a single-qubit rho.
double pure_fidelity(const PureQubitState& psi, const DensityOperator& rho);

/// Haar-uniform pure qubit state: two independent standard complex Gaussians,
/// normalized.
PureQubitState haar_random_pure(Engine& rng);

}  // namespace qclone
