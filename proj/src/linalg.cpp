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

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "qclone/errors.hpp"

namespace qclone {

double max_abs(const ComplexMatrix& m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

double hermiticity_error(const ComplexMatrix& m) {
    return max_abs(m - m.adjoint());
}

double min_eigenvalue(const ComplexMatrix& m) {
    ComplexMatrix h = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

double BlochVector::norm() const {
    return std::sqrt(x * x + y * y + z * z);
}

double BlochVector::max_abs_diff(const BlochVector& o) const {
    return std::max({std::abs(x - o.x), std::abs(y - o.y), std::abs(z - o.z)});
}

double angle_between(const BlochVector& a, const BlochVector& b) {
    const double cx = a.y * b.z - a.z * b.y;
    const double cy = a.z * b.x - a.x * b.z;
    const double cz = a.x * b.y - a.y * b.x;
    return std::atan2(std::sqrt(cx * cx + cy * cy + cz * cz), a.dot(b));
}

PureQubitState::PureQubitState(Complex a0, Complex a1) : amp_{a0, a1} {
    const double norm2 = std::norm(a0) + std::norm(a1);
    if (std::abs(norm2 - 1.0) > tol::kStructural) {
        throw ArgumentError("PureQubitState: squared norm " + std::to_string(norm2) + " is not 1");
    }
}

PureQubitState PureQubitState::from_angles(double theta, double phi) {
    return {std::cos(theta / 2), std::polar(std::sin(theta / 2), phi)};
}

PureQubitState PureQubitState::plus() {
    return {M_SQRT1_2, M_SQRT1_2};
}

ComplexMatrix PureQubitState::projector() const {
    Eigen::Vector2cd v = vector();
    return v * v.adjoint();
}

BlochVector PureQubitState::bloch() const {
    const Complex c = std::conj(amp_[0]) * amp_[1];
    return {2.0 * c.real(), 2.0 * c.imag(), std::norm(amp_[0]) - std::norm(amp_[1])};
}

double PureQubitState::overlap(const PureQubitState& other) const {
    return std::norm(std::conj(amp_[0]) * other.amp_[0] + std::conj(amp_[1]) * other.amp_[1]);
}

namespace {

int qubits_for_dim(Eigen::Index dim) {
    if (dim < 2 || !std::has_single_bit(static_cast<std::uint64_t>(dim))) {
        throw ArgumentError("operator dimension " + std::to_string(dim) + " is not 2^n with n >= 1");
    }
    return std::countr_zero(static_cast<std::uint64_t>(dim));
}

}  // namespace

DensityOperator DensityOperator::validated(ComplexMatrix m, bool check_positivity) {
    if (m.rows() != m.cols()) {
        throw ArgumentError("density operator must be square");
    }
    const int n = qubits_for_dim(m.rows());
    const double herm = hermiticity_error(m);
    if (herm > tol::kStructural) {
        throw ArgumentError("density operator is not Hermitian (deviation " + std::to_string(herm) + ")");
    }
    const double tr_err = std::abs(m.trace() - Complex(1.0));
    if (tr_err > tol::kStructural) {
        throw ArgumentError("density operator trace differs from 1 by " + std::to_string(tr_err));
    }
    if (check_positivity) {
        const double lo = qclone::min_eigenvalue(m);
        if (lo < tol::kPositivity) {
            throw ArgumentError("density operator has negative eigenvalue " + std::to_string(lo));
        }
    }
    return DensityOperator(n, std::move(m));
}

DensityOperator DensityOperator::from_matrix(ComplexMatrix m) {
    return validated(std::move(m), true);
}

DensityOperator DensityOperator::from_matrix_unchecked_positivity(ComplexMatrix m) {
    return validated(std::move(m), false);
}

DensityOperator DensityOperator::pure(const PureQubitState& psi) {
    return DensityOperator(1, psi.projector());
}

DensityOperator DensityOperator::tensor_power(const PureQubitState& psi, int n) {
    if (n < 1) {
        throw ArgumentError("tensor_power: n must be positive");
    }
    ComplexVector v = qclone::tensor_power(psi.vector(), n);
    return DensityOperator(n, v * v.adjoint());
}

DensityOperator DensityOperator::maximally_mixed(int n) {
    if (n < 1 || n > 30) {
        throw ArgumentError("maximally_mixed: qubit count out of range");
    }
    const Eigen::Index d = Eigen::Index{1} << n;
    return DensityOperator(n, ComplexMatrix::Identity(d, d) / static_cast<double>(d));
}

double DensityOperator::trace_error() const {
    return std::abs(m_.trace() - Complex(1.0));
}

double DensityOperator::min_eigenvalue() const {
    return qclone::min_eigenvalue(m_);
}

const ComplexMatrix& pauli_x() {
    static const ComplexMatrix m = [] {
        ComplexMatrix p(2, 2);
        p << 0.0, 1.0, 1.0, 0.0;
        return p;
    }();
    return m;
}

const ComplexMatrix& pauli_y() {
    static const ComplexMatrix m = [] {
        ComplexMatrix p(2, 2);
        p << 0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0;
        return p;
    }();
    return m;
}

const ComplexMatrix& pauli_z() {
    static const ComplexMatrix m = [] {
        ComplexMatrix p(2, 2);
        p << 1.0, 0.0, 0.0, -1.0;
        return p;
    }();
    return m;
}

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

ComplexMatrix tensor_power(const ComplexMatrix& a, int k) {
    if (k < 1) {
        throw ArgumentError("tensor_power: exponent must be positive");
    }
    ComplexMatrix out = a;
    for (int i = 1; i < k; ++i) {
        out = tensor_product(out, a);
    }
    return out;
}

ComplexVector tensor_power(const Eigen::Vector2cd& v, int k) {
    if (k < 1) {
        throw ArgumentError("tensor_power: exponent must be positive");
    }
    ComplexVector out = v;
    for (int i = 1; i < k; ++i) {
        ComplexVector next(out.size() * 2);
        for (Eigen::Index j = 0; j < out.size(); ++j) {
            next(2 * j) = out(j) * v(0);
            next(2 * j + 1) = out(j) * v(1);
        }
        out = std::move(next);
    }
    return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& op, int n_qubits, const std::vector<int>& keep) {
    if (op.rows() != op.cols() || op.rows() != (Eigen::Index{1} << n_qubits)) {
        throw ArgumentError("partial_trace: operator dimension does not match qubit count");
    }
    if (keep.empty()) {
        throw ArgumentError("partial_trace: keep set is empty");
    }
    std::vector<bool> kept(static_cast<std::size_t>(n_qubits), false);
    for (int q : keep) {
        if (q < 0 || q >= n_qubits) {
            throw ArgumentError("partial_trace: qubit index " + std::to_string(q) + " out of range");
        }
        if (kept[static_cast<std::size_t>(q)]) {
            throw ArgumentError("partial_trace: duplicate qubit index " + std::to_string(q));
        }
        kept[static_cast<std::size_t>(q)] = true;
    }

    // Bit position of qubit q is (n - 1 - q).
    std::vector<int> kept_bits;
    std::vector<int> traced_bits;
    for (int q = 0; q < n_qubits; ++q) {
        (kept[static_cast<std::size_t>(q)] ? kept_bits : traced_bits).push_back(n_qubits - 1 - q);
    }
    auto scatter = [](const std::vector<int>& bits) {
        const std::size_t count = std::size_t{1} << bits.size();
        std::vector<Eigen::Index> offsets(count, 0);
        for (std::size_t i = 0; i < count; ++i) {
            Eigen::Index off = 0;
            for (std::size_t b = 0; b < bits.size(); ++b) {
                // bits[0] is the most significant of the sub-register.
                if ((i >> (bits.size() - 1 - b)) & 1U) {
                    off |= Eigen::Index{1} << bits[b];
                }
            }
            offsets[i] = off;
        }
        return offsets;
    };
    const std::vector<Eigen::Index> kept_off = scatter(kept_bits);
    const std::vector<Eigen::Index> traced_off = scatter(traced_bits);

    const auto dk = static_cast<Eigen::Index>(kept_off.size());
    ComplexMatrix out = ComplexMatrix::Zero(dk, dk);
    for (Eigen::Index i = 0; i < dk; ++i) {
        for (Eigen::Index j = 0; j < dk; ++j) {
            Complex acc = 0.0;
            for (Eigen::Index t : traced_off) {
                acc += op(kept_off[static_cast<std::size_t>(i)] | t, kept_off[static_cast<std::size_t>(j)] | t);
            }
            out(i, j) = acc;
        }
    }
    return out;
}

DensityOperator partial_trace(const DensityOperator& rho, const std::vector<int>& keep) {
    ComplexMatrix r = partial_trace(rho.matrix(), rho.num_qubits(), keep);
    r = 0.5 * (r + r.adjoint()).eval();
    return DensityOperator::from_matrix_unchecked_positivity(std::move(r));
}

DensityOperator reduce_to_qubit(const DensityOperator& rho, int q) {
    return partial_trace(rho, std::vector<int>{q});
}

BlochVector bloch_of(const ComplexMatrix& op) {
    if (op.rows() != 2 || op.cols() != 2) {
        throw ArgumentError("bloch_of: operator is not single-qubit");
    }
    // Tr(rho sigma_x) = 2 Re rho_10, Tr(rho sigma_y) = 2 Im rho_10.
    return {2.0 * op(1, 0).real(), 2.0 * op(1, 0).imag(), (op(0, 0) - op(1, 1)).real()};
}

BlochVector bloch_of(const DensityOperator& rho) {
    if (rho.num_qubits() != 1) {
        throw ArgumentError("bloch_of: expected a single-qubit operator, got " + std::to_string(rho.num_qubits()) +
                            " qubits");
    }
    return bloch_of(rho.matrix());
}

DensityOperator state_from_bloch(const BlochVector& s) {
    if (s.norm() > 1.0 + tol::kStructural) {
        throw ArgumentError("state_from_bloch: Bloch vector longer than 1");
    }
    ComplexMatrix m(2, 2);
    m << 0.5 * (1.0 + s.z), Complex(0.5 * s.x, -0.5 * s.y), Complex(0.5 * s.x, 0.5 * s.y), 0.5 * (1.0 - s.z);
    return DensityOperator::from_matrix_unchecked_positivity(std::move(m));
}

double pure_fidelity(const PureQubitState& psi, const DensityOperator& rho) {
    if (rho.num_qubits() != 1) {
        throw ArgumentError("pure_fidelity: expected a single-qubit operator");
    }
    const Eigen::Vector2cd v = psi.vector();
    return (v.adjoint() * rho.matrix() * v)(0, 0).real();
}

PureQubitState haar_random_pure(Engine& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Complex a0;
    Complex a1;
    double norm = 0.0;
    do {
        const double r0 = gauss(rng);
        const double i0 = gauss(rng);
        const double r1 = gauss(rng);
        const double i1 = gauss(rng);
        a0 = {r0, i0};
        a1 = {r1, i1};
        norm = std::sqrt(std::norm(a0) + std::norm(a1));
    } while (norm == 0.0);
    return {a0 / norm, a1 / norm};
}

}  // namespace qclone
