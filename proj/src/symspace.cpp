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

#include "qclone/symspace.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <string>

#include "qclone/errors.hpp"

namespace qclone {

namespace {

void require_full_space_qubits(int n, const char* what) {
    if (n < 1 || n > kMaxFullSpaceQubits) {
        throw ArgumentError(std::string(what) + ": qubit count " + std::to_string(n) + " outside [1, " +
                            std::to_string(kMaxFullSpaceQubits) + "]");
    }
}

int dicke_qubits(const ComplexMatrix& coords, const char* what) {
    if (coords.rows() != coords.cols() || coords.rows() < 2) {
        throw ArgumentError(std::string(what) + ": Dicke coordinates must be square with dimension >= 2");
    }
    const int n = static_cast<int>(coords.rows()) - 1;
    if (n > kMaxDickeQubits) {
        throw ArgumentError(std::string(what) + ": qubit count exceeds Dicke-coordinate limit");
    }
    return n;
}

}  // namespace

double binomial(int n, int k) {
    if (k < 0 || k > n) {
        return 0.0;
    }
    k = std::min(k, n - k);
    double out = 1.0;
    for (int i = 1; i <= k; ++i) {
        out = out * (n - k + i) / i;
    }
    return std::round(out);
}

DickeBasis::DickeBasis(int n_qubits) : n_(n_qubits) {
    require_full_space_qubits(n_qubits, "dicke_basis");
    const Eigen::Index dim = Eigen::Index{1} << n_qubits;
    v_ = ComplexMatrix::Zero(dim, n_qubits + 1);
    std::vector<double> coef(static_cast<std::size_t>(n_qubits + 1));
    for (int k = 0; k <= n_qubits; ++k) {
        coef[static_cast<std::size_t>(k)] = 1.0 / std::sqrt(binomial(n_qubits, k));
    }
    for (Eigen::Index x = 0; x < dim; ++x) {
        const int k = std::popcount(static_cast<std::uint64_t>(x));
        v_(x, k) = coef[static_cast<std::size_t>(k)];
    }
}

std::shared_ptr<const DickeBasis> dicke_basis(int n) {
    require_full_space_qubits(n, "dicke_basis");
    static std::mutex mu;
    static std::map<int, std::shared_ptr<const DickeBasis>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[n];
    if (!slot) {
        slot = std::make_shared<const DickeBasis>(n);
    }
    return slot;
}

Symmetrizer::Symmetrizer(int n_qubits) : basis_(dicke_basis(n_qubits)) {}

ComplexMatrix Symmetrizer::matrix() const {
    const ComplexMatrix& v = basis_->isometry();
    return v * v.adjoint();
}

ComplexMatrix Symmetrizer::apply_left(const ComplexMatrix& op) const {
    const ComplexMatrix& v = basis_->isometry();
    return v * (v.adjoint() * op);
}

ComplexMatrix Symmetrizer::apply_right(const ComplexMatrix& op) const {
    const ComplexMatrix& v = basis_->isometry();
    return (op * v) * v.adjoint();
}

ComplexMatrix Symmetrizer::sandwich(const ComplexMatrix& op) const {
    const ComplexMatrix& v = basis_->isometry();
    return v * (v.adjoint() * op * v) * v.adjoint();
}

Symmetrizer symmetrizer(int n) {
    return Symmetrizer(n);
}

ComplexMatrix qubit_permutation(const std::vector<int>& perm) {
    const int n = static_cast<int>(perm.size());
    require_full_space_qubits(n, "qubit_permutation");
    std::vector<int> check = perm;
    std::sort(check.begin(), check.end());
    for (int i = 0; i < n; ++i) {
        if (check[static_cast<std::size_t>(i)] != i) {
            throw ArgumentError("qubit_permutation: not a permutation of 0..n-1");
        }
    }
    const Eigen::Index dim = Eigen::Index{1} << n;
    ComplexMatrix p = ComplexMatrix::Zero(dim, dim);
    for (Eigen::Index x = 0; x < dim; ++x) {
        Eigen::Index y = 0;
        for (int q = 0; q < n; ++q) {
            if ((x >> (n - 1 - q)) & 1) {
                y |= Eigen::Index{1} << (n - 1 - perm[static_cast<std::size_t>(q)]);
            }
        }
        p(y, x) = 1.0;
    }
    return p;
}

ComplexMatrix symmetrizer_by_permutations(int n) {
    if (n < 1 || n > 8) {
        throw ArgumentError("symmetrizer_by_permutations: n must be in [1, 8]");
    }
    const Eigen::Index dim = Eigen::Index{1} << n;
    Eigen::MatrixXd counts = Eigen::MatrixXd::Zero(dim, dim);
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    double n_perms = 0.0;
    do {
        for (Eigen::Index x = 0; x < dim; ++x) {
            Eigen::Index y = 0;
            for (int q = 0; q < n; ++q) {
                if ((x >> (n - 1 - q)) & 1) {
                    y |= Eigen::Index{1} << (n - 1 - perm[static_cast<std::size_t>(q)]);
                }
            }
            counts(y, x) += 1.0;
        }
        n_perms += 1.0;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return (counts / n_perms).cast<Complex>();
}

double symmetric_support_residual(const ComplexMatrix& op, int n_qubits) {
    require_full_space_qubits(n_qubits, "symmetric_support_residual");
    if (op.rows() != op.cols() || op.rows() != (Eigen::Index{1} << n_qubits)) {
        throw ArgumentError("symmetric_support_residual: dimension mismatch");
    }
    const ComplexMatrix& v = dicke_basis(n_qubits)->isometry();
    const double left = max_abs(op - v * (v.adjoint() * op));
    const double right = max_abs(op - (op * v) * v.adjoint());
    return std::max(left, right);
}

bool is_symmetric_support(const DensityOperator& rho, double tol) {
    return symmetric_support_residual(rho.matrix(), rho.num_qubits()) < tol;
}

ComplexMatrix project_dicke(const ComplexMatrix& op, int n_qubits) {
    require_full_space_qubits(n_qubits, "project_dicke");
    if (op.rows() != op.cols() || op.rows() != (Eigen::Index{1} << n_qubits)) {
        throw ArgumentError("project_dicke: dimension mismatch");
    }
    const ComplexMatrix& v = dicke_basis(n_qubits)->isometry();
    return v.adjoint() * op * v;
}

ComplexMatrix project_dicke(const DensityOperator& rho) {
    return project_dicke(rho.matrix(), rho.num_qubits());
}

DensityOperator embed_dicke(const ComplexMatrix& coords) {
    const int n = dicke_qubits(coords, "embed_dicke");
    require_full_space_qubits(n, "embed_dicke");
    if (hermiticity_error(coords) > tol::kStructural) {
        throw ArgumentError("embed_dicke: coordinates are not Hermitian");
    }
    if (std::abs(coords.trace() - Complex(1.0)) > tol::kStructural) {
        throw ArgumentError("embed_dicke: coordinates do not have unit trace");
    }
    if (min_eigenvalue(coords) < tol::kPositivity) {
        throw ArgumentError("embed_dicke: coordinates are not positive semidefinite");
    }
    const ComplexMatrix& v = dicke_basis(n)->isometry();
    ComplexMatrix full = v * coords * v.adjoint();
    full = 0.5 * (full + full.adjoint()).eval();
    return DensityOperator::from_matrix_unchecked_positivity(std::move(full));
}

ComplexVector tensor_power_dicke(const PureQubitState& psi, int n) {
    if (n < 1 || n > kMaxDickeQubits) {
        throw ArgumentError("tensor_power_dicke: qubit count out of range");
    }
    const Complex a0 = psi.amplitude(0);
    const Complex a1 = psi.amplitude(1);
    std::vector<Complex> p0(static_cast<std::size_t>(n + 1), 1.0);
    std::vector<Complex> p1(static_cast<std::size_t>(n + 1), 1.0);
    for (int k = 1; k <= n; ++k) {
        p0[static_cast<std::size_t>(k)] = p0[static_cast<std::size_t>(k - 1)] * a0;
        p1[static_cast<std::size_t>(k)] = p1[static_cast<std::size_t>(k - 1)] * a1;
    }
    ComplexVector out(n + 1);
    for (int k = 0; k <= n; ++k) {
        out(k) = std::sqrt(binomial(n, k)) * p0[static_cast<std::size_t>(n - k)] * p1[static_cast<std::size_t>(k)];
    }
    return out;
}

ComplexMatrix reduce_dicke(const ComplexMatrix& coords) {
    const int n = dicke_qubits(coords, "reduce_dicke");
    const double nn = n;
    ComplexMatrix out = ComplexMatrix::Zero(2, 2);
    for (int k = 0; k <= n; ++k) {
        out(0, 0) += coords(k, k) * ((nn - k) / nn);
        out(1, 1) += coords(k, k) * (k / nn);
    }
    for (int k = 0; k < n; ++k) {
        out(1, 0) += coords(k + 1, k) * (std::sqrt((k + 1.0) * (nn - k)) / nn);
        out(0, 1) += coords(k, k + 1) * (std::sqrt((k + 1.0) * (nn - k)) / nn);
    }
    return out;
}

ComplexMatrix random_symmetric_dicke(int n, int rank, Engine& rng) {
    if (n < 1 || n > kMaxDickeQubits || rank < 1) {
        throw ArgumentError("random_symmetric_dicke: bad qubit count or rank");
    }
    std::normal_distribution<double> gauss(0.0, 1.0);
    ComplexMatrix g(n + 1, rank);
    for (Eigen::Index j = 0; j < g.cols(); ++j) {
        for (Eigen::Index i = 0; i < g.rows(); ++i) {
            const double re = gauss(rng);
            const double im = gauss(rng);
            g(i, j) = {re, im};
        }
    }
    ComplexMatrix x = g * g.adjoint();
    x /= x.trace().real();
    return 0.5 * (x + x.adjoint());
}

double PseudoMixture::weight_sum() const {
    double s = 0.0;
    for (const auto& t : terms) {
        s += t.weight;
    }
    return s;
}

double PseudoMixture::min_weight() const {
    double lo = terms.empty() ? 0.0 : terms.front().weight;
    for (const auto& t : terms) {
        lo = std::min(lo, t.weight);
    }
    return lo;
}

int PseudoMixture::negative_count() const {
    return static_cast<int>(std::count_if(terms.begin(), terms.end(), [](const auto& t) { return t.weight < 0.0; }));
}

ComplexMatrix PseudoMixture::reconstruct_dicke() const {
    ComplexMatrix out = ComplexMatrix::Zero(num_qubits + 1, num_qubits + 1);
    for (const auto& t : terms) {
        const ComplexVector v = tensor_power_dicke(t.state, num_qubits);
        out += t.weight * (v * v.adjoint());
    }
    return out;
}

ComplexMatrix PseudoMixture::reconstruct() const {
    require_full_space_qubits(num_qubits, "PseudoMixture::reconstruct");
    const Eigen::Index dim = Eigen::Index{1} << num_qubits;
    ComplexMatrix out = ComplexMatrix::Zero(dim, dim);
    for (const auto& t : terms) {
        const ComplexVector v = tensor_power(t.state.vector(), num_qubits);
        out += t.weight * (v * v.adjoint());
    }
    return out;
}

std::vector<PureQubitState> pseudo_mixture_frame(int n) {
    if (n < 1 || n > kMaxDickeQubits) {
        throw ArgumentError("pseudo_mixture_frame: qubit count out of range");
    }
    // Polar rings avoid the poles; each ring's azimuths are equispaced and
    // the ring is rotated by a golden-ratio multiple of the azimuth step.
    // Without a twist a self-conjugate azimuthal frequency makes the system
    // singular (for n = 1 every frame vector would lie in the x-z plane);
    // the irrational offset keeps the rings' aliased frequencies apart.
    const double golden = 0.5 * (std::sqrt(5.0) - 1.0);
    const int rings = n + 1;
    std::vector<PureQubitState> frame;
    frame.reserve(static_cast<std::size_t>(rings * rings));
    for (int i = 0; i < rings; ++i) {
        const double theta = M_PI * (i + 0.5) / rings;
        const double twist = 2.0 * M_PI * golden * i / rings;
        for (int j = 0; j < rings; ++j) {
            const double phi = 2.0 * M_PI * j / rings + twist;
            frame.push_back(PureQubitState::from_angles(theta, phi));
        }
    }
    return frame;
}

PseudoMixture pseudo_mixture_decompose_dicke(const ComplexMatrix& coords) {
    const int n = dicke_qubits(coords, "pseudo_mixture_decompose");
    if (n > kMaxPseudoMixtureQubits) {
        throw ArgumentError("pseudo_mixture_decompose: at most " + std::to_string(kMaxPseudoMixtureQubits) +
                            " qubits");
    }
    if (hermiticity_error(coords) > tol::kStructural) {
        throw ArgumentError("pseudo_mixture_decompose: operator is not Hermitian");
    }
    const std::vector<PureQubitState> frame = pseudo_mixture_frame(n);
    const Eigen::Index d = n + 1;
    const Eigen::Index n_eq = d * d;

    // Real parameterization of a Hermitian d x d matrix: diagonal entries,
    // then Re/Im of the strict upper triangle.
    auto vectorize = [d, n_eq](const ComplexMatrix& h) {
        Eigen::VectorXd out(n_eq);
        Eigen::Index r = 0;
        for (Eigen::Index i = 0; i < d; ++i) {
            out(r++) = h(i, i).real();
        }
        for (Eigen::Index i = 0; i < d; ++i) {
            for (Eigen::Index j = i + 1; j < d; ++j) {
                out(r++) = h(i, j).real();
                out(r++) = h(i, j).imag();
            }
        }
        return out;
    };

    Eigen::MatrixXd a(n_eq, static_cast<Eigen::Index>(frame.size()));
    for (std::size_t s = 0; s < frame.size(); ++s) {
        const ComplexVector v = tensor_power_dicke(frame[s], n);
        a.col(static_cast<Eigen::Index>(s)) = vectorize(v * v.adjoint());
    }
    const Eigen::VectorXd b = vectorize(coords);
    const Eigen::VectorXd alpha = a.completeOrthogonalDecomposition().solve(b);

    PseudoMixture out;
    out.num_qubits = n;
    out.terms.reserve(frame.size());
    for (std::size_t s = 0; s < frame.size(); ++s) {
        out.terms.push_back({alpha(static_cast<Eigen::Index>(s)), frame[s]});
    }
    const double residual = max_abs(out.reconstruct_dicke() - coords);
    if (!(residual < 1e-9)) {
        throw InternalError("pseudo_mixture_decompose: frame system residual " + std::to_string(residual) +
                            " exceeds 1e-9");
    }
    return out;
}

PseudoMixture pseudo_mixture_decompose(const DensityOperator& rho) {
    if (!is_symmetric_support(rho, 1e-10)) {
        throw ArgumentError("pseudo_mixture_decompose: input is not supported on the symmetric subspace");
    }
    return pseudo_mixture_decompose_dicke(project_dicke(rho));
}

}  // namespace qclone
