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

// The symmetric subspace of n qubits: Dicke basis, symmetrizer, support
// tests, Dicke-coordinate conversions and signed tensor-power decompositions.
//
// Dicke state |D^n_k> is the equal superposition of all n-bit strings with k
// ones, each with coefficient 1/sqrt(C(n,k)). "Dicke coordinates" of an
// operator X on the symmetric subspace are the (n+1)x(n+1) matrix V^dagger X V,
// with V the 2^n x (n+1) isometry whose k-th column is |D^n_k>.

#include <memory>
#include <vector>

#include "qclone/linalg.hpp"

namespace qclone {

/// Largest qubit count for which full-space operators are materialized.
inline constexpr int kMaxFullSpaceQubits = 14;

/// Largest qubit count handled in Dicke coordinates.
inline constexpr int kMaxDickeQubits = 60;

/// Largest qubit count for pseudo-mixture decompositions. The square frame
/// system loses about an order of magnitude of conditioning per qubit.
inline constexpr int kMaxPseudoMixtureQubits = 9;

/// C(n, k) as a double (exact up to 2^53).
double binomial(int n, int k);

class DickeBasis {
   public:
    explicit DickeBasis(int n_qubits);

    int num_qubits() const { return n_; }
    /// 2^n x (n+1) isometry; column k is |D^n_k>.
    const ComplexMatrix& isometry() const { return v_; }
    ComplexVector vector(int k) const { return v_.col(k); }

   private:
    int n_;
    ComplexMatrix v_;
};

/// Memoized basis for 1 <= n <= kMaxFullSpaceQubits. Thread-safe.
std::shared_ptr<const DickeBasis> dicke_basis(int n);

/// Orthogonal projector S_n onto the symmetric subspace, stored as its
/// Dicke isometry so it can be applied without a 4^n-entry matrix.
class Symmetrizer {
   public:
    explicit Symmetrizer(int n_qubits);

    int num_qubits() const { return basis_->num_qubits(); }
    int rank() const { return num_qubits() + 1; }

    /// Dense 2^n x 2^n projector V V^dagger.
    ComplexMatrix matrix() const;

    /// S * op
    ComplexMatrix apply_left(const ComplexMatrix& op) const;
    /// op * S
    ComplexMatrix apply_right(const ComplexMatrix& op) const;
    /// S * op * S
    ComplexMatrix sandwich(const ComplexMatrix& op) const;

    const DickeBasis& basis() const { return *basis_; }

   private:
    std::shared_ptr<const DickeBasis> basis_;
};

Symmetrizer symmetrizer(int n);

/// (1/n!) sum over all qubit permutations P_pi; independent route to S_n.
/// Limited to n <= 8.
ComplexMatrix symmetrizer_by_permutations(int n);

/// Unitary that permutes qubits: qubit q of the input lands at position perm[q].
ComplexMatrix qubit_permutation(const std::vector<int>& perm);

/// Max-entry residual of (1-S) rho and rho (1-S).
double symmetric_support_residual(const ComplexMatrix& op, int n_qubits);

/// true iff both (1-S) rho and rho (1-S) have max entry below `tol`.
bool is_symmetric_support(const DensityOperator& rho, double tol);

/// V^dagger op V.
ComplexMatrix project_dicke(const ComplexMatrix& op, int n_qubits);
ComplexMatrix project_dicke(const DensityOperator& rho);

/// V coords V^dagger as a validated density operator on n = dim-1 qubits.
DensityOperator embed_dicke(const ComplexMatrix& coords);

/// Dicke coordinates of |psi>^{(x) n}: entry k is sqrt(C(n,k)) a0^(n-k) a1^k.
ComplexVector tensor_power_dicke(const PureQubitState& psi, int n);

/// Single-qubit reduction of a symmetric operator given in Dicke coordinates.
/// Every qubit gives the same result.
ComplexMatrix reduce_dicke(const ComplexMatrix& coords);

/// Random density operator supported on the symmetric subspace, in Dicke
/// coordinates: a normalized complex Wishart matrix with the given rank.
ComplexMatrix random_symmetric_dicke(int n, int rank, Engine& rng);

struct PseudoMixtureTerm {
    double weight;
    PureQubitState state;
};

/// rho_N = sum_i weight_i |psi_i><psi_i|^{(x) N}, weights real and possibly negative.
struct PseudoMixture {
    int num_qubits = 0;
    std::vector<PseudoMixtureTerm> terms;

    double weight_sum() const;
    double min_weight() const;
    int negative_count() const;

    /// The reconstructed operator in Dicke coordinates.
    ComplexMatrix reconstruct_dicke() const;
    /// The reconstructed operator on the full 2^N space (N <= kMaxFullSpaceQubits).
    ComplexMatrix reconstruct() const;
};

/// The fixed frame used by the decomposition: (n+1)^2 pure states on a
/// polar x azimuth grid.
std::vector<PureQubitState> pseudo_mixture_frame(int n);

/// Decomposes a symmetric-support density operator over the fixed frame.
/// Requires N <= kMaxPseudoMixtureQubits.
PseudoMixture pseudo_mixture_decompose(const DensityOperator& rho);

/// Same, from Dicke coordinates (Hermitian, unit trace).
PseudoMixture pseudo_mixture_decompose_dicke(const ComplexMatrix& coords);

}  // namespace qclone
