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

// Exact closed forms for optimal cloning and estimation, and the identities
// and inequalities that tie them together. Everything here is exact rational
// arithmetic; floating point enters only in cross_check.

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace qclone {

using Rational = boost::multiprecision::cpp_rational;

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);
double to_double(const Rational& r);

/// N(M+2) / (M(N+2)), the optimal N -> M shrinking factor. Requires 1 <= N <= M.
Rational eta_opt(std::int64_t n, std::int64_t m);

/// (NM + N + M) / (M(N+2)), the optimal N -> M single-clone fidelity.
Rational fidelity_opt(std::int64_t n, std::int64_t m);

/// M / (M+2), the shrinking factor of optimal estimation on M copies.
Rational eta_meas_opt(std::int64_t m);

/// (M+1) / (M+2), the fidelity of optimal estimation on M copies.
Rational fidelity_meas_opt(std::int64_t m);

struct IdentityCheck {
    std::string name;
    bool holds = false;
    /// lhs - rhs for equalities, the nonnegative margin for inequalities.
    Rational slack;
};

struct BoundsReport {
    std::int64_t n = 0;
    std::int64_t m = 0;
    std::int64_t l = 0;
    Rational eta_opt;
    Rational fidelity_opt;
    Rational eta_meas_opt;
    Rational fidelity_meas_opt;
    std::vector<IdentityCheck> inequality_checks;

    bool all_hold() const;
};

/// Verifies, exactly, the concatenation and estimation identities for the
/// chain N <= M <= L. Reported values are for the (N, M) pair and M copies.
BoundsReport check_identities(std::int64_t n, std::int64_t m, std::int64_t l);

/// |sim - exact| < tol.
bool cross_check(double sim, const Rational& exact, double tol);

}  // namespace qclone
