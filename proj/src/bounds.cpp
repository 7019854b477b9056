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

#include "qclone/bounds.hpp"

#include <cmath>

#include "qclone/errors.hpp"

namespace qclone {

namespace {

void require_ordered(std::int64_t n, std::int64_t m, const char* what) {
    if (n < 1) {
        throw ArgumentError(std::string(what) + ": N must be at least 1");
    }
    if (m < n) {
        throw ArgumentError(std::string(what) + ": requires M >= N (got N=" + std::to_string(n) +
                            ", M=" + std::to_string(m) + ")");
    }
}

Rational ratio(std::int64_t num, std::int64_t den) {
    return Rational(boost::multiprecision::cpp_int(num), boost::multiprecision::cpp_int(den));
}

IdentityCheck equality(std::string name, const Rational& lhs, const Rational& rhs) {
    return {std::move(name), lhs == rhs, lhs - rhs};
}

IdentityCheck at_most(std::string name, const Rational& lhs, const Rational& rhs) {
    const Rational margin = rhs - lhs;
    return {std::move(name), margin >= 0, margin};
}

}  // namespace

std::string to_string(const Rational& r) {
    const auto num = boost::multiprecision::numerator(r);
    const auto den = boost::multiprecision::denominator(r);
    if (den == 1) {
        return num.str();
    }
    return num.str() + "/" + den.str();
}

double to_double(const Rational& r) {
    return r.convert_to<double>();
}

Rational eta_opt(std::int64_t n, std::int64_t m) {
    require_ordered(n, m, "eta_opt");
    return ratio(n, m) * ratio(m + 2, n + 2);
}

Rational fidelity_opt(std::int64_t n, std::int64_t m) {
    require_ordered(n, m, "fidelity_opt");
    Rational num = Rational(n) * m + n + m;
    return num / (Rational(m) * (n + 2));
}

Rational eta_meas_opt(std::int64_t m) {
    if (m < 1) {
        throw ArgumentError("eta_meas_opt: M must be at least 1");
    }
    return ratio(m, m + 2);
}

Rational fidelity_meas_opt(std::int64_t m) {
    if (m < 1) {
        throw ArgumentError("fidelity_meas_opt: M must be at least 1");
    }
    return ratio(m + 1, m + 2);
}

bool BoundsReport::all_hold() const {
    for (const auto& c : inequality_checks) {
        if (!c.holds) {
            return false;
        }
    }
    return true;
}

BoundsReport check_identities(std::int64_t n, std::int64_t m, std::int64_t l) {
    require_ordered(n, m, "check_identities");
    require_ordered(m, l, "check_identities");

    BoundsReport r;
    r.n = n;
    r.m = m;
    r.l = l;
    r.eta_opt = eta_opt(n, m);
    r.fidelity_opt = fidelity_opt(n, m);
    r.eta_meas_opt = eta_meas_opt(m);
    r.fidelity_meas_opt = fidelity_meas_opt(m);

    const Rational eta_nm = r.eta_opt;
    const Rational eta_ml = eta_opt(m, l);
    const Rational eta_nl = eta_opt(n, l);
    const Rational meas_n = eta_meas_opt(n);
    const Rational meas_m = r.eta_meas_opt;
    auto& checks = r.inequality_checks;

    checks.push_back(equality("eta(N,M)*eta(M,L) == eta(N,L)", eta_nm * eta_ml, eta_nl));
    checks.push_back(equality("eta(N,M)*eta_meas(M) == eta_meas(N)", eta_nm * meas_m, meas_n));
    checks.push_back(at_most("eta(N,M)*eta_meas(M) <= eta_meas(N)", eta_nm * meas_m, meas_n));
    checks.push_back(at_most("eta(N,M) <= eta_meas(N)/eta_meas(M)", eta_nm, meas_n / meas_m));
    checks.push_back(equality("eta(N,M) == eta_meas(N)/eta_meas(M)", eta_nm, meas_n / meas_m));
    checks.push_back(at_most("eta_meas(M) <= eta(M,L)", meas_m, eta_ml));
    checks.push_back(equality("F(N,M) == (1+eta(N,M))/2", r.fidelity_opt, (1 + eta_nm) / 2));
    checks.push_back(equality("F_meas(M) == (1+eta_meas(M))/2", r.fidelity_meas_opt, (1 + meas_m) / 2));

    // eta(M,L) - eta_meas(M) = 2M / (L(M+2)): positive and O(1/L).
    const Rational decay_constant = ratio(2 * m, m + 2);
    Rational previous_gap = -1;
    for (std::int64_t big_l : {std::int64_t{1000}, std::int64_t{1000000}}) {
        if (big_l < m) {
            continue;
        }
        const Rational gap = eta_opt(m, big_l) - meas_m;
        const std::string tag = "L'=" + std::to_string(big_l);
        checks.push_back({"eta(M,L')-eta_meas(M) > 0 at " + tag, gap > 0, gap});
        checks.push_back(equality("L'*(eta(M,L')-eta_meas(M)) == 2M/(M+2) at " + tag, gap * big_l, decay_constant));
        if (previous_gap >= 0) {
            checks.push_back({"gap decreases from L'=1000 to " + tag, gap < previous_gap, previous_gap - gap});
        }
        previous_gap = gap;
    }
    return r;
}

bool cross_check(double sim, const Rational& exact, double tol) {
    if (!(tol > 0.0)) {
        throw ArgumentError("cross_check: tolerance must be positive");
    }
    return std::abs(sim - to_double(exact)) < tol;
}

}  // namespace qclone
