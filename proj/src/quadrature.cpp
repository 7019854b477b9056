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

#include "qclone/quadrature.hpp"

#include <cmath>

#include "qclone/errors.hpp"

namespace qclone {

GaussLegendreRule gauss_legendre(int n) {
    if (n < 1 || n > 512) {
        throw ArgumentError("gauss_legendre: node count out of range");
    }
    GaussLegendreRule rule;
    rule.nodes.resize(static_cast<std::size_t>(n));
    rule.weights.resize(static_cast<std::size_t>(n));
    // Newton iteration on P_n from the Chebyshev-like initial guess; roots are
    // symmetric so only half are computed.
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0;
            double p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) {
                break;
            }
        }
        // Recompute the derivative at the converged root.
        double p0 = 1.0;
        double p1 = x;
        for (int k = 2; k <= n; ++k) {
            const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[static_cast<std::size_t>(i)] = -x;
        rule.nodes[static_cast<std::size_t>(n - 1 - i)] = x;
        rule.weights[static_cast<std::size_t>(i)] = w;
        rule.weights[static_cast<std::size_t>(n - 1 - i)] = w;
    }
    if (n % 2 == 1) {
        rule.nodes[static_cast<std::size_t>(n / 2)] = 0.0;
    }
    return rule;
}

std::vector<SphereNode> sphere_rule(int polar_nodes, int azimuth_nodes) {
    if (azimuth_nodes < 1) {
        throw ArgumentError("sphere_rule: azimuth node count must be positive");
    }
    const GaussLegendreRule gl = gauss_legendre(polar_nodes);
    std::vector<SphereNode> out;
    out.reserve(static_cast<std::size_t>(polar_nodes) * static_cast<std::size_t>(azimuth_nodes));
    for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
        const double theta = std::acos(gl.nodes[i]);
        // dmu = d(cos theta) dphi / (4 pi); GL weights sum to 2, trapezoid to 2 pi.
        const double w = gl.weights[i] / (2.0 * azimuth_nodes);
        for (int j = 0; j < azimuth_nodes; ++j) {
            const double phi = 2.0 * M_PI * j / azimuth_nodes;
            out.push_back({PureQubitState::from_angles(theta, phi), w});
        }
    }
    return out;
}

int estimation_polar_nodes(int m) {
    return (2 * m + 4 + 1) / 2 + 2;
}

int estimation_azimuth_nodes(int m) {
    return 2 * m + 5;
}

CompensatedMatrixSum::CompensatedMatrixSum(Eigen::Index rows, Eigen::Index cols)
    : sum_(ComplexMatrix::Zero(rows, cols)), comp_(ComplexMatrix::Zero(rows, cols)) {}

void CompensatedMatrixSum::add(const ComplexMatrix& term) {
    auto neumaier = [](double& sum, double& comp, double x) {
        const double t = sum + x;
        if (std::abs(sum) >= std::abs(x)) {
            comp += (sum - t) + x;
        } else {
            comp += (x - t) + sum;
        }
        sum = t;
    };
    for (Eigen::Index j = 0; j < sum_.cols(); ++j) {
        for (Eigen::Index i = 0; i < sum_.rows(); ++i) {
            double sr = sum_(i, j).real();
            double si = sum_(i, j).imag();
            double cr = comp_(i, j).real();
            double ci = comp_(i, j).imag();
            neumaier(sr, cr, term(i, j).real());
            neumaier(si, ci, term(i, j).imag());
            sum_(i, j) = {sr, si};
            comp_(i, j) = {cr, ci};
        }
    }
}

}  // namespace qclone
