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

#include <vector>

#include "qclone/linalg.hpp"

namespace qclone {

struct GaussLegendreRule {
    std::vector<double> nodes;    // in (-1, 1), ascending
    std::vector<double> weights;  // sum to 2
};

/// n-point Gauss-Legendre rule on [-1, 1]; exact for polynomials of degree <= 2n-1.
GaussLegendreRule gauss_legendre(int n);

struct SphereNode {
    PureQubitState state;
    double weight;  // Haar-normalized: all weights sum to 1
};

/// Product rule on the Bloch sphere: Gauss-Legendre in cos(theta) times the
/// trapezoid rule in phi. Integrates against the normalized Haar measure.
std::vector<SphereNode> sphere_rule(int polar_nodes, int azimuth_nodes);

/// Node counts used to integrate the degree-(m+1) integrands that arise from
/// m-copy covariant estimation.
int estimation_polar_nodes(int m);
int estimation_azimuth_nodes(int m);

/// Neumaier-compensated accumulation of complex matrices.
class CompensatedMatrixSum {
   public:
    CompensatedMatrixSum(Eigen::Index rows, Eigen::Index cols);
    void add(const ComplexMatrix& term);
    ComplexMatrix value() const { return sum_ + comp_; }

   private:
    ComplexMatrix sum_;
    ComplexMatrix comp_;
};

}  // namespace qclone
