// Copyright 2026 The seqent Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <numbers>
#include <span>
#include <utility>
#include <vector>

namespace seqent {

/// c = log2(e)/2, the offset of the mean Haar entropy below n/2.
inline constexpr double kPageOffset = 0.5 * std::numbers::log2e;

/// Closed-form estimate of the mean entropy of length-M sequence states, in
/// bits. Defined for 0 <= M <= N; vanishing x log x terms are dropped.
double t_approx(int n, std::uint64_t m);

/// Mean entropy in nats of a random alpha x beta reduced state whose dominant
/// eigenvalue is lambda0. Requires 0 < lambda0 <= 1 and 0 < alpha <= beta.
double conditioned_entropy(double lambda0, double alpha, double beta);

/// q_W for W = 0..M: probability that one of sqrt(N) boxes receives exactly W
/// of M uniformly thrown balls. Evaluated in log space.
std::vector<double> box_occupancy_pmf(int n, std::uint64_t m);

/// Sparse-regime estimate -sqrt(N) sum_W q_W (W/M) log2(W/M), in bits.
/// Terms past the mode below 1e-15 are truncated.
double d_approx(int n, std::uint64_t m);

/// n/2 - c.
double page_value(int n);

/// M_n seed from the published scaling law log2 M_n = 0.703 n - 0.357.
double predicted_mn(int n);

using Point = std::pair<double, double>;

struct FitResult {
    double slope = 0.0;
    double intercept = 0.0;
    double residual_rms = 0.0;
    std::vector<Point> points;

    double operator()(double x) const { return slope * x + intercept; }
};

/// Ordinary least squares. Needs at least two distinct abscissae.
FitResult ols_fit(std::span<const Point> points);

struct Peak {
    double x;
    double y;
};

/// Vertex of the least-squares parabola through the points. Throws FitError
/// when the fit is not concave or the vertex falls outside the sampled range.
Peak quadratic_peak(std::span<const Point> points);

} // namespace seqent
