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

#include "seqent/analytics.hpp"

#include "seqent/error.hpp"

#include <Eigen/Dense>
#include <boost/math/distributions/binomial.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace seqent {

namespace {

void require_even(int n, const char* who) {
    if (n < 2 || n % 2 != 0 || n > 62) throw std::invalid_argument(std::string(who) + ": n must be even, 2..62");
}

double pow2(int n) { return std::ldexp(1.0, n); }

// x log2 x with the 0 log 0 = 0 convention.
double xlog2x(double x) { return x == 0.0 ? 0.0 : x * std::log2(x); }

} // namespace

double t_approx(int n, std::uint64_t m) {
    require_even(n, "t_approx");
    const double big_n = pow2(n);
    const double mm = static_cast<double>(m);
    if (mm > big_n) throw std::invalid_argument("t_approx: M exceeds N");
    const double rest = big_n - mm;
    const double dense = rest == 0.0 ? 0.0 : rest * (1.5 * n - kPageOffset) - xlog2x(rest);
    const double sparse = mm == 0.0 ? 0.0 : mm * n - xlog2x(mm);
    return (dense + sparse) / big_n;
}

double conditioned_entropy(double lambda0, double alpha, double beta) {
    if (!(lambda0 > 0.0 && lambda0 <= 1.0))
        throw std::invalid_argument("conditioned_entropy: lambda0 must lie in (0, 1]");
    if (!(alpha > 0.0 && alpha <= beta)) throw std::invalid_argument("conditioned_entropy: need 0 < alpha <= beta");
    if (lambda0 == 1.0) return 0.0;
    const double rest = 1.0 - lambda0;
    return rest * (std::log(alpha) - std::log(rest) - alpha / (2.0 * beta)) - lambda0 * std::log(lambda0);
}

namespace {

// Visits the binomial(m, 1/boxes) pmf outward from its mode, skipping the tails once a term
// drops below `floor`. Each term comes straight from Boost's pdf, so no error accumulates
// along a recurrence even at m ~ 1e6.
template <class Visit>
void visit_occupancy(double boxes, std::uint64_t m, double floor, Visit&& visit) {
    const boost::math::binomial_distribution<double> dist(static_cast<double>(m), 1.0 / boxes);
    const auto mode = std::min<std::uint64_t>(m, static_cast<std::uint64_t>((static_cast<double>(m) + 1.0) / boxes));
    for (std::uint64_t w = mode + 1; w-- > 0;) {
        const double q = boost::math::pdf(dist, static_cast<double>(w));
        visit(w, q);
        if (q < floor) break;
    }
    for (std::uint64_t w = mode + 1; w <= m; ++w) {
        const double q = boost::math::pdf(dist, static_cast<double>(w));
        visit(w, q);
        if (q < floor) break;
    }
}

} // namespace

std::vector<double> box_occupancy_pmf(int n, std::uint64_t m) {
    require_even(n, "box_occupancy_pmf");
    const double boxes = pow2(n / 2);
    std::vector<double> q(static_cast<std::size_t>(m) + 1, 0.0);
    visit_occupancy(boxes, m, 1e-300, [&](std::uint64_t w, double v) { q[w] = v; });
    return q;
}

double d_approx(int n, std::uint64_t m) {
    require_even(n, "d_approx");
    if (m < 1) throw std::invalid_argument("d_approx: need M >= 1");
    const double boxes = pow2(n / 2);
    const double mm = static_cast<double>(m);
    double sum = 0.0;
    visit_occupancy(boxes, m, 1e-15, [&](std::uint64_t w, double q) {
        if (w > 0) sum += q * xlog2x(static_cast<double>(w) / mm);
    });
    return -boxes * sum;
}

double page_value(int n) {
    require_even(n, "page_value");
    return 0.5 * n - kPageOffset;
}

double predicted_mn(int n) { return std::exp2(0.703 * n - 0.357); }

FitResult ols_fit(std::span<const Point> points) {
    if (points.size() < 2) throw std::invalid_argument("ols_fit: need at least two points");
    const double k = static_cast<double>(points.size());
    double mx = 0.0, my = 0.0;
    for (const auto& [x, y] : points) {
        mx += x;
        my += y;
    }
    mx /= k;
    my /= k;
    double sxx = 0.0, sxy = 0.0;
    for (const auto& [x, y] : points) {
        sxx += (x - mx) * (x - mx);
        sxy += (x - mx) * (y - my);
    }
    if (sxx == 0.0) throw std::invalid_argument("ols_fit: all x values are equal");
    FitResult fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    double ss = 0.0;
    for (const auto& [x, y] : points) {
        const double r = y - fit(x);
        ss += r * r;
    }
    fit.residual_rms = std::sqrt(ss / k);
    fit.points.assign(points.begin(), points.end());
    return fit;
}

Peak quadratic_peak(std::span<const Point> points) {
    if (points.size() < 3) throw std::invalid_argument("quadratic_peak: need at least three points");
    auto [lo_it, hi_it] = std::minmax_element(points.begin(), points.end(),
                                              [](const Point& a, const Point& b) { return a.first < b.first; });
    const double lo = lo_it->first;
    const double hi = hi_it->first;
    if (hi == lo) throw std::invalid_argument("quadratic_peak: x values are all equal");
    // Fit in a centered, scaled coordinate to keep the Vandermonde system well conditioned.
    const double center = 0.5 * (lo + hi);
    const double scale = 0.5 * (hi - lo);
    Eigen::MatrixXd design(static_cast<Eigen::Index>(points.size()), 3);
    Eigen::VectorXd rhs(static_cast<Eigen::Index>(points.size()));
    for (std::size_t i = 0; i < points.size(); ++i) {
        const double u = (points[i].first - center) / scale;
        const auto r = static_cast<Eigen::Index>(i);
        design(r, 0) = 1.0;
        design(r, 1) = u;
        design(r, 2) = u * u;
        rhs(r) = points[i].second;
    }
    const Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(design);
    if (qr.rank() < 3) throw std::invalid_argument("quadratic_peak: need at least three distinct x values");
    const Eigen::Vector3d c = qr.solve(rhs);
    const double tiny = 1e-12 * std::max({std::abs(c(0)), std::abs(c(1)), 1e-300});
    if (!(c(2) < -tiny)) throw FitError("quadratic_peak: fitted parabola is not concave, no interior peak");
    const double u_star = -c(1) / (2.0 * c(2));
    if (u_star < -1.0 || u_star > 1.0)
        throw FitError("quadratic_peak: vertex at " + std::to_string(center + scale * u_star) +
                       " lies outside the sampled range, no interior peak");
    return Peak{center + scale * u_star, c(0) - c(1) * c(1) / (4.0 * c(2))};
}

} // namespace seqent
