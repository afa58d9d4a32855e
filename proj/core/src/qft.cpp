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

#include "seqent/state.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <memory>
#include <mutex>
#include <numbers>

namespace seqent {

namespace {

// The FFTW planner is not reentrant; execution on a private plan is.
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

struct PlanDeleter {
    void operator()(fftw_plan_s* p) const {
        std::lock_guard lock(planner_mutex());
        fftw_destroy_plan(p);
    }
};

std::vector<Complex> fft_backward(std::span<const Complex> in) {
    std::vector<Complex> work(in.begin(), in.end());
    std::vector<Complex> out(in.size());
    const int size = static_cast<int>(in.size());
    std::unique_ptr<fftw_plan_s, PlanDeleter> plan;
    {
        std::lock_guard lock(planner_mutex());
        plan.reset(fftw_plan_dft_1d(size, reinterpret_cast<fftw_complex*>(work.data()),
                                    reinterpret_cast<fftw_complex*>(out.data()), FFTW_BACKWARD, FFTW_ESTIMATE));
    }
    fftw_execute(plan.get());
    return out;
}

// O(N K) summation over the K nonzero inputs; phases use the exact residue
// x*y mod N.
std::vector<Complex> sparse_transform(std::span<const Complex> in) {
    const std::uint64_t dim = in.size();
    const std::uint64_t mask = dim - 1;
    std::vector<std::pair<std::uint64_t, Complex>> support;
    for (std::uint64_t x = 0; x < dim; ++x)
        if (in[x] != Complex{}) support.emplace_back(x, in[x]);
    const double step = 2.0 * std::numbers::pi / static_cast<double>(dim);
    std::vector<Complex> out(dim);
    for (std::uint64_t y = 0; y < dim; ++y) {
        Complex acc{};
        for (const auto& [x, a] : support) acc += a * std::polar(1.0, step * static_cast<double>((x * y) & mask));
        out[y] = acc;
    }
    return out;
}

} // namespace

PureState qft(const PureState& state) {
    const int n = state.qubits();
    const auto in = state.amplitudes();
    const auto nonzero = static_cast<std::size_t>(
        std::count_if(in.begin(), in.end(), [](const Complex& a) { return a != Complex{}; }));
    std::vector<Complex> out =
        nonzero < static_cast<std::size_t>(n) ? sparse_transform(in) : fft_backward(in);
    const double scale = 1.0 / std::sqrt(static_cast<double>(in.size()));
    for (auto& v : out) v *= scale;
    return PureState(n, std::move(out));
}

} // namespace seqent
