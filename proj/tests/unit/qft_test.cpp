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

#include "oracles.hpp"

#include <seqent/sequences.hpp>
#include <seqent/state.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

namespace seqent {
namespace {

void expect_close(const PureState& a, const std::vector<Complex>& b, double tol) {
    ASSERT_EQ(a.dimension(), b.size());
    for (Basis x = 0; x < b.size(); ++x) EXPECT_NEAR(std::abs(a.amplitude(x) - b[x]), 0.0, tol) << "index " << x;
}

TEST(Qft, DeltaBecomesUniform) {
    const auto out = qft(encode_sequence(Sequence(2, {0})));
    for (Basis y = 0; y < 4; ++y) EXPECT_NEAR(std::abs(out.amplitude(y) - Complex{0.5}), 0.0, 1e-15);
}

TEST(Qft, BellPairHandValues) {
    const double r = 1.0 / (2.0 * std::numbers::sqrt2);
    const std::vector<Complex> expected{{1.0 / std::numbers::sqrt2, 0.0}, {r, -r}, {0.0, 0.0}, {r, r}};
    const auto state = encode_sequence(Sequence(2, {0, 3}));
    const auto out = qft(state);
    expect_close(out, expected, 1e-15);
    const std::vector<Complex> in(state.amplitudes().begin(), state.amplitudes().end());
    expect_close(out, oracle::dft(in), 1e-15);
}

TEST(Qft, MatchesDirectTransformOnBothPaths) {
    Rng rng(17);
    for (int n = 1; n <= 10; ++n) {
        // dense inputs take the FFT path, sparse ones (fewer than n nonzeros) the direct sum
        for (const bool sparse : {false, true}) {
            PureState s = sparse && n > 1 ? encode_sequence(random_sequence(n, 1 + rng() % (n - 1), rng)) : haar_state(n, rng);
            const std::vector<Complex> in(s.amplitudes().begin(), s.amplitudes().end());
            expect_close(qft(s), oracle::dft(in), 1e-12);
        }
    }
}

TEST(Qft, UnitaryAndPeriodFour) {
    Rng rng(23);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 1 + trial % 12;
        const PureState s = trial % 3 == 0 ? encode_sequence(random_sequence(n, 1 + rng() % (std::uint64_t{1} << n), rng))
                                           : haar_state(n, rng);
        const auto once = qft(s);
        EXPECT_NEAR(once.norm(), 1.0, 1e-10);
        const auto four = qft(qft(qft(once)));
        double err = 0.0;
        for (Basis x = 0; x < s.dimension(); ++x) err = std::max(err, std::abs(four.amplitude(x) - s.amplitude(x)));
        EXPECT_LT(err, 1e-9);
    }
}

TEST(Qft, FullSuperpositionMapsToZeroState) {
    std::vector<Basis> all(256);
    std::iota(all.begin(), all.end(), 0);
    const auto out = qft(encode_sequence(Sequence(8, all)));
    EXPECT_NEAR(std::abs(out.amplitude(0) - Complex{1.0}), 0.0, 1e-12);
    EXPECT_NEAR(entanglement_entropy(out, Bipartition::natural(8)), 0.0, 1e-10);
}

} // namespace
} // namespace seqent
