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

#include <seqent/error.hpp>
#include <seqent/partitions.hpp>
#include <seqent/sequences.hpp>
#include <seqent/state.hpp>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

namespace seqent {
namespace {

const double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

std::vector<Basis> support_of(const PureState& s) {
    std::vector<Basis> out;
    for (Basis x = 0; x < s.dimension(); ++x)
        if (s.amplitude(x) != Complex{}) out.push_back(x);
    return out;
}

TEST(Sequence, RejectsDuplicatesAndOutOfRange) {
    EXPECT_THROW(Sequence(2, {0, 0}), std::invalid_argument);
    EXPECT_THROW(Sequence(2, {3, 1}), std::invalid_argument);
    EXPECT_THROW(Sequence(2, {4}), std::invalid_argument);
    EXPECT_THROW(Sequence(2, {}), std::invalid_argument);
    EXPECT_THROW(Sequence::from_values(3, {5, 1, 5}), std::invalid_argument);
    EXPECT_EQ(Sequence::from_values(3, {5, 1, 7}).elements().size(), 3u);
}

TEST(EncodeSequence, BellPair) {
    const auto s = encode_sequence(Sequence(2, {0, 3}));
    EXPECT_NEAR(s.amplitude(0).real(), kInvSqrt2, 1e-15);
    EXPECT_EQ(s.amplitude(1), Complex{});
    EXPECT_EQ(s.amplitude(2), Complex{});
    EXPECT_NEAR(s.amplitude(3).real(), kInvSqrt2, 1e-15);
}

TEST(EncodeSequence, FullSuperpositionIsProductState) {
    std::vector<Basis> all(16);
    std::iota(all.begin(), all.end(), 0);
    const auto s = encode_sequence(Sequence(4, all));
    for (Basis x = 0; x < 16; ++x) EXPECT_DOUBLE_EQ(s.amplitude(x).real(), 0.25);
    EXPECT_NEAR(entanglement_entropy(s, Bipartition::natural(4)), 0.0, 1e-12);
}

TEST(EncodeSequence, Singleton) {
    const auto s = encode_sequence(Sequence(4, {5}));
    for (Basis x = 0; x < 16; ++x) EXPECT_EQ(s.amplitude(x), x == 5 ? Complex{1.0} : Complex{});
}

TEST(EncodeSequence, SupportRoundTripsRandomSequences) {
    Rng rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + trial % 10;
        const std::uint64_t m = 1 + rng() % (std::uint64_t{1} << n);
        const auto seq = random_sequence(n, m, rng);
        const auto state = encode_sequence(seq);
        const auto sup = support_of(state);
        ASSERT_EQ(sup, std::vector<Basis>(seq.elements().begin(), seq.elements().end()));
        EXPECT_NEAR(state.norm(), 1.0, 1e-12);
    }
}

TEST(PureState, RejectsUnnormalizedAndOversized) {
    EXPECT_THROW(PureState(1, {Complex{1.0}, Complex{1.0}}), std::invalid_argument);
    EXPECT_THROW(PureState(2, {Complex{1.0}}), std::invalid_argument);
    EXPECT_THROW(encode_sequence(Sequence(25, {0})), std::invalid_argument);
}

TEST(Rainbow, SingleBellPair) {
    EXPECT_EQ(rainbow_sequence(2), Sequence(2, {1, 2}));
    EXPECT_EQ(rainbow_sequence(4), Sequence(4, {3, 5, 10, 12}));
    EXPECT_THROW(rainbow_sequence(3), std::invalid_argument);
}

TEST(Rainbow, NaturalEntropyIsHalfTheRegister) {
    EXPECT_NEAR(entanglement_entropy(rainbow_state(2), Bipartition::natural(2)), 1.0, 1e-10);
    EXPECT_NEAR(entanglement_entropy(rainbow_state(4), Bipartition::natural(4)), 2.0, 1e-10);
    for (int n = 2; n <= 12; n += 2) {
        EXPECT_NEAR(entanglement_entropy(rainbow_state(n), Bipartition::natural(n)), n / 2.0, 1e-10) << n;
        EXPECT_EQ(rainbow_sequence(n).size(), std::size_t{1} << (n / 2));
    }
}

TEST(Rainbow, FlatSpectrum) {
    const auto spec = reduced_spectrum(rainbow_state(4), Bipartition::natural(4));
    ASSERT_EQ(spec.size(), 4u);
    for (double l : spec.values()) EXPECT_NEAR(l, 0.25, 1e-14);
}

TEST(Haar, NormalizedAndBounded) {
    Rng rng(3);
    for (int i = 0; i < 50; ++i) {
        const auto s = haar_state(2, rng);
        EXPECT_NEAR(s.norm(), 1.0, 1e-10);
        const double e = entanglement_entropy(s, Bipartition::natural(2));
        EXPECT_GE(e, 0.0);
        EXPECT_LE(e, 1.0);
    }
}

TEST(Haar, MeanEntropyAtTenQubitsMatchesPageValue) {
    Rng rng(20240);
    double sum = 0.0;
    const int draws = 200;
    for (int i = 0; i < draws; ++i) sum += entanglement_entropy(haar_state(10, rng), Bipartition::natural(10));
    EXPECT_NEAR(sum / draws, 4.279, 0.05);
}

TEST(Reshape, BellNatural) {
    const auto m = reshape(encode_sequence(Sequence(2, {0, 3})), Bipartition::natural(2));
    ASSERT_EQ(m.rows(), 2);
    ASSERT_EQ(m.cols(), 2);
    EXPECT_NEAR(m(0, 0).real(), kInvSqrt2, 1e-15);
    EXPECT_NEAR(std::abs(m(0, 1)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(m(1, 0)), 0.0, 1e-15);
    EXPECT_NEAR(m(1, 1).real(), kInvSqrt2, 1e-15);
}

TEST(Reshape, FullSuperpositionIsRankOne) {
    const auto m = reshape(encode_sequence(Sequence(2, {0, 1, 2, 3})), Bipartition::natural(2));
    for (Eigen::Index r = 0; r < 2; ++r)
        for (Eigen::Index c = 0; c < 2; ++c) EXPECT_DOUBLE_EQ(m(r, c).real(), 0.5);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    EXPECT_NEAR(svd.singularValues()(1), 0.0, 1e-14);
}

TEST(Reshape, EntryIndexingFollowsSubsetOrder) {
    // A = {0, 2}: row bits (q0, q2), column bits (q1, q3).
    const Bipartition part(4, {2, 0});
    std::vector<Complex> amps(16);
    amps[0b0101] = 1.0; // q0=1, q2=1 -> row 3; q1=0, q3=0 -> col 0
    const auto m = reshape(PureState(4, amps), part);
    EXPECT_EQ(m(3, 0), Complex{1.0});
    amps[0b0101] = 0.0;
    amps[0b1010] = 1.0; // row 0, col 3
    EXPECT_EQ(reshape(PureState(4, amps), part)(0, 3), Complex{1.0});
}

TEST(Reshape, PreservesFrobeniusNorm) {
    Rng rng(5);
    for (int n = 2; n <= 8; ++n) {
        const auto s = haar_state(n, rng);
        auto parts = enumerate_partitions(n, 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n - 1)));
        const auto m = reshape(s, parts[rng() % parts.size()]);
        EXPECT_NEAR(m.squaredNorm(), 1.0, 1e-12);
    }
}

TEST(ReducedSpectrum, FullSuperpositionSingleEigenvalue) {
    std::vector<Basis> all(16);
    std::iota(all.begin(), all.end(), 0);
    const auto spec = reduced_spectrum(encode_sequence(Sequence(4, all)), Bipartition::natural(4));
    ASSERT_EQ(spec.size(), 4u);
    EXPECT_NEAR(spec.values()[0], 1.0, 1e-14);
    for (std::size_t i = 1; i < 4; ++i) EXPECT_NEAR(spec.values()[i], 0.0, 1e-14);
}

TEST(ReducedSpectrum, LengthIsSmallerSide) {
    Rng rng(1);
    const auto s = haar_state(6, rng);
    EXPECT_EQ(reduced_spectrum(s, Bipartition(6, {0})).size(), 2u);
    EXPECT_EQ(reduced_spectrum(s, Bipartition(6, {0, 1, 2, 3, 5})).size(), 2u);
    EXPECT_EQ(reduced_spectrum(s, Bipartition(6, {1, 4})).size(), 4u);
}

TEST(ReducedSpectrum, SequencePathMatchesDenseState) {
    Rng rng(8);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 2 + trial % 11;
        const auto seq = random_sequence(n, 1 + rng() % (std::uint64_t{1} << n), rng);
        const auto parts = enumerate_partitions(n, 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n - 1)));
        const auto& part = parts[rng() % parts.size()];
        const auto a = reduced_spectrum(seq, part);
        const auto b = reduced_spectrum(encode_sequence(seq), part);
        ASSERT_EQ(a.size(), b.size());
        for (std::size_t i = 0; i < a.size(); ++i) EXPECT_NEAR(a.values()[i], b.values()[i], 1e-13);
    }
}

void expect_matches_oracle(const PureState& state, const Bipartition& part) {
    const std::vector<Complex> amps(state.amplitudes().begin(), state.amplitudes().end());
    const std::vector<int> a(part.subset_a().begin(), part.subset_a().end());
    const auto expected = oracle::eigenvalues_desc(oracle::density_matrix(amps, state.qubits(), a));
    const auto got = reduced_spectrum(state, part);
    // The oracle matrix is 2^|A| wide; compare the leading entries and require
    // the rest to vanish.
    for (std::size_t i = 0; i < expected.size(); ++i) {
        const double g = i < got.size() ? got.values()[i] : 0.0;
        ASSERT_NEAR(g, expected[i], 1e-10) << "eigenvalue " << i;
    }
}

TEST(ReducedSpectrum, MatchesDensityMatrixOracleForEverySequenceUpToFourQubits) {
    for (int n = 2; n <= 4; ++n) {
        const std::uint64_t dim = std::uint64_t{1} << n;
        std::vector<Bipartition> parts;
        for (int k = 1; k < n; ++k)
            for (auto& p : enumerate_partitions(n, k)) parts.push_back(p);
        for (std::uint64_t subset = 1; subset < (std::uint64_t{1} << dim); ++subset) {
            std::vector<Basis> elems;
            for (Basis x = 0; x < dim; ++x)
                if ((subset >> x) & 1u) elems.push_back(x);
            const auto state = encode_sequence(Sequence(n, elems));
            for (const auto& p : parts) expect_matches_oracle(state, p);
        }
    }
}

TEST(ReducedSpectrum, MatchesDensityMatrixOracleAtSixQubits) {
    Rng rng(66);
    for (int trial = 0; trial < 200; ++trial) {
        const auto seq = random_sequence(6, 1 + rng() % 64, rng);
        const int k = 1 + static_cast<int>(rng() % 5);
        const auto parts = enumerate_partitions(6, k);
        expect_matches_oracle(encode_sequence(seq), parts[rng() % parts.size()]);
    }
    for (int trial = 0; trial < 20; ++trial)
        expect_matches_oracle(haar_state(6, rng), enumerate_partitions(6, 3)[rng() % 10]);
}

TEST(ReducedSpectrum, ComplementGivesSameSpectrumAndUnitTrace) {
    Rng rng(99);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 9);
        const PureState s = trial % 2 ? haar_state(n, rng)
                                      : encode_sequence(random_sequence(n, 1 + rng() % (std::uint64_t{1} << n), rng));
        const auto parts = enumerate_partitions(n, 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n - 1)));
        const auto& p = parts[rng() % parts.size()];
        const auto a = reduced_spectrum(s, p);
        const auto b = reduced_spectrum(s, p.complement());
        ASSERT_EQ(a.size(), b.size());
        double sum = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            EXPECT_NEAR(a.values()[i], b.values()[i], 1e-10);
            sum += a.values()[i];
        }
        EXPECT_NEAR(sum, 1.0, 1e-8);
        const double e = von_neumann(a);
        EXPECT_GE(e, 0.0);
        EXPECT_LE(e, std::min(p.size_a(), p.size_b()) + 1e-12);
    }
}

TEST(Spectrum, ClampsRoundoffAndRejectsRealNegatives) {
    const auto s = Spectrum::from_eigenvalues({-5e-11, 1.0});
    EXPECT_EQ(s.values()[1], 0.0);
    EXPECT_EQ(s.dominant(), 1.0);
    EXPECT_THROW(Spectrum::from_eigenvalues({1.0 + 1e-9, -1e-9}), NumericalError);
    EXPECT_THROW(Spectrum::from_eigenvalues({0.5, 0.4}), NumericalError);
    EXPECT_THROW(Spectrum::from_eigenvalues({}), NumericalError);
}

TEST(VonNeumann, Examples) {
    EXPECT_EQ(von_neumann(Spectrum::from_eigenvalues({1.0, 0.0})), 0.0);
    EXPECT_DOUBLE_EQ(von_neumann(Spectrum::from_eigenvalues({0.5, 0.5})), 1.0);
}

TEST(VonNeumann, BellPairAfterQft) {
    const auto spec = reduced_spectrum(qft(encode_sequence(Sequence(2, {0, 3}))), Bipartition::natural(2));
    EXPECT_NEAR(spec.values()[0], (2.0 + std::numbers::sqrt2) / 4.0, 1e-14);
    EXPECT_NEAR(spec.values()[1], (2.0 - std::numbers::sqrt2) / 4.0, 1e-14);
    // -(sum) with lambda = (2 +- sqrt 2)/4, evaluated at 40 digits.
    EXPECT_NEAR(von_neumann(spec), 0.6008760366928561, 1e-14);
}

using big = boost::multiprecision::cpp_bin_float_50;

big renyi_reference(const std::vector<big>& lambdas, const big& d) {
    big sum = 0;
    for (const auto& l : lambdas)
        if (l > 0) sum += boost::multiprecision::pow(l, d);
    return boost::multiprecision::log(sum) / boost::multiprecision::log(big(2)) / (1 - d);
}

TEST(Renyi, Examples) {
    EXPECT_DOUBLE_EQ(renyi(Spectrum::from_eigenvalues({0.5, 0.5}), 2.0), 1.0);
    for (double d : {0.25, 0.5, 2.0, 3.0, 10.0}) EXPECT_EQ(renyi(Spectrum::from_eigenvalues({1.0, 0.0}), d), 0.0);
    const double reference = static_cast<double>(renyi_reference({big(3) / 4, big(1) / 4}, big(2)));
    EXPECT_NEAR(reference, 0.6780719051126377, 1e-15);
    EXPECT_NEAR(renyi(Spectrum::from_eigenvalues({0.75, 0.25}), 2.0), reference, 1e-14);
    EXPECT_THROW(renyi(Spectrum::from_eigenvalues({1.0}), -0.5), std::invalid_argument);
}

TEST(Renyi, OrderZeroCountsSupport) {
    EXPECT_DOUBLE_EQ(renyi(Spectrum::from_eigenvalues({0.5, 0.25, 0.25, 0.0}), 0.0), std::log2(3.0));
}

TEST(Renyi, AgreesWithHighPrecisionOnRandomSpectra) {
    Rng rng(4);
    for (int trial = 0; trial < 20; ++trial) {
        const auto spec = reduced_spectrum(haar_state(6, rng), Bipartition::natural(6));
        std::vector<big> ls(spec.values().begin(), spec.values().end());
        for (double d : {0.3, 0.7, 1.5, 2.0, 4.0})
            EXPECT_NEAR(renyi(spec, d), static_cast<double>(renyi_reference(ls, big(d))), 1e-12);
    }
}

TEST(Renyi, MonotoneInOrder) {
    Rng rng(12);
    const std::vector<double> orders{0.0, 0.1, 0.5, 0.9, 0.999, 1.0, 1.001, 1.5, 2.0, 3.0, 5.0, 20.0};
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 2 * (1 + static_cast<int>(rng() % 4));
        const PureState s = trial % 2 ? haar_state(n, rng)
                                      : encode_sequence(random_sequence(n, 1 + rng() % (std::uint64_t{1} << n), rng));
        const auto spec = reduced_spectrum(s, Bipartition::natural(n));
        for (std::size_t i = 1; i < orders.size(); ++i)
            EXPECT_GE(renyi(spec, orders[i - 1]) + 1e-12, renyi(spec, orders[i]));
    }
}

// Near d = 1 the Renyi entropy moves off the von Neumann value with slope
// -(ln 2 / 2) Var(log2 lambda), so the gap at 1 +- h is bounded by that
// slope times h and vanishes as h -> 0.
TEST(Renyi, ContinuousAtOrderOne) {
    Rng rng(31);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 2 * (1 + static_cast<int>(rng() % 4));
        const auto spec = reduced_spectrum(haar_state(n, rng), Bipartition::natural(n));
        const double s = von_neumann(spec);
        double var = 0.0;
        for (double l : spec.values())
            if (l > 0.0) var += l * (-std::log2(l) - s) * (-std::log2(l) - s);
        const double slope = 0.5 * std::numbers::ln2 * var;
        for (double h : {1e-4, -1e-4}) EXPECT_NEAR(renyi(spec, 1.0 + h), s, 1.01 * slope * std::abs(h) + 1e-9);
        for (double h : {1e-6, -1e-6}) EXPECT_NEAR(renyi(spec, 1.0 + h), s, 1e-6);
    }
    // Flat spectra do not move at all.
    const auto flat = Spectrum::from_eigenvalues({0.25, 0.25, 0.25, 0.25});
    EXPECT_NEAR(renyi(flat, 1.0 + 1e-4), von_neumann(flat), 1e-10);
}

TEST(BernoulliMatrix, FullDensityIsAllOnes) {
    Rng rng(1);
    const auto w = bernoulli_matrix(6, 64, rng);
    EXPECT_EQ(w.sum(), 64.0);
    const auto spec = gram_spectrum(w);
    EXPECT_NEAR(spec.dominant(), 1.0, 1e-12);
}

TEST(BernoulliMatrix, MeanOccupancyAtSingleElement) {
    Rng rng(2);
    const int draws = 4000;
    double total = 0.0;
    for (int i = 0; i < draws; ++i) total += bernoulli_matrix(14, 1, rng).sum();
    // Binomial(16384, 1/16384): mean 1, variance ~1.
    EXPECT_NEAR(total / draws, 1.0, 4.0 / std::sqrt(draws));
    EXPECT_THROW(bernoulli_matrix(14, 0, rng), std::invalid_argument);
    EXPECT_THROW(gram_spectrum(Eigen::MatrixXd::Zero(4, 4)), std::domain_error);
}

} // namespace
} // namespace seqent
