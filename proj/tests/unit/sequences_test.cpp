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

#include <gtest/gtest.h>

#include <cmath>
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>

namespace seqent {
namespace {

TEST(RandomSequence, FullLengthIsEverything) {
    Rng rng(1);
    const auto seq = random_sequence(5, 32, rng);
    for (Basis x = 0; x < 32; ++x) EXPECT_EQ(seq.elements()[x], x);
}

TEST(RandomSequence, RejectsBadLength) {
    Rng rng(1);
    EXPECT_THROW(random_sequence(4, 0, rng), std::invalid_argument);
    EXPECT_THROW(random_sequence(4, 17, rng), std::invalid_argument);
}

TEST(RandomSequence, SingletonIsUniform) {
    Rng rng(2024);
    const int draws = 100000;
    std::vector<int> freq(16, 0);
    for (int i = 0; i < draws; ++i) freq[random_sequence(4, 1, rng).elements()[0]]++;
    const double p = 1.0 / 16.0;
    const double sigma = std::sqrt(draws * p * (1 - p));
    double chi2 = 0.0;
    for (int f : freq) {
        EXPECT_NEAR(f, draws * p, 4.0 * sigma);
        chi2 += (f - draws * p) * (f - draws * p) / (draws * p);
    }
    // 15 degrees of freedom; 99.9th percentile is 37.7
    EXPECT_LT(chi2, 37.7);
}

TEST(RandomSequence, InclusionFrequencyIsHalfAtHalfDensity) {
    Rng rng(77);
    const int draws = 100000;
    std::vector<int> hits(16, 0);
    for (int i = 0; i < draws; ++i) {
        const auto seq = random_sequence(4, 8, rng);
        for (Basis x : seq.elements()) hits[x]++;
    }
    const double sigma = std::sqrt(draws * 0.25);
    for (int h : hits) EXPECT_NEAR(h, draws * 0.5, 4.0 * sigma);
}

TEST(RandomSequence, ComplementBranchIsUniformToo) {
    Rng rng(78);
    const int draws = 50000;
    std::vector<int> hits(16, 0);
    for (int i = 0; i < draws; ++i) {
        const auto seq = random_sequence(4, 13, rng);
        for (Basis x : seq.elements()) hits[x]++;
    }
    const double p = 13.0 / 16.0;
    const double sigma = std::sqrt(draws * p * (1 - p));
    for (int h : hits) EXPECT_NEAR(h, draws * p, 4.0 * sigma);
}

TEST(RandomSequence, NestedAcrossLengthsForEqualStreams) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Rng a(seed), b(seed);
        const auto small = random_sequence(10, 40, a);
        const auto large = random_sequence(10, 300, b);
        EXPECT_TRUE(std::includes(large.elements().begin(), large.elements().end(), small.elements().begin(),
                                  small.elements().end()));
    }
}

TEST(SieveOmega, Examples) {
    const auto omega = sieve_omega(32);
    EXPECT_EQ(omega[12], 3);
    EXPECT_EQ(omega[31], 1);
    EXPECT_EQ(omega[0], 0);
    EXPECT_EQ(omega[1], 0);
    int primes = 0;
    for (std::uint64_t x = 0; x < 32; ++x) primes += omega[x] == 1;
    EXPECT_EQ(primes, 11);
    int oracle_primes = 0;
    for (std::uint64_t x = 0; x < 32; ++x) oracle_primes += oracle::trial_division_omega(x) == 1;
    EXPECT_EQ(oracle_primes, 11);
}

TEST(SieveOmega, AgreesWithTrialDivisionBelow2To16) {
    const auto omega = sieve_omega(std::uint64_t{1} << 16);
    for (std::uint64_t x = 0; x < omega.size(); ++x) ASSERT_EQ(omega[x], oracle::trial_division_omega(x)) << x;
}

TEST(SieveOmega, RejectsHugeLimits) { EXPECT_THROW(sieve_omega(kMaxSieve + 1), std::invalid_argument); }

TEST(KAlmostUnion, PrimesAndSemiprimesBelow32) {
    const auto k1 = k_almost_union(5, 1);
    EXPECT_EQ(k1.sequence.size(), 11u);
    EXPECT_EQ(k1.counts, std::vector<std::uint64_t>{11});
    const auto k2 = k_almost_union(5, 2);
    EXPECT_EQ(k2.sequence.size(), 21u);
    EXPECT_EQ(k2.counts, (std::vector<std::uint64_t>{11, 10}));
    std::vector<Basis> semiprimes;
    std::set_difference(k2.sequence.elements().begin(), k2.sequence.elements().end(), k1.sequence.elements().begin(),
                        k1.sequence.elements().end(), std::back_inserter(semiprimes));
    EXPECT_EQ(semiprimes, (std::vector<Basis>{4, 6, 9, 10, 14, 15, 21, 22, 25, 26}));
}

TEST(KAlmostUnion, NestedAndCoversAtTop) {
    for (int n = 2; n <= 12; ++n) {
        const std::uint64_t dim = std::uint64_t{1} << n;
        std::vector<Basis> previous;
        for (int k = 1; k <= n - 1; ++k) {
            const auto u = k_almost_union(n, k);
            const auto elems = u.sequence.elements();
            EXPECT_TRUE(std::includes(elems.begin(), elems.end(), previous.begin(), previous.end()));
            std::uint64_t total = 0;
            for (auto c : u.counts) total += c;
            EXPECT_EQ(total, u.sequence.size());
            previous.assign(elems.begin(), elems.end());
        }
        // k = n-1: every integer 2..N-1
        EXPECT_EQ(previous.size(), dim - 2);
        EXPECT_EQ(previous.front(), 2u);
        EXPECT_EQ(previous.back(), dim - 1);
    }
    EXPECT_THROW(k_almost_union(5, 0), std::invalid_argument);
    EXPECT_THROW(k_almost_union(5, 5), std::invalid_argument);
}

TEST(PrimeState, SmallRegisters) {
    EXPECT_EQ(prime_state(2), Sequence(2, {2, 3}));
    EXPECT_EQ(prime_state(3), Sequence(3, {2, 3, 5, 7}));
    EXPECT_EQ(prime_state(5).size(), 11u);
}

TEST(SequenceIo, TextFormat) {
    const Sequence seq(6, {1, 7, 40});
    std::ostringstream out;
    write_text(out, seq);
    EXPECT_EQ(out.str(), "1\n7\n40\n");
    std::istringstream in("# comment\n40\n 1\n\n7\n");
    EXPECT_EQ(read_text(in, 6), seq);
    std::istringstream bad("1\nx\n");
    EXPECT_THROW(read_text(bad, 6), std::invalid_argument);
}

TEST(SequenceIo, BinaryLayoutIsLittleEndian) {
    const Sequence seq(10, {3, 258});
    std::ostringstream out(std::ios::binary);
    write_binary(out, seq);
    const std::string bytes = out.str();
    ASSERT_EQ(bytes.size(), 32u);
    EXPECT_EQ(bytes[0], 10);
    EXPECT_EQ(bytes[8], 2);
    EXPECT_EQ(bytes[16], 3);
    EXPECT_EQ(static_cast<unsigned char>(bytes[24]), 2u);
    EXPECT_EQ(static_cast<unsigned char>(bytes[25]), 1u);
    for (std::size_t i : {1u, 7u, 9u, 15u, 17u, 26u, 31u}) EXPECT_EQ(bytes[i], 0);
}

TEST(SequenceIo, RoundTripsRandomSequencesThroughFiles) {
    Rng rng(5);
    const auto dir = std::filesystem::temp_directory_path() / "seqent_io_test";
    std::filesystem::create_directories(dir);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 1 + trial % 16;
        const auto seq = random_sequence(n, 1 + rng() % (std::uint64_t{1} << n), rng);
        const auto text = dir / "s.txt";
        const auto bin = dir / "s.bin";
        {
            std::ofstream t(text);
            write_text(t, seq);
            std::ofstream b(bin, std::ios::binary);
            write_binary(b, seq);
        }
        EXPECT_EQ(load_sequence(text, n), seq);
        EXPECT_EQ(load_sequence(bin), seq);
        if (n > 1) EXPECT_THROW(load_sequence(bin, n - 1), std::invalid_argument);
    }
    EXPECT_THROW(load_sequence(dir / "s.txt"), std::invalid_argument); // text needs n
    std::filesystem::remove_all(dir);
}

} // namespace
} // namespace seqent
