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

#include "seqent/random.hpp"
#include "seqent/state.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <vector>

namespace seqent {

/// Uniformly random M-subset of [0, 2^n), sorted. Partial Fisher-Yates over
/// an implicit index range for M <= N/2, complement sampling above that.
/// For M <= N/2 the subsets drawn from equal generator states are nested in M.
Sequence random_sequence(int n, std::uint64_t m, Rng& rng);

/// Largest sieve bound.
inline constexpr std::uint64_t kMaxSieve = std::uint64_t{1} << 24;

/// Omega(x), prime factors counted with multiplicity, for x in [0, limit).
/// Omega(0) = Omega(1) = 0.
std::vector<std::uint8_t> sieve_omega(std::uint64_t limit);

/// Integers below 2^n with 1 <= Omega <= k.
struct KAlmostUnion {
    int n;
    int k;
    /// counts[i] = pi_{i+1}(N-1), the number of (i+1)-almost primes below N.
    std::vector<std::uint64_t> counts;
    Sequence sequence;
};

KAlmostUnion k_almost_union(int n, int k);
/// Reuses a table from sieve_omega(2^n).
KAlmostUnion k_almost_union(int n, int k, std::span<const std::uint8_t> omega);

Sequence prime_state(int n);

// Serialization. Text: one decimal value per line. Binary: n and M as 64-bit
// little-endian words, then M sorted 64-bit little-endian values.
void write_text(std::ostream& out, const Sequence& seq);
Sequence read_text(std::istream& in, int n);
void write_binary(std::ostream& out, const Sequence& seq);
Sequence read_binary(std::istream& in);

/// Detects the format from the content. Text files need n from the caller;
/// for binary files a given n must match the header.
Sequence load_sequence(const std::filesystem::path& path, int n = 0);

} // namespace seqent
