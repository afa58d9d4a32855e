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

#include "seqent/sequences.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace seqent {

namespace {

// First `count` entries of a Fisher-Yates shuffle of [0, dim), storing only
// the displaced slots.
std::vector<Basis> partial_shuffle(std::uint64_t dim, std::uint64_t count, Rng& rng) {
    std::unordered_map<std::uint64_t, std::uint64_t> moved;
    moved.reserve(static_cast<std::size_t>(2 * count));
    std::vector<Basis> picked;
    picked.reserve(static_cast<std::size_t>(count));
    for (std::uint64_t i = 0; i < count; ++i) {
        std::uniform_int_distribution<std::uint64_t> pick(i, dim - 1);
        const std::uint64_t j = pick(rng);
        const auto at = [&](std::uint64_t k) {
            const auto it = moved.find(k);
            return it == moved.end() ? k : it->second;
        };
        const std::uint64_t vi = at(i);
        const std::uint64_t vj = at(j);
        moved[j] = vi;
        picked.push_back(vj);
    }
    return picked;
}

} // namespace

Sequence random_sequence(int n, std::uint64_t m, Rng& rng) {
    if (n < 1 || n > kMaxSequenceQubits) throw std::invalid_argument("random_sequence: n out of range");
    const std::uint64_t dim = std::uint64_t{1} << n;
    if (m < 1 || m > dim)
        throw std::invalid_argument("random_sequence: need 1 <= M <= 2^n, got M = " + std::to_string(m));
    if (m <= dim / 2) {
        auto picked = partial_shuffle(dim, m, rng);
        return Sequence::from_values(n, std::move(picked));
    }
    auto excluded = partial_shuffle(dim, dim - m, rng);
    std::sort(excluded.begin(), excluded.end());
    std::vector<Basis> kept;
    kept.reserve(static_cast<std::size_t>(m));
    auto skip = excluded.begin();
    for (Basis x = 0; x < dim; ++x) {
        if (skip != excluded.end() && *skip == x) {
            ++skip;
            continue;
        }
        kept.push_back(x);
    }
    return Sequence(n, std::move(kept));
}

std::vector<std::uint8_t> sieve_omega(std::uint64_t limit) {
    if (limit > kMaxSieve) throw std::invalid_argument("sieve_omega: limit exceeds 2^24");
    const auto size = static_cast<std::size_t>(limit);
    // smallest prime factor, then Omega(x) = Omega(x / spf(x)) + 1
    std::vector<std::uint32_t> spf(size, 0);
    for (std::size_t p = 2; p < size; ++p) {
        if (spf[p] != 0) continue;
        for (std::size_t q = p; q < size; q += p)
            if (spf[q] == 0) spf[q] = static_cast<std::uint32_t>(p);
    }
    std::vector<std::uint8_t> omega(size, 0);
    for (std::size_t x = 2; x < size; ++x) omega[x] = static_cast<std::uint8_t>(omega[x / spf[x]] + 1);
    return omega;
}

KAlmostUnion k_almost_union(int n, int k, std::span<const std::uint8_t> omega) {
    if (n < 2 || n > 24) throw std::invalid_argument("k_almost_union: need 2 <= n <= 24");
    if (k < 1 || k > n - 1)
        throw std::invalid_argument("k_almost_union: need 1 <= k <= n-1, got k = " + std::to_string(k));
    const std::uint64_t dim = std::uint64_t{1} << n;
    if (omega.size() < dim) throw std::invalid_argument("k_almost_union: Omega table shorter than 2^n");
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(k), 0);
    std::vector<Basis> members;
    for (Basis x = 2; x < dim; ++x) {
        const int w = omega[x];
        if (w >= 1 && w <= k) {
            ++counts[static_cast<std::size_t>(w - 1)];
            members.push_back(x);
        }
    }
    return KAlmostUnion{n, k, std::move(counts), Sequence(n, std::move(members))};
}

KAlmostUnion k_almost_union(int n, int k) {
    if (n < 2 || n > 24) throw std::invalid_argument("k_almost_union: need 2 <= n <= 24");
    const auto omega = sieve_omega(std::uint64_t{1} << n);
    return k_almost_union(n, k, omega);
}

Sequence prime_state(int n) {
    if (n < 2) throw std::invalid_argument("prime_state: need n >= 2");
    return k_almost_union(n, 1).sequence;
}

} // namespace seqent
