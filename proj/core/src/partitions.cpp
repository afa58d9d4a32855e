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

#include "seqent/partitions.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace seqent {

namespace {

void check_shape(int n, int size_a) {
    if (n < 2 || n > kMaxStateQubits) throw std::invalid_argument("partitions: n out of range");
    if (size_a < 1 || size_a >= n) throw std::invalid_argument("partitions: need 1 <= |A| <= n-1");
}

std::uint64_t binomial(int n, int k) {
    std::uint64_t c = 1;
    for (int i = 1; i <= k; ++i) c = c * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return c;
}

Bipartition from_mask(int n, std::uint64_t mask) {
    std::vector<int> qubits;
    for (int q = 0; q < n; ++q)
        if ((mask >> q) & 1u) qubits.push_back(q);
    return Bipartition(n, std::move(qubits));
}

// Balanced partitions are stored by the representative that holds qubit n-1.
std::uint64_t canonical(int n, int size_a, std::uint64_t mask) {
    const std::uint64_t top = std::uint64_t{1} << (n - 1);
    if (2 * size_a == n && !(mask & top)) return ~mask & ((std::uint64_t{1} << n) - 1);
    return mask;
}

std::uint64_t random_mask(int n, int size_a, Rng& rng) {
    std::vector<int> qubits(static_cast<std::size_t>(n));
    std::iota(qubits.begin(), qubits.end(), 0);
    std::uint64_t mask = 0;
    for (int i = 0; i < size_a; ++i) {
        std::uniform_int_distribution<int> pick(i, n - 1);
        std::swap(qubits[static_cast<std::size_t>(i)], qubits[static_cast<std::size_t>(pick(rng))]);
        mask |= std::uint64_t{1} << qubits[static_cast<std::size_t>(i)];
    }
    return mask;
}

} // namespace

std::uint64_t distinct_partition_count(int n, int size_a) {
    check_shape(n, size_a);
    const std::uint64_t c = binomial(n, size_a);
    return 2 * size_a == n ? c / 2 : c;
}

std::vector<Bipartition> enumerate_partitions(int n, int size_a) {
    check_shape(n, size_a);
    std::vector<Bipartition> out;
    out.reserve(static_cast<std::size_t>(distinct_partition_count(n, size_a)));
    const std::uint64_t limit = std::uint64_t{1} << n;
    // Gosper's hack over all masks with popcount size_a
    for (std::uint64_t mask = (std::uint64_t{1} << size_a) - 1; mask < limit;) {
        if (canonical(n, size_a, mask) == mask) out.push_back(from_mask(n, mask));
        const std::uint64_t low = mask & (~mask + 1);
        const std::uint64_t ripple = mask + low;
        mask = (((ripple ^ mask) >> 2) / low) | ripple;
    }
    return out;
}

Bipartition random_balanced_partition(int n, Rng& rng) {
    if (n < 2 || n % 2 != 0 || n > kMaxSequenceQubits) throw std::invalid_argument("balanced partition needs even n");
    return from_mask(n, random_mask(n, n / 2, rng));
}

std::vector<Bipartition> sample_partitions(int n, int size_a, std::uint64_t count, Rng& rng) {
    const std::uint64_t total = distinct_partition_count(n, size_a);
    if (count > total)
        throw std::invalid_argument("requested " + std::to_string(count) + " partitions but only " +
                                    std::to_string(total) + " are distinct");
    if (2 * count > total) {
        auto all = enumerate_partitions(n, size_a);
        std::shuffle(all.begin(), all.end(), rng);
        all.erase(all.begin() + static_cast<std::ptrdiff_t>(count), all.end());
        return all;
    }
    std::unordered_set<std::uint64_t> seen;
    std::vector<Bipartition> out;
    out.reserve(static_cast<std::size_t>(count));
    while (out.size() < count) {
        const std::uint64_t mask = canonical(n, size_a, random_mask(n, size_a, rng));
        if (seen.insert(mask).second) out.push_back(from_mask(n, mask));
    }
    return out;
}

} // namespace seqent
