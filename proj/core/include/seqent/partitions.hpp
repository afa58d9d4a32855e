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
#include <vector>

namespace seqent {

/// Number of bipartitions with |A| = size_a that give distinct spectra:
/// C(n, size_a), halved when size_a = n/2 since A and its complement agree.
std::uint64_t distinct_partition_count(int n, int size_a);

/// C(n, n/2) / 2: 126 for n = 10, 1716 for n = 14.
inline std::uint64_t balanced_partition_count(int n) { return distinct_partition_count(n, n / 2); }

/// Every partition with |A| = size_a, one per complement pair when balanced
/// (the representative containing qubit n-1), in increasing mask order.
std::vector<Bipartition> enumerate_partitions(int n, int size_a);

inline std::vector<Bipartition> all_balanced_partitions(int n) { return enumerate_partitions(n, n / 2); }

/// Uniform |A| = n/2 subset; repeats are possible across calls.
Bipartition random_balanced_partition(int n, Rng& rng);

/// `count` distinct partitions with |A| = size_a, complement-deduplicated when
/// balanced. Throws std::invalid_argument if count exceeds the distinct total.
std::vector<Bipartition> sample_partitions(int n, int size_a, std::uint64_t count, Rng& rng);

} // namespace seqent
