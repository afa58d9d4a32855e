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
#include <random>

namespace seqent {

using Rng = std::mt19937_64;

/// Independent generator for (seed, stage, index). Monte-Carlo drivers give
/// every sample its own stream so results do not depend on thread count.
Rng make_stream(std::uint64_t seed, std::uint64_t stage, std::uint64_t index);

/// Derives a child seed, used to separate the stages of a multi-step run.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stage);

} // namespace seqent
