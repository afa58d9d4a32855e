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

#include "seqent/analytics.hpp"
#include "seqent/error.hpp"
#include "seqent/state.hpp"

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace seqent {

/// How one (n, M) entropy average is formed.
///  - natural: fresh random sequence per sample, natural bipartition.
///  - random_balanced: one random sequence, fresh uniform balanced
///    bipartition per sample.
///  - all_balanced: fresh random sequence per sample, scored by its mean over
///    every distinct balanced bipartition.
enum class PartitionMode { natural, random_balanced, all_balanced };

std::string_view to_string(PartitionMode mode);
/// Accepts "natural", "random-balanced", "all-balanced".
PartitionMode parse_partition_mode(std::string_view text);

/// Seed and worker count. Results depend on the seed only.
struct RunOptions {
    std::uint64_t seed = 0;
    unsigned threads = 1;
};

struct ExperimentConfig {
    int n = 0;
    std::vector<std::uint64_t> m_grid;
    std::size_t samples = 0;
    PartitionMode mode = PartitionMode::natural;
    RunOptions run;
    std::filesystem::path output;
};

struct SweepRecord {
    int n = 0;
    std::uint64_t m = 0;
    double mean = 0.0;      // bits
    double std_error = 0.0; // bits
    std::size_t samples = 0;
    PartitionMode mode = PartitionMode::natural;
    std::uint64_t seed = 0;
};

struct SampleStats {
    double mean = 0.0;
    double std_error = 0.0;
};

/// Compensated mean and standard error of the mean (0 for a single value).
SampleStats summarize(std::span<const double> values);

/// States per (n, M) point: 200 for n <= 14, 50 for n <= 20, 10 beyond.
std::size_t default_samples(int n);

/// Strictly increasing integer grids, lo and hi included.
std::vector<std::uint64_t> log_grid(std::uint64_t lo, std::uint64_t hi, std::size_t points);
std::vector<std::uint64_t> linear_grid(std::uint64_t lo, std::uint64_t hi, std::size_t points);

/// Sample i always draws from stream (seed, i), whatever M is, so averages
/// at different M share random numbers.
SweepRecord average_entropy(int n, std::uint64_t m, std::size_t samples, PartitionMode mode, const RunOptions& run);

std::vector<SweepRecord> sweep(const ExperimentConfig& config);

struct ModeGap {
    double natural_mean = 0.0;
    double partition_mean = 0.0;
    double gap = 0.0;
};

/// Runs the natural and random_balanced averages for the same (n, M).
ModeGap mode_concentration_check(int n, std::uint64_t m, std::size_t samples, const RunOptions& run);

struct FindMnOptions {
    std::size_t coarse_points = 32;
    std::size_t refine_points = 11;
    double window = 0.15;
    std::size_t coarse_samples = 0; // 0: default_samples(n)
    std::size_t refine_samples = 0; // 0: 5 * default_samples(n)
    std::size_t final_samples = 0;  // 0: 2 * refine_samples
};

struct FindMnResult {
    int n = 0;
    std::uint64_t m_n = 0;
    double e_n = 0.0;
    double e_n_std_error = 0.0;
    std::size_t final_samples = 0;
    Peak bracket_peak{};
    Peak peak{};
    std::vector<SweepRecord> coarse;
    std::vector<SweepRecord> bracket;
    std::vector<SweepRecord> refine;
};

/// Thrown when a refinement stage finds no interior maximum; carries the
/// sweep that was fitted.
class PeakSearchError : public FitError {
public:
    PeakSearchError(const std::string& what, std::vector<SweepRecord> records);
    const std::vector<SweepRecord>& records() const noexcept { return records_; }

private:
    std::vector<SweepRecord> records_;
};

/// Coarse log sweep, then two quadratic refinements around the maximum;
/// E_n is re-estimated at round(M*) on a fresh stream.
FindMnResult find_mn(int n, const FindMnOptions& options, const RunOptions& run);

struct ScalingResult {
    std::vector<FindMnResult> rows;
    FitResult entropy_fit; // (n, E_n)
    FitResult log_m_fit;   // (n, log2 M_n)
};

ScalingResult scaling_study(std::span<const int> ns, const FindMnOptions& options, const RunOptions& run);
/// Fits already computed rows; needs at least three.
ScalingResult fit_scaling(std::vector<FindMnResult> rows);

struct Histogram {
    std::vector<double> edges; // bins + 1 values, empty when there is no data
    std::vector<std::uint64_t> counts;
};

/// Uniform bins over [min, max] of the data; the last bin is closed.
Histogram make_histogram(std::span<const double> values, std::size_t bins);

// Eigenvalues at or below this are rank-deficiency noise (squared round-off), not spectrum.
inline constexpr double kSpectrumZero = 1e-24;

struct SpectrumReport {
    std::vector<double> eigenvalues; // descending
    double lambda0 = 0.0;
    double expected_lambda0 = 0.0; // M/N
    double max_bulk = 0.0;
    Histogram bulk; // eigenvalues above kSpectrumZero other than lambda0
};

SpectrumReport spectrum_histogram(int n, std::uint64_t m, std::size_t bins, const RunOptions& run);

struct DominantStudy {
    double mean_lambda0 = 0.0;
    double mean_max_bulk = 0.0;
    double expected_lambda0 = 0.0;
    /// Share of samples whose largest bulk eigenvalue is below lambda0 / 2.
    double separated_fraction = 0.0;
    std::vector<double> lambda0;
    std::vector<double> max_bulk;
};

DominantStudy dominant_eigenvalue_study(int n, std::uint64_t m, std::size_t samples, const RunOptions& run);

/// Mean entropy of the normalized Gram spectrum of Bernoulli(M/N) matrices.
SampleStats bernoulli_model_entropy(int n, std::uint64_t m, std::size_t samples, const RunOptions& run);

struct OverlayRow {
    std::uint64_t m = 0;
    double e_mc = 0.0;
    double std_error = 0.0;
    double t = 0.0;
    double d = 0.0;
};

std::vector<OverlayRow> approximation_overlay(int n, std::span<const std::uint64_t> grid, std::size_t samples,
                                              const RunOptions& run);

struct PartitionScan {
    std::vector<Bipartition> partitions;
    std::vector<double> entropies;
    Histogram histogram;
};

/// Entropies over `count` distinct bipartitions with |A| = size_a (0 means
/// n/2), sampled without repetition.
PartitionScan partition_histogram(const PureState& state, std::uint64_t count, int size_a, std::size_t bins,
                                  const RunOptions& run);
PartitionScan partition_histogram(const Sequence& seq, std::uint64_t count, int size_a, std::size_t bins,
                                  const RunOptions& run);

enum class GreedyScore { mean, min };

struct GreedyResult {
    Sequence best;
    std::size_t best_index = 0;
    double best_score = 0.0;
    std::vector<double> best_entropies; // over all balanced bipartitions
    std::vector<double> trace;          // running best after each candidate
    std::vector<double> scores;         // every candidate's score
};

/// Best-of-stream search: candidate i is a random length-M sequence from
/// stream (seed, i), scored over every distinct balanced bipartition.
GreedyResult greedy_best_sample(int n, std::uint64_t m, std::uint64_t candidates, GreedyScore score,
                                const RunOptions& run);

struct QftPair {
    double position = 0.0;
    double momentum = 0.0;
};

/// Natural-bipartition entropy before and after the QFT.
std::vector<QftPair> qft_comparison(int n, std::span<const Sequence> inputs, const RunOptions& run);

struct KAlmostPoint {
    int k = 0;
    std::uint64_t m_k = 0;
    double entropy = 0.0;
};

/// Entropy of every k-almost-prime union state, k = 1..n-1.
std::vector<KAlmostPoint> kalmost_curve(int n);

struct HaarSummary {
    SampleStats stats;
    std::vector<double> entropies;
};

HaarSummary haar_average(int n, std::size_t samples, const RunOptions& run);

} // namespace seqent
