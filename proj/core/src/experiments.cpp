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

#include "seqent/experiments.hpp"

#include "seqent/partitions.hpp"
#include "seqent/random.hpp"
#include "seqent/sequences.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace seqent {

namespace {

// Stream stages. Changing these changes every seeded result.
enum Stage : std::uint64_t {
    kStates = 1,
    kSingleState = 2,
    kPartitions = 3,
    kHaar = 4,
    kBernoulli = 5,
    kGreedy = 6,
    kSpectrum = 7,
};

// Runs fn(i) for i in [0, count) on up to `threads` workers and returns the
// results in index order. The first exception is rethrown.
template <class Fn>
std::vector<double> parallel_map(std::size_t count, unsigned threads, Fn&& fn) {
    std::vector<double> out(count);
    const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
    if (workers == 1) {
        for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            try {
                out[i] = fn(i);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next.store(count);
                return;
            }
        }
    };
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    pool.clear();
    if (failure) std::rethrow_exception(failure);
    return out;
}

void require_even(int n, const char* who) {
    if (n < 2 || n % 2 != 0 || n > kMaxStateQubits)
        throw std::invalid_argument(std::string(who) + ": n must be even and at most " +
                                    std::to_string(kMaxStateQubits));
}

std::uint64_t dimension(int n) { return std::uint64_t{1} << n; }

void require_length(int n, std::uint64_t m, const char* who) {
    if (m < 1 || m > dimension(n)) throw std::invalid_argument(std::string(who) + ": need 1 <= M <= 2^n");
}

double mean_entropy_over(const Sequence& seq, std::span<const Bipartition> parts) {
    std::vector<double> values;
    values.reserve(parts.size());
    for (const auto& p : parts) values.push_back(entanglement_entropy(seq, p));
    return summarize(values).mean;
}

std::string dump(const std::vector<SweepRecord>& records) {
    std::ostringstream out;
    out.precision(17);
    for (const auto& r : records) out << "\n  M=" << r.m << " mean=" << r.mean << " se=" << r.std_error;
    return out.str();
}

std::vector<SweepRecord> sweep_grid(int n, const std::vector<std::uint64_t>& grid, std::size_t samples,
                                    const RunOptions& run) {
    std::vector<SweepRecord> out;
    out.reserve(grid.size());
    for (std::uint64_t m : grid) out.push_back(average_entropy(n, m, samples, PartitionMode::natural, run));
    return out;
}

Peak fit_peak(const std::vector<SweepRecord>& records, const char* stage) {
    std::vector<Point> pts;
    pts.reserve(records.size());
    for (const auto& r : records) pts.emplace_back(static_cast<double>(r.m), r.mean);
    try {
        return quadratic_peak(pts);
    } catch (const std::exception& e) {
        throw PeakSearchError(std::string("find_mn ") + stage + ": " + e.what() + dump(records), records);
    }
}

} // namespace

std::string_view to_string(PartitionMode mode) {
    switch (mode) {
    case PartitionMode::natural: return "natural";
    case PartitionMode::random_balanced: return "random-balanced";
    case PartitionMode::all_balanced: return "all-balanced";
    }
    return "unknown";
}

PartitionMode parse_partition_mode(std::string_view text) {
    if (text == "natural") return PartitionMode::natural;
    if (text == "random-balanced") return PartitionMode::random_balanced;
    if (text == "all-balanced") return PartitionMode::all_balanced;
    throw std::invalid_argument("unknown partition mode '" + std::string(text) + "'");
}

SampleStats summarize(std::span<const double> values) {
    if (values.empty()) throw std::invalid_argument("summarize: no samples");
    // Neumaier summation, in index order.
    auto compensated = [](std::span<const double> xs, auto&& f) {
        double sum = 0.0, carry = 0.0;
        for (double x : xs) {
            const double v = f(x);
            const double t = sum + v;
            carry += std::abs(sum) >= std::abs(v) ? (sum - t) + v : (v - t) + sum;
            sum = t;
        }
        return sum + carry;
    };
    const double k = static_cast<double>(values.size());
    const double mean = compensated(values, [](double x) { return x; }) / k;
    if (values.size() == 1) return {mean, 0.0};
    const double ss = compensated(values, [mean](double x) { return (x - mean) * (x - mean); });
    return {mean, std::sqrt(ss / (k - 1.0) / k)};
}

std::size_t default_samples(int n) {
    if (n <= 14) return 200;
    if (n <= 20) return 50;
    return 10;
}

std::vector<std::uint64_t> log_grid(std::uint64_t lo, std::uint64_t hi, std::size_t points) {
    if (lo < 1 || hi < lo) throw std::invalid_argument("log_grid: need 1 <= lo <= hi");
    if (points < 1 || points > hi - lo + 1) throw std::invalid_argument("log_grid: point count out of range");
    if (points == 1) return {lo};
    std::vector<std::uint64_t> grid(points);
    const double ratio = std::log(static_cast<double>(hi) / static_cast<double>(lo)) / static_cast<double>(points - 1);
    for (std::size_t i = 0; i < points; ++i)
        grid[i] = static_cast<std::uint64_t>(std::llround(static_cast<double>(lo) * std::exp(ratio * static_cast<double>(i))));
    grid.front() = lo;
    grid.back() = hi;
    // Bump collisions at the low end upward, then cap the tail so it ends at hi.
    for (std::size_t i = 1; i < points; ++i) grid[i] = std::max(grid[i], grid[i - 1] + 1);
    for (std::size_t i = 0; i < points; ++i) grid[i] = std::min(grid[i], hi - (points - 1 - i));
    return grid;
}

std::vector<std::uint64_t> linear_grid(std::uint64_t lo, std::uint64_t hi, std::size_t points) {
    if (hi < lo) throw std::invalid_argument("linear_grid: need lo <= hi");
    const std::uint64_t span = hi - lo;
    if (points < 1) throw std::invalid_argument("linear_grid: need at least one point");
    points = static_cast<std::size_t>(std::min<std::uint64_t>(points, span + 1));
    if (points == 1) return {lo};
    std::vector<std::uint64_t> grid;
    grid.reserve(points);
    for (std::size_t i = 0; i < points; ++i) {
        const double t = static_cast<double>(i) / static_cast<double>(points - 1);
        const auto v = lo + static_cast<std::uint64_t>(std::llround(t * static_cast<double>(span)));
        if (grid.empty() || v > grid.back()) grid.push_back(v);
    }
    return grid;
}

SweepRecord average_entropy(int n, std::uint64_t m, std::size_t samples, PartitionMode mode, const RunOptions& run) {
    require_even(n, "average_entropy");
    require_length(n, m, "average_entropy");
    if (samples < 1) throw std::invalid_argument("average_entropy: need at least one sample");

    std::vector<double> values;
    switch (mode) {
    case PartitionMode::natural: {
        const auto natural = Bipartition::natural(n);
        values = parallel_map(samples, run.threads, [&](std::size_t i) {
            auto rng = make_stream(run.seed, kStates, i);
            return entanglement_entropy(random_sequence(n, m, rng), natural);
        });
        break;
    }
    case PartitionMode::random_balanced: {
        auto state_rng = make_stream(run.seed, kSingleState, 0);
        const Sequence seq = random_sequence(n, m, state_rng);
        values = parallel_map(samples, run.threads, [&](std::size_t i) {
            auto rng = make_stream(run.seed, kPartitions, i);
            return entanglement_entropy(seq, random_balanced_partition(n, rng));
        });
        break;
    }
    case PartitionMode::all_balanced: {
        const auto parts = all_balanced_partitions(n);
        values = parallel_map(samples, run.threads, [&](std::size_t i) {
            auto rng = make_stream(run.seed, kStates, i);
            return mean_entropy_over(random_sequence(n, m, rng), parts);
        });
        break;
    }
    }
    const auto stats = summarize(values);
    return SweepRecord{n, m, stats.mean, stats.std_error, samples, mode, run.seed};
}

std::vector<SweepRecord> sweep(const ExperimentConfig& config) {
    if (config.m_grid.empty()) throw std::invalid_argument("sweep: empty M grid");
    std::vector<SweepRecord> out;
    out.reserve(config.m_grid.size());
    for (std::uint64_t m : config.m_grid)
        out.push_back(average_entropy(config.n, m, config.samples, config.mode, config.run));
    return out;
}

ModeGap mode_concentration_check(int n, std::uint64_t m, std::size_t samples, const RunOptions& run) {
    const auto natural = average_entropy(n, m, samples, PartitionMode::natural, run);
    const auto partitions = average_entropy(n, m, samples, PartitionMode::random_balanced, run);
    return ModeGap{natural.mean, partitions.mean, std::abs(natural.mean - partitions.mean)};
}

PeakSearchError::PeakSearchError(const std::string& what, std::vector<SweepRecord> records)
    : FitError(what), records_(std::move(records)) {}

FindMnResult find_mn(int n, const FindMnOptions& options, const RunOptions& run) {
    require_even(n, "find_mn");
    if (n < 4) throw std::invalid_argument("find_mn: need n >= 4");
    const std::uint64_t big_n = dimension(n);
    const std::size_t coarse_samples = options.coarse_samples ? options.coarse_samples : default_samples(n);
    const std::size_t refine_samples = options.refine_samples ? options.refine_samples : 5 * default_samples(n);
    const std::size_t final_samples = options.final_samples ? options.final_samples : 2 * refine_samples;

    FindMnResult result;
    result.n = n;
    result.final_samples = final_samples;

    const auto coarse_grid = log_grid(1, big_n, std::min<std::uint64_t>(options.coarse_points, big_n));
    result.coarse = sweep_grid(n, coarse_grid, coarse_samples, {derive_seed(run.seed, 1), run.threads});
    const auto best = std::max_element(result.coarse.begin(), result.coarse.end(),
                                       [](const SweepRecord& a, const SweepRecord& b) { return a.mean < b.mean; });
    const auto at = static_cast<std::size_t>(best - result.coarse.begin());
    const std::uint64_t lo = coarse_grid[at == 0 ? 0 : at - 1];
    const std::uint64_t hi = coarse_grid[std::min(at + 1, coarse_grid.size() - 1)];
    result.bracket = sweep_grid(n, linear_grid(lo, hi, options.refine_points), refine_samples,
                                {derive_seed(run.seed, 2), run.threads});
    result.bracket_peak = fit_peak(result.bracket, "bracket");

    const double center = result.bracket_peak.x;
    const auto w_lo = static_cast<std::uint64_t>(std::max(1.0, std::floor(center * (1.0 - options.window))));
    const auto w_hi = static_cast<std::uint64_t>(
        std::min(static_cast<double>(big_n), std::ceil(center * (1.0 + options.window))));
    result.refine = sweep_grid(n, linear_grid(w_lo, w_hi, options.refine_points), refine_samples,
                               {derive_seed(run.seed, 3), run.threads});
    result.peak = fit_peak(result.refine, "refine");

    result.m_n = std::clamp<std::uint64_t>(static_cast<std::uint64_t>(std::llround(result.peak.x)), 1, big_n);
    const auto final_record =
        average_entropy(n, result.m_n, final_samples, PartitionMode::natural, {derive_seed(run.seed, 4), run.threads});
    result.e_n = final_record.mean;
    result.e_n_std_error = final_record.std_error;
    return result;
}

ScalingResult fit_scaling(std::vector<FindMnResult> rows) {
    if (rows.size() < 3) throw std::invalid_argument("scaling study needs at least three values of n");
    std::vector<Point> entropy, log_m;
    for (const auto& r : rows) {
        entropy.emplace_back(r.n, r.e_n);
        log_m.emplace_back(r.n, std::log2(static_cast<double>(r.m_n)));
    }
    ScalingResult out;
    out.entropy_fit = ols_fit(entropy);
    out.log_m_fit = ols_fit(log_m);
    out.rows = std::move(rows);
    return out;
}

ScalingResult scaling_study(std::span<const int> ns, const FindMnOptions& options, const RunOptions& run) {
    if (ns.size() < 3) throw std::invalid_argument("scaling study needs at least three values of n");
    std::vector<FindMnResult> rows;
    for (int n : ns) rows.push_back(find_mn(n, options, run));
    return fit_scaling(std::move(rows));
}

Histogram make_histogram(std::span<const double> values, std::size_t bins) {
    if (bins < 1) throw std::invalid_argument("histogram needs at least one bin");
    Histogram h;
    if (values.empty()) return h;
    const auto [lo_it, hi_it] = std::minmax_element(values.begin(), values.end());
    const double lo = *lo_it;
    double hi = *hi_it;
    if (hi <= lo) hi = lo + std::max(std::abs(lo), 1.0) * 1e-12;
    const double width = (hi - lo) / static_cast<double>(bins);
    h.edges.resize(bins + 1);
    for (std::size_t i = 0; i <= bins; ++i) h.edges[i] = lo + width * static_cast<double>(i);
    h.edges.back() = hi;
    h.counts.assign(bins, 0);
    for (double v : values) {
        auto bin = static_cast<std::size_t>((v - lo) / width);
        h.counts[std::min(bin, bins - 1)]++;
    }
    return h;
}

SpectrumReport spectrum_histogram(int n, std::uint64_t m, std::size_t bins, const RunOptions& run) {
    require_even(n, "spectrum_histogram");
    require_length(n, m, "spectrum_histogram");
    auto rng = make_stream(run.seed, kSpectrum, 0);
    const auto spectrum = reduced_spectrum(random_sequence(n, m, rng), Bipartition::natural(n));
    SpectrumReport report;
    report.eigenvalues.assign(spectrum.values().begin(), spectrum.values().end());
    report.lambda0 = spectrum.dominant();
    report.expected_lambda0 = static_cast<double>(m) / static_cast<double>(dimension(n));
    std::vector<double> bulk;
    for (std::size_t i = 1; i < report.eigenvalues.size(); ++i)
        if (report.eigenvalues[i] > kSpectrumZero) bulk.push_back(report.eigenvalues[i]);
    report.max_bulk = bulk.empty() ? 0.0 : bulk.front();
    report.bulk = make_histogram(bulk, bins);
    return report;
}

DominantStudy dominant_eigenvalue_study(int n, std::uint64_t m, std::size_t samples, const RunOptions& run) {
    require_even(n, "dominant_eigenvalue_study");
    require_length(n, m, "dominant_eigenvalue_study");
    if (samples < 1) throw std::invalid_argument("dominant_eigenvalue_study: need at least one sample");
    const auto natural = Bipartition::natural(n);
    DominantStudy study;
    study.expected_lambda0 = static_cast<double>(m) / static_cast<double>(dimension(n));
    study.max_bulk.resize(samples);
    study.lambda0 = parallel_map(samples, run.threads, [&](std::size_t i) {
        auto rng = make_stream(run.seed, kSpectrum, i);
        const auto spec = reduced_spectrum(random_sequence(n, m, rng), natural);
        study.max_bulk[i] = spec.size() > 1 ? spec.values()[1] : 0.0;
        return spec.dominant();
    });
    study.mean_lambda0 = summarize(study.lambda0).mean;
    study.mean_max_bulk = summarize(study.max_bulk).mean;
    std::size_t separated = 0;
    for (std::size_t i = 0; i < samples; ++i)
        if (study.max_bulk[i] < 0.5 * study.lambda0[i]) ++separated;
    study.separated_fraction = static_cast<double>(separated) / static_cast<double>(samples);
    return study;
}

SampleStats bernoulli_model_entropy(int n, std::uint64_t m, std::size_t samples, const RunOptions& run) {
    if (samples < 1) throw std::invalid_argument("bernoulli_model_entropy: need at least one sample");
    const auto values = parallel_map(samples, run.threads, [&](std::size_t i) {
        auto rng = make_stream(run.seed, kBernoulli, i);
        for (;;) {
            const auto w = bernoulli_matrix(n, m, rng);
            if (w.squaredNorm() > 0.0) return von_neumann(gram_spectrum(w));
        }
    });
    return summarize(values);
}

std::vector<OverlayRow> approximation_overlay(int n, std::span<const std::uint64_t> grid, std::size_t samples,
                                              const RunOptions& run) {
    require_even(n, "approximation_overlay");
    std::vector<OverlayRow> rows;
    rows.reserve(grid.size());
    for (std::uint64_t m : grid) {
        const auto rec = average_entropy(n, m, samples, PartitionMode::natural, run);
        rows.push_back(OverlayRow{m, rec.mean, rec.std_error, t_approx(n, m), d_approx(n, m)});
    }
    return rows;
}

namespace {

template <class Entropy>
PartitionScan scan_partitions(int n, std::uint64_t count, int size_a, std::size_t bins, const RunOptions& run,
                              Entropy&& entropy) {
    if (size_a == 0) size_a = n / 2;
    auto rng = make_stream(run.seed, kPartitions, 0);
    PartitionScan scan;
    scan.partitions = sample_partitions(n, size_a, count, rng);
    scan.entropies = parallel_map(scan.partitions.size(), run.threads,
                                  [&](std::size_t i) { return entropy(scan.partitions[i]); });
    scan.histogram = make_histogram(scan.entropies, bins);
    return scan;
}

} // namespace

PartitionScan partition_histogram(const PureState& state, std::uint64_t count, int size_a, std::size_t bins,
                                  const RunOptions& run) {
    return scan_partitions(state.qubits(), count, size_a, bins, run,
                           [&](const Bipartition& p) { return entanglement_entropy(state, p); });
}

PartitionScan partition_histogram(const Sequence& seq, std::uint64_t count, int size_a, std::size_t bins,
                                  const RunOptions& run) {
    return scan_partitions(seq.qubits(), count, size_a, bins, run,
                           [&](const Bipartition& p) { return entanglement_entropy(seq, p); });
}

GreedyResult greedy_best_sample(int n, std::uint64_t m, std::uint64_t candidates, GreedyScore score,
                                const RunOptions& run) {
    require_even(n, "greedy_best_sample");
    require_length(n, m, "greedy_best_sample");
    if (candidates < 1) throw std::invalid_argument("greedy_best_sample: need at least one candidate");
    const auto parts = all_balanced_partitions(n);
    auto candidate = [&](std::size_t i) {
        auto rng = make_stream(run.seed, kGreedy, i);
        return random_sequence(n, m, rng);
    };
    auto entropies_of = [&](const Sequence& seq) {
        std::vector<double> values;
        values.reserve(parts.size());
        for (const auto& p : parts) values.push_back(entanglement_entropy(seq, p));
        return values;
    };
    auto score_of = [&](const std::vector<double>& values) {
        return score == GreedyScore::mean ? summarize(values).mean : *std::min_element(values.begin(), values.end());
    };

    auto scores = parallel_map(static_cast<std::size_t>(candidates), run.threads,
                               [&](std::size_t i) { return score_of(entropies_of(candidate(i))); });
    std::vector<double> trace(scores.size());
    std::size_t best = 0;
    for (std::size_t i = 0; i < scores.size(); ++i) {
        if (scores[i] > scores[best]) best = i;
        trace[i] = scores[best];
    }
    Sequence best_seq = candidate(best);
    auto best_entropies = entropies_of(best_seq);
    return GreedyResult{std::move(best_seq), best, scores[best], std::move(best_entropies), std::move(trace),
                        std::move(scores)};
}

std::vector<QftPair> qft_comparison(int n, std::span<const Sequence> inputs, const RunOptions& run) {
    require_even(n, "qft_comparison");
    const auto natural = Bipartition::natural(n);
    for (const auto& s : inputs)
        if (s.qubits() != n) throw std::invalid_argument("qft_comparison: input sequence has a different n");
    std::vector<QftPair> out(inputs.size());
    const auto momentum = parallel_map(inputs.size(), run.threads, [&](std::size_t i) {
        const auto state = encode_sequence(inputs[i]);
        out[i].position = entanglement_entropy(state, natural);
        return entanglement_entropy(qft(state), natural);
    });
    for (std::size_t i = 0; i < out.size(); ++i) out[i].momentum = momentum[i];
    return out;
}

std::vector<KAlmostPoint> kalmost_curve(int n) {
    require_even(n, "kalmost_curve");
    const auto omega = sieve_omega(dimension(n));
    const auto natural = Bipartition::natural(n);
    std::vector<KAlmostPoint> out;
    for (int k = 1; k <= n - 1; ++k) {
        const auto u = k_almost_union(n, k, omega);
        out.push_back(KAlmostPoint{k, u.sequence.size(), entanglement_entropy(u.sequence, natural)});
    }
    return out;
}

HaarSummary haar_average(int n, std::size_t samples, const RunOptions& run) {
    require_even(n, "haar_average");
    if (samples < 1) throw std::invalid_argument("haar_average: need at least one sample");
    const auto natural = Bipartition::natural(n);
    HaarSummary out;
    out.entropies = parallel_map(samples, run.threads, [&](std::size_t i) {
        auto rng = make_stream(run.seed, kHaar, i);
        return entanglement_entropy(haar_state(n, rng), natural);
    });
    out.stats = summarize(out.entropies);
    return out;
}

} // namespace seqent
