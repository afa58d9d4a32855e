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

#include "cli.hpp"

#include <seqent/analytics.hpp>
#include <seqent/error.hpp>
#include <seqent/experiments.hpp>
#include <seqent/partitions.hpp>
#include <seqent/report.hpp>
#include <seqent/sequences.hpp>
#include <seqent/state.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace seqent::cli {

namespace {

// Random sequences drawn by the CLI itself use their own stream stage so they never
// coincide with the streams the experiment drivers consume.
constexpr std::uint64_t kCliStage = 100;

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct Common {
    std::uint64_t seed = 0;
    std::string out;
    unsigned threads = 1;

    RunOptions run() const { return {seed, threads}; }
};

struct SequenceArgs {
    std::string seq;
    std::string file;
    std::uint64_t random_m = 0;
    bool primes = false;
    int kalmost = 0;
};

std::string human(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%#.6g", v);
    return buf;
}

std::uint64_t parse_u64(std::string_view text, std::string_view what) {
    std::uint64_t v = 0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (ec != std::errc{} || ptr != end || text.empty())
        throw UsageError("cannot parse '" + std::string(text) + "' in " + std::string(what));
    return v;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    for (;;) {
        const auto pos = text.find(sep, start);
        parts.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) return parts;
        start = pos + 1;
    }
}

std::vector<std::uint64_t> parse_list(std::string_view text, std::string_view what) {
    std::vector<std::uint64_t> values;
    for (auto part : split(text, ',')) {
        while (!part.empty() && part.front() == ' ') part.remove_prefix(1);
        while (!part.empty() && part.back() == ' ') part.remove_suffix(1);
        values.push_back(parse_u64(part, what));
    }
    return values;
}

// log:lo:hi:k, lin:lo:hi:k, or an explicit comma list.
std::vector<std::uint64_t> parse_grid(std::string_view text) {
    if (text.starts_with("log:") || text.starts_with("lin:")) {
        const auto parts = split(text.substr(4), ':');
        if (parts.size() != 3) throw UsageError("grid must look like log:lo:hi:points or lin:lo:hi:points");
        const auto lo = parse_u64(parts[0], "--m-grid");
        const auto hi = parse_u64(parts[1], "--m-grid");
        const auto k = parse_u64(parts[2], "--m-grid");
        return text.starts_with("log:") ? log_grid(lo, hi, k) : linear_grid(lo, hi, k);
    }
    auto grid = parse_list(text, "--m-grid");
    if (grid.empty()) throw UsageError("empty --m-grid");
    return grid;
}

void add_common(CLI::App* sub, Common& common) {
    sub->add_option("--seed", common.seed, "RNG seed");
    sub->add_option("--out", common.out, "write results to this file (plus a .manifest.json sidecar)");
    sub->add_option("--threads", common.threads, "worker threads; never changes results")->check(CLI::PositiveNumber);
}

void add_sequence_inputs(CLI::App* sub, SequenceArgs& args) {
    auto* seq = sub->add_option("--seq", args.seq, "comma-separated sequence elements");
    auto* file = sub->add_option("--file", args.file, "sequence file (text or binary)");
    auto* random = sub->add_option("--random-m", args.random_m, "draw a random sequence of this length");
    auto* primes = sub->add_flag("--primes", args.primes, "primes below 2^n");
    auto* kalmost = sub->add_option("--kalmost", args.kalmost, "union of the 1..K-almost primes below 2^n");
    const std::vector<CLI::Option*> all{seq, file, random, primes, kalmost};
    for (auto* a : all)
        for (auto* b : all)
            if (a != b) a->excludes(b);
}

bool has_sequence(const SequenceArgs& a) {
    return !a.seq.empty() || !a.file.empty() || a.random_m > 0 || a.primes || a.kalmost > 0;
}

Sequence resolve_sequence(const SequenceArgs& args, int n, std::uint64_t seed, std::uint64_t index = 0) {
    if (!args.file.empty()) return load_sequence(args.file, n);
    if (n <= 0) throw UsageError("--n is required unless the sequence comes from a binary --file");
    if (!args.seq.empty()) return Sequence::from_values(n, parse_list(args.seq, "--seq"));
    if (args.random_m > 0) {
        auto rng = make_stream(seed, kCliStage, index);
        return random_sequence(n, args.random_m, rng);
    }
    if (args.primes) return prime_state(n);
    if (args.kalmost > 0) return k_almost_union(n, args.kalmost).sequence;
    throw UsageError("no sequence given: use --seq, --file, --random-m, --primes or --kalmost");
}

std::string joined(const std::vector<std::string>& values) {
    std::string s;
    for (std::size_t i = 0; i < values.size(); ++i) s += (i ? "," : "") + values[i];
    return s;
}

class Session {
public:
    Session(int argc, const char* const* argv, std::ostream& out) : out_(out), start_(std::chrono::steady_clock::now()) {
        for (int i = 0; i < argc; ++i) argv_.emplace_back(argv[i]);
    }

    // Table-shaped results go to --out when given, otherwise to the output stream.
    template <class Writer>
    void table(const Common& common, const CLI::App* sub, Writer&& write) {
        if (common.out.empty()) {
            write(out_);
            return;
        }
        to_file(common, sub, std::forward<Writer>(write));
    }

    // Summary-shaped results always print; the detailed table is only written with --out.
    template <class Writer>
    void detail(const Common& common, const CLI::App* sub, Writer&& write) {
        if (!common.out.empty()) to_file(common, sub, std::forward<Writer>(write));
    }

    std::ostream& out() { return out_; }

private:
    template <class Writer>
    void to_file(const Common& common, const CLI::App* sub, Writer&& write) {
        {
            std::ofstream file(common.out, std::ios::binary);
            if (!file) throw UsageError("cannot open output file " + common.out);
            write(file);
            if (!file) throw std::runtime_error("failed writing " + common.out);
        }
        Manifest m;
        m.command = sub->get_name();
        m.argv = argv_;
        for (const auto* opt : sub->get_options()) {
            const auto name = opt->get_single_name();
            if (name.empty() || name == "help") continue;
            m.config.emplace_back(name, opt->count() > 0 ? joined(opt->results()) : opt->get_default_str());
        }
        m.seed = common.seed;
        m.threads = common.threads;
        m.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        write_manifest(manifest_path(common.out), m);
    }

    std::ostream& out_;
    std::vector<std::string> argv_;
    std::chrono::steady_clock::time_point start_;
};

void print_scan_summary(std::ostream& out, std::span<const double> entropies) {
    const auto stats = summarize(entropies);
    const auto [lo, hi] = std::minmax_element(entropies.begin(), entropies.end());
    out << "partitions " << entropies.size() << '\n'
        << "mean " << human(stats.mean) << '\n'
        << "min " << human(*lo) << '\n'
        << "max " << human(*hi) << '\n';
}

void print_find_mn(std::ostream& out, const FindMnResult& r) {
    out << "n " << r.n << '\n'
        << "M_n " << r.m_n << '\n'
        << "M_star " << human(r.peak.x) << '\n'
        << "E_n " << human(r.e_n) << " +/- " << human(r.e_n_std_error) << " (" << r.final_samples << " samples)\n";
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Entanglement of sequence-encoded quantum states", "seqent"};
    app.option_defaults()->always_capture_default();
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(version()));

    Common common;
    SequenceArgs seq_args;
    int n = 0;
    std::uint64_t m = 0;
    std::string grid_text;
    std::size_t samples = 0;
    std::string mode_text = "natural";
    std::size_t bins = 64;
    FindMnOptions fm;
    struct {
        std::string subset_text;
        double renyi_order = 1.0;
        std::string n_list;
        bool haar = false;
        std::uint64_t count = 1000;
        int size_a = 0;
        std::uint64_t candidates = 1000;
        std::string score_text = "mean";
        std::string save_best;
    } p;
    std::map<std::string, std::function<void(Session&, const CLI::App*)>> handlers;

    auto add = [&](const std::string& name, const std::string& help) {
        auto* sub = app.add_subcommand(name, help);
        add_common(sub, common);
        return sub;
    };
    auto add_n = [&](CLI::App* sub, bool required = true) {
        auto* o = sub->add_option("--n", n, "number of qubits")->check(CLI::Range(1, kMaxSequenceQubits));
        if (required) o->required();
    };
    auto add_mode = [&](CLI::App* sub) {
        sub->add_option("--partition", mode_text, "natural | random-balanced | all-balanced")
            ->check(CLI::IsMember({"natural", "random-balanced", "all-balanced"}));
    };
    auto sample_count = [&] { return samples > 0 ? samples : default_samples(n); };

    // entropy
    {
        auto* sub = add("entropy", "entanglement entropy of one sequence state");
        add_n(sub, false);
        add_sequence_inputs(sub, seq_args);
        add_mode(sub);
        sub->add_option("--subset", p.subset_text, "explicit subsystem A as comma-separated qubit indices");
        sub->add_option("--renyi", p.renyi_order, "Renyi order (1 = von Neumann, inf allowed)")->check(CLI::NonNegativeNumber);
        sub->add_option("--samples", samples, "partitions drawn in random-balanced mode (default 100)");
        handlers["entropy"] = [&](Session& s, const CLI::App* self) {
            const Sequence seq = resolve_sequence(seq_args, n, common.seed);
            const int q = seq.qubits();
            std::vector<Bipartition> parts;
            if (!p.subset_text.empty()) {
                std::vector<int> a;
                for (auto v : parse_list(p.subset_text, "--subset")) a.push_back(static_cast<int>(v));
                parts.emplace_back(q, std::move(a));
            } else {
                switch (parse_partition_mode(mode_text)) {
                case PartitionMode::natural: parts.push_back(Bipartition::natural(q)); break;
                case PartitionMode::all_balanced: parts = all_balanced_partitions(q); break;
                case PartitionMode::random_balanced: {
                    auto rng = make_stream(common.seed, kCliStage + 1, 0);
                    const auto want = std::min<std::uint64_t>(samples > 0 ? samples : 100, balanced_partition_count(q));
                    parts = sample_partitions(q, q / 2, want, rng);
                    break;
                }
                }
            }
            std::vector<double> values;
            values.reserve(parts.size());
            for (const auto& part : parts) values.push_back(renyi(reduced_spectrum(seq, part), p.renyi_order));
            if (values.size() == 1) {
                s.out() << "entropy " << human(values.front()) << '\n';
            } else {
                const auto stats = summarize(values);
                s.out() << "entropy " << human(stats.mean) << " +/- " << human(stats.std_error) << " over "
                        << values.size() << " partitions\n";
            }
            s.detail(common, self, [&](std::ostream& os) { write_values_csv(os, "entropy", values); });
        };
    }

    // sweep
    {
        auto* sub = add("sweep", "average entropy over an M grid");
        add_n(sub);
        sub->add_option("--m-grid", grid_text, "log:lo:hi:points, lin:lo:hi:points, or a comma list")->required();
        sub->add_option("--samples", samples, "samples per grid point (default depends on n)");
        add_mode(sub);
        handlers["sweep"] = [&](Session& s, const CLI::App* self) {
            ExperimentConfig cfg;
            cfg.n = n;
            cfg.m_grid = parse_grid(grid_text);
            cfg.samples = sample_count();
            cfg.mode = parse_partition_mode(mode_text);
            cfg.run = common.run();
            const auto records = sweep(cfg);
            s.table(common, self, [&](std::ostream& os) { write_sweep_csv(os, records); });
        };
    }

    // find-mn / scaling share the peak-search knobs
    auto add_peak_options = [&](CLI::App* sub) {
        sub->add_option("--coarse-points", fm.coarse_points, "log-spaced points in the coarse sweep");
        sub->add_option("--refine-points", fm.refine_points, "points in the refine window");
        sub->add_option("--window", fm.window, "half-width of the refine window, relative")->check(CLI::Range(0.01, 0.9));
        sub->add_option("--coarse-samples", fm.coarse_samples, "samples per coarse point (0: default)");
        sub->add_option("--refine-samples", fm.refine_samples, "samples per refine point (0: 5x default)");
        sub->add_option("--final-samples", fm.final_samples, "samples for E_n at M_n (0: 2x refine)");
    };
    {
        auto* sub = add("find-mn", "locate the entropy-maximizing sequence length M_n");
        add_n(sub);
        add_peak_options(sub);
        handlers["find-mn"] = [&](Session& s, const CLI::App* self) {
            const auto r = find_mn(n, fm, common.run());
            print_find_mn(s.out(), r);
            s.detail(common, self, [&](std::ostream& os) { write_find_mn_csv(os, r, common.seed); });
        };
    }
    {
        auto* sub = add("scaling", "M_n and E_n across n with linear fits");
        sub->add_option("--n-list", p.n_list, "comma-separated even qubit counts")->required();
        add_peak_options(sub);
        handlers["scaling"] = [&](Session& s, const CLI::App* self) {
            std::vector<int> ns;
            for (auto v : parse_list(p.n_list, "--n-list")) ns.push_back(static_cast<int>(v));
            const auto r = scaling_study(ns, fm, common.run());
            for (const auto& row : r.rows) print_find_mn(s.out(), row);
            s.out() << "E_n fit: slope " << human(r.entropy_fit.slope) << " intercept " << human(r.entropy_fit.intercept)
                    << '\n'
                    << "log2 M_n fit: slope " << human(r.log_m_fit.slope) << " intercept "
                    << human(r.log_m_fit.intercept) << '\n';
            s.detail(common, self, [&](std::ostream& os) { write_scaling_csv(os, r); });
        };
    }

    // spectrum
    {
        auto* sub = add("spectrum", "reduced-state eigenvalues of a random sequence state");
        add_n(sub);
        sub->add_option("--m", m, "sequence length")->required();
        sub->add_option("--bins", bins, "histogram bins")->check(CLI::PositiveNumber);
        sub->add_option("--samples", samples, "also average the dominant eigenvalue over this many states");
        handlers["spectrum"] = [&](Session& s, const CLI::App* self) {
            const auto rep = spectrum_histogram(n, m, bins, common.run());
            const auto nonzero = std::count_if(rep.eigenvalues.begin(), rep.eigenvalues.end(), [](double x) { return x > kSpectrumZero; });
            s.out() << "lambda0 " << human(rep.lambda0) << '\n'
                    << "M/N " << human(rep.expected_lambda0) << '\n'
                    << "max_bulk " << human(rep.max_bulk) << '\n'
                    << "nonzero " << nonzero << '\n';
            if (samples > 0) {
                const auto study = dominant_eigenvalue_study(n, m, samples, common.run());
                s.out() << "mean_lambda0 " << human(study.mean_lambda0) << '\n'
                        << "mean_max_bulk " << human(study.mean_max_bulk) << '\n'
                        << "separated_fraction " << human(study.separated_fraction) << '\n';
            }
            s.detail(common, self, [&](std::ostream& os) { write_histogram_csv(os, rep.bulk); });
        };
    }

    // overlay
    {
        auto* sub = add("overlay", "Monte-Carlo entropy next to the dense and sparse approximations");
        add_n(sub);
        sub->add_option("--m-grid", grid_text, "log:lo:hi:points, lin:lo:hi:points, or a comma list")->required();
        sub->add_option("--samples", samples, "samples per grid point (default depends on n)");
        handlers["overlay"] = [&](Session& s, const CLI::App* self) {
            const auto grid = parse_grid(grid_text);
            const auto rows = approximation_overlay(n, grid, sample_count(), common.run());
            s.table(common, self, [&](std::ostream& os) { write_overlay_csv(os, rows); });
        };
    }

    // partitions
    {
        auto* sub = add("partitions", "entropy across many bipartitions of one state");
        add_n(sub, false);
        add_sequence_inputs(sub, seq_args);
        sub->add_flag("--haar", p.haar, "use one Haar-random state instead of a sequence");
        sub->add_option("--count", p.count, "distinct partitions to evaluate (capped at the number available)");
        sub->add_option("--size-a", p.size_a, "qubits in subsystem A (0: n/2)");
        sub->add_option("--bins", bins, "histogram bins")->check(CLI::PositiveNumber);
        handlers["partitions"] = [&](Session& s, const CLI::App* self) {
            PartitionScan scan;
            if (p.haar) {
                if (has_sequence(seq_args)) throw UsageError("--haar cannot be combined with a sequence input");
                if (n <= 0) throw UsageError("--n is required with --haar");
                if (n > kMaxStateQubits) throw UsageError("--n too large for a dense state");
                auto rng = make_stream(common.seed, kCliStage + 2, 0);
                const auto state = haar_state(n, rng);
                const int a = p.size_a ? p.size_a : n / 2;
                scan = partition_histogram(state, std::min(p.count, distinct_partition_count(n, a)), a, bins, common.run());
            } else {
                const auto seq = resolve_sequence(seq_args, n, common.seed);
                const int q = seq.qubits();
                const int a = p.size_a ? p.size_a : q / 2;
                scan = partition_histogram(seq, std::min(p.count, distinct_partition_count(q, a)), a, bins, common.run());
            }
            print_scan_summary(s.out(), scan.entropies);
            s.detail(common, self, [&](std::ostream& os) { write_histogram_csv(os, scan.histogram); });
        };
    }

    // greedy
    {
        auto* sub = add("greedy", "best-of-stream search for the most entangled sequence");
        add_n(sub);
        sub->add_option("--m", m, "sequence length")->required();
        sub->add_option("--candidates", p.candidates, "random sequences to score")->check(CLI::PositiveNumber);
        sub->add_option("--score", p.score_text, "mean | min over all balanced partitions")
            ->check(CLI::IsMember({"mean", "min"}));
        sub->add_option("--save-best", p.save_best, "write the winning sequence here (text format)");
        handlers["greedy"] = [&](Session& s, const CLI::App* self) {
            const auto r = greedy_best_sample(n, m, p.candidates, p.score_text == "min" ? GreedyScore::min : GreedyScore::mean,
                                              common.run());
            const auto pop = summarize(r.scores);
            s.out() << "best_candidate " << r.best_index << '\n'
                    << "best_score " << human(r.best_score) << '\n'
                    << "population_mean " << human(pop.mean) << " +/- " << human(pop.std_error) << '\n';
            if (!p.save_best.empty()) {
                std::ofstream file(p.save_best);
                if (!file) throw UsageError("cannot open " + p.save_best);
                write_text(file, r.best);
            }
            s.detail(common, self, [&](std::ostream& os) { write_greedy_csv(os, r); });
        };
    }

    // qft-compare
    {
        auto* sub = add("qft-compare", "natural-partition entropy before and after the Fourier transform");
        add_n(sub, false);
        add_sequence_inputs(sub, seq_args);
        sub->add_option("--samples", samples, "number of random sequences with --random-m (default 1)");
        handlers["qft-compare"] = [&](Session& s, const CLI::App* self) {
            std::vector<Sequence> inputs;
            const std::size_t k = seq_args.random_m > 0 && samples > 0 ? samples : 1;
            for (std::size_t i = 0; i < k; ++i) inputs.push_back(resolve_sequence(seq_args, n, common.seed, i));
            const int q = inputs.front().qubits();
            if (q > kMaxStateQubits) throw UsageError("--n too large for a dense state");
            const auto rows = qft_comparison(q, inputs, common.run());
            s.table(common, self, [&](std::ostream& os) { write_qft_csv(os, rows); });
        };
    }

    // kalmost
    {
        auto* sub = add("kalmost", "entropy of the k-almost-prime unions, k = 1..n-1");
        add_n(sub);
        handlers["kalmost"] = [&](Session& s, const CLI::App* self) {
            const auto curve = kalmost_curve(n);
            s.table(common, self, [&](std::ostream& os) { write_kalmost_csv(os, curve); });
        };
    }

    // haar
    {
        auto* sub = add("haar", "average natural-partition entropy of Haar-random states");
        add_n(sub);
        sub->add_option("--samples", samples, "states to draw (default depends on n)");
        handlers["haar"] = [&](Session& s, const CLI::App* self) {
            const auto h = haar_average(n, sample_count(), common.run());
            s.out() << "entropy " << human(h.stats.mean) << " +/- " << human(h.stats.std_error) << " over "
                    << h.entropies.size() << " states\n";
            if (n % 2 == 0) s.out() << "page " << human(page_value(n)) << '\n';
            s.detail(common, self, [&](std::ostream& os) { write_values_csv(os, "entropy", h.entropies); });
        };
    }

    // formula evaluators
    auto scalar = [&](const std::string& name, const std::string& help, bool needs_m, std::function<double()> f) {
        auto* sub = add(name, help);
        add_n(sub);
        if (needs_m) sub->add_option("--m", m, "sequence length")->required();
        handlers[name] = [&, f, name](Session& s, const CLI::App* self) {
            const double v = f();
            s.out() << human(v) << '\n';
            s.detail(common, self, [&](std::ostream& os) {
                const std::vector<double> one{v};
                write_values_csv(os, name, one);
            });
        };
    };
    scalar("tapprox", "dense-regime approximation T(n, M)", true, [&] { return t_approx(n, m); });
    scalar("dapprox", "sparse-regime approximation D(n, M)", true, [&] { return d_approx(n, m); });
    scalar("page", "average entropy of a Haar-random state, n/2 - log2(e)/2", false, [&] { return page_value(n); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, err, err);
        const auto subs = app.get_subcommands();
        err << (subs.empty() ? app.help() : subs.front()->help());
        return 1;
    }

    const CLI::App* sub = app.get_subcommands().front();
    Session session(argc, argv, out);
    try {
        handlers.at(sub->get_name())(session, sub);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}

} // namespace seqent::cli
