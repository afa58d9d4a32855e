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

#include "seqent/experiments.hpp"

#include <filesystem>
#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

namespace seqent {

std::string_view version() noexcept;

/// Shortest decimal form that reads back to the same binary64 value.
std::string format_double(double v);

/// Comma-separated rows with a fixed header. Doubles are written with
/// format_double.
class CsvWriter {
public:
    CsvWriter(std::ostream& out, std::initializer_list<std::string_view> header);

    template <class... Fields>
    void row(const Fields&... fields) {
        std::size_t i = 0;
        ((put(fields, i++)), ...);
        out_ << '\n';
    }

private:
    void separator(std::size_t i) {
        if (i > 0) out_ << ',';
    }
    void put(double v, std::size_t i) {
        separator(i);
        out_ << format_double(v);
    }
    void put(std::string_view v, std::size_t i) {
        separator(i);
        out_ << v;
    }
    void put(const std::string& v, std::size_t i) { put(std::string_view(v), i); }
    void put(const char* v, std::size_t i) { put(std::string_view(v), i); }
    template <class Int>
        requires std::is_integral_v<Int>
    void put(Int v, std::size_t i) {
        separator(i);
        out_ << v;
    }

    std::ostream& out_;
};

void write_sweep_csv(std::ostream& out, std::span<const SweepRecord> records);
void write_histogram_csv(std::ostream& out, const Histogram& histogram);
void write_overlay_csv(std::ostream& out, std::span<const OverlayRow> rows);
void write_find_mn_csv(std::ostream& out, const FindMnResult& result, std::uint64_t seed);
void write_scaling_csv(std::ostream& out, const ScalingResult& result);
void write_qft_csv(std::ostream& out, std::span<const QftPair> rows);
void write_kalmost_csv(std::ostream& out, std::span<const KAlmostPoint> rows);
void write_greedy_csv(std::ostream& out, const GreedyResult& result);
void write_values_csv(std::ostream& out, std::string_view column, std::span<const double> values);

/// Sidecar describing how an output file was produced.
struct Manifest {
    std::string command;
    std::vector<std::string> argv;
    std::vector<std::pair<std::string, std::string>> config;
    std::uint64_t seed = 0;
    unsigned threads = 1;
    double wall_seconds = 0.0;
};

/// JSON object with command, argv, config, seed, threads, version, compiler,
/// wall time and a UTC timestamp.
void write_manifest(const std::filesystem::path& path, const Manifest& manifest);

/// <output>.manifest.json
std::filesystem::path manifest_path(const std::filesystem::path& output);

} // namespace seqent
