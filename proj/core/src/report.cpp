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

#include "seqent/report.hpp"

#include <json.hpp>

#include <charconv>
#include <cmath>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#ifndef SEQENT_VERSION
#define SEQENT_VERSION "unknown"
#endif

namespace seqent {

std::string_view version() noexcept { return SEQENT_VERSION; }

std::string format_double(double v) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc{}) throw std::runtime_error("format_double: conversion failed");
    return std::string(buf, ptr);
}

CsvWriter::CsvWriter(std::ostream& out, std::initializer_list<std::string_view> header) : out_(out) {
    std::size_t i = 0;
    for (auto h : header) put(h, i++);
    out_ << '\n';
}

void write_sweep_csv(std::ostream& out, std::span<const SweepRecord> records) {
    CsvWriter csv(out, {"n", "M", "mean_entropy", "std_error", "samples", "partition_mode", "seed"});
    for (const auto& r : records) csv.row(r.n, r.m, r.mean, r.std_error, r.samples, to_string(r.mode), r.seed);
}

void write_histogram_csv(std::ostream& out, const Histogram& histogram) {
    CsvWriter csv(out, {"bin_left", "count"});
    for (std::size_t i = 0; i < histogram.counts.size(); ++i) csv.row(histogram.edges[i], histogram.counts[i]);
}

void write_overlay_csv(std::ostream& out, std::span<const OverlayRow> rows) {
    CsvWriter csv(out, {"M", "mean_entropy", "std_error", "t_approx", "d_approx"});
    for (const auto& r : rows) csv.row(r.m, r.e_mc, r.std_error, r.t, r.d);
}

void write_find_mn_csv(std::ostream& out, const FindMnResult& result, std::uint64_t seed) {
    CsvWriter csv(out, {"stage", "n", "M", "mean_entropy", "std_error", "samples", "seed"});
    auto stage = [&](const char* name, const std::vector<SweepRecord>& records) {
        for (const auto& r : records) csv.row(name, r.n, r.m, r.mean, r.std_error, r.samples, seed);
    };
    stage("coarse", result.coarse);
    stage("bracket", result.bracket);
    stage("refine", result.refine);
    csv.row("final", result.n, result.m_n, result.e_n, result.e_n_std_error, result.final_samples, seed);
}

void write_scaling_csv(std::ostream& out, const ScalingResult& result) {
    CsvWriter csv(out, {"n", "M_n", "E_n", "E_n_std_error", "M_star"});
    for (const auto& r : result.rows) csv.row(r.n, r.m_n, r.e_n, r.e_n_std_error, r.peak.x);
}

void write_qft_csv(std::ostream& out, std::span<const QftPair> rows) {
    CsvWriter csv(out, {"index", "entropy_position", "entropy_momentum"});
    for (std::size_t i = 0; i < rows.size(); ++i) csv.row(i, rows[i].position, rows[i].momentum);
}

void write_kalmost_csv(std::ostream& out, std::span<const KAlmostPoint> rows) {
    CsvWriter csv(out, {"k", "M_k", "entropy"});
    for (const auto& r : rows) csv.row(r.k, r.m_k, r.entropy);
}

void write_greedy_csv(std::ostream& out, const GreedyResult& result) {
    CsvWriter csv(out, {"candidate", "score", "best_so_far"});
    for (std::size_t i = 0; i < result.scores.size(); ++i) csv.row(i, result.scores[i], result.trace[i]);
}

void write_values_csv(std::ostream& out, std::string_view column, std::span<const double> values) {
    CsvWriter csv(out, {"index", column});
    for (std::size_t i = 0; i < values.size(); ++i) csv.row(i, values[i]);
}

std::filesystem::path manifest_path(const std::filesystem::path& output) {
    auto p = output;
    p += ".manifest.json";
    return p;
}

void write_manifest(const std::filesystem::path& path, const Manifest& manifest) {
    nlohmann::ordered_json doc;
    doc["command"] = manifest.command;
    doc["argv"] = manifest.argv;
    auto& config = doc["config"];
    config = nlohmann::ordered_json::object();
    for (const auto& [k, v] : manifest.config) config[k] = v;
    doc["seed"] = manifest.seed;
    doc["threads"] = manifest.threads;
    doc["version"] = std::string(version());
#if defined(__clang__)
    doc["compiler"] = std::string("clang ") + __clang_version__;
#elif defined(__GNUC__)
    doc["compiler"] = std::string("gcc ") + __VERSION__;
#else
    doc["compiler"] = "unknown";
#endif
    doc["wall_seconds"] = manifest.wall_seconds;
    const std::time_t now = std::time(nullptr);
    std::tm utc{};
    gmtime_r(&now, &utc);
    std::ostringstream stamp;
    stamp << std::put_time(&utc, "%Y-%m-%dT%H:%M:%SZ");
    doc["timestamp"] = stamp.str();

    std::ofstream file(path);
    if (!file) throw std::runtime_error("cannot write manifest " + path.string());
    file << doc.dump(2) << '\n';
}

} // namespace seqent
