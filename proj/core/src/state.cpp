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

#include "seqent/state.hpp"

#include "linalg.hpp"
#include "seqent/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace seqent {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument(what);
}

void require_state_size(int n) {
    require(n >= 1, "qubit count must be positive");
    require(n <= kMaxStateQubits,
            "n = " + std::to_string(n) + " exceeds the supported register size " + std::to_string(kMaxStateQubits));
}

constexpr double kClampTolerance = 1e-10;
constexpr double kTraceTolerance = 1e-8;

} // namespace

Sequence::Sequence(int n, std::vector<Basis> elements) : n_(n), elements_(std::move(elements)) {
    require(n >= 1 && n <= kMaxSequenceQubits, "sequence qubit count out of range: " + std::to_string(n));
    require(!elements_.empty(), "sequence must contain at least one element");
    for (std::size_t i = 1; i < elements_.size(); ++i)
        require(elements_[i - 1] < elements_[i], "sequence elements must be strictly increasing (duplicate or unsorted "
                                                 "value " + std::to_string(elements_[i]) + ")");
    require(elements_.back() < dimension(),
            "sequence element " + std::to_string(elements_.back()) + " out of range for n = " + std::to_string(n));
}

Sequence Sequence::from_values(int n, std::vector<Basis> values) {
    std::sort(values.begin(), values.end());
    return Sequence(n, std::move(values));
}

PureState::PureState(int n, std::vector<Complex> amplitudes) : n_(n), amplitudes_(std::move(amplitudes)) {
    require_state_size(n);
    require(amplitudes_.size() == (std::size_t{1} << n), "amplitude vector length must be 2^n");
    const double sq = std::accumulate(amplitudes_.begin(), amplitudes_.end(), 0.0,
                                      [](double acc, const Complex& a) { return acc + std::norm(a); });
    require(std::abs(sq - 1.0) <= 1e-10, "state is not normalized (|psi|^2 = " + std::to_string(sq) + ")");
}

double PureState::norm() const {
    double sq = 0.0;
    for (const auto& a : amplitudes_) sq += std::norm(a);
    return std::sqrt(sq);
}

bool PureState::is_real() const {
    return std::all_of(amplitudes_.begin(), amplitudes_.end(), [](const Complex& a) { return a.imag() == 0.0; });
}

Bipartition::Bipartition(int n, std::vector<int> subset_a) : n_(n), subset_a_(std::move(subset_a)) {
    require(n >= 2 && n <= kMaxSequenceQubits, "bipartition needs 2 <= n <= 62");
    std::sort(subset_a_.begin(), subset_a_.end());
    require(std::adjacent_find(subset_a_.begin(), subset_a_.end()) == subset_a_.end(),
            "bipartition subset has repeated qubits");
    require(!subset_a_.empty() && static_cast<int>(subset_a_.size()) < n,
            "bipartition subset must be nonempty and proper");
    require(subset_a_.front() >= 0 && subset_a_.back() < n, "bipartition qubit index out of range");
    for (int q : subset_a_) mask_a_ |= std::uint64_t{1} << q;
}

Bipartition Bipartition::natural(int n) {
    require(n >= 2 && n % 2 == 0, "natural bipartition needs an even n >= 2");
    std::vector<int> high(static_cast<std::size_t>(n / 2));
    std::iota(high.begin(), high.end(), n / 2);
    return Bipartition(n, std::move(high));
}

Bipartition Bipartition::complement() const { return Bipartition(n_, subset_b()); }

std::vector<int> Bipartition::subset_b() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size_b()));
    for (int q = 0; q < n_; ++q)
        if (!((mask_a_ >> q) & 1u)) out.push_back(q);
    return out;
}

ReshapeIndex::ReshapeIndex(const Bipartition& part) {
    const int n = part.qubits();
    require_state_size(n);
    lo_bits_ = n / 2;
    const int hi_bits = n - lo_bits_;
    lo_mask_ = (std::uint64_t{1} << lo_bits_) - 1;
    rows_ = std::uint64_t{1} << part.size_a();
    cols_ = std::uint64_t{1} << part.size_b();

    // Position of each qubit inside the row (A) or column (B) index.
    std::vector<int> rank(static_cast<std::size_t>(n));
    std::vector<bool> in_a(static_cast<std::size_t>(n));
    int ra = 0, rb = 0;
    for (int q = 0; q < n; ++q) {
        in_a[q] = (part.mask_a() >> q) & 1u;
        rank[q] = in_a[q] ? ra++ : rb++;
    }

    auto fill = [&](int offset, int bits, std::vector<std::uint32_t>& row, std::vector<std::uint32_t>& col) {
        const std::size_t size = std::size_t{1} << bits;
        row.assign(size, 0);
        col.assign(size, 0);
        for (std::size_t v = 0; v < size; ++v) {
            for (int j = 0; j < bits; ++j) {
                if (!((v >> j) & 1u)) continue;
                const int q = offset + j;
                (in_a[q] ? row[v] : col[v]) |= std::uint32_t{1} << rank[q];
            }
        }
    };
    fill(0, lo_bits_, row_lo_, col_lo_);
    fill(lo_bits_, hi_bits, row_hi_, col_hi_);
}

Spectrum Spectrum::from_eigenvalues(std::vector<double> raw) {
    if (raw.empty()) throw NumericalError("empty spectrum");
    for (double& v : raw) {
        if (!std::isfinite(v)) throw NumericalError("non-finite eigenvalue");
        if (v < 0.0) {
            if (v < -kClampTolerance)
                throw NumericalError("eigenvalue " + std::to_string(v) + " is negative beyond roundoff");
            v = 0.0;
        }
        v = std::min(v, 1.0);
    }
    std::sort(raw.begin(), raw.end(), std::greater<>());
    const double total = std::accumulate(raw.begin(), raw.end(), 0.0);
    if (std::abs(total - 1.0) > kTraceTolerance)
        throw NumericalError("eigenvalues sum to " + std::to_string(total) + ", not 1");
    return Spectrum(std::move(raw));
}

PureState encode_sequence(const Sequence& seq) {
    require_state_size(seq.qubits());
    std::vector<Complex> amps(seq.dimension());
    const double a = 1.0 / std::sqrt(static_cast<double>(seq.size()));
    for (Basis x : seq.elements()) amps[x] = a;
    return PureState(seq.qubits(), std::move(amps));
}

Sequence rainbow_sequence(int n) {
    require(n >= 2 && n % 2 == 0, "rainbow state needs an even n >= 2");
    require(n <= kMaxSequenceQubits, "rainbow state register too large");
    const int half = n / 2;
    std::vector<Basis> values;
    values.reserve(std::size_t{1} << half);
    for (Basis low = 0; low < (Basis{1} << half); ++low) {
        Basis x = low;
        for (int k = 0; k < half; ++k)
            if (!((low >> k) & 1u)) x |= Basis{1} << (n - 1 - k);
        values.push_back(x);
    }
    return Sequence::from_values(n, std::move(values));
}

PureState rainbow_state(int n) { return encode_sequence(rainbow_sequence(n)); }

PureState haar_state(int n, Rng& rng) {
    require_state_size(n);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<Complex> amps(std::size_t{1} << n);
    double sq = 0.0;
    for (auto& a : amps) {
        const double re = gauss(rng);
        const double im = gauss(rng);
        a = {re, im};
        sq += re * re + im * im;
    }
    const double scale = 1.0 / std::sqrt(sq);
    for (auto& a : amps) a *= scale;
    return PureState(n, std::move(amps));
}

Eigen::MatrixXcd reshape(const PureState& state, const Bipartition& part) {
    require(state.qubits() == part.qubits(), "state and bipartition disagree on n");
    const ReshapeIndex index(part);
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(index.rows()),
                                                static_cast<Eigen::Index>(index.cols()));
    const auto amps = state.amplitudes();
    for (Basis x = 0; x < amps.size(); ++x)
        m(static_cast<Eigen::Index>(index.row(x)), static_cast<Eigen::Index>(index.col(x))) = amps[x];
    return m;
}

namespace {

Spectrum squared(std::vector<double> singular) {
    for (double& s : singular) s *= s;
    return Spectrum::from_eigenvalues(std::move(singular));
}

} // namespace

Spectrum reduced_spectrum(const PureState& state, const Bipartition& part) {
    require(state.qubits() == part.qubits(), "state and bipartition disagree on n");
    const ReshapeIndex index(part);
    const auto rows = static_cast<Eigen::Index>(index.rows());
    const auto cols = static_cast<Eigen::Index>(index.cols());
    const auto amps = state.amplitudes();
    if (state.is_real()) {
        Eigen::MatrixXd m(rows, cols);
        for (Basis x = 0; x < amps.size(); ++x)
            m(static_cast<Eigen::Index>(index.row(x)), static_cast<Eigen::Index>(index.col(x))) = amps[x].real();
        return squared(detail::singular_values(m));
    }
    Eigen::MatrixXcd m(rows, cols);
    for (Basis x = 0; x < amps.size(); ++x)
        m(static_cast<Eigen::Index>(index.row(x)), static_cast<Eigen::Index>(index.col(x))) = amps[x];
    return squared(detail::singular_values(m));
}

Spectrum reduced_spectrum(const Sequence& seq, const Bipartition& part) {
    require(seq.qubits() == part.qubits(), "sequence and bipartition disagree on n");
    const ReshapeIndex index(part);
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(index.rows()),
                                              static_cast<Eigen::Index>(index.cols()));
    const double a = 1.0 / std::sqrt(static_cast<double>(seq.size()));
    for (Basis x : seq.elements())
        m(static_cast<Eigen::Index>(index.row(x)), static_cast<Eigen::Index>(index.col(x))) = a;
    return squared(detail::singular_values(m));
}

double von_neumann(const Spectrum& spec) {
    double s = 0.0;
    for (double l : spec.values()) {
        if (l == 0.0) continue; // 0 log 0 = 0
        s -= l * std::log2(l);
    }
    return std::max(s, 0.0);
}

double renyi(const Spectrum& spec, double d) {
    if (!(d >= 0.0)) throw std::invalid_argument("Renyi order must be >= 0");
    if (d == 1.0) return von_neumann(spec);
    if (std::isinf(d)) return -std::log2(spec.dominant());
    double sum = 0.0;
    for (double l : spec.values())
        if (l > 0.0) sum += std::pow(l, d);
    return std::max(std::log2(sum) / (1.0 - d), 0.0);
}

double entanglement_entropy(const PureState& state, const Bipartition& part) {
    return von_neumann(reduced_spectrum(state, part));
}

double entanglement_entropy(const Sequence& seq, const Bipartition& part) {
    return von_neumann(reduced_spectrum(seq, part));
}

Eigen::MatrixXd bernoulli_matrix(int n, std::uint64_t m, Rng& rng) {
    require(n >= 2 && n % 2 == 0, "Bernoulli model needs an even n >= 2");
    require_state_size(n);
    const std::uint64_t big_n = std::uint64_t{1} << n;
    require(m >= 1 && m <= big_n, "Bernoulli model needs 1 <= M <= N");
    const auto side = static_cast<Eigen::Index>(std::uint64_t{1} << (n / 2));
    std::bernoulli_distribution coin(static_cast<double>(m) / static_cast<double>(big_n));
    Eigen::MatrixXd w(side, side);
    for (Eigen::Index c = 0; c < side; ++c)
        for (Eigen::Index r = 0; r < side; ++r) w(r, c) = coin(rng) ? 1.0 : 0.0;
    return w;
}

Spectrum gram_spectrum(const Eigen::MatrixXd& w) {
    const double total = w.squaredNorm();
    if (total == 0.0) throw std::domain_error("Gram spectrum of a zero matrix is undefined");
    Eigen::MatrixXd copy = w;
    auto s = detail::singular_values(copy);
    for (double& v : s) v = v * v / total;
    return Spectrum::from_eigenvalues(std::move(s));
}

} // namespace seqent
