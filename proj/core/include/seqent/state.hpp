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

#include <Eigen/Core>

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace seqent {

using Complex = std::complex<double>;
using Basis = std::uint64_t;

/// Largest register for which dense states and exact spectra are built.
inline constexpr int kMaxStateQubits = 24;
/// Largest register a Sequence may describe.
inline constexpr int kMaxSequenceQubits = 62;

/// Strictly increasing list of distinct integers in [0, 2^n).
class Sequence {
public:
    /// Throws std::invalid_argument unless elements are strictly increasing,
    /// nonempty and below 2^n.
    Sequence(int n, std::vector<Basis> elements);

    /// Sorts the values first; duplicates are still rejected.
    static Sequence from_values(int n, std::vector<Basis> values);

    int qubits() const noexcept { return n_; }
    std::uint64_t dimension() const noexcept { return std::uint64_t{1} << n_; }
    std::size_t size() const noexcept { return elements_.size(); }
    std::span<const Basis> elements() const noexcept { return elements_; }

    friend bool operator==(const Sequence&, const Sequence&) = default;

private:
    int n_;
    std::vector<Basis> elements_;
};

/// Unit-norm amplitude vector over the computational basis. Qubit j is bit j
/// of the basis index.
class PureState {
public:
    /// Throws std::invalid_argument if the length is not 2^n or the norm
    /// differs from 1 by more than 1e-10.
    PureState(int n, std::vector<Complex> amplitudes);

    int qubits() const noexcept { return n_; }
    std::uint64_t dimension() const noexcept { return amplitudes_.size(); }
    std::span<const Complex> amplitudes() const noexcept { return amplitudes_; }
    Complex amplitude(Basis x) const { return amplitudes_.at(x); }
    double norm() const;
    /// True when every imaginary part is exactly zero.
    bool is_real() const;

private:
    int n_;
    std::vector<Complex> amplitudes_;
};

/// Split of the register into subsystem A and its complement B.
class Bipartition {
public:
    /// subset_a is sorted internally; it must be a nonempty proper subset of
    /// {0, ..., n-1} without repeats.
    Bipartition(int n, std::vector<int> subset_a);

    /// A = the high-order half {n/2, ..., n-1}; n must be even.
    static Bipartition natural(int n);

    Bipartition complement() const;

    int qubits() const noexcept { return n_; }
    int size_a() const noexcept { return static_cast<int>(subset_a_.size()); }
    int size_b() const noexcept { return n_ - size_a(); }
    std::span<const int> subset_a() const noexcept { return subset_a_; }
    std::vector<int> subset_b() const;
    std::uint64_t mask_a() const noexcept { return mask_a_; }

    friend bool operator==(const Bipartition& a, const Bipartition& b) noexcept {
        return a.n_ == b.n_ && a.mask_a_ == b.mask_a_;
    }

private:
    int n_;
    std::vector<int> subset_a_;
    std::uint64_t mask_a_ = 0;
};

/// Maps a basis index to its (row, column) in the reshaped amplitude matrix:
/// the row spells the subset-A bits in ascending qubit order, the column the
/// remaining bits. Lookups go through two half-register tables.
class ReshapeIndex {
public:
    explicit ReshapeIndex(const Bipartition& part);

    std::uint64_t rows() const noexcept { return rows_; }
    std::uint64_t cols() const noexcept { return cols_; }

    std::uint64_t row(Basis x) const noexcept {
        return row_lo_[x & lo_mask_] | row_hi_[x >> lo_bits_];
    }
    std::uint64_t col(Basis x) const noexcept {
        return col_lo_[x & lo_mask_] | col_hi_[x >> lo_bits_];
    }

private:
    int lo_bits_;
    std::uint64_t lo_mask_;
    std::uint64_t rows_;
    std::uint64_t cols_;
    std::vector<std::uint32_t> row_lo_, row_hi_, col_lo_, col_hi_;
};

/// Eigenvalues of a reduced density matrix, sorted descending.
class Spectrum {
public:
    /// Clamps values in [-1e-10, 0) to zero and rejects anything more
    /// negative (NumericalError). Throws NumericalError unless the values sum
    /// to 1 within 1e-8.
    static Spectrum from_eigenvalues(std::vector<double> raw);

    std::span<const double> values() const noexcept { return values_; }
    std::size_t size() const noexcept { return values_.size(); }
    double dominant() const noexcept { return values_.front(); }

private:
    explicit Spectrum(std::vector<double> values) : values_(std::move(values)) {}
    std::vector<double> values_;
};

PureState encode_sequence(const Sequence& seq);

/// n/2 Bell pairs |01>+|10> on qubits (n-1-k, k). n even, n >= 2.
Sequence rainbow_sequence(int n);
PureState rainbow_state(int n);

/// Independent standard complex Gaussians, normalized.
PureState haar_state(int n, Rng& rng);

/// out(y) = N^{-1/2} sum_x in(x) exp(2 pi i x y / N).
PureState qft(const PureState& state);

Eigen::MatrixXcd reshape(const PureState& state, const Bipartition& part);

/// Squared singular values of the reshaped amplitude matrix.
Spectrum reduced_spectrum(const PureState& state, const Bipartition& part);
/// Same spectrum as encode_sequence() followed by reduced_spectrum(), built
/// directly from the elements without a dense state vector.
Spectrum reduced_spectrum(const Sequence& seq, const Bipartition& part);

/// Entropies are in bits.
double von_neumann(const Spectrum& spec);
/// d = 1 delegates to von_neumann; d = 0 counts the nonzero eigenvalues.
double renyi(const Spectrum& spec, double d);

double entanglement_entropy(const PureState& state, const Bipartition& part);
double entanglement_entropy(const Sequence& seq, const Bipartition& part);

/// sqrt(N) x sqrt(N) matrix of independent Bernoulli(M/N) entries.
Eigen::MatrixXd bernoulli_matrix(int n, std::uint64_t m, Rng& rng);

/// Spectrum of W^T W / Tr(W^T W). Throws std::domain_error for a zero matrix.
Spectrum gram_spectrum(const Eigen::MatrixXd& w);

} // namespace seqent
