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

#include "seqent/sequences.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <istream>
#include <iterator>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace seqent {

namespace {

void put_u64(std::ostream& out, std::uint64_t v) {
    std::array<char, 8> bytes{};
    for (std::size_t i = 0; i < 8; ++i) bytes[i] = static_cast<char>((v >> (8 * i)) & 0xffu);
    out.write(bytes.data(), bytes.size());
}

std::uint64_t get_u64(std::istream& in) {
    std::array<unsigned char, 8> bytes{};
    if (!in.read(reinterpret_cast<char*>(bytes.data()), bytes.size()))
        throw std::invalid_argument("binary sequence: truncated input");
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < 8; ++i) v |= std::uint64_t{bytes[i]} << (8 * i);
    return v;
}

bool looks_like_text(const std::string& content) {
    for (unsigned char c : content) {
        const bool ok = (c >= '0' && c <= '9') || c == '\n' || c == '\r' || c == ' ' || c == '\t' || c == '#';
        if (!ok && c < 0x20) return false;
        if (!ok && c >= 0x80) return false;
    }
    return true;
}

} // namespace

void write_text(std::ostream& out, const Sequence& seq) {
    for (Basis x : seq.elements()) out << x << '\n';
}

Sequence read_text(std::istream& in, int n) {
    std::vector<Basis> values;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        const auto last = line.find_last_not_of(" \t\r");
        Basis v = 0;
        const char* begin = line.data() + first;
        const char* end = line.data() + last + 1;
        const auto [ptr, ec] = std::from_chars(begin, end, v);
        if (ec != std::errc{} || ptr != end)
            throw std::invalid_argument("text sequence: bad value on line " + std::to_string(lineno));
        values.push_back(v);
    }
    return Sequence::from_values(n, std::move(values));
}

void write_binary(std::ostream& out, const Sequence& seq) {
    put_u64(out, static_cast<std::uint64_t>(seq.qubits()));
    put_u64(out, seq.size());
    for (Basis x : seq.elements()) put_u64(out, x);
}

Sequence read_binary(std::istream& in) {
    const std::uint64_t n = get_u64(in);
    const std::uint64_t m = get_u64(in);
    if (n < 1 || n > static_cast<std::uint64_t>(kMaxSequenceQubits))
        throw std::invalid_argument("binary sequence: bad qubit count in header");
    if (m < 1 || m > (std::uint64_t{1} << n)) throw std::invalid_argument("binary sequence: bad length in header");
    std::vector<Basis> values;
    values.reserve(static_cast<std::size_t>(m));
    for (std::uint64_t i = 0; i < m; ++i) values.push_back(get_u64(in));
    return Sequence(static_cast<int>(n), std::move(values));
}

Sequence load_sequence(const std::filesystem::path& path, int n) {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw std::invalid_argument("cannot open sequence file " + path.string());
    const std::string content{std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
    if (looks_like_text(content)) {
        if (n <= 0) throw std::invalid_argument("text sequence file needs the qubit count");
        std::istringstream in(content);
        return read_text(in, n);
    }
    std::istringstream in(content, std::ios::binary);
    Sequence seq = read_binary(in);
    if (n > 0 && seq.qubits() != n)
        throw std::invalid_argument("binary sequence header has n = " + std::to_string(seq.qubits()) +
                                    ", expected " + std::to_string(n));
    return seq;
}

} // namespace seqent
