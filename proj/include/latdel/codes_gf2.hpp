// Copyright 2026 The latdel Authors
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
#include <string>
#include <string_view>
#include <vector>

#include "latdel/bigint.hpp"

namespace latdel {

// Codewords of length <= 64 packed into a machine word; bit i is coordinate i.
using BinaryWordMask = std::uint64_t;

inline constexpr std::size_t kMaxBinaryLength = 64;
inline constexpr std::size_t kMaxEnumerationDimension = 26;

/// A binary linear [n, k] code described by a k x n generator matrix.
///
/// The rows must be linearly independent over GF(2); the constructor checks
/// this by elimination so that enumerating all 2^k information words visits
/// every codeword exactly once.
class BinaryLinearCode {
 public:
  BinaryLinearCode(std::string name, std::size_t length,
                   std::vector<BinaryWordMask> rows);

  const std::string& name() const noexcept { return name_; }
  std::size_t length() const noexcept { return length_; }
  std::size_t dimension() const noexcept { return rows_.size(); }
  const std::vector<BinaryWordMask>& rows() const noexcept { return rows_; }

  /// Row i as a dense 0/1 vector.
  std::vector<std::uint8_t> row(std::size_t i) const;

  bool contains(BinaryWordMask word) const;

  /// Visits all 2^k codewords in Gray-code order of the information word.
  template <typename F>
  void for_each_codeword(F&& visit) const {
    check_enumerable();
    BinaryWordMask word = 0;
    visit(word);
    const std::uint64_t total = std::uint64_t{1} << rows_.size();
    for (std::uint64_t i = 1; i < total; ++i) {
      word ^= rows_[static_cast<std::size_t>(__builtin_ctzll(i))];
      visit(word);
    }
  }

 private:
  void check_enumerable() const;

  std::string name_;
  std::size_t length_;
  std::vector<BinaryWordMask> rows_;
  // Row-echelon copy used for membership tests: pivot bit per row.
  std::vector<BinaryWordMask> echelon_;
  std::vector<int> pivots_;
};

BinaryLinearCode repetition_code(std::size_t s);
BinaryLinearCode even_weight_code(std::size_t s);

/// RM(k, m): evaluations of the monomials of degree <= k on F_2^m, points in
/// lexicographic order (first coordinate most significant).
BinaryLinearCode reed_muller_code(std::size_t k, std::size_t m);

/// The [8,4,4] extended Hamming code, built as RM(1,3).
BinaryLinearCode extended_hamming_8();

/// Parses "extended_hamming_8", "reed_muller(k,m)", "repetition(s)" or
/// "even_weight(s)".
BinaryLinearCode build_binary_code(std::string_view name);

/// A_0..A_n: number of codewords of each Hamming weight.
struct WeightDistribution {
  std::vector<std::uint64_t> counts;

  std::size_t length() const noexcept { return counts.empty() ? 0 : counts.size() - 1; }
  std::uint64_t total() const;
  friend bool operator==(const WeightDistribution&, const WeightDistribution&) = default;
};

WeightDistribution weight_distribution(const BinaryLinearCode& code);

/// Smallest nonzero codeword weight; ParameterError for the zero code.
std::size_t min_hamming_weight(const BinaryLinearCode& code);

}  // namespace latdel
