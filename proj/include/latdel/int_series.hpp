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

#include <cstddef>
#include <vector>

#include "latdel/bigint.hpp"

namespace latdel {

/// A power series c_0 + c_1 q + ... + c_D q^D known exactly up to its
/// truncation degree D. Products truncate to the smaller degree of the two
/// operands; nothing is ever rounded.
class IntSeries {
 public:
  explicit IntSeries(std::size_t truncation_degree = 0);
  explicit IntSeries(std::vector<BigInt> coefficients);

  std::size_t truncation_degree() const noexcept { return coeffs_.size() - 1; }

  /// Throws DegreeError beyond the truncation degree.
  const BigInt& coefficient(std::size_t k) const;
  const BigInt& operator[](std::size_t k) const { return coeffs_[k]; }
  BigInt& operator[](std::size_t k) { return coeffs_[k]; }
  const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }

  /// Sum of all stored coefficients (value at q = 1 for a polynomial).
  BigInt sum() const;
  /// c_0 + ... + c_k, with k clamped to the truncation degree.
  BigInt partial_sum(std::size_t k) const;
  /// Lowest degree with a nonzero coefficient, or truncation_degree()+1.
  std::size_t valuation() const;

  IntSeries truncated(std::size_t degree) const;
  /// Multiplies by q^k, keeping the truncation degree.
  IntSeries shifted(std::size_t k) const;
  /// 1 / this; the constant term must be +1 or -1.
  IntSeries reciprocal() const;

  friend IntSeries operator+(const IntSeries& a, const IntSeries& b);
  friend IntSeries operator-(const IntSeries& a, const IntSeries& b);
  friend IntSeries operator*(const IntSeries& a, const IntSeries& b);
  friend bool operator==(const IntSeries&, const IntSeries&) = default;

 private:
  std::vector<BigInt> coeffs_;
};

}  // namespace latdel
