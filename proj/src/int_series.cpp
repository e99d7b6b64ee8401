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

#include "latdel/int_series.hpp"

#include <algorithm>
#include <string>

#include "latdel/error.hpp"

namespace latdel {

IntSeries::IntSeries(std::size_t truncation_degree) : coeffs_(truncation_degree + 1) {}

IntSeries::IntSeries(std::vector<BigInt> coefficients) : coeffs_(std::move(coefficients)) {
  if (coeffs_.empty()) coeffs_.emplace_back(0);
}

const BigInt& IntSeries::coefficient(std::size_t k) const {
  if (k >= coeffs_.size()) {
    throw DegreeError("coefficient " + std::to_string(k) + " beyond truncation degree " +
                      std::to_string(truncation_degree()));
  }
  return coeffs_[k];
}

BigInt IntSeries::sum() const {
  BigInt s = 0;
  for (const auto& c : coeffs_) s += c;
  return s;
}

BigInt IntSeries::partial_sum(std::size_t k) const {
  BigInt s = 0;
  const std::size_t last = std::min(k, truncation_degree());
  for (std::size_t i = 0; i <= last; ++i) s += coeffs_[i];
  return s;
}

std::size_t IntSeries::valuation() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return i;
  }
  return coeffs_.size();
}

IntSeries IntSeries::truncated(std::size_t degree) const {
  std::vector<BigInt> out(degree + 1);
  for (std::size_t i = 0; i <= std::min(degree, truncation_degree()); ++i) out[i] = coeffs_[i];
  return IntSeries(std::move(out));
}

IntSeries IntSeries::shifted(std::size_t k) const {
  IntSeries out(truncation_degree());
  for (std::size_t i = 0; i + k <= truncation_degree(); ++i) out.coeffs_[i + k] = coeffs_[i];
  return out;
}

IntSeries IntSeries::reciprocal() const {
  const BigInt& c0 = coeffs_[0];
  if (c0 != 1 && c0 != -1) throw DomainError("reciprocal needs a unit constant term");
  const std::size_t d = truncation_degree();
  IntSeries inv(d);
  inv.coeffs_[0] = c0;  // 1/c0 == c0 for units
  for (std::size_t k = 1; k <= d; ++k) {
    BigInt acc = 0;
    for (std::size_t j = 1; j <= k; ++j) acc += coeffs_[j] * inv.coeffs_[k - j];
    inv.coeffs_[k] = -acc * c0;
  }
  return inv;
}

IntSeries operator+(const IntSeries& a, const IntSeries& b) {
  const std::size_t d = std::min(a.truncation_degree(), b.truncation_degree());
  IntSeries out(d);
  for (std::size_t i = 0; i <= d; ++i) out.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
  return out;
}

IntSeries operator-(const IntSeries& a, const IntSeries& b) {
  const std::size_t d = std::min(a.truncation_degree(), b.truncation_degree());
  IntSeries out(d);
  for (std::size_t i = 0; i <= d; ++i) out.coeffs_[i] = a.coeffs_[i] - b.coeffs_[i];
  return out;
}

IntSeries operator*(const IntSeries& a, const IntSeries& b) {
  const std::size_t d = std::min(a.truncation_degree(), b.truncation_degree());
  IntSeries out(d);
  for (std::size_t i = 0; i <= d; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; i + j <= d; ++j) {
      if (b.coeffs_[j] != 0) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return out;
}

}  // namespace latdel
