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

#include "latdel/codes_gf2.hpp"
#include "latdel/codes_z4.hpp"
#include "latdel/int_series.hpp"

namespace latdel {

/// Identifies the Construction A lattice a series belongs to.
struct LatticeTag {
  std::string code_name;
  int modulus = 0;
  std::size_t dimension = 0;
};

/// Shifted nu-series: sum over lattice points x with min_i x_i >= shift of
/// q^{|x|}, truncated.
struct NuSeries {
  LatticeTag tag;
  std::int64_t shift = 0;
  IntSeries series;

  const BigInt& coefficient(std::size_t N) const { return series.coefficient(N); }
};

/// 1 / (1 - q^m)^n up to degree D: C(i+n-1, n-1) at degree m i.
IntSeries geometric_power(std::size_t m, std::size_t n, std::size_t degree);

/// Largest requested N plus one period m n, so shifted coefficients are
/// still available.
std::size_t default_truncation(std::size_t max_N, std::size_t modulus, std::size_t dimension);

/// m = 2: W_C(q^a/(1-q^2), q^b/(1-q^2)) with a, b the first even/odd
/// integers >= r.
NuSeries nu_series(const BinaryLinearCode& code, std::int64_t r, std::size_t degree);
NuSeries nu_series(const WeightDistribution& dist, const std::string& code_name, std::int64_t r,
                   std::size_t degree);

/// m = 4: cwe_C(q^a/(1-q^4), ..., q^d/(1-q^4)).
NuSeries nu_series(const Z4LinearCode& code, std::int64_t r, std::size_t degree);
NuSeries nu_series(const CompleteWeightEnumerator& cwe, const std::string& code_name,
                   std::int64_t r, std::size_t degree);

/// Size of the hat construction at norm N: lattice points with min >= r whose
/// appended coordinate N - sum x_i is also >= r, i.e. sum_{k <= N-r} [q^k] nu.
/// Throws DegreeError if the series is truncated below N - r.
BigInt hat_coefficient(const NuSeries& nu, std::int64_t N);

/// Cumulative Manhattan ball volumes of Z^n: (1+q)^n / (1-q)^{n+1}.
IntSeries ball_series(std::size_t n, std::size_t degree);

}  // namespace latdel
