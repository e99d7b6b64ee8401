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
#include <optional>
#include <span>
#include <vector>

#include "latdel/bigint.hpp"

namespace latdel {

/// Number of points of Z^n within Manhattan distance e of the origin:
/// sum_i 2^i C(n, i) C(e, i).
BigInt ball_volume(std::int64_t n, std::int64_t e);

/// A(n, 1, N, r) = C(N - nr + n - 1, n - 1): vectors with entries >= r and
/// sum N. Zero when N < nr.
BigInt ambient_count(std::int64_t n, std::int64_t N, std::int64_t r);

/// Gilbert-type lower bound ceil(ambient / V(n, d - 1)).
BigInt gilbert_lower(std::int64_t n, std::int64_t d, std::int64_t N, std::int64_t r);

/// Sphere-packing-type value floor(ambient / V(n, e)), e = floor((d - 1)/2).
/// The floor follows the tabulated values (6435 / 17 -> 378).
BigInt hamming_upper(std::int64_t n, std::int64_t d, std::int64_t N, std::int64_t r);

/// floor(d / (d - N(1 - 1/(2n)))) when d > N(1 - 1/(2n)), evaluated in
/// integers as floor(2nd / (2nd - N(2n - 1))); nullopt otherwise.
std::optional<BigInt> johnson_upper(std::int64_t n, std::int64_t d, std::int64_t N);

/// N > nr, n >= d and r > e >= 1.
bool in_bound_theorem_domain(std::int64_t n, std::int64_t d, std::int64_t N, std::int64_t r);

struct BoundReport {
  std::int64_t n = 0;
  std::int64_t d = 0;
  std::int64_t N = 0;
  std::int64_t r = 0;
  std::int64_t e = 0;
  BigInt ambient;
  BigInt gilbert_lower;
  BigInt hamming_upper;
  std::optional<BigInt> johnson_upper;
  std::optional<BigInt> nu_lower;
  bool in_theorem_domain = false;
};

BoundReport bound_report(std::int64_t n, std::int64_t d, std::int64_t N, std::int64_t r,
                         std::optional<BigInt> nu_lower = std::nullopt);

/// Binary entropy in bits, H(0) = H(1) = 0. DomainError outside [0, 1].
double entropy(double q);

/// L(x) = x log2 x + log2(x + sqrt(x^2+1)) - x log2(sqrt(x^2+1) - 1), the
/// exponent of large Lee balls; L(0) = 0. DomainError for x < 0.
double lee_exponent(double x);

/// f(x, y, z) = [1 - y + y/x] H(y / (y + x(1 - y))) - (y/x) L(x z / y).
double rate_function(double x, double y, double z);

struct AsymptoticPoint {
  std::int64_t r = 0;
  double eta = 0;
  double delta = 0;
  double lower = 0;  // f(r, eta, delta)
  double upper = 0;  // f(r, eta, delta / 2)
};

/// DomainError unless r >= 1, 0 < eta < 1 and 0 <= delta < 2.
AsymptoticPoint rate_bound(std::int64_t r, double eta, double delta);

/// Rows ordered eta-major, delta-minor.
std::vector<AsymptoticPoint> curve_emit(std::int64_t r, std::span<const double> etas,
                                        std::span<const double> deltas);

/// 0, step, 2 step, ... up to and including `last` (within rounding).
std::vector<double> delta_grid(double step, double last);

}  // namespace latdel
