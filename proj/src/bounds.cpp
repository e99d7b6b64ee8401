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

#include "latdel/bounds.hpp"

#include <cmath>

#include "latdel/error.hpp"

namespace latdel {

BigInt ball_volume(std::int64_t n, std::int64_t e) {
  if (n < 1 || e < 0) throw ParameterError("ball_volume needs n >= 1 and e >= 0");
  BigInt v = 0;
  for (std::int64_t i = 0; i <= std::min(n, e); ++i) {
    v += (BigInt(1) << static_cast<unsigned>(i)) * binomial(n, i) * binomial(e, i);
  }
  return v;
}

BigInt ambient_count(std::int64_t n, std::int64_t N, std::int64_t r) {
  if (n < 1) throw ParameterError("ambient_count needs n >= 1");
  if (N < n * r) return 0;
  return binomial(N - n * r + n - 1, n - 1);
}

BigInt gilbert_lower(std::int64_t n, std::int64_t d, std::int64_t N, std::int64_t r) {
  if (d < 1) throw ParameterError("gilbert_lower needs d >= 1");
  return ceil_div(ambient_count(n, N, r), ball_volume(n, d - 1));
}

BigInt hamming_upper(std::int64_t n, std::int64_t d, std::int64_t N, std::int64_t r) {
  if (d < 1) throw ParameterError("hamming_upper needs d >= 1");
  return floor_div(ambient_count(n, N, r), ball_volume(n, (d - 1) / 2));
}

std::optional<BigInt> johnson_upper(std::int64_t n, std::int64_t d, std::int64_t N) {
  if (n < 1) throw ParameterError("johnson_upper needs n >= 1");
  const BigInt num = BigInt(2 * n) * d;
  const BigInt den = num - BigInt(N) * (2 * n - 1);
  if (den <= 0) return std::nullopt;
  return floor_div(num, den);
}

bool in_bound_theorem_domain(std::int64_t n, std::int64_t d, std::int64_t N, std::int64_t r) {
  const std::int64_t e = (d - 1) / 2;
  return N > n * r && n >= d && r > e && e >= 1;
}

BoundReport bound_report(std::int64_t n, std::int64_t d, std::int64_t N, std::int64_t r,
                         std::optional<BigInt> nu_lower) {
  BoundReport rep;
  rep.n = n;
  rep.d = d;
  rep.N = N;
  rep.r = r;
  rep.e = (d - 1) / 2;
  rep.ambient = ambient_count(n, N, r);
  rep.gilbert_lower = gilbert_lower(n, d, N, r);
  rep.hamming_upper = hamming_upper(n, d, N, r);
  rep.johnson_upper = johnson_upper(n, d, N);
  rep.nu_lower = std::move(nu_lower);
  rep.in_theorem_domain = in_bound_theorem_domain(n, d, N, r);
  return rep;
}

double entropy(double q) {
  if (!(q >= 0.0 && q <= 1.0)) throw DomainError("entropy argument outside [0, 1]");
  if (q == 0.0 || q == 1.0) return 0.0;
  return -q * std::log2(q) - (1.0 - q) * std::log2(1.0 - q);
}

double lee_exponent(double x) {
  if (!(x >= 0.0)) throw DomainError("lee_exponent needs x >= 0");
  if (x == 0.0) return 0.0;
  // sqrt(x^2+1) - 1 = x^2 / (sqrt(x^2+1) + 1) avoids cancellation near 0,
  // which folds the first and last terms into x log2((sqrt(x^2+1) + 1) / x).
  const double root = std::hypot(x, 1.0);
  return x * std::log2((root + 1.0) / x) + std::asinh(x) / std::log(2.0);
}

double rate_function(double x, double y, double z) {
  const double weight = 1.0 - y + y / x;
  return weight * entropy(y / (y + x * (1.0 - y))) - (y / x) * lee_exponent(x * z / y);
}

AsymptoticPoint rate_bound(std::int64_t r, double eta, double delta) {
  if (r < 1) throw DomainError("rate_bound needs r >= 1");
  if (!(eta > 0.0 && eta < 1.0)) throw DomainError("rate_bound needs 0 < eta < 1");
  if (!(delta >= 0.0 && delta < 2.0)) throw DomainError("rate_bound needs 0 <= delta < 2");
  const auto x = static_cast<double>(r);
  return {r, eta, delta, rate_function(x, eta, delta), rate_function(x, eta, delta / 2.0)};
}

std::vector<AsymptoticPoint> curve_emit(std::int64_t r, std::span<const double> etas,
                                        std::span<const double> deltas) {
  std::vector<AsymptoticPoint> rows;
  rows.reserve(etas.size() * deltas.size());
  for (double eta : etas) {
    for (double delta : deltas) rows.push_back(rate_bound(r, eta, delta));
  }
  return rows;
}

std::vector<double> delta_grid(double step, double last) {
  if (!(step > 0.0) || last < 0.0) throw ParameterError("delta grid needs step > 0, last >= 0");
  std::vector<double> grid;
  const auto count = static_cast<std::size_t>(std::floor(last / step + 1e-9));
  for (std::size_t i = 0; i <= count; ++i) grid.push_back(static_cast<double>(i) * step);
  return grid;
}

}  // namespace latdel
