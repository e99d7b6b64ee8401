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

#include "latdel/series.hpp"

#include "latdel/error.hpp"

namespace latdel {

IntSeries geometric_power(std::size_t m, std::size_t n, std::size_t degree) {
  if (m == 0 || n == 0) throw ParameterError("geometric_power needs m, n >= 1");
  IntSeries out(degree);
  for (std::size_t i = 0; m * i <= degree; ++i) {
    out[m * i] = binomial(static_cast<std::int64_t>(i + n - 1), static_cast<std::int64_t>(n - 1));
  }
  return out;
}

std::size_t default_truncation(std::size_t max_N, std::size_t modulus, std::size_t dimension) {
  return max_N + modulus * dimension;
}

NuSeries nu_series(const WeightDistribution& dist, const std::string& code_name, std::int64_t r,
                   std::size_t degree) {
  if (r < 0) throw ParameterError("only shifts r >= 0 are supported");
  const std::size_t n = dist.length();
  const std::int64_t a = shift_exponent(0, 2, r);
  const std::int64_t b = shift_exponent(1, 2, r);
  IntSeries numerator(std::max<std::size_t>(degree, n * static_cast<std::size_t>(r + 1)));
  for (std::size_t w = 0; w <= n; ++w) {
    if (dist.counts[w] == 0) continue;
    const auto e = static_cast<std::size_t>(static_cast<std::int64_t>(n - w) * a +
                                            static_cast<std::int64_t>(w) * b);
    numerator[e] += dist.counts[w];
  }
  return {{code_name, 2, n}, r, numerator.truncated(degree) * geometric_power(2, n, degree)};
}

NuSeries nu_series(const BinaryLinearCode& code, std::int64_t r, std::size_t degree) {
  return nu_series(weight_distribution(code), code.name(), r, degree);
}

NuSeries nu_series(const CompleteWeightEnumerator& cwe, const std::string& code_name,
                   std::int64_t r, std::size_t degree) {
  const auto numerator = shifted_weight_distribution(cwe, r);
  return {{code_name, 4, cwe.length},
          r,
          numerator.truncated(degree) * geometric_power(4, cwe.length, degree)};
}

NuSeries nu_series(const Z4LinearCode& code, std::int64_t r, std::size_t degree) {
  const auto numerator = shifted_weight_distribution(code, r);
  return {{code.name(), 4, code.length()},
          r,
          numerator.truncated(degree) * geometric_power(4, code.length(), degree)};
}

BigInt hat_coefficient(const NuSeries& nu, std::int64_t N) {
  const std::int64_t top = N - nu.shift;
  if (top < 0) return 0;
  if (static_cast<std::size_t>(top) > nu.series.truncation_degree()) {
    throw DegreeError("hat coefficient at N=" + std::to_string(N) +
                      " needs truncation >= " + std::to_string(top));
  }
  return nu.series.partial_sum(static_cast<std::size_t>(top));
}

IntSeries ball_series(std::size_t n, std::size_t degree) {
  if (n == 0) throw ParameterError("ball_series needs n >= 1");
  IntSeries numerator(degree);
  for (std::size_t i = 0; i <= std::min(n, degree); ++i) {
    numerator[i] = binomial(static_cast<std::int64_t>(n), static_cast<std::int64_t>(i));
  }
  return numerator * geometric_power(1, n + 1, degree);
}

}  // namespace latdel
