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

#include <doctest.h>

#include <cmath>

#include "latdel/bounds.hpp"
#include "latdel/error.hpp"
#include "latdel/series.hpp"
#include "oracle.hpp"

using namespace latdel;

TEST_SUITE("bounds") {

TEST_CASE("ball volume: closed form, series coefficient and brute force agree") {
  for (std::int64_t n = 1; n <= 8; ++n) {
    const auto series = ball_series(static_cast<std::size_t>(n), 8);
    for (std::int64_t e = 0; e <= 8; ++e) {
      const auto v = ball_volume(n, e);
      CHECK(v == series.coefficient(static_cast<std::size_t>(e)));
      if (n <= 6) CHECK(v == oracle::ball_count(n, e));
    }
  }
  CHECK(ball_volume(8, 3) == 833);
  CHECK(ball_volume(8, 1) == 17);
  CHECK(ball_volume(1, 5) == 11);
}

TEST_CASE("ambient count is stars and bars") {
  CHECK(ambient_count(8, 24, 2) == 6435);
  CHECK(ambient_count(2, 5, 1) == 4);
  CHECK(ambient_count(4, 8, 2) == 1);
  CHECK(ambient_count(4, 7, 2) == 0);
  for (std::int64_t N = 3; N <= 12; ++N) {
    std::uint64_t count = 0;
    oracle::for_each_composition(3, N, 1, [&](const oracle::Vec&) { ++count; });
    CHECK(ambient_count(3, N, 1) == count);
  }
}

TEST_CASE("Gilbert and Hamming values") {
  CHECK(gilbert_lower(8, 4, 24, 2) == 8);
  CHECK(gilbert_lower(8, 4, 32, 2) == 295);
  CHECK(gilbert_lower(16, 4, 36, 2) == 1);
  CHECK(hamming_upper(8, 4, 24, 2) == 378);
  CHECK(hamming_upper(8, 4, 44, 2) == 395560);
  CHECK(hamming_upper(16, 4, 36, 2) == 117);
  for (std::int64_t N = 24; N <= 80; N += 4)
    CHECK(gilbert_lower(8, 4, N, 2) <= hamming_upper(8, 4, N, 2));
}

TEST_CASE("Johnson bound in exact arithmetic") {
  CHECK_FALSE(johnson_upper(8, 4, 24).has_value());
  REQUIRE(johnson_upper(8, 19, 20).has_value());
  CHECK(*johnson_upper(8, 19, 20) == 76);
  for (std::int64_t n = 2; n <= 10; ++n)
    for (std::int64_t d = 1; d <= 30; ++d) CHECK(*johnson_upper(n, d, d) == 2 * n);
  // Boundary: d = N(1 - 1/(2n)) exactly is outside the hypothesis.
  CHECK_FALSE(johnson_upper(8, 15, 16).has_value());
}

TEST_CASE("hypothesis domain flag") {
  CHECK(in_bound_theorem_domain(8, 4, 24, 2));
  CHECK_FALSE(in_bound_theorem_domain(8, 4, 16, 2));
  CHECK_FALSE(in_bound_theorem_domain(3, 4, 10, 2));
  CHECK_FALSE(in_bound_theorem_domain(8, 6, 40, 2));
  const auto rep = bound_report(8, 4, 24, 2, BigInt(331));
  CHECK(rep.e == 1);
  CHECK(rep.ambient == 6435);
  CHECK(*rep.nu_lower == 331);
}

TEST_CASE("entropy and L") {
  CHECK(entropy(0.0) == 0.0);
  CHECK(entropy(1.0) == 0.0);
  CHECK(entropy(0.5) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(entropy(0.25) - 0.811278124459) < 1e-9);
  CHECK(lee_exponent(0.0) == 0.0);
  CHECK(std::abs(lee_exponent(1.0) - 2 * std::log2(1 + std::sqrt(2.0))) < 1e-9);
  for (double x = 0.01; x <= 4.0; x += 0.01) CHECK(lee_exponent(x) > lee_exponent(x - 0.01));
  // Direct formula away from zero.
  for (double x : {0.3, 1.7, 3.2}) {
    const double s = std::sqrt(x * x + 1);
    const double direct = x * std::log2(x) + std::log2(x + s) - x * std::log2(s - 1);
    CHECK(std::abs(lee_exponent(x) - direct) < 1e-9);
  }
  CHECK_THROWS_AS(entropy(1.5), DomainError);
  CHECK_THROWS_AS(lee_exponent(-1.0), DomainError);
}

TEST_CASE("rate bound") {
  const auto p = rate_bound(2, 0.5, 0.0);
  CHECK(std::abs(p.lower - 0.75 * entropy(1.0 / 3.0)) < 1e-6);
  CHECK(p.lower == p.upper);
  for (std::int64_t r : {1, 2, 3})
    for (double eta = 0.1; eta < 0.95; eta += 0.1) {
      double prev = rate_bound(r, eta, 0.0).lower;
      for (double delta = 0.01; delta < 1.0; delta += 0.01) {
        const auto q = rate_bound(r, eta, delta);
        CHECK(q.lower <= prev + 1e-12);
        CHECK(q.lower <= q.upper + 1e-12);
        prev = q.lower;
      }
    }
  CHECK(rate_bound(2, 0.5, 0).lower > rate_bound(2, 0.2, 0).lower);
  CHECK(rate_bound(2, 0.5, 0).lower > rate_bound(2, 0.8, 0).lower);
  CHECK_THROWS_AS(rate_bound(0, 0.5, 0.1), DomainError);
  CHECK_THROWS_AS(rate_bound(2, 1.0, 0.1), DomainError);
  CHECK_THROWS_AS(rate_bound(2, 0.5, 2.0), DomainError);
}

TEST_CASE("delta = 0 exponent matches the ambient count growth") {
  const std::int64_t N = 4096;
  for (double eta : {0.3, 0.5, 0.7}) {
    const std::int64_t r = 2;
    const auto n = static_cast<std::int64_t>(std::floor(eta * N / r));
    const double empirical = log2_big(ambient_count(n, N, r)) / static_cast<double>(N);
    CHECK(std::abs(empirical - rate_bound(r, eta, 0).lower) < 0.02);
  }
}

TEST_CASE("curve emission order and grid") {
  const std::vector<double> etas{0.2, 0.5};
  const auto grid = delta_grid(0.25, 1.0);
  CHECK(grid.size() == 5);
  const auto rows = curve_emit(2, etas, grid);
  REQUIRE(rows.size() == 10);
  CHECK(rows[0].eta == 0.2);
  CHECK(rows[4].delta == doctest::Approx(1.0));
  CHECK(rows[5].eta == 0.5);
  for (const auto& p : rows) CHECK(p.lower <= 1.0);
}

}
