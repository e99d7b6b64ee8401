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

#include <set>

#include "latdel/codes_gf2.hpp"
#include "latdel/error.hpp"
#include "oracle.hpp"

using namespace latdel;

namespace {

std::vector<std::vector<int>> dense_rows(const BinaryLinearCode& c) {
  std::vector<std::vector<int>> out;
  for (std::size_t i = 0; i < c.dimension(); ++i) {
    auto r = c.row(i);
    out.emplace_back(r.begin(), r.end());
  }
  return out;
}

std::uint64_t mask_of(const std::vector<int>& w) {
  std::uint64_t m = 0;
  for (std::size_t i = 0; i < w.size(); ++i) m |= std::uint64_t(w[i] & 1) << i;
  return m;
}

}  // namespace

TEST_SUITE("codes_gf2") {

TEST_CASE("H8 weight distribution is 1 + 14 y^4 + y^8") {
  const auto h8 = extended_hamming_8();
  CHECK(h8.length() == 8);
  CHECK(h8.dimension() == 4);
  const auto wd = weight_distribution(h8);
  CHECK(wd.counts == std::vector<std::uint64_t>{1, 0, 0, 0, 14, 0, 0, 0, 1});
  CHECK(min_hamming_weight(h8) == 4);
}

TEST_CASE("H8 is self-dual under MacWilliams") {
  const auto wd = weight_distribution(extended_hamming_8());
  // B_j = (1/|C|) sum_i A_i K_j(i), Krawtchouk K_j(i) = sum_l (-1)^l C(i,l) C(n-i, j-l).
  const int n = 8;
  for (int j = 0; j <= n; ++j) {
    BigInt acc = 0;
    for (int i = 0; i <= n; ++i) {
      BigInt k = 0;
      for (int l = 0; l <= j; ++l) {
        const BigInt term = binomial(i, l) * binomial(n - i, j - l);
        k += (l % 2 ? -term : term);
      }
      acc += BigInt(wd.counts[i]) * k;
    }
    CHECK(acc % 16 == 0);
    CHECK(acc / 16 == BigInt(wd.counts[j]));
  }
}

TEST_CASE("Gray-code enumeration visits the additive closure exactly once") {
  for (const auto& code : {extended_hamming_8(), reed_muller_code(1, 4), reed_muller_code(2, 4),
                           even_weight_code(7), repetition_code(5)}) {
    const auto ref = oracle::closure(dense_rows(code), 2, code.length());
    std::set<std::uint64_t> seen;
    std::size_t visits = 0;
    code.for_each_codeword([&](std::uint64_t w) {
      seen.insert(w);
      ++visits;
    });
    CHECK(visits == ref.size());
    CHECK(seen.size() == ref.size());
    for (const auto& w : ref) CHECK(seen.count(mask_of(w)) == 1);
  }
}

TEST_CASE("membership agrees with the closure") {
  const auto code = reed_muller_code(1, 4);
  const auto ref = oracle::closure(dense_rows(code), 2, 16);
  std::set<std::uint64_t> masks;
  for (const auto& w : ref) masks.insert(mask_of(w));
  for (std::uint64_t w = 0; w < (1u << 16); w += 7) CHECK(code.contains(w) == (masks.count(w) == 1));
}

TEST_CASE("Reed-Muller parameters") {
  CHECK(reed_muller_code(1, 4).dimension() == 5);
  CHECK(min_hamming_weight(reed_muller_code(1, 4)) == 8);
  CHECK(reed_muller_code(2, 4).dimension() == 11);
  CHECK(min_hamming_weight(reed_muller_code(2, 4)) == 4);
  CHECK(reed_muller_code(0, 3).dimension() == 1);
}

TEST_CASE("builder names and errors") {
  CHECK(build_binary_code("extended_hamming_8").dimension() == 4);
  CHECK(build_binary_code("reed_muller(1,3)").dimension() == 4);
  CHECK(build_binary_code("even_weight(6)").dimension() == 5);
  CHECK_THROWS_AS(build_binary_code("hamming(7)"), ParameterError);
  CHECK_THROWS_AS(BinaryLinearCode("dup", 4, {0b0011, 0b0011}), ParameterError);
  CHECK_THROWS_AS(min_hamming_weight(BinaryLinearCode("zero", 4, {})), ParameterError);
  CHECK_THROWS_AS(weight_distribution(even_weight_code(40)), CapacityError);
}

}
