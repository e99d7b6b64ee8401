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

#include "latdel/codebook.hpp"
#include "latdel/decoder.hpp"
#include "latdel/error.hpp"
#include "oracle.hpp"

using namespace latdel;

TEST_SUITE("decoder") {

TEST_CASE("worked example") {
  const IntVector x{3, 2, 1, 1, 1, 1, 1, 1};
  const IntVector a{1, 1, 1, 1, 1, 1, 1, 5};
  const auto t = decode(x, 12, a);
  REQUIRE(t.success);
  CHECK(t.output == IntVector{3, 3, 1, 1, 1, 1, 1, 1});
  CHECK(t.branch == DecodeBranch::parity_fix);
  CHECK(decode(x, 12).output == t.output);
}

TEST_CASE("codewords decode to themselves") {
  for (const auto& c : generate(8, 12, 1).words) {
    const auto t = decode(c, 12);
    CHECK(t.success);
    CHECK(t.output == c);
  }
}

TEST_CASE("every single deletion is corrected") {
  for (std::int64_t N : {16, 20, 24}) {
    const auto book = generate(8, N, 2);
    for (const auto& c : book.words)
      for (std::size_t j = 0; j < c.size(); ++j) {
        IntVector x = c;
        --x[j];
        const auto t = decode(x, N);
        CHECK(t.success);
        CHECK(t.output == c);
        CHECK(t.additions_used <= 5 * 8 - 2);
        CHECK(t.parity_tests_used <= 8);
      }
  }
}

TEST_CASE("nearest point of A_{n-1}") {
  const IntVector x{3, -1, 2, 0};
  const auto p = nearest_in_An1(x, 2);
  std::int64_t s = 0;
  for (auto v : p.point) s += v;
  CHECK(s == 0);
  CHECK(oracle::l1(p.point, x) == p.distance_bound);
  CHECK(p.distance_bound == 4);
  CHECK(phi_projection(x, 0) == IntVector{-1, -1, 2, 0});
  CHECK_THROWS_AS(phi_projection(x, 4), ParameterError);
}

TEST_CASE("coset representative follows the parity majority") {
  CHECK(coset_representative(IntVector{3, 2, 1, 1, 1, 1, 1, 1}, 12) ==
        IntVector{1, 1, 1, 1, 1, 1, 1, 5});
  CHECK(coset_representative(IntVector{2, 2, 2, 2, 2, 2, 2, 5}, 20) ==
        IntVector{20, 0, 0, 0, 0, 0, 0, 0});
}

TEST_CASE("two deletions are reported, not thrown") {
  const auto t = decode(IntVector{3, 2, 1, 2, 2, 2, 2, 2}, 20);
  CHECK_FALSE(t.success);
  CHECK_FALSE(t.failure_reason.empty());
  CHECK(to_string(t.branch) != nullptr);
  CHECK_THROWS_AS(decode(IntVector{1, 1}, 4, IntVector{1, 1, 2}), ParameterError);
}

TEST_CASE("instrumented counts on the worked example") {
  const auto t = decode(IntVector{3, 2, 1, 1, 1, 1, 1, 1}, 12, IntVector{1, 1, 1, 1, 1, 1, 1, 5});
  const auto ops = count_operations(t);
  CHECK(ops.additions <= 38);
  CHECK(ops.parity_tests <= 8);
  CHECK(ops.additions >= 7);
}

}
