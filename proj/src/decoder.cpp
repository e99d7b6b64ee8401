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

#include "latdel/decoder.hpp"

#include <numeric>

#include "latdel/error.hpp"

namespace latdel {
namespace {

bool is_odd(std::int64_t v) { return (v % 2) != 0; }

}  // namespace

const char* to_string(DecodeBranch branch) {
  return branch == DecodeBranch::parity_fix ? "parity_fix" : "projection";
}

IntVector phi_projection(std::span<const std::int64_t> x, std::size_t index) {
  if (index >= x.size()) throw ParameterError("projection index out of range");
  IntVector out(x.begin(), x.end());
  out[index] -= std::accumulate(x.begin(), x.end(), std::int64_t{0});
  return out;
}

NearestPoint nearest_in_An1(std::span<const std::int64_t> x, std::size_t index) {
  const std::int64_t s = std::accumulate(x.begin(), x.end(), std::int64_t{0});
  return {phi_projection(x, index), s < 0 ? -s : s};
}

IntVector coset_representative(std::span<const std::int64_t> received, std::int64_t N) {
  const std::size_t n = received.size();
  if (n < 2) throw ParameterError("coset representative needs n >= 2");
  std::size_t odd = 0;
  for (auto v : received) odd += is_odd(v) ? 1 : 0;
  IntVector a(n, 0);
  if (2 * odd > n) {
    std::fill(a.begin(), a.end(), 1);
    a[n - 1] = N - static_cast<std::int64_t>(n) + 1;
  } else {
    a[0] = N;
  }
  return a;
}

DecodeTrace decode(std::span<const std::int64_t> x, std::int64_t N,
                   std::span<const std::int64_t> coset_rep) {
  const std::size_t n = x.size();
  if (n < 2) throw ParameterError("decode needs n >= 2");
  if (coset_rep.size() != n) throw ParameterError("coset representative has wrong dimension");

  DecodeTrace trace;
  trace.input.assign(x.begin(), x.end());
  trace.coset_rep.assign(coset_rep.begin(), coset_rep.end());

  // Sum of the received vector, n - 1 additions.
  std::int64_t sum = x[0];
  for (std::size_t i = 1; i < n; ++i) {
    sum += x[i];
    ++trace.additions_used;
  }

  if (sum == N - 1) {
    trace.branch = DecodeBranch::parity_fix;
    std::size_t odd = 0;
    for (auto v : x) {
      odd += is_odd(v) ? 1 : 0;
      ++trace.parity_tests_used;
    }
    // The outlier is the unique coordinate in the minority parity class.
    const std::size_t even = n - odd;
    const bool outlier_is_odd = odd == 1 && even > 1;
    const bool outlier_is_even = even == 1 && odd > 1;
    if (!outlier_is_odd && !outlier_is_even) {
      trace.failure_reason = "no unique parity outlier";
      return trace;
    }
    trace.output = trace.input;
    for (std::size_t j = 0; j < n; ++j) {
      if (is_odd(x[j]) == outlier_is_odd) {
        ++trace.output[j];
        ++trace.additions_used;
        trace.projection_index = j;
        break;
      }
    }
    trace.success = true;
    return trace;
  }

  trace.branch = DecodeBranch::projection;
  // X = x - a.
  IntVector shifted(n);
  for (std::size_t i = 0; i < n; ++i) {
    shifted[i] = x[i] - coset_rep[i];
    ++trace.additions_used;
  }
  // s = sum X.
  std::int64_t s = shifted[0];
  for (std::size_t i = 1; i < n; ++i) {
    s += shifted[i];
    ++trace.additions_used;
  }
  // Lines 10-16: first i with phi^(i)(X) all even.
  IntVector candidate;
  for (std::size_t i = 0; i < n; ++i) {
    candidate = shifted;
    candidate[i] -= s;
    ++trace.additions_used;
    ++trace.parity_tests_used;
    bool all_even = true;
    for (auto v : candidate) all_even = all_even && !is_odd(v);
    if (all_even) {
      trace.projection_index = i;
      break;
    }
  }
  if (!trace.projection_index) {
    trace.failure_reason = "no all-even projection";
    return trace;
  }
  // Add the coset representative back.
  trace.output.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    trace.output[i] = candidate[i] + coset_rep[i];
    ++trace.additions_used;
  }
  trace.success = true;
  return trace;
}

DecodeTrace decode(std::span<const std::int64_t> x, std::int64_t N) {
  const auto a = coset_representative(x, N);
  return decode(x, N, a);
}

}  // namespace latdel
