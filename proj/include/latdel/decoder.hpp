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
#include <string>

#include "latdel/lattice.hpp"

namespace latdel {

enum class DecodeBranch { parity_fix, projection };

const char* to_string(DecodeBranch branch);

/// Record of one run of the nearest-codeword decoder for codes carved from
/// A(K_n). Counters follow the line-by-line accounting of the algorithm:
/// at most 5n - 2 additions and n parity tests.
struct DecodeTrace {
  IntVector input;
  IntVector output;
  IntVector coset_rep;
  DecodeBranch branch = DecodeBranch::projection;
  std::optional<std::size_t> projection_index;  // 0-based coordinate
  std::size_t additions_used = 0;
  std::size_t parity_tests_used = 0;
  bool success = false;
  std::string failure_reason;
};

/// Copy of x with sum(x) subtracted from coordinate `index` (0-based); the
/// result has zero coordinate sum, i.e. lies in A_{n-1}.
IntVector phi_projection(std::span<const std::int64_t> x, std::size_t index);

struct NearestPoint {
  IntVector point;
  std::int64_t distance_bound = 0;  // |sum x|
};

/// A closest point of A_{n-1} to x: phi_projection(x, index), at L1
/// distance exactly |sum x|, which is also a lower bound for every point of
/// A_{n-1}.
NearestPoint nearest_in_An1(std::span<const std::int64_t> x, std::size_t index = 0);

/// (1, ..., 1, N - n + 1) when most coordinates of `received` are odd,
/// (N, 0, ..., 0) otherwise.
IntVector coset_representative(std::span<const std::int64_t> received, std::int64_t N);

/// Decodes a received run vector against C(n, 4, N, r). A sum of N - 1 takes
/// the parity-fix branch; anything else subtracts `coset_rep`, looks for the
/// first all-even projection and adds the representative back. Failures are
/// reported in the trace, never thrown.
DecodeTrace decode(std::span<const std::int64_t> x, std::int64_t N,
                   std::span<const std::int64_t> coset_rep);
/// As above with coset_representative(x, N).
DecodeTrace decode(std::span<const std::int64_t> x, std::int64_t N);

struct OperationCounts {
  std::size_t additions = 0;
  std::size_t parity_tests = 0;
};

inline OperationCounts count_operations(const DecodeTrace& trace) {
  return {trace.additions_used, trace.parity_tests_used};
}

}  // namespace latdel
