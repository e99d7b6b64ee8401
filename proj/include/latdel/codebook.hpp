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
#include <iosfwd>
#include <vector>

#include "latdel/bigint.hpp"
#include "latdel/lattice.hpp"

namespace latdel {

/// C(n, d, N, r): the points of A(K_n) with all coordinates >= r and
/// coordinate sum N. Minimum distance is 4 (inherited from the lattice).
struct Codebook {
  std::int64_t n = 0;
  std::int64_t d = 4;
  std::int64_t N = 0;
  std::int64_t r = 0;
  std::vector<IntVector> words;  // lexicographically sorted
  /// visited_nodes[i - 1] is the number of nodes expanded at search level i.
  /// Empty for codebooks read back from a file.
  std::vector<std::uint64_t> visited_nodes;

  std::uint64_t nodes_at_level(std::size_t level) const { return visited_nodes.at(level - 1); }
};

/// Depth-first search over the generator coordinates x_1..x_n of A(K_n),
/// pruned by the per-level windows [l_i, u_i]. Level n is a feasibility
/// check: x_n is forced by the sum constraint. Infeasible parameters yield an
/// empty codebook. ParameterError unless n >= 2 and r >= 1.
Codebook generate(std::int64_t n, std::int64_t N, std::int64_t r);

/// The same search without storing codewords; returns per-level node counts.
std::vector<std::uint64_t> count_search_nodes(std::int64_t n, std::int64_t N, std::int64_t r);

/// (N - nr + 1) * floor((N - nr + 2) / 2)^(level - 1). For n = 8, r = 1
/// this is (N - 7)((N - 6)/2)^(level - 1), exact when N is even.
BigInt naive_node_bound(std::int64_t n, std::int64_t N, std::int64_t r, std::int64_t level);

/// All vectors with entries >= r summing to N, lexicographic order.
std::vector<IntVector> ambient_points(std::int64_t n, std::int64_t N, std::int64_t r);

inline constexpr std::size_t kMaxPackingCandidates = 512;

/// Exact A(n, d, N, r) by maximum-clique search on the "distance >= d"
/// graph over ambient_points. CapacityError above kMaxPackingCandidates.
std::size_t exact_packing_number(std::int64_t n, std::int64_t N, std::int64_t r, std::int64_t d);

/// Text format: "# n=<n> d=<d> N=<N> r=<r> count=<k>" then one
/// space-separated codeword per line.
void write_codebook(std::ostream& out, const Codebook& book);
/// ParameterError on a malformed header or codeword line.
Codebook read_codebook(std::istream& in);

}  // namespace latdel
