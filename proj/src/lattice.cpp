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

#include "latdel/lattice.hpp"

#include <algorithm>

#include "latdel/error.hpp"

namespace latdel {
namespace {

std::int64_t floor_mod(std::int64_t v, std::int64_t m) { return ((v % m) + m) % m; }

}  // namespace

ConstructionALattice::ConstructionALattice(BinaryLinearCode code)
    : code_(std::move(code)), modulus_(2) {}

ConstructionALattice::ConstructionALattice(Z4LinearCode code)
    : code_(std::move(code)), modulus_(4) {}

std::size_t ConstructionALattice::dimension() const {
  return std::visit([](const auto& c) { return c.length(); }, code_);
}

const std::string& ConstructionALattice::name() const {
  return std::visit([](const auto& c) -> const std::string& { return c.name(); }, code_);
}

bool ConstructionALattice::contains(std::span<const std::int64_t> x) const {
  if (x.size() != dimension()) throw ParameterError("lattice membership: dimension mismatch");
  if (const auto* bin = std::get_if<BinaryLinearCode>(&code_)) {
    BinaryWordMask word = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (floor_mod(x[i], 2)) word |= BinaryWordMask{1} << i;
    }
    return bin->contains(word);
  }
  std::vector<int> symbols(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) symbols[i] = static_cast<int>(floor_mod(x[i], 4));
  return std::get<Z4LinearCode>(code_).contains(symbols);
}

int min_distance(const ConstructionALattice& lattice) {
  const int m = lattice.modulus();
  return std::visit(
      [m](const auto& code) {
        using T = std::decay_t<decltype(code)>;
        if constexpr (std::is_same_v<T, BinaryLinearCode>) {
          // Lee weight equals Hamming weight for m = 2.
          if (code.dimension() == 0) return m;
          return std::min(static_cast<int>(min_hamming_weight(code)), m);
        } else {
          if (code.log2_size() == 0) return m;
          return std::min(min_lee_distance(code), m);
        }
      },
      lattice.code());
}

IntMatrix klemm_generator_matrix(std::size_t n) {
  if (n < 2) throw ParameterError("klemm_generator_matrix needs n >= 2");
  IntMatrix g(n, IntVector(n, 0));
  std::fill(g[0].begin(), g[0].end(), 1);
  for (std::size_t i = 1; i + 1 < n; ++i) {
    g[i][i] = 2;
    g[i][n - 1] = 2;
  }
  g[n - 1][n - 1] = 4;
  return g;
}

bool in_triangular_span(const IntMatrix& basis, std::span<const std::int64_t> x) {
  const std::size_t n = basis.size();
  if (x.size() != n) throw ParameterError("span membership: dimension mismatch");
  // Coordinate k only sees rows 0..k, so coefficients are forced in order.
  IntVector coeff(n, 0);
  for (std::size_t k = 0; k < n; ++k) {
    std::int64_t residual = x[k];
    for (std::size_t j = 0; j < k; ++j) residual -= coeff[j] * basis[j][k];
    const std::int64_t diag = basis[k][k];
    if (diag == 0) throw ParameterError("basis is not triangular with nonzero diagonal");
    if (residual % diag != 0) return false;
    coeff[k] = residual / diag;
  }
  return true;
}

bool in_klemm_cosets(std::span<const std::int64_t> x) {
  const bool first_odd = floor_mod(x[0], 2) == 1;
  std::int64_t half_sum = 0;
  for (auto v : x) {
    if ((floor_mod(v, 2) == 1) != first_odd) return false;
    half_sum += (v - (first_odd ? 1 : 0)) / 2;
  }
  return floor_mod(half_sum, 2) == 0;
}

bool coset_structure_check(std::size_t n, std::int64_t lo, std::int64_t hi) {
  if (n < 2 || n > 8 || lo > hi) throw ParameterError("coset_structure_check needs 2 <= n <= 8");
  const ConstructionALattice lattice(klemm_code(n));
  IntVector x(n, lo);
  for (;;) {
    if (lattice.contains(x) != in_klemm_cosets(x)) return false;
    std::size_t i = 0;
    while (i < n && x[i] == hi) x[i++] = lo;
    if (i == n) return true;
    ++x[i];
  }
}

}  // namespace latdel
