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
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "latdel/codes_gf2.hpp"
#include "latdel/codes_z4.hpp"

namespace latdel {

using IntVector = std::vector<std::int64_t>;
using IntMatrix = std::vector<IntVector>;

/// A(C) = { x in Z^n : x mod m in C } for a binary (m = 2) or
/// quaternary (m = 4) linear code C.
class ConstructionALattice {
 public:
  explicit ConstructionALattice(BinaryLinearCode code);
  explicit ConstructionALattice(Z4LinearCode code);

  int modulus() const noexcept { return modulus_; }
  std::size_t dimension() const;
  const std::string& name() const;
  const std::variant<BinaryLinearCode, Z4LinearCode>& code() const noexcept { return code_; }

  /// ParameterError on dimension mismatch.
  bool contains(std::span<const std::int64_t> x) const;

 private:
  std::variant<BinaryLinearCode, Z4LinearCode> code_;
  int modulus_;
};

/// min(d', m) with d' the minimum Lee distance of the base code; m for the
/// zero code.
int min_distance(const ConstructionALattice& lattice);

/// Upper-triangular generator of A(K_n): all-ones first row, 2 on the
/// diagonal and in the last column for rows 2..n-1, 4 in the corner.
/// Generates A(K_n) for even n.
IntMatrix klemm_generator_matrix(std::size_t n);

/// Integer-span membership for a square upper-triangular basis with nonzero
/// diagonal (rows are basis vectors).
bool in_triangular_span(const IntMatrix& basis, std::span<const std::int64_t> x);

/// Whether x lies in 2 D_n (all even, even half-sum) or 1 + 2 D_n.
bool in_klemm_cosets(std::span<const std::int64_t> x);

/// Compares A(K_n) membership with the two-coset description on every
/// point of the box [lo, hi]^n. The description holds for even n.
bool coset_structure_check(std::size_t n, std::int64_t lo, std::int64_t hi);

}  // namespace latdel
