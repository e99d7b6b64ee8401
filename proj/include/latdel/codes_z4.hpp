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

#include <array>
#include <bit>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "latdel/bigint.hpp"
#include "latdel/codes_gf2.hpp"
#include "latdel/int_series.hpp"

namespace latdel {

/// A word over Z4 of length <= 64, stored as two bit planes: symbol i is
/// (lo_i + 2 hi_i).
struct Z4Word {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;

  friend Z4Word operator+(Z4Word a, Z4Word b) {
    const std::uint64_t carry = a.lo & b.lo;
    return {a.lo ^ b.lo, a.hi ^ b.hi ^ carry};
  }
  friend bool operator==(const Z4Word&, const Z4Word&) = default;

  static Z4Word from_symbols(std::span<const int> symbols);
  std::vector<int> symbols(std::size_t length) const;
  int symbol(std::size_t i) const { return static_cast<int>((lo >> i & 1) | (hi >> i & 1) << 1); }
};

/// (n_0, n_1, n_2, n_3): how many coordinates hold each symbol.
using Composition = std::array<int, 4>;

inline Composition composition_of(const Z4Word& w, std::size_t length) {
  const int n1 = std::popcount(w.lo & ~w.hi);
  const int n2 = std::popcount(~w.lo & w.hi);
  const int n3 = std::popcount(w.lo & w.hi);
  return {static_cast<int>(length) - n1 - n2 - n3, n1, n2, n3};
}

/// A Z4-submodule of Z4^n given in standard form: k1 generator rows of
/// additive order 4 and k2 rows of order 2 (entries in {0, 2}). The rows
/// must be such that every information word yields a distinct codeword,
/// which holds iff the order-4 rows mod 2 together with the order-2 rows
/// halved are independent over GF(2). The constructor checks that.
class Z4LinearCode {
 public:
  Z4LinearCode(std::string name, std::size_t length, std::vector<std::vector<int>> order4_rows,
               std::vector<std::vector<int>> order2_rows);

  const std::string& name() const noexcept { return name_; }
  std::size_t length() const noexcept { return length_; }
  std::size_t order4_count() const noexcept { return order4_.size(); }
  std::size_t order2_count() const noexcept { return order2_.size(); }
  /// log2 |C| = 2 k1 + k2.
  std::size_t log2_size() const noexcept { return 2 * order4_.size() + order2_.size(); }
  BigInt size() const { return BigInt(1) << log2_size(); }

  std::vector<std::vector<int>> order4_rows() const;
  std::vector<std::vector<int>> order2_rows() const;

  bool contains(const Z4Word& word) const;
  bool contains(std::span<const int> symbols) const;

  /// The binary code C mod 2 (spanned by the order-4 rows reduced mod 2).
  BinaryLinearCode reduction_mod2() const;

  /// Visits every codeword once. Each odometer step adds one generator row,
  /// including wrap-around, since order(row) * row == 0.
  template <typename F>
  void for_each_codeword(F&& visit) const {
    check_enumerable();
    const std::size_t k = rows_.size();
    std::vector<int> digit(k, 0);
    Z4Word word{};
    visit(word);
    for (;;) {
      std::size_t j = 0;
      for (; j < k; ++j) {
        word = word + rows_[j];
        if (++digit[j] < orders_[j]) break;
        digit[j] = 0;
      }
      if (j == k) return;
      visit(word);
    }
  }

 private:
  void check_enumerable() const;

  std::string name_;
  std::size_t length_;
  std::vector<Z4Word> order4_;
  std::vector<Z4Word> order2_;
  std::vector<Z4Word> rows_;  // order-4 rows first, then order-2 rows
  std::vector<int> orders_;
  // Membership: mod-2 image basis with combination tracking, and the
  // binary code of halved residues.
  std::vector<std::uint64_t> image_echelon_;
  std::vector<std::uint64_t> image_combo_;
  std::vector<int> image_pivot_;
  std::vector<std::uint64_t> torsion_echelon_;
  std::vector<int> torsion_pivot_;
};

inline constexpr std::size_t kMaxZ4Log2Size = 26;

/// K_s = R_s + 2 P_s with P_s the even-weight code; generator shaped like
/// the lattice generator matrix (all-ones row, then 2(e_i + e_s)).
Z4LinearCode klemm_code(std::size_t s);
/// RM(1,4) + 2 RM(2,4) read into Z4.
Z4LinearCode bw16_code();
/// Extended Hensel lift of the binary Golay code, |C| = 4^12.
Z4LinearCode golay_z4();
/// The zero code of length n.
Z4LinearCode zero_z4_code(std::size_t n);

/// Parses "klemm(s)", "bw16_code", "golay_z4" or "zero(n)".
Z4LinearCode build_z4_code(std::string_view name);

/// Sparse complete weight enumerator: composition -> number of codewords.
struct CompleteWeightEnumerator {
  std::size_t length = 0;
  std::map<Composition, std::uint64_t> terms;

  std::uint64_t total() const;
  std::uint64_t count(const Composition& c) const;
  friend bool operator==(const CompleteWeightEnumerator&,
                         const CompleteWeightEnumerator&) = default;
};

CompleteWeightEnumerator complete_weight_enumerator(const Z4LinearCode& code);

/// Smallest integer >= r congruent to residue mod m.
std::int64_t shift_exponent(std::int64_t residue, std::int64_t modulus, std::int64_t r);

/// Sum over codewords of q^{sum_i s(c_i)}, with s(j) = shift_exponent(j, 4, r).
/// Computed by direct enumeration.
IntSeries shifted_weight_distribution(const Z4LinearCode& code, std::int64_t r);
/// Same polynomial obtained from the cwe by x_j -> q^{s(j)}.
IntSeries shifted_weight_distribution(const CompleteWeightEnumerator& cwe, std::int64_t r);

/// Minimum Lee weight over nonzero codewords; ParameterError for the zero code.
int min_lee_distance(const Z4LinearCode& code);
int min_lee_distance(const CompleteWeightEnumerator& cwe);

inline int lee_weight(const Composition& c) { return c[1] + 2 * c[2] + c[3]; }

/// Polynomials over Z4, coefficient of x^i at index i.
using Z4Polynomial = std::vector<int>;

Z4Polynomial z4_multiply(const Z4Polynomial& a, const Z4Polynomial& b);
/// Quotient and remainder for a monic divisor.
std::pair<Z4Polynomial, Z4Polynomial> z4_divide(const Z4Polynomial& a, const Z4Polynomial& b);

/// x^11 + x^10 + x^6 + x^5 + x^4 + x^2 + 1, a factor of x^23 - 1 over GF(2).
Z4Polynomial binary_golay_generator();

struct GolayLift {
  Z4Polynomial generator;  // g4, monic of degree 11
  Z4Polynomial cofactor;   // h4 with g4 h4 = x^23 - 1 over Z4
};

/// Graeffe-style Hensel lift: g4(x^2) = +-(e(x)^2 - o(x)^2) mod 4 where
/// g2 = e + o splits into even and odd parts. Throws ConstructionError if the
/// lift does not divide x^23 - 1.
GolayLift hensel_lift_golay();

}  // namespace latdel
