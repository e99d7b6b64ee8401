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

#include "latdel/codes_z4.hpp"

#include <algorithm>
#include <charconv>
#include <limits>

#include "latdel/error.hpp"

namespace latdel {
namespace {

int mod4(int v) { return ((v % 4) + 4) % 4; }

std::uint64_t bit(std::size_t i) { return std::uint64_t{1} << i; }

// Reduces `v` against an echelon basis; returns the residue and, if
// `combo` is given, which basis rows were used.
std::uint64_t reduce(std::uint64_t v, const std::vector<std::uint64_t>& echelon,
                     const std::vector<int>& pivots, const std::vector<std::uint64_t>* combos,
                     std::uint64_t* combo) {
  for (std::size_t i = 0; i < echelon.size(); ++i) {
    if (v >> pivots[i] & 1) {
      v ^= echelon[i];
      if (combo) *combo ^= (*combos)[i];
    }
  }
  return v;
}

// Inserts v into a fully reduced echelon basis; false if dependent.
bool insert(std::uint64_t v, std::uint64_t combo, std::vector<std::uint64_t>& echelon,
            std::vector<int>& pivots, std::vector<std::uint64_t>* combos) {
  for (std::size_t i = 0; i < echelon.size(); ++i) {
    if (v >> pivots[i] & 1) {
      v ^= echelon[i];
      if (combos) combo ^= (*combos)[i];
    }
  }
  if (v == 0) return false;
  const int p = std::countr_zero(v);
  for (std::size_t i = 0; i < echelon.size(); ++i) {
    if (echelon[i] >> p & 1) {
      echelon[i] ^= v;
      if (combos) (*combos)[i] ^= combo;
    }
  }
  echelon.push_back(v);
  pivots.push_back(p);
  if (combos) combos->push_back(combo);
  return true;
}

std::size_t parse_single_arg(std::string_view text, std::string_view head) {
  if (text.size() < head.size() + 3 || text.substr(0, head.size()) != head ||
      text[head.size()] != '(' || text.back() != ')') {
    throw ParameterError("malformed code name: " + std::string(text));
  }
  std::string_view body = text.substr(head.size() + 1, text.size() - head.size() - 2);
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), value);
  if (ec != std::errc{} || ptr != body.data() + body.size()) {
    throw ParameterError("bad integer argument in: " + std::string(text));
  }
  return value;
}

std::vector<int> unit_pair(std::size_t n, std::size_t i, std::size_t j, int value) {
  std::vector<int> row(n, 0);
  row[i] = value;
  row[j] = value;
  return row;
}

}  // namespace

Z4Word Z4Word::from_symbols(std::span<const int> symbols) {
  if (symbols.size() > 64) throw ParameterError("Z4 words are limited to length 64");
  Z4Word w;
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    const int s = mod4(symbols[i]);
    if (s & 1) w.lo |= bit(i);
    if (s & 2) w.hi |= bit(i);
  }
  return w;
}

std::vector<int> Z4Word::symbols(std::size_t length) const {
  std::vector<int> out(length);
  for (std::size_t i = 0; i < length; ++i) out[i] = symbol(i);
  return out;
}

Z4LinearCode::Z4LinearCode(std::string name, std::size_t length,
                           std::vector<std::vector<int>> order4_rows,
                           std::vector<std::vector<int>> order2_rows)
    : name_(std::move(name)), length_(length) {
  if (length_ == 0 || length_ > 64) throw ParameterError("Z4 code length must be in [1, 64]");
  for (const auto& row : order4_rows) {
    if (row.size() != length_) throw ParameterError("generator row length mismatch in " + name_);
    order4_.push_back(Z4Word::from_symbols(row));
  }
  for (const auto& row : order2_rows) {
    if (row.size() != length_) throw ParameterError("generator row length mismatch in " + name_);
    for (int v : row) {
      if (mod4(v) % 2 != 0) throw ParameterError("order-2 row with odd entry in " + name_);
    }
    order2_.push_back(Z4Word::from_symbols(row));
  }
  // Independence of image (order-4 rows mod 2), tracking combinations.
  for (std::size_t i = 0; i < order4_.size(); ++i) {
    if (!insert(order4_[i].lo, bit(i), image_echelon_, image_pivot_, &image_combo_)) {
      throw ParameterError("order-4 rows of " + name_ + " are dependent mod 2");
    }
  }
  // Torsion part: order-4 rows mod 2 together with halved order-2 rows.
  for (const auto& r : order4_) insert(r.lo, 0, torsion_echelon_, torsion_pivot_, nullptr);
  for (const auto& r : order2_) {
    if (!insert(r.hi, 0, torsion_echelon_, torsion_pivot_, nullptr)) {
      throw ParameterError("order-2 rows of " + name_ + " are not independent");
    }
  }
  rows_ = order4_;
  rows_.insert(rows_.end(), order2_.begin(), order2_.end());
  orders_.assign(order4_.size(), 4);
  orders_.insert(orders_.end(), order2_.size(), 2);
}

std::vector<std::vector<int>> Z4LinearCode::order4_rows() const {
  std::vector<std::vector<int>> out;
  for (const auto& r : order4_) out.push_back(r.symbols(length_));
  return out;
}

std::vector<std::vector<int>> Z4LinearCode::order2_rows() const {
  std::vector<std::vector<int>> out;
  for (const auto& r : order2_) out.push_back(r.symbols(length_));
  return out;
}

bool Z4LinearCode::contains(const Z4Word& word) const {
  const std::uint64_t mask = length_ == 64 ? ~std::uint64_t{0} : bit(length_) - 1;
  if ((word.lo | word.hi) & ~mask) return false;
  std::uint64_t combo = 0;
  if (reduce(word.lo, image_echelon_, image_pivot_, &image_combo_, &combo) != 0) return false;
  // Subtract the 0/1 lift of the mod-2 preimage; the residue is 2 * v.
  Z4Word residue = word;
  for (std::size_t i = 0; i < order4_.size(); ++i) {
    if (combo >> i & 1) {
      // residue -= row  ==  residue + 3 * row
      const Z4Word r = order4_[i];
      residue = residue + r + r + r;
    }
  }
  if (residue.lo != 0) return false;
  return reduce(residue.hi, torsion_echelon_, torsion_pivot_, nullptr, nullptr) == 0;
}

bool Z4LinearCode::contains(std::span<const int> symbols) const {
  if (symbols.size() != length_) throw ParameterError("dimension mismatch in membership test");
  return contains(Z4Word::from_symbols(symbols));
}

BinaryLinearCode Z4LinearCode::reduction_mod2() const {
  std::vector<BinaryWordMask> rows;
  for (const auto& r : order4_) rows.push_back(r.lo);
  return BinaryLinearCode(name_ + " mod 2", length_, std::move(rows));
}

void Z4LinearCode::check_enumerable() const {
  if (log2_size() > kMaxZ4Log2Size) {
    throw CapacityError("code " + name_ + " has 2^" + std::to_string(log2_size()) +
                        " codewords, beyond the enumeration limit");
  }
}

Z4LinearCode klemm_code(std::size_t s) {
  if (s < 2 || s > 64) throw ParameterError("klemm(s) requires 2 <= s <= 64");
  std::vector<std::vector<int>> order4{std::vector<int>(s, 1)};
  std::vector<std::vector<int>> order2;
  // 2(e_i + e_last) for the inner coordinates; for odd s the all-ones word is
  // outside P_s so e_0 + e_last is needed as well.
  if (s % 2 == 1) order2.push_back(unit_pair(s, 0, s - 1, 2));
  for (std::size_t i = 1; i + 1 < s; ++i) order2.push_back(unit_pair(s, i, s - 1, 2));
  return Z4LinearCode("klemm(" + std::to_string(s) + ")", s, std::move(order4), std::move(order2));
}

Z4LinearCode bw16_code() {
  const auto rm1 = reed_muller_code(1, 4);
  const auto rm2 = reed_muller_code(2, 4);
  std::vector<std::vector<int>> order4;
  std::vector<std::vector<int>> order2;
  for (std::size_t i = 0; i < rm1.dimension(); ++i) {
    auto row = rm1.row(i);
    order4.emplace_back(row.begin(), row.end());
  }
  // RM(2,4) rows beyond RM(1,4) are the degree-2 monomials.
  for (std::size_t i = rm1.dimension(); i < rm2.dimension(); ++i) {
    std::vector<int> row;
    for (auto b : rm2.row(i)) row.push_back(2 * b);
    order2.push_back(std::move(row));
  }
  return Z4LinearCode("bw16_code", 16, std::move(order4), std::move(order2));
}

Z4LinearCode golay_z4() {
  const auto lift = hensel_lift_golay();
  constexpr std::size_t kCyclicLength = 23;
  std::vector<std::vector<int>> rows;
  for (std::size_t shift = 0; shift < 12; ++shift) {
    std::vector<int> row(kCyclicLength + 1, 0);
    for (std::size_t j = 0; j < lift.generator.size(); ++j) row[shift + j] = lift.generator[j];
    int sum = 0;
    for (std::size_t j = 0; j < kCyclicLength; ++j) sum += row[j];
    row[kCyclicLength] = mod4(-sum);  // c_inf = -sum c_i
    rows.push_back(std::move(row));
  }
  return Z4LinearCode("golay_z4", kCyclicLength + 1, std::move(rows), {});
}

Z4LinearCode zero_z4_code(std::size_t n) {
  return Z4LinearCode("zero(" + std::to_string(n) + ")", n, {}, {});
}

Z4LinearCode build_z4_code(std::string_view name) {
  if (name == "bw16_code" || name == "BW16") return bw16_code();
  if (name == "golay_z4" || name == "QR24") return golay_z4();
  if (name.starts_with("klemm")) return klemm_code(parse_single_arg(name, "klemm"));
  if (name.starts_with("zero")) return zero_z4_code(parse_single_arg(name, "zero"));
  throw ParameterError("unknown Z4 code: " + std::string(name));
}

std::uint64_t CompleteWeightEnumerator::total() const {
  std::uint64_t sum = 0;
  for (const auto& [comp, count] : terms) sum += count;
  return sum;
}

std::uint64_t CompleteWeightEnumerator::count(const Composition& c) const {
  auto it = terms.find(c);
  return it == terms.end() ? 0 : it->second;
}

CompleteWeightEnumerator complete_weight_enumerator(const Z4LinearCode& code) {
  const std::size_t n = code.length();
  const std::size_t side = n + 1;
  // Dense (n1, n2, n3) table; n0 is implied.
  std::vector<std::uint64_t> table(side * side * side, 0);
  code.for_each_codeword([&](const Z4Word& w) {
    const auto n1 = static_cast<std::size_t>(std::popcount(w.lo & ~w.hi));
    const auto n2 = static_cast<std::size_t>(std::popcount(~w.lo & w.hi));
    const auto n3 = static_cast<std::size_t>(std::popcount(w.lo & w.hi));
    ++table[(n1 * side + n2) * side + n3];
  });
  CompleteWeightEnumerator cwe{n, {}};
  for (std::size_t n1 = 0; n1 < side; ++n1) {
    for (std::size_t n2 = 0; n1 + n2 < side; ++n2) {
      for (std::size_t n3 = 0; n1 + n2 + n3 < side; ++n3) {
        const auto count = table[(n1 * side + n2) * side + n3];
        if (count == 0) continue;
        cwe.terms[{static_cast<int>(n - n1 - n2 - n3), static_cast<int>(n1),
                   static_cast<int>(n2), static_cast<int>(n3)}] = count;
      }
    }
  }
  return cwe;
}

std::int64_t shift_exponent(std::int64_t residue, std::int64_t modulus, std::int64_t r) {
  const std::int64_t delta = ((residue - r) % modulus + modulus) % modulus;
  return r + delta;
}

IntSeries shifted_weight_distribution(const Z4LinearCode& code, std::int64_t r) {
  if (r < 0) throw ParameterError("shift r must be nonnegative");
  const std::size_t n = code.length();
  std::array<std::int64_t, 4> s{};
  for (int j = 0; j < 4; ++j) s[j] = shift_exponent(j, 4, r);
  const auto degree = static_cast<std::size_t>(static_cast<std::int64_t>(n) * (r + 3));
  std::vector<std::uint64_t> counts(degree + 1, 0);
  code.for_each_codeword([&](const Z4Word& w) {
    const auto c = composition_of(w, n);
    const auto e = c[0] * s[0] + c[1] * s[1] + c[2] * s[2] + c[3] * s[3];
    ++counts[static_cast<std::size_t>(e)];
  });
  std::vector<BigInt> coeffs(counts.begin(), counts.end());
  return IntSeries(std::move(coeffs));
}

IntSeries shifted_weight_distribution(const CompleteWeightEnumerator& cwe, std::int64_t r) {
  if (r < 0) throw ParameterError("shift r must be nonnegative");
  std::array<std::int64_t, 4> s{};
  for (int j = 0; j < 4; ++j) s[j] = shift_exponent(j, 4, r);
  const auto degree =
      static_cast<std::size_t>(static_cast<std::int64_t>(cwe.length) * (r + 3));
  IntSeries poly(degree);
  for (const auto& [c, count] : cwe.terms) {
    const auto e = c[0] * s[0] + c[1] * s[1] + c[2] * s[2] + c[3] * s[3];
    poly[static_cast<std::size_t>(e)] += count;
  }
  return poly;
}

int min_lee_distance(const CompleteWeightEnumerator& cwe) {
  int best = std::numeric_limits<int>::max();
  for (const auto& [c, count] : cwe.terms) {
    const int w = lee_weight(c);
    if (w > 0) best = std::min(best, w);
  }
  if (best == std::numeric_limits<int>::max()) {
    throw ParameterError("minimum Lee distance of the zero code is undefined");
  }
  return best;
}

int min_lee_distance(const Z4LinearCode& code) {
  if (code.log2_size() == 0) {
    throw ParameterError("minimum Lee distance of the zero code is undefined");
  }
  return min_lee_distance(complete_weight_enumerator(code));
}

Z4Polynomial z4_multiply(const Z4Polynomial& a, const Z4Polynomial& b) {
  if (a.empty() || b.empty()) return {};
  Z4Polynomial out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = mod4(out[i + j] + a[i] * b[j]);
  }
  return out;
}

std::pair<Z4Polynomial, Z4Polynomial> z4_divide(const Z4Polynomial& a, const Z4Polynomial& b) {
  if (b.empty() || mod4(b.back()) != 1) throw ParameterError("z4_divide needs a monic divisor");
  Z4Polynomial rem(a.size());
  std::transform(a.begin(), a.end(), rem.begin(), mod4);
  if (rem.size() < b.size()) return {{}, rem};
  Z4Polynomial quot(rem.size() - b.size() + 1, 0);
  for (std::size_t k = quot.size(); k-- > 0;) {
    const int lead = rem[k + b.size() - 1];
    quot[k] = lead;
    for (std::size_t j = 0; j < b.size(); ++j) rem[k + j] = mod4(rem[k + j] - lead * b[j]);
  }
  rem.resize(b.size() - 1);
  while (!rem.empty() && rem.back() == 0) rem.pop_back();
  return {quot, rem};
}

Z4Polynomial binary_golay_generator() {
  Z4Polynomial g(12, 0);
  for (int e : {0, 2, 4, 5, 6, 10, 11}) g[static_cast<std::size_t>(e)] = 1;
  return g;
}

GolayLift hensel_lift_golay() {
  const Z4Polynomial g2 = binary_golay_generator();
  Z4Polynomial x23_minus_1(24, 0);
  x23_minus_1[0] = 3;
  x23_minus_1[23] = 1;

  Z4Polynomial even(g2.size(), 0);
  Z4Polynomial odd(g2.size(), 0);
  for (std::size_t i = 0; i < g2.size(); ++i) (i % 2 == 0 ? even : odd)[i] = g2[i];
  const auto e2 = z4_multiply(even, even);
  const auto o2 = z4_multiply(odd, odd);
  // g2 has odd degree, so o^2 - e^2 is the monic choice.
  Z4Polynomial g4(g2.size(), 0);
  for (std::size_t i = 0; i < e2.size(); ++i) {
    const int v = mod4(o2[i] - e2[i]);
    if (i % 2 != 0) {
      if (v != 0) throw ConstructionError("Graeffe square has an odd-degree term");
      continue;
    }
    g4[i / 2] = v;
  }
  if (g4.back() != 1) throw ConstructionError("Hensel lift is not monic");
  for (std::size_t i = 0; i < g4.size(); ++i) {
    if (g4[i] % 2 != g2[i]) throw ConstructionError("Hensel lift does not reduce to g2");
  }
  auto [h4, rem] = z4_divide(x23_minus_1, g4);
  if (!rem.empty()) throw ConstructionError("Hensel lift does not divide x^23 - 1 over Z4");
  return {g4, h4};
}

}  // namespace latdel
