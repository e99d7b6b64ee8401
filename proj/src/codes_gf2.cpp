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

#include "latdel/codes_gf2.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <limits>

#include "latdel/error.hpp"

namespace latdel {
namespace {

BinaryWordMask all_ones(std::size_t n) {
  return n == 64 ? ~BinaryWordMask{0} : (BinaryWordMask{1} << n) - 1;
}

// Parses "name(a,b,...)" into its integer arguments.
std::vector<std::size_t> parse_args(std::string_view text, std::string_view head) {
  if (text.size() < head.size() + 2 || text.substr(0, head.size()) != head ||
      text[head.size()] != '(' || text.back() != ')') {
    throw ParameterError("malformed code name: " + std::string(text));
  }
  std::vector<std::size_t> args;
  std::string_view body = text.substr(head.size() + 1, text.size() - head.size() - 2);
  while (!body.empty()) {
    const auto comma = body.find(',');
    std::string_view item = body.substr(0, comma);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (ec != std::errc{} || ptr != item.data() + item.size()) {
      throw ParameterError("bad integer argument in: " + std::string(text));
    }
    args.push_back(value);
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  return args;
}

}  // namespace

BinaryLinearCode::BinaryLinearCode(std::string name, std::size_t length,
                                   std::vector<BinaryWordMask> rows)
    : name_(std::move(name)), length_(length), rows_(std::move(rows)) {
  if (length_ == 0 || length_ > kMaxBinaryLength) {
    throw ParameterError("binary code length must be in [1, 64]");
  }
  if (rows_.size() > length_) throw ParameterError("more generator rows than coordinates");
  const BinaryWordMask mask = all_ones(length_);
  for (auto row : rows_) {
    if (row & ~mask) throw ParameterError("generator row exceeds code length");
  }
  // Gaussian elimination, keeping a fully reduced echelon basis.
  for (auto row : rows_) {
    for (std::size_t i = 0; i < echelon_.size(); ++i) {
      if (row >> pivots_[i] & 1) row ^= echelon_[i];
    }
    if (row == 0) throw ParameterError("generator rows of " + name_ + " are dependent");
    const int pivot = std::countr_zero(row);
    for (auto& e : echelon_) {
      if (e >> pivot & 1) e ^= row;
    }
    echelon_.push_back(row);
    pivots_.push_back(pivot);
  }
}

std::vector<std::uint8_t> BinaryLinearCode::row(std::size_t i) const {
  std::vector<std::uint8_t> out(length_);
  for (std::size_t j = 0; j < length_; ++j) out[j] = rows_.at(i) >> j & 1;
  return out;
}

bool BinaryLinearCode::contains(BinaryWordMask word) const {
  if (word & ~all_ones(length_)) return false;
  for (std::size_t i = 0; i < echelon_.size(); ++i) {
    if (word >> pivots_[i] & 1) word ^= echelon_[i];
  }
  return word == 0;
}

void BinaryLinearCode::check_enumerable() const {
  if (rows_.size() > kMaxEnumerationDimension) {
    throw CapacityError("dimension " + std::to_string(rows_.size()) + " of " + name_ +
                        " is too large to enumerate");
  }
}

BinaryLinearCode repetition_code(std::size_t s) {
  if (s == 0 || s > kMaxBinaryLength) throw ParameterError("repetition length out of range");
  return BinaryLinearCode("repetition(" + std::to_string(s) + ")", s, {all_ones(s)});
}

BinaryLinearCode even_weight_code(std::size_t s) {
  if (s == 0 || s > kMaxBinaryLength) throw ParameterError("even-weight length out of range");
  std::vector<BinaryWordMask> rows;
  for (std::size_t i = 0; i + 1 < s; ++i) rows.push_back(BinaryWordMask{3} << i);
  return BinaryLinearCode("even_weight(" + std::to_string(s) + ")", s, std::move(rows));
}

BinaryLinearCode reed_muller_code(std::size_t k, std::size_t m) {
  if (m > 6 || k > m) throw ParameterError("reed_muller requires 0 <= k <= m <= 6");
  const std::size_t n = std::size_t{1} << m;
  // Monomials as variable subsets, ordered by degree then lexicographically.
  std::vector<unsigned> monomials;
  for (std::size_t deg = 0; deg <= k; ++deg) {
    std::vector<unsigned> layer;
    for (unsigned s = 0; s < (1u << m); ++s) {
      if (static_cast<std::size_t>(std::popcount(s)) == deg) layer.push_back(s);
    }
    // Variable v_1 is the most significant coordinate of a point; order
    // subsets so that {1} < {2} < ... and {1,2} < {1,3} < ...
    std::sort(layer.begin(), layer.end(), [m](unsigned a, unsigned b) {
      for (std::size_t v = 0; v < m; ++v) {
        const bool in_a = a >> (m - 1 - v) & 1;
        const bool in_b = b >> (m - 1 - v) & 1;
        if (in_a != in_b) return in_a;
      }
      return false;
    });
    monomials.insert(monomials.end(), layer.begin(), layer.end());
  }
  std::vector<BinaryWordMask> rows;
  for (unsigned mono : monomials) {
    BinaryWordMask row = 0;
    for (std::size_t point = 0; point < n; ++point) {
      // Monomial is 1 iff every variable in it is 1 at this point.
      if ((point & mono) == mono) row |= BinaryWordMask{1} << point;
    }
    rows.push_back(row);
  }
  return BinaryLinearCode("reed_muller(" + std::to_string(k) + "," + std::to_string(m) + ")",
                          n, std::move(rows));
}

BinaryLinearCode extended_hamming_8() {
  auto rm = reed_muller_code(1, 3);
  return BinaryLinearCode("extended_hamming_8", rm.length(), rm.rows());
}

BinaryLinearCode build_binary_code(std::string_view name) {
  if (name == "extended_hamming_8" || name == "H8") return extended_hamming_8();
  if (name.starts_with("reed_muller")) {
    auto args = parse_args(name, "reed_muller");
    if (args.size() != 2) throw ParameterError("reed_muller takes (k,m)");
    return reed_muller_code(args[0], args[1]);
  }
  if (name.starts_with("repetition")) {
    auto args = parse_args(name, "repetition");
    if (args.size() != 1) throw ParameterError("repetition takes (s)");
    return repetition_code(args[0]);
  }
  if (name.starts_with("even_weight")) {
    auto args = parse_args(name, "even_weight");
    if (args.size() != 1) throw ParameterError("even_weight takes (s)");
    return even_weight_code(args[0]);
  }
  throw ParameterError("unknown binary code: " + std::string(name));
}

std::uint64_t WeightDistribution::total() const {
  std::uint64_t sum = 0;
  for (auto c : counts) sum += c;
  return sum;
}

WeightDistribution weight_distribution(const BinaryLinearCode& code) {
  WeightDistribution dist{std::vector<std::uint64_t>(code.length() + 1, 0)};
  code.for_each_codeword([&](BinaryWordMask w) { ++dist.counts[std::popcount(w)]; });
  return dist;
}

std::size_t min_hamming_weight(const BinaryLinearCode& code) {
  if (code.dimension() == 0) throw ParameterError("minimum weight of the zero code is undefined");
  const auto dist = weight_distribution(code);
  for (std::size_t w = 1; w < dist.counts.size(); ++w) {
    if (dist.counts[w] != 0) return w;
  }
  throw ConstructionError("nonzero code without nonzero codewords");
}

}  // namespace latdel
