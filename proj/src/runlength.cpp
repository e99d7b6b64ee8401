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

#include "latdel/runlength.hpp"

#include <algorithm>

#include "latdel/error.hpp"

namespace latdel {

BinaryWord::BinaryWord(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  for (auto b : bits_) {
    if (b > 1) throw ParameterError("binary word entries must be 0 or 1");
  }
}

BinaryWord BinaryWord::parse(std::string_view text) {
  std::vector<std::uint8_t> bits;
  bits.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') throw ParameterError("not a binary string: " + std::string(text));
    bits.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return BinaryWord(std::move(bits));
}

std::string BinaryWord::str() const {
  std::string out;
  out.reserve(bits_.size());
  for (auto b : bits_) out.push_back(static_cast<char>('0' + b));
  return out;
}

RunVector::RunVector(std::vector<std::int64_t> runs) : runs_(std::move(runs)) {
  if (runs_.empty() || runs_.size() % 2 != 0) {
    throw DomainError("run vector needs a positive even number of runs");
  }
  for (auto r : runs_) {
    if (r < 1) throw DomainError("run lengths must be positive");
    total_ += r;
  }
}

std::int64_t RunVector::min_run() const { return *std::min_element(runs_.begin(), runs_.end()); }

std::string RunVector::str() const {
  std::string out;
  for (std::size_t i = 0; i < runs_.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(runs_[i]);
  }
  return out;
}

std::vector<std::int64_t> raw_runs(const BinaryWord& word) {
  std::vector<std::int64_t> runs;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i == 0 || word[i] != word[i - 1]) {
      runs.push_back(1);
    } else {
      ++runs.back();
    }
  }
  return runs;
}

RunVector phi(const BinaryWord& word) {
  if (word.empty()) throw HypothesisError("empty word", word.str());
  if (word[0] != 0) throw HypothesisError("word must start with 0", word.str());
  if (word[word.size() - 1] != 1) throw HypothesisError("word must end with 1", word.str());
  return RunVector(raw_runs(word));
}

BinaryWord phi_inverse(const RunVector& rv) {
  std::vector<std::uint8_t> bits;
  bits.reserve(static_cast<std::size_t>(rv.total()));
  for (std::size_t i = 0; i < rv.size(); ++i) {
    bits.insert(bits.end(), static_cast<std::size_t>(rv[i]), static_cast<std::uint8_t>(i % 2));
  }
  return BinaryWord(std::move(bits));
}

std::int64_t manhattan_distance(std::span<const std::int64_t> u, std::span<const std::int64_t> v) {
  if (u.size() != v.size()) throw ParameterError("Manhattan distance: dimension mismatch");
  std::int64_t d = 0;
  for (std::size_t i = 0; i < u.size(); ++i) d += u[i] > v[i] ? u[i] - v[i] : v[i] - u[i];
  return d;
}

std::int64_t levenshtein_indel_distance(const BinaryWord& u, const BinaryWord& v) {
  // Rolling-row LCS.
  std::vector<std::int64_t> prev(v.size() + 1, 0);
  std::vector<std::int64_t> cur(v.size() + 1, 0);
  for (std::size_t i = 0; i < u.size(); ++i) {
    for (std::size_t j = 0; j < v.size(); ++j) {
      cur[j + 1] = u[i] == v[j] ? prev[j] + 1 : std::max(prev[j + 1], cur[j]);
    }
    std::swap(prev, cur);
  }
  const auto lcs = prev[v.size()];
  return static_cast<std::int64_t>(u.size() + v.size()) - 2 * lcs;
}

bool validate_hypothesis(const RunVector& rv, std::int64_t r) { return rv.min_run() >= r; }

}  // namespace latdel
