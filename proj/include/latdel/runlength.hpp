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
#include <string_view>
#include <vector>

namespace latdel {

/// A finite binary sequence.
class BinaryWord {
 public:
  BinaryWord() = default;
  explicit BinaryWord(std::vector<std::uint8_t> bits);

  /// Parses an ASCII string of '0'/'1'; ParameterError otherwise.
  static BinaryWord parse(std::string_view text);

  std::size_t size() const noexcept { return bits_.size(); }
  bool empty() const noexcept { return bits_.empty(); }
  std::uint8_t operator[](std::size_t i) const { return bits_[i]; }
  const std::vector<std::uint8_t>& bits() const noexcept { return bits_; }
  std::string str() const;

  friend bool operator==(const BinaryWord&, const BinaryWord&) = default;
  friend auto operator<=>(const BinaryWord&, const BinaryWord&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

/// Runlengths (x_1, y_1, ..., x_{n/2}, y_{n/2}) of a word that starts with 0
/// and has an even number of runs. All entries are >= 1.
class RunVector {
 public:
  /// DomainError on a non-positive entry or an odd/zero number of runs.
  explicit RunVector(std::vector<std::int64_t> runs);

  std::size_t size() const noexcept { return runs_.size(); }
  std::int64_t operator[](std::size_t i) const { return runs_[i]; }
  const std::vector<std::int64_t>& runs() const noexcept { return runs_; }
  /// N, the length of the underlying word.
  std::int64_t total() const noexcept { return total_; }
  std::int64_t min_run() const;
  std::string str() const;

  friend bool operator==(const RunVector& a, const RunVector& b) { return a.runs_ == b.runs_; }

 private:
  std::vector<std::int64_t> runs_;
  std::int64_t total_ = 0;
};

/// Runlength map. HypothesisError (carrying the word) if the word is empty,
/// starts with 1 or ends with 0.
RunVector phi(const BinaryWord& word);

/// Maximal runs of any nonempty word, without the start/end convention.
std::vector<std::int64_t> raw_runs(const BinaryWord& word);

BinaryWord phi_inverse(const RunVector& rv);

/// Sum |u_i - v_i|; ParameterError on dimension mismatch.
std::int64_t manhattan_distance(std::span<const std::int64_t> u, std::span<const std::int64_t> v);
inline std::int64_t manhattan_distance(const RunVector& u, const RunVector& v) {
  return manhattan_distance(u.runs(), v.runs());
}

/// Insertion/deletion distance |u| + |v| - 2 LCS(u, v).
std::int64_t levenshtein_indel_distance(const BinaryWord& u, const BinaryWord& v);

/// True iff every run is at least r.
bool validate_hypothesis(const RunVector& rv, std::int64_t r);

}  // namespace latdel
