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
#include <vector>

#include <json.hpp>

#include "latdel/codebook.hpp"
#include "latdel/decoder.hpp"
#include "latdel/runlength.hpp"

namespace latdel {

enum class ChannelModel { exhaustive, uniform_random };

ChannelModel parse_channel_model(const std::string& name);
const char* to_string(ChannelModel model);

struct ChannelConfig {
  std::size_t max_deletions = 1;  // t, at most r - 1
  ChannelModel model = ChannelModel::exhaustive;
  std::uint64_t seed = 0;
  std::size_t trials = 1000;  // uniform_random only
};

/// Removes the bits at the given strictly increasing positions.
/// ParameterError on out-of-range or unsorted positions.
BinaryWord apply_deletions(const BinaryWord& word, std::span<const std::size_t> positions);

struct TrialFailure {
  IntVector codeword;
  std::vector<std::size_t> positions;
  std::string reason;
  std::optional<IntVector> decoded;
};

struct SimulationReport {
  std::size_t trials = 0;
  std::size_t successes = 0;
  std::size_t failures = 0;
  std::size_t hypothesis_violations = 0;
  std::size_t parity_fix_decodes = 0;
  std::size_t projection_decodes = 0;
  std::size_t max_additions = 0;
  std::size_t max_parity_tests = 0;
  std::vector<TrialFailure> failure_examples;  // first few only

  double success_rate() const {
    return trials == 0 ? 0.0 : static_cast<double>(successes) / static_cast<double>(trials);
  }
  nlohmann::json to_json() const;
  std::string summary() const;
  friend bool operator==(const SimulationReport&, const SimulationReport&);
};

inline constexpr std::size_t kMaxFailureExamples = 8;

/// Codeword -> word -> deletions -> runs -> decode -> compare, for every
/// codeword and every deletion pattern of size 1..t (exhaustive; t = 0 runs
/// the empty pattern) or for `trials` seeded draws (uniform_random).
/// ParameterError if the codebook is empty; the t <= r - 1 contract is not
/// enforced so that its violation can be measured.
SimulationReport run_pipeline(const Codebook& codebook, const ChannelConfig& config);

}  // namespace latdel
