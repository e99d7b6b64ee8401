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

#include "latdel/channel.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <sstream>

#include "latdel/error.hpp"

namespace latdel {
namespace {

// Unbiased draw in [0, bound) by rejection; independent of the standard
// library's distribution implementations.
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  for (;;) {
    const std::uint64_t v = rng();
    if (v < limit) return v % bound;
  }
}

std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
  return std::mt19937_64(seq);
}

// Visits every strictly increasing k-subset of {0, ..., len - 1}.
template <typename F>
void for_each_subset(std::size_t len, std::size_t k, F&& visit) {
  if (k > len) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    visit(std::span<const std::size_t>(idx));
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == len - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

class PipelineRunner {
 public:
  PipelineRunner(const Codebook& book, SimulationReport& report) : book_(book), report_(report) {}

  void run(const IntVector& codeword, std::span<const std::size_t> positions) {
    ++report_.trials;
    const BinaryWord sent = phi_inverse(RunVector(codeword));
    const BinaryWord received = apply_deletions(sent, positions);
    const auto runs = raw_runs(received);
    if (received.empty() || received[0] != 0 || received[received.size() - 1] != 1 ||
        static_cast<std::int64_t>(runs.size()) != book_.n) {
      ++report_.hypothesis_violations;
      fail(codeword, positions, "run count changed by the channel", std::nullopt);
      return;
    }
    const auto trace = decode(runs, book_.N);
    report_.max_additions = std::max(report_.max_additions, trace.additions_used);
    report_.max_parity_tests = std::max(report_.max_parity_tests, trace.parity_tests_used);
    (trace.branch == DecodeBranch::parity_fix ? report_.parity_fix_decodes
                                              : report_.projection_decodes)++;
    if (!trace.success) {
      fail(codeword, positions, "decode failure: " + trace.failure_reason, std::nullopt);
    } else if (trace.output != codeword) {
      fail(codeword, positions, "decoded to a different vector", trace.output);
    } else {
      ++report_.successes;
    }
  }

 private:
  void fail(const IntVector& codeword, std::span<const std::size_t> positions,
            std::string reason, std::optional<IntVector> decoded) {
    ++report_.failures;
    if (report_.failure_examples.size() < kMaxFailureExamples) {
      report_.failure_examples.push_back(
          {codeword, {positions.begin(), positions.end()}, std::move(reason), std::move(decoded)});
    }
  }

  const Codebook& book_;
  SimulationReport& report_;
};

}  // namespace

ChannelModel parse_channel_model(const std::string& name) {
  if (name == "exhaustive") return ChannelModel::exhaustive;
  if (name == "uniform_random" || name == "random") return ChannelModel::uniform_random;
  throw ParameterError("unknown channel model: " + name);
}

const char* to_string(ChannelModel model) {
  return model == ChannelModel::exhaustive ? "exhaustive" : "uniform_random";
}

BinaryWord apply_deletions(const BinaryWord& word, std::span<const std::size_t> positions) {
  for (std::size_t i = 0; i < positions.size(); ++i) {
    if (positions[i] >= word.size()) throw ParameterError("deletion position out of range");
    if (i > 0 && positions[i] <= positions[i - 1]) {
      throw ParameterError("deletion positions must be strictly increasing");
    }
  }
  std::vector<std::uint8_t> out;
  out.reserve(word.size() - positions.size());
  std::size_t next = 0;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (next < positions.size() && positions[next] == i) {
      ++next;
      continue;
    }
    out.push_back(word[i]);
  }
  return BinaryWord(std::move(out));
}

SimulationReport run_pipeline(const Codebook& codebook, const ChannelConfig& config) {
  if (codebook.words.empty()) throw ParameterError("cannot simulate an empty codebook");
  if (static_cast<std::int64_t>(config.max_deletions) > codebook.r - 1) {
    throw ParameterError("deletion budget t must be at most r - 1");
  }
  SimulationReport report;
  PipelineRunner runner(codebook, report);
  const auto length = static_cast<std::size_t>(codebook.N);

  if (config.model == ChannelModel::exhaustive) {
    for (const auto& c : codebook.words) {
      if (config.max_deletions == 0) {
        runner.run(c, {});
        continue;
      }
      for (std::size_t k = 1; k <= config.max_deletions; ++k) {
        for_each_subset(length, k, [&](std::span<const std::size_t> pos) { runner.run(c, pos); });
      }
    }
    return report;
  }

  for (std::size_t trial = 0; trial < config.trials; ++trial) {
    auto rng = trial_rng(config.seed, trial);
    const auto& c = codebook.words[draw_below(rng, codebook.words.size())];
    const auto k = std::min<std::size_t>(draw_below(rng, config.max_deletions + 1), length);
    // Partial Fisher-Yates gives a uniform k-subset.
    std::vector<std::size_t> pool(length);
    for (std::size_t i = 0; i < length; ++i) pool[i] = i;
    for (std::size_t i = 0; i < k; ++i) {
      std::swap(pool[i], pool[i + draw_below(rng, length - i)]);
    }
    std::vector<std::size_t> positions(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(k));
    std::sort(positions.begin(), positions.end());
    runner.run(c, positions);
  }
  return report;
}

nlohmann::json SimulationReport::to_json() const {
  nlohmann::json failures_json = nlohmann::json::array();
  for (const auto& f : failure_examples) {
    nlohmann::json item{{"codeword", f.codeword}, {"positions", f.positions}, {"reason", f.reason}};
    if (f.decoded) item["decoded"] = *f.decoded;
    failures_json.push_back(std::move(item));
  }
  return {{"trials", trials},
          {"successes", successes},
          {"failures", failures},
          {"success_rate", success_rate()},
          {"hypothesis_violations", hypothesis_violations},
          {"branches", {{"parity_fix", parity_fix_decodes}, {"projection", projection_decodes}}},
          {"max_additions", max_additions},
          {"max_parity_tests", max_parity_tests},
          {"failure_examples", failures_json}};
}

std::string SimulationReport::summary() const {
  std::ostringstream out;
  out << "trials=" << trials << " successes=" << successes << " failures=" << failures
      << " success_rate=" << success_rate();
  return out.str();
}

bool operator==(const SimulationReport& a, const SimulationReport& b) {
  return a.to_json() == b.to_json();
}

}  // namespace latdel
