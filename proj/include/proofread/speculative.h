//
// Copyright 2026 The Proofread Forge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

// Autoregressive and speculative decoding against a TargetModel.
//
// The speculative decoder drafts from the input itself. Each verification
// pass scores the draft in one target call; draft token i is proposed from
// q_i = (1 - eps) * onehot(d_i) + eps / V and accepted with probability
// min(1, p_i(x) / q_i(x)). On rejection a token is drawn from
// norm(max(0, p_i - q_i)); after a fully accepted draft a bonus token is
// drawn from the next target distribution. This keeps the output
// distribution equal to autoregressive sampling. Greedy mode accepts while
// the draft token is the target argmax (lowest id on ties).

#ifndef PROOFREAD_SPECULATIVE_H_
#define PROOFREAD_SPECULATIVE_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "json.hpp"
#include "proofread/rng.h"
#include "proofread/target_model.h"

namespace proofread {

struct ServingConfig {
  std::vector<size_t> bucket_keys{16, 32, 64, 128};
  double temperature = 0.3;
  size_t max_draft_len = 8;
  uint64_t seed = 0;
  bool greedy = false;
  double epsilon = 1e-6;

  // Keys strictly increasing and positive, temperature > 0,
  // max_draft_len >= 1, 0 < epsilon < 1.
  void validate() const;
  size_t max_bucket() const { return bucket_keys.back(); }
  nlohmann::json to_json() const;
  static ServingConfig from_json(const nlohmann::json& j);
};

// Smallest key >= token_len. Throws OutOfRange past the largest key.
size_t pick_bucket(const ServingConfig& config, size_t token_len);

// Proposes the next tokens given the request input and the output so far.
class Drafter {
 public:
  virtual ~Drafter() = default;
  virtual std::vector<TokenId> propose(std::span<const TokenId> input,
                                       std::span<const TokenId> output,
                                       size_t max_len) const = 0;
};

// Drafts input[j:] + <eos>, where j is the input prefix length closest in
// edit distance to the output so far (largest j on ties).
class InputSuffixDrafter : public Drafter {
 public:
  std::vector<TokenId> propose(std::span<const TokenId> input,
                               std::span<const TokenId> output,
                               size_t max_len) const override;
};

struct SpecStep {
  size_t draft_len = 0;
  size_t accepted_len = 0;
  // Token added after the accepted run: a resample on rejection or a bonus
  // token after full acceptance. Absent when decoding stopped inside the
  // accepted run.
  std::optional<TokenId> extra_token;
  bool rejected = false;
};

struct SpecDecodeTrace {
  std::vector<SpecStep> steps;
  size_t total_target_calls = 0;
  size_t total_tokens = 0;
  double wall_ms = 0.0;
  size_t bucket = 0;

  nlohmann::json to_json() const;
};

struct DecodeOutput {
  std::vector<TokenId> tokens;  // ends with <eos> unless the cap was hit
  size_t target_calls = 0;
  double wall_ms = 0.0;
  size_t bucket = 0;
};

// Output cap: bucket + 1 tokens (room for <eos>).
size_t output_cap(const ServingConfig& config, size_t input_len);

// One target call per emitted token.
DecodeOutput autoregressive_decode(const TargetModel& model,
                                   const Conditioning& cond,
                                   const ServingConfig& config, Rng& rng);

DecodeOutput speculative_decode(const TargetModel& model,
                                const Conditioning& cond,
                                const ServingConfig& config, Rng& rng,
                                SpecDecodeTrace* trace = nullptr,
                                const Drafter* drafter = nullptr);

// Softmax of logits / temperature.
std::vector<double> softmax(std::span<const double> logits, double temperature);
// Lowest index on ties.
TokenId argmax(std::span<const double> values);

}  // namespace proofread

#endif  // PROOFREAD_SPECULATIVE_H_
