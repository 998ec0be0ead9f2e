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

#include "proofread/speculative.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>

#include "proofread/errors.h"

namespace proofread {

void ServingConfig::validate() const {
  if (bucket_keys.empty()) throw InvalidArgument("bucket_keys is empty");
  for (size_t i = 0; i < bucket_keys.size(); ++i) {
    if (bucket_keys[i] == 0) throw InvalidArgument("bucket keys must be positive");
    if (i > 0 && bucket_keys[i] <= bucket_keys[i - 1]) {
      throw InvalidArgument("bucket keys must be strictly increasing");
    }
  }
  if (!(temperature > 0.0) || !std::isfinite(temperature)) {
    throw InvalidArgument("temperature must be a positive number");
  }
  if (max_draft_len == 0) throw InvalidArgument("max_draft_len must be >= 1");
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw InvalidArgument("epsilon must lie in (0, 1)");
  }
}

nlohmann::json ServingConfig::to_json() const {
  return {{"bucket_keys", bucket_keys},     {"temperature", temperature},
          {"max_draft_len", max_draft_len}, {"seed", seed},
          {"greedy", greedy},               {"epsilon", epsilon}};
}

ServingConfig ServingConfig::from_json(const nlohmann::json& j) {
  ServingConfig c;
  try {
    c.bucket_keys = j.value("bucket_keys", c.bucket_keys);
    c.temperature = j.value("temperature", c.temperature);
    c.max_draft_len = j.value("max_draft_len", c.max_draft_len);
    c.seed = j.value("seed", c.seed);
    c.greedy = j.value("greedy", c.greedy);
    c.epsilon = j.value("epsilon", c.epsilon);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("bad serving config: ") + e.what());
  }
  c.validate();
  return c;
}

size_t pick_bucket(const ServingConfig& config, size_t token_len) {
  for (size_t key : config.bucket_keys) {
    if (key >= token_len) return key;
  }
  throw OutOfRange(std::to_string(token_len) +
                   " tokens exceed the largest bucket (" +
                   std::to_string(config.max_bucket()) + "); segment first");
}

std::vector<TokenId> InputSuffixDrafter::propose(
    std::span<const TokenId> input, std::span<const TokenId> output,
    size_t max_len) const {
  const size_t n = input.size(), m = output.size();
  std::vector<size_t> prev(n + 1), cur(n + 1);
  for (size_t j = 0; j <= n; ++j) prev[j] = j;
  for (size_t i = 1; i <= m; ++i) {
    cur[0] = i;
    for (size_t j = 1; j <= n; ++j) {
      const size_t sub = output[i - 1] == input[j - 1] ? 0 : 1;
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + sub});
    }
    std::swap(prev, cur);
  }
  size_t anchor = 0;
  for (size_t j = 0; j <= n; ++j) {
    if (prev[j] <= prev[anchor]) anchor = j;
  }
  std::vector<TokenId> draft(input.begin() + static_cast<ptrdiff_t>(anchor),
                             input.end());
  draft.push_back(kEosToken);
  if (draft.size() > max_len) draft.resize(max_len);
  return draft;
}

nlohmann::json SpecDecodeTrace::to_json() const {
  nlohmann::json steps_json = nlohmann::json::array();
  for (const SpecStep& s : steps) {
    steps_json.push_back(
        {{"draft_len", s.draft_len},
         {"accepted_len", s.accepted_len},
         {"resampled_token", s.rejected && s.extra_token
                                 ? nlohmann::json(*s.extra_token)
                                 : nlohmann::json(nullptr)},
         {"bonus_token", !s.rejected && s.extra_token
                             ? nlohmann::json(*s.extra_token)
                             : nlohmann::json(nullptr)}});
  }
  return {{"steps", steps_json},
          {"total_target_calls", total_target_calls},
          {"total_tokens", total_tokens},
          {"wall_ms", wall_ms},
          {"bucket", bucket}};
}

std::vector<double> softmax(std::span<const double> logits, double temperature) {
  std::vector<double> p(logits.size());
  double mx = -std::numeric_limits<double>::infinity();
  for (double l : logits) mx = std::max(mx, l);
  double z = 0.0;
  for (size_t i = 0; i < logits.size(); ++i) {
    p[i] = std::exp((logits[i] - mx) / temperature);
    z += p[i];
  }
  for (double& v : p) v /= z;
  return p;
}

TokenId argmax(std::span<const double> values) {
  size_t best = 0;
  for (size_t i = 1; i < values.size(); ++i) {
    if (values[i] > values[best]) best = i;
  }
  return static_cast<TokenId>(best);
}

size_t output_cap(const ServingConfig& config, size_t input_len) {
  return pick_bucket(config, input_len) + 1;
}

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// Inverse-CDF draw from unnormalized non-negative weights.
TokenId sample_from(std::span<const double> weights, Rng& rng) {
  double total = 0.0;
  for (double w : weights) total += w;
  const double u = rng.uniform() * total;
  double acc = 0.0;
  size_t last = 0;
  for (size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] <= 0.0) continue;
    acc += weights[i];
    last = i;
    if (u < acc) return static_cast<TokenId>(i);
  }
  return static_cast<TokenId>(last);
}

class Stepper {
 public:
  Stepper(const TargetModel& model, const Conditioning& cond,
          const ServingConfig& config)
      : model_(model), cond_(cond), config_(config) {}

  // Target distribution (or logits in greedy mode) after `prefix`.
  const std::vector<double>& eval(std::span<const TokenId> prefix) {
    model_.next_token_logits(prefix, cond_, logits_);
    if (!config_.greedy) probs_ = softmax(logits_, config_.temperature);
    return config_.greedy ? logits_ : probs_;
  }

 private:
  const TargetModel& model_;
  const Conditioning& cond_;
  const ServingConfig& config_;
  std::vector<double> logits_;
  std::vector<double> probs_;
};

}  // namespace

DecodeOutput autoregressive_decode(const TargetModel& model,
                                   const Conditioning& cond,
                                   const ServingConfig& config, Rng& rng) {
  config.validate();
  const auto start = Clock::now();
  DecodeOutput out;
  out.bucket = pick_bucket(config, cond.ids.size());
  const size_t cap = out.bucket + 1;
  Stepper step(model, cond, config);
  while (out.tokens.size() < cap) {
    const auto& dist = step.eval(out.tokens);
    ++out.target_calls;
    const TokenId tok = config.greedy ? argmax(dist) : sample_from(dist, rng);
    out.tokens.push_back(tok);
    if (tok == kEosToken) break;
  }
  out.wall_ms = elapsed_ms(start);
  return out;
}

DecodeOutput speculative_decode(const TargetModel& model,
                                const Conditioning& cond,
                                const ServingConfig& config, Rng& rng,
                                SpecDecodeTrace* trace,
                                const Drafter* drafter) {
  config.validate();
  static const InputSuffixDrafter kDefaultDrafter;
  if (drafter == nullptr) drafter = &kDefaultDrafter;
  const auto start = Clock::now();
  DecodeOutput out;
  out.bucket = pick_bucket(config, cond.ids.size());
  const size_t cap = out.bucket + 1;
  const size_t vocab = model.tokens().size();
  const double eps = config.epsilon;
  Stepper step(model, cond, config);
  SpecDecodeTrace local;
  bool ended = false;

  while (!ended && out.tokens.size() < cap) {
    const size_t room = cap - out.tokens.size();
    const std::vector<TokenId> draft = drafter->propose(
        cond.ids, out.tokens, std::min(config.max_draft_len, room));
    ++out.target_calls;
    SpecStep rec;
    rec.draft_len = draft.size();
    bool all_accepted = true;
    for (size_t i = 0; i < draft.size(); ++i) {
      const std::vector<double>& dist = step.eval(out.tokens);
      if (config.greedy) {
        const TokenId best = argmax(dist);
        if (best == draft[i]) {
          ++rec.accepted_len;
          out.tokens.push_back(best);
          if (best == kEosToken) {
            ended = true;
            break;
          }
          continue;
        }
        out.tokens.push_back(best);
        rec.extra_token = best;
        rec.rejected = true;
        ended = best == kEosToken;
        all_accepted = false;
        break;
      }
      // Proposal q = (1 - eps) * onehot(draft[i]) + eps / V.
      TokenId x = draft[i];
      if (rng.uniform() < eps) x = static_cast<TokenId>(rng.below(vocab));
      auto q = [&](TokenId y) {
        return (y == draft[i] ? 1.0 - eps : 0.0) + eps / static_cast<double>(vocab);
      };
      if (rng.uniform() < std::min(1.0, dist[x] / q(x))) {
        ++rec.accepted_len;
        out.tokens.push_back(x);
        if (x == kEosToken) {
          ended = true;
          break;
        }
        continue;
      }
      std::vector<double> residual(vocab);
      double mass = 0.0;
      for (size_t y = 0; y < vocab; ++y) {
        residual[y] = std::max(0.0, dist[y] - q(static_cast<TokenId>(y)));
        mass += residual[y];
      }
      const TokenId r = mass > 0.0 ? sample_from(residual, rng)
                                   : sample_from(dist, rng);
      out.tokens.push_back(r);
      rec.extra_token = r;
      rec.rejected = true;
      ended = r == kEosToken;
      all_accepted = false;
      break;
    }
    if (all_accepted && !ended && out.tokens.size() < cap) {
      const std::vector<double>& dist = step.eval(out.tokens);
      const TokenId b = config.greedy ? argmax(dist) : sample_from(dist, rng);
      out.tokens.push_back(b);
      rec.extra_token = b;
      ended = b == kEosToken;
    }
    local.steps.push_back(rec);
  }
  out.wall_ms = elapsed_ms(start);
  if (trace != nullptr) {
    local.total_target_calls = out.target_calls;
    local.total_tokens = out.tokens.size();
    local.wall_ms = out.wall_ms;
    local.bucket = out.bucket;
    *trace = std::move(local);
  }
  return out;
}

}  // namespace proofread
