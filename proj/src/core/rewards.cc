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

#include "proofread/rewards.h"

#include <cmath>

#include "proofread/errors.h"
#include "proofread/metrics.h"

namespace proofread {

void RewardConfig::validate() const {
  if (!(kl_beta >= 0.0) || !std::isfinite(kl_beta)) {
    throw InvalidArgument("kl_beta must be a finite non-negative number");
  }
  if (combiner == DirectCombiner::kWeightedSum) {
    if (!(w_grammar >= 0.0) || !(w_meaning >= 0.0)) {
      throw InvalidArgument("reward weights must be non-negative");
    }
    if (std::abs(w_grammar + w_meaning - 1.0) > 1e-9) {
      throw InvalidArgument("reward weights must sum to 1");
    }
  }
}

nlohmann::json RewardConfig::to_json() const {
  return {{"kind", kind == RewardKind::kGlobal ? "global" : "direct"},
          {"kl_beta", kl_beta},
          {"direct_combiner",
           combiner == DirectCombiner::kProduct ? "product" : "weighted_sum"},
          {"w_grammar", w_grammar},
          {"w_meaning", w_meaning}};
}

RewardConfig RewardConfig::from_json(const nlohmann::json& j) {
  RewardConfig c;
  try {
    if (j.contains("kind")) {
      const std::string k = j.at("kind").get<std::string>();
      if (k == "global") {
        c.kind = RewardKind::kGlobal;
      } else if (k == "direct") {
        c.kind = RewardKind::kDirect;
      } else {
        throw InvalidArgument("unknown reward kind '" + k + "'");
      }
    }
    if (j.contains("direct_combiner")) {
      const std::string k = j.at("direct_combiner").get<std::string>();
      if (k == "product") {
        c.combiner = DirectCombiner::kProduct;
      } else if (k == "weighted_sum") {
        c.combiner = DirectCombiner::kWeightedSum;
      } else {
        throw InvalidArgument("unknown direct_combiner '" + k + "'");
      }
    }
    c.kl_beta = j.value("kl_beta", c.kl_beta);
    c.w_grammar = j.value("w_grammar", c.w_grammar);
    c.w_meaning = j.value("w_meaning", c.w_meaning);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("bad reward config: ") + e.what());
  }
  c.validate();
  return c;
}

void SequenceLogProbs::validate() const {
  if (policy_logp.size() != reference_logp.size()) {
    throw InvalidArgument("policy and reference log-prob lengths differ");
  }
  for (size_t t = 0; t < policy_logp.size(); ++t) {
    if (!std::isfinite(policy_logp[t]) || !std::isfinite(reference_logp[t])) {
      throw InvalidArgument("non-finite log-prob at position " +
                            std::to_string(t));
    }
  }
}

double global_reward(std::string_view input, std::string_view candidate,
                     const Judge& judge) {
  return judge.check_good_fix(input, candidate) ? 1.0 : 0.0;
}

double direct_reward(std::string_view input, std::string_view candidate,
                     std::span<const std::string> targets, const Judge& judge,
                     const RewardConfig& config) {
  const ExampleVerdict v = evaluate_example(input, candidate, targets, judge);
  const double g = v.has_error ? 0.0 : 1.0;
  const double m = v.diff_meaning ? 0.0 : 1.0;
  if (config.combiner == DirectCombiner::kProduct) return g * m;
  return config.w_grammar * g + config.w_meaning * m;
}

double kl_regularized_reward(double r, const SequenceLogProbs& lp,
                             double kl_beta) {
  lp.validate();
  if (!(kl_beta >= 0.0)) throw InvalidArgument("kl_beta must be non-negative");
  if (kl_beta == 0.0) return r;
  double kl = 0.0;
  for (size_t t = 0; t < lp.policy_logp.size(); ++t) {
    kl += lp.policy_logp[t] - lp.reference_logp[t];
  }
  return r - kl_beta * kl;
}

}  // namespace proofread
