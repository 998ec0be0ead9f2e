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

// Reward signals for policy optimisation. The optimiser itself lives
// elsewhere; these are plain functions of judge verdicts and log-probs.

#ifndef PROOFREAD_REWARDS_H_
#define PROOFREAD_REWARDS_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "proofread/judge.h"

namespace proofread {

enum class RewardKind { kGlobal, kDirect };
enum class DirectCombiner { kProduct, kWeightedSum };

struct RewardConfig {
  RewardKind kind = RewardKind::kDirect;
  double kl_beta = 0.0;
  DirectCombiner combiner = DirectCombiner::kProduct;
  double w_grammar = 0.5;
  double w_meaning = 0.5;

  // kl_beta >= 0; weights >= 0 summing to 1 (within 1e-9) for weighted_sum.
  void validate() const;
  nlohmann::json to_json() const;
  static RewardConfig from_json(const nlohmann::json& j);
};

struct SequenceLogProbs {
  std::vector<double> policy_logp;
  std::vector<double> reference_logp;

  // Equal lengths and finite values, else InvalidArgument.
  void validate() const;
};

// 1 when the judge accepts `candidate` as a good fix of `input`, else 0.
double global_reward(std::string_view input, std::string_view candidate,
                     const Judge& judge);

// g = no grammar error, m = same meaning as some target.
// product: g*m; weighted_sum: w_grammar*g + w_meaning*m.
double direct_reward(std::string_view input, std::string_view candidate,
                     std::span<const std::string> targets, const Judge& judge,
                     const RewardConfig& config);

// r - beta * sum_t (policy_logp[t] - reference_logp[t]).
double kl_regularized_reward(double r, const SequenceLogProbs& lp,
                             double kl_beta);

}  // namespace proofread

#endif  // PROOFREAD_REWARDS_H_
