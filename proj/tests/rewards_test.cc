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

#include <gtest/gtest.h>

#include "metric_corpora.h"
#include "proofread/errors.h"
#include "proofread/metrics.h"
#include "test_corpora.h"

namespace proofread {
namespace {

const RuleJudge& judge() {
  static const RuleJudge j(test::english_vocab_ptr());
  return j;
}

TEST(RewardsTest, GlobalReward) {
  EXPECT_EQ(global_reward("They raed the report.", "They read the report.", judge()), 1.0);
  EXPECT_EQ(global_reward("They raed the report.", "They raed the report.", judge()), 0.0);
  EXPECT_EQ(global_reward("They raed the report.", "We ate pizza at the beach.", judge()), 0.0);
}

TEST(RewardsTest, DirectReward) {
  const std::vector<std::string> targets = {"They read the report."};
  RewardConfig product;
  RewardConfig weighted;
  weighted.combiner = DirectCombiner::kWeightedSum;
  // Grammatical, same meaning.
  EXPECT_EQ(direct_reward("x", "They read the report.", targets, judge(), product), 1.0);
  // Error, same meaning.
  EXPECT_EQ(direct_reward("x", "They raed the report.", targets, judge(), product), 0.0);
  EXPECT_EQ(direct_reward("x", "They raed the report.", targets, judge(), weighted), 0.5);
  // Grammatical, different meaning.
  EXPECT_EQ(direct_reward("x", "We ate pizza at the beach.", targets, judge(), weighted), 0.5);
  // Both wrong.
  EXPECT_EQ(direct_reward("x", "We aet pizza at the beach.", targets, judge(), weighted), 0.0);
  EXPECT_THROW(direct_reward("x", "y", {}, judge(), product), InvalidArgument);
}

TEST(RewardsTest, ProductEqualsGoodOnRandomCorpora) {
  const RewardConfig product;
  for (uint64_t seed = 0; seed < 20; ++seed) {
    const test::RandomCorpus c = test::random_corpus(seed, 40);
    for (size_t i = 0; i < c.answers.size(); ++i) {
      const auto& ex = c.dataset[i];
      const ExampleVerdict v = evaluate_example(ex.source, c.answers[i], ex.references, judge());
      ASSERT_EQ(direct_reward(ex.source, c.answers[i], ex.references, judge(), product),
                v.good ? 1.0 : 0.0);
    }
  }
}

TEST(RewardsTest, KlRegularization) {
  const SequenceLogProbs lp{{-1.0, -0.5, -2.0}, {-1.2, -0.9, -1.5}};
  // kl = 0.2 + 0.4 - 0.5 = 0.1
  EXPECT_NEAR(kl_regularized_reward(1.0, lp, 2.0), 0.8, 1e-12);
  EXPECT_EQ(kl_regularized_reward(0.7, lp, 0.0), 0.7);
  const SequenceLogProbs same{{-1.0, -3.0}, {-1.0, -3.0}};
  EXPECT_EQ(kl_regularized_reward(0.5, same, 4.0), 0.5);
  EXPECT_EQ(kl_regularized_reward(0.5, {}, 4.0), 0.5);
}

TEST(RewardsTest, KlPenaltyMonotoneInBeta) {
  Rng rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    SequenceLogProbs lp;
    for (int t = 0; t < 8; ++t) {
      lp.policy_logp.push_back(-3.0 * rng.uniform());
      lp.reference_logp.push_back(-3.0 * rng.uniform());
    }
    double kl = 0.0;
    for (size_t t = 0; t < 8; ++t) kl += lp.policy_logp[t] - lp.reference_logp[t];
    const double lo = kl_regularized_reward(1.0, lp, 0.1);
    const double hi = kl_regularized_reward(1.0, lp, 0.5);
    if (kl > 0) {
      ASSERT_LE(hi, lo);
    } else {
      ASSERT_GE(hi, lo);
    }
  }
}

TEST(RewardsTest, InvalidInputs) {
  EXPECT_THROW(kl_regularized_reward(1.0, {{-1.0}, {}}, 1.0), InvalidArgument);
  EXPECT_THROW(kl_regularized_reward(1.0, {{-1.0}, {NAN}}, 1.0), InvalidArgument);
  EXPECT_THROW(kl_regularized_reward(1.0, {{-1.0}, {-1.0}}, -1.0), InvalidArgument);

  RewardConfig c;
  c.kl_beta = -0.1;
  EXPECT_THROW(c.validate(), InvalidArgument);
  c = {};
  c.combiner = DirectCombiner::kWeightedSum;
  c.w_grammar = 0.7;
  EXPECT_THROW(c.validate(), InvalidArgument);
  c.w_meaning = 0.3;
  EXPECT_NO_THROW(c.validate());
  EXPECT_THROW(RewardConfig::from_json({{"kind", "local"}}), InvalidArgument);
  EXPECT_THROW(RewardConfig::from_json({{"direct_combiner", "max"}}), InvalidArgument);
  EXPECT_THROW(RewardConfig::from_json({{"kl_beta", "big"}}), InvalidArgument);
}

TEST(RewardsTest, ConfigJsonRoundTrip) {
  RewardConfig c;
  c.kind = RewardKind::kGlobal;
  c.kl_beta = 0.25;
  c.combiner = DirectCombiner::kWeightedSum;
  c.w_grammar = 0.25;
  c.w_meaning = 0.75;
  EXPECT_EQ(RewardConfig::from_json(c.to_json()).to_json(), c.to_json());
}

}  // namespace
}  // namespace proofread
