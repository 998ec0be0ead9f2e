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

#include "proofread/metrics.h"

#include <gtest/gtest.h>

#include "metric_corpora.h"
#include "proofread/errors.h"
#include "proofread/judge.h"
#include "test_corpora.h"

namespace proofread {
namespace {

TEST(MetricsTest, ExactMatch) {
  EXPECT_TRUE(exact_match("Hello.", "Hello."));
  EXPECT_FALSE(exact_match("Hello.", "hello"));
  EXPECT_TRUE(exact_match("café", "café"));
}

TEST(MetricsTest, NormalizedExactMatch) {
  EXPECT_TRUE(normalized_exact_match("Good morning!", "good morning"));
  EXPECT_FALSE(normalized_exact_match("how are you", "how r you"));
  EXPECT_TRUE(normalized_exact_match("  Hi,\tthere ", "hi there"));
  EXPECT_TRUE(normalized_exact_match("«Yes» — she said", "yes she said"));
  // Symbols are kept.
  EXPECT_FALSE(normalized_exact_match("$5", "5"));
  EXPECT_FALSE(normalized_exact_match("1+1", "11"));
}

TEST(MetricsTest, ExactImpliesNormalized) {
  const auto lines = test::clean_lines();
  for (const std::string& l : lines) {
    ASSERT_TRUE(normalized_exact_match(l, l));
  }
}

TEST(MetricsTest, EvaluateExample) {
  const RuleJudge judge(test::english_vocab_ptr());
  const std::vector<std::string> targets = {"They read the report."};
  ExampleVerdict v = evaluate_example("They raed the report.", "They read the report.", targets, judge);
  EXPECT_TRUE(v.em && v.nem && v.good);

  v = evaluate_example("They raed the report.", "They raed the report.", targets, judge);
  EXPECT_TRUE(v.has_error);
  EXPECT_FALSE(v.good);

  v = evaluate_example("They raed the report.", "They did not read the report.", targets, judge);
  EXPECT_FALSE(v.has_error);
  EXPECT_TRUE(v.diff_meaning);
  EXPECT_FALSE(v.good);

  EXPECT_THROW(evaluate_example("a", "b", {}, judge), InvalidArgument);
}

TEST(MetricsTest, CorpusExamples) {
  const RuleJudge judge(test::english_vocab_ptr());
  const auto data = load_jsonl(oracle::data_dir() / "bench_corpus.jsonl");
  std::vector<std::string> refs, sources;
  for (const auto& ex : data) {
    refs.push_back(ex.references.front());
    sources.push_back(ex.source);
  }
  const MetricsReport perfect = evaluate_corpus(data, refs, judge);
  EXPECT_EQ(perfect.em, 1.0);
  EXPECT_EQ(perfect.nem, 1.0);
  EXPECT_EQ(perfect.good, 1.0);
  EXPECT_EQ(perfect.bad, 0.0);
  EXPECT_EQ(perfect.error, 0.0);
  EXPECT_EQ(perfect.diff, 0.0);

  const MetricsReport raw = evaluate_corpus(data, sources, judge);
  EXPECT_EQ(raw.em, 0.0);
  EXPECT_GT(raw.error, 0.5);
  EXPECT_TRUE(test::report_identities_hold(raw));

  EXPECT_THROW(evaluate_corpus({}, {}, judge), InvalidArgument);
  EXPECT_THROW(evaluate_corpus(data, {"x"}, judge), InvalidArgument);
}

TEST(MetricsTest, ParallelEqualsSequential) {
  const RuleJudge judge(test::english_vocab_ptr());
  const auto data = load_jsonl(oracle::data_dir() / "bench_corpus.jsonl");
  std::vector<std::string> sources;
  for (const auto& ex : data) sources.push_back(ex.source);
  EvaluateOptions seq{1, true}, par{4, true};
  const MetricsReport a = evaluate_corpus(data, sources, judge, seq);
  const MetricsReport b = evaluate_corpus(data, sources, judge, par);
  EXPECT_EQ(a.to_json(), b.to_json());
  EXPECT_EQ(a.to_json(), evaluate_corpus(data, sources, judge, seq).to_json());
}

TEST(MetricsTest, IdentitiesOnRandomCorpora) {
  const RuleJudge judge(test::english_vocab_ptr());
  for (uint64_t seed = 0; seed < 100; ++seed) {
    const test::RandomCorpus c = test::random_corpus(seed, 40);
    const MetricsReport r = evaluate_corpus(c.dataset, c.answers, judge, {1, true});
    ASSERT_TRUE(test::report_identities_hold(r)) << "seed " << seed;
  }
}

TEST(MetricsTest, MultiReferenceMonotonicity) {
  const RuleJudge judge(test::english_vocab_ptr());
  for (uint64_t seed = 0; seed < 100; ++seed) {
    const test::RandomCorpus c = test::random_corpus(seed, 40);
    const test::RandomCorpus more = test::add_references(c, seed);
    const MetricsReport a = evaluate_corpus(c.dataset, c.answers, judge, {1, true});
    const MetricsReport b = evaluate_corpus(more.dataset, more.answers, judge, {1, true});
    ASSERT_TRUE(test::monotone(a, b)) << "seed " << seed;
  }
}

TEST(MetricsTest, JudgeFailureNamesExample) {
  struct Failing : Judge {
    bool check_grammar(std::string_view) const override { throw JudgeUnavailable("down"); }
    bool check_same_meaning(std::string_view, std::string_view) const override { return true; }
    bool check_good_fix(std::string_view, std::string_view) const override { return true; }
    FilterVerdict check_filter_criteria(std::string_view, std::string_view) const override { return {}; }
  } failing;
  std::vector<ProofreadExample> data(3, ProofreadExample{"a", {"a"}, {}});
  try {
    evaluate_corpus(data, {"a", "a", "a"}, failing);
    FAIL();
  } catch (const JudgeUnavailable& e) {
    EXPECT_NE(std::string(e.what()).find("example 0"), std::string::npos);
  }
}

TEST(MetricsTest, ReportJson) {
  MetricCounts c;
  c.add({true, true, false, false, true});
  c.add({false, false, true, true, false});
  c.add({false, true, false, true, false});
  const MetricsReport r = MetricsReport::from_counts(c);
  EXPECT_EQ(r.n, 3u);
  EXPECT_DOUBLE_EQ(r.good + r.bad, 1.0);
  const nlohmann::json j = r.to_json();
  EXPECT_EQ(j.at("counts").at("good"), 1);
  EXPECT_FALSE(j.contains("per_example"));
  EXPECT_THROW(MetricsReport::from_counts({}), InvalidArgument);
}

}  // namespace
}  // namespace proofread
