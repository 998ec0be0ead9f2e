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

#include "proofread/judge.h"

#include <gtest/gtest.h>

#include <atomic>
#include <thread>

#include "httplib.h"
#include "proofread/errors.h"
#include "test_corpora.h"

namespace proofread {
namespace {

RuleJudge rule_judge() { return RuleJudge(test::english_vocab_ptr()); }

TEST(RuleJudgeTest, Grammar) {
  const RuleJudge j = rule_judge();
  EXPECT_FALSE(j.check_grammar("They read the report this morning."));
  EXPECT_FALSE(j.check_grammar("I'll call you at 10:30 :) see https://example.com/x?y=1"));
  EXPECT_TRUE(j.check_grammar("They read th report this morning."));
  EXPECT_TRUE(j.check_grammar("They raed the report."));
  EXPECT_TRUE(j.check_grammar("They read the the report."));
  EXPECT_TRUE(j.check_grammar("Send it to me tonight,,"));
  EXPECT_TRUE(j.check_grammar("Send it  to me."));
  EXPECT_TRUE(j.check_grammar("Let m know."));
  EXPECT_TRUE(j.check_grammar("w4nt to go"));
  EXPECT_FALSE(j.check_grammar("Wait..."));
  EXPECT_FALSE(j.check_grammar(""));
}

TEST(RuleJudgeTest, ConfusableCheckCanBeDisabled) {
  RuleJudgeOptions o;
  o.confusable_ratio = 0.0;
  const RuleJudge j(test::english_vocab_ptr(), o);
  EXPECT_FALSE(j.check_grammar("They read th report."));
}

TEST(RuleJudgeTest, Meaning) {
  const RuleJudge j = rule_judge();
  EXPECT_TRUE(j.check_same_meaning("I will send the report", "I will sned the reprot"));
  EXPECT_FALSE(j.check_same_meaning("I will send the report", "I will not send the report"));
  EXPECT_FALSE(j.check_same_meaning("I will send the report", "We ate pizza at the beach"));
  EXPECT_TRUE(j.check_same_meaning("Don't go", "Do not go"));
  EXPECT_TRUE(j.check_same_meaning("it is", "it is"));
  EXPECT_TRUE(j.check_same_meaning("", ""));
}

TEST(RuleJudgeTest, GoodFix) {
  const RuleJudge j = rule_judge();
  EXPECT_TRUE(j.check_good_fix("They raed the reprot.", "They read the report."));
  EXPECT_FALSE(j.check_good_fix("They raed the reprot.", "They raed the reprot."));
  EXPECT_FALSE(j.check_good_fix("They raed the reprot.", "We ate pizza at the beach."));
}

TEST(RuleJudgeTest, FilterCriteria) {
  const RuleJudge j = rule_judge();
  FilterVerdict v = j.check_filter_criteria("They raed the report.", "They read the report.");
  EXPECT_TRUE(v.keep);

  v = j.check_filter_criteria("They raed the report.", "They raed the report.");
  EXPECT_TRUE(v.ref_has_errors);
  EXPECT_FALSE(v.keep);

  v = j.check_filter_criteria("They read the report.", "They did not read the report.");
  EXPECT_TRUE(v.ref_diff_meaning);
  EXPECT_FALSE(v.keep);

  v = j.check_filter_criteria("The plan is nice.", "The plan was nice.");
  EXPECT_TRUE(v.ref_diff_tone);
  EXPECT_FALSE(v.keep);

  v = j.check_filter_criteria("12:30", "12:30");
  EXPECT_TRUE(v.ref_not_fluent);
  EXPECT_FALSE(v.keep);
}

TEST(RuleJudgeTest, FilterVerdictJson) {
  FilterVerdict v;
  v.ref_diff_tone = true;
  v.keep = false;
  EXPECT_EQ(FilterVerdict::from_json(v.to_json()), v);
  // keep is derived, not trusted.
  nlohmann::json j = v.to_json();
  j["keep"] = true;
  EXPECT_FALSE(FilterVerdict::from_json(j).keep);
}

TEST(RuleJudgeTest, Deterministic) {
  const RuleJudge a = rule_judge();
  const RuleJudge b = rule_judge();
  for (const std::string& line : test::clean_lines()) {
    EXPECT_EQ(a.check_grammar(line), b.check_grammar(line));
    EXPECT_EQ(a.check_grammar(line), a.check_grammar(line));
  }
}

TEST(RuleJudgeTest, NeedsDictionary) {
  EXPECT_THROW(RuleJudge(nullptr), InvalidArgument);
}

// Local judge service answering from a RuleJudge.
class JudgeServer {
 public:
  explicit JudgeServer(bool broken = false) : judge_(rule_judge()) {
    server_.Post("/judge", [this, broken](const httplib::Request& req, httplib::Response& res) {
      ++requests_;
      if (broken) {
        res.set_content("{\"nope\": 1}", "application/json");
        return;
      }
      const auto body = nlohmann::json::parse(req.body);
      const std::string task = body.at("task");
      const auto texts = body.at("texts").get<std::vector<std::string>>();
      nlohmann::json verdict;
      if (task == "grammar") verdict = judge_.check_grammar(texts.at(0));
      if (task == "meaning") verdict = judge_.check_same_meaning(texts.at(0), texts.at(1));
      if (task == "good_fix") verdict = judge_.check_good_fix(texts.at(0), texts.at(1));
      if (task == "filter") verdict = judge_.check_filter_criteria(texts.at(0), texts.at(1)).to_json();
      res.set_content(nlohmann::json{{"verdict", verdict}}.dump(), "application/json");
    });
    port_ = server_.bind_to_any_port("127.0.0.1");
    thread_ = std::thread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
  }
  ~JudgeServer() {
    server_.stop();
    thread_.join();
  }
  std::string endpoint() const { return "http://127.0.0.1:" + std::to_string(port_); }
  int requests() const { return requests_; }

 private:
  RuleJudge judge_;
  httplib::Server server_;
  std::thread thread_;
  int port_ = 0;
  std::atomic<int> requests_{0};
};

TEST(HttpJudgeTest, AgreesWithServedRuleJudge) {
  JudgeServer server;
  const HttpJudge http(server.endpoint());
  const RuleJudge rule = rule_judge();
  const std::vector<std::pair<std::string, std::string>> pairs = {
      {"They raed the reprot.", "They read the report."},
      {"The plan is nice.", "The plan was nice."},
      {"I will send it", "I will not send it"}};
  for (const auto& [a, b] : pairs) {
    EXPECT_EQ(http.check_grammar(a), rule.check_grammar(a));
    EXPECT_EQ(http.check_same_meaning(a, b), rule.check_same_meaning(a, b));
    EXPECT_EQ(http.check_good_fix(a, b), rule.check_good_fix(a, b));
    EXPECT_EQ(http.check_filter_criteria(a, b), rule.check_filter_criteria(a, b));
  }
  EXPECT_EQ(server.requests(), 12);
}

TEST(HttpJudgeTest, ConcurrentCalls) {
  JudgeServer server;
  HttpJudgeOptions o;
  o.max_in_flight = 3;
  const HttpJudge http(server.endpoint(), o);
  std::vector<std::thread> threads;
  std::atomic<int> errors{0};
  for (int t = 0; t < 8; ++t) {
    threads.emplace_back([&] {
      for (int i = 0; i < 10; ++i) {
        if (http.check_grammar("They read th report.") != true) ++errors;
      }
    });
  }
  for (auto& t : threads) t.join();
  EXPECT_EQ(errors, 0);
  EXPECT_EQ(server.requests(), 80);
}

TEST(HttpJudgeTest, FailuresAreJudgeUnavailable) {
  HttpJudgeOptions o;
  o.timeout = std::chrono::milliseconds(500);
  const HttpJudge closed("http://127.0.0.1:9", o);
  EXPECT_THROW(closed.check_grammar("x"), JudgeUnavailable);

  JudgeServer broken(true);
  const HttpJudge bad(broken.endpoint(), o);
  EXPECT_THROW(bad.check_grammar("x"), JudgeUnavailable);
  EXPECT_THROW(bad.check_filter_criteria("x", "y"), JudgeUnavailable);

  EXPECT_THROW(HttpJudge("ftp://host"), InvalidArgument);
}

}  // namespace
}  // namespace proofread
