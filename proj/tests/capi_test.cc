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

// Exercises the shared library through its C surface only.

#include "proofread/proofread.h"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <string>
#include <thread>

#include "json.hpp"

namespace {

namespace fs = std::filesystem;

std::string take(char* s) {
  std::string out(s);
  pf_free_string(s);
  return out;
}

nlohmann::json take_json(char* s) { return nlohmann::json::parse(take(s)); }

class Context {
 public:
  explicit Context(const char* overrides = nullptr) {
    EXPECT_EQ(pf_context_create(nullptr, overrides, &ctx_), PF_OK) << pf_last_error();
  }
  ~Context() { pf_context_destroy(ctx_); }
  pf_context* get() const { return ctx_; }

 private:
  pf_context* ctx_ = nullptr;
};

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() /
            ("pf_capi_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
             ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
};

void write_file(const std::string& path, const std::string& text) {
  std::ofstream(path, std::ios::binary) << text;
}

TEST(CApiTest, VersionAndStatusNames) {
  EXPECT_STRNE(pf_version(), "");
  EXPECT_STREQ(pf_status_name(PF_OK), "ok");
  EXPECT_STRNE(pf_status_name(PF_ERR_JUDGE_UNAVAILABLE), pf_status_name(PF_ERR_IO));
}

TEST(CApiTest, ContextErrors) {
  pf_context* ctx = reinterpret_cast<pf_context*>(0x1);
  EXPECT_EQ(pf_context_create(nullptr, "{not json", &ctx), PF_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(ctx, reinterpret_cast<pf_context*>(0x1));
  EXPECT_STRNE(pf_last_error(), "");
  EXPECT_EQ(pf_context_create("/nonexistent/config.json", nullptr, &ctx), PF_ERR_IO);
  EXPECT_EQ(pf_context_create(nullptr, R"({"serving": {"temperature": -1}})", &ctx),
            PF_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(pf_context_create(nullptr, nullptr, nullptr), PF_ERR_INVALID_ARGUMENT);
  pf_context_destroy(nullptr);
}

TEST(CApiTest, ConfigOverridesAndSetters) {
  Context ctx(R"({"seed": 7, "serving": {"max_draft_len": 3}})");
  nlohmann::json c;
  char* out = nullptr;
  ASSERT_EQ(pf_context_config(ctx.get(), &out), PF_OK);
  c = take_json(out);
  EXPECT_EQ(c.at("seed"), 7);
  EXPECT_EQ(c.at("serving").at("max_draft_len"), 3);
  ASSERT_EQ(pf_context_set_seed(ctx.get(), 9), PF_OK);
  ASSERT_EQ(pf_context_set_sigma(ctx.get(), 0.3), PF_OK);
  EXPECT_EQ(pf_context_set_sigma(ctx.get(), -0.3), PF_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(pf_context_set_judge(ctx.get(), "http", nullptr), PF_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(pf_context_set_judge(ctx.get(), "oracle", nullptr), PF_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(pf_context_set_vocab(ctx.get(), "/nonexistent.tsv"), PF_ERR_IO);
  ASSERT_EQ(pf_context_config(ctx.get(), &out), PF_OK);
  c = take_json(out);
  EXPECT_EQ(c.at("seed"), 9);
}

TEST(CApiTest, Keyboard) {
  double x = 0, y = 0;
  ASSERT_EQ(pf_key_center("h", &x, &y), PF_OK);
  EXPECT_DOUBLE_EQ(x, 5.75);
  EXPECT_DOUBLE_EQ(y, 1.5);
  EXPECT_EQ(pf_key_center("\xc3\xa9", &x, &y), PF_ERR_UNKNOWN_CHARACTER);
  EXPECT_EQ(pf_key_center("ab", &x, &y), PF_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(pf_key_center("\xff", &x, &y), PF_ERR_INVALID_ARGUMENT);
  char* ch = nullptr;
  ASSERT_EQ(pf_nearest_key(5.8, 1.4, &ch), PF_OK);
  EXPECT_EQ(take(ch), "h");
}

TEST(CApiTest, CorruptAndReplay) {
  Context ctx(R"({"corruption": {"p_positional": 0.3, "p_omit": 0.1}})");
  char* out = nullptr;
  ASSERT_EQ(pf_corrupt(ctx.get(), "the quick brown fox jumps", &out), PF_OK);
  const nlohmann::json c = take_json(out);
  const std::string edits = c.at("edits").dump();
  char* replayed = nullptr;
  ASSERT_EQ(pf_replay("the quick brown fox jumps", edits.c_str(), &replayed), PF_OK);
  EXPECT_EQ(take(replayed), c.at("corrupted").get<std::string>());
  ASSERT_EQ(pf_corrupt(ctx.get(), "the quick brown fox jumps", &out), PF_OK);
  EXPECT_EQ(take_json(out), c);
  EXPECT_EQ(pf_replay("xyz", edits.c_str(), &replayed), PF_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(pf_corrupt(ctx.get(), "ab\xff", &out), PF_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(pf_decode_line(ctx.get(), "ab\xff", 0, 0, &out), PF_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(pf_post_rules("ab\xff", "ab", &out), PF_ERR_INVALID_ARGUMENT);
}

TEST(CApiTest, DecodeLine) {
  Context ctx;
  char* out = nullptr;
  ASSERT_EQ(pf_decode_line(ctx.get(), "hllo wrld", 0, 0, &out), PF_OK);
  const nlohmann::json a = take_json(out);
  EXPECT_EQ(a.at("input"), "hllo wrld");
  ASSERT_EQ(pf_decode_line(ctx.get(), "hllo wrld", 0, 0, &out), PF_OK);
  EXPECT_EQ(take_json(out), a);
  ASSERT_EQ(pf_decode_line(ctx.get(), "they read the report", 3, 1, &out), PF_OK);
  EXPECT_TRUE(take_json(out).contains("corrupted"));
}

TEST(CApiTest, PipelineEvaluateAndRewards) {
  TempDir tmp;
  Context ctx;
  const std::string corpus = tmp.file("corpus.txt");
  write_file(corpus,
             "They read the report this morning.\nI will be at school on Monday.\n"
             "Please send me the file when you can.\nWe are going to the beach tomorrow.\n"
             "Can you call me back tonight?\nThe meeting starts at nine.\n");
  ctx.get();
  ASSERT_EQ(pf_context_set_sigma(ctx.get(), 0.6), PF_OK);
  char* stats = nullptr;
  const std::string dataset = tmp.file("data.jsonl");
  ASSERT_EQ(pf_run_pipeline(ctx.get(), corpus.c_str(), dataset.c_str(), &stats), PF_OK)
      << pf_last_error();
  const nlohmann::json s = take_json(stats);
  ASSERT_EQ(s.at("lines"), 6);
  ASSERT_GT(s.at("emitted").get<int>(), 0);

  std::ifstream in(dataset);
  std::string line, answers;
  size_t n = 0;
  while (std::getline(in, line)) {
    answers += nlohmann::json::parse(line).at("references").at(0).get<std::string>() + "\n";
    ++n;
  }
  write_file(tmp.file("answers.txt"), answers);
  char* report = nullptr;
  ASSERT_EQ(pf_evaluate(ctx.get(), dataset.c_str(), tmp.file("answers.txt").c_str(), 1, &report),
            PF_OK);
  const nlohmann::json r = take_json(report);
  EXPECT_EQ(r.at("good"), 1.0);
  EXPECT_EQ(r.at("per_example").size(), n);

  std::string candidates;
  std::ifstream in2(tmp.file("answers.txt"));
  while (std::getline(in2, line)) {
    candidates += nlohmann::json{{"candidate", line}, {"policy_logp", {-1.0, -2.0}},
                                 {"reference_logp", {-1.5, -2.0}}}
                      .dump() +
                  "\n";
  }
  write_file(tmp.file("candidates.jsonl"), candidates);
  Context kl(R"({"reward": {"kl_beta": 0.4}})");
  char* rows = nullptr;
  ASSERT_EQ(pf_score_rewards(kl.get(), dataset.c_str(), tmp.file("candidates.jsonl").c_str(), "direct",
                             nullptr, &rows),
            PF_OK)
      << pf_last_error();
  std::istringstream rs(take(rows));
  size_t count = 0;
  while (std::getline(rs, line)) {
    const nlohmann::json row = nlohmann::json::parse(line);
    EXPECT_EQ(row.at("reward"), 1.0);
    EXPECT_NEAR(row.at("regularized").get<double>(), 1.0 - 0.4 * 0.5, 1e-12);
    ++count;
  }
  EXPECT_EQ(count, n);

  write_file(tmp.file("short.txt"), "one\n");
  EXPECT_EQ(pf_evaluate(ctx.get(), dataset.c_str(), tmp.file("short.txt").c_str(), 0, &report),
            PF_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(pf_evaluate(ctx.get(), "/nonexistent.jsonl", tmp.file("short.txt").c_str(), 0, &report),
            PF_ERR_IO);
}

TEST(CApiTest, UnreachableJudge) {
  TempDir tmp;
  write_file(tmp.file("d.jsonl"), R"({"source": "helo", "references": ["hello"], "meta": {}})" "\n");
  write_file(tmp.file("a.txt"), "hello\n");
  Context ctx(R"({"judge": {"kind": "http", "endpoint": "http://127.0.0.1:9", "timeout_ms": 300}})");
  char* report = nullptr;
  EXPECT_EQ(pf_evaluate(ctx.get(), tmp.file("d.jsonl").c_str(), tmp.file("a.txt").c_str(), 0, &report),
            PF_ERR_JUDGE_UNAVAILABLE);
  EXPECT_NE(std::string(pf_last_error()).find("example 0"), std::string::npos) << pf_last_error();
}

TEST(CApiTest, RewardKl) {
  const double p[] = {-1.0, -0.5, -2.0};
  const double q[] = {-1.2, -0.9, -1.5};
  double out = 0;
  ASSERT_EQ(pf_reward_kl(1.0, p, q, 3, 2.0, &out), PF_OK);
  EXPECT_NEAR(out, 0.8, 1e-12);
  ASSERT_EQ(pf_reward_kl(0.3, p, q, 3, 0.0, &out), PF_OK);
  EXPECT_EQ(out, 0.3);
  EXPECT_EQ(pf_reward_kl(1.0, p, q, 3, -1.0, &out), PF_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(pf_reward_kl(1.0, nullptr, q, 3, 1.0, &out), PF_ERR_INVALID_ARGUMENT);
}

TEST(CApiTest, Serving) {
  Context ctx;
  size_t bucket = 0;
  ASSERT_EQ(pf_pick_bucket(ctx.get(), 17, &bucket), PF_OK);
  EXPECT_EQ(bucket, 32u);
  EXPECT_EQ(pf_pick_bucket(ctx.get(), 129, &bucket), PF_ERR_OUT_OF_RANGE);
  EXPECT_EQ(bucket, 32u);
  char* out = nullptr;
  ASSERT_EQ(pf_serve_document(ctx.get(), "see you tomorow\n\nthe reprot is here", "speculative", &out),
            PF_OK);
  const nlohmann::json r = take_json(out);
  EXPECT_GT(r.at("target_calls").get<int>(), 0);
  EXPECT_EQ(pf_serve_document(ctx.get(), "x", "warp", &out), PF_ERR_INVALID_ARGUMENT);
}

TEST(CApiTest, LastErrorIsPerThread) {
  double x, y;
  ASSERT_EQ(pf_key_center("\xc3\xa9", &x, &y), PF_ERR_UNKNOWN_CHARACTER);
  const std::string mine = pf_last_error();
  std::thread([] {
    size_t b;
    pf_context* ctx = nullptr;
    pf_context_create(nullptr, nullptr, &ctx);
    pf_pick_bucket(ctx, 500, &b);
    pf_context_destroy(ctx);
  }).join();
  EXPECT_EQ(std::string(pf_last_error()), mine);
}

TEST(CApiTest, Calibrate) {
  char* out = nullptr;
  ASSERT_EQ(pf_calibrate_sigma(PROOFREAD_DATA_DIR "/english_sample.txt", 0.085, 0, &out), PF_OK);
  EXPECT_NEAR(take_json(out).at("sigma").get<double>(), 0.252, 0.002);
  EXPECT_EQ(pf_calibrate_sigma("/nonexistent.txt", 0.085, 0, &out), PF_ERR_IO);
}

}  // namespace
