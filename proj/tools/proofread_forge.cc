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

// proofread-forge: command-line front end over libproofread's C API.
//
// Exit status: 0 success, 1 invalid usage or input, 2 I/O or judge failure.
// Data goes to files or stdout; diagnostics go to stderr.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "proofread/proofread.h"

#ifndef PROOFREAD_DATA_DIR
#define PROOFREAD_DATA_DIR "data"
#endif

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitIo = 2;

int exit_code(pf_status s) {
  switch (s) {
    case PF_OK:
      return kExitOk;
    case PF_ERR_IO:
    case PF_ERR_JUDGE_UNAVAILABLE:
      return kExitIo;
    default:
      return kExitUsage;
  }
}

// Raised from subcommand bodies; carries the exit status.
struct Failure {
  int code;
};

void check(pf_status s, const char* what) {
  if (s == PF_OK) return;
  std::cerr << "proofread-forge: " << what << ": " << pf_last_error() << "\n";
  throw Failure{exit_code(s)};
}

// Owns a string returned by the library.
class LibString {
 public:
  LibString() = default;
  ~LibString() { pf_free_string(s_); }
  LibString(const LibString&) = delete;
  LibString& operator=(const LibString&) = delete;
  char** out() { return &s_; }
  std::string str() const { return s_ ? std::string(s_) : std::string(); }

 private:
  char* s_ = nullptr;
};

class Context {
 public:
  Context(const std::optional<std::string>& config, const nlohmann::json& overrides) {
    const std::string patch = overrides.dump();
    check(pf_context_create(config ? config->c_str() : nullptr, patch.c_str(), &ctx_),
          "config");
  }
  ~Context() { pf_context_destroy(ctx_); }
  Context(const Context&) = delete;
  Context& operator=(const Context&) = delete;
  pf_context* get() const { return ctx_; }

 private:
  pf_context* ctx_ = nullptr;
};

void write_output(const std::optional<std::string>& path, const std::string& data) {
  if (!path || *path == "-") {
    std::cout << data;
    if (!data.empty() && data.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(*path, std::ios::binary | std::ios::trunc);
  if (!out) {
    std::cerr << "proofread-forge: cannot write " << *path << "\n";
    throw Failure{kExitIo};
  }
  out << data;
  if (!data.empty() && data.back() != '\n') out << '\n';
  if (!out) {
    std::cerr << "proofread-forge: write failed: " << *path << "\n";
    throw Failure{kExitIo};
  }
}

nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "proofread-forge: cannot open " << path << "\n";
    throw Failure{kExitIo};
  }
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "proofread-forge: " << path << ": " << e.what() << "\n";
    throw Failure{kExitUsage};
  }
}

// Flags shared by every subcommand.
struct Common {
  std::optional<std::string> config;
  std::optional<uint64_t> seed;
  std::optional<size_t> jobs;
  std::optional<std::string> vocab;
  std::optional<std::string> judge;
  std::optional<std::string> judge_endpoint;

  void attach(CLI::App* cmd, bool with_judge) {
    cmd->add_option("--config", config, "JSON config file")->check(CLI::ExistingFile);
    cmd->add_option("--seed", seed, "Seed for all randomness");
    cmd->add_option("--jobs", jobs, "Worker threads (0 = all cores)");
    cmd->add_option("--vocab", vocab, "Vocabulary TSV (word<TAB>count)");
    if (with_judge) {
      cmd->add_option("--judge", judge, "Judge backend")
          ->check(CLI::IsMember({"rule", "http"}));
      cmd->add_option("--judge-endpoint", judge_endpoint,
                      "http://host:port[/path] for --judge http");
    }
  }

  nlohmann::json overrides() const {
    nlohmann::json j = nlohmann::json::object();
    if (seed) j["seed"] = *seed;
    if (jobs) j["jobs"] = *jobs;
    if (vocab) j["vocab_path"] = *vocab;
    if (judge) j["judge"]["kind"] = *judge;
    if (judge_endpoint) j["judge"]["endpoint"] = *judge_endpoint;
    return j;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Synthetic proofreading data, keyboard decoding, evaluation "
               "and serving simulation."};
  app.name("proofread-forge");
  app.require_subcommand(1);
  app.set_version_flag("--version", pf_version());

  // pipeline
  Common pipeline_common;
  std::string pipeline_input, pipeline_output;
  std::optional<std::string> corruption_config;
  auto* pipeline = app.add_subcommand("pipeline", "Build a proofreading dataset from clean text");
  pipeline_common.attach(pipeline, true);
  pipeline->add_option("--input", pipeline_input, "Clean corpus, one sentence per line")
      ->required();
  pipeline->add_option("--output", pipeline_output, "Dataset JSONL")->required();
  pipeline->add_option("--corruption-config", corruption_config, "Corruption config JSON");

  // decode-sim
  Common decode_common;
  std::string decode_input = "-";
  std::optional<std::string> decode_output;
  std::optional<double> decode_sigma;
  bool decode_corrupt = false;
  auto* decode = app.add_subcommand("decode-sim", "Re-type lines through the keyboard decoder");
  decode_common.attach(decode, false);
  decode->add_option("--input", decode_input, "Text, one line per example (default stdin)");
  decode->add_option("--output", decode_output, "JSONL output (default stdout)");
  decode->add_option("--sigma", decode_sigma, "Touch noise in key widths");
  decode->add_flag("--corrupt", decode_corrupt, "Inject typing errors before decoding");

  // evaluate
  Common eval_common;
  std::string eval_dataset, eval_answers, eval_report = "report.json";
  bool eval_per_example = false;
  auto* evaluate = app.add_subcommand("evaluate", "Score answers against a dataset");
  eval_common.attach(evaluate, true);
  evaluate->add_option("--dataset", eval_dataset, "Dataset JSONL")->required();
  evaluate->add_option("--answers", eval_answers, "Answers, one per line")->required();
  evaluate->add_option("--report", eval_report, "Report JSON path")->capture_default_str();
  evaluate->add_flag("--per-example", eval_per_example, "Include per-example verdicts");

  // score-rewards
  Common reward_common;
  std::string reward_dataset, reward_candidates;
  std::optional<std::string> reward_kind, reward_output;
  std::optional<double> reward_kl_beta;
  auto* rewards = app.add_subcommand("score-rewards", "Per-example rewards for candidates");
  reward_common.attach(rewards, true);
  rewards->add_option("--dataset", reward_dataset, "Dataset JSONL")->required();
  rewards->add_option("--candidates", reward_candidates, "Candidates, one per line")
      ->required();
  rewards->add_option("--reward", reward_kind, "Reward kind")
      ->check(CLI::IsMember({"global", "direct"}));
  rewards->add_option("--kl-beta", reward_kl_beta, "KL weight for candidates with log-probs");
  rewards->add_option("--output", reward_output, "JSONL output (default stdout)");

  // serve-sim
  Common serve_common;
  std::string serve_dataset, serve_mode = "speculative";
  std::optional<std::string> serve_report, serve_buckets;
  std::optional<double> serve_temperature;
  std::optional<size_t> serve_draft;
  bool serve_greedy = false, serve_traces = false;
  auto* serve = app.add_subcommand("serve-sim", "Benchmark baseline vs speculative decoding");
  serve_common.attach(serve, false);
  serve->add_option("--dataset", serve_dataset, "Dataset JSONL")->required();
  serve->add_option("--mode", serve_mode, "Headline mode")->capture_default_str()
      ->check(CLI::IsMember({"baseline", "speculative"}));
  serve->add_option("--temperature", serve_temperature, "Sampling temperature");
  serve->add_option("--buckets", serve_buckets, "Comma-separated bucket keys");
  serve->add_option("--max-draft-len", serve_draft, "Draft tokens per verification");
  serve->add_flag("--greedy", serve_greedy, "Greedy decoding");
  serve->add_flag("--traces", serve_traces, "Include per-step traces");
  serve->add_option("--report", serve_report, "Report JSON path (default stdout)");

  // calibrate-sigma
  Common calib_common;
  double calib_target = 0.085;
  std::string calib_sample = std::string(PROOFREAD_DATA_DIR) + "/english_sample.txt";
  auto* calibrate = app.add_subcommand("calibrate-sigma",
                                       "Find the touch noise giving a literal error rate");
  calib_common.attach(calibrate, false);
  calibrate->add_option("--target-error", calib_target, "Target per-letter error rate")->capture_default_str()
      ->check(CLI::Range(0.0001, 0.9999));
  calibrate->add_option("--sample", calib_sample, "English text sample")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "proofread-forge: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (pipeline->parsed()) {
      nlohmann::json o = pipeline_common.overrides();
      if (corruption_config) o["corruption"] = read_json_file(*corruption_config);
      Context ctx(pipeline_common.config, o);
      LibString stats;
      check(pf_run_pipeline(ctx.get(), pipeline_input.c_str(), pipeline_output.c_str(),
                            stats.out()),
            "pipeline");
      std::cerr << "pipeline: " << stats.str() << "\n";
    } else if (decode->parsed()) {
      nlohmann::json o = decode_common.overrides();
      if (decode_sigma) {
        o["corruption"]["sigma_x"] = *decode_sigma;
        o["corruption"]["sigma_y"] = *decode_sigma;
      }
      Context ctx(decode_common.config, o);
      const std::string out =
          !decode_output || *decode_output == "-" ? "/dev/stdout" : *decode_output;
      LibString stats;
      const std::string in = decode_input == "-" ? "/dev/stdin" : decode_input;
      check(pf_decode_file(ctx.get(), in.c_str(), out.c_str(),
                           decode_corrupt ? 1 : 0, stats.out()),
            "decode-sim");
      std::cerr << "decode-sim: " << stats.str() << "\n";
    } else if (evaluate->parsed()) {
      Context ctx(eval_common.config, eval_common.overrides());
      LibString report;
      check(pf_evaluate(ctx.get(), eval_dataset.c_str(), eval_answers.c_str(),
                        eval_per_example ? 1 : 0, report.out()),
            "evaluate");
      write_output(eval_report, report.str());
      std::cerr << "evaluate: report written to " << eval_report << "\n";
    } else if (rewards->parsed()) {
      nlohmann::json o = reward_common.overrides();
      if (reward_kl_beta) o["reward"]["kl_beta"] = *reward_kl_beta;
      Context ctx(reward_common.config, o);
      LibString rows;
      check(pf_score_rewards(ctx.get(), reward_dataset.c_str(), reward_candidates.c_str(),
                             reward_kind ? reward_kind->c_str() : nullptr, nullptr,
                             rows.out()),
            "score-rewards");
      write_output(reward_output, rows.str());
    } else if (serve->parsed()) {
      nlohmann::json o = serve_common.overrides();
      if (serve_temperature) o["serving"]["temperature"] = *serve_temperature;
      if (serve_draft) o["serving"]["max_draft_len"] = *serve_draft;
      if (serve_greedy) o["serving"]["greedy"] = true;
      if (serve_buckets) {
        std::vector<size_t> keys;
        std::stringstream ss(*serve_buckets);
        std::string item;
        while (std::getline(ss, item, ',')) {
          try {
            size_t used = 0;
            const long long v = std::stoll(item, &used);
            if (used != item.size() || v <= 0) throw std::invalid_argument(item);
            keys.push_back(static_cast<size_t>(v));
          } catch (const std::exception&) {
            std::cerr << "proofread-forge: --buckets: bad key '" << item << "'\n";
            return kExitUsage;
          }
        }
        o["serving"]["bucket_keys"] = keys;
      }
      Context ctx(serve_common.config, o);
      LibString report;
      check(pf_serve_bench(ctx.get(), serve_dataset.c_str(), serve_mode.c_str(),
                           serve_traces ? 1 : 0, report.out()),
            "serve-sim");
      write_output(serve_report, report.str());
    } else if (calibrate->parsed()) {
      // Validates --config and friends like every other subcommand.
      Context ctx(calib_common.config, calib_common.overrides());
      LibString config;
      check(pf_context_config(ctx.get(), config.out()), "config");
      const uint64_t seed = nlohmann::json::parse(config.str()).value("seed", uint64_t{0});
      LibString result;
      check(pf_calibrate_sigma(calib_sample.c_str(), calib_target, seed, result.out()),
            "calibrate-sigma");
      write_output(std::nullopt, result.str());
    }
  } catch (const Failure& f) {
    return f.code;
  }
  return kExitOk;
}
