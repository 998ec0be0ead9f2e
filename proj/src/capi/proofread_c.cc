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

#include "proofread/proofread.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <mutex>
#include <new>
#include <optional>
#include <sstream>
#include <string>

#include "proofread/bench.h"
#include "proofread/calibration.h"
#include "proofread/config.h"
#include "proofread/decoder.h"
#include "proofread/error_synthesis.h"
#include "proofread/errors.h"
#include "proofread/example.h"
#include "proofread/keyboard.h"
#include "proofread/metrics.h"
#include "proofread/parallel.h"
#include "proofread/pipeline.h"
#include "proofread/rewards.h"
#include "proofread/speculative.h"
#include "proofread/target_model.h"
#include "proofread/text.h"

namespace pr = proofread;

struct pf_context {
  pr::GlobalConfig config;

  std::shared_ptr<const pr::Vocabulary> vocab() const {
    std::lock_guard<std::mutex> lock(mu);
    if (!vocab_) vocab_ = pr::load_vocabulary(config);
    return vocab_;
  }

  std::shared_ptr<const pr::Judge> judge() const {
    auto v = vocab();
    std::lock_guard<std::mutex> lock(mu);
    if (!judge_) judge_ = pr::make_judge(config, v);
    return judge_;
  }

  std::shared_ptr<const pr::TargetModel> model() const {
    auto v = vocab();
    std::lock_guard<std::mutex> lock(mu);
    if (!model_) {
      pr::EditChannelOptions options;
      options.sigma = config.corruption.spatial.sigma_x;
      model_ = std::make_shared<pr::EditChannelModel>(v, options);
    }
    return model_;
  }

  void reset() {
    std::lock_guard<std::mutex> lock(mu);
    vocab_.reset();
    judge_.reset();
    model_.reset();
  }

 private:
  mutable std::mutex mu;
  mutable std::shared_ptr<const pr::Vocabulary> vocab_;
  mutable std::shared_ptr<const pr::Judge> judge_;
  mutable std::shared_ptr<const pr::TargetModel> model_;
};

namespace {

thread_local std::string g_last_error;

template <class F>
pf_status guard(F&& fn) {
  try {
    fn();
    return PF_OK;
  } catch (const pr::Error& e) {
    g_last_error = e.what();
    return static_cast<pf_status>(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
  } catch (const std::exception& e) {
    g_last_error = e.what();
  } catch (...) {
    g_last_error = "unknown error";
  }
  return PF_ERR_INTERNAL;
}

void require(const void* p, const char* name) {
  if (p == nullptr) {
    throw pr::InvalidArgument(std::string(name) + " must not be NULL");
  }
}

void require_text(const char* p, const char* name) {
  require(p, name);
  if (!pr::is_valid_utf8(p)) {
    throw pr::InvalidArgument(std::string(name) + " is not valid UTF-8");
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size());
  out[s.size()] = '\0';
  return out;
}

nlohmann::json parse_json(const char* text, const char* what) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw pr::InvalidArgument(std::string(what) + ": " + e.what());
  }
}

void write_file(const char* path, const std::string& data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw pr::IoError(std::string("cannot write ") + path);
  out << data;
  out.flush();
  if (!out) throw pr::IoError(std::string("write failed: ") + path);
}

pr::SimulatorConfig simulator_config(const pr::GlobalConfig& c) {
  pr::SimulatorConfig s;
  s.channel = c.channel;
  return s;
}

}  // namespace

extern "C" {

const char* pf_version(void) { return "0.1.0"; }

const char* pf_status_name(pf_status status) {
  switch (status) {
    case PF_OK: return "ok";
    case PF_ERR_INVALID_ARGUMENT: return "invalid argument";
    case PF_ERR_IO: return "i/o error";
    case PF_ERR_UNKNOWN_CHARACTER: return "unknown character";
    case PF_ERR_OUT_OF_RANGE: return "out of range";
    case PF_ERR_JUDGE_UNAVAILABLE: return "judge unavailable";
    case PF_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* pf_last_error(void) { return g_last_error.c_str(); }

void pf_free_string(char* s) { std::free(s); }

pf_status pf_context_create(const char* config_path, const char* overrides_json,
                            pf_context** out) {
  return guard([&] {
    require(out, "out");
    nlohmann::json j = nlohmann::json::object();
    if (config_path != nullptr) {
      std::ifstream in(config_path);
      if (!in) throw pr::IoError(std::string("cannot open config ") + config_path);
      std::stringstream buf;
      buf << in.rdbuf();
      j = parse_json(buf.str().c_str(), config_path);
      if (!j.is_object()) throw pr::InvalidArgument("config must be a JSON object");
      // Relative vocabulary paths resolve against the config file.
      if (j.contains("vocab_path") && j["vocab_path"].is_string()) {
        std::filesystem::path p = j["vocab_path"].get<std::string>();
        if (p.is_relative()) {
          j["vocab_path"] =
              (std::filesystem::path(config_path).parent_path() / p).string();
        }
      }
    }
    if (overrides_json != nullptr) {
      j.merge_patch(parse_json(overrides_json, "overrides"));
    }
    auto ctx = std::make_unique<pf_context>();
    ctx->config = pr::GlobalConfig::from_json(j);
    ctx->config.validate();
    *out = ctx.release();
  });
}

void pf_context_destroy(pf_context* ctx) { delete ctx; }

pf_status pf_context_set_seed(pf_context* ctx, uint64_t seed) {
  return guard([&] {
    require(ctx, "ctx");
    ctx->config.seed = seed;
    ctx->config.propagate_seed();
  });
}

pf_status pf_context_set_jobs(pf_context* ctx, size_t jobs) {
  return guard([&] {
    require(ctx, "ctx");
    ctx->config.jobs = jobs;
  });
}

pf_status pf_context_set_sigma(pf_context* ctx, double sigma) {
  return guard([&] {
    require(ctx, "ctx");
    pr::SpatialModel m = pr::SpatialModel::isotropic(sigma);
    m.validate();
    ctx->config.corruption.spatial = m;
    ctx->reset();
  });
}

pf_status pf_context_set_vocab(pf_context* ctx, const char* tsv_path) {
  return guard([&] {
    require(ctx, "ctx");
    require(tsv_path, "tsv_path");
    if (!std::filesystem::exists(tsv_path)) {
      throw pr::IoError(std::string("vocabulary not found: ") + tsv_path);
    }
    ctx->config.vocab_path = tsv_path;
    ctx->reset();
  });
}

pf_status pf_context_set_judge(pf_context* ctx, const char* kind,
                               const char* endpoint) {
  return guard([&] {
    require(ctx, "ctx");
    require(kind, "kind");
    pr::JudgeConfig j{kind, endpoint ? endpoint : ""};
    j.validate();
    ctx->config.judge = j;
    ctx->reset();
  });
}

pf_status pf_context_config(const pf_context* ctx, char** out_json) {
  return guard([&] {
    require(ctx, "ctx");
    require(out_json, "out_json");
    *out_json = dup_string(ctx->config.to_json().dump(2));
  });
}

pf_status pf_key_center(const char* ch, double* x, double* y) {
  return guard([&] {
    require_text(ch, "ch");
    require(x, "x");
    require(y, "y");
    const std::u32string u = pr::to_u32(ch);
    if (u.size() != 1) throw pr::InvalidArgument("expected exactly one character");
    const pr::TouchPoint p = pr::key_center(*pr::KeyboardLayout::qwerty(), u[0]);
    *x = p.x;
    *y = p.y;
  });
}

pf_status pf_nearest_key(double x, double y, char** out_ch) {
  return guard([&] {
    require(out_ch, "out_ch");
    *out_ch = dup_string(
        pr::to_utf8(pr::nearest_key(*pr::KeyboardLayout::qwerty(), {x, y})));
  });
}

pf_status pf_corrupt(const pf_context* ctx, const char* text, char** out_json) {
  return guard([&] {
    require(ctx, "ctx");
    require_text(text, "text");
    require(out_json, "out_json");
    const pr::Corruption c = pr::corrupt(text, ctx->config.corruption);
    const nlohmann::json j = {{"corrupted", c.corrupted},
                              {"edits", pr::edit_log_to_json(c.log)}};
    *out_json = dup_string(j.dump());
  });
}

pf_status pf_replay(const char* source, const char* edits_json,
                    char** out_text) {
  return guard([&] {
    require_text(source, "source");
    require(edits_json, "edits_json");
    require(out_text, "out_text");
    const pr::EditLog log =
        pr::edit_log_from_json(parse_json(edits_json, "edits"));
    *out_text = dup_string(pr::replay(source, log));
  });
}

namespace {

nlohmann::json decode_one(const pf_context& ctx, const pr::Vocabulary& vocab,
                          const std::string& line, size_t index,
                          bool corrupt_first) {
  const pr::Rng base(pr::line_seed(ctx.config.seed, index));
  pr::Rng corrupt_rng = base.split(0);
  pr::Rng sim_rng = base.split(1);
  std::string typed = line;
  nlohmann::json edits = nlohmann::json::array();
  if (corrupt_first) {
    const pr::Corruption c = pr::corrupt(line, ctx.config.corruption, corrupt_rng);
    typed = c.corrupted;
    edits = pr::edit_log_to_json(c.log);
  }
  const pr::DecodeResult r =
      pr::simulate(typed, ctx.config.corruption.spatial, vocab,
                   simulator_config(ctx.config), sim_rng);
  nlohmann::json j = r.to_json();
  j["input"] = line;
  j["corrupted"] = typed;
  if (corrupt_first) j["edits"] = std::move(edits);
  return j;
}

}  // namespace

pf_status pf_decode_line(const pf_context* ctx, const char* line, size_t index,
                         int corrupt_first, char** out_json) {
  return guard([&] {
    require(ctx, "ctx");
    require_text(line, "line");
    require(out_json, "out_json");
    const auto vocab = ctx->vocab();
    *out_json =
        dup_string(decode_one(*ctx, *vocab, line, index, corrupt_first != 0).dump());
  });
}

pf_status pf_decode_file(const pf_context* ctx, const char* input_path,
                         const char* output_path, int corrupt_first,
                         char** out_stats_json) {
  return guard([&] {
    require(ctx, "ctx");
    require(input_path, "input_path");
    require(output_path, "output_path");
    const auto vocab = ctx->vocab();
    const std::vector<std::string> lines = pr::load_lines(input_path);
    for (size_t i = 0; i < lines.size(); ++i) {
      if (!pr::is_valid_utf8(lines[i])) {
        throw pr::InvalidArgument(std::string(input_path) + ":" +
                                  std::to_string(i + 1) + ": invalid UTF-8");
      }
    }
    auto rows = pr::parallel_map(lines.size(), ctx->config.jobs, [&](size_t i) {
      return decode_one(*ctx, *vocab, lines[i], i, corrupt_first != 0).dump();
    });
    std::string data;
    size_t words = 0;
    for (const std::string& r : rows) {
      data += r;
      data += '\n';
    }
    for (const auto& l : lines) words += pr::split_words(l).size();
    write_file(output_path, data);
    if (out_stats_json != nullptr) {
      *out_stats_json =
          dup_string(nlohmann::json{{"lines", lines.size()}, {"words", words}}.dump());
    }
  });
}

pf_status pf_post_rules(const char* text, const char* reference,
                        char** out_text) {
  return guard([&] {
    require_text(text, "text");
    require_text(reference, "reference");
    require(out_text, "out_text");
    *out_text = dup_string(pr::apply_post_rules(text, reference));
  });
}

pf_status pf_run_pipeline(const pf_context* ctx, const char* input_path,
                          const char* output_path, char** out_stats_json) {
  return guard([&] {
    require(ctx, "ctx");
    require(input_path, "input_path");
    require(output_path, "output_path");
    const auto vocab = ctx->vocab();
    const auto judge = ctx->judge();
    pr::PipelineConfig pc;
    pc.corruption = ctx->config.corruption;
    pc.simulator = simulator_config(ctx->config);
    pc.jobs = ctx->config.jobs;
    std::ifstream in(input_path, std::ios::binary);
    if (!in) throw pr::IoError(std::string("cannot open ") + input_path);
    std::ofstream out(output_path, std::ios::binary | std::ios::trunc);
    if (!out) throw pr::IoError(std::string("cannot write ") + output_path);
    const pr::PipelineStats stats =
        pr::build_dataset(in, out, pc, *vocab, *judge);
    out.flush();
    if (!out) throw pr::IoError(std::string("write failed: ") + output_path);
    if (out_stats_json != nullptr) *out_stats_json = dup_string(stats.to_json().dump());
  });
}

pf_status pf_evaluate(const pf_context* ctx, const char* dataset_path,
                      const char* answers_path, int per_example,
                      char** out_report_json) {
  return guard([&] {
    require(ctx, "ctx");
    require(dataset_path, "dataset_path");
    require(answers_path, "answers_path");
    require(out_report_json, "out_report_json");
    const auto dataset = pr::load_jsonl(dataset_path);
    const auto answers = pr::load_lines(answers_path);
    const auto judge = ctx->judge();
    pr::EvaluateOptions options;
    options.jobs = ctx->config.jobs;
    options.per_example = per_example != 0;
    const pr::MetricsReport report =
        pr::evaluate_corpus(dataset, answers, *judge, options);
    *out_report_json = dup_string(report.to_json().dump(2));
  });
}

pf_status pf_score_rewards(const pf_context* ctx, const char* dataset_path,
                           const char* candidates_path, const char* kind,
                           const char* output_path, char** out_jsonl) {
  return guard([&] {
    require(ctx, "ctx");
    require(dataset_path, "dataset_path");
    require(candidates_path, "candidates_path");
    if (output_path == nullptr) require(out_jsonl, "out_jsonl");
    pr::RewardConfig rc = ctx->config.reward;
    if (kind != nullptr) {
      rc = pr::RewardConfig::from_json(
          {{"kind", kind},
           {"kl_beta", rc.kl_beta},
           {"direct_combiner", rc.to_json()["direct_combiner"]},
           {"w_grammar", rc.w_grammar},
           {"w_meaning", rc.w_meaning}});
    }
    const auto dataset = pr::load_jsonl(dataset_path);
    const auto lines = pr::load_lines(candidates_path);
    if (dataset.size() != lines.size()) {
      throw pr::InvalidArgument("dataset has " + std::to_string(dataset.size()) +
                                " examples but " + std::to_string(lines.size()) +
                                " candidates");
    }
    const auto judge = ctx->judge();
    auto rows = pr::parallel_map(dataset.size(), ctx->config.jobs, [&](size_t i) {
      std::string candidate = lines[i];
      std::optional<pr::SequenceLogProbs> lp;
      if (!candidate.empty() && candidate.front() == '{') {
        const nlohmann::json cj = parse_json(candidate.c_str(), "candidate");
        try {
          candidate = cj.at("candidate").get<std::string>();
          if (cj.contains("policy_logp")) {
            lp.emplace();
            lp->policy_logp = cj.at("policy_logp").get<std::vector<double>>();
            lp->reference_logp = cj.at("reference_logp").get<std::vector<double>>();
          }
        } catch (const nlohmann::json::exception& e) {
          throw pr::InvalidArgument("candidate " + std::to_string(i + 1) + ": " +
                                    e.what());
        }
      }
      const auto& ex = dataset[i];
      nlohmann::json row = {{"index", i}};
      double r = 0.0;
      try {
        if (rc.kind == pr::RewardKind::kGlobal) {
          row["kind"] = "global";
          r = pr::global_reward(ex.source, candidate, *judge);
        } else {
          row["kind"] = "direct";
          r = pr::direct_reward(ex.source, candidate, ex.references, *judge, rc);
        }
      } catch (const pr::Error& e) {
        pr::rethrow_with_context(e, "example " + std::to_string(i));
      }
      row["reward"] = r;
      if (lp) {
        row["kl_beta"] = rc.kl_beta;
        row["regularized"] = pr::kl_regularized_reward(r, *lp, rc.kl_beta);
      }
      return row.dump();
    });
    std::string data;
    for (const auto& r : rows) {
      data += r;
      data += '\n';
    }
    if (output_path != nullptr) {
      write_file(output_path, data);
    } else {
      *out_jsonl = dup_string(data);
    }
  });
}

pf_status pf_reward_kl(double reward, const double* policy_logp,
                       const double* reference_logp, size_t n, double kl_beta,
                       double* out) {
  return guard([&] {
    require(out, "out");
    if (n > 0) {
      require(policy_logp, "policy_logp");
      require(reference_logp, "reference_logp");
    }
    pr::SequenceLogProbs lp;
    if (n > 0) {
      lp.policy_logp.assign(policy_logp, policy_logp + n);
      lp.reference_logp.assign(reference_logp, reference_logp + n);
    }
    *out = pr::kl_regularized_reward(reward, lp, kl_beta);
  });
}

pf_status pf_pick_bucket(const pf_context* ctx, size_t token_len,
                         size_t* out_bucket) {
  return guard([&] {
    require(ctx, "ctx");
    require(out_bucket, "out_bucket");
    *out_bucket = pr::pick_bucket(ctx->config.serving, token_len);
  });
}

pf_status pf_serve_document(const pf_context* ctx, const char* document,
                            const char* mode, char** out_json) {
  return guard([&] {
    require(ctx, "ctx");
    require(document, "document");
    require(mode, "mode");
    require(out_json, "out_json");
    const pr::DecodeMode m = pr::decode_mode_from_name(mode);
    const auto model = ctx->model();
    const pr::ServeResult r =
        pr::serve_document(*model, document, ctx->config.serving, m,
                           ctx->config.seed, ctx->config.jobs);
    nlohmann::json j = {{"text", r.text},
                        {"mode", pr::decode_mode_name(m)},
                        {"target_calls", r.target_calls},
                        {"wall_ms", r.wall_ms}};
    if (!r.traces.empty()) {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& t : r.traces) arr.push_back(t.to_json());
      j["traces"] = std::move(arr);
    }
    *out_json = dup_string(j.dump());
  });
}

pf_status pf_serve_bench(const pf_context* ctx, const char* dataset_path,
                         const char* mode, int with_traces,
                         char** out_report_json) {
  return guard([&] {
    require(ctx, "ctx");
    require(dataset_path, "dataset_path");
    require(mode, "mode");
    require(out_report_json, "out_report_json");
    const pr::DecodeMode m = pr::decode_mode_from_name(mode);
    std::vector<std::string> documents;
    for (const auto& ex : pr::load_jsonl(dataset_path)) {
      documents.push_back(ex.source);
    }
    const auto model = ctx->model();
    pr::BenchOptions options;
    options.keep_traces = with_traces != 0;
    const pr::BenchReport report =
        pr::bench(*model, documents, ctx->config.serving, options);
    *out_report_json = dup_string(report.to_json(m).dump(2));
  });
}

pf_status pf_calibrate_sigma(const char* sample_path, double target_error,
                             uint64_t seed, char** out_json) {
  return guard([&] {
    require(sample_path, "sample_path");
    require(out_json, "out_json");
    std::ifstream in(sample_path, std::ios::binary);
    if (!in) throw pr::IoError(std::string("cannot open ") + sample_path);
    std::stringstream buf;
    buf << in.rdbuf();
    pr::CalibrationOptions options;
    options.target_error = target_error;
    options.seed = seed;
    const pr::CalibrationResult r = pr::calibrate_sigma(buf.str(), options);
    *out_json = dup_string(r.to_json().dump());
  });
}

}  // extern "C"
