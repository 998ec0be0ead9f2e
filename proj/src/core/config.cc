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

#include "proofread/config.h"

#include <fstream>

#include "proofread/errors.h"

#ifndef PROOFREAD_DEFAULT_VOCAB
#define PROOFREAD_DEFAULT_VOCAB "data/english_10k.tsv"
#endif

namespace proofread {

void JudgeConfig::validate() const {
  if (kind == "rule") return;
  if (kind == "http") {
    if (endpoint.empty()) throw InvalidArgument("http judge needs an endpoint");
    return;
  }
  throw InvalidArgument("unknown judge kind '" + kind + "'");
}

std::filesystem::path default_vocab_path() { return PROOFREAD_DEFAULT_VOCAB; }

void GlobalConfig::propagate_seed() {
  corruption.seed = seed;
  serving.seed = seed;
}

void GlobalConfig::validate() const {
  judge.validate();
  corruption.validate();
  serving.validate();
  reward.validate();
  if (!std::filesystem::exists(vocab_path)) {
    throw IoError("vocabulary not found: " + vocab_path.string());
  }
}

nlohmann::json GlobalConfig::to_json() const {
  nlohmann::json judge_json = {{"kind", judge.kind}};
  if (!judge.endpoint.empty()) judge_json["endpoint"] = judge.endpoint;
  return {{"seed", seed},
          {"vocab_path", vocab_path.string()},
          {"judge", judge_json},
          {"corruption", corruption.to_json()},
          {"channel", channel.to_json()},
          {"serving", serving.to_json()},
          {"reward", reward.to_json()},
          {"jobs", jobs}};
}

GlobalConfig GlobalConfig::from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw InvalidArgument("config must be a JSON object");
  GlobalConfig c;
  try {
    c.seed = j.value("seed", c.seed);
    c.jobs = j.value("jobs", c.jobs);
    if (j.contains("vocab_path")) {
      c.vocab_path = j.at("vocab_path").get<std::string>();
    }
    if (j.contains("judge")) {
      const auto& jj = j.at("judge");
      c.judge.kind = jj.value("kind", c.judge.kind);
      c.judge.endpoint = jj.value("endpoint", c.judge.endpoint);
    }
    if (j.contains("corruption")) {
      c.corruption = CorruptionConfig::from_json(j.at("corruption"));
    }
    if (j.contains("channel")) c.channel = ChannelParams::from_json(j.at("channel"));
    if (j.contains("serving")) c.serving = ServingConfig::from_json(j.at("serving"));
    if (j.contains("reward")) c.reward = RewardConfig::from_json(j.at("reward"));
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("bad config: ") + e.what());
  }
  c.propagate_seed();
  return c;
}

GlobalConfig GlobalConfig::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config " + path.string());
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(path.string() + ": " + e.what());
  }
  GlobalConfig c = from_json(j);
  // Relative vocabulary paths resolve against the config file.
  if (j.contains("vocab_path") && c.vocab_path.is_relative()) {
    c.vocab_path = path.parent_path() / c.vocab_path;
  }
  return c;
}

std::shared_ptr<const Vocabulary> load_vocabulary(const GlobalConfig& config) {
  return std::make_shared<const Vocabulary>(Vocabulary::load_tsv(config.vocab_path));
}

std::unique_ptr<Judge> make_judge(const GlobalConfig& config,
                                  std::shared_ptr<const Vocabulary> vocab) {
  config.judge.validate();
  if (config.judge.kind == "http") {
    return std::make_unique<HttpJudge>(config.judge.endpoint);
  }
  return std::make_unique<RuleJudge>(std::move(vocab));
}

}  // namespace proofread
