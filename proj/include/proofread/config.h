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

// One JSON document configuring every tool:
//
//   {
//     "seed": 0,
//     "vocab_path": "data/english_10k.tsv",
//     "judge": {"kind": "rule"} | {"kind": "http", "endpoint": "http://..."},
//     "corruption": { CorruptionConfig },
//     "channel": { ChannelParams },
//     "serving": { ServingConfig },
//     "reward": { RewardConfig },
//     "jobs": 1
//   }
//
// Every field is optional. "seed" overrides the seeds of the sub-configs.

#ifndef PROOFREAD_CONFIG_H_
#define PROOFREAD_CONFIG_H_

#include <cstdint>
#include <filesystem>
#include <memory>
#include <string>

#include "json.hpp"
#include "proofread/decoder.h"
#include "proofread/error_synthesis.h"
#include "proofread/judge.h"
#include "proofread/rewards.h"
#include "proofread/speculative.h"
#include "proofread/vocabulary.h"

namespace proofread {

struct JudgeConfig {
  std::string kind = "rule";  // "rule" or "http"
  std::string endpoint;

  void validate() const;
};

// Built-in vocabulary location baked in at build time.
std::filesystem::path default_vocab_path();

struct GlobalConfig {
  uint64_t seed = 0;
  std::filesystem::path vocab_path = default_vocab_path();
  JudgeConfig judge;
  CorruptionConfig corruption;
  ChannelParams channel;
  ServingConfig serving;
  RewardConfig reward;
  size_t jobs = 1;

  // Copies `seed` into the corruption and serving configs.
  void propagate_seed();
  // Validates every part; a missing vocabulary file raises IoError.
  void validate() const;
  nlohmann::json to_json() const;
  static GlobalConfig from_json(const nlohmann::json& j);
  static GlobalConfig load(const std::filesystem::path& path);
};

std::shared_ptr<const Vocabulary> load_vocabulary(const GlobalConfig& config);
std::unique_ptr<Judge> make_judge(const GlobalConfig& config,
                                  std::shared_ptr<const Vocabulary> vocab);

}  // namespace proofread

#endif  // PROOFREAD_CONFIG_H_
