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

// Keyboard typo operators and the single-pass corruption process.

#ifndef PROOFREAD_ERROR_SYNTHESIS_H_
#define PROOFREAD_ERROR_SYNTHESIS_H_

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "proofread/keyboard.h"
#include "proofread/rng.h"

namespace proofread {

// Order matters: it is the order of the categorical draw in corrupt().
enum class Operator {
  kOmission,      // "hello" -> "hllo"
  kInsertion,     // "hello" -> "hpello"
  kTransposition, // "hello" -> "hlelo"
  kDoubleTap,     // "hello" -> "heello"
  kOmitDouble,    // "hello" -> "helo"
  kPositional,    // "hello" -> "jello"
};
inline constexpr std::array<Operator, 6> kAllOperators = {
    Operator::kOmission,   Operator::kInsertion,  Operator::kTransposition,
    Operator::kDoubleTap,  Operator::kOmitDouble, Operator::kPositional};

std::string_view operator_name(Operator op);
Operator operator_from_name(std::string_view name);

struct CorruptionConfig {
  double p_omit = 0.01;
  double p_insert = 0.01;
  double p_transpose = 0.01;
  double p_double_tap = 0.005;
  double p_omit_double = 0.005;
  double p_positional = 0.05;
  SpatialModel spatial;
  uint64_t seed = 0;
  // Insert a uniformly random letter instead of a keyboard neighbor.
  bool uniform_insertion = false;

  double probability(Operator op) const;
  double total_probability() const;
  void validate() const;

  nlohmann::json to_json() const;
  // Missing fields keep their defaults.
  static CorruptionConfig from_json(const nlohmann::json& j);
};

// One applied operator: `original` (a substring of the source starting at
// `position`, in code points) was replaced by `emitted`.
struct EditRecord {
  size_t position = 0;
  Operator op = Operator::kOmission;
  std::string original;
  std::string emitted;

  bool operator==(const EditRecord&) const = default;
};
using EditLog = std::vector<EditRecord>;

nlohmann::json edit_log_to_json(const EditLog& log);
EditLog edit_log_from_json(const nlohmann::json& j);

// Whether op may fire at pos: text[pos] must be a layout key, transposition
// needs a distinct layout key at pos+1, omit-double needs text[pos+1] ==
// text[pos].
bool operator_applicable(Operator op, std::u32string_view text, size_t pos,
                         const KeyboardLayout& layout);

// Applies exactly one operator at pos. Throws OutOfRange when the operator is
// not applicable there.
std::string apply_operator(Operator op, std::string_view text, size_t pos,
                           const SpatialModel& spatial, Rng& rng);

struct Corruption {
  std::string corrupted;
  EditLog log;
};

// Left-to-right pass drawing one outcome per character from
// {six operators, no-op}. Uses the stream Rng(config.seed).
Corruption corrupt(std::string_view text, const CorruptionConfig& config);
Corruption corrupt(std::string_view text, const CorruptionConfig& config,
                   Rng& rng);

// Re-applies a log to its source. Throws InvalidArgument if the log does not
// match the source.
std::string replay(std::string_view source, const EditLog& log);

}  // namespace proofread

#endif  // PROOFREAD_ERROR_SYNTHESIS_H_
