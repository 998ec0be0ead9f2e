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

// Target models for the serving simulator. Tokens are whitespace words,
// lowercased with edge punctuation removed.

#ifndef PROOFREAD_TARGET_MODEL_H_
#define PROOFREAD_TARGET_MODEL_H_

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "proofread/keyboard.h"
#include "proofread/vocabulary.h"

namespace proofread {

using TokenId = uint32_t;

inline constexpr TokenId kPadToken = 0;
inline constexpr TokenId kEosToken = 1;
inline constexpr TokenId kUnkToken = 2;

// Serving tokenization. Tokens that are pure punctuation are dropped.
std::vector<std::string> serving_words(std::string_view text);

class TokenTable {
 public:
  // Ids 0..2 are <pad>, <eos>, <unk>; words follow in the given order.
  explicit TokenTable(const std::vector<std::string>& words);

  size_t size() const { return words_.size(); }
  TokenId id(std::string_view word) const;  // kUnkToken if absent
  const std::string& word(TokenId id) const;
  std::vector<TokenId> encode(const std::vector<std::string>& words) const;
  std::string decode(std::span<const TokenId> ids) const;  // stops at <eos>

 private:
  std::vector<std::string> words_;
  std::unordered_map<std::string, TokenId> ids_;
};

// Read-only named table of reals.
class ParameterTable {
 public:
  virtual ~ParameterTable() = default;
  virtual size_t size() const = 0;
  virtual double at(size_t i) const = 0;
  // Writes all values to out[0..size()).
  virtual void copy_to(std::span<double> out) const;
  // Bytes of parameter storage.
  virtual size_t storage_bytes() const = 0;
};

class FloatTable : public ParameterTable {
 public:
  explicit FloatTable(std::vector<double> values) : values_(std::move(values)) {}
  size_t size() const override { return values_.size(); }
  double at(size_t i) const override { return values_[i]; }
  void copy_to(std::span<double> out) const override;
  size_t storage_bytes() const override {
    return values_.size() * sizeof(float);
  }
  const std::vector<double>& values() const { return values_; }

 private:
  std::vector<double> values_;
};

using TableMap = std::map<std::string, std::shared_ptr<const ParameterTable>>;

// Model-specific state derived from the input once per request.
struct ConditioningState {
  virtual ~ConditioningState() = default;
};

struct Conditioning {
  std::vector<std::string> words;
  std::vector<TokenId> ids;
  std::shared_ptr<const ConditioningState> state;
};

// Implementations are safe for concurrent const use.
class TargetModel {
 public:
  virtual ~TargetModel() = default;

  virtual const TokenTable& tokens() const = 0;
  virtual Conditioning condition(std::vector<std::string> words) const = 0;
  // Writes tokens().size() finite logits.
  virtual void next_token_logits(std::span<const TokenId> prefix,
                                 const Conditioning& cond,
                                 std::vector<double>& logits) const = 0;
  virtual TableMap parameter_tables() const = 0;
  // Same model backed by replacement tables with matching names and sizes.
  virtual std::unique_ptr<TargetModel> with_tables(TableMap tables) const = 0;
};

struct EditChannelOptions {
  double copy_bonus = 20.0;
  // Logit offset for keeping an unknown word as <unk>.
  double keep_unknown_logit = -20.0;
  double eos_logit = -10.0;
  double indel_log_penalty = -6.0;
  size_t max_ed = 2;
  // Spatial model behind the key substitution table.
  double sigma = kDefaultSigma;
};

// A substitution-only copy model: output position t reads input word t.
//
//   known word w       logit(w) += copy_bonus
//   unknown word u     logit(c) += copy_bonus + channel(u -> c) for
//                      vocabulary words c within max_ed edits,
//                      logit(<unk>) = copy_bonus + keep_unknown_logit
//   past the input     logit(<eos>) += copy_bonus
//
// All logits start from the unigram log-probability. channel() is a best
// alignment score over the key substitution table; insertions, deletions
// and adjacent swaps each cost the indel penalty.
//
// Tables: "unigram_logprob" (one per token), "key_substitution_loglik"
// (28 x 28 over a-z, apostrophe, other; row = intended key) and "scalars"
// [copy_bonus, keep_unknown_logit, indel_log_penalty]. The <eos> entry of the
// unigram table holds eos_logit.
class EditChannelModel : public TargetModel {
 public:
  EditChannelModel(std::shared_ptr<const Vocabulary> vocab,
                   EditChannelOptions options = {});

  const TokenTable& tokens() const override { return *tokens_; }
  Conditioning condition(std::vector<std::string> words) const override;
  void next_token_logits(std::span<const TokenId> prefix,
                         const Conditioning& cond,
                         std::vector<double>& logits) const override;
  TableMap parameter_tables() const override;
  std::unique_ptr<TargetModel> with_tables(TableMap tables) const override;

  const EditChannelOptions& options() const { return options_; }

  static constexpr size_t kKeyClasses = 28;

 private:
  EditChannelModel(const EditChannelModel& other, TableMap tables);

  double channel(std::u32string_view typed, std::u32string_view word) const;

  std::shared_ptr<const Vocabulary> vocab_;
  std::shared_ptr<const TokenTable> tokens_;
  EditChannelOptions options_;
  TableMap tables_;
  // Cached scalar values.
  double copy_bonus_ = 0, keep_unknown_ = 0, indel_ = 0;
};

}  // namespace proofread

#endif  // PROOFREAD_TARGET_MODEL_H_
