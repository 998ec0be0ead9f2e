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

// Keyboard decoder simulator: re-types text as touches, then decodes it the
// way an on-device keyboard would (literal decoding, key correction, auto
// correction).
//
// Scores are natural-log quantities. A candidate word w for touches t has
//
//   score(w) = log(count(w) / total) + channel(t, w)
//
// where channel() aligns touches to w with a minimum unit-cost Levenshtein
// alignment; among minimal alignments the one with the highest score is used.
// Aligned pairs add touch_log_likelihood(), unaligned touches or characters
// add `indel_log_penalty`. A literal that is not a vocabulary word is scored
// with `oov_log_prior` in place of the prior. The literal is replaced only
// when the best candidate beats it by more than `margin`.

#ifndef PROOFREAD_DECODER_H_
#define PROOFREAD_DECODER_H_

#include <cmath>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "proofread/keyboard.h"
#include "proofread/rng.h"
#include "proofread/vocabulary.h"

namespace proofread {

struct TouchEvent {
  TouchPoint point;
  // Characters without a key are carried through as literals.
  bool is_literal = false;
  char32_t literal = 0;
  // Typed with shift; restored after decoding.
  bool uppercase = false;
};
using TouchSequence = std::vector<TouchEvent>;

struct ChannelParams {
  double indel_log_penalty = -6.0;
  double margin = std::log(10.0);
  double oov_log_prior = -20.0;
  size_t max_ed = 2;
  size_t beam_width = 8;

  nlohmann::json to_json() const;
  static ChannelParams from_json(const nlohmann::json& j);
};

TouchSequence encode_touches(std::string_view text, const SpatialModel& model,
                             Rng& rng);

std::string literal_decode(const TouchSequence& touches,
                           const KeyboardLayout& layout);

// Length-preserving beam search over the vocabulary trie. Each touch may emit
// any child key, scored by touch likelihood plus the trie continuation
// log-probability. Falls back to the literal when no complete word survives
// or the winner does not clear the margin.
std::string key_correct(const TouchSequence& touches, const SpatialModel& model,
                        const Vocabulary& vocab, size_t beam_width,
                        const ChannelParams& params = {});

struct Correction {
  std::string word;
  double score = 0.0;
};

// Noisy-channel correction of one word. Vocabulary words are kept as they
// are; for other literals every vocabulary word within max_ed edits of the
// literal competes.
Correction auto_correct(const TouchSequence& word_touches,
                        const SpatialModel& model, const Vocabulary& vocab,
                        size_t max_ed, const ChannelParams& params = {});

double channel_score(const TouchSequence& touches,
                     std::u32string_view candidate, const SpatialModel& model,
                     double indel_log_penalty);

// Score the decoder assigns to the literal reading of `touches`.
double literal_score(const TouchSequence& touches, const SpatialModel& model,
                     const Vocabulary& vocab, const ChannelParams& params);

struct WordDecode {
  std::string literal_word;
  std::string committed_word;
  double score = 0.0;
};

struct DecodeResult {
  std::string literal;
  std::string corrected;
  std::vector<WordDecode> per_word;
  std::vector<std::string> separators;  // per_word.size() + 1 entries

  nlohmann::json to_json() const;
};

struct SimulatorConfig {
  ChannelParams channel;
  bool key_correction = true;
  bool auto_correction = true;
};

// Tokenizes on whitespace, then per token: encode_touches -> literal_decode ->
// key_correct -> auto_correct. Separators are preserved.
DecodeResult simulate(std::string_view corrupted, const SpatialModel& model,
                      const Vocabulary& vocab, const SimulatorConfig& config,
                      Rng& rng);

}  // namespace proofread

#endif  // PROOFREAD_DECODER_H_
