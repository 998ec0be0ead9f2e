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

// Pluggable judge answering grammar, meaning, good-fix and dataset-filter
// questions. RuleJudge is a deterministic dictionary/heuristic stand-in;
// HttpJudge forwards the same questions to an external service.

#ifndef PROOFREAD_JUDGE_H_
#define PROOFREAD_JUDGE_H_

#include <chrono>
#include <memory>
#include <semaphore>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "proofread/vocabulary.h"

namespace proofread {

struct FilterVerdict {
  bool ref_has_errors = false;
  bool ref_not_fluent = false;
  bool ref_diff_meaning = false;
  bool ref_diff_tone = false;
  bool keep = true;  // none of the four

  bool operator==(const FilterVerdict&) const = default;
  nlohmann::json to_json() const;
  // `keep` is recomputed from the four criteria.
  static FilterVerdict from_json(const nlohmann::json& j);
};

class Judge {
 public:
  virtual ~Judge() = default;

  // True when the text contains an error.
  virtual bool check_grammar(std::string_view text) const = 0;
  virtual bool check_same_meaning(std::string_view a,
                                  std::string_view b) const = 0;
  virtual bool check_good_fix(std::string_view input,
                              std::string_view candidate) const = 0;
  virtual FilterVerdict check_filter_criteria(std::string_view source,
                                              std::string_view ref) const = 0;
};

struct RuleJudgeOptions {
  // Fraction of content words that must fuzzily match for same meaning.
  double min_content_overlap = 0.6;
  // A short dictionary word is still an error when a word one edit away is
  // this many times more frequent ("th" next to "the"). 0 disables the check.
  double confusable_ratio = 1000.0;
  size_t confusable_max_length = 3;
};

// Grammar: every alphabetic word (lowercased, edge punctuation stripped) must
// be a dictionary word, short words must not be rare neighbours of a very
// frequent word, the only one-letter words are "a" and "i", and no word may
// be immediately repeated. Doubled spaces and runs of separating punctuation (",," ".,")
// are errors too. URL, emoji, emoticon and date-time tokens are exempt.
//
// Meaning: negation parity must agree and the content-word multisets must
// overlap by at least min_content_overlap, where words match when their edit
// distance (transpositions count once) is at most 1 (length <= 4) or 2.
//
// Tone: a tense or modal marker aligned against a different marker in the
// other text (e.g. "was" vs "is") counts as a tone/aspect/tense change.
class RuleJudge : public Judge {
 public:
  explicit RuleJudge(std::shared_ptr<const Vocabulary> dictionary,
                     RuleJudgeOptions options = {});

  bool check_grammar(std::string_view text) const override;
  bool check_same_meaning(std::string_view a,
                          std::string_view b) const override;
  bool check_good_fix(std::string_view input,
                      std::string_view candidate) const override;
  FilterVerdict check_filter_criteria(std::string_view source,
                                      std::string_view ref) const override;

  bool check_fluency_problem(std::string_view text) const;
  bool check_tone_change(std::string_view a, std::string_view b) const;

 private:
  std::shared_ptr<const Vocabulary> dictionary_;
  RuleJudgeOptions options_;
};

struct HttpJudgeOptions {
  std::chrono::milliseconds timeout{30000};
  unsigned max_in_flight = 8;
};

// POST {path} {"task": "grammar"|"meaning"|"good_fix"|"filter",
//              "texts": [...]}
//   -> {"verdict": bool | object}
// Transport or protocol failures throw JudgeUnavailable.
class HttpJudge : public Judge {
 public:
  // endpoint: "http://host:port[/path]"; the path defaults to /judge.
  explicit HttpJudge(std::string endpoint, HttpJudgeOptions options = {});
  ~HttpJudge() override;

  bool check_grammar(std::string_view text) const override;
  bool check_same_meaning(std::string_view a,
                          std::string_view b) const override;
  bool check_good_fix(std::string_view input,
                      std::string_view candidate) const override;
  FilterVerdict check_filter_criteria(std::string_view source,
                                      std::string_view ref) const override;

 private:
  nlohmann::json post(std::string_view task,
                      const std::vector<std::string>& texts) const;
  bool post_bool(std::string_view task,
                 const std::vector<std::string>& texts) const;

  std::string base_;
  std::string path_;
  HttpJudgeOptions options_;
  mutable std::counting_semaphore<1024> in_flight_;
};

}  // namespace proofread

#endif  // PROOFREAD_JUDGE_H_
