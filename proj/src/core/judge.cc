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

#include <algorithm>
#include <optional>
#include <string_view>
#include <unordered_map>
#include <unordered_set>

#include "proofread/errors.h"
#include "proofread/text.h"
#include "proofread/text_patterns.h"

namespace proofread {

nlohmann::json FilterVerdict::to_json() const {
  return {{"ref_has_errors", ref_has_errors},
          {"ref_not_fluent", ref_not_fluent},
          {"ref_diff_meaning", ref_diff_meaning},
          {"ref_diff_tone", ref_diff_tone},
          {"keep", keep}};
}

FilterVerdict FilterVerdict::from_json(const nlohmann::json& j) {
  FilterVerdict v;
  v.ref_has_errors = j.value("ref_has_errors", false);
  v.ref_not_fluent = j.value("ref_not_fluent", false);
  v.ref_diff_meaning = j.value("ref_diff_meaning", false);
  v.ref_diff_tone = j.value("ref_diff_tone", false);
  v.keep = !(v.ref_has_errors || v.ref_not_fluent || v.ref_diff_meaning ||
             v.ref_diff_tone);
  return v;
}

namespace {

const std::unordered_set<std::string>& stopwords() {
  static const std::unordered_set<std::string> words = {
      "a",     "an",    "the",   "and",   "or",    "but",   "if",    "of",
      "to",    "in",    "on",    "at",    "by",    "for",   "with",  "from",
      "as",    "into",  "about", "up",    "out",   "so",    "than",  "then",
      "i",     "me",    "my",    "we",    "us",    "our",   "you",   "your",
      "he",    "him",   "his",   "she",   "her",   "it",    "its",   "they",
      "them",  "their", "this",  "that",  "these", "those", "there", "here",
      "is",    "am",    "are",   "was",   "were",  "be",    "been",  "being",
      "do",    "does",  "did",   "have",  "has",   "had",   "will",  "would",
      "shall", "should", "can",  "could", "may",   "might", "must",  "just",
      "very",  "too",   "also",  "some",  "any",   "all",   "what",  "which",
      "who",   "whom",  "when",  "where", "why",   "how",   "it's",  "i'm",
      "i'll",  "i've",  "i'd",   "you're", "we're", "they're", "let's",
      "that's", "there's", "please", "oh", "hey", "hi", "okay", "ok"};
  return words;
}

const std::unordered_set<std::string>& negations() {
  static const std::unordered_set<std::string> words = {
      "not", "no", "never", "nothing", "nobody", "none", "neither", "nor",
      "cannot", "without", "nowhere"};
  return words;
}

bool is_negation(const std::string& w) {
  return negations().count(w) > 0 ||
         (w.size() > 3 && w.compare(w.size() - 3, 3, "n't") == 0);
}

// Canonical tense/modal marker carried by a word, if any.
std::optional<std::string> tense_marker(const std::string& w) {
  static const std::unordered_map<std::string, std::string> table = {
      {"am", "am"},         {"is", "is"},         {"are", "are"},
      {"was", "was"},       {"were", "were"},     {"been", "been"},
      {"being", "being"},   {"will", "will"},     {"would", "would"},
      {"shall", "shall"},   {"should", "should"}, {"can", "can"},
      {"could", "could"},   {"may", "may"},       {"might", "might"},
      {"must", "must"},     {"do", "do"},         {"does", "does"},
      {"did", "did"},       {"has", "has"},       {"have", "have"},
      {"had", "had"},       {"won't", "will"},    {"can't", "can"},
      {"don't", "do"},      {"doesn't", "does"},  {"didn't", "did"},
      {"isn't", "is"},      {"aren't", "are"},    {"wasn't", "was"},
      {"weren't", "were"},  {"hasn't", "has"},    {"haven't", "have"},
      {"hadn't", "had"},    {"wouldn't", "would"}, {"couldn't", "could"},
      {"shouldn't", "should"}};
  if (auto it = table.find(w); it != table.end()) return it->second;
  static const std::pair<std::string_view, std::string_view> suffixes[] = {
      {"'ll", "will"}, {"'d", "would"}, {"'re", "are"},
      {"'ve", "have"}, {"'m", "am"},    {"'s", "is"}};
  for (const auto& [suffix, marker] : suffixes) {
    if (w.size() > suffix.size() &&
        w.compare(w.size() - suffix.size(), suffix.size(), suffix) == 0) {
      return std::string(marker);
    }
  }
  return std::nullopt;
}

struct Word {
  std::string text;  // lowercased, edge punctuation stripped
  bool alphabetic;   // ASCII letters and apostrophes only
  bool is_protected;
};

std::vector<Word> words_of(std::string_view text) {
  std::vector<Word> out;
  for (const std::string& tok : split_words(text)) {
    if (is_protected_token(tok)) {
      out.push_back({tok, false, true});
      continue;
    }
    const std::u32string u = to_u32(tok);
    auto keep = [](char32_t c) {
      return c > 0x7f || std::isalnum(static_cast<int>(c));
    };
    size_t b = 0, e = u.size();
    while (b < e && !keep(u[b])) ++b;
    while (e > b && !keep(u[e - 1])) --e;
    if (b == e) continue;  // pure punctuation
    std::u32string core = u.substr(b, e - b);
    for (char32_t& c : core) c = ascii_lower(c);
    const bool alpha = std::all_of(core.begin(), core.end(), [](char32_t c) {
      return is_ascii_letter(c) || c == U'\'';
    });
    out.push_back({to_utf8(core), alpha, false});
  }
  return out;
}

bool fuzzy_equal(const std::string& a, const std::string& b) {
  if (a == b) return true;
  const size_t len = std::min(a.size(), b.size());
  const size_t allowed = len <= 4 ? 1 : 2;
  const size_t diff = a.size() > b.size() ? a.size() - b.size()
                                          : b.size() - a.size();
  if (diff > allowed) return false;
  return osa_distance(to_u32(a), to_u32(b)) <= allowed;
}

// Token alignment (unit-cost Levenshtein, fuzzy equality is a free match).
std::vector<std::pair<size_t, size_t>> align(const std::vector<Word>& a,
                                             const std::vector<Word>& b) {
  const size_t n = a.size(), m = b.size();
  std::vector<std::vector<size_t>> d(n + 1, std::vector<size_t>(m + 1));
  for (size_t i = 0; i <= n; ++i) d[i][0] = i;
  for (size_t j = 0; j <= m; ++j) d[0][j] = j;
  for (size_t i = 1; i <= n; ++i) {
    for (size_t j = 1; j <= m; ++j) {
      const size_t sub = fuzzy_equal(a[i - 1].text, b[j - 1].text) ? 0 : 1;
      d[i][j] = std::min({d[i - 1][j] + 1, d[i][j - 1] + 1,
                          d[i - 1][j - 1] + sub});
    }
  }
  std::vector<std::pair<size_t, size_t>> pairs;
  size_t i = n, j = m;
  while (i > 0 && j > 0) {
    const size_t sub = fuzzy_equal(a[i - 1].text, b[j - 1].text) ? 0 : 1;
    if (d[i][j] == d[i - 1][j - 1] + sub) {
      pairs.emplace_back(i - 1, j - 1);
      --i;
      --j;
    } else if (d[i][j] == d[i - 1][j] + 1) {
      --i;
    } else {
      --j;
    }
  }
  std::reverse(pairs.begin(), pairs.end());
  return pairs;
}

// Largest count among dictionary words one edit (insertion, deletion,
// substitution or adjacent swap) away from `w`.
uint64_t max_neighbour_count(const Vocabulary& dict, const std::string& w) {
  static constexpr std::string_view kAlphabet = "abcdefghijklmnopqrstuvwxyz'";
  uint64_t best = 0;
  auto consider = [&](const std::string& v) {
    if (v != w) best = std::max(best, dict.count(v));
  };
  std::string v;
  for (size_t i = 0; i <= w.size(); ++i) {
    for (char c : kAlphabet) {
      v = w;
      v.insert(v.begin() + i, c);
      consider(v);
      if (i < w.size()) {
        v = w;
        v[i] = c;
        consider(v);
      }
    }
    if (i < w.size()) {
      v = w;
      v.erase(i, 1);
      consider(v);
    }
    if (i + 1 < w.size()) {
      v = w;
      std::swap(v[i], v[i + 1]);
      consider(v);
    }
  }
  return best;
}

bool is_separator_punct(char c) { return c == ',' || c == '.' || c == ';' || c == ':'; }

// ",," ".," ";." and the like inside a non-protected token; "..." is fine.
bool has_punct_run(std::string_view tok) {
  for (size_t i = 0; i + 1 < tok.size(); ++i) {
    const char a = tok[i], b = tok[i + 1];
    if (!is_separator_punct(a) || !is_separator_punct(b)) continue;
    if (a == '.' && b == '.') continue;
    return true;
  }
  return false;
}

}  // namespace

RuleJudge::RuleJudge(std::shared_ptr<const Vocabulary> dictionary,
                     RuleJudgeOptions options)
    : dictionary_(std::move(dictionary)), options_(options) {
  if (!dictionary_) throw InvalidArgument("rule judge needs a dictionary");
}

bool RuleJudge::check_grammar(std::string_view text) const {
  if (text.find("  ") != std::string_view::npos) return true;
  for (const std::string& tok : split_words(text)) {
    if (!is_protected_token(tok) && has_punct_run(tok)) return true;
  }
  const std::vector<Word> words = words_of(text);
  for (size_t i = 0; i < words.size(); ++i) {
    const Word& w = words[i];
    if (w.is_protected) continue;
    const bool has_letter =
        std::any_of(w.text.begin(), w.text.end(),
                    [](char c) { return std::isalpha(static_cast<unsigned char>(c)); }) ||
        std::any_of(w.text.begin(), w.text.end(),
                    [](char c) { return static_cast<unsigned char>(c) > 0x7f; });
    if (!has_letter) continue;
    if (!w.alphabetic || !dictionary_->contains(w.text)) return true;
    if (w.text.size() == 1 && w.text != "a" && w.text != "i") return true;
    if (options_.confusable_ratio > 0.0 &&
        w.text.size() <= options_.confusable_max_length &&
        static_cast<double>(max_neighbour_count(*dictionary_, w.text)) >=
            options_.confusable_ratio *
                static_cast<double>(dictionary_->count(w.text))) {
      return true;
    }
    if (i > 0 && !words[i - 1].is_protected && words[i - 1].text == w.text) {
      return true;
    }
  }
  return false;
}

bool RuleJudge::check_same_meaning(std::string_view a,
                                   std::string_view b) const {
  const std::vector<Word> wa = words_of(a);
  const std::vector<Word> wb = words_of(b);
  auto negation_parity = [](const std::vector<Word>& ws) {
    size_t n = 0;
    for (const Word& w : ws) n += is_negation(w.text) ? 1 : 0;
    return n % 2;
  };
  if (negation_parity(wa) != negation_parity(wb)) return false;

  auto content = [](const std::vector<Word>& ws) {
    std::vector<std::string> out;
    for (const Word& w : ws) {
      if (stopwords().count(w.text) == 0 && !is_negation(w.text)) {
        out.push_back(w.text);
      }
    }
    return out;
  };
  std::vector<std::string> ca = content(wa);
  std::vector<std::string> cb = content(wb);
  if (ca.empty() && cb.empty()) {
    // Only function words: compare them instead.
    for (const Word& w : wa) ca.push_back(w.text);
    for (const Word& w : wb) cb.push_back(w.text);
    if (ca.empty() && cb.empty()) return true;
  }
  const size_t denom = std::max(ca.size(), cb.size());
  std::vector<bool> used(cb.size(), false);
  size_t matched = 0;
  for (const std::string& x : ca) {
    std::optional<size_t> hit;
    for (size_t j = 0; j < cb.size() && !hit; ++j) {
      if (!used[j] && cb[j] == x) hit = j;
    }
    for (size_t j = 0; j < cb.size() && !hit; ++j) {
      if (!used[j] && fuzzy_equal(cb[j], x)) hit = j;
    }
    if (hit) {
      used[*hit] = true;
      ++matched;
    }
  }
  return static_cast<double>(matched) >=
         options_.min_content_overlap * static_cast<double>(denom);
}

bool RuleJudge::check_good_fix(std::string_view input,
                               std::string_view candidate) const {
  return !check_grammar(candidate) && check_same_meaning(input, candidate);
}

bool RuleJudge::check_fluency_problem(std::string_view text) const {
  const std::vector<Word> words = words_of(text);
  const bool any_alpha = std::any_of(words.begin(), words.end(),
                                     [](const Word& w) { return w.alphabetic; });
  if (!any_alpha) return true;
  for (size_t i = 1; i < words.size(); ++i) {
    if (words[i].alphabetic && words[i].text == words[i - 1].text) return true;
  }
  return false;
}

bool RuleJudge::check_tone_change(std::string_view a,
                                  std::string_view b) const {
  const std::vector<Word> wa = words_of(a);
  const std::vector<Word> wb = words_of(b);
  for (const auto& [i, j] : align(wa, wb)) {
    const auto ma = tense_marker(wa[i].text);
    const auto mb = tense_marker(wb[j].text);
    if (ma && mb && *ma != *mb) return true;
  }
  return false;
}

FilterVerdict RuleJudge::check_filter_criteria(std::string_view source,
                                               std::string_view ref) const {
  FilterVerdict v;
  v.ref_has_errors = check_grammar(ref);
  v.ref_not_fluent = check_fluency_problem(ref);
  v.ref_diff_meaning = !check_same_meaning(source, ref);
  v.ref_diff_tone = check_tone_change(source, ref);
  v.keep = !(v.ref_has_errors || v.ref_not_fluent || v.ref_diff_meaning ||
             v.ref_diff_tone);
  return v;
}

}  // namespace proofread
