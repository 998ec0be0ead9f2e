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

#include "proofread/decoder.h"

#include <algorithm>
#include <limits>

#include "proofread/errors.h"
#include "proofread/text.h"

namespace proofread {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

char32_t touch_char(const TouchEvent& t, const KeyboardLayout& layout) {
  return t.is_literal ? t.literal : nearest_key(layout, t.point);
}

double pair_log_likelihood(const TouchEvent& t, char32_t ch,
                           const SpatialModel& model) {
  if (t.is_literal) return t.literal == ch ? 0.0 : kNegInf;
  if (!model.layout->contains(ch)) return kNegInf;
  return touch_log_likelihood(model, t.point, ch);
}

std::u32string lowercase_literal(const TouchSequence& touches,
                                 const KeyboardLayout& layout) {
  std::u32string out;
  out.reserve(touches.size());
  for (const TouchEvent& t : touches) out.push_back(touch_char(t, layout));
  return out;
}

// Re-applies shift state. Same-length words copy it per position; otherwise
// a capitalized or all-caps pattern is carried over.
std::string restore_case(std::u32string word, const TouchSequence& touches) {
  if (word.size() == touches.size()) {
    for (size_t i = 0; i < word.size(); ++i) {
      if (touches[i].uppercase) word[i] = ascii_upper(word[i]);
    }
    return to_utf8(word);
  }
  if (touches.empty() || word.empty()) return to_utf8(word);
  const bool all_upper =
      touches.size() > 1 &&
      std::all_of(touches.begin(), touches.end(),
                  [](const TouchEvent& t) { return t.uppercase; });
  if (all_upper) {
    for (char32_t& c : word) c = ascii_upper(c);
  } else if (touches.front().uppercase) {
    word[0] = ascii_upper(word[0]);
  }
  return to_utf8(word);
}

bool has_literal_marker(const TouchSequence& touches) {
  return std::any_of(touches.begin(), touches.end(),
                     [](const TouchEvent& t) { return t.is_literal; });
}

Correction key_correct_scored(const TouchSequence& touches,
                              const SpatialModel& model,
                              const Vocabulary& vocab, size_t beam_width,
                              const ChannelParams& params) {
  const std::u32string literal = lowercase_literal(touches, *model.layout);
  const double lit_score = literal_score(touches, model, vocab, params);
  Correction fallback{restore_case(literal, touches), lit_score};
  if (touches.empty() || vocab.empty() || has_literal_marker(touches)) {
    return fallback;
  }

  struct Hyp {
    uint32_t node;
    double score;
    std::u32string prefix;
  };
  const Trie& trie = vocab.trie();
  std::vector<Hyp> beam{{Trie::kRoot, 0.0, U""}};
  std::vector<Hyp> next;
  for (const TouchEvent& t : touches) {
    next.clear();
    for (const Hyp& h : beam) {
      const auto& parent = trie.node(h.node);
      const double parent_count = static_cast<double>(parent.prefix_count);
      for (const auto& [ch, child] : parent.children) {
        const double ll = pair_log_likelihood(t, ch, model);
        if (ll == kNegInf) continue;
        const double cont = std::log(
            static_cast<double>(trie.node(child).prefix_count) / parent_count);
        Hyp n{child, h.score + ll + cont, h.prefix};
        n.prefix.push_back(ch);
        next.push_back(std::move(n));
      }
    }
    const size_t keep = std::min(beam_width, next.size());
    std::partial_sort(next.begin(), next.begin() + keep, next.end(),
                      [](const Hyp& a, const Hyp& b) {
                        if (a.score != b.score) return a.score > b.score;
                        return a.prefix < b.prefix;
                      });
    next.resize(keep);
    beam.swap(next);
    if (beam.empty()) return fallback;
  }

  const Hyp* best = nullptr;
  double best_score = kNegInf;
  for (const Hyp& h : beam) {
    const auto& n = trie.node(h.node);
    if (n.end_count == 0) continue;
    const double s = h.score + std::log(static_cast<double>(n.end_count) /
                                        static_cast<double>(n.prefix_count));
    if (best == nullptr || s > best_score ||
        (s == best_score && h.prefix < best->prefix)) {
      best = &h;
      best_score = s;
    }
  }
  if (best == nullptr || best->prefix == literal) return fallback;
  if (best_score - lit_score > params.margin) {
    return {restore_case(best->prefix, touches), best_score};
  }
  return fallback;
}

}  // namespace

nlohmann::json ChannelParams::to_json() const {
  return {{"indel_log_penalty", indel_log_penalty},
          {"margin", margin},
          {"oov_log_prior", oov_log_prior},
          {"max_ed", max_ed},
          {"beam_width", beam_width}};
}

ChannelParams ChannelParams::from_json(const nlohmann::json& j) {
  ChannelParams p;
  try {
    p.indel_log_penalty = j.value("indel_log_penalty", p.indel_log_penalty);
    p.margin = j.value("margin", p.margin);
    p.oov_log_prior = j.value("oov_log_prior", p.oov_log_prior);
    p.max_ed = j.value("max_ed", p.max_ed);
    p.beam_width = j.value("beam_width", p.beam_width);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("malformed decoder config: ") + e.what());
  }
  if (p.beam_width < 1) throw InvalidArgument("beam_width must be >= 1");
  return p;
}

TouchSequence encode_touches(std::string_view text, const SpatialModel& model,
                             Rng& rng) {
  const KeyboardLayout& layout = *model.layout;
  TouchSequence out;
  for (char32_t ch : to_u32(text)) {
    TouchEvent ev;
    char32_t key = ch;
    if (!layout.contains(key)) {
      const char32_t lower = ascii_lower(ch);
      if (lower != ch && layout.contains(lower)) {
        key = lower;
        ev.uppercase = true;
      } else {
        ev.is_literal = true;
        ev.literal = ch;
        out.push_back(ev);
        continue;
      }
    }
    ev.point = sample_touch(model, key, rng);
    out.push_back(ev);
  }
  return out;
}

std::string literal_decode(const TouchSequence& touches,
                           const KeyboardLayout& layout) {
  std::u32string out;
  out.reserve(touches.size());
  for (const TouchEvent& t : touches) {
    const char32_t c = touch_char(t, layout);
    out.push_back(t.uppercase ? ascii_upper(c) : c);
  }
  return to_utf8(out);
}

double channel_score(const TouchSequence& touches,
                     std::u32string_view candidate, const SpatialModel& model,
                     double indel_log_penalty) {
  const size_t n = touches.size();
  const size_t m = candidate.size();
  struct Cell {
    size_t edits;
    double score;
  };
  auto better = [](const Cell& a, const Cell& b) {
    return a.edits < b.edits || (a.edits == b.edits && a.score > b.score);
  };
  std::u32string literal = lowercase_literal(touches, *model.layout);
  std::vector<Cell> prev(m + 1), cur(m + 1);
  for (size_t j = 0; j <= m; ++j) {
    prev[j] = {j, static_cast<double>(j) * indel_log_penalty};
  }
  for (size_t i = 1; i <= n; ++i) {
    cur[0] = {i, static_cast<double>(i) * indel_log_penalty};
    for (size_t j = 1; j <= m; ++j) {
      const char32_t c = candidate[j - 1];
      Cell best{prev[j - 1].edits + (literal[i - 1] == c ? 0 : 1),
                prev[j - 1].score +
                    pair_log_likelihood(touches[i - 1], c, model)};
      const Cell drop_touch{prev[j].edits + 1, prev[j].score + indel_log_penalty};
      const Cell skip_char{cur[j - 1].edits + 1,
                           cur[j - 1].score + indel_log_penalty};
      if (better(drop_touch, best)) best = drop_touch;
      if (better(skip_char, best)) best = skip_char;
      cur[j] = best;
    }
    std::swap(prev, cur);
  }
  return prev[m].score;
}

double literal_score(const TouchSequence& touches, const SpatialModel& model,
                     const Vocabulary& vocab, const ChannelParams& params) {
  const std::u32string literal = lowercase_literal(touches, *model.layout);
  double channel = 0.0;
  for (size_t i = 0; i < touches.size(); ++i) {
    channel += pair_log_likelihood(touches[i], literal[i], model);
  }
  const std::string word = to_utf8(literal);
  return channel +
         (vocab.contains(word) ? vocab.log_prior(word) : params.oov_log_prior);
}

std::string key_correct(const TouchSequence& touches, const SpatialModel& model,
                        const Vocabulary& vocab, size_t beam_width,
                        const ChannelParams& params) {
  if (beam_width < 1) throw InvalidArgument("beam width must be >= 1");
  return key_correct_scored(touches, model, vocab, beam_width, params).word;
}

Correction auto_correct(const TouchSequence& word_touches,
                        const SpatialModel& model, const Vocabulary& vocab,
                        size_t max_ed, const ChannelParams& params) {
  const std::u32string literal = lowercase_literal(word_touches, *model.layout);
  const double lit_score = literal_score(word_touches, model, vocab, params);
  const Correction fallback{restore_case(literal, word_touches), lit_score};
  if (vocab.empty() || literal.empty() || vocab.contains(to_utf8(literal))) {
    return fallback;
  }
  std::string best;
  double best_score = kNegInf;
  for (const std::string& w : vocab.words_within(literal, max_ed)) {
    const double s =
        vocab.log_prior(w) +
        channel_score(word_touches, to_u32(w), model, params.indel_log_penalty);
    // Candidates arrive sorted, so strict > keeps the lexicographic first.
    if (best.empty() || s > best_score) {
      best = w;
      best_score = s;
    }
  }
  if (!best.empty() && best_score - lit_score > params.margin) {
    return {restore_case(to_u32(best), word_touches), best_score};
  }
  return fallback;
}

nlohmann::json DecodeResult::to_json() const {
  nlohmann::json words = nlohmann::json::array();
  for (const WordDecode& w : per_word) {
    words.push_back({{"literal_word", w.literal_word},
                     {"committed_word", w.committed_word},
                     {"score", w.score}});
  }
  return {{"literal", literal}, {"corrected", corrected}, {"per_word", words}};
}

DecodeResult simulate(std::string_view corrupted, const SpatialModel& model,
                      const Vocabulary& vocab, const SimulatorConfig& config,
                      Rng& rng) {
  model.validate();
  const Tokenized tokens = tokenize_whitespace(corrupted);
  DecodeResult out;
  out.separators = tokens.separators;
  Tokenized literal_tokens{{}, tokens.separators};
  Tokenized committed_tokens{{}, tokens.separators};

  for (size_t ti = 0; ti < tokens.tokens.size(); ++ti) {
    Rng token_rng = rng.split(ti);
    const std::u32string u = to_u32(tokens.tokens[ti]);
    const TouchSequence touches =
        encode_touches(tokens.tokens[ti], model, token_rng);
    const std::string literal = literal_decode(touches, *model.layout);
    const std::u32string literal_u = to_u32(literal);

    // Correctable core: first to last ASCII letter, letters and apostrophes
    // only. Surrounding punctuation keeps its literal decoding.
    size_t begin = 0;
    while (begin < u.size() && !is_ascii_letter(u[begin])) ++begin;
    size_t end = u.size();
    while (end > begin && !is_ascii_letter(u[end - 1])) --end;
    const bool eligible =
        begin < end &&
        std::all_of(u.begin() + begin, u.begin() + end, [](char32_t c) {
          return is_ascii_letter(c) || c == U'\'';
        });

    WordDecode wd{literal, literal, 0.0};
    if (eligible) {
      const TouchSequence core(touches.begin() + begin, touches.begin() + end);
      Correction c{literal_decode(core, *model.layout),
                   literal_score(core, model, vocab, config.channel)};
      if (config.key_correction) {
        c = key_correct_scored(core, model, vocab, config.channel.beam_width,
                               config.channel);
      }
      if (config.auto_correction && !vocab.contains(ascii_lower(c.word))) {
        c = auto_correct(core, model, vocab, config.channel.max_ed,
                         config.channel);
      }
      wd.committed_word = to_utf8(literal_u.substr(0, begin)) + c.word +
                          to_utf8(literal_u.substr(end));
      wd.score = c.score;
    } else {
      for (size_t i = 0; i < touches.size(); ++i) {
        wd.score += pair_log_likelihood(touches[i],
                                        ascii_lower(literal_u[i]), model);
      }
    }
    literal_tokens.tokens.push_back(wd.literal_word);
    committed_tokens.tokens.push_back(wd.committed_word);
    out.per_word.push_back(std::move(wd));
  }
  out.literal = literal_tokens.join();
  out.corrected = committed_tokens.join();
  return out;
}

}  // namespace proofread
