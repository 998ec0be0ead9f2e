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

// Fixtures shared by the tests and the acceptance binary.

#ifndef PROOFREAD_TESTS_TEST_CORPORA_H_
#define PROOFREAD_TESTS_TEST_CORPORA_H_

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "oracles.h"
#include "proofread/decoder.h"
#include "proofread/error_synthesis.h"
#include "proofread/example.h"
#include "proofread/rng.h"
#include "proofread/text.h"
#include "proofread/vocabulary.h"

namespace proofread::test {

inline std::shared_ptr<const Vocabulary> english_vocab_ptr() {
  static const auto v = std::make_shared<const Vocabulary>(
      Vocabulary::load_tsv(oracle::shipped_dir() / "english_10k.tsv"));
  return v;
}

inline const Vocabulary& english_vocab() { return *english_vocab_ptr(); }

inline Vocabulary english_vocab_prefix(size_t n) {
  const auto& e = english_vocab().entries();
  return Vocabulary({e.begin(), e.begin() + static_cast<std::ptrdiff_t>(std::min(n, e.size()))});
}

// Fifty lowercase words of mixed length and frequency.
inline std::vector<std::pair<std::string, uint64_t>> fifty_word_vocab() {
  std::vector<std::pair<std::string, uint64_t>> out;
  const auto& e = english_vocab().entries();
  for (size_t i = 40; i < e.size() && out.size() < 50; i += 7) {
    const std::string& w = e[i].first;
    if (w.size() < 2 || !std::all_of(w.begin(), w.end(), [](char c) { return c >= 'a' && c <= 'z'; })) {
      continue;
    }
    out.push_back(e[i]);
  }
  return out;
}

inline std::vector<std::string> clean_lines() {
  return load_lines(oracle::data_dir() / "clean_corpus.txt");
}

// Fraction of reference words recovered in a longest-common-subsequence
// alignment of the whitespace tokens.
inline double word_accuracy(const std::string& reference, const std::string& output) {
  const std::vector<std::string> a = split_words(reference);
  const std::vector<std::string> b = split_words(output);
  if (a.empty()) return 1.0;
  std::vector<std::vector<size_t>> d(a.size() + 1, std::vector<size_t>(b.size() + 1, 0));
  for (size_t i = 1; i <= a.size(); ++i) {
    for (size_t j = 1; j <= b.size(); ++j) {
      d[i][j] = a[i - 1] == b[j - 1] ? d[i - 1][j - 1] + 1 : std::max(d[i - 1][j], d[i][j - 1]);
    }
  }
  return static_cast<double>(d[a.size()][b.size()]) / static_cast<double>(a.size());
}

struct Dominance {
  double simulate_accuracy = 0.0;
  double literal_accuracy = 0.0;
  double diff_lower95 = 0.0;  // one-sided bound on the mean paired gain
};

// Corrupts `n` corpus sentences with the default configuration, then compares
// word recovery of the full simulator against literal decoding.
inline Dominance decoder_dominance(const std::vector<std::string>& lines, const Vocabulary& vocab,
                                   size_t n, uint64_t seed) {
  const CorruptionConfig corruption;
  const SpatialModel model;
  std::vector<double> diffs;
  double sim = 0.0, lit = 0.0;
  for (size_t i = 0; i < n; ++i) {
    const std::string& line = lines[i % lines.size()];
    Rng rng(Rng::mix(seed, i));
    Rng corrupt_rng = rng.split(0);
    Rng decode_rng = rng.split(1);
    const std::string typed = corrupt(line, corruption, corrupt_rng).corrupted;
    const DecodeResult r = simulate(typed, model, vocab, {}, decode_rng);
    const double s = word_accuracy(line, r.corrected);
    const double l = word_accuracy(line, r.literal);
    sim += s;
    lit += l;
    diffs.push_back(s - l);
  }
  Dominance d;
  d.simulate_accuracy = sim / static_cast<double>(n);
  d.literal_accuracy = lit / static_cast<double>(n);
  d.diff_lower95 = oracle::mean_lower95(diffs).second;
  return d;
}

// Random strings over layout keys, capitals and off-layout characters.
inline std::string random_string(Rng& rng) {
  static const std::vector<std::string> alphabet = {
      "a", "b", "e", "h", "l", "o", "s", "t", " ", "'", ".", ",", "1",
      "H", "Q", "é", "ß", "😀", "\t", "l", "l", "o", "o"};
  std::string s;
  const size_t len = rng.below(60);
  for (size_t i = 0; i < len; ++i) s += alphabet[rng.below(alphabet.size())];
  return s;
}

inline CorruptionConfig random_corruption_config(Rng& rng, size_t i) {
  CorruptionConfig c;
  c.p_omit = 0.1 * rng.uniform();
  c.p_insert = 0.1 * rng.uniform();
  c.p_transpose = 0.1 * rng.uniform();
  c.p_double_tap = 0.1 * rng.uniform();
  c.p_omit_double = 0.3 * rng.uniform();
  c.p_positional = 0.2 * rng.uniform();
  c.uniform_insertion = (i % 7) == 0;
  c.seed = rng.engine()();
  return c;
}

inline std::u32string off_layout(std::string_view s, const KeyboardLayout& layout) {
  std::u32string out;
  for (char32_t ch : to_u32(s)) {
    if (!layout.contains(ch)) out.push_back(ch);
  }
  return out;
}

inline std::vector<oracle::BruteDecoder::Touch> plain_touches(const TouchSequence& t) {
  std::vector<oracle::BruteDecoder::Touch> out;
  for (const TouchEvent& e : t) out.push_back({e.point.x, e.point.y});
  return out;
}

struct BruteAgreement {
  size_t tokens = 0;
  size_t key_correct_mismatches = 0;
  size_t auto_correct_mismatches = 0;
  size_t key_corrections = 0;   // brute-force key correction differs from literal
  size_t auto_corrections = 0;  // same for auto correction
  std::string first_mismatch;
};

// Heavily corrupted words of the fifty-word vocabulary, decoded by the
// library correctors and by exhaustive vocabulary scoring.
inline BruteAgreement brute_force_agreement(size_t n, uint64_t seed) {
  const auto entries = fifty_word_vocab();
  const Vocabulary v(entries);
  const SpatialModel m;
  ChannelParams params;
  params.beam_width = 64;  // wider than the vocabulary: exhaustive
  oracle::BruteDecoder brute(entries, m.sigma_x, params);
  CorruptionConfig corruption;
  corruption.p_positional = 0.15;
  corruption.p_omit = corruption.p_insert = corruption.p_transpose = 0.04;
  Rng rng(seed);
  BruteAgreement a;
  for (size_t i = 0; i < n; ++i) {
    const std::string& word = entries[rng.below(entries.size())].first;
    const std::string typed = corrupt(word, corruption, rng).corrupted;
    if (typed.empty()) continue;
    const TouchSequence t = encode_touches(typed, m, rng);
    const auto bt = plain_touches(t);
    const std::string kc = brute.key_correct(bt);
    const std::string ac = brute.auto_correct(bt);
    ++a.tokens;
    if (key_correct(t, m, v, params.beam_width, params) != kc) {
      if (a.first_mismatch.empty()) a.first_mismatch = "key_correct '" + typed + "'";
      ++a.key_correct_mismatches;
    }
    if (auto_correct(t, m, v, params.max_ed, params).word != ac) {
      if (a.first_mismatch.empty()) a.first_mismatch = "auto_correct '" + typed + "'";
      ++a.auto_correct_mismatches;
    }
    a.key_corrections += kc != brute.literal(bt);
    a.auto_corrections += ac != brute.literal(bt);
  }
  return a;
}

}  // namespace proofread::test

#endif  // PROOFREAD_TESTS_TEST_CORPORA_H_
