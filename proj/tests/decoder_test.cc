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

#include <gtest/gtest.h>

#include <iostream>
#include <sstream>

#include "oracles.h"
#include "proofread/error_synthesis.h"
#include "proofread/errors.h"
#include "proofread/example.h"
#include "proofread/text.h"
#include "proofread/vocabulary.h"
#include "test_corpora.h"

namespace proofread {
namespace {

const KeyboardLayout& qwerty() { return *KeyboardLayout::qwerty(); }

TouchSequence at_centers(std::string_view word) {
  TouchSequence t;
  for (char c : word) {
    TouchEvent e;
    e.point = key_center(qwerty(), static_cast<char32_t>(c));
    t.push_back(e);
  }
  return t;
}

TEST(VocabularyTest, ParseAndCounts) {
  std::istringstream in("# comment\nhello\t1000\n\nhallo\t10\n");
  const Vocabulary v = Vocabulary::parse_tsv(in);
  EXPECT_EQ(v.size(), 2u);
  EXPECT_EQ(v.total(), 1010u);
  EXPECT_EQ(v.count("hello"), 1000u);
  EXPECT_FALSE(v.contains("hullo"));
  EXPECT_DOUBLE_EQ(v.log_prior("hallo"), std::log(10.0 / 1010.0));
  EXPECT_EQ(v.trie().node(Trie::kRoot).prefix_count, 1010u);
  EXPECT_EQ(v.trie().word_count(), 2u);
}

TEST(VocabularyTest, RejectsBadEntries) {
  std::istringstream zero("a\t0\n");
  EXPECT_THROW(Vocabulary::parse_tsv(zero), InvalidArgument);
  std::istringstream dup("a\t1\na\t2\n");
  EXPECT_THROW(Vocabulary::parse_tsv(dup), InvalidArgument);
  std::istringstream bad("a\tx\n");
  EXPECT_THROW(Vocabulary::parse_tsv(bad), InvalidArgument);
  EXPECT_THROW(Vocabulary::load_tsv("/nonexistent/vocab.tsv"), IoError);
}

TEST(VocabularyTest, WordsWithinMatchesBruteForce) {
  const Vocabulary v = test::english_vocab_prefix(2000);
  Rng rng(8);
  for (int i = 0; i < 60; ++i) {
    std::string probe = v.entries()[rng.below(v.size())].first;
    if (!probe.empty()) probe[rng.below(probe.size())] = static_cast<char>('a' + rng.below(26));
    for (size_t ed = 0; ed <= 2; ++ed) {
      std::vector<std::string> expect;
      for (const auto& [w, c] : v.entries()) {
        if (oracle::edit_distance(probe, w) <= ed) expect.push_back(w);
      }
      std::sort(expect.begin(), expect.end());
      std::vector<std::string> got = v.words_within(to_u32(probe), ed);
      std::sort(got.begin(), got.end());
      EXPECT_EQ(got, expect) << probe << " ed=" << ed;
    }
  }
}

TEST(DecoderTest, EncodeTouches) {
  Rng rng(1);
  const TouchSequence t = encode_touches("hi", SpatialModel::isotropic(0.0), rng);
  ASSERT_EQ(t.size(), 2u);
  EXPECT_EQ(t[0].point.x, key_center(qwerty(), U'h').x);
  EXPECT_EQ(t[1].point.y, key_center(qwerty(), U'i').y);
  EXPECT_TRUE(encode_touches("", SpatialModel{}, rng).empty());

  const TouchSequence u = encode_touches("Hé", SpatialModel::isotropic(0.0), rng);
  ASSERT_EQ(u.size(), 2u);
  EXPECT_TRUE(u[0].uppercase);
  EXPECT_TRUE(u[1].is_literal);
  EXPECT_EQ(u[1].literal, U'é');
  EXPECT_EQ(literal_decode(u, qwerty()), "Hé");

  Rng a(5), b(5);
  const TouchSequence x = encode_touches("determinism", SpatialModel{}, a);
  const TouchSequence y = encode_touches("determinism", SpatialModel{}, b);
  for (size_t i = 0; i < x.size(); ++i) {
    EXPECT_EQ(x[i].point.x, y[i].point.x);
    EXPECT_EQ(x[i].point.y, y[i].point.y);
  }
}

TEST(DecoderTest, LiteralDecode) {
  EXPECT_EQ(literal_decode(at_centers("cat"), qwerty()), "cat");
  EXPECT_EQ(literal_decode({}, qwerty()), "");
  const TouchPoint h = key_center(qwerty(), U'h');
  const TouchPoint j = key_center(qwerty(), U'j');
  TouchEvent e;
  e.point = {0.4 * h.x + 0.6 * j.x, h.y};
  EXPECT_EQ(literal_decode({e}, qwerty()), "j");
}

TEST(DecoderTest, KeyCorrectKeepsExactVocabularyWord) {
  const Vocabulary v = test::english_vocab();
  EXPECT_EQ(key_correct(at_centers("house"), SpatialModel{}, v, 8), "house");
  EXPECT_THROW(key_correct(at_centers("house"), SpatialModel{}, v, 0), InvalidArgument);
}

TEST(DecoderTest, KeyCorrectPrefersFrequentWordNearBoundary) {
  const Vocabulary v({{"hello", 1000}, {"jello", 1}});
  TouchSequence t = at_centers("jello");
  const TouchPoint h = key_center(qwerty(), U'h');
  const TouchPoint j = key_center(qwerty(), U'j');
  t[0].point = {0.45 * h.x + 0.55 * j.x, h.y};
  const SpatialModel m;
  const ChannelParams params;
  EXPECT_EQ(key_correct(t, m, v, 8, params), "hello");

  // Brute force: both candidates scored from the documented formula.
  oracle::BruteDecoder brute({{"hello", 1000}, {"jello", 1}}, m.sigma_x, params);
  std::vector<oracle::BruteDecoder::Touch> bt;
  for (const TouchEvent& e : t) bt.push_back({e.point.x, e.point.y});
  EXPECT_EQ(brute.key_correct(bt), "hello");
}

TEST(DecoderTest, KeyCorrectBeamOneWithUniformPriorIsLiteral) {
  // Every three-letter string once: the trie continuation is uniform.
  std::vector<std::pair<std::string, uint64_t>> all;
  for (char a = 'a'; a <= 'z'; ++a) {
    for (char b = 'a'; b <= 'z'; ++b) {
      for (char c = 'a'; c <= 'z'; ++c) all.push_back({std::string{a, b, c}, 1});
    }
  }
  const Vocabulary v(all);
  const SpatialModel m;
  Rng rng(31);
  int checked = 0;
  while (checked < 100) {
    std::string s;
    for (int i = 0; i < 3; ++i) s.push_back(static_cast<char>('a' + rng.below(26)));
    const TouchSequence t = encode_touches(s, m, rng);
    const std::string literal = literal_decode(t, qwerty());
    if (!std::all_of(literal.begin(), literal.end(), [](char c) { return c >= 'a' && c <= 'z'; })) {
      continue;  // greedy over letters differs from nearest key here
    }
    EXPECT_EQ(key_correct(t, m, v, 1), literal);
    ++checked;
  }
}

TEST(DecoderTest, AutoCorrectExamples) {
  const Vocabulary v({{"hello", 1000}, {"hallo", 10}});
  const SpatialModel m;
  EXPECT_EQ(auto_correct(at_centers("hllo"), m, v, 2).word, "hello");
  EXPECT_EQ(auto_correct(at_centers("hallo"), m, v, 2).word, "hallo");
  EXPECT_EQ(auto_correct(at_centers("hllo"), m, Vocabulary(), 2).word, "hllo");
  EXPECT_EQ(auto_correct(at_centers("xqzv"), m, v, 2).word, "xqzv");
}

TEST(DecoderTest, MatchesBruteForceOnFiftyWordVocabulary) {
  const test::BruteAgreement a = test::brute_force_agreement(3000, 77);
  EXPECT_EQ(a.key_correct_mismatches, 0u) << a.first_mismatch;
  EXPECT_EQ(a.auto_correct_mismatches, 0u) << a.first_mismatch;
  // Both correctors must actually fire for the comparison to mean anything.
  EXPECT_GT(a.key_corrections, 100u);
  EXPECT_GT(a.auto_corrections, 100u);
  std::cout << "key corrections " << a.key_corrections << ", auto corrections "
            << a.auto_corrections << "\n";
}

TEST(DecoderTest, SimulateMatchesBruteForcePerToken) {
  const auto entries = test::fifty_word_vocab();
  const Vocabulary v(entries);
  const SpatialModel m;
  SimulatorConfig cfg;
  cfg.channel.beam_width = 64;
  oracle::BruteDecoder brute(entries, m.sigma_x, cfg.channel);
  Rng pick(5);
  for (int s = 0; s < 300; ++s) {
    std::string sentence;
    for (int k = 0; k < 6; ++k) {
      if (k) sentence += ' ';
      sentence += entries[pick.below(entries.size())].first;
    }
    Rng rng(static_cast<uint64_t>(s));
    const DecodeResult r = simulate(sentence, m, v, cfg, rng);
    const Tokenized tok = tokenize_whitespace(sentence);
    ASSERT_EQ(r.per_word.size(), tok.tokens.size());
    Rng replay_rng(static_cast<uint64_t>(s));
    for (size_t i = 0; i < tok.tokens.size(); ++i) {
      // Token i is typed from stream split(i) of the sentence stream.
      Rng token_rng = replay_rng.split(i);
      const TouchSequence t = encode_touches(tok.tokens[i], m, token_rng);
      const std::string literal = literal_decode(t, qwerty());
      if (!std::all_of(literal.begin(), literal.end(), [](char c) { return c >= 'a' && c <= 'z'; })) {
        continue;  // punctuation edges are outside the brute-force model
      }
      EXPECT_EQ(r.per_word[i].literal_word, literal);
      EXPECT_EQ(r.per_word[i].committed_word, brute.decode_word(test::plain_touches(t)));
    }
  }
}

TEST(DecoderTest, AutoCorrectOutputIsLiteralOrNearbyWord) {
  const Vocabulary v = test::english_vocab();
  const SpatialModel m;
  Rng rng(12);
  const auto lines = load_lines(oracle::data_dir() / "clean_corpus.txt");
  CorruptionConfig c;
  for (int i = 0; i < 300; ++i) {
    const Corruption cor = corrupt(lines[i], c, rng);
    for (const std::string& tok : split_words(cor.corrupted)) {
      if (!std::all_of(tok.begin(), tok.end(), [](char ch) { return std::isalpha(static_cast<unsigned char>(ch)); })) {
        continue;
      }
      const TouchSequence t = encode_touches(ascii_lower(tok), m, rng);
      const std::string literal = literal_decode(t, qwerty());
      const std::string out = auto_correct(t, m, v, 2).word;
      EXPECT_TRUE(out == literal || (v.contains(out) && oracle::edit_distance(out, literal) <= 2))
          << literal << " -> " << out;
    }
  }
}

TEST(DecoderTest, SimulateIdentityAtZeroSigma) {
  const Vocabulary v = test::english_vocab();
  Rng rng(3);
  const std::string s = "We will  share the report this afternoon";
  const DecodeResult r = simulate(s, SpatialModel::isotropic(0.0), v, {}, rng);
  EXPECT_EQ(r.corrected, s);
  EXPECT_EQ(r.literal, s);
}

TEST(DecoderTest, SimulatePreservesSeparatorsAndIsDeterministic) {
  const Vocabulary v = test::english_vocab();
  const std::string s = "  Helo\tthere,\n frend :) https://example.com ";
  Rng a(9), b(9);
  const DecodeResult x = simulate(s, SpatialModel{}, v, {}, a);
  const DecodeResult y = simulate(s, SpatialModel{}, v, {}, b);
  EXPECT_EQ(x.to_json(), y.to_json());
  ASSERT_EQ(x.separators.size(), x.per_word.size() + 1);
  std::string rebuilt = x.separators[0];
  for (size_t i = 0; i < x.per_word.size(); ++i) {
    rebuilt += x.per_word[i].committed_word + x.separators[i + 1];
  }
  EXPECT_EQ(rebuilt, x.corrected);
  EXPECT_EQ(x.separators.front(), "  ");
  EXPECT_EQ(x.separators[1], "\t");
}

TEST(DecoderTest, HelloWorld) {
  const Vocabulary v = test::english_vocab();
  int fixed = 0;
  for (uint64_t seed = 0; seed < 20; ++seed) {
    Rng rng(seed);
    fixed += simulate("hllo wrld", SpatialModel{}, v, {}, rng).corrected == "hello world";
  }
  // Touch noise may occasionally push a key beyond reach; most runs recover.
  EXPECT_GE(fixed, 16);
  Rng rng(0);
  EXPECT_EQ(simulate("hllo wrld", SpatialModel::isotropic(0.0), v, {}, rng).corrected,
            "hello world");
}

TEST(DecoderTest, RecoveryDominatesLiteralDecoding) {
  const Vocabulary v = test::english_vocab();
  const auto lines = load_lines(oracle::data_dir() / "clean_corpus.txt");
  const test::Dominance d = test::decoder_dominance(lines, v, 1000, 2026);
  std::cout << "simulate " << d.simulate_accuracy << " literal " << d.literal_accuracy
            << " gain lower95 " << d.diff_lower95 << "\n";
  EXPECT_GE(d.simulate_accuracy, d.literal_accuracy);
  EXPECT_GT(d.diff_lower95, 0.0);
}

}  // namespace
}  // namespace proofread
