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

#include "proofread/target_model.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "proofread/errors.h"
#include "proofread/text.h"

namespace proofread {

namespace {

constexpr double kPadLogit = -1e4;
constexpr double kFloorLogLik = -30.0;
constexpr size_t kMaxCandidates = 16;

size_t key_class(char32_t c) {
  if (c >= U'a' && c <= U'z') return static_cast<size_t>(c - U'a');
  if (c == U'\'') return 26;
  return 27;
}

char32_t class_char(size_t k) {
  if (k < 26) return static_cast<char32_t>(U'a' + k);
  return U'\'';
}

// Row = intended key, column = observed key; log-softmax of the Gaussian
// kernel between key centers.
std::vector<double> key_substitution_table(double sigma) {
  constexpr size_t K = EditChannelModel::kKeyClasses;
  std::vector<double> t(K * K, kFloorLogLik);
  const auto layout = KeyboardLayout::qwerty();
  const double s2 = std::max(sigma, 1e-3) * std::max(sigma, 1e-3);
  for (size_t i = 0; i < K - 1; ++i) {
    const TouchPoint pi = key_center(*layout, class_char(i));
    std::vector<double> row(K - 1);
    double mx = -std::numeric_limits<double>::infinity();
    for (size_t o = 0; o < K - 1; ++o) {
      const TouchPoint po = key_center(*layout, class_char(o));
      const double dx = pi.x - po.x, dy = pi.y - po.y;
      row[o] = -0.5 * (dx * dx + dy * dy) / s2;
      mx = std::max(mx, row[o]);
    }
    double z = 0.0;
    for (double v : row) z += std::exp(v - mx);
    const double lz = mx + std::log(z);
    for (size_t o = 0; o < K - 1; ++o) {
      t[i * K + o] = std::max(kFloorLogLik, row[o] - lz);
    }
  }
  t[(K - 1) * K + (K - 1)] = 0.0;
  return t;
}

struct Candidate {
  TokenId id;
  double bonus;
};

struct EditChannelState : ConditioningState {
  std::vector<std::vector<Candidate>> positions;
};

}  // namespace

std::vector<std::string> serving_words(std::string_view text) {
  std::vector<std::string> out;
  for (const std::string& tok : split_words(text)) {
    const std::u32string u = to_u32(tok);
    auto keep = [](char32_t c) {
      return c > 0x7f || (c < 0x80 && std::isalnum(static_cast<int>(c)));
    };
    size_t b = 0, e = u.size();
    while (b < e && !keep(u[b])) ++b;
    while (e > b && !keep(u[e - 1])) --e;
    if (b == e) continue;
    std::u32string core = u.substr(b, e - b);
    for (char32_t& c : core) c = ascii_lower(c);
    out.push_back(to_utf8(core));
  }
  return out;
}

TokenTable::TokenTable(const std::vector<std::string>& words) {
  words_ = {"<pad>", "<eos>", "<unk>"};
  for (const std::string& w : words) {
    if (ids_.count(w)) throw InvalidArgument("duplicate token '" + w + "'");
    ids_.emplace(w, static_cast<TokenId>(words_.size()));
    words_.push_back(w);
  }
}

TokenId TokenTable::id(std::string_view word) const {
  auto it = ids_.find(std::string(word));
  return it == ids_.end() ? kUnkToken : it->second;
}

const std::string& TokenTable::word(TokenId id) const {
  if (id >= words_.size()) throw OutOfRange("token id out of range");
  return words_[id];
}

std::vector<TokenId> TokenTable::encode(
    const std::vector<std::string>& words) const {
  std::vector<TokenId> out;
  out.reserve(words.size());
  for (const auto& w : words) out.push_back(id(w));
  return out;
}

std::string TokenTable::decode(std::span<const TokenId> ids) const {
  std::string out;
  for (TokenId t : ids) {
    if (t == kEosToken) break;
    if (t == kPadToken) continue;
    if (!out.empty()) out += ' ';
    out += word(t);
  }
  return out;
}

void ParameterTable::copy_to(std::span<double> out) const {
  for (size_t i = 0; i < size(); ++i) out[i] = at(i);
}

void FloatTable::copy_to(std::span<double> out) const {
  std::copy(values_.begin(), values_.end(), out.begin());
}

EditChannelModel::EditChannelModel(std::shared_ptr<const Vocabulary> vocab,
                                   EditChannelOptions options)
    : vocab_(std::move(vocab)), options_(options) {
  if (!vocab_ || vocab_->empty()) {
    throw InvalidArgument("edit channel model needs a non-empty vocabulary");
  }
  std::vector<std::string> words;
  words.reserve(vocab_->size());
  for (const auto& [w, c] : vocab_->entries()) words.push_back(w);
  tokens_ = std::make_shared<const TokenTable>(words);

  std::vector<double> unigram(tokens_->size());
  double lowest = 0.0;
  for (size_t i = 0; i < words.size(); ++i) {
    unigram[i + 3] = vocab_->log_prior(words[i]);
    lowest = std::min(lowest, unigram[i + 3]);
  }
  unigram[kPadToken] = lowest;
  unigram[kEosToken] = options.eos_logit;
  unigram[kUnkToken] = lowest;
  tables_["unigram_logprob"] = std::make_shared<FloatTable>(std::move(unigram));
  tables_["key_substitution_loglik"] =
      std::make_shared<FloatTable>(key_substitution_table(options.sigma));
  tables_["scalars"] = std::make_shared<FloatTable>(std::vector<double>{
      options.copy_bonus, options.keep_unknown_logit, options.indel_log_penalty});
  copy_bonus_ = options.copy_bonus;
  keep_unknown_ = options.keep_unknown_logit;
  indel_ = options.indel_log_penalty;
}

EditChannelModel::EditChannelModel(const EditChannelModel& other,
                                   TableMap tables)
    : vocab_(other.vocab_), tokens_(other.tokens_), options_(other.options_) {
  const TableMap current = other.parameter_tables();
  for (const auto& [name, table] : current) {
    auto it = tables.find(name);
    if (it == tables.end() || !it->second) {
      throw InvalidArgument("missing parameter table '" + name + "'");
    }
    if (it->second->size() != table->size()) {
      throw InvalidArgument("parameter table '" + name + "' has wrong size");
    }
  }
  if (tables.size() != current.size()) {
    throw InvalidArgument("unexpected parameter table");
  }
  tables_ = std::move(tables);
  const ParameterTable& s = *tables_.at("scalars");
  copy_bonus_ = s.at(0);
  keep_unknown_ = s.at(1);
  indel_ = s.at(2);
}

TableMap EditChannelModel::parameter_tables() const { return tables_; }

std::unique_ptr<TargetModel> EditChannelModel::with_tables(
    TableMap tables) const {
  return std::unique_ptr<TargetModel>(
      new EditChannelModel(*this, std::move(tables)));
}

double EditChannelModel::channel(std::u32string_view typed,
                                 std::u32string_view word) const {
  const ParameterTable& sub = *tables_.at("key_substitution_loglik");
  constexpr size_t K = kKeyClasses;
  const size_t n = word.size(), m = typed.size();
  const double ninf = -std::numeric_limits<double>::infinity();
  std::vector<double> prev2(m + 1, ninf), prev(m + 1, ninf), cur(m + 1, ninf);
  for (size_t j = 0; j <= m; ++j) prev[j] = indel_ * static_cast<double>(j);
  for (size_t i = 1; i <= n; ++i) {
    cur[0] = indel_ * static_cast<double>(i);
    const size_t row = key_class(word[i - 1]) * K;
    for (size_t j = 1; j <= m; ++j) {
      const double diag = prev[j - 1] + sub.at(row + key_class(typed[j - 1]));
      cur[j] = std::max({diag, prev[j] + indel_, cur[j - 1] + indel_});
      // Adjacent swap, priced like one indel.
      if (i > 1 && j > 1 && word[i - 1] == typed[j - 2] &&
          word[i - 2] == typed[j - 1] && word[i - 1] != word[i - 2]) {
        cur[j] = std::max(cur[j], prev2[j - 2] + indel_);
      }
    }
    std::swap(prev2, prev);
    std::swap(prev, cur);
  }
  return prev[m];
}

Conditioning EditChannelModel::condition(std::vector<std::string> words) const {
  auto state = std::make_shared<EditChannelState>();
  const ParameterTable& unigram = *tables_.at("unigram_logprob");
  Conditioning cond;
  cond.ids = tokens_->encode(words);
  state->positions.resize(words.size());
  for (size_t k = 0; k < words.size(); ++k) {
    auto& cands = state->positions[k];
    if (cond.ids[k] != kUnkToken) {
      cands.push_back({cond.ids[k], copy_bonus_});
      continue;
    }
    const std::u32string typed = to_u32(words[k]);
    for (const std::string& c : vocab_->words_within(typed, options_.max_ed)) {
      const TokenId id = tokens_->id(c);
      cands.push_back({id, copy_bonus_ + channel(typed, to_u32(c))});
    }
    // Keep the strongest corrections by final logit; ties by id.
    std::sort(cands.begin(), cands.end(), [&](const Candidate& a,
                                              const Candidate& b) {
      const double la = unigram.at(a.id) + a.bonus;
      const double lb = unigram.at(b.id) + b.bonus;
      return la != lb ? la > lb : a.id < b.id;
    });
    if (cands.size() > kMaxCandidates) cands.resize(kMaxCandidates);
    cands.push_back({kUnkToken, copy_bonus_ + keep_unknown_ - unigram.at(kUnkToken)});
  }
  cond.words = std::move(words);
  cond.state = std::move(state);
  return cond;
}

void EditChannelModel::next_token_logits(std::span<const TokenId> prefix,
                                         const Conditioning& cond,
                                         std::vector<double>& logits) const {
  const auto* state = dynamic_cast<const EditChannelState*>(cond.state.get());
  if (state == nullptr) {
    throw InvalidArgument("conditioning was not built by this model");
  }
  logits.resize(tokens_->size());
  tables_.at("unigram_logprob")->copy_to(logits);
  logits[kPadToken] = kPadLogit;
  const size_t t = prefix.size();
  if (t < state->positions.size()) {
    for (const Candidate& c : state->positions[t]) logits[c.id] += c.bonus;
  } else {
    logits[kEosToken] += copy_bonus_;
  }
}

}  // namespace proofread
