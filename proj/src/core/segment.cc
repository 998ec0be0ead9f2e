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

#include "proofread/segment.h"

#include "proofread/errors.h"
#include "proofread/target_model.h"
#include "proofread/text.h"

namespace proofread {

namespace {

bool ends_sentence(std::string_view token) {
  std::u32string u = to_u32(token);
  static const std::u32string closers = U"\"')]}»”’";
  while (!u.empty() && closers.find(u.back()) != std::u32string::npos) {
    u.pop_back();
  }
  if (u.empty()) return false;
  const char32_t c = u.back();
  return c == U'.' || c == U'!' || c == U'?' || c == U'…';
}

struct Range {
  size_t begin;
  size_t end;
};

}  // namespace

std::string Segmentation::rejoin() const { return rejoin(segments); }

std::string Segmentation::rejoin(const std::vector<std::string>& replaced) const {
  if (replaced.size() + 1 != separators.size()) {
    throw InvalidArgument("segment count does not match the separators");
  }
  std::string out = separators[0];
  for (size_t i = 0; i < replaced.size(); ++i) {
    out += replaced[i];
    out += separators[i + 1];
  }
  return out;
}

Segmentation segment(std::string_view document, const ServingConfig& config) {
  config.validate();
  if (!is_valid_utf8(document)) throw InvalidArgument("document is not valid UTF-8");
  const size_t limit = config.max_bucket();
  const Tokenized tk = tokenize_whitespace(document);
  const size_t n = tk.tokens.size();
  std::vector<size_t> weight(n);
  for (size_t i = 0; i < n; ++i) weight[i] = serving_words(tk.tokens[i]).size();

  std::vector<Range> chunks;
  auto pack_paragraph = [&](size_t a, size_t b) {
    size_t total = 0;
    for (size_t i = a; i < b; ++i) total += weight[i];
    if (total <= limit) {
      chunks.push_back({a, b});
      return;
    }
    std::vector<Range> sentences;
    size_t start = a;
    for (size_t i = a; i < b; ++i) {
      if (ends_sentence(tk.tokens[i]) || i + 1 == b) {
        sentences.push_back({start, i + 1});
        start = i + 1;
      }
    }
    Range cur{a, a};
    size_t cur_w = 0;
    auto flush = [&] {
      if (cur.end > cur.begin) chunks.push_back(cur);
      cur = {cur.end, cur.end};
      cur_w = 0;
    };
    for (const Range& s : sentences) {
      size_t sw = 0;
      for (size_t i = s.begin; i < s.end; ++i) sw += weight[i];
      if (sw > limit) {
        flush();
        for (size_t i = s.begin; i < s.end; ++i) {
          if (cur_w + weight[i] > limit) flush();
          cur.end = i + 1;
          cur_w += weight[i];
        }
        flush();
        continue;
      }
      if (cur_w + sw > limit) flush();
      cur.end = s.end;
      cur_w += sw;
    }
    flush();
  };

  size_t para_start = 0;
  for (size_t i = 0; i < n; ++i) {
    const bool last = i + 1 == n;
    if (last || tk.separators[i + 1].find('\n') != std::string::npos) {
      pack_paragraph(para_start, i + 1);
      para_start = i + 1;
    }
  }

  Segmentation seg;
  seg.separators.push_back(tk.separators[0]);
  for (const Range& r : chunks) {
    std::string text = tk.tokens[r.begin];
    for (size_t i = r.begin + 1; i < r.end; ++i) {
      text += tk.separators[i];
      text += tk.tokens[i];
    }
    seg.segments.push_back(std::move(text));
    seg.separators.push_back(tk.separators[r.end]);
  }
  return seg;
}

}  // namespace proofread
