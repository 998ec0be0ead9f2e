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

#include "proofread/vocabulary.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <numeric>

#include "proofread/errors.h"
#include "proofread/text.h"

namespace proofread {

void Trie::insert(std::u32string_view word, uint64_t count) {
  uint32_t cur = kRoot;
  nodes_[cur].prefix_count += count;
  for (char32_t ch : word) {
    auto& kids = nodes_[cur].children;
    auto it = std::lower_bound(
        kids.begin(), kids.end(), ch,
        [](const std::pair<char32_t, uint32_t>& p, char32_t c) {
          return p.first < c;
        });
    uint32_t next;
    if (it != kids.end() && it->first == ch) {
      next = it->second;
    } else {
      next = static_cast<uint32_t>(nodes_.size());
      kids.insert(it, {ch, next});
      nodes_.emplace_back();
    }
    cur = next;
    nodes_[cur].prefix_count += count;
  }
  nodes_[cur].end_count += count;
  ++words_;
}

std::optional<uint32_t> Trie::child(uint32_t node, char32_t ch) const {
  const auto& kids = nodes_[node].children;
  auto it = std::lower_bound(
      kids.begin(), kids.end(), ch,
      [](const std::pair<char32_t, uint32_t>& p, char32_t c) {
        return p.first < c;
      });
  if (it == kids.end() || it->first != ch) return std::nullopt;
  return it->second;
}

std::optional<uint32_t> Trie::find(std::u32string_view prefix) const {
  uint32_t cur = kRoot;
  for (char32_t ch : prefix) {
    auto next = child(cur, ch);
    if (!next) return std::nullopt;
    cur = *next;
  }
  return cur;
}

Vocabulary::Vocabulary(std::vector<std::pair<std::string, uint64_t>> entries)
    : entries_(std::move(entries)) {
  counts_.reserve(entries_.size());
  for (const auto& [word, count] : entries_) {
    if (word.empty()) throw InvalidArgument("vocabulary word is empty");
    if (count == 0) {
      throw InvalidArgument("vocabulary count for '" + word + "' must be >= 1");
    }
    if (!counts_.emplace(word, count).second) {
      throw InvalidArgument("duplicate vocabulary word '" + word + "'");
    }
    total_ += count;
    trie_.insert(to_u32(word), count);
  }
}

Vocabulary Vocabulary::parse_tsv(std::istream& in, std::string_view origin) {
  std::vector<std::pair<std::string, uint64_t>> entries;
  std::string line;
  size_t lineno = 0;
  auto where = [&] {
    return std::string(origin.empty() ? "vocabulary" : origin) + ":" +
           std::to_string(lineno);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos || tab == 0) {
      throw InvalidArgument(where() + ": expected \"word<TAB>count\"");
    }
    uint64_t count = 0;
    const char* first = line.data() + tab + 1;
    const char* last = line.data() + line.size();
    auto [ptr, ec] = std::from_chars(first, last, count);
    if (ec != std::errc() || ptr != last) {
      throw InvalidArgument(where() + ": bad count");
    }
    entries.emplace_back(line.substr(0, tab), count);
  }
  if (in.bad()) throw IoError(where() + ": read error");
  try {
    return Vocabulary(std::move(entries));
  } catch (const InvalidArgument& e) {
    throw InvalidArgument(std::string(origin) + ": " + e.what());
  }
}

Vocabulary Vocabulary::load_tsv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open vocabulary " + path.string());
  return parse_tsv(in, path.string());
}

bool Vocabulary::contains(std::string_view word) const {
  return counts_.find(std::string(word)) != counts_.end();
}

uint64_t Vocabulary::count(std::string_view word) const {
  auto it = counts_.find(std::string(word));
  return it == counts_.end() ? 0 : it->second;
}

double Vocabulary::log_prior(std::string_view word) const {
  const uint64_t c = count(word);
  if (c == 0) return -std::numeric_limits<double>::infinity();
  return std::log(static_cast<double>(c) / static_cast<double>(total_));
}

std::vector<std::string> Vocabulary::words_within(std::u32string_view word,
                                                  size_t max_ed) const {
  std::vector<std::string> out;
  if (entries_.empty()) return out;
  // Standard trie walk carrying one Levenshtein DP row per node.
  std::u32string prefix;
  std::vector<size_t> root_row(word.size() + 1);
  std::iota(root_row.begin(), root_row.end(), size_t{0});

  struct Frame {
    uint32_t node;
    size_t child_index;
    std::vector<size_t> row;
  };
  std::vector<Frame> stack;
  stack.push_back({Trie::kRoot, 0, root_row});
  if (trie_.node(Trie::kRoot).end_count > 0 && root_row.back() <= max_ed) {
    out.emplace_back();
  }
  while (!stack.empty()) {
    Frame& f = stack.back();
    const auto& kids = trie_.node(f.node).children;
    if (f.child_index >= kids.size()) {
      stack.pop_back();
      if (!prefix.empty()) prefix.pop_back();
      continue;
    }
    const auto [ch, next] = kids[f.child_index++];
    std::vector<size_t> row(word.size() + 1);
    row[0] = f.row[0] + 1;
    size_t best = row[0];
    for (size_t j = 1; j <= word.size(); ++j) {
      row[j] = std::min({row[j - 1] + 1, f.row[j] + 1,
                         f.row[j - 1] + (word[j - 1] == ch ? 0 : 1)});
      best = std::min(best, row[j]);
    }
    if (best > max_ed) continue;
    prefix.push_back(ch);
    if (trie_.node(next).end_count > 0 && row.back() <= max_ed) {
      out.push_back(to_utf8(prefix));
    }
    stack.push_back({next, 0, std::move(row)});
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace proofread
