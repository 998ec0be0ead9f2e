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

#ifndef PROOFREAD_VOCABULARY_H_
#define PROOFREAD_VOCABULARY_H_

#include <cstdint>
#include <filesystem>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace proofread {

// Character trie over code points with per-node prefix and end counts.
class Trie {
 public:
  static constexpr uint32_t kRoot = 0;

  struct Node {
    std::vector<std::pair<char32_t, uint32_t>> children;  // sorted by char
    uint64_t prefix_count = 0;  // sum of counts of words below this node
    uint64_t end_count = 0;     // count of the word ending here, 0 if none
  };

  void insert(std::u32string_view word, uint64_t count);
  std::optional<uint32_t> child(uint32_t node, char32_t ch) const;
  std::optional<uint32_t> find(std::u32string_view prefix) const;
  const Node& node(uint32_t id) const { return nodes_[id]; }
  size_t word_count() const { return words_; }

 private:
  std::vector<Node> nodes_{Node{}};
  size_t words_ = 0;
};

// Word -> count table with a trie index; immutable after construction.
class Vocabulary {
 public:
  Vocabulary() = default;
  // Throws InvalidArgument on a zero count, empty word or duplicate entry.
  explicit Vocabulary(std::vector<std::pair<std::string, uint64_t>> entries);

  // "word\tcount" per line; blank lines and lines starting with '#' skipped.
  static Vocabulary parse_tsv(std::istream& in, std::string_view origin = "");
  static Vocabulary load_tsv(const std::filesystem::path& path);

  bool contains(std::string_view word) const;
  uint64_t count(std::string_view word) const;
  uint64_t total() const { return total_; }
  size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  // log(count / total); -inf for unknown words.
  double log_prior(std::string_view word) const;

  // Entries in insertion order.
  const std::vector<std::pair<std::string, uint64_t>>& entries() const {
    return entries_;
  }
  const Trie& trie() const { return trie_; }

  // Words within Levenshtein distance max_ed of `word`, via bounded trie
  // traversal. Sorted lexicographically.
  std::vector<std::string> words_within(std::u32string_view word,
                                        size_t max_ed) const;

 private:
  std::vector<std::pair<std::string, uint64_t>> entries_;
  std::unordered_map<std::string, uint64_t> counts_;
  uint64_t total_ = 0;
  Trie trie_;
};

}  // namespace proofread

#endif  // PROOFREAD_VOCABULARY_H_
