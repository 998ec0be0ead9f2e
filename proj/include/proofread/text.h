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

// UTF-8 helpers and Unicode normalization (ICU-backed).

#ifndef PROOFREAD_TEXT_H_
#define PROOFREAD_TEXT_H_

#include <string>
#include <string_view>
#include <vector>

namespace proofread {

// Malformed sequences decode to U+FFFD.
std::u32string to_u32(std::string_view utf8);
bool is_valid_utf8(std::string_view utf8);
std::string to_utf8(std::u32string_view text);
std::string to_utf8(char32_t ch);

std::string nfc(std::string_view utf8);

// NFC, Unicode lowercase, drop every P* code point, collapse whitespace runs
// to one space, trim.
std::string normalize_loose(std::string_view utf8);

bool is_space(char32_t ch);
bool is_ascii_letter(char32_t ch);
char32_t ascii_lower(char32_t ch);
char32_t ascii_upper(char32_t ch);
std::string ascii_lower(std::string_view s);

// Whitespace tokenization that keeps the separators, so
// separators[0] + tokens[0] + separators[1] + ... + separators[n] == text.
struct Tokenized {
  std::vector<std::string> tokens;
  std::vector<std::string> separators;  // tokens.size() + 1 entries

  std::string join() const;
};
Tokenized tokenize_whitespace(std::string_view text);

// Plain whitespace split, separators discarded.
std::vector<std::string> split_words(std::string_view text);

size_t levenshtein(std::u32string_view a, std::u32string_view b);
// Levenshtein plus adjacent transpositions (optimal string alignment).
size_t osa_distance(std::u32string_view a, std::u32string_view b);

}  // namespace proofread

#endif  // PROOFREAD_TEXT_H_
