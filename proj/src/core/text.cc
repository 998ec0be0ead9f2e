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

#include "proofread/text.h"

#include <unicode/locid.h>
#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>
#include <unicode/utf8.h>

#include <algorithm>
#include <numeric>

#include "proofread/errors.h"

namespace proofread {

std::u32string to_u32(std::string_view utf8) {
  std::u32string out;
  out.reserve(utf8.size());
  const auto* s = reinterpret_cast<const uint8_t*>(utf8.data());
  const int32_t length = static_cast<int32_t>(utf8.size());
  int32_t i = 0;
  while (i < length) {
    UChar32 c;
    U8_NEXT(s, i, length, c);
    out.push_back(c < 0 ? U'�' : static_cast<char32_t>(c));
  }
  return out;
}

bool is_valid_utf8(std::string_view utf8) {
  const auto* s = reinterpret_cast<const uint8_t*>(utf8.data());
  const int32_t length = static_cast<int32_t>(utf8.size());
  int32_t i = 0;
  while (i < length) {
    UChar32 c;
    U8_NEXT(s, i, length, c);
    if (c < 0) return false;
  }
  return true;
}

std::string to_utf8(std::u32string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char32_t ch : text) out += to_utf8(ch);
  return out;
}

std::string to_utf8(char32_t ch) {
  uint8_t buf[U8_MAX_LENGTH];
  int32_t n = 0;
  UBool error = false;
  U8_APPEND(buf, n, U8_MAX_LENGTH, static_cast<UChar32>(ch), error);
  if (error) return "\xEF\xBF\xBD";
  return std::string(reinterpret_cast<const char*>(buf), n);
}

namespace {

icu::UnicodeString from_utf8(std::string_view s) {
  return icu::UnicodeString::fromUTF8(
      icu::StringPiece(s.data(), static_cast<int32_t>(s.size())));
}

std::string as_utf8(const icu::UnicodeString& s) {
  std::string out;
  s.toUTF8String(out);
  return out;
}

const icu::Normalizer2& nfc_instance() {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* n = icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status) || n == nullptr) {
    throw Error(ErrorCode::kInternal, "ICU NFC normalizer unavailable");
  }
  return *n;
}

icu::UnicodeString nfc_unicode(std::string_view s) {
  UErrorCode status = U_ZERO_ERROR;
  icu::UnicodeString out = nfc_instance().normalize(from_utf8(s), status);
  if (U_FAILURE(status)) {
    throw Error(ErrorCode::kInternal, "NFC normalization failed");
  }
  return out;
}

}  // namespace

std::string nfc(std::string_view utf8) { return as_utf8(nfc_unicode(utf8)); }

std::string normalize_loose(std::string_view utf8) {
  icu::UnicodeString lowered = nfc_unicode(utf8);
  lowered.toLower(icu::Locale::getRoot());
  std::string out;
  bool pending_space = false;
  for (int32_t i = 0; i < lowered.length();) {
    UChar32 c = lowered.char32At(i);
    i += U16_LENGTH(c);
    if (u_ispunct(c)) continue;
    if (u_isUWhiteSpace(c)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) {
      out.push_back(' ');
      pending_space = false;
    }
    out += to_utf8(static_cast<char32_t>(c));
  }
  return out;
}

bool is_space(char32_t ch) { return u_isUWhiteSpace(static_cast<UChar32>(ch)); }

bool is_ascii_letter(char32_t ch) {
  return (ch >= U'a' && ch <= U'z') || (ch >= U'A' && ch <= U'Z');
}

char32_t ascii_lower(char32_t ch) {
  return (ch >= U'A' && ch <= U'Z') ? ch - U'A' + U'a' : ch;
}

char32_t ascii_upper(char32_t ch) {
  return (ch >= U'a' && ch <= U'z') ? ch - U'a' + U'A' : ch;
}

std::string ascii_lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](char c) {
    return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
  });
  return out;
}

std::string Tokenized::join() const {
  std::string out = separators.empty() ? std::string() : separators[0];
  for (size_t i = 0; i < tokens.size(); ++i) {
    out += tokens[i];
    out += separators[i + 1];
  }
  return out;
}

Tokenized tokenize_whitespace(std::string_view text) {
  Tokenized out;
  const std::u32string u = to_u32(text);
  std::u32string sep, tok;
  for (char32_t ch : u) {
    if (is_space(ch)) {
      if (!tok.empty()) {
        out.separators.push_back(to_utf8(sep));
        out.tokens.push_back(to_utf8(tok));
        sep.clear();
        tok.clear();
      }
      sep.push_back(ch);
    } else {
      tok.push_back(ch);
    }
  }
  if (!tok.empty()) {
    out.separators.push_back(to_utf8(sep));
    out.tokens.push_back(to_utf8(tok));
    sep.clear();
  }
  out.separators.push_back(to_utf8(sep));
  return out;
}

std::vector<std::string> split_words(std::string_view text) {
  return tokenize_whitespace(text).tokens;
}

size_t levenshtein(std::u32string_view a, std::u32string_view b) {
  std::vector<size_t> row(b.size() + 1);
  std::iota(row.begin(), row.end(), size_t{0});
  for (size_t i = 1; i <= a.size(); ++i) {
    size_t diag = row[0];
    row[0] = i;
    for (size_t j = 1; j <= b.size(); ++j) {
      const size_t up = row[j];
      row[j] = std::min({row[j] + 1, row[j - 1] + 1,
                         diag + (a[i - 1] == b[j - 1] ? 0 : 1)});
      diag = up;
    }
  }
  return row[b.size()];
}

size_t osa_distance(std::u32string_view a, std::u32string_view b) {
  std::vector<std::vector<size_t>> d(a.size() + 1,
                                     std::vector<size_t>(b.size() + 1));
  for (size_t i = 0; i <= a.size(); ++i) d[i][0] = i;
  for (size_t j = 0; j <= b.size(); ++j) d[0][j] = j;
  for (size_t i = 1; i <= a.size(); ++i) {
    for (size_t j = 1; j <= b.size(); ++j) {
      d[i][j] = std::min({d[i - 1][j] + 1, d[i][j - 1] + 1,
                          d[i - 1][j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1)});
      if (i > 1 && j > 1 && a[i - 1] == b[j - 2] && a[i - 2] == b[j - 1]) {
        d[i][j] = std::min(d[i][j], d[i - 2][j - 2] + 1);
      }
    }
  }
  return d[a.size()][b.size()];
}

}  // namespace proofread
