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

#include "proofread/text_patterns.h"

#include <unicode/uchar.h>

#include <regex>
#include <string>

#include "proofread/text.h"

namespace proofread {

namespace {

const std::regex& url_re() {
  static const std::regex re(
      R"(^((https?|ftp)://\S+|www\.\S+|[A-Za-z0-9-]+(\.[A-Za-z0-9-]+)*\.(com|org|net|io|edu|gov|co|uk|de)(/\S*)?)$)",
      std::regex::icase | std::regex::optimize);
  return re;
}

const std::regex& emoticon_re() {
  static const std::regex re(
      R"(^([:;=][-o'^]?[)(\]\[dDpP/\\|oO3*@]+|[8xX]-?[)(DdPp]+|[)(\]\[/\\|][-o'^]?[:;=]|<3+|</3|\^_+\^|[oO]_[oO]|-_-|T_T)$)",
      std::regex::optimize);
  return re;
}

const std::regex& datetime_re() {
  static const std::regex re(
      R"(^(\d{1,2}[/.-]\d{1,2}[/.-]\d{2,4}|\d{4}-\d{1,2}-\d{1,2}|\d{1,2}:\d{2}(:\d{2})?([aApP][mM])?)$)",
      std::regex::optimize);
  return re;
}

bool is_emoji_codepoint(char32_t c) {
  return (c >= 0x1F000 && c <= 0x1FAFF) || (c >= 0x2600 && c <= 0x27BF) ||
         (c >= 0x2B00 && c <= 0x2BFF) || c == 0x200D || c == 0xFE0F;
}

std::string strip_trailing_punct(std::string_view token) {
  std::string s(token);
  while (!s.empty() &&
         (s.back() == '.' || s.back() == ',' || s.back() == '!' ||
          s.back() == '?' || s.back() == ';')) {
    s.pop_back();
  }
  return s;
}

}  // namespace

TokenKind classify_token(std::string_view token) {
  if (token.empty()) return TokenKind::kWord;
  const std::u32string u = to_u32(token);
  bool any_emoji = false;
  bool all_emoji = true;
  for (char32_t c : u) {
    const bool e = is_emoji_codepoint(c) ||
                   u_hasBinaryProperty(static_cast<UChar32>(c),
                                       UCHAR_EXTENDED_PICTOGRAPHIC);
    any_emoji |= e;
    all_emoji &= e || c == 0xFE0F;
  }
  if (any_emoji && all_emoji) return TokenKind::kEmoji;
  const std::string s(token);
  if (std::regex_match(s, emoticon_re())) return TokenKind::kEmoticon;
  const std::string core = strip_trailing_punct(token);
  if (!core.empty()) {
    if (std::regex_match(core, url_re())) return TokenKind::kUrl;
    if (std::regex_match(core, datetime_re())) return TokenKind::kDateTime;
  }
  return TokenKind::kWord;
}

}  // namespace proofread
