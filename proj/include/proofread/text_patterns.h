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

#ifndef PROOFREAD_TEXT_PATTERNS_H_
#define PROOFREAD_TEXT_PATTERNS_H_

#include <string_view>

namespace proofread {

enum class TokenKind { kWord, kUrl, kEmoji, kEmoticon, kDateTime };

// Classifies one whitespace-delimited token. Trailing sentence punctuation
// is ignored for URL and date-time tokens.
TokenKind classify_token(std::string_view token);

inline bool is_protected_token(std::string_view token) {
  return classify_token(token) != TokenKind::kWord;
}

}  // namespace proofread

#endif  // PROOFREAD_TEXT_PATTERNS_H_
