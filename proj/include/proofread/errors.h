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

#ifndef PROOFREAD_ERRORS_H_
#define PROOFREAD_ERRORS_H_

#include <stdexcept>
#include <string>

namespace proofread {

// Error categories surfaced through the C API as status codes.
enum class ErrorCode {
  kInvalidArgument = 1,
  kIo = 2,
  kUnknownCharacter = 3,
  kOutOfRange = 4,
  kJudgeUnavailable = 5,
  kInternal = 6,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& what)
      : Error(ErrorCode::kInvalidArgument, what) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(ErrorCode::kIo, what) {}
};

class UnknownCharacter : public Error {
 public:
  explicit UnknownCharacter(char32_t ch);
  char32_t character() const { return ch_; }

 private:
  char32_t ch_;
};

// Invalid operator position, over-length bucket request and similar.
class OutOfRange : public Error {
 public:
  explicit OutOfRange(const std::string& what)
      : Error(ErrorCode::kOutOfRange, what) {}
};

class JudgeUnavailable : public Error {
 public:
  explicit JudgeUnavailable(const std::string& what)
      : Error(ErrorCode::kJudgeUnavailable, what) {}
};

// Rethrows `e` as the same category with `context` prepended to the message.
[[noreturn]] inline void rethrow_with_context(const Error& e,
                                              const std::string& context) {
  const std::string what = context + ": " + e.what();
  switch (e.code()) {
    case ErrorCode::kInvalidArgument:
      throw InvalidArgument(what);
    case ErrorCode::kIo:
      throw IoError(what);
    case ErrorCode::kOutOfRange:
      throw OutOfRange(what);
    case ErrorCode::kJudgeUnavailable:
      throw JudgeUnavailable(what);
    default:
      throw Error(e.code(), what);
  }
}

}  // namespace proofread

#endif  // PROOFREAD_ERRORS_H_
