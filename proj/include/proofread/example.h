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

// Dataset record and its JSONL encoding: one object per line with exactly the
// fields {source, references, meta}.

#ifndef PROOFREAD_EXAMPLE_H_
#define PROOFREAD_EXAMPLE_H_

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace proofread {

struct ProofreadExample {
  std::string source;
  std::vector<std::string> references;  // non-empty
  nlohmann::json meta = nlohmann::json::object();

  nlohmann::json to_json() const;
  // Throws InvalidArgument on a missing field or empty reference list.
  static ProofreadExample from_json(const nlohmann::json& j);
};

// Errors name the offending line.
std::vector<ProofreadExample> read_jsonl(std::istream& in,
                                         std::string_view origin = "");
std::vector<ProofreadExample> load_jsonl(const std::filesystem::path& path);
void write_jsonl(std::ostream& out, const std::vector<ProofreadExample>& data);
void save_jsonl(const std::filesystem::path& path,
                const std::vector<ProofreadExample>& data);

// Plain text, one entry per line. A trailing newline does not add an entry.
std::vector<std::string> read_lines(std::istream& in);
std::vector<std::string> load_lines(const std::filesystem::path& path);

}  // namespace proofread

#endif  // PROOFREAD_EXAMPLE_H_
