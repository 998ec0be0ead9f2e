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

#include "proofread/example.h"

#include <fstream>
#include <istream>
#include <ostream>

#include "proofread/errors.h"

namespace proofread {

nlohmann::json ProofreadExample::to_json() const {
  return {{"source", source}, {"references", references}, {"meta", meta}};
}

ProofreadExample ProofreadExample::from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw InvalidArgument("example must be a JSON object");
  for (const char* field : {"source", "references", "meta"}) {
    if (!j.contains(field)) {
      throw InvalidArgument(std::string("example is missing '") + field + "'");
    }
  }
  ProofreadExample ex;
  try {
    ex.source = j.at("source").get<std::string>();
    ex.references = j.at("references").get<std::vector<std::string>>();
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("bad example field: ") + e.what());
  }
  ex.meta = j.at("meta");
  if (ex.references.empty()) {
    throw InvalidArgument("example has an empty reference list");
  }
  return ex;
}

std::vector<ProofreadExample> read_jsonl(std::istream& in,
                                         std::string_view origin) {
  std::vector<ProofreadExample> out;
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    try {
      out.push_back(ProofreadExample::from_json(nlohmann::json::parse(line)));
    } catch (const nlohmann::json::exception& e) {
      throw InvalidArgument(std::string(origin) + ":" + std::to_string(lineno) +
                            ": " + e.what());
    } catch (const InvalidArgument& e) {
      throw InvalidArgument(std::string(origin) + ":" + std::to_string(lineno) +
                            ": " + e.what());
    }
  }
  if (in.bad()) throw IoError(std::string("read failed: ") + std::string(origin));
  return out;
}

std::vector<ProofreadExample> load_jsonl(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  return read_jsonl(in, path.string());
}

void write_jsonl(std::ostream& out, const std::vector<ProofreadExample>& data) {
  for (const auto& ex : data) out << ex.to_json().dump() << '\n';
}

void save_jsonl(const std::filesystem::path& path,
                const std::vector<ProofreadExample>& data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  write_jsonl(out, data);
  out.flush();
  if (!out) throw IoError("write failed: " + path.string());
}

std::vector<std::string> read_lines(std::istream& in) {
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    out.push_back(line);
  }
  return out;
}

std::vector<std::string> load_lines(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  return read_lines(in);
}

}  // namespace proofread
