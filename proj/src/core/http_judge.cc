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

#include "httplib.h"
#include "proofread/errors.h"
#include "proofread/judge.h"

namespace proofread {

namespace {

class InFlightSlot {
 public:
  explicit InFlightSlot(std::counting_semaphore<1024>& sem) : sem_(sem) {
    sem_.acquire();
  }
  ~InFlightSlot() { sem_.release(); }
  InFlightSlot(const InFlightSlot&) = delete;
  InFlightSlot& operator=(const InFlightSlot&) = delete;

 private:
  std::counting_semaphore<1024>& sem_;
};

}  // namespace

HttpJudge::HttpJudge(std::string endpoint, HttpJudgeOptions options)
    : options_(options),
      in_flight_(std::clamp<std::ptrdiff_t>(options.max_in_flight, 1, 1024)) {
  const auto scheme = endpoint.find("://");
  // Built without TLS, so plain http only.
  if (scheme == std::string::npos || endpoint.compare(0, scheme, "http") != 0) {
    throw InvalidArgument("judge endpoint must look like http://host:port/path");
  }
  const auto slash = endpoint.find('/', scheme + 3);
  base_ = endpoint.substr(0, slash);
  path_ = slash == std::string::npos ? "/judge" : endpoint.substr(slash);
}

HttpJudge::~HttpJudge() = default;

nlohmann::json HttpJudge::post(std::string_view task,
                               const std::vector<std::string>& texts) const {
  InFlightSlot slot(in_flight_);
  httplib::Client client(base_);
  const auto secs = std::chrono::duration_cast<std::chrono::seconds>(
      options_.timeout);
  const auto usecs = std::chrono::duration_cast<std::chrono::microseconds>(
      options_.timeout - secs);
  client.set_connection_timeout(secs.count(), usecs.count());
  client.set_read_timeout(secs.count(), usecs.count());
  const nlohmann::json body = {{"task", task}, {"texts", texts}};
  auto res = client.Post(path_, body.dump(), "application/json");
  if (!res) {
    throw JudgeUnavailable("judge request to " + base_ + path_ +
                           " failed: " + httplib::to_string(res.error()));
  }
  if (res->status != 200) {
    throw JudgeUnavailable("judge returned HTTP " +
                           std::to_string(res->status));
  }
  try {
    nlohmann::json reply = nlohmann::json::parse(res->body);
    return reply.at("verdict");
  } catch (const nlohmann::json::exception& e) {
    throw JudgeUnavailable(std::string("malformed judge reply: ") + e.what());
  }
}

bool HttpJudge::post_bool(std::string_view task,
                          const std::vector<std::string>& texts) const {
  const nlohmann::json v = post(task, texts);
  if (!v.is_boolean()) {
    throw JudgeUnavailable("judge verdict for '" + std::string(task) +
                           "' is not a boolean");
  }
  return v.get<bool>();
}

bool HttpJudge::check_grammar(std::string_view text) const {
  return post_bool("grammar", {std::string(text)});
}

bool HttpJudge::check_same_meaning(std::string_view a,
                                   std::string_view b) const {
  return post_bool("meaning", {std::string(a), std::string(b)});
}

bool HttpJudge::check_good_fix(std::string_view input,
                               std::string_view candidate) const {
  return post_bool("good_fix", {std::string(input), std::string(candidate)});
}

FilterVerdict HttpJudge::check_filter_criteria(std::string_view source,
                                               std::string_view ref) const {
  const nlohmann::json v = post("filter", {std::string(source), std::string(ref)});
  if (!v.is_object()) {
    throw JudgeUnavailable("judge verdict for 'filter' is not an object");
  }
  return FilterVerdict::from_json(v);
}

}  // namespace proofread
