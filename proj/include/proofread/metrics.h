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

// Proofreading metrics over (input, answer, references) triples.
//
//   EM     answer equals a reference after NFC normalization
//   NEM    equal after lowercasing, dropping Unicode punctuation (general
//          category P*; symbols such as $ and + are kept), collapsing
//          whitespace and trimming
//   Error  the judge finds a grammar error in the answer alone
//   Diff   the answer has the same meaning as no reference
//   Good   neither Error nor Diff
//   Bad    1 - Good
//
// With several references an answer is scored against the best one.

#ifndef PROOFREAD_METRICS_H_
#define PROOFREAD_METRICS_H_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "proofread/example.h"
#include "proofread/judge.h"

namespace proofread {

bool exact_match(std::string_view answer, std::string_view target);
bool normalized_exact_match(std::string_view answer, std::string_view target);

struct ExampleVerdict {
  bool em = false;
  bool nem = false;
  bool has_error = false;
  bool diff_meaning = false;
  bool good = false;

  bool operator==(const ExampleVerdict&) const = default;
  nlohmann::json to_json() const;
};

// Throws InvalidArgument when `targets` is empty.
ExampleVerdict evaluate_example(std::string_view input, std::string_view answer,
                                std::span<const std::string> targets,
                                const Judge& judge);

struct MetricCounts {
  size_t n = 0;
  size_t em = 0;
  size_t nem = 0;
  size_t error = 0;
  size_t diff = 0;
  size_t good = 0;

  void add(const ExampleVerdict& v);
  bool operator==(const MetricCounts&) const = default;
};

struct MetricsReport {
  size_t n = 0;
  double em = 0, nem = 0, error = 0, diff = 0, good = 0, bad = 0;
  MetricCounts counts;
  std::vector<ExampleVerdict> per_example;  // empty unless requested

  // bad is computed as 1 - good so that the pair sums to one exactly.
  static MetricsReport from_counts(const MetricCounts& counts);
  nlohmann::json to_json() const;
};

struct EvaluateOptions {
  size_t jobs = 1;  // 0 = hardware concurrency
  bool per_example = false;
};

// Throws InvalidArgument on an empty dataset or a length mismatch. Judge
// failures are rethrown with the example index prepended.
MetricsReport evaluate_corpus(const std::vector<ProofreadExample>& dataset,
                              const std::vector<std::string>& answers,
                              const Judge& judge,
                              const EvaluateOptions& options = {});

}  // namespace proofread

#endif  // PROOFREAD_METRICS_H_
