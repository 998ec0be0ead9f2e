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

#include "proofread/metrics.h"

#include "proofread/errors.h"
#include "proofread/parallel.h"
#include "proofread/text.h"

namespace proofread {

bool exact_match(std::string_view answer, std::string_view target) {
  return nfc(answer) == nfc(target);
}

bool normalized_exact_match(std::string_view answer, std::string_view target) {
  return normalize_loose(answer) == normalize_loose(target);
}

nlohmann::json ExampleVerdict::to_json() const {
  return {{"em", em},
          {"nem", nem},
          {"has_error", has_error},
          {"diff_meaning", diff_meaning},
          {"good", good}};
}

ExampleVerdict evaluate_example(std::string_view /*input*/,
                                std::string_view answer,
                                std::span<const std::string> targets,
                                const Judge& judge) {
  if (targets.empty()) throw InvalidArgument("empty target set");
  ExampleVerdict v;
  bool same_any = false;
  for (const std::string& t : targets) {
    v.em = v.em || exact_match(answer, t);
    v.nem = v.nem || normalized_exact_match(answer, t);
    if (!same_any) same_any = judge.check_same_meaning(answer, t);
  }
  v.has_error = judge.check_grammar(answer);
  v.diff_meaning = !same_any;
  v.good = !v.has_error && !v.diff_meaning;
  return v;
}

void MetricCounts::add(const ExampleVerdict& v) {
  ++n;
  em += v.em;
  nem += v.nem;
  error += v.has_error;
  diff += v.diff_meaning;
  good += v.good;
}

MetricsReport MetricsReport::from_counts(const MetricCounts& c) {
  if (c.n == 0) throw InvalidArgument("cannot build a report from 0 examples");
  MetricsReport r;
  r.n = c.n;
  r.counts = c;
  const double n = static_cast<double>(c.n);
  r.em = static_cast<double>(c.em) / n;
  r.nem = static_cast<double>(c.nem) / n;
  r.error = static_cast<double>(c.error) / n;
  r.diff = static_cast<double>(c.diff) / n;
  r.good = static_cast<double>(c.good) / n;
  r.bad = 1.0 - r.good;
  return r;
}

nlohmann::json MetricsReport::to_json() const {
  nlohmann::json j = {
      {"n", n},         {"em", em},     {"nem", nem},   {"error", error},
      {"diff", diff},   {"good", good}, {"bad", bad},
      {"counts",
       {{"em", counts.em},
        {"nem", counts.nem},
        {"error", counts.error},
        {"diff", counts.diff},
        {"good", counts.good}}}};
  if (!per_example.empty()) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& v : per_example) arr.push_back(v.to_json());
    j["per_example"] = std::move(arr);
  }
  return j;
}

MetricsReport evaluate_corpus(const std::vector<ProofreadExample>& dataset,
                              const std::vector<std::string>& answers,
                              const Judge& judge,
                              const EvaluateOptions& options) {
  if (dataset.empty()) throw InvalidArgument("empty evaluation set");
  if (dataset.size() != answers.size()) {
    throw InvalidArgument("dataset has " + std::to_string(dataset.size()) +
                          " examples but " + std::to_string(answers.size()) +
                          " answers");
  }
  auto verdicts = parallel_map(dataset.size(), options.jobs, [&](size_t i) {
    try {
      return evaluate_example(dataset[i].source, answers[i],
                              dataset[i].references, judge);
    } catch (const Error& e) {
      rethrow_with_context(e, "example " + std::to_string(i));
    }
  });
  MetricCounts counts;
  for (const auto& v : verdicts) counts.add(v);
  MetricsReport r = MetricsReport::from_counts(counts);
  if (options.per_example) r.per_example = std::move(verdicts);
  return r;
}

}  // namespace proofread
