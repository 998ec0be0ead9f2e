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

#include "proofread/bench.h"

#include <algorithm>
#include <chrono>

#include "proofread/errors.h"
#include "proofread/parallel.h"
#include "proofread/rng.h"
#include "proofread/segment.h"

namespace proofread {

std::string_view decode_mode_name(DecodeMode mode) {
  return mode == DecodeMode::kBaseline ? "baseline" : "speculative";
}

DecodeMode decode_mode_from_name(std::string_view name) {
  if (name == "baseline") return DecodeMode::kBaseline;
  if (name == "speculative") return DecodeMode::kSpeculative;
  throw InvalidArgument("unknown decode mode '" + std::string(name) + "'");
}

namespace {

struct SegmentOutput {
  std::string text;
  size_t calls = 0;
  SpecDecodeTrace trace;
};

// Output position t reads input word t, so <unk> keeps that input word.
std::string render(const TokenTable& table, std::span<const TokenId> ids,
                   const std::vector<std::string>& input) {
  std::string out;
  for (size_t t = 0; t < ids.size(); ++t) {
    if (ids[t] == kEosToken) break;
    if (ids[t] == kPadToken) continue;
    if (!out.empty()) out += ' ';
    out += ids[t] == kUnkToken && t < input.size() ? input[t] : table.word(ids[t]);
  }
  return out;
}

}  // namespace

ServeResult serve_document(const TargetModel& model, std::string_view document,
                           const ServingConfig& config, DecodeMode mode,
                           uint64_t seed, size_t jobs) {
  const auto start = std::chrono::steady_clock::now();
  const Segmentation seg = segment(document, config);
  const Rng base(seed);
  auto outputs = parallel_map(seg.segments.size(), jobs, [&](size_t i) {
    SegmentOutput so;
    Rng rng = base.split(i);
    const Conditioning cond = model.condition(serving_words(seg.segments[i]));
    DecodeOutput d =
        mode == DecodeMode::kBaseline
            ? autoregressive_decode(model, cond, config, rng)
            : speculative_decode(model, cond, config, rng, &so.trace);
    so.text = render(model.tokens(), d.tokens, cond.words);
    so.calls = d.target_calls;
    return so;
  });
  ServeResult result;
  std::vector<std::string> texts;
  for (SegmentOutput& so : outputs) {
    result.target_calls += so.calls;
    texts.push_back(std::move(so.text));
    if (mode == DecodeMode::kSpeculative) result.traces.push_back(std::move(so.trace));
  }
  result.text = seg.rejoin(texts);
  result.wall_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return result;
}

double median(std::vector<double> values) {
  if (values.empty()) throw InvalidArgument("median of an empty set");
  std::sort(values.begin(), values.end());
  const size_t mid = values.size() / 2;
  if (values.size() % 2 == 1) return values[mid];
  return 0.5 * (values[mid - 1] + values[mid]);
}

nlohmann::json ModeStats::to_json() const {
  return {{"median_ms", median_ms},
          {"median_target_calls", median_target_calls},
          {"total_target_calls", total_target_calls},
          {"total_tokens", total_tokens}};
}

nlohmann::json BenchReport::to_json(DecodeMode mode) const {
  const ModeStats& chosen = mode == DecodeMode::kBaseline ? baseline : speculative;
  nlohmann::json j = {{"n", n},
                      {"mode", decode_mode_name(mode)},
                      {"median_ms", chosen.median_ms},
                      {"median_target_calls", chosen.median_target_calls},
                      {"reduction_pct", reduction_pct},
                      {"wall_reduction_pct", wall_reduction_pct},
                      {"baseline", baseline.to_json()},
                      {"speculative", speculative.to_json()}};
  if (!traces.empty()) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& t : traces) arr.push_back(t.to_json());
    j["traces"] = std::move(arr);
  }
  return j;
}

BenchReport bench(const TargetModel& model,
                  const std::vector<std::string>& documents,
                  const ServingConfig& config, const BenchOptions& options) {
  if (documents.empty()) throw InvalidArgument("benchmark dataset is empty");
  config.validate();
  BenchReport report;
  report.n = documents.size();
  std::vector<double> base_ms, base_calls, spec_ms, spec_calls;
  for (size_t e = 0; e < documents.size(); ++e) {
    const uint64_t seed = Rng::mix(config.seed, e);
    const ServeResult b =
        serve_document(model, documents[e], config, DecodeMode::kBaseline, seed);
    ServeResult s = serve_document(model, documents[e], config,
                                   DecodeMode::kSpeculative, seed);
    base_ms.push_back(b.wall_ms);
    base_calls.push_back(static_cast<double>(b.target_calls));
    spec_ms.push_back(s.wall_ms);
    spec_calls.push_back(static_cast<double>(s.target_calls));
    report.baseline.total_target_calls += b.target_calls;
    report.speculative.total_target_calls += s.target_calls;
    for (const auto& t : s.traces) report.speculative.total_tokens += t.total_tokens;
    // Baseline emits one token per call.
    report.baseline.total_tokens += b.target_calls;
    if (options.keep_traces) {
      for (auto& t : s.traces) report.traces.push_back(std::move(t));
    }
  }
  report.baseline.median_ms = median(base_ms);
  report.baseline.median_target_calls = median(base_calls);
  report.speculative.median_ms = median(spec_ms);
  report.speculative.median_target_calls = median(spec_calls);
  auto reduction = [](double spec, double base) {
    return base > 0.0 ? 100.0 * (1.0 - spec / base) : 0.0;
  };
  report.reduction_pct = reduction(report.speculative.median_target_calls,
                                   report.baseline.median_target_calls);
  report.wall_reduction_pct =
      reduction(report.speculative.median_ms, report.baseline.median_ms);
  return report;
}

}  // namespace proofread
