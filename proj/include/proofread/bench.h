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

// Document serving (segment, decode segments in parallel, rejoin) and the
// baseline-vs-speculative latency benchmark.

#ifndef PROOFREAD_BENCH_H_
#define PROOFREAD_BENCH_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "proofread/speculative.h"
#include "proofread/target_model.h"

namespace proofread {

enum class DecodeMode { kBaseline, kSpeculative };

std::string_view decode_mode_name(DecodeMode mode);
DecodeMode decode_mode_from_name(std::string_view name);

struct ServeResult {
  std::string text;
  size_t target_calls = 0;
  double wall_ms = 0.0;
  std::vector<SpecDecodeTrace> traces;  // speculative mode only
};

// Segment i decodes with Rng(seed).split(i), so the result does not depend
// on `jobs`.
ServeResult serve_document(const TargetModel& model, std::string_view document,
                           const ServingConfig& config, DecodeMode mode,
                           uint64_t seed, size_t jobs = 1);

struct ModeStats {
  double median_ms = 0.0;
  double median_target_calls = 0.0;
  size_t total_target_calls = 0;
  size_t total_tokens = 0;

  nlohmann::json to_json() const;
};

struct BenchReport {
  size_t n = 0;
  ModeStats baseline;
  ModeStats speculative;
  // 100 * (1 - speculative / baseline) on median target calls.
  double reduction_pct = 0.0;
  // Same on median wall time.
  double wall_reduction_pct = 0.0;
  std::vector<SpecDecodeTrace> traces;  // empty unless requested

  // Top-level median_* fields describe `mode`; both blocks are included.
  nlohmann::json to_json(DecodeMode mode) const;
};

struct BenchOptions {
  bool keep_traces = false;
};

// Runs both modes on every document, one document at a time. Document e uses
// seed mix(config.seed, e) in both modes. Throws InvalidArgument when empty.
BenchReport bench(const TargetModel& model,
                  const std::vector<std::string>& documents,
                  const ServingConfig& config, const BenchOptions& options = {});

double median(std::vector<double> values);

}  // namespace proofread

#endif  // PROOFREAD_BENCH_H_
