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

// Dataset synthesis: each clean line is the reference; corruption, keyboard
// simulation and the post rules produce the source; the judge gates output.

#ifndef PROOFREAD_PIPELINE_H_
#define PROOFREAD_PIPELINE_H_

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "proofread/decoder.h"
#include "proofread/error_synthesis.h"
#include "proofread/example.h"
#include "proofread/judge.h"
#include "proofread/vocabulary.h"

namespace proofread {

// Restores URL, emoji, emoticon and date-time tokens of `text` from the
// aligned tokens of `source_reference`. Whitespace is kept as in `text`.
// Idempotent for a fixed reference.
std::string apply_post_rules(std::string_view text,
                             std::string_view source_reference);

// Applies the judge's filter to every reference; a criterion holds when it
// holds for any reference.
FilterVerdict filter_example(const ProofreadExample& ex, const Judge& judge);

// Produces extra references for a clean line. The clean line itself is
// always the first reference.
using ReferenceExpander =
    std::function<std::vector<std::string>(const std::string& reference)>;

struct PipelineConfig {
  CorruptionConfig corruption;
  SimulatorConfig simulator;
  // false: the simulator is the identity (source = corrupted text).
  bool run_simulator = true;
  size_t jobs = 1;  // 0 = hardware concurrency
  // Lines per ordered batch in the streaming interface.
  size_t batch_size = 512;
};

enum class LineOutcome { kEmitted, kBlank, kUnchanged, kFiltered };

struct PipelineStats {
  size_t lines = 0;
  size_t blank = 0;
  size_t unchanged = 0;  // source == reference, dropped
  size_t filtered = 0;   // judge said keep=false
  size_t emitted = 0;

  void add(LineOutcome outcome);
  nlohmann::json to_json() const;
};

// Seed for corpus line `index` (0-based).
uint64_t line_seed(uint64_t seed, size_t index);

// Processes one line; `out` is filled only for kEmitted.
LineOutcome process_line(const std::string& line, size_t index,
                         const PipelineConfig& config, const Vocabulary& vocab,
                         const Judge& judge, const ReferenceExpander& expander,
                         ProofreadExample* out);

// Output order follows input order regardless of config.jobs. Lines that are
// not valid UTF-8 raise InvalidArgument naming the line.
std::vector<ProofreadExample> build_dataset(
    const std::vector<std::string>& lines, const PipelineConfig& config,
    const Vocabulary& vocab, const Judge& judge,
    const ReferenceExpander& expander = {}, PipelineStats* stats = nullptr);

// Streaming form: reads corpus lines from `in`, writes JSONL to `out`.
PipelineStats build_dataset(std::istream& in, std::ostream& out,
                            const PipelineConfig& config,
                            const Vocabulary& vocab, const Judge& judge,
                            const ReferenceExpander& expander = {});

}  // namespace proofread

#endif  // PROOFREAD_PIPELINE_H_
