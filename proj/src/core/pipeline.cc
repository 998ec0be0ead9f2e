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

#include "proofread/pipeline.h"

#include <algorithm>
#include <istream>
#include <ostream>

#include "proofread/errors.h"
#include "proofread/parallel.h"
#include "proofread/rng.h"
#include "proofread/text.h"
#include "proofread/text_patterns.h"

namespace proofread {

namespace {

// Token alignment with substitution cost = normalized edit distance.
std::vector<std::pair<size_t, size_t>> align_tokens(
    const std::vector<std::u32string>& a, const std::vector<std::u32string>& b) {
  const size_t n = a.size(), m = b.size();
  auto sub = [&](size_t i, size_t j) {
    if (a[i] == b[j]) return 0.0;
    const double len = static_cast<double>(std::max(a[i].size(), b[j].size()));
    return static_cast<double>(levenshtein(a[i], b[j])) / len;
  };
  std::vector<std::vector<double>> d(n + 1, std::vector<double>(m + 1, 0.0));
  for (size_t i = 0; i <= n; ++i) d[i][0] = static_cast<double>(i);
  for (size_t j = 0; j <= m; ++j) d[0][j] = static_cast<double>(j);
  for (size_t i = 1; i <= n; ++i) {
    for (size_t j = 1; j <= m; ++j) {
      d[i][j] = std::min({d[i - 1][j] + 1.0, d[i][j - 1] + 1.0,
                          d[i - 1][j - 1] + sub(i - 1, j - 1)});
    }
  }
  std::vector<std::pair<size_t, size_t>> pairs;
  size_t i = n, j = m;
  while (i > 0 && j > 0) {
    if (d[i][j] == d[i - 1][j - 1] + sub(i - 1, j - 1)) {
      pairs.emplace_back(--i, --j);
    } else if (d[i][j] == d[i - 1][j] + 1.0) {
      --i;
    } else {
      --j;
    }
  }
  std::reverse(pairs.begin(), pairs.end());
  return pairs;
}

bool restorable(const std::string& token, const std::u32string& token32,
                const std::string& ref, const std::u32string& ref32) {
  if (classify_token(token) == classify_token(ref)) return true;
  return 2 * levenshtein(token32, ref32) <= ref32.size();
}

std::string post_rules_once(std::string_view text, const Tokenized& ref) {
  Tokenized t = tokenize_whitespace(text);
  std::vector<std::u32string> t32, r32;
  for (const auto& tok : t.tokens) t32.push_back(to_u32(tok));
  for (const auto& tok : ref.tokens) r32.push_back(to_u32(tok));
  for (const auto& [i, j] : align_tokens(t32, r32)) {
    const std::string& r = ref.tokens[j];
    if (t.tokens[i] == r || !is_protected_token(r)) continue;
    if (restorable(t.tokens[i], t32[i], r, r32[j])) t.tokens[i] = r;
  }
  return t.join();
}

}  // namespace

std::string apply_post_rules(std::string_view text,
                             std::string_view source_reference) {
  const Tokenized ref = tokenize_whitespace(source_reference);
  const bool any_protected =
      std::any_of(ref.tokens.begin(), ref.tokens.end(),
                  [](const std::string& t) { return is_protected_token(t); });
  std::string current(text);
  if (!any_protected) return current;
  // Iterate to a fixed point so the rule pass is idempotent.
  for (int round = 0; round < 8; ++round) {
    std::string next = post_rules_once(current, ref);
    if (next == current) break;
    current = std::move(next);
  }
  return current;
}

FilterVerdict filter_example(const ProofreadExample& ex, const Judge& judge) {
  if (ex.references.empty()) throw InvalidArgument("example has no reference");
  FilterVerdict v;
  for (const std::string& ref : ex.references) {
    const FilterVerdict r = judge.check_filter_criteria(ex.source, ref);
    v.ref_has_errors |= r.ref_has_errors;
    v.ref_not_fluent |= r.ref_not_fluent;
    v.ref_diff_meaning |= r.ref_diff_meaning;
    v.ref_diff_tone |= r.ref_diff_tone;
  }
  v.keep = !(v.ref_has_errors || v.ref_not_fluent || v.ref_diff_meaning ||
             v.ref_diff_tone);
  return v;
}

void PipelineStats::add(LineOutcome outcome) {
  ++lines;
  switch (outcome) {
    case LineOutcome::kEmitted: ++emitted; break;
    case LineOutcome::kBlank: ++blank; break;
    case LineOutcome::kUnchanged: ++unchanged; break;
    case LineOutcome::kFiltered: ++filtered; break;
  }
}

nlohmann::json PipelineStats::to_json() const {
  return {{"lines", lines},         {"blank", blank},
          {"unchanged", unchanged}, {"filtered", filtered},
          {"emitted", emitted}};
}

uint64_t line_seed(uint64_t seed, size_t index) {
  return Rng::mix(seed, static_cast<uint64_t>(index));
}

LineOutcome process_line(const std::string& line, size_t index,
                         const PipelineConfig& config, const Vocabulary& vocab,
                         const Judge& judge, const ReferenceExpander& expander,
                         ProofreadExample* out) {
  if (!is_valid_utf8(line)) {
    throw InvalidArgument("line " + std::to_string(index + 1) +
                          ": invalid UTF-8");
  }
  const Tokenized probe = tokenize_whitespace(line);
  if (probe.tokens.empty()) return LineOutcome::kBlank;

  const uint64_t seed = line_seed(config.corruption.seed, index);
  const Rng base(seed);
  Rng corrupt_rng = base.split(0);
  Rng sim_rng = base.split(1);

  const Corruption c = corrupt(line, config.corruption, corrupt_rng);
  std::string simulated = c.corrupted;
  if (config.run_simulator) {
    simulated = simulate(c.corrupted, config.corruption.spatial, vocab,
                         config.simulator, sim_rng)
                    .corrected;
  }
  std::string source = apply_post_rules(simulated, line);
  if (source == line) return LineOutcome::kUnchanged;
  if (tokenize_whitespace(source).tokens.empty()) return LineOutcome::kUnchanged;

  ProofreadExample ex;
  ex.source = std::move(source);
  ex.references.push_back(line);
  if (expander) {
    for (std::string& alt : expander(line)) {
      if (std::find(ex.references.begin(), ex.references.end(), alt) ==
          ex.references.end()) {
        ex.references.push_back(std::move(alt));
      }
    }
  }
  FilterVerdict verdict;
  try {
    verdict = filter_example(ex, judge);
  } catch (const Error& e) {
    rethrow_with_context(e, "line " + std::to_string(index + 1));
  }
  if (!verdict.keep) return LineOutcome::kFiltered;

  ex.meta = {{"seed", seed},
             {"line", index + 1},
             {"pipeline_stage_tags",
              config.run_simulator
                  ? nlohmann::json{"corrupt", "simulate", "post_rules", "filter"}
                  : nlohmann::json{"corrupt", "post_rules", "filter"}},
             {"judge_verdicts", verdict.to_json()},
             {"corrupted", c.corrupted},
             {"edits", edit_log_to_json(c.log)}};
  *out = std::move(ex);
  return LineOutcome::kEmitted;
}

namespace {

struct LineResult {
  LineOutcome outcome;
  ProofreadExample example;
};

std::vector<LineResult> run_batch(const std::vector<std::string>& lines,
                                  size_t offset, const PipelineConfig& config,
                                  const Vocabulary& vocab, const Judge& judge,
                                  const ReferenceExpander& expander) {
  return parallel_map(lines.size(), config.jobs, [&](size_t i) {
    LineResult r;
    r.outcome = process_line(lines[i], offset + i, config, vocab, judge,
                             expander, &r.example);
    return r;
  });
}

}  // namespace

std::vector<ProofreadExample> build_dataset(
    const std::vector<std::string>& lines, const PipelineConfig& config,
    const Vocabulary& vocab, const Judge& judge,
    const ReferenceExpander& expander, PipelineStats* stats) {
  config.corruption.validate();
  std::vector<ProofreadExample> out;
  PipelineStats local;
  for (LineResult& r : run_batch(lines, 0, config, vocab, judge, expander)) {
    local.add(r.outcome);
    if (r.outcome == LineOutcome::kEmitted) out.push_back(std::move(r.example));
  }
  if (stats) *stats = local;
  return out;
}

PipelineStats build_dataset(std::istream& in, std::ostream& out,
                            const PipelineConfig& config,
                            const Vocabulary& vocab, const Judge& judge,
                            const ReferenceExpander& expander) {
  config.corruption.validate();
  PipelineStats stats;
  const size_t batch = std::max<size_t>(1, config.batch_size);
  std::vector<std::string> lines;
  size_t offset = 0;
  auto flush = [&] {
    for (LineResult& r : run_batch(lines, offset, config, vocab, judge, expander)) {
      stats.add(r.outcome);
      if (r.outcome == LineOutcome::kEmitted) {
        out << r.example.to_json().dump() << '\n';
      }
    }
    if (!out) throw IoError("failed writing dataset output");
    offset += lines.size();
    lines.clear();
  };
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
    if (lines.size() == batch) flush();
  }
  if (in.bad()) {
    throw IoError("read failed after line " + std::to_string(offset + lines.size()));
  }
  flush();
  return stats;
}

}  // namespace proofread
