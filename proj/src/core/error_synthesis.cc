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

#include "proofread/error_synthesis.h"

#include <cmath>
#include <optional>

#include "proofread/errors.h"
#include "proofread/text.h"

namespace proofread {

namespace {

constexpr int kMaxRejectionDraws = 64;

struct NamedOperator {
  Operator op;
  std::string_view name;
};
constexpr std::array<NamedOperator, 6> kNames = {{
    {Operator::kOmission, "omission"},
    {Operator::kInsertion, "insertion"},
    {Operator::kTransposition, "transposition"},
    {Operator::kDoubleTap, "double_tap"},
    {Operator::kOmitDouble, "omit_double"},
    {Operator::kPositional, "positional"},
}};

// A key other than ch, drawn from the touch model conditioned on missing ch.
char32_t slip_key(const SpatialModel& spatial, char32_t ch, Rng& rng) {
  const KeyboardLayout& layout = *spatial.layout;
  for (int i = 0; i < kMaxRejectionDraws; ++i) {
    const char32_t hit = nearest_key(layout, sample_touch(spatial, ch, rng));
    if (hit != ch) return hit;
  }
  std::vector<char32_t> near = neighbor_keys(layout, ch);
  if (near.empty()) near = neighbor_keys(layout, ch, 3.0);
  if (near.empty()) return ch;
  return near[rng.below(near.size())];
}

EditRecord make_edit(Operator op, std::u32string_view text, size_t pos,
                     const SpatialModel& spatial, bool uniform_insertion,
                     Rng& rng) {
  const char32_t c = text[pos];
  std::u32string original(1, c);
  std::u32string emitted;
  switch (op) {
    case Operator::kOmission:
      break;
    case Operator::kInsertion: {
      const char32_t extra = uniform_insertion
                                 ? static_cast<char32_t>(U'a' + rng.below(26))
                                 : slip_key(spatial, c, rng);
      emitted = {extra, c};
      break;
    }
    case Operator::kTransposition:
      original.push_back(text[pos + 1]);
      emitted = {text[pos + 1], c};
      break;
    case Operator::kDoubleTap:
      emitted = {c, c};
      break;
    case Operator::kOmitDouble:
      original.push_back(text[pos + 1]);
      emitted = {c};
      break;
    case Operator::kPositional:
      emitted = {slip_key(spatial, c, rng)};
      break;
  }
  return {pos, op, to_utf8(original), to_utf8(emitted)};
}

}  // namespace

std::string_view operator_name(Operator op) {
  for (const auto& n : kNames) {
    if (n.op == op) return n.name;
  }
  return "unknown";
}

Operator operator_from_name(std::string_view name) {
  for (const auto& n : kNames) {
    if (n.name == name) return n.op;
  }
  throw InvalidArgument("unknown operator '" + std::string(name) + "'");
}

double CorruptionConfig::probability(Operator op) const {
  switch (op) {
    case Operator::kOmission: return p_omit;
    case Operator::kInsertion: return p_insert;
    case Operator::kTransposition: return p_transpose;
    case Operator::kDoubleTap: return p_double_tap;
    case Operator::kOmitDouble: return p_omit_double;
    case Operator::kPositional: return p_positional;
  }
  return 0.0;
}

double CorruptionConfig::total_probability() const {
  double total = 0.0;
  for (Operator op : kAllOperators) total += probability(op);
  return total;
}

void CorruptionConfig::validate() const {
  for (Operator op : kAllOperators) {
    const double p = probability(op);
    if (!(p >= 0.0 && p <= 1.0)) {
      throw InvalidArgument("probability for " +
                            std::string(operator_name(op)) +
                            " must lie in [0, 1]");
    }
  }
  if (total_probability() > 1.0 + 1e-12) {
    throw InvalidArgument("operator probabilities must sum to at most 1");
  }
  spatial.validate();
}

nlohmann::json CorruptionConfig::to_json() const {
  return {{"p_omit", p_omit},
          {"p_insert", p_insert},
          {"p_transpose", p_transpose},
          {"p_double_tap", p_double_tap},
          {"p_omit_double", p_omit_double},
          {"p_positional", p_positional},
          {"sigma_x", spatial.sigma_x},
          {"sigma_y", spatial.sigma_y},
          {"seed", seed},
          {"uniform_insertion", uniform_insertion}};
}

CorruptionConfig CorruptionConfig::from_json(const nlohmann::json& j) {
  CorruptionConfig c;
  try {
    c.p_omit = j.value("p_omit", c.p_omit);
    c.p_insert = j.value("p_insert", c.p_insert);
    c.p_transpose = j.value("p_transpose", c.p_transpose);
    c.p_double_tap = j.value("p_double_tap", c.p_double_tap);
    c.p_omit_double = j.value("p_omit_double", c.p_omit_double);
    c.p_positional = j.value("p_positional", c.p_positional);
    if (j.contains("sigma")) {
      c.spatial.sigma_x = c.spatial.sigma_y = j.at("sigma").get<double>();
    }
    c.spatial.sigma_x = j.value("sigma_x", c.spatial.sigma_x);
    c.spatial.sigma_y = j.value("sigma_y", c.spatial.sigma_y);
    c.seed = j.value("seed", c.seed);
    c.uniform_insertion = j.value("uniform_insertion", c.uniform_insertion);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("malformed corruption config: ") +
                          e.what());
  }
  c.validate();
  return c;
}

nlohmann::json edit_log_to_json(const EditLog& log) {
  nlohmann::json out = nlohmann::json::array();
  for (const EditRecord& e : log) {
    out.push_back({{"position", e.position},
                   {"operator", operator_name(e.op)},
                   {"original", e.original},
                   {"emitted", e.emitted}});
  }
  return out;
}

EditLog edit_log_from_json(const nlohmann::json& j) {
  EditLog log;
  try {
    for (const auto& e : j) {
      log.push_back({e.at("position").get<size_t>(),
                     operator_from_name(e.at("operator").get<std::string>()),
                     e.at("original").get<std::string>(),
                     e.at("emitted").get<std::string>()});
    }
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("malformed edit log: ") + e.what());
  }
  return log;
}

bool operator_applicable(Operator op, std::u32string_view text, size_t pos,
                         const KeyboardLayout& layout) {
  if (pos >= text.size() || !layout.contains(text[pos])) return false;
  const bool has_next = pos + 1 < text.size();
  switch (op) {
    case Operator::kTransposition:
      return has_next && text[pos + 1] != text[pos] &&
             layout.contains(text[pos + 1]);
    case Operator::kOmitDouble:
      return has_next && text[pos + 1] == text[pos];
    default:
      return true;
  }
}

std::string apply_operator(Operator op, std::string_view text, size_t pos,
                           const SpatialModel& spatial, Rng& rng) {
  spatial.validate();
  const std::u32string u = to_u32(text);
  if (!operator_applicable(op, u, pos, *spatial.layout)) {
    throw OutOfRange(std::string(operator_name(op)) +
                     " is not applicable at position " + std::to_string(pos));
  }
  const EditRecord e = make_edit(op, u, pos, spatial, false, rng);
  const std::u32string original = to_u32(e.original);
  return to_utf8(u.substr(0, pos)) + e.emitted +
         to_utf8(u.substr(pos + original.size()));
}

Corruption corrupt(std::string_view text, const CorruptionConfig& config) {
  Rng rng(config.seed);
  return corrupt(text, config, rng);
}

Corruption corrupt(std::string_view text, const CorruptionConfig& config,
                   Rng& rng) {
  config.validate();
  const KeyboardLayout& layout = *config.spatial.layout;
  const std::u32string u = to_u32(text);
  Corruption out;
  std::u32string corrupted;
  corrupted.reserve(u.size() + u.size() / 8);
  size_t pos = 0;
  while (pos < u.size()) {
    if (!layout.contains(u[pos])) {
      corrupted.push_back(u[pos++]);
      continue;
    }
    // Fixed sub-intervals of [0, 1); an inapplicable operator's interval
    // resolves to a no-op.
    const double draw = rng.uniform();
    double upper = 0.0;
    std::optional<Operator> chosen;
    for (Operator op : kAllOperators) {
      upper += config.probability(op);
      if (draw < upper) {
        chosen = op;
        break;
      }
    }
    if (!chosen || !operator_applicable(*chosen, u, pos, layout)) {
      corrupted.push_back(u[pos++]);
      continue;
    }
    EditRecord e = make_edit(*chosen, u, pos, config.spatial,
                             config.uniform_insertion, rng);
    corrupted += to_u32(e.emitted);
    pos += to_u32(e.original).size();
    out.log.push_back(std::move(e));
  }
  out.corrupted = to_utf8(corrupted);
  return out;
}

std::string replay(std::string_view source, const EditLog& log) {
  const std::u32string u = to_u32(source);
  std::string out;
  size_t pos = 0;
  for (const EditRecord& e : log) {
    if (e.position < pos || e.position > u.size()) {
      throw InvalidArgument("edit log positions out of order");
    }
    out += to_utf8(u.substr(pos, e.position - pos));
    const std::u32string original = to_u32(e.original);
    if (u.compare(e.position, original.size(), original) != 0) {
      throw InvalidArgument("edit log does not match source at position " +
                            std::to_string(e.position));
    }
    out += e.emitted;
    pos = e.position + original.size();
  }
  out += to_utf8(u.substr(pos));
  return out;
}

}  // namespace proofread
