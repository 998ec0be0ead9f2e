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

#include "proofread/calibration.h"

#include <cmath>
#include <vector>

#include "proofread/errors.h"
#include "proofread/text.h"

namespace proofread {

LiteralErrorRate literal_error_rate(std::string_view sample,
                                    const SpatialModel& model, Rng& rng) {
  model.validate();
  LiteralErrorRate r;
  for (char32_t c : to_u32(sample)) {
    if (!is_ascii_letter(c)) continue;
    const char32_t key = ascii_lower(c);
    const TouchPoint p = sample_touch(model, key, rng);
    ++r.letters;
    if (nearest_key(*model.layout, p) != key) ++r.errors;
  }
  return r;
}

nlohmann::json CalibrationResult::to_json() const {
  return {{"sigma", sigma},
          {"error_rate", error_rate},
          {"letters", letters},
          {"evaluations", evaluations}};
}

namespace {

struct Draw {
  char32_t key;
  TouchPoint center;
  double nx, ny;
};

}  // namespace

CalibrationResult calibrate_sigma(std::string_view sample,
                                  const CalibrationOptions& options) {
  if (!(options.target_error > 0.0 && options.target_error < 1.0)) {
    throw InvalidArgument("target error must lie in (0, 1)");
  }
  if (!(options.sigma_lo > 0.0 && options.sigma_lo < options.sigma_hi)) {
    throw InvalidArgument("need 0 < sigma_lo < sigma_hi");
  }
  const auto layout = KeyboardLayout::qwerty();
  Rng rng(options.seed);
  std::vector<Draw> draws;
  for (char32_t c : to_u32(sample)) {
    if (!is_ascii_letter(c)) continue;
    const char32_t key = ascii_lower(c);
    Draw d{key, key_center(*layout, key), 0.0, 0.0};
    d.nx = rng.normal();
    d.ny = rng.normal();
    draws.push_back(d);
  }
  if (draws.empty()) throw InvalidArgument("calibration sample has no letters");

  CalibrationResult result;
  result.letters = draws.size();
  auto rate = [&](double sigma) {
    ++result.evaluations;
    size_t errors = 0;
    for (const Draw& d : draws) {
      const TouchPoint p{d.center.x + sigma * d.nx, d.center.y + sigma * d.ny};
      if (nearest_key(*layout, p) != d.key) ++errors;
    }
    return static_cast<double>(errors) / static_cast<double>(draws.size());
  };

  double lo = options.sigma_lo, hi = options.sigma_hi;
  double r_lo = rate(lo), r_hi = rate(hi);
  if (r_lo > options.target_error || r_hi < options.target_error) {
    throw InvalidArgument("target error rate is not bracketed by the sigma range");
  }
  while (hi - lo > options.tolerance) {
    const double mid = 0.5 * (lo + hi);
    const double r = rate(mid);
    if (r < options.target_error) {
      lo = mid;
      r_lo = r;
    } else {
      hi = mid;
      r_hi = r;
    }
  }
  const bool pick_lo =
      std::abs(r_lo - options.target_error) <= std::abs(r_hi - options.target_error);
  result.sigma = pick_lo ? lo : hi;
  result.error_rate = pick_lo ? r_lo : r_hi;
  return result;
}

}  // namespace proofread
