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

// Touch-noise calibration against a target literal (nearest-key) error rate.

#ifndef PROOFREAD_CALIBRATION_H_
#define PROOFREAD_CALIBRATION_H_

#include <cstdint>
#include <string_view>

#include "json.hpp"
#include "proofread/keyboard.h"
#include "proofread/rng.h"

namespace proofread {

struct LiteralErrorRate {
  size_t letters = 0;
  size_t errors = 0;
  double rate() const {
    return letters == 0 ? 0.0
                        : static_cast<double>(errors) /
                              static_cast<double>(letters);
  }
};

// Touches every ASCII letter of `sample` (case folded) with sample_touch and
// counts nearest-key mismatches. Other characters are skipped.
LiteralErrorRate literal_error_rate(std::string_view sample,
                                    const SpatialModel& model, Rng& rng);

struct CalibrationOptions {
  double target_error = 0.085;
  double sigma_lo = 0.02;
  double sigma_hi = 1.0;
  double tolerance = 1e-5;
  uint64_t seed = 0;
};

struct CalibrationResult {
  double sigma = 0.0;
  double error_rate = 0.0;
  size_t letters = 0;
  size_t evaluations = 0;

  nlohmann::json to_json() const;
};

// Bisection on an isotropic sigma. All evaluations share the same normal
// draws (in sample_touch order from Rng(seed)), so the error rate is a
// monotone step function of sigma and the search is exact up to tolerance.
// Throws InvalidArgument when the sample has no letters or the target is not
// bracketed by [sigma_lo, sigma_hi].
CalibrationResult calibrate_sigma(std::string_view sample,
                                  const CalibrationOptions& options);

}  // namespace proofread

#endif  // PROOFREAD_CALIBRATION_H_
