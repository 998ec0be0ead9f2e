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

#include <gtest/gtest.h>

#include <chrono>
#include <fstream>
#include <sstream>

#include "oracles.h"
#include "proofread/errors.h"

namespace proofread {
namespace {

std::string english_sample() {
  std::ifstream in(oracle::shipped_dir() / "english_sample.txt");
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

TEST(CalibrationTest, DefaultSigmaErrorRate) {
  const std::string sample = english_sample();
  const auto start = std::chrono::steady_clock::now();
  Rng rng(12345);
  const LiteralErrorRate r = literal_error_rate(sample, SpatialModel{}, rng);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  EXPECT_GE(sample.size(), 100000u);
  EXPECT_GT(r.letters, 90000u);
  EXPECT_GE(r.rate(), 0.065);
  EXPECT_LE(r.rate(), 0.105);
  EXPECT_LT(secs, 30.0);
}

// Independent estimate from the hardcoded key geometry and separate draws.
TEST(CalibrationTest, AgreesWithOracle) {
  const std::string sample = english_sample().substr(0, 60000);
  for (double sigma : {0.2, 0.3, 0.45}) {
    Rng rng(1);
    const LiteralErrorRate lib = literal_error_rate(sample, SpatialModel::isotropic(sigma), rng);
    std::mt19937_64 eng(99);
    std::normal_distribution<double> normal;
    size_t letters = 0, errors = 0;
    for (char ch : sample) {
      if (!std::isalpha(static_cast<unsigned char>(ch))) continue;
      const char c = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
      const oracle::Key k = oracle::key_of(c);
      ++letters;
      if (oracle::nearest(k.x + sigma * normal(eng), k.y + sigma * normal(eng)) != c) ++errors;
    }
    ASSERT_EQ(lib.letters, letters);
    const double p = static_cast<double>(errors) / static_cast<double>(letters);
    const double se = std::sqrt(2.0 * p * (1.0 - p) / static_cast<double>(letters));
    EXPECT_NEAR(lib.rate(), p, 4.0 * se + 1e-4) << "sigma " << sigma;
  }
}

TEST(CalibrationTest, RateIsMonotoneUnderSharedDraws) {
  const std::string sample = english_sample().substr(0, 20000);
  double last = -1.0;
  for (double sigma = 0.05; sigma <= 0.8; sigma += 0.05) {
    Rng rng(3);
    const double r = literal_error_rate(sample, SpatialModel::isotropic(sigma), rng).rate();
    ASSERT_GE(r, last) << sigma;
    last = r;
  }
}

TEST(CalibrationTest, ReproducesShippedSigma) {
  CalibrationOptions o;
  const CalibrationResult r = calibrate_sigma(english_sample(), o);
  EXPECT_NEAR(r.sigma, kDefaultSigma, 0.002);
  EXPECT_NEAR(r.error_rate, o.target_error, 0.001);
  EXPECT_GT(r.letters, 90000u);
  EXPECT_EQ(r.to_json().at("evaluations"), r.evaluations);
}

TEST(CalibrationTest, SeedsAgree) {
  const std::string sample = english_sample();
  for (uint64_t seed : {1, 2}) {
    CalibrationOptions o;
    o.seed = seed;
    EXPECT_NEAR(calibrate_sigma(sample, o).sigma, kDefaultSigma, 0.003);
  }
}

TEST(CalibrationTest, InvalidInputs) {
  CalibrationOptions o;
  EXPECT_THROW(calibrate_sigma("1234 ...", o), InvalidArgument);
  o.target_error = 0.9;
  EXPECT_THROW(calibrate_sigma(english_sample().substr(0, 5000), o), InvalidArgument);
}

}  // namespace
}  // namespace proofread
