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

#ifndef PROOFREAD_RNG_H_
#define PROOFREAD_RNG_H_

#include <cstdint>
#include <random>

namespace proofread {

// Seedable, splittable generator. Child streams are derived by hashing the
// parent seed with a stream id, so per-example work can run in any order and
// still reproduce.
class Rng {
 public:
  explicit Rng(uint64_t seed = 0) : seed_(seed), engine_(mix(seed, 0)) {}

  static uint64_t mix(uint64_t a, uint64_t b);

  Rng split(uint64_t stream) const { return Rng(mix(seed_, stream + 1)); }
  uint64_t seed() const { return seed_; }

  double uniform() {
    return std::uniform_real_distribution<double>(0.0, 1.0)(engine_);
  }
  double normal() { return std::normal_distribution<double>(0.0, 1.0)(engine_); }
  // Uniform in [0, n).
  size_t below(size_t n) {
    return std::uniform_int_distribution<size_t>(0, n - 1)(engine_);
  }
  std::mt19937_64& engine() { return engine_; }

 private:
  uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace proofread

#endif  // PROOFREAD_RNG_H_
