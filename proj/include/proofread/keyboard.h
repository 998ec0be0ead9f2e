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

// Keyboard geometry and the Gaussian touch model.
//
// Coordinates are in key-width units with the origin at the top-left corner
// of the top letter row ('q'). Rows are staggered by 0, 0.25 and 0.75 keys;
// the space bar spans five keys on the fourth row. The number row sits above
// the letters, at negative y.

#ifndef PROOFREAD_KEYBOARD_H_
#define PROOFREAD_KEYBOARD_H_

#include <filesystem>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "proofread/rng.h"

namespace proofread {

// Isotropic sigma (key widths) whose literal per-letter error rate on English
// text is 8.5%; produced by calibrate_sigma() on data/english_sample.txt.
inline constexpr double kDefaultSigma = 0.2520;

struct TouchPoint {
  double x = 0.0;
  double y = 0.0;
};

struct KeyRecord {
  char32_t ch = 0;
  double center_x = 0.0;
  double center_y = 0.0;
  double width = 1.0;
  double height = 1.0;
};

class KeyboardLayout {
 public:
  // US QWERTY, see the file comment for the convention.
  static std::shared_ptr<const KeyboardLayout> qwerty();

  // {"name": str, "keys": [{"ch": str, "x": num, "y": num, "w": num, "h": num}]}
  // with x/y the key center. Throws InvalidArgument on schema or invariant
  // violations.
  static KeyboardLayout from_json(const nlohmann::json& j);
  static KeyboardLayout load(const std::filesystem::path& path);

  KeyboardLayout(std::string name, std::vector<KeyRecord> keys);

  const std::string& name() const { return name_; }
  // Sorted by code point.
  std::span<const KeyRecord> keys() const { return keys_; }
  bool contains(char32_t ch) const;
  const KeyRecord& key(char32_t ch) const;

  nlohmann::json to_json() const;

 private:
  std::string name_;
  std::vector<KeyRecord> keys_;
};

// sigma_x == sigma_y == 0 is allowed and means noiseless touches; the
// log-likelihood then degenerates to 0 at the key center and -inf elsewhere.
struct SpatialModel {
  double sigma_x = kDefaultSigma;
  double sigma_y = kDefaultSigma;
  std::shared_ptr<const KeyboardLayout> layout = KeyboardLayout::qwerty();

  static SpatialModel isotropic(double sigma);
  void validate() const;
};

TouchPoint key_center(const KeyboardLayout& layout, char32_t ch);

TouchPoint sample_touch(const SpatialModel& model, char32_t ch, Rng& rng);

// Nearest key center by Euclidean distance; ties go to the lower code point.
char32_t nearest_key(const KeyboardLayout& layout, TouchPoint p);

// Gaussian log-density of p around key_center(ch) with the normalizing
// constant dropped (it is shared by every key).
double touch_log_likelihood(const SpatialModel& model, TouchPoint p,
                            char32_t ch);

// Keys other than ch whose centers lie within `radius` of ch's center.
std::vector<char32_t> neighbor_keys(const KeyboardLayout& layout, char32_t ch,
                                    double radius = 1.5);

}  // namespace proofread

#endif  // PROOFREAD_KEYBOARD_H_
