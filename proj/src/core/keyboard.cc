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

#include "proofread/keyboard.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <set>
#include <utility>

#include "proofread/errors.h"
#include "proofread/text.h"

namespace proofread {

UnknownCharacter::UnknownCharacter(char32_t ch)
    : Error(ErrorCode::kUnknownCharacter,
            [ch] {
              char buf[48];
              std::snprintf(buf, sizeof(buf), "character U+%04X not in layout",
                            static_cast<unsigned>(ch));
              return std::string(buf);
            }()),
      ch_(ch) {}

namespace {

constexpr std::u32string_view kRequired =
    U"abcdefghijklmnopqrstuvwxyz0123456789 ',.";

void add_row(std::vector<KeyRecord>& keys, std::u32string_view row,
             double x0, double y) {
  for (size_t i = 0; i < row.size(); ++i) {
    keys.push_back({row[i], x0 + 0.5 + static_cast<double>(i), y, 1.0, 1.0});
  }
}

}  // namespace

std::shared_ptr<const KeyboardLayout> KeyboardLayout::qwerty() {
  static const std::shared_ptr<const KeyboardLayout> layout = [] {
    std::vector<KeyRecord> keys;
    add_row(keys, U"1234567890", 0.0, -0.5);
    add_row(keys, U"qwertyuiop", 0.0, 0.5);
    add_row(keys, U"asdfghjkl'", 0.25, 1.5);
    add_row(keys, U"zxcvbnm,.", 0.75, 2.5);
    keys.push_back({U' ', 5.0, 3.5, 5.0, 1.0});
    return std::make_shared<const KeyboardLayout>("qwerty-us",
                                                  std::move(keys));
  }();
  return layout;
}

KeyboardLayout::KeyboardLayout(std::string name, std::vector<KeyRecord> keys)
    : name_(std::move(name)), keys_(std::move(keys)) {
  std::sort(keys_.begin(), keys_.end(),
            [](const KeyRecord& a, const KeyRecord& b) { return a.ch < b.ch; });
  std::set<std::pair<double, double>> centers;
  for (size_t i = 0; i < keys_.size(); ++i) {
    const KeyRecord& k = keys_[i];
    if (i > 0 && keys_[i - 1].ch == k.ch) {
      throw InvalidArgument("layout has duplicate key '" + to_utf8(k.ch) + "'");
    }
    if (!(k.width > 0.0) || !(k.height > 0.0)) {
      throw InvalidArgument("key '" + to_utf8(k.ch) +
                            "' must have positive width and height");
    }
    if (!std::isfinite(k.center_x) || !std::isfinite(k.center_y)) {
      throw InvalidArgument("key '" + to_utf8(k.ch) + "' has a non-finite center");
    }
    if (!centers.emplace(k.center_x, k.center_y).second) {
      throw InvalidArgument("key '" + to_utf8(k.ch) + "' shares a center");
    }
  }
  for (char32_t ch : kRequired) {
    if (!contains(ch)) {
      throw InvalidArgument("layout is missing required key '" + to_utf8(ch) +
                            "'");
    }
  }
}

KeyboardLayout KeyboardLayout::from_json(const nlohmann::json& j) {
  try {
    std::vector<KeyRecord> keys;
    for (const auto& k : j.at("keys")) {
      const std::u32string ch = to_u32(k.at("ch").get<std::string>());
      if (ch.size() != 1) {
        throw InvalidArgument("layout key \"ch\" must be exactly one character");
      }
      keys.push_back({ch[0], k.at("x").get<double>(), k.at("y").get<double>(),
                      k.value("w", 1.0), k.value("h", 1.0)});
    }
    return KeyboardLayout(j.value("name", std::string("custom")),
                          std::move(keys));
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("malformed layout JSON: ") + e.what());
  }
}

KeyboardLayout KeyboardLayout::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open layout file " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(path.string() + ": " + e.what());
  }
  return from_json(j);
}

bool KeyboardLayout::contains(char32_t ch) const {
  return std::binary_search(
      keys_.begin(), keys_.end(), KeyRecord{ch},
      [](const KeyRecord& a, const KeyRecord& b) { return a.ch < b.ch; });
}

const KeyRecord& KeyboardLayout::key(char32_t ch) const {
  auto it = std::lower_bound(
      keys_.begin(), keys_.end(), KeyRecord{ch},
      [](const KeyRecord& a, const KeyRecord& b) { return a.ch < b.ch; });
  if (it == keys_.end() || it->ch != ch) throw UnknownCharacter(ch);
  return *it;
}

nlohmann::json KeyboardLayout::to_json() const {
  nlohmann::json keys = nlohmann::json::array();
  for (const KeyRecord& k : keys_) {
    keys.push_back({{"ch", to_utf8(k.ch)},
                    {"x", k.center_x},
                    {"y", k.center_y},
                    {"w", k.width},
                    {"h", k.height}});
  }
  return {{"name", name_}, {"keys", keys}};
}

SpatialModel SpatialModel::isotropic(double sigma) {
  SpatialModel m;
  m.sigma_x = m.sigma_y = sigma;
  m.validate();
  return m;
}

void SpatialModel::validate() const {
  if (!(sigma_x >= 0.0) || !(sigma_y >= 0.0) || !std::isfinite(sigma_x) ||
      !std::isfinite(sigma_y)) {
    throw InvalidArgument("spatial sigma must be finite and non-negative");
  }
  if (!layout) throw InvalidArgument("spatial model has no layout");
}

TouchPoint key_center(const KeyboardLayout& layout, char32_t ch) {
  const KeyRecord& k = layout.key(ch);
  return {k.center_x, k.center_y};
}

TouchPoint sample_touch(const SpatialModel& model, char32_t ch, Rng& rng) {
  TouchPoint p = key_center(*model.layout, ch);
  // Both draws happen regardless of sigma so the stream position does not
  // depend on the noise level.
  const double nx = rng.normal();
  const double ny = rng.normal();
  p.x += model.sigma_x * nx;
  p.y += model.sigma_y * ny;
  return p;
}

char32_t nearest_key(const KeyboardLayout& layout, TouchPoint p) {
  char32_t best = 0;
  double best_d = std::numeric_limits<double>::infinity();
  // keys() is sorted by code point, so strict < keeps the lowest on ties.
  for (const KeyRecord& k : layout.keys()) {
    const double dx = p.x - k.center_x;
    const double dy = p.y - k.center_y;
    const double d = dx * dx + dy * dy;
    if (d < best_d) {
      best_d = d;
      best = k.ch;
    }
  }
  return best;
}

namespace {

double axis_term(double d, double sigma) {
  if (sigma == 0.0) {
    return d == 0.0 ? 0.0 : -std::numeric_limits<double>::infinity();
  }
  const double z = d / sigma;
  return -0.5 * z * z;
}

}  // namespace

double touch_log_likelihood(const SpatialModel& model, TouchPoint p,
                            char32_t ch) {
  const TouchPoint c = key_center(*model.layout, ch);
  return axis_term(p.x - c.x, model.sigma_x) +
         axis_term(p.y - c.y, model.sigma_y);
}

std::vector<char32_t> neighbor_keys(const KeyboardLayout& layout, char32_t ch,
                                    double radius) {
  const TouchPoint c = key_center(layout, ch);
  std::vector<char32_t> out;
  for (const KeyRecord& k : layout.keys()) {
    if (k.ch == ch) continue;
    if (std::hypot(k.center_x - c.x, k.center_y - c.y) <= radius) {
      out.push_back(k.ch);
    }
  }
  return out;
}

}  // namespace proofread
