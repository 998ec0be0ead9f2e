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

#include "proofread/quantize.h"

#include <algorithm>
#include <cmath>

#include "proofread/errors.h"

namespace proofread {

Int8Table Int8Table::quantize(std::span<const double> values) {
  double max_abs = 0.0;
  for (double v : values) {
    if (!std::isfinite(v)) throw InvalidArgument("cannot quantize a non-finite value");
    max_abs = std::max(max_abs, std::abs(v));
  }
  const double scale = max_abs == 0.0 ? 1.0 : max_abs / 127.0;
  std::vector<int8_t> q(values.size());
  for (size_t i = 0; i < values.size(); ++i) {
    const double r = std::clamp(std::nearbyint(values[i] / scale), -127.0, 127.0);
    q[i] = static_cast<int8_t>(r);
  }
  return Int8Table(std::move(q), scale);
}

void Int8Table::copy_to(std::span<double> out) const {
  for (size_t i = 0; i < values_.size(); ++i) out[i] = scale_ * values_[i];
}

std::unique_ptr<TargetModel> quantize_tables(const TargetModel& model) {
  TableMap quantized;
  for (const auto& [name, table] : model.parameter_tables()) {
    std::vector<double> values(table->size());
    table->copy_to(values);
    quantized[name] = std::make_shared<Int8Table>(Int8Table::quantize(values));
  }
  return model.with_tables(std::move(quantized));
}

}  // namespace proofread
