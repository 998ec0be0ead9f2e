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

// Post-training int8 quantization of model parameter tables: symmetric,
// one scale per table, s = max|x| / 127 (s = 1 for an all-zero table),
// q = round(x / s).

#ifndef PROOFREAD_QUANTIZE_H_
#define PROOFREAD_QUANTIZE_H_

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "proofread/target_model.h"

namespace proofread {

class Int8Table : public ParameterTable {
 public:
  Int8Table(std::vector<int8_t> values, double scale)
      : values_(std::move(values)), scale_(scale) {}

  static Int8Table quantize(std::span<const double> values);

  size_t size() const override { return values_.size(); }
  double at(size_t i) const override { return scale_ * values_[i]; }
  void copy_to(std::span<double> out) const override;
  size_t storage_bytes() const override {
    return values_.size() + sizeof(float);
  }
  double scale() const { return scale_; }
  const std::vector<int8_t>& values() const { return values_; }

 private:
  std::vector<int8_t> values_;
  double scale_;
};

// The same model with every parameter table replaced by its Int8Table.
std::unique_ptr<TargetModel> quantize_tables(const TargetModel& model);

}  // namespace proofread

#endif  // PROOFREAD_QUANTIZE_H_
