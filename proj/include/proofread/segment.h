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

#ifndef PROOFREAD_SEGMENT_H_
#define PROOFREAD_SEGMENT_H_

#include <string>
#include <string_view>
#include <vector>

#include "proofread/speculative.h"

namespace proofread {

struct Segmentation {
  std::vector<std::string> segments;
  // segments.size() + 1 entries; separators[0] leads, the last one trails.
  std::vector<std::string> separators;

  // separators[0] + segments[0] + separators[1] + ... reproduces the input.
  std::string rejoin() const;
  // Same layout with replacement segment texts.
  std::string rejoin(const std::vector<std::string>& replaced) const;
};

// Splits at whitespace runs containing a newline (paragraphs). A paragraph
// with more serving tokens than the largest bucket is packed into chunks at
// sentence ends (. ! ? possibly followed by closing quotes or brackets); a
// sentence that alone exceeds the bucket is split every max-bucket tokens.
// Segments never start or end with whitespace.
Segmentation segment(std::string_view document, const ServingConfig& config);

}  // namespace proofread

#endif  // PROOFREAD_SEGMENT_H_
