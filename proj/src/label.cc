// Copyright 2026 The negkit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "negkit/label.h"

namespace negkit {

std::string_view LabelName(Label label) {
  switch (label) {
    case Label::kEntailment:
      return "entailment";
    case Label::kNeutral:
      return "neutral";
    case Label::kContradiction:
      return "contradiction";
  }
  return "unknown";
}

std::optional<Label> LabelFromCode(long long code) {
  if (code < 0 || code > 2) return std::nullopt;
  return static_cast<Label>(code);
}

std::optional<Label> LabelFromName(std::string_view name) {
  for (Label label : kAllLabels) {
    if (LabelName(label) == name) return label;
  }
  return std::nullopt;
}

}  // namespace negkit
