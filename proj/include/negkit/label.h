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

#ifndef NEGKIT_LABEL_H_
#define NEGKIT_LABEL_H_

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

namespace negkit {

// Three-way inference class. The integer codes follow the SNLI convention
// and are what every writer in this library emits.
enum class Label : std::uint8_t {
  kEntailment = 0,
  kNeutral = 1,
  kContradiction = 2,
};

inline constexpr std::array<Label, 3> kAllLabels = {
    Label::kEntailment, Label::kNeutral, Label::kContradiction};

constexpr int LabelCode(Label label) { return static_cast<int>(label); }

constexpr std::size_t LabelIndex(Label label) {
  return static_cast<std::size_t>(label);
}

// Lowercase name: "entailment", "neutral" or "contradiction".
std::string_view LabelName(Label label);

// Empty for anything outside {0, 1, 2}, including the -1 "no consensus" code.
std::optional<Label> LabelFromCode(long long code);

// Accepts exactly the three lowercase names.
std::optional<Label> LabelFromName(std::string_view name);

}  // namespace negkit

#endif  // NEGKIT_LABEL_H_
