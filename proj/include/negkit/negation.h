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

#ifndef NEGKIT_NEGATION_H_
#define NEGKIT_NEGATION_H_

#include <array>
#include <cstddef>
#include <string_view>
#include <vector>

#include "negkit/corpus.h"
#include "negkit/tokenizer.h"

namespace negkit {

enum class Field { kText, kPremise, kHypothesis };

std::string_view FieldName(Field field);

struct CueHit {
  Field field = Field::kText;
  std::size_t token_index = 0;

  friend bool operator==(const CueHit&, const CueHit&) = default;
};

struct NegationVerdict {
  std::vector<CueHit> cues;

  bool has_negation() const { return !cues.empty(); }

  friend bool operator==(const NegationVerdict&,
                         const NegationVerdict&) = default;
};

// A token is a cue iff its folded form is exactly "not" or ends in "n't".
// "nothing", "knot" and "cannot" are not cues.
bool IsNegationCue(std::string_view token);

NegationVerdict ContainsNegation(std::string_view text);
NegationVerdict ContainsNegation(const TokenSeq& tokens,
                                 Field field = Field::kText);

// Cues from the premise first, then the hypothesis.
NegationVerdict ExampleHasNegation(const Example& example);

struct NegationSplit {
  Corpus negation;
  Corpus complement;
};

// Partitions in input order. The parts are named "<name>.negation" and
// "<name>.complement".
NegationSplit SplitByNegation(const Corpus& corpus);

struct NegationStats {
  std::size_t total = 0;
  std::size_t with_negation = 0;
  std::array<std::size_t, 3> total_by_label{};
  std::array<std::size_t, 3> negated_by_label{};

  bool ratio_defined() const { return total > 0; }
  // 0 when undefined.
  double ratio() const;
};

NegationStats ComputeNegationStats(const Corpus& corpus);

}  // namespace negkit

#endif  // NEGKIT_NEGATION_H_
