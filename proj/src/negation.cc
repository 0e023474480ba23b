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

#include "negkit/negation.h"

#include <utility>

namespace negkit {

std::string_view FieldName(Field field) {
  switch (field) {
    case Field::kText:
      return "text";
    case Field::kPremise:
      return "premise";
    case Field::kHypothesis:
      return "hypothesis";
  }
  return "unknown";
}

bool IsNegationCue(std::string_view token) {
  std::string folded = FoldToken(token);
  return folded == "not" || std::string_view(folded).ends_with("n't");
}

NegationVerdict ContainsNegation(const TokenSeq& tokens, Field field) {
  NegationVerdict verdict;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (IsNegationCue(tokens[i].text)) verdict.cues.push_back({field, i});
  }
  return verdict;
}

NegationVerdict ContainsNegation(std::string_view text) {
  return ContainsNegation(Tokenize(text), Field::kText);
}

NegationVerdict ExampleHasNegation(const Example& example) {
  NegationVerdict verdict =
      ContainsNegation(Tokenize(example.premise), Field::kPremise);
  NegationVerdict hyp =
      ContainsNegation(Tokenize(example.hypothesis), Field::kHypothesis);
  verdict.cues.insert(verdict.cues.end(), hyp.cues.begin(), hyp.cues.end());
  return verdict;
}

NegationSplit SplitByNegation(const Corpus& corpus) {
  std::vector<Example> negated;
  std::vector<Example> plain;
  for (const Example& ex : corpus) {
    (ExampleHasNegation(ex).has_negation() ? negated : plain).push_back(ex);
  }
  return {Corpus(corpus.name() + ".negation", std::move(negated)),
          Corpus(corpus.name() + ".complement", std::move(plain))};
}

double NegationStats::ratio() const {
  if (total == 0) return 0.0;
  return static_cast<double>(with_negation) / static_cast<double>(total);
}

NegationStats ComputeNegationStats(const Corpus& corpus) {
  NegationStats stats;
  for (const Example& ex : corpus) {
    ++stats.total;
    ++stats.total_by_label[LabelIndex(ex.label)];
    if (ExampleHasNegation(ex).has_negation()) {
      ++stats.with_negation;
      ++stats.negated_by_label[LabelIndex(ex.label)];
    }
  }
  return stats;
}

}  // namespace negkit
