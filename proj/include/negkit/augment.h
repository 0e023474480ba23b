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

#ifndef NEGKIT_AUGMENT_H_
#define NEGKIT_AUGMENT_H_

#include <array>
#include <cstddef>
#include <iosfwd>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "negkit/corpus.h"
#include "negkit/label.h"
#include "negkit/lexicon.h"
#include "negkit/tokenizer.h"

namespace negkit {

enum class Transformation {
  kAutoNegateHypothesis,
  kContrastNegatePremise,
  kAdversarialNegateHypothesis,
};

// Output order of AugmentCorpus for one source example.
inline constexpr std::array<Transformation, 3> kAllTransformations = {
    Transformation::kAutoNegateHypothesis,
    Transformation::kContrastNegatePremise,
    Transformation::kAdversarialNegateHypothesis,
};

std::string_view TransformationTag(Transformation kind);
std::optional<Transformation> TransformationFromTag(std::string_view tag);

// Everything the insertion heuristic consults.
struct InsertionRules {
  AuxLexicon auxiliaries = AuxLexicon::Default();
  WordList verbs = DefaultVerbList();
  WordList closed_class = ClosedClassStoplist();
  // Rewrite "bark" -> "do not bark", "barks" -> "does not bark" and
  // "barked" -> "did not bark" instead of a bare "not" before main verbs.
  bool do_support = false;
};

struct InsertionPoint {
  enum class Kind { kAfterAuxiliary, kBeforeMainVerb, kNotFound };

  Kind kind = Kind::kNotFound;
  // Index of the auxiliary or of the main verb.
  std::size_t index = 0;

  static InsertionPoint AfterAuxiliary(std::size_t i) {
    return {Kind::kAfterAuxiliary, i};
  }
  static InsertionPoint BeforeMainVerb(std::size_t i) {
    return {Kind::kBeforeMainVerb, i};
  }
  static InsertionPoint NotFound() { return {}; }

  bool found() const { return kind != Kind::kNotFound; }

  friend bool operator==(const InsertionPoint&, const InsertionPoint&) = default;
};

// The first auxiliary wins. Failing that, the first token at index >= 1 that
// is neither an auxiliary, a closed-class word nor punctuation, and that
// either ends in "s", "ed" or "ing" or is in the verb list.
InsertionPoint FindInsertionPoint(const TokenSeq& tokens,
                                  const InsertionRules& rules);

// True iff `token` passes the main-verb candidate test above.
bool IsMainVerbCandidate(std::string_view token, const InsertionRules& rules);

// Splices "not" into tokens.source() at `point`, leaving every other byte
// untouched. `point` must be found().
std::string InsertNegation(const TokenSeq& tokens, InsertionPoint point,
                           const InsertionRules& rules);

struct AugmentationPolicy {
  // Eligible gold labels and the label the negated example receives.
  std::map<Label, Label> label_map = {
      {Label::kEntailment, Label::kContradiction}};
  bool skip_already_negated = true;
  // Cap on examples produced from one source.
  std::size_t max_per_source = std::numeric_limits<std::size_t>::max();
};

enum class SkipReason {
  kAlreadyNegated,
  kLabelIneligible,
  kNoInsertionPoint,
};

std::string_view SkipReasonName(SkipReason reason);

struct AugmentedExample {
  // id is "<source_id>:<transformation tag>".
  Example example;
  std::string source_id;
  Transformation transformation = Transformation::kAutoNegateHypothesis;
  Label original_label = Label::kEntailment;

  friend bool operator==(const AugmentedExample&,
                         const AugmentedExample&) = default;
};

using AugmentOutcome = std::variant<AugmentedExample, SkipReason>;

// Negates the hypothesis and relabels it through policy.label_map.
AugmentOutcome NegateHypothesis(const Example& example,
                                const InsertionRules& rules,
                                const AugmentationPolicy& policy = {});

// Keeps the premise and negates the hypothesis; the result is always a
// Contradiction. Sources must be Entailment or have a hypothesis that
// restates a clause of the premise.
AugmentOutcome MakeAdversarialPair(const Example& example,
                                   const InsertionRules& rules);

// Negates the premise of an Entailment pair and keeps the hypothesis; the
// result is a Contradiction.
AugmentOutcome MakeContrastPair(const Example& example,
                                const InsertionRules& rules);

// Case-insensitive match of the hypothesis against the whole premise or one
// of its clauses (split on ',', ';' and " and "), ignoring edge punctuation
// and surrounding whitespace.
bool HypothesisRestatesPremise(const Example& example);

struct AugmentReport {
  std::size_t sources_scanned = 0;
  std::size_t attempts = 0;
  std::size_t produced = 0;
  std::size_t skipped_already_negated = 0;
  std::size_t skipped_no_insertion_point = 0;
  std::size_t skipped_label_ineligible = 0;
  // Attempts not made because max_per_source was reached.
  std::size_t skipped_capped = 0;

  std::size_t skipped() const {
    return skipped_already_negated + skipped_no_insertion_point +
           skipped_label_ineligible + skipped_capped;
  }

  friend bool operator==(const AugmentReport&, const AugmentReport&) = default;
};

struct AugmentResult {
  std::vector<AugmentedExample> examples;
  AugmentReport report;

  // Plain examples only, provenance dropped.
  Corpus AsCorpus(std::string name) const;
};

// Runs every selected transformation on every source. Output is in source
// order, then kAllTransformations order.
AugmentResult AugmentCorpus(const Corpus& corpus, const InsertionRules& rules,
                            const AugmentationPolicy& policy,
                            const std::set<Transformation>& kinds);

// Corpus record plus "source_id", "transformation" and "original_label".
std::string FormatAugmentedExample(const AugmentedExample& example);

std::size_t WriteAugmented(std::span<const AugmentedExample> examples,
                           std::ostream& out);

}  // namespace negkit

#endif  // NEGKIT_AUGMENT_H_
