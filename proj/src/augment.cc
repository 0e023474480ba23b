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

#include "negkit/augment.h"

#include <ostream>
#include <stdexcept>
#include <utility>

#include "json.hpp"
#include "negkit/error.h"
#include "negkit/negation.h"

namespace negkit {
namespace {

struct IrregularPast {
  std::string_view past;
  std::string_view lemma;
};

// Past forms that do-support has to map back to a lemma by lookup.
constexpr IrregularPast kIrregularPast[] = {
    {"ate", "eat"},       {"became", "become"},   {"began", "begin"},
    {"bit", "bite"},      {"blew", "blow"},       {"bought", "buy"},
    {"brought", "bring"}, {"built", "build"},     {"came", "come"},
    {"caught", "catch"},  {"chose", "choose"},    {"drank", "drink"},
    {"drew", "draw"},     {"drove", "drive"},     {"fed", "feed"},
    {"felt", "feel"},     {"fought", "fight"},    {"found", "find"},
    {"flew", "fly"},      {"forgot", "forget"},   {"gave", "give"},
    {"got", "get"},       {"grew", "grow"},       {"heard", "hear"},
    {"held", "hold"},     {"hid", "hide"},        {"hung", "hang"},
    {"kept", "keep"},     {"knew", "know"},       {"laid", "lay"},
    {"led", "lead"},      {"left", "leave"},      {"lent", "lend"},
    {"lost", "lose"},     {"made", "make"},       {"meant", "mean"},
    {"met", "meet"},      {"paid", "pay"},        {"ran", "run"},
    {"rang", "ring"},     {"rode", "ride"},       {"sang", "sing"},
    {"sank", "sink"},     {"sat", "sit"},         {"said", "say"},
    {"sent", "send"},     {"shook", "shake"},     {"shot", "shoot"},
    {"slept", "sleep"},   {"slid", "slide"},      {"sold", "sell"},
    {"spoke", "speak"},   {"spent", "spend"},     {"spun", "spin"},
    {"stood", "stand"},   {"stole", "steal"},     {"stuck", "stick"},
    {"swam", "swim"},     {"swept", "sweep"},     {"swung", "swing"},
    {"taught", "teach"},  {"thought", "think"},   {"threw", "throw"},
    {"told", "tell"},     {"took", "take"},       {"tore", "tear"},
    {"understood", "understand"},                 {"went", "go"},
    {"woke", "wake"},     {"won", "win"},         {"wore", "wear"},
    {"wove", "weave"},    {"wrote", "write"},
};

bool IsAsciiAlpha(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

bool IsWordLike(std::string_view token) {
  if (token.empty() || !IsAsciiAlpha(token.front())) return false;
  for (char c : token) {
    if (!IsAsciiAlpha(c) && c != '-') return false;
  }
  return true;
}

std::string_view StripSuffix(std::string_view word, std::string_view suffix) {
  return word.substr(0, word.size() - suffix.size());
}

// Lemma of a regular -ed form; prefers candidates found in the verb list.
std::string PastLemma(std::string_view word, const WordList& verbs) {
  if (word.ends_with("ied")) return std::string(StripSuffix(word, "ied")) + "y";
  std::string_view stem = StripSuffix(word, "ed");
  std::string with_e = std::string(stem) + "e";
  if (verbs.Contains(stem)) return std::string(stem);
  if (verbs.Contains(with_e)) return with_e;
  if (stem.size() >= 2 && stem[stem.size() - 1] == stem[stem.size() - 2]) {
    std::string_view undoubled = stem.substr(0, stem.size() - 1);
    if (verbs.Contains(undoubled)) return std::string(undoubled);
  }
  return std::string(stem);
}

// Lemma of a third-person -s form.
std::string PresentLemma(std::string_view word, const WordList& verbs) {
  if (word.ends_with("ies") && word.size() > 4) {
    return std::string(StripSuffix(word, "ies")) + "y";
  }
  if (word.ends_with("es")) {
    std::string_view stem = StripSuffix(word, "es");
    if (verbs.Contains(stem)) return std::string(stem);
    for (std::string_view tail : {"ch", "sh", "ss", "x", "z", "o"}) {
      if (stem.ends_with(tail)) return std::string(stem);
    }
  }
  return std::string(StripSuffix(word, "s"));
}

// "barks" -> "does not bark" and friends. Participles and unknown shapes
// get a plain "not" in front.
std::string DoSupport(std::string_view verb, const WordList& verbs) {
  std::string folded = FoldToken(verb);
  for (const auto& [past, lemma] : kIrregularPast) {
    if (folded == past) return "did not " + std::string(lemma);
  }
  std::string_view word = folded;
  if (word.ends_with("ing")) return "not " + std::string(verb);
  if (word.ends_with("ed")) return "did not " + PastLemma(word, verbs);
  if (word.ends_with("s") && !word.ends_with("ss")) {
    return "does not " + PresentLemma(word, verbs);
  }
  return "do not " + std::string(verb);
}

std::string NormalizeClause(std::string_view text) {
  TokenSeq tokens = Tokenize(text);
  std::string out;
  for (const Token& t : tokens) {
    if (IsPunctuationToken(t.text)) continue;
    if (!out.empty()) out.push_back(' ');
    out += FoldToken(t.text);
  }
  return out;
}

AugmentedExample Produce(const Example& source, Transformation kind,
                         std::string premise, std::string hypothesis,
                         Label label) {
  AugmentedExample out;
  out.example.id = source.id + ":" + std::string(TransformationTag(kind));
  out.example.premise = std::move(premise);
  out.example.hypothesis = std::move(hypothesis);
  out.example.label = label;
  out.source_id = source.id;
  out.transformation = kind;
  out.original_label = source.label;
  return out;
}

}  // namespace

std::string_view TransformationTag(Transformation kind) {
  switch (kind) {
    case Transformation::kAutoNegateHypothesis:
      return "auto_negate_hypothesis";
    case Transformation::kContrastNegatePremise:
      return "contrast_negate_premise";
    case Transformation::kAdversarialNegateHypothesis:
      return "adversarial_negate_hypothesis";
  }
  return "unknown";
}

std::optional<Transformation> TransformationFromTag(std::string_view tag) {
  for (Transformation kind : kAllTransformations) {
    if (TransformationTag(kind) == tag) return kind;
  }
  return std::nullopt;
}

std::string_view SkipReasonName(SkipReason reason) {
  switch (reason) {
    case SkipReason::kAlreadyNegated:
      return "AlreadyNegated";
    case SkipReason::kLabelIneligible:
      return "LabelIneligible";
    case SkipReason::kNoInsertionPoint:
      return "NoInsertionPoint";
  }
  return "Unknown";
}

bool IsMainVerbCandidate(std::string_view token, const InsertionRules& rules) {
  if (!IsWordLike(token)) return false;
  if (rules.auxiliaries.Contains(token) || rules.closed_class.Contains(token)) {
    return false;
  }
  std::string folded = FoldToken(token);
  std::string_view word = folded;
  if (rules.verbs.Contains(word)) return true;
  // Short words like "red", "bed" and "gas" only look inflected.
  if (word.size() < 4) return false;
  if (word.ends_with("ing") || word.ends_with("ed")) return true;
  // "-ss" endings are nouns far more often than verbs (glass, dress).
  return word.ends_with("s") && !word.ends_with("ss");
}

InsertionPoint FindInsertionPoint(const TokenSeq& tokens,
                                  const InsertionRules& rules) {
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (rules.auxiliaries.Contains(tokens[i].text)) {
      return InsertionPoint::AfterAuxiliary(i);
    }
  }
  for (std::size_t i = 1; i < tokens.size(); ++i) {
    if (IsMainVerbCandidate(tokens[i].text, rules)) {
      return InsertionPoint::BeforeMainVerb(i);
    }
  }
  return InsertionPoint::NotFound();
}

std::string InsertNegation(const TokenSeq& tokens, InsertionPoint point,
                           const InsertionRules& rules) {
  if (!point.found() || point.index >= tokens.size()) {
    throw std::invalid_argument("InsertNegation needs a found insertion point");
  }
  const std::string& source = tokens.source();
  const Token& anchor = tokens[point.index];
  std::string out;
  out.reserve(source.size() + 16);
  if (point.kind == InsertionPoint::Kind::kAfterAuxiliary) {
    out.append(source, 0, anchor.end);
    out += " not";
    out.append(source, anchor.end);
  } else if (rules.do_support) {
    out.append(source, 0, anchor.begin);
    out += DoSupport(anchor.text, rules.verbs);
    out.append(source, anchor.end);
  } else {
    out.append(source, 0, anchor.begin);
    out += "not ";
    out.append(source, anchor.begin);
  }
  return out;
}

AugmentOutcome NegateHypothesis(const Example& example,
                                const InsertionRules& rules,
                                const AugmentationPolicy& policy) {
  TokenSeq tokens = Tokenize(example.hypothesis);
  if (policy.skip_already_negated &&
      ContainsNegation(tokens).has_negation()) {
    return SkipReason::kAlreadyNegated;
  }
  auto mapped = policy.label_map.find(example.label);
  if (mapped == policy.label_map.end()) return SkipReason::kLabelIneligible;
  InsertionPoint point = FindInsertionPoint(tokens, rules);
  if (!point.found()) return SkipReason::kNoInsertionPoint;
  return Produce(example, Transformation::kAutoNegateHypothesis,
                 example.premise, InsertNegation(tokens, point, rules),
                 mapped->second);
}

AugmentOutcome MakeAdversarialPair(const Example& example,
                                   const InsertionRules& rules) {
  TokenSeq tokens = Tokenize(example.hypothesis);
  if (ContainsNegation(tokens).has_negation()) {
    return SkipReason::kAlreadyNegated;
  }
  if (example.label != Label::kEntailment &&
      !HypothesisRestatesPremise(example)) {
    return SkipReason::kLabelIneligible;
  }
  InsertionPoint point = FindInsertionPoint(tokens, rules);
  if (!point.found()) return SkipReason::kNoInsertionPoint;
  return Produce(example, Transformation::kAdversarialNegateHypothesis,
                 example.premise, InsertNegation(tokens, point, rules),
                 Label::kContradiction);
}

AugmentOutcome MakeContrastPair(const Example& example,
                                const InsertionRules& rules) {
  TokenSeq tokens = Tokenize(example.premise);
  if (ContainsNegation(tokens).has_negation()) {
    return SkipReason::kAlreadyNegated;
  }
  if (example.label != Label::kEntailment) return SkipReason::kLabelIneligible;
  InsertionPoint point = FindInsertionPoint(tokens, rules);
  if (!point.found()) return SkipReason::kNoInsertionPoint;
  return Produce(example, Transformation::kContrastNegatePremise,
                 InsertNegation(tokens, point, rules), example.hypothesis,
                 Label::kContradiction);
}

bool HypothesisRestatesPremise(const Example& example) {
  std::string hypothesis = NormalizeClause(example.hypothesis);
  if (hypothesis.empty()) return false;
  if (hypothesis == NormalizeClause(example.premise)) return true;

  std::string_view premise = example.premise;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= premise.size(); ++i) {
    std::size_t skip = 0;
    if (i == premise.size()) {
      skip = 1;
    } else if (premise[i] == ',' || premise[i] == ';') {
      skip = 1;
    } else if (premise.substr(i, 5) == " and ") {
      skip = 5;
    }
    if (skip == 0) continue;
    if (NormalizeClause(premise.substr(start, i - start)) == hypothesis) {
      return true;
    }
    start = i + skip;
    i = start - 1;
  }
  return false;
}

Corpus AugmentResult::AsCorpus(std::string name) const {
  std::vector<Example> plain;
  plain.reserve(examples.size());
  for (const AugmentedExample& ex : examples) plain.push_back(ex.example);
  return Corpus(std::move(name), std::move(plain));
}

AugmentResult AugmentCorpus(const Corpus& corpus, const InsertionRules& rules,
                            const AugmentationPolicy& policy,
                            const std::set<Transformation>& kinds) {
  AugmentResult result;
  AugmentReport& report = result.report;
  for (const Example& source : corpus) {
    ++report.sources_scanned;
    std::size_t produced_here = 0;
    for (Transformation kind : kAllTransformations) {
      if (!kinds.contains(kind)) continue;
      ++report.attempts;
      if (produced_here >= policy.max_per_source) {
        ++report.skipped_capped;
        continue;
      }
      AugmentOutcome outcome;
      switch (kind) {
        case Transformation::kAutoNegateHypothesis:
          outcome = NegateHypothesis(source, rules, policy);
          break;
        case Transformation::kContrastNegatePremise:
          outcome = MakeContrastPair(source, rules);
          break;
        case Transformation::kAdversarialNegateHypothesis:
          outcome = MakeAdversarialPair(source, rules);
          break;
      }
      if (auto* produced = std::get_if<AugmentedExample>(&outcome)) {
        ++report.produced;
        ++produced_here;
        result.examples.push_back(std::move(*produced));
        continue;
      }
      switch (std::get<SkipReason>(outcome)) {
        case SkipReason::kAlreadyNegated:
          ++report.skipped_already_negated;
          break;
        case SkipReason::kLabelIneligible:
          ++report.skipped_label_ineligible;
          break;
        case SkipReason::kNoInsertionPoint:
          ++report.skipped_no_insertion_point;
          break;
      }
    }
  }
  return result;
}

std::string FormatAugmentedExample(const AugmentedExample& example) {
  nlohmann::ordered_json record;
  record["id"] = example.example.id;
  record["premise"] = example.example.premise;
  record["hypothesis"] = example.example.hypothesis;
  record["label"] = LabelCode(example.example.label);
  record["source_id"] = example.source_id;
  record["transformation"] = TransformationTag(example.transformation);
  record["original_label"] = LabelCode(example.original_label);
  return record.dump();
}

std::size_t WriteAugmented(std::span<const AugmentedExample> examples,
                           std::ostream& out) {
  for (const AugmentedExample& ex : examples) {
    out << FormatAugmentedExample(ex) << '\n';
  }
  out.flush();
  if (!out) throw Error(ErrorKind::kIo, "write failure for augmented corpus");
  return examples.size();
}

}  // namespace negkit
