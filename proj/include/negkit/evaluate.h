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

#ifndef NEGKIT_EVALUATE_H_
#define NEGKIT_EVALUATE_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "negkit/corpus.h"
#include "negkit/label.h"

namespace negkit {

// An exact rational quantity reported in percent: 100 * num / den.
// Accuracies are correct/total; deltas are differences of accuracies kept as
// one fraction so rounding happens exactly once.
class Percent {
 public:
  Percent() = default;
  // den must be positive.
  Percent(std::int64_t num, std::int64_t den);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  double value() const { return 100.0 * static_cast<double>(num_) /
                                static_cast<double>(den_); }

  // Tenths of a percent, ties rounded away from zero (half-up for
  // non-negative values). Computed in integers, so 78.25 rounds to 78.3.
  std::int64_t RoundedTenths() const;

  // "78.2", or "+7.4"/"-0.2"/"0.0" with `explicit_sign`.
  std::string Format(bool explicit_sign = false) const;

  // Exact rational comparison.
  friend bool operator==(const Percent& a, const Percent& b);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

Percent operator-(const Percent& a, const Percent& b);

struct PredictionRecord {
  std::string id;
  Label prediction = Label::kEntailment;
};

// Parses {"id": ..., "prediction": 0|1|2}. With `require_id` false a missing
// id is allowed and left empty (positional files).
PredictionRecord ParsePrediction(std::string_view line, bool require_id = true);

// Model predictions keyed by example id; ids are unique.
class PredictionSet {
 public:
  PredictionSet() = default;
  // Throws Error(kDuplicatePrediction) on a repeated id.
  PredictionSet(std::string model_name, std::vector<PredictionRecord> records);

  const std::string& model_name() const { return model_name_; }
  std::size_t size() const { return records_.size(); }
  // File order.
  std::span<const PredictionRecord> records() const { return records_; }
  std::optional<Label> Find(std::string_view id) const;

 private:
  std::string model_name_;
  std::vector<PredictionRecord> records_;
  std::map<std::string, std::size_t, std::less<>> index_;
};

PredictionSet ReadPredictions(std::istream& in, std::string model_name);
PredictionSet ReadPredictionsFile(const std::string& path,
                                  std::string model_name);

// For id-less files: the i-th prediction is paired with the i-th gold
// example. Surplus predictions get ids "#<line>" so they surface as
// unmatched.
PredictionSet ReadPositionalPredictions(std::istream& in, const Corpus& gold,
                                        std::string model_name);
PredictionSet ReadPositionalPredictionsFile(const std::string& path,
                                            const Corpus& gold,
                                            std::string model_name);

std::string FormatPrediction(const PredictionRecord& record);

struct LabelPair {
  Label gold = Label::kEntailment;
  Label predicted = Label::kEntailment;

  friend bool operator==(const LabelPair&, const LabelPair&) = default;
};

struct JoinResult {
  // Gold order.
  std::vector<LabelPair> pairs;
  std::vector<std::string> missing_predictions;
  std::vector<std::string> unmatched_predictions;

  bool full_coverage() const {
    return missing_predictions.empty() && unmatched_predictions.empty();
  }
};

// Pairs gold and predicted labels by id. Throws Error(kEmptyJoin) when no
// id matches.
JoinResult Join(const Corpus& gold, const PredictionSet& predictions);

struct ClassCounts {
  std::size_t n = 0;
  std::size_t n_correct = 0;

  // Empty when n == 0.
  std::optional<Percent> accuracy() const;

  friend bool operator==(const ClassCounts&, const ClassCounts&) = default;
};

using ConfusionMatrix = std::array<std::array<std::size_t, 3>, 3>;

struct EvalReport {
  std::string model_name;
  std::string subset_name;
  std::size_t n_total = 0;
  std::size_t n_correct = 0;
  std::array<ClassCounts, 3> per_class{};
  // confusion[gold][predicted]
  ConfusionMatrix confusion{};

  Percent accuracy() const;
  const ClassCounts& of(Label label) const {
    return per_class[LabelIndex(label)];
  }

  friend bool operator==(const EvalReport&, const EvalReport&) = default;
};

// Throws Error(kNoPairs) for an empty input.
EvalReport Accuracy(std::span<const LabelPair> pairs,
                    std::string model_name = {},
                    std::string subset_name = {});

using ExamplePredicate = std::function<bool(const Example&)>;

// Accuracy over the gold examples passing `keep`. Throws Error(kNoPairs) if
// none pass and Error(kEmptyJoin) if none of those have a prediction.
EvalReport SubsetEval(const Corpus& gold, const PredictionSet& predictions,
                      const ExamplePredicate& keep, std::string subset_name);

struct DeltaReport {
  std::string baseline_model;
  std::string candidate_model;
  std::string subset_name;
  Percent overall;
  // Empty when either side has no examples of the class.
  std::array<std::optional<Percent>, 3> per_class{};
};

// candidate - baseline, in percentage points. Throws Error(kSubsetMismatch)
// if the reports cover different subsets.
DeltaReport Compare(const EvalReport& baseline, const EvalReport& candidate);

}  // namespace negkit

#endif  // NEGKIT_EVALUATE_H_
