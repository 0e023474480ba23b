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

#include "negkit/evaluate.h"

#include <cstdlib>
#include <fstream>
#include <istream>
#include <set>
#include <stdexcept>
#include <utility>

#include "json.hpp"
#include "negkit/error.h"

namespace negkit {
namespace {

using nlohmann::json;

// round(1000 * num / den), ties away from zero; den > 0.
std::int64_t TenthsOf(std::int64_t num, std::int64_t den) {
  bool negative = num < 0;
  std::int64_t magnitude = negative ? -num : num;
  std::int64_t tenths = (2000 * magnitude + den) / (2 * den);
  return negative ? -tenths : tenths;
}

Label ParsePredictedLabel(const json& value, std::string_view line) {
  if (value.is_number_integer()) {
    if (auto label = LabelFromCode(value.get<long long>())) return *label;
  } else if (value.is_string()) {
    if (auto label = LabelFromName(value.get_ref<const std::string&>())) {
      return *label;
    }
  }
  throw Error(ErrorKind::kUnknownLabel,
              "invalid prediction in " + std::string(line.substr(0, 80)));
}

std::ifstream OpenOrThrow(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIo, "cannot open " + path);
  return in;
}

template <typename Fn>
void ForEachRecordLine(std::istream& in, Fn&& fn) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    try {
      fn(line, line_no);
    } catch (const Error& e) {
      throw Error(e.kind(), "prediction line " + std::to_string(line_no) +
                                ": " + e.what());
    }
  }
  if (in.bad()) throw Error(ErrorKind::kIo, "read failure in prediction file");
}

}  // namespace

Percent::Percent(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
  if (den <= 0) throw std::invalid_argument("Percent denominator must be > 0");
}

std::int64_t Percent::RoundedTenths() const { return TenthsOf(num_, den_); }

std::string Percent::Format(bool explicit_sign) const {
  std::int64_t tenths = RoundedTenths();
  std::string sign;
  if (tenths < 0) {
    sign = "-";
  } else if (explicit_sign && tenths > 0) {
    sign = "+";
  }
  std::int64_t magnitude = std::llabs(tenths);
  return sign + std::to_string(magnitude / 10) + "." +
         std::to_string(magnitude % 10);
}

bool operator==(const Percent& a, const Percent& b) {
  return static_cast<__int128>(a.num_) * b.den_ ==
         static_cast<__int128>(b.num_) * a.den_;
}

Percent operator-(const Percent& a, const Percent& b) {
  return Percent(a.num() * b.den() - b.num() * a.den(), a.den() * b.den());
}

PredictionRecord ParsePrediction(std::string_view line, bool require_id) {
  json record = json::parse(line, nullptr, /*allow_exceptions=*/false);
  if (record.is_discarded() || !record.is_object()) {
    throw Error(ErrorKind::kMalformedRecord,
                "not a JSON object: " + std::string(line.substr(0, 80)));
  }
  PredictionRecord out;
  if (auto id = record.find("id"); id != record.end()) {
    if (!id->is_string() || id->get_ref<const std::string&>().empty()) {
      throw Error(ErrorKind::kMalformedRecord, "\"id\" must be non-empty text");
    }
    out.id = id->get<std::string>();
  } else if (require_id) {
    throw Error(ErrorKind::kMalformedRecord, "missing \"id\"");
  }
  auto prediction = record.find("prediction");
  if (prediction == record.end()) {
    throw Error(ErrorKind::kMalformedRecord, "missing \"prediction\"");
  }
  out.prediction = ParsePredictedLabel(*prediction, line);
  return out;
}

PredictionSet::PredictionSet(std::string model_name,
                             std::vector<PredictionRecord> records)
    : model_name_(std::move(model_name)), records_(std::move(records)) {
  for (std::size_t i = 0; i < records_.size(); ++i) {
    if (!index_.emplace(records_[i].id, i).second) {
      throw Error(ErrorKind::kDuplicatePrediction,
                  "model " + model_name_ + " predicts id \"" + records_[i].id +
                      "\" twice");
    }
  }
}

std::optional<Label> PredictionSet::Find(std::string_view id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return records_[it->second].prediction;
}

PredictionSet ReadPredictions(std::istream& in, std::string model_name) {
  std::vector<PredictionRecord> records;
  ForEachRecordLine(in, [&](const std::string& line, std::size_t) {
    records.push_back(ParsePrediction(line));
  });
  return PredictionSet(std::move(model_name), std::move(records));
}

PredictionSet ReadPredictionsFile(const std::string& path,
                                  std::string model_name) {
  std::ifstream in = OpenOrThrow(path);
  return ReadPredictions(in, std::move(model_name));
}

PredictionSet ReadPositionalPredictions(std::istream& in, const Corpus& gold,
                                        std::string model_name) {
  std::vector<PredictionRecord> records;
  ForEachRecordLine(in, [&](const std::string& line, std::size_t line_no) {
    PredictionRecord record = ParsePrediction(line, /*require_id=*/false);
    std::size_t position = records.size();
    record.id = position < gold.size() ? gold[position].id
                                       : "#" + std::to_string(line_no);
    records.push_back(std::move(record));
  });
  return PredictionSet(std::move(model_name), std::move(records));
}

PredictionSet ReadPositionalPredictionsFile(const std::string& path,
                                            const Corpus& gold,
                                            std::string model_name) {
  std::ifstream in = OpenOrThrow(path);
  return ReadPositionalPredictions(in, gold, std::move(model_name));
}

std::string FormatPrediction(const PredictionRecord& record) {
  nlohmann::ordered_json out;
  out["id"] = record.id;
  out["prediction"] = LabelCode(record.prediction);
  return out.dump();
}

JoinResult Join(const Corpus& gold, const PredictionSet& predictions) {
  JoinResult result;
  std::set<std::string_view> gold_ids;
  for (const Example& ex : gold) {
    gold_ids.insert(ex.id);
    if (auto predicted = predictions.Find(ex.id)) {
      result.pairs.push_back({ex.label, *predicted});
    } else {
      result.missing_predictions.push_back(ex.id);
    }
  }
  for (const PredictionRecord& record : predictions.records()) {
    if (!gold_ids.contains(record.id)) {
      result.unmatched_predictions.push_back(record.id);
    }
  }
  if (result.pairs.empty()) {
    throw Error(ErrorKind::kEmptyJoin,
                "no prediction of model " + predictions.model_name() +
                    " matches an id in " + gold.name() +
                    " (id scheme mismatch?)");
  }
  return result;
}

std::optional<Percent> ClassCounts::accuracy() const {
  if (n == 0) return std::nullopt;
  return Percent(static_cast<std::int64_t>(n_correct),
                 static_cast<std::int64_t>(n));
}

Percent EvalReport::accuracy() const {
  if (n_total == 0) throw Error(ErrorKind::kNoPairs, "empty report");
  return Percent(static_cast<std::int64_t>(n_correct),
                 static_cast<std::int64_t>(n_total));
}

EvalReport Accuracy(std::span<const LabelPair> pairs, std::string model_name,
                    std::string subset_name) {
  if (pairs.empty()) {
    throw Error(ErrorKind::kNoPairs,
                "no examples to score for subset " + subset_name);
  }
  EvalReport report;
  report.model_name = std::move(model_name);
  report.subset_name = std::move(subset_name);
  for (const LabelPair& pair : pairs) {
    ClassCounts& counts = report.per_class[LabelIndex(pair.gold)];
    ++counts.n;
    ++report.n_total;
    ++report.confusion[LabelIndex(pair.gold)][LabelIndex(pair.predicted)];
    if (pair.gold == pair.predicted) {
      ++counts.n_correct;
      ++report.n_correct;
    }
  }
  return report;
}

EvalReport SubsetEval(const Corpus& gold, const PredictionSet& predictions,
                      const ExamplePredicate& keep, std::string subset_name) {
  std::vector<Example> kept;
  for (const Example& ex : gold) {
    if (keep(ex)) kept.push_back(ex);
  }
  if (kept.empty()) {
    throw Error(ErrorKind::kNoPairs, "subset " + subset_name + " of " +
                                         gold.name() + " is empty");
  }
  Corpus subset(gold.name() + "." + subset_name, std::move(kept));
  JoinResult joined = Join(subset, predictions);
  return Accuracy(joined.pairs, predictions.model_name(),
                  std::move(subset_name));
}

DeltaReport Compare(const EvalReport& baseline, const EvalReport& candidate) {
  if (baseline.subset_name != candidate.subset_name) {
    throw Error(ErrorKind::kSubsetMismatch,
                "cannot compare subset " + baseline.subset_name + " with " +
                    candidate.subset_name);
  }
  DeltaReport delta;
  delta.baseline_model = baseline.model_name;
  delta.candidate_model = candidate.model_name;
  delta.subset_name = baseline.subset_name;
  delta.overall = candidate.accuracy() - baseline.accuracy();
  for (Label label : kAllLabels) {
    auto base = baseline.of(label).accuracy();
    auto cand = candidate.of(label).accuracy();
    if (base && cand) delta.per_class[LabelIndex(label)] = *cand - *base;
  }
  return delta;
}

}  // namespace negkit
