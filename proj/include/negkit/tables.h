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

#ifndef NEGKIT_TABLES_H_
#define NEGKIT_TABLES_H_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "negkit/evaluate.h"

namespace negkit {

inline constexpr char kFullSubset[] = "full";
inline constexpr char kNegationSubset[] = "negation";

struct ModelEvaluation {
  std::string model_name;
  std::optional<EvalReport> full;
  std::optional<EvalReport> negation;
};

struct RenderedTables {
  std::string text;
  // One line-delimited record per (model, subset, class) row.
  std::vector<std::string> records;
};

// Records for one report: class "all" first, then each label. accuracy_pct
// is null for a class with no examples.
std::vector<std::string> ReportRecords(const EvalReport& report);

// Four tables: accuracy by dataset for the first model, negation-subset
// accuracy per model, full-set accuracy per model, and per-class accuracy on
// the negation subset. A delta section follows when `deltas` is non-empty.
RenderedTables RenderTables(std::span<const ModelEvaluation> models,
                            std::span<const DeltaReport> deltas);

}  // namespace negkit

#endif  // NEGKIT_TABLES_H_
