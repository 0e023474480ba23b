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

#include "negkit/tables.h"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace negkit {
namespace {

constexpr char kMissing[] = "-";

// Plain-text table: first column left-aligned, the rest right-aligned.
class TextTable {
 public:
  explicit TextTable(std::vector<std::string> header)
      : header_(std::move(header)) {}

  void AddRow(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  void Render(std::ostream& out) const {
    std::vector<std::size_t> widths(header_.size(), 0);
    auto measure = [&](const std::vector<std::string>& row) {
      for (std::size_t i = 0; i < row.size() && i < widths.size(); ++i) {
        widths[i] = std::max(widths[i], row[i].size());
      }
    };
    measure(header_);
    for (const auto& row : rows_) measure(row);

    auto emit = [&](const std::vector<std::string>& row) {
      std::string line;
      for (std::size_t i = 0; i < widths.size(); ++i) {
        const std::string cell = i < row.size() ? row[i] : std::string();
        std::string pad(widths[i] - cell.size(), ' ');
        if (i > 0) line += "  ";
        line += i == 0 ? cell + pad : pad + cell;
      }
      while (!line.empty() && line.back() == ' ') line.pop_back();
      out << line << '\n';
    };
    emit(header_);
    std::size_t rule = 0;
    for (std::size_t w : widths) rule += w;
    rule += 2 * (widths.size() - 1);
    out << std::string(rule, '-') << '\n';
    for (const auto& row : rows_) emit(row);
  }

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

std::string Cell(const std::optional<EvalReport>& report) {
  return report ? report->accuracy().Format() : kMissing;
}

std::string CountCell(const std::optional<EvalReport>& report) {
  return report ? std::to_string(report->n_total) : kMissing;
}

std::string DeltaCell(const std::optional<Percent>& delta) {
  return delta ? delta->Format(/*explicit_sign=*/true) : kMissing;
}

std::string LabelTitle(Label label) {
  std::string name(LabelName(label));
  name[0] = static_cast<char>(name[0] - 'a' + 'A');
  return name;
}

std::string Record(const EvalReport& report, std::string_view cls,
                   std::size_t n, std::size_t n_correct,
                   const std::optional<Percent>& accuracy) {
  nlohmann::ordered_json record;
  record["model"] = report.model_name;
  record["subset"] = report.subset_name;
  record["class"] = cls;
  record["n"] = n;
  record["n_correct"] = n_correct;
  if (accuracy) {
    record["accuracy_pct"] =
        static_cast<double>(accuracy->RoundedTenths()) / 10.0;
  } else {
    record["accuracy_pct"] = nullptr;
  }
  return record.dump();
}

}  // namespace

std::vector<std::string> ReportRecords(const EvalReport& report) {
  std::vector<std::string> records;
  records.push_back(Record(report, "all", report.n_total, report.n_correct,
                           report.accuracy()));
  for (Label label : kAllLabels) {
    const ClassCounts& counts = report.of(label);
    records.push_back(Record(report, LabelName(label), counts.n,
                             counts.n_correct, counts.accuracy()));
  }
  return records;
}

RenderedTables RenderTables(std::span<const ModelEvaluation> models,
                            std::span<const DeltaReport> deltas) {
  std::ostringstream out;

  if (models.empty()) {
    out << "Table 1: Accuracy by dataset\n";
  } else {
    out << "Table 1: Accuracy by dataset (" << models.front().model_name
        << ")\n";
  }
  TextTable by_dataset({"Dataset", "Accuracy (%)", "n"});
  if (!models.empty()) {
    const ModelEvaluation& first = models.front();
    by_dataset.AddRow({"Full validation set", Cell(first.full),
                       CountCell(first.full)});
    by_dataset.AddRow({"Negation-only subset", Cell(first.negation),
                       CountCell(first.negation)});
  }
  by_dataset.Render(out);

  out << "\nTable 2: Accuracy on negation-only subset\n";
  TextTable negation({"Model", "Accuracy (%)", "n"});
  for (const ModelEvaluation& m : models) {
    negation.AddRow({m.model_name, Cell(m.negation), CountCell(m.negation)});
  }
  negation.Render(out);

  out << "\nTable 3: Overall accuracy\n";
  TextTable overall({"Model", "Accuracy (%)", "n"});
  for (const ModelEvaluation& m : models) {
    overall.AddRow({m.model_name, Cell(m.full), CountCell(m.full)});
  }
  overall.Render(out);

  out << "\nTable 4: Per-class accuracy on negation-only subset\n";
  std::vector<std::string> header = {"Label"};
  for (const ModelEvaluation& m : models) header.push_back(m.model_name);
  TextTable per_class(std::move(header));
  for (Label label : kAllLabels) {
    std::vector<std::string> row = {LabelTitle(label)};
    for (const ModelEvaluation& m : models) {
      std::optional<Percent> accuracy;
      if (m.negation) accuracy = m.negation->of(label).accuracy();
      row.push_back(accuracy ? accuracy->Format() : kMissing);
    }
    per_class.AddRow(std::move(row));
  }
  per_class.Render(out);

  if (!deltas.empty()) {
    out << "\nDeltas vs " << deltas.front().baseline_model
        << " (percentage points)\n";
    TextTable delta_table({"Model", "Subset", "Overall", "Entailment",
                           "Neutral", "Contradiction"});
    for (const DeltaReport& d : deltas) {
      std::vector<std::string> row = {d.candidate_model, d.subset_name,
                                      DeltaCell(d.overall)};
      for (Label label : kAllLabels) {
        row.push_back(DeltaCell(d.per_class[LabelIndex(label)]));
      }
      delta_table.AddRow(std::move(row));
    }
    delta_table.Render(out);
  }

  RenderedTables rendered;
  rendered.text = out.str();
  for (const ModelEvaluation& m : models) {
    for (const auto& report : {m.full, m.negation}) {
      if (!report) continue;
      auto records = ReportRecords(*report);
      rendered.records.insert(rendered.records.end(), records.begin(),
                              records.end());
    }
  }
  return rendered;
}

}  // namespace negkit
