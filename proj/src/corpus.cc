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

#include "negkit/corpus.h"

#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <utility>

#include "json.hpp"
#include "negkit/error.h"
#include "negkit/tokenizer.h"

namespace negkit {
namespace {

using nlohmann::json;

std::string Truncate(std::string_view line) {
  constexpr std::size_t kMax = 80;
  if (line.size() <= kMax) return std::string(line);
  return std::string(line.substr(0, kMax)) + "...";
}

const std::string& RequireText(const json& record, const char* key,
                               std::string_view line) {
  auto it = record.find(key);
  if (it == record.end() || !it->is_string()) {
    throw Error(ErrorKind::kMalformedRecord,
                std::string("missing or non-text \"") + key + "\" in " +
                    Truncate(line));
  }
  return it->get_ref<const std::string&>();
}

Label ParseLabel(const json& value, std::string_view line) {
  if (value.is_number_integer()) {
    long long code = value.get<long long>();
    if (code == -1) {
      throw Error(ErrorKind::kUnlabeledExample,
                  "gold label -1 (no consensus) in " + Truncate(line));
    }
    if (auto label = LabelFromCode(code)) return *label;
    throw Error(ErrorKind::kUnknownLabel,
                "label code " + std::to_string(code) + " in " + Truncate(line));
  }
  if (value.is_string()) {
    const auto& name = value.get_ref<const std::string&>();
    if (auto label = LabelFromName(name)) return *label;
    throw Error(ErrorKind::kUnknownLabel,
                "label \"" + name + "\" in " + Truncate(line));
  }
  throw Error(ErrorKind::kUnknownLabel,
              "label of type " + std::string(value.type_name()) + " in " +
                  Truncate(line));
}

}  // namespace

bool HasContent(std::string_view text) {
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t ws = WhitespaceLengthAt(text, pos);
    if (ws == 0) return true;
    pos += ws;
  }
  return false;
}

Corpus::Corpus(std::string name, std::vector<Example> examples)
    : name_(std::move(name)), examples_(std::move(examples)) {
  std::set<std::string_view> seen;
  for (const Example& ex : examples_) {
    if (!seen.insert(ex.id).second) {
      throw Error(ErrorKind::kDuplicateId,
                  "duplicate id \"" + ex.id + "\" in corpus " + name_);
    }
  }
}

Example ParseExample(std::string_view line, std::string_view fallback_id) {
  json record = json::parse(line, nullptr, /*allow_exceptions=*/false);
  if (record.is_discarded() || !record.is_object()) {
    throw Error(ErrorKind::kMalformedRecord,
                "not a JSON object: " + Truncate(line));
  }

  Example ex;
  if (auto it = record.find("id"); it != record.end()) {
    if (!it->is_string() || it->get_ref<const std::string&>().empty()) {
      throw Error(ErrorKind::kMalformedRecord,
                  "\"id\" must be non-empty text in " + Truncate(line));
    }
    ex.id = it->get<std::string>();
  } else {
    ex.id = std::string(fallback_id);
  }

  ex.premise = RequireText(record, "premise", line);
  ex.hypothesis = RequireText(record, "hypothesis", line);

  auto label = record.find("label");
  if (label == record.end()) {
    throw Error(ErrorKind::kMalformedRecord,
                "missing \"label\" in " + Truncate(line));
  }
  ex.label = ParseLabel(*label, line);

  // Emptiness is checked after the label so unlabeled rows stay skippable.
  if (!HasContent(ex.premise)) {
    throw Error(ErrorKind::kEmptyField, "blank premise in " + Truncate(line));
  }
  if (!HasContent(ex.hypothesis)) {
    throw Error(ErrorKind::kEmptyField,
                "blank hypothesis in " + Truncate(line));
  }
  return ex;
}

ReadResult ReadCorpus(std::istream& in, std::string name,
                      const ReadOptions& options) {
  IngestReport report;
  std::vector<Example> examples;
  std::string line;
  while (std::getline(in, line)) {
    ++report.lines;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!HasContent(line)) {
      ++report.skipped_blank;
      continue;
    }
    std::string fallback = name + ":" + std::to_string(report.lines);
    try {
      examples.push_back(ParseExample(line, fallback));
      ++report.kept;
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::kUnlabeledExample && options.skip_unlabeled) {
        ++report.skipped_unlabeled;
      } else if (e.kind() != ErrorKind::kUnlabeledExample &&
                 options.skip_malformed) {
        ++report.errored;
      } else {
        throw Error(e.kind(), name + " line " + std::to_string(report.lines) +
                                  ": " + e.what());
      }
    }
  }
  if (in.bad()) {
    throw Error(ErrorKind::kIo, "read failure in " + name);
  }
  return {Corpus(std::move(name), std::move(examples)), report};
}

ReadResult ReadCorpusFile(const std::string& path, const ReadOptions& options,
                          std::string name) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIo, "cannot open " + path);
  if (name.empty()) {
    std::string_view base = path;
    if (auto slash = base.find_last_of('/'); slash != base.npos) {
      base.remove_prefix(slash + 1);
    }
    if (auto dot = base.find('.'); dot != base.npos && dot > 0) {
      base = base.substr(0, dot);
    }
    name = std::string(base);
  }
  return ReadCorpus(in, std::move(name), options);
}

std::string FormatExample(const Example& example) {
  nlohmann::ordered_json record;
  record["id"] = example.id;
  record["premise"] = example.premise;
  record["hypothesis"] = example.hypothesis;
  record["label"] = LabelCode(example.label);
  return record.dump();
}

std::size_t WriteCorpus(const Corpus& corpus, std::ostream& out) {
  std::size_t written = 0;
  for (const Example& ex : corpus) {
    out << FormatExample(ex) << '\n';
    ++written;
  }
  out.flush();
  if (!out) throw Error(ErrorKind::kIo, "write failure for " + corpus.name());
  return written;
}

}  // namespace negkit
