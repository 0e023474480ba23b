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

#ifndef NEGKIT_CORPUS_H_
#define NEGKIT_CORPUS_H_

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "negkit/label.h"

namespace negkit {

// One premise/hypothesis pair. Text is kept byte-for-byte as read.
struct Example {
  std::string id;
  std::string premise;
  std::string hypothesis;
  Label label = Label::kEntailment;

  friend bool operator==(const Example&, const Example&) = default;
};

// An ordered, immutable collection of examples with unique ids.
class Corpus {
 public:
  Corpus() = default;

  // Throws Error(kDuplicateId) if two examples share an id.
  Corpus(std::string name, std::vector<Example> examples);

  const std::string& name() const { return name_; }
  std::span<const Example> examples() const { return examples_; }
  std::size_t size() const { return examples_.size(); }
  bool empty() const { return examples_.empty(); }
  const Example& operator[](std::size_t i) const { return examples_[i]; }

  auto begin() const { return examples_.cbegin(); }
  auto end() const { return examples_.cend(); }

  friend bool operator==(const Corpus&, const Corpus&) = default;

 private:
  std::string name_;
  std::vector<Example> examples_;
};

struct ReadOptions {
  // Drop records whose gold code is -1 instead of failing.
  bool skip_unlabeled = true;
  // Count and drop unparseable records instead of failing.
  bool skip_malformed = false;
};

// Line accounting for one ingest. kept + skipped_unlabeled + skipped_blank +
// errored == lines.
struct IngestReport {
  std::size_t lines = 0;
  std::size_t kept = 0;
  std::size_t skipped_unlabeled = 0;
  std::size_t skipped_blank = 0;
  std::size_t errored = 0;

  std::size_t skipped() const { return skipped_unlabeled + skipped_blank; }
};

struct ReadResult {
  Corpus corpus;
  IngestReport report;
};

// Parses one corpus record. A record without an "id" key gets fallback_id.
// Throws Error with kind kMalformedRecord, kUnknownLabel, kEmptyField or
// kUnlabeledExample.
Example ParseExample(std::string_view line, std::string_view fallback_id);

// Ids missing from records are synthesized as "<name>:<line-number>", with
// 1-based line numbers. Errors carry the offending line number.
ReadResult ReadCorpus(std::istream& in, std::string name,
                      const ReadOptions& options = {});

// Convenience wrapper that opens `path`; the corpus is named after the file
// stem unless `name` is given. Throws Error(kIo) if the file cannot be read.
ReadResult ReadCorpusFile(const std::string& path,
                          const ReadOptions& options = {},
                          std::string name = {});

// One record per line, keys in the order id, premise, hypothesis, label.
std::string FormatExample(const Example& example);

// Returns the number of records written. Throws Error(kIo) on stream failure.
std::size_t WriteCorpus(const Corpus& corpus, std::ostream& out);

// True iff the text has at least one non-whitespace character.
bool HasContent(std::string_view text);

}  // namespace negkit

#endif  // NEGKIT_CORPUS_H_
