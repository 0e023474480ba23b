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

// Acceptance suite. Prints one line per criterion:
//   AC-n PASS|FAIL|BLOCKED <detail>
// Exit status: 1 if anything failed, 77 if something was blocked on missing
// data, 0 otherwise.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <regex>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "negkit/augment.h"
#include "negkit/cli.h"
#include "negkit/corpus.h"
#include "negkit/evaluate.h"
#include "negkit/negation.h"
#include "oracles.h"

namespace negkit {
namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

// Pinned thresholds.
constexpr double kAc1Seconds = 1.0;
constexpr std::size_t kAc2Target = 3620;
constexpr std::size_t kAc2Tolerance = 110;
constexpr double kAc2Seconds = 5.0;
constexpr int kAc3Strings = 10000;
constexpr double kAc3Seconds = 5.0;
constexpr double kAc4Seconds = 60.0;
constexpr int kAc5Corpora = 50;
constexpr std::size_t kAc5MaxSize = 20;
constexpr double kAc5Identity = 1e-9;
constexpr double kAc5Seconds = 5.0;

enum class Status { kPass, kFail, kBlocked };

struct Outcome {
  Status status;
  std::string detail;
};

struct Tally {
  int failed = 0;
  int blocked = 0;

  void Report(const std::string& name, const Outcome& outcome) {
    const char* word = outcome.status == Status::kPass   ? "PASS"
                       : outcome.status == Status::kFail ? "FAIL"
                                                         : "BLOCKED";
    std::cout << name << ' ' << word << ' ' << outcome.detail << std::endl;
    if (outcome.status == Status::kFail) ++failed;
    if (outcome.status == Status::kBlocked) ++blocked;
  }
};

double Seconds(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string Fixed(double value, int digits = 3) {
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(digits);
  out << value;
  return out.str();
}

std::string ReadFile(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void WriteFile(const fs::path& path, const std::string& content) {
  std::ofstream(path, std::ios::binary) << content;
}

struct CliRun {
  int code = -1;
  std::string out;
  std::string err;
};

CliRun RunTool(std::vector<std::string> args) {
  args.insert(args.begin(), "negkit");
  std::vector<const char*> argv;
  for (const std::string& arg : args) argv.push_back(arg.c_str());
  std::ostringstream out, err;
  CliRun run;
  run.code = RunCli(static_cast<int>(argv.size()), argv.data(), out, err);
  run.out = out.str();
  run.err = err.str();
  return run;
}

// Scratch directory removed on scope exit.
class ScratchDir {
 public:
  explicit ScratchDir(const std::string& tag)
      : path_(fs::temp_directory_path() / ("negkit_acceptance_" + tag)) {
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~ScratchDir() { fs::remove_all(path_); }
  const fs::path& path() const { return path_; }
  std::string operator/(const std::string& name) const {
    return (path_ / name).string();
  }

 private:
  fs::path path_;
};

Outcome Fail(std::string detail) { return {Status::kFail, std::move(detail)}; }

// --- AC-1 -------------------------------------------------------------------

Outcome WorkedExample() {
  ScratchDir dir("ac1");
  WriteFile(dir / "in.jsonl",
            R"({"id":"ex","premise":"A dog is playing in the park.",)"
            R"("hypothesis":"A dog is playing in the park.","label":0})"
            "\n");
  auto start = Clock::now();
  CliRun run = RunTool({"augment", "--input", dir / "in.jsonl", "--output",
                        dir / "out.jsonl", "--kinds",
                        "auto_negate_hypothesis"});
  double elapsed = Seconds(start);
  if (run.code != 0) return Fail("exit " + std::to_string(run.code) + ": " + run.err);
  const std::string expected =
      R"({"id":"ex:auto_negate_hypothesis",)"
      R"("premise":"A dog is playing in the park.",)"
      R"("hypothesis":"A dog is not playing in the park.","label":2,)"
      R"("source_id":"ex","transformation":"auto_negate_hypothesis",)"
      R"("original_label":0})"
      "\n";
  std::string actual = ReadFile(dir / "out.jsonl");
  std::string detail = "time=" + Fixed(elapsed) + "s";
  if (actual != expected) return Fail("output mismatch: " + actual);
  if (elapsed >= kAc1Seconds) return Fail(detail + " over limit");
  return {Status::kPass, "hypothesis=\"A dog is not playing in the park.\" "
                         "label=2 " + detail};
}

// --- AC-2 -------------------------------------------------------------------

Outcome FilterCount(const fs::path& validation) {
  ScratchDir dir("ac2");
  auto start = Clock::now();
  CliRun run = RunTool({"filter", "--input", validation.string(), "--output",
                        dir / "neg.jsonl"});
  double elapsed = Seconds(start);
  if (run.code != 0) return Fail("exit " + std::to_string(run.code) + ": " + run.err);
  std::smatch match;
  if (!std::regex_search(run.out, match, std::regex(R"(kept (\d+) of (\d+))"))) {
    return Fail("unexpected output: " + run.out);
  }
  std::size_t kept = std::stoul(match[1]);
  std::string detail = run.out.substr(0, run.out.find('\n')) + " (target " +
                       std::to_string(kAc2Target) + "+-" +
                       std::to_string(kAc2Tolerance) + ") time=" +
                       Fixed(elapsed) + "s";
  bool in_band = kept + kAc2Tolerance >= kAc2Target &&
                 kept <= kAc2Target + kAc2Tolerance;
  if (!in_band || elapsed >= kAc2Seconds) return Fail(detail);
  return {Status::kPass, detail};
}

// --- AC-3 -------------------------------------------------------------------

Outcome DetectorOracle() {
  oracle::CueStringGenerator generator(20261017);
  auto start = Clock::now();
  int disagreements = 0;
  int positives = 0;
  for (int i = 0; i < kAc3Strings; ++i) {
    std::string text = generator.Next();
    bool expected = oracle::HasNegationCue(text);
    positives += expected;
    disagreements += ContainsNegation(text).has_negation() != expected;
  }
  double elapsed = Seconds(start);
  std::string detail = "strings=" + std::to_string(kAc3Strings) +
                       " positives=" + std::to_string(positives) +
                       " disagreements=" + std::to_string(disagreements) +
                       " time=" + Fixed(elapsed) + "s";
  if (disagreements != 0 || elapsed >= kAc3Seconds) return Fail(detail);
  return {Status::kPass, detail};
}

// --- AC-4 -------------------------------------------------------------------

Outcome Closure(const Corpus& corpus) {
  std::set<Transformation> all(kAllTransformations.begin(),
                               kAllTransformations.end());
  InsertionRules rules;
  auto start = Clock::now();
  AugmentResult first = AugmentCorpus(corpus, rules, {}, all);
  std::size_t uncued = 0;
  for (const AugmentedExample& ex : first.examples) {
    uncued += !ExampleHasNegation(ex.example).has_negation();
  }
  AugmentResult second =
      AugmentCorpus(first.AsCorpus(corpus.name() + ".aug"), rules, {}, all);
  double elapsed = Seconds(start);
  std::string detail = "sources=" + std::to_string(corpus.size()) +
                       " produced=" + std::to_string(first.report.produced) +
                       " uncued=" + std::to_string(uncued) +
                       " reaugmented=" + std::to_string(second.report.produced) +
                       " time=" + Fixed(elapsed) + "s";
  if (first.report.produced == 0 || uncued != 0 ||
      second.report.produced != 0 || elapsed >= kAc4Seconds) {
    return Fail(detail);
  }
  return {Status::kPass, detail};
}

// --- AC-5 -------------------------------------------------------------------

std::vector<int> RandomCodes(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> pick(0, 2);
  std::vector<int> codes(n);
  for (int& code : codes) code = pick(rng);
  return codes;
}

std::vector<LabelPair> ToPairs(const std::vector<int>& gold,
                               const std::vector<int>& predicted) {
  std::vector<LabelPair> pairs;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    pairs.push_back({*LabelFromCode(gold[i]), *LabelFromCode(predicted[i])});
  }
  return pairs;
}

// Brute-force accuracy as a reduced "num/den" string of 100*correct/total.
bool SameRatio(const Percent& p, std::size_t correct, std::size_t total) {
  return static_cast<std::int64_t>(correct) * p.den() ==
         p.num() * static_cast<std::int64_t>(total);
}

Outcome MetricOracle() {
  auto start = Clock::now();
  std::mt19937 rng(5);
  std::uniform_int_distribution<std::size_t> size(1, kAc5MaxSize);
  int mismatches = 0;
  double worst_identity = 0;
  for (int trial = 0; trial < kAc5Corpora; ++trial) {
    std::size_t n = size(rng);
    std::vector<int> gold = RandomCodes(rng, n);
    std::vector<int> base = RandomCodes(rng, n);
    std::vector<int> cand = RandomCodes(rng, n);
    EvalReport rb = Accuracy(ToPairs(gold, base), "base", "s");
    EvalReport rc = Accuracy(ToPairs(gold, cand), "cand", "s");
    oracle::BruteCounts bb = oracle::Recount(gold, base);
    oracle::BruteCounts bc = oracle::Recount(gold, cand);

    mismatches += !SameRatio(rb.accuracy(), bb.correct, bb.total);
    mismatches += !SameRatio(rc.accuracy(), bc.correct, bc.total);
    for (std::size_t k = 0; k < 3; ++k) {
      auto acc = rb.per_class[k].accuracy();
      if (bb.class_total[k] == 0) {
        mismatches += acc.has_value();
      } else {
        mismatches += !acc || !SameRatio(*acc, bb.class_correct[k],
                                         bb.class_total[k]);
      }
    }
    // Delta: brute (cand - base) correct counts over the same total.
    DeltaReport delta = Compare(rb, rc);
    std::int64_t brute_diff = static_cast<std::int64_t>(bc.correct) -
                              static_cast<std::int64_t>(bb.correct);
    mismatches += delta.overall.num() * static_cast<std::int64_t>(n) !=
                  brute_diff * delta.overall.den();

    double weighted = 0;
    for (const ClassCounts& counts : rb.per_class) {
      if (auto acc = counts.accuracy()) {
        weighted += static_cast<double>(counts.n) * acc->value();
      }
    }
    worst_identity = std::max(
        worst_identity,
        std::abs(weighted / static_cast<double>(n) - rb.accuracy().value()));
  }

  // Engineered prediction files scored through the CLI.
  ScratchDir dir("ac5");
  std::string gold_lines, base_lines, cand_lines;
  for (int i = 0; i < 1000; ++i) {
    std::string id = "neg" + std::to_string(i);
    gold_lines += R"({"id":")" + id +
                  R"(","premise":"A man sleeps.","hypothesis":"He is not awake.","label":2})"
                  "\n";
    base_lines += R"({"id":")" + id + R"(","prediction":)" +
                  (i < 782 ? "2" : "1") + "}\n";
    cand_lines += R"({"id":")" + id + R"(","prediction":)" +
                  (i < 856 ? "2" : "1") + "}\n";
  }
  WriteFile(dir / "gold.jsonl", gold_lines);
  WriteFile(dir / "baseline.jsonl", base_lines);
  WriteFile(dir / "augmented.jsonl", cand_lines);
  CliRun run = RunTool({"evaluate", "--input", dir / "gold.jsonl",
                        "--predictions", dir / "baseline.jsonl",
                        dir / "augmented.jsonl", "--subset", "negation"});
  double elapsed = Seconds(start);
  bool printed = run.code == 0 &&
                 run.out.find("78.2") != std::string::npos &&
                 run.out.find("85.6") != std::string::npos &&
                 std::regex_search(run.out,
                                   std::regex(R"(augmented\s+negation\s+\+7\.4)"));

  std::ostringstream detail;
  detail << "corpora=" << kAc5Corpora << " mismatches=" << mismatches
         << " identity_err=" << worst_identity
         << " delta_78.2->85.6=" << (printed ? "+7.4" : "missing")
         << " time=" << Fixed(elapsed) << "s";
  if (mismatches != 0 || worst_identity > kAc5Identity || !printed ||
      elapsed >= kAc5Seconds) {
    return Fail(detail.str() + "\n" + run.out + run.err);
  }
  return {Status::kPass, detail.str()};
}

// --- AC-6 -------------------------------------------------------------------

// Deterministic stand-in predictions: gold except every seventh example.
std::string PseudoPredictions(const Corpus& gold, int shift) {
  std::string lines;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    int code = LabelCode(gold[i].label);
    if ((i + static_cast<std::size_t>(shift)) % 7 == 0) code = (code + 1) % 3;
    lines += FormatPrediction({gold[i].id, *LabelFromCode(code)}) + "\n";
  }
  return lines;
}

// filter -> augment -> evaluate; returns every output concatenated.
std::string Pipeline(const fs::path& validation, const fs::path& train,
                     const std::string& tag, std::string* error) {
  ScratchDir dir(tag);
  std::string transcript;
  auto step = [&](std::vector<std::string> args) {
    CliRun run = RunTool(std::move(args));
    transcript += run.out;
    if (run.code != 0 && error->empty()) {
      *error = "exit " + std::to_string(run.code) + ": " + run.err;
    }
  };
  step({"filter", "--input", validation.string(), "--output",
        dir / "neg.jsonl", "--complement-output", dir / "rest.jsonl"});
  step({"augment", "--input", train.string(), "--output", dir / "aug.jsonl",
        "--merge"});
  Corpus gold = ReadCorpusFile(validation.string()).corpus;
  WriteFile(dir / "baseline.jsonl", PseudoPredictions(gold, 0));
  WriteFile(dir / "augmented.jsonl", PseudoPredictions(gold, 3));
  step({"evaluate", "--input", validation.string(), "--predictions",
        dir / "baseline.jsonl", dir / "augmented.jsonl", "--output",
        dir / "report.jsonl"});
  for (const char* name : {"neg.jsonl", "rest.jsonl", "aug.jsonl",
                           "report.jsonl"}) {
    transcript += ReadFile(dir.path() / name);
  }
  return transcript;
}

Outcome Determinism(const fs::path& validation, const fs::path& train) {
  std::string error;
  auto start = Clock::now();
  std::string first = Pipeline(validation, train, "ac6a", &error);
  std::string second = Pipeline(validation, train, "ac6b", &error);
  std::string detail = "bytes=" + std::to_string(first.size()) + " time=" +
                       Fixed(Seconds(start)) + "s";
  if (!error.empty()) return Fail(error);
  if (first != second) return Fail("runs differ; " + detail);
  return {Status::kPass, "identical; " + detail};
}

// --- Synthetic stand-in corpus ----------------------------------------------

struct Synthetic {
  Corpus corpus;
  std::size_t cued = 0;
};

// SNLI-shaped corpus with a known number of cued examples.
Synthetic MakeSynthetic(std::size_t n) {
  const char* subjects[] = {"A man", "The woman", "Two dogs", "A child",
                            "People", "A girl", "An old man", "The crowd"};
  const char* predicates[] = {
      "is playing in the park.", "are sitting at a table.", "runs outside.",
      "walked home.",            "rides a bike.",           "has eaten lunch.",
      "sleeps on a bench.",      "in a red shirt."};
  const char* negated[] = {"is not playing in the park.",
                           "aren't sitting at a table.", "never runs outside.",
                           "did not walk home.", "can't ride a bike."};
  Synthetic out;
  std::vector<Example> examples;
  std::mt19937 rng(2026);
  std::uniform_int_distribution<int> percent(0, 99);
  for (std::size_t i = 0; i < n; ++i) {
    std::string premise = std::string(subjects[i % 8]) + " " +
                          predicates[(i / 8) % 8];
    std::string hypothesis = std::string(subjects[(i / 3) % 8]) + " ";
    bool cue = percent(rng) < 36;
    bool never = false;
    if (cue) {
      const char* text = negated[(i / 5) % 5];
      never = std::string(text).starts_with("never");
      hypothesis += text;
    } else {
      hypothesis += predicates[(i / 7) % 8];
    }
    // "never" is not a cue for this detector.
    out.cued += cue && !never;
    examples.push_back({"syn" + std::to_string(i), premise, hypothesis,
                        kAllLabels[(i * 7 / 3) % 3]});
  }
  out.corpus = Corpus("synthetic", std::move(examples));
  return out;
}

Outcome SyntheticFilter(const Synthetic& data) {
  ScratchDir dir("stand_in_filter");
  std::ostringstream lines;
  WriteCorpus(data.corpus, lines);
  WriteFile(dir / "synthetic.jsonl", lines.str());
  CliRun run = RunTool({"filter", "--input", dir / "synthetic.jsonl",
                        "--output", dir / "neg.jsonl"});
  std::string expected = "kept " + std::to_string(data.cued) + " of " +
                         std::to_string(data.corpus.size());
  if (run.code != 0 || run.out.rfind(expected, 0) != 0) {
    return Fail("expected \"" + expected + "\", got " + run.out + run.err);
  }
  return {Status::kPass, run.out.substr(0, run.out.find('\n'))};
}

Outcome SyntheticDeterminism(const Synthetic& data) {
  ScratchDir dir("stand_in_det");
  std::ostringstream lines;
  WriteCorpus(data.corpus, lines);
  WriteFile(dir / "synthetic.jsonl", lines.str());
  return Determinism(dir.path() / "synthetic.jsonl",
                     dir.path() / "synthetic.jsonl");
}

std::string Relabel(std::string detail) {
  return "(synthetic stand-in corpus) " + detail;
}

}  // namespace
}  // namespace negkit

int main(int argc, char** argv) {
  using namespace negkit;
  CLI::App app{"negkit acceptance suite"};
  std::string snli_dir;
  std::vector<int> only;
  bool stand_ins = false;
  app.add_option("--snli-dir", snli_dir,
                 "Directory holding snli_validation.jsonl and snli_train.jsonl");
  app.add_option("--only", only, "Run just these criterion numbers")
      ->delimiter(',')
      ->check(CLI::Range(1, 6));
  app.add_flag("--stand-ins", stand_ins,
               "Also run the SNLI-dependent procedures on a synthetic corpus");
  CLI11_PARSE(app, argc, argv);

  auto wanted = [&](int n) {
    return only.empty() || std::find(only.begin(), only.end(), n) != only.end();
  };
  fs::path validation = fs::path(snli_dir) / "snli_validation.jsonl";
  fs::path train = fs::path(snli_dir) / "snli_train.jsonl";
  auto blocked = [](const fs::path& path) {
    return Outcome{Status::kBlocked, "SNLI file not found: " + path.string() +
                                         " (run scripts/fetch_snli.py)"};
  };
  bool have_validation = !snli_dir.empty() && fs::exists(validation);
  bool have_train = !snli_dir.empty() && fs::exists(train);

  Tally tally;
  auto guarded = [&](const std::string& name, const std::function<Outcome()>& fn) {
    try {
      tally.Report(name, fn());
    } catch (const std::exception& e) {
      tally.Report(name, Fail(std::string("exception: ") + e.what()));
    }
  };

  if (wanted(1)) guarded("AC-1", WorkedExample);
  if (wanted(2)) {
    guarded("AC-2", [&] {
      return have_validation ? FilterCount(validation) : blocked(validation);
    });
  }
  if (wanted(3)) guarded("AC-3", DetectorOracle);
  if (wanted(4)) {
    guarded("AC-4", [&] {
      if (!have_train) return blocked(train);
      return Closure(ReadCorpusFile(train.string()).corpus);
    });
  }
  if (wanted(5)) guarded("AC-5", MetricOracle);
  if (wanted(6)) {
    guarded("AC-6", [&] {
      if (!have_validation) return blocked(validation);
      if (!have_train) return blocked(train);
      return Determinism(validation, train);
    });
  }

  if (stand_ins) {
    Synthetic data = MakeSynthetic(10000);
    guarded("stand-in AC-2 procedure", [&] {
      Outcome o = SyntheticFilter(data);
      o.detail = Relabel(o.detail);
      return o;
    });
    guarded("stand-in AC-4 procedure", [&] {
      Outcome o = Closure(data.corpus);
      o.detail = Relabel(o.detail);
      return o;
    });
    guarded("stand-in AC-6 procedure", [&] {
      Outcome o = SyntheticDeterminism(data);
      o.detail = Relabel(o.detail);
      return o;
    });
  }

  if (tally.failed > 0) return 1;
  if (tally.blocked > 0) return 77;
  return 0;
}
