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

#include "negkit/cli.h"

#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "negkit/augment.h"
#include "negkit/corpus.h"
#include "negkit/error.h"
#include "negkit/evaluate.h"
#include "negkit/negation.h"
#include "negkit/tables.h"

namespace negkit {
namespace {

namespace fs = std::filesystem;

struct InputOptions {
  std::string input;
  bool skip_malformed = false;
  bool fail_on_unlabeled = false;

  ReadOptions read_options() const {
    return {.skip_unlabeled = !fail_on_unlabeled,
            .skip_malformed = skip_malformed};
  }
};

struct FilterConfig {
  InputOptions in;
  std::string output;
  std::string complement_output;
  bool force = false;
};

struct StatsConfig {
  InputOptions in;
};

struct AugmentConfig {
  InputOptions in;
  std::string output;
  std::string aux_lexicon;
  std::string verb_list;
  std::vector<std::string> kinds = {"auto_negate_hypothesis"};
  std::string label_map;
  bool skip_already_negated = true;
  std::size_t max_per_source = 0;
  bool do_support = false;
  bool merge = false;
  std::string inject_into;
  bool force = false;
};

struct EvaluateConfig {
  InputOptions in;
  std::vector<std::string> predictions;
  std::vector<std::string> model_names;
  std::string subset = "both";
  bool positional_join = false;
  std::string output;
  bool force = false;
};

// Failures that map straight to an exit status.
struct CliFailure {
  int code;
  std::string message;
};

int ExitCodeFor(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kIo:
      return kExitIo;
    case ErrorKind::kEmptyJoin:
      return kExitJoinFailure;
    default:
      return kExitMalformed;
  }
}

void RequireInput(const std::string& path) {
  std::error_code ec;
  if (!fs::is_regular_file(path, ec)) {
    throw CliFailure{kExitIo, "input file not found: " + path};
  }
}

// Refuses to clobber an existing file without --force, and never writes over
// an input.
void CheckOutput(const std::string& path, bool force,
                 const std::vector<std::string>& inputs) {
  std::error_code ec;
  if (!fs::exists(path, ec)) return;
  for (const std::string& input : inputs) {
    if (!input.empty() && fs::equivalent(path, input, ec)) {
      throw CliFailure{kExitIo, "output " + path + " is also an input"};
    }
  }
  if (!force) {
    throw CliFailure{kExitIo,
                     "refusing to overwrite " + path + " (use --force)"};
  }
}

std::ofstream OpenOutput(const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw CliFailure{kExitIo, "cannot open " + path + " for writing"};
  return out;
}

void ReportIngest(const std::string& name, const IngestReport& r,
                  std::ostream& err) {
  err << "ingest " << name << ": lines=" << r.lines << " kept=" << r.kept
      << " skipped_unlabeled=" << r.skipped_unlabeled
      << " skipped_blank=" << r.skipped_blank << " errored=" << r.errored
      << '\n';
}

ReadResult ReadInput(const InputOptions& in, std::ostream& err) {
  RequireInput(in.input);
  ReadResult result = ReadCorpusFile(in.input, in.read_options());
  ReportIngest(result.corpus.name(), result.report, err);
  return result;
}

Label ParseLabelArg(std::string_view text) {
  if (auto label = LabelFromName(text)) return *label;
  if (text.size() == 1 && text[0] >= '0' && text[0] <= '2') {
    return *LabelFromCode(text[0] - '0');
  }
  throw CliFailure{kExitMalformed,
                   "unknown label \"" + std::string(text) + "\" in --label-map"};
}

std::map<Label, Label> ParseLabelMap(const std::string& text) {
  std::map<Label, Label> map;
  std::stringstream pairs(text);
  std::string pair;
  while (std::getline(pairs, pair, ',')) {
    auto sep = pair.find_first_of(":=");
    if (sep == std::string::npos) {
      throw CliFailure{kExitMalformed,
                       "--label-map entries look like from:to, got " + pair};
    }
    map[ParseLabelArg(std::string_view(pair).substr(0, sep))] =
        ParseLabelArg(std::string_view(pair).substr(sep + 1));
  }
  if (map.empty()) throw CliFailure{kExitMalformed, "--label-map is empty"};
  return map;
}

std::set<Transformation> ParseKinds(const std::vector<std::string>& tags) {
  std::set<Transformation> kinds;
  for (const std::string& tag : tags) {
    if (tag == "all") {
      kinds.insert(kAllTransformations.begin(), kAllTransformations.end());
    } else if (auto kind = TransformationFromTag(tag)) {
      kinds.insert(*kind);
    } else {
      throw CliFailure{kExitMalformed, "unknown transformation " + tag};
    }
  }
  return kinds;
}

int RunFilter(const FilterConfig& config, std::ostream& out,
              std::ostream& err) {
  RequireInput(config.in.input);
  CheckOutput(config.output, config.force, {config.in.input});
  if (!config.complement_output.empty()) {
    CheckOutput(config.complement_output, config.force, {config.in.input});
  }
  ReadResult read = ReadInput(config.in, err);
  NegationSplit split = SplitByNegation(read.corpus);

  std::ofstream negated = OpenOutput(config.output);
  WriteCorpus(split.negation, negated);
  if (!config.complement_output.empty()) {
    std::ofstream complement = OpenOutput(config.complement_output);
    WriteCorpus(split.complement, complement);
  }

  out << "kept " << split.negation.size() << " of " << read.corpus.size();
  if (!read.corpus.empty()) {
    out << " ("
        << Percent(static_cast<std::int64_t>(split.negation.size()),
                   static_cast<std::int64_t>(read.corpus.size()))
               .Format()
        << "%)";
  }
  out << '\n';
  return kExitOk;
}

int RunStats(const StatsConfig& config, std::ostream& out, std::ostream& err) {
  ReadResult read = ReadInput(config.in, err);
  NegationStats stats = ComputeNegationStats(read.corpus);

  nlohmann::ordered_json record;
  record["corpus"] = read.corpus.name();
  record["total"] = stats.total;
  record["with_negation"] = stats.with_negation;
  record["ratio"] = stats.ratio();
  record["ratio_defined"] = stats.ratio_defined();
  nlohmann::ordered_json per_label;
  for (Label label : kAllLabels) {
    per_label[std::string(LabelName(label))] = {
        {"total", stats.total_by_label[LabelIndex(label)]},
        {"with_negation", stats.negated_by_label[LabelIndex(label)]}};
  }
  record["per_label"] = per_label;
  out << record.dump() << '\n';
  return kExitOk;
}

int RunAugment(const AugmentConfig& config, std::ostream& out,
               std::ostream& err) {
  RequireInput(config.in.input);
  if (!config.inject_into.empty()) RequireInput(config.inject_into);
  CheckOutput(config.output, config.force,
              {config.in.input, config.inject_into});

  InsertionRules rules;
  if (!config.aux_lexicon.empty()) {
    RequireInput(config.aux_lexicon);
    rules.auxiliaries = AuxLexicon::Load(config.aux_lexicon);
  }
  if (!config.verb_list.empty()) {
    RequireInput(config.verb_list);
    rules.verbs = WordList::Load(config.verb_list);
  }
  rules.do_support = config.do_support;

  AugmentationPolicy policy;
  if (!config.label_map.empty()) {
    policy.label_map = ParseLabelMap(config.label_map);
    for (const auto& [from, to] : policy.label_map) {
      if (from == Label::kEntailment && to == Label::kContradiction) continue;
      err << "WARNING: label mapping " << LabelName(from) << " -> "
          << LabelName(to)
          << " is not guaranteed by negating the hypothesis; inspect the "
             "output before training on it\n";
    }
  }
  policy.skip_already_negated = config.skip_already_negated;
  if (config.max_per_source > 0) policy.max_per_source = config.max_per_source;

  ReadResult read = ReadInput(config.in, err);
  AugmentResult result =
      AugmentCorpus(read.corpus, rules, policy, ParseKinds(config.kinds));

  std::optional<Corpus> base;
  if (config.merge) {
    base = read.corpus;
  } else if (!config.inject_into.empty()) {
    ReadResult target = ReadCorpusFile(config.inject_into, config.in.read_options());
    ReportIngest(target.corpus.name(), target.report, err);
    base = std::move(target.corpus);
  }
  if (base) {
    // Validates id uniqueness across the combined output.
    std::vector<Example> combined(base->begin(), base->end());
    for (const AugmentedExample& ex : result.examples) {
      combined.push_back(ex.example);
    }
    Corpus(base->name(), std::move(combined));
  }

  std::ofstream file = OpenOutput(config.output);
  std::size_t written = 0;
  if (base) written += WriteCorpus(*base, file);
  written += WriteAugmented(result.examples, file);

  const AugmentReport& r = result.report;
  nlohmann::ordered_json record;
  record["sources_scanned"] = r.sources_scanned;
  record["attempts"] = r.attempts;
  record["produced"] = r.produced;
  record["skipped_already_negated"] = r.skipped_already_negated;
  record["skipped_no_insertion_point"] = r.skipped_no_insertion_point;
  record["skipped_label_ineligible"] = r.skipped_label_ineligible;
  record["skipped_capped"] = r.skipped_capped;
  record["written"] = written;
  out << record.dump() << '\n';
  return kExitOk;
}

std::string ModelNameFromPath(const std::string& path) {
  return fs::path(path).stem().string();
}

void ReportCoverage(const std::string& model, const std::string& subset,
                    const JoinResult& joined, std::ostream& err) {
  if (joined.full_coverage()) return;
  err << "WARNING: model " << model << " on " << subset << ": "
      << joined.missing_predictions.size()
      << " gold examples have no prediction (excluded from the denominator), "
      << joined.unmatched_predictions.size()
      << " predictions match no gold example\n";
}

int RunEvaluate(const EvaluateConfig& config, std::ostream& out,
                std::ostream& err) {
  RequireInput(config.in.input);
  for (const std::string& path : config.predictions) RequireInput(path);
  if (!config.model_names.empty() &&
      config.model_names.size() != config.predictions.size()) {
    throw CliFailure{kExitMalformed,
                     "--model-name must be given once per prediction file"};
  }
  if (!config.output.empty()) {
    std::vector<std::string> inputs = config.predictions;
    inputs.push_back(config.in.input);
    CheckOutput(config.output, config.force, inputs);
  }
  bool want_full = config.subset != "negation";
  bool want_negation = config.subset != "all";

  ReadResult read = ReadInput(config.in, err);
  const Corpus& gold = read.corpus;
  Corpus negated = SplitByNegation(gold).negation;

  std::vector<ModelEvaluation> models;
  for (std::size_t i = 0; i < config.predictions.size(); ++i) {
    const std::string& path = config.predictions[i];
    std::string name = config.model_names.empty() ? ModelNameFromPath(path)
                                                  : config.model_names[i];
    PredictionSet predictions =
        config.positional_join
            ? ReadPositionalPredictionsFile(path, gold, name)
            : ReadPredictionsFile(path, name);

    ModelEvaluation eval{name, std::nullopt, std::nullopt};
    JoinResult full = Join(gold, predictions);
    if (want_full) {
      ReportCoverage(name, kFullSubset, full, err);
      eval.full = Accuracy(full.pairs, name, kFullSubset);
    }
    if (want_negation) {
      if (negated.empty()) {
        err << "WARNING: " << gold.name()
            << " has no negation examples; negation subset not scored\n";
      } else {
        JoinResult subset = Join(negated, predictions);
        if (!want_full) ReportCoverage(name, kNegationSubset, subset, err);
        eval.negation = Accuracy(subset.pairs, name, kNegationSubset);
      }
    }
    models.push_back(std::move(eval));
  }

  std::vector<DeltaReport> deltas;
  for (std::size_t i = 1; i < models.size(); ++i) {
    if (models[0].full && models[i].full) {
      deltas.push_back(Compare(*models[0].full, *models[i].full));
    }
    if (models[0].negation && models[i].negation) {
      deltas.push_back(Compare(*models[0].negation, *models[i].negation));
    }
  }

  RenderedTables tables = RenderTables(models, deltas);
  out << tables.text;
  if (!config.output.empty()) {
    std::ofstream file = OpenOutput(config.output);
    for (const std::string& record : tables.records) file << record << '\n';
    if (!file) throw CliFailure{kExitIo, "write failure for " + config.output};
  }
  return kExitOk;
}

void AddInputOptions(CLI::App* cmd, InputOptions& in,
                     const std::string& what = "corpus file (one JSON record per line)") {
  cmd->add_option("--input", in.input, "Input " + what)->required();
  cmd->add_flag("--skip-malformed", in.skip_malformed,
                "Count and skip unparseable records instead of failing");
  cmd->add_flag("--fail-on-unlabeled", in.fail_on_unlabeled,
                "Treat gold label -1 as an error instead of skipping it");
}

void AddAugmentOptions(CLI::App* cmd, AugmentConfig& config, bool with_kinds) {
  AddInputOptions(cmd, config.in);
  cmd->add_option("--output", config.output, "Augmented corpus to write")
      ->required();
  cmd->add_option("--aux-lexicon", config.aux_lexicon,
                  "Auxiliary-verb list (one form per line, # comments); "
                  "defaults to the bundled list");
  cmd->add_option("--verb-list", config.verb_list,
                  "Main-verb word list in the same format; defaults to the "
                  "bundled list");
  if (with_kinds) {
    cmd->add_option("--kinds", config.kinds,
                    "Transformations to apply: auto_negate_hypothesis, "
                    "contrast_negate_premise, adversarial_negate_hypothesis "
                    "or all")
        ->delimiter(',')
        ->capture_default_str();
  }
  cmd->add_option("--label-map", config.label_map,
                  "Eligible labels and their relabeling for "
                  "auto_negate_hypothesis, e.g. "
                  "entailment:contradiction,contradiction:entailment "
                  "(default entailment:contradiction)");
  cmd->add_option("--skip-already-negated", config.skip_already_negated,
                  "Skip hypotheses that already contain a negation cue")
      ->capture_default_str();
  cmd->add_option("--max-per-source", config.max_per_source,
                  "Cap on examples produced per source (0 = no cap)")
      ->capture_default_str();
  cmd->add_flag("--do-support", config.do_support,
                "Use do/does/did + not before main verbs instead of a bare not");
  auto* merge = cmd->add_flag("--merge", config.merge,
                              "Write the source corpus before the new examples");
  cmd->add_option("--inject-into", config.inject_into,
                  "Write this corpus (e.g. a validation split) before the new "
                  "examples")
      ->excludes(merge);
  cmd->add_flag("--force", config.force, "Overwrite existing output files");
}

}  // namespace

int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Negation-artifact analysis and augmentation for NLI corpora",
               "negkit"};
  app.require_subcommand(1);

  FilterConfig filter;
  auto* filter_cmd = app.add_subcommand(
      "filter", "Split a corpus into negation-only and negation-free parts");
  AddInputOptions(filter_cmd, filter.in);
  filter_cmd->add_option("--output", filter.output,
                         "Negation-only subset to write")
      ->required();
  filter_cmd->add_option("--complement-output", filter.complement_output,
                         "Negation-free remainder to write");
  filter_cmd->add_flag("--force", filter.force,
                       "Overwrite existing output files");

  StatsConfig stats;
  auto* stats_cmd =
      app.add_subcommand("stats", "Count examples containing negation cues");
  AddInputOptions(stats_cmd, stats.in);

  AugmentConfig augment;
  auto* augment_cmd = app.add_subcommand(
      "augment", "Generate negated examples with adjusted labels");
  AddAugmentOptions(augment_cmd, augment, /*with_kinds=*/true);

  AugmentConfig contrast;
  contrast.kinds = {"contrast_negate_premise"};
  auto* contrast_cmd = app.add_subcommand(
      "contrast", "Generate contrast pairs by negating premises "
                  "(augment --kinds contrast_negate_premise)");
  AddAugmentOptions(contrast_cmd, contrast, /*with_kinds=*/false);

  EvaluateConfig evaluate;
  auto* evaluate_cmd = app.add_subcommand(
      "evaluate", "Score prediction files against a gold corpus");
  AddInputOptions(evaluate_cmd, evaluate.in, "gold corpus file");
  evaluate_cmd
      ->add_option("--predictions", evaluate.predictions,
                   "Prediction files ({\"id\", \"prediction\"} per line); the "
                   "first is the baseline for deltas")
      ->required();
  evaluate_cmd->add_option("--model-name", evaluate.model_names,
                           "Display name per prediction file (default: file "
                           "stem)");
  evaluate_cmd
      ->add_option("--subset", evaluate.subset,
                   "Which subsets to score: negation, all, or both")
      ->check(CLI::IsMember({"negation", "all", "both"}))
      ->capture_default_str();
  evaluate_cmd->add_flag("--positional-join", evaluate.positional_join,
                         "Pair predictions with gold examples by line order "
                         "instead of id");
  evaluate_cmd->add_option("--output", evaluate.output,
                           "Write machine-readable report records here");
  evaluate_cmd->add_flag("--force", evaluate.force,
                         "Overwrite existing output files");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitMalformed;
  }

  try {
    if (*filter_cmd) return RunFilter(filter, out, err);
    if (*stats_cmd) return RunStats(stats, out, err);
    if (*augment_cmd) return RunAugment(augment, out, err);
    if (*contrast_cmd) return RunAugment(contrast, out, err);
    if (*evaluate_cmd) return RunEvaluate(evaluate, out, err);
  } catch (const CliFailure& failure) {
    err << "negkit: " << failure.message << '\n';
    return failure.code;
  } catch (const Error& e) {
    err << "negkit: " << ErrorKindName(e.kind()) << ": " << e.what() << '\n';
    return ExitCodeFor(e.kind());
  } catch (const nlohmann::json::exception& e) {
    err << "negkit: " << e.what() << '\n';
    return kExitMalformed;
  }
  return kExitMalformed;
}

}  // namespace negkit
