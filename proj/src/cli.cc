// Copyright 2026 The SkillKit Authors.
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

#include "skillkit/cli.h"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <type_traits>
#include <unordered_set>

#include "CLI11.hpp"
#include "skillkit/eval.h"
#include "skillkit/kg_store.h"
#include "skillkit/masker.h"
#include "skillkit/matcher.h"
#include "skillkit/mixer.h"
#include "skillkit/parallel.h"
#include "skillkit/qa_align.h"
#include "skillkit/records.h"

namespace skillkit {
namespace {

constexpr std::size_t kChunkLines = 4096;
constexpr std::size_t kMaxWarnings = 10;

// Configuration problems detected before any output is written.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad records under --strict, or data that cannot be processed at all.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GlobalOptions {
  std::uint64_t seed = 0;
  std::size_t parallelism = 1;
  bool strict = false;
  std::string report;
};

// CLI11 reads TOML natively; a file whose first non-blank character is '{'
// is read as JSON instead. Nested objects address subcommands, e.g.
// {"seed": 7, "mask": {"role": "both"}}.
class TomlOrJsonConfig : public CLI::ConfigTOML {
 public:
  std::vector<CLI::ConfigItem> from_config(std::istream &input) const override {
    std::string text((std::istreambuf_iterator<char>(input)),
                     std::istreambuf_iterator<char>());
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos || text[first] != '{') {
      std::istringstream toml(text);
      return CLI::ConfigTOML::from_config(toml);
    }
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
      throw CLI::ConversionError("config", std::string("invalid JSON config: ") + e.what());
    }
    std::vector<CLI::ConfigItem> items;
    Flatten(j, {}, items);
    return items;
  }

 private:
  static std::string Scalar(const nlohmann::json &v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    return v.dump();
  }

  static void Flatten(const nlohmann::json &obj,
                      const std::vector<std::string> &parents,
                      std::vector<CLI::ConfigItem> &items) {
    for (const auto &[key, value] : obj.items()) {
      if (value.is_object()) {
        auto next = parents;
        next.push_back(key);
        Flatten(value, next, items);
        continue;
      }
      CLI::ConfigItem item;
      item.parents = parents;
      item.name = key;
      if (value.is_array()) {
        for (const auto &v : value) item.inputs.push_back(Scalar(v));
      } else {
        item.inputs.push_back(Scalar(value));
      }
      items.push_back(std::move(item));
    }
  }
};

class FileLineStream : public RecordStream {
 public:
  explicit FileLineStream(const std::string &path) : in_(path, std::ios::binary) {
    if (!in_) throw UsageError("cannot open '" + path + "'");
  }
  std::optional<std::string> Next() override {
    std::string line;
    if (!std::getline(in_, line)) return std::nullopt;
    return line;
  }

 private:
  std::ifstream in_;
};

std::ifstream OpenInput(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  return in;
}

bool IsBlankLine(std::string_view line) {
  return line.find_first_not_of(" \t\r") == std::string_view::npos;
}

// Reads `in` in chunks of lines, maps every line with `fn` on up to
// `parallelism` threads, and hands the results to `consume` in input order.
template <typename Fn, typename Consume>
void ProcessLines(std::istream &in, std::size_t parallelism, Fn &&fn,
                  Consume &&consume) {
  using Out = std::invoke_result_t<Fn &, std::string_view, std::size_t>;
  std::vector<std::string> lines;
  std::vector<Out> results;
  std::size_t first_line = 1;
  auto flush = [&] {
    results.clear();
    results.resize(lines.size());
    ParallelFor(lines.size(), parallelism, [&](std::size_t i) {
      results[i] = fn(std::string_view(lines[i]), first_line + i);
    });
    for (Out &r : results) consume(std::move(r));
    first_line += lines.size();
    lines.clear();
  };
  std::string line;
  while (std::getline(in, line)) {
    lines.push_back(std::move(line));
    if (lines.size() == kChunkLines) flush();
  }
  flush();
}

// Counts record-level errors; rethrows the first one under --strict.
class ErrorTally {
 public:
  ErrorTally(const GlobalOptions &g, std::ostream &err) : strict_(g.strict), err_(err) {}

  void Record(const std::string &message) {
    if (strict_) throw DataError(message);
    if (count_ < kMaxWarnings) err_ << "warning: skipped " << message << "\n";
    ++count_;
  }
  std::size_t count() const { return count_; }

 private:
  bool strict_;
  std::ostream &err_;
  std::size_t count_ = 0;
};

void EmitReport(const GlobalOptions &g, const Json &report, std::ostream &out) {
  const std::string text = report.dump(2) + "\n";
  if (g.report.empty()) {
    out << text;
    return;
  }
  AtomicFile file(g.report);
  file.stream() << text;
  file.Commit();
}

std::vector<Triple> ReadTriples(const std::string &path, const GlobalOptions &g,
                                std::ostream &err, ParseSummary *summary) {
  auto in = OpenInput(path);
  TripleReader reader(in, g.strict);
  std::vector<Triple> triples;
  try {
    while (auto t = reader.Next()) triples.push_back(std::move(*t));
  } catch (const RecordError &e) {
    throw DataError(path + ": " + e.what());
  } catch (const FatalDataError &e) {
    throw DataError(path + ": " + e.what());
  }
  for (const std::string &e : reader.errors()) {
    err << "warning: skipped " << path << ": " << e << "\n";
  }
  summary->lines = reader.lines();
  summary->skipped = reader.skipped();
  return triples;
}

// ---------------------------------------------------------------- ingest

struct IngestArgs {
  std::string triples;
  std::string output;
  bool dedupe = false;
};

int RunIngest(const IngestArgs &a, const GlobalOptions &g, std::ostream &out,
              std::ostream &err) {
  ParseSummary summary;
  auto triples = ReadTriples(a.triples, g, err, &summary);
  const std::size_t parsed = triples.size();
  if (a.dedupe) triples = Deduplicate(std::move(triples));
  AtomicFile file(a.output);
  for (const Triple &t : triples) WriteTriple(file.stream(), t);
  file.Commit();

  Json report;
  report["lines"] = summary.lines;
  report["triples"] = triples.size();
  report["skipped"] = summary.skipped;
  report["duplicates_removed"] = parsed - triples.size();
  EmitReport(g, report, out);
  return kExitOk;
}

// ----------------------------------------------------------------- stats

struct StatsArgs {
  std::string triples;
  std::string output;
  bool dedupe = false;
};

int RunStats(const StatsArgs &a, const GlobalOptions &g, std::ostream &out,
             std::ostream &err) {
  ParseSummary summary;
  auto triples = ReadTriples(a.triples, g, err, &summary);
  if (a.dedupe) triples = Deduplicate(std::move(triples));
  const KnowledgeGraph kg = KnowledgeGraph::Build(std::move(triples));
  const Json stats = ToJson(kg.Stats());
  if (!a.output.empty()) {
    AtomicFile file(a.output);
    file.stream() << stats.dump(2) << "\n";
    file.Commit();
  }
  Json report = stats;
  report["skipped"] = summary.skipped;
  EmitReport(g, report, out);
  return kExitOk;
}

// ------------------------------------------------------------ match-kelm

struct MatchKelmArgs {
  std::string kelm;
  std::string output;
};

struct MatchOutcome {
  bool blank = false;
  std::optional<std::string> error;
  bool matched = false;
  std::string line;
};

int RunMatchKelm(const MatchKelmArgs &a, const GlobalOptions &g,
                 std::ostream &out, std::ostream &err) {
  auto in = OpenInput(a.kelm);
  AtomicFile file(a.output);
  ErrorTally errors(g, err);
  std::size_t records = 0;
  std::size_t matched = 0;
  ProcessLines(
      in, g.parallelism,
      [](std::string_view line, std::size_t line_number) {
        MatchOutcome o;
        if (IsBlankLine(line)) {
          o.blank = true;
          return o;
        }
        try {
          KelmRecord rec = ParseKelmRecord(line, line_number);
          const MatchedSentence m =
              MatchRecord(std::move(rec.sentence), std::move(rec.triples));
          o.matched = m.matched();
          o.line = Dump(MatchedToJson(std::move(rec.raw), m));
        } catch (const RecordError &e) {
          o.error = e.what();
        }
        return o;
      },
      [&](MatchOutcome &&o) {
        if (o.blank) return;
        if (o.error) {
          errors.Record(a.kelm + ": " + *o.error);
          return;
        }
        ++records;
        if (o.matched) ++matched;
        file.stream() << o.line << '\n';
      });
  file.Commit();
  Json report;
  report["records"] = records;
  report["matched"] = matched;
  report["malformed"] = errors.count();
  EmitReport(g, report, out);
  return kExitOk;
}

// ------------------------------------------------------------------ mask

struct MaskArgs {
  std::string triples;
  std::string kelm;
  std::string output;
  std::string role = "random";
  std::string sentinel = "[MASK]";
};

struct MaskOutcome {
  bool blank = false;
  std::optional<std::string> error;
  DropReason dropped = DropReason::kNone;
  std::size_t examples = 0;
  std::string text;  // newline-terminated JSONL records
};

void AppendExamples(const MaskResult &r, MaskOutcome &o) {
  o.dropped = r.dropped;
  o.examples = r.examples.size();
  for (const MaskedExample &ex : r.examples) {
    o.text += Dump(ToJson(ex));
    o.text += '\n';
  }
}

int RunMask(const MaskArgs &a, const GlobalOptions &g, std::ostream &out,
            std::ostream &err) {
  if (a.triples.empty() && a.kelm.empty()) {
    throw UsageError("mask: give --triples and/or --kelm");
  }
  MaskPolicy policy;
  try {
    policy.role_choice = ParseRoleChoice(a.role);
    policy.sentinel = a.sentinel;
    policy.seed = g.seed;
    ValidatePolicy(policy);
  } catch (const std::invalid_argument &e) {
    throw UsageError(std::string("mask: ") + e.what());
  }
  std::optional<std::ifstream> triples_in;
  std::optional<std::ifstream> kelm_in;
  if (!a.triples.empty()) triples_in = OpenInput(a.triples);
  if (!a.kelm.empty()) kelm_in = OpenInput(a.kelm);

  AtomicFile file(a.output);
  ErrorTally errors(g, err);
  std::size_t triples = 0, kg_examples = 0, kelm_records = 0, kelm_examples = 0,
              no_spans = 0, collisions = 0;
  auto tally = [&](const std::string &path, MaskOutcome &&o, bool kelm) {
    if (o.blank) return;
    if (o.error) {
      errors.Record(path + ": " + *o.error);
      return;
    }
    ++(kelm ? kelm_records : triples);
    (kelm ? kelm_examples : kg_examples) += o.examples;
    if (o.dropped == DropReason::kNoSpans) ++no_spans;
    if (o.dropped == DropReason::kSentinelCollision) ++collisions;
    file.stream() << o.text;
  };

  if (triples_in) {
    ProcessLines(
        *triples_in, g.parallelism,
        [&policy](std::string_view line, std::size_t line_number) {
          MaskOutcome o;
          if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
          if (auto bad = FindInvalidUtf8(line)) {
            throw FatalDataError("line " + std::to_string(line_number) +
                                 ": invalid UTF-8 at byte " +
                                 std::to_string(*bad));
          }
          try {
            const Triple t = ParseTripleLine(line, line_number);
            RecordRng rng(policy.seed, kTripleStream, line_number);
            AppendExamples(MaskTriple(t, policy, rng), o);
          } catch (const RecordError &e) {
            o.error = e.what();
          }
          return o;
        },
        [&](MaskOutcome &&o) { tally(a.triples, std::move(o), false); });
  }
  if (kelm_in) {
    ProcessLines(
        *kelm_in, g.parallelism,
        [&policy](std::string_view line, std::size_t line_number) {
          MaskOutcome o;
          if (IsBlankLine(line)) {
            o.blank = true;
            return o;
          }
          try {
            KelmRecord rec = ParseKelmRecord(line, line_number);
            MatchedSentence m;
            if (rec.has_spans) {
              m = MatchedSentence{std::move(rec.sentence),
                                  std::move(rec.triples),
                                  std::move(rec.entity_spans)};
            } else {
              m = MatchRecord(std::move(rec.sentence), std::move(rec.triples));
            }
            RecordRng rng(policy.seed, kSentenceStream, line_number);
            AppendExamples(MaskSentence(m, policy, rng), o);
          } catch (const RecordError &e) {
            o.error = e.what();
          }
          return o;
        },
        [&](MaskOutcome &&o) { tally(a.kelm, std::move(o), true); });
  }
  file.Commit();

  Json report;
  report["triples"] = triples;
  report["kg_examples"] = kg_examples;
  report["kelm_records"] = kelm_records;
  report["kelm_examples"] = kelm_examples;
  report["dropped_no_spans"] = no_spans;
  report["dropped_sentinel_collision"] = collisions;
  report["malformed"] = errors.count();
  EmitReport(g, report, out);
  return kExitOk;
}

// ------------------------------------------------------------------- mix

struct MixArgs {
  std::vector<std::string> sources;
  std::uint64_t block = 2;
  std::string output;
};

int RunMix(const MixArgs &a, const GlobalOptions &g, std::ostream &out,
           std::ostream &) {
  MixSpec spec;
  spec.seed = g.seed;
  spec.block = a.block;
  std::vector<std::string> paths;
  std::unordered_set<std::string> ids;
  std::unordered_set<std::string> seen_paths;
  for (const std::string &s : a.sources) {
    const auto eq = s.find('=');
    const auto colon = s.rfind(':');
    if (eq == std::string::npos || colon == std::string::npos || colon < eq ||
        eq == 0 || colon == eq + 1) {
      throw UsageError("mix: --source must look like id=path:weight, got '" + s + "'");
    }
    MixSource src{s.substr(0, eq), {}};
    try {
      src.weight = ParseRational(s.substr(colon + 1));
    } catch (const std::invalid_argument &e) {
      throw UsageError("mix: bad weight in '" + s + "': " + e.what());
    }
    if (!ids.insert(src.id).second) {
      throw UsageError("mix: duplicate source id '" + src.id + "'");
    }
    std::string path = s.substr(eq + 1, colon - eq - 1);
    if (!seen_paths.insert(path).second) {
      throw UsageError("mix: source file '" + path + "' given twice");
    }
    paths.push_back(std::move(path));
    spec.sources.push_back(std::move(src));
  }
  try {
    ValidateMixSpec(spec);
  } catch (const std::invalid_argument &e) {
    throw UsageError(std::string("mix: ") + e.what());
  }
  std::vector<std::unique_ptr<FileLineStream>> owned;
  std::vector<RecordStream *> streams;
  for (const std::string &p : paths) {
    owned.push_back(std::make_unique<FileLineStream>(p));
    streams.push_back(owned.back().get());
  }

  AtomicFile file(a.output);
  const MixReport mixed =
      Mix(streams, spec, [&file](std::size_t, std::string record) {
        file.stream() << record << '\n';
      });
  file.Commit();

  Json report;
  report["emitted"] = mixed.emitted;
  Json emitted = Json::object();
  Json leftover = Json::object();
  for (std::size_t i = 0; i < spec.sources.size(); ++i) {
    emitted[spec.sources[i].id] = mixed.emitted_per_source[i];
    leftover[spec.sources[i].id] = mixed.leftover_per_source[i];
  }
  report["emitted_per_source"] = std::move(emitted);
  report["leftover_per_source"] = std::move(leftover);
  EmitReport(g, report, out);
  return kExitOk;
}

// -------------------------------------------------------------- match-qa

struct MatchQaArgs {
  std::string triples;
  std::string qa;
  std::string output;
};

int RunMatchQa(const MatchQaArgs &a, const GlobalOptions &g, std::ostream &out,
               std::ostream &err) {
  ParseSummary summary;
  auto triples = ReadTriples(a.triples, g, err, &summary);
  auto in = OpenInput(a.qa);
  const KnowledgeGraph kg = KnowledgeGraph::Build(std::move(triples));

  ErrorTally errors(g, err);
  std::vector<QAItem> items;
  std::vector<Json> raws;
  std::string line;
  for (std::size_t n = 1; std::getline(in, line); ++n) {
    if (IsBlankLine(line)) continue;
    try {
      Json raw;
      items.push_back(ParseQAItem(line, n, &raw));
      raws.push_back(std::move(raw));
    } catch (const RecordError &e) {
      errors.Record(a.qa + ": " + e.what());
    }
  }
  FilterReport filter;
  const auto matched = FilterDataset(items, kg, &filter, g.parallelism);

  AtomicFile file(a.output);
  for (const MatchedItem &m : matched) {
    Json j = raws[m.index];
    j.erase("witness");
    j["witness"] = ToJson(m.witness);
    file.stream() << Dump(j) << '\n';
  }
  file.Commit();

  Json report;
  report["total"] = filter.total;
  report["matched"] = filter.matched;
  report["malformed"] = errors.count();
  report["triples_skipped"] = summary.skipped;
  EmitReport(g, report, out);
  return kExitOk;
}

// ----------------------------------------------------------------- split

struct SplitArgs {
  std::string input;
  std::string fraction = "0.1";
  std::string head;
  std::string tail;
};

int RunSplit(const SplitArgs &a, const GlobalOptions &g, std::ostream &out,
             std::ostream &) {
  Rational fraction;
  try {
    fraction = ParseRational(a.fraction);
    TailSize(0, fraction);
  } catch (const std::invalid_argument &e) {
    throw UsageError(std::string("split: ") + e.what());
  }
  if (a.head == a.tail) throw UsageError("split: --head and --tail must differ");
  auto in = OpenInput(a.input);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!IsBlankLine(line)) lines.push_back(std::move(line));
  }
  const std::size_t total = lines.size();
  auto parts = SplitTail(std::move(lines), fraction);
  AtomicFile head(a.head);
  AtomicFile tail(a.tail);
  for (const auto &l : parts.head) head.stream() << l << '\n';
  for (const auto &l : parts.tail) tail.stream() << l << '\n';
  head.Commit();
  tail.Commit();

  Json report;
  report["total"] = total;
  report["head"] = parts.head.size();
  report["tail"] = parts.tail.size();
  EmitReport(g, report, out);
  return kExitOk;
}

// ----------------------------------------------------------------- score

struct ScoreArgs {
  std::string qa;
  std::string preds;
  std::string output;
  ScoreMeta meta;
  std::string mode = "normalized";
};

int RunScore(const ScoreArgs &a, const GlobalOptions &g, std::ostream &out,
             std::ostream &err) {
  EmMode mode;
  if (a.mode == "normalized") {
    mode = EmMode::kNormalized;
  } else if (a.mode == "strict") {
    mode = EmMode::kStrict;
  } else {
    throw UsageError("score: --em-mode must be normalized or strict");
  }
  auto qa_in = OpenInput(a.qa);
  auto preds_in = OpenInput(a.preds);
  ErrorTally errors(g, err);
  std::vector<QAItem> items;
  std::vector<PredictionRecord> preds;
  std::string line;
  for (std::size_t n = 1; std::getline(qa_in, line); ++n) {
    if (IsBlankLine(line)) continue;
    try {
      items.push_back(ParseQAItem(line, n));
    } catch (const RecordError &e) {
      errors.Record(a.qa + ": " + e.what());
    }
  }
  for (std::size_t n = 1; std::getline(preds_in, line); ++n) {
    if (IsBlankLine(line)) continue;
    try {
      preds.push_back(ParsePrediction(line, n));
    } catch (const RecordError &e) {
      errors.Record(a.preds + ": " + e.what());
    }
  }
  std::vector<std::string> missing;
  EMResult result;
  try {
    result = Score(preds, items, a.meta, mode, &missing);
  } catch (const ScoreError &e) {
    throw DataError(e.what());
  }
  if (!missing.empty()) {
    err << "warning: " << missing.size()
        << " item(s) have no prediction and count as wrong:";
    for (std::size_t i = 0; i < missing.size() && i < kMaxWarnings; ++i) {
      err << ' ' << missing[i];
    }
    err << (missing.size() > kMaxWarnings ? " ...\n" : "\n");
  }
  AtomicFile file(a.output);
  file.stream() << Json::array({ToJson(result)}).dump(2) << "\n";
  file.Commit();

  Json report = ToJson(result);
  report["missing"] = missing;
  report["malformed"] = errors.count();
  EmitReport(g, report, out);
  return kExitOk;
}

// ----------------------------------------------------------------- delta

struct DeltaArgs {
  std::vector<std::string> results;
  std::string baseline;
  std::string treatment;
  std::string output;
};

int RunDelta(const DeltaArgs &a, const GlobalOptions &g, std::ostream &out,
             std::ostream &) {
  std::vector<EMResult> results;
  for (const std::string &path : a.results) {
    std::string text;
    try {
      text = ReadFile(path);
    } catch (const std::runtime_error &e) {
      throw UsageError(e.what());
    }
    try {
      const Json j = Json::parse(text);
      if (j.is_array()) {
        for (const Json &r : j) results.push_back(EMResultFromJson(r));
      } else {
        results.push_back(EMResultFromJson(j));
      }
    } catch (const std::exception &e) {
      throw DataError(path + ": " + e.what());
    }
  }
  DeltaReport delta;
  try {
    delta = ComputeDelta(results, a.baseline, a.treatment);
  } catch (const ScoreError &e) {
    throw DataError(e.what());
  }
  AtomicFile file(a.output);
  file.stream() << DeltaCsv(delta);
  file.Commit();

  Json report;
  report["rows"] = delta.rows.size();
  report["average"] = std::stod(FormatDecimal(delta.average));
  EmitReport(g, report, out);
  return kExitOk;
}

// -------------------------------------------------------------- selftest

int RunSelftest(const GlobalOptions &g, std::ostream &out) {
  std::size_t passed = 0, failed = 0;
  auto check = [&](const std::string &name, bool ok) {
    out << (ok ? "PASS " : "FAIL ") << name << "\n";
    ++(ok ? passed : failed);
  };
  const Triple pulp{"Pulp Fiction", "award received", "Palme d'Or"};
  const std::string sentence =
      "Quentin Tarantino won the Palme d'Or in 1994 for Pulp Fiction.";

  MaskPolicy policy;
  policy.role_choice = RoleChoice::kBoth;
  RecordRng rng(0, kTripleStream, 0);
  const auto kg = MaskTriple(pulp, policy, rng).examples;
  check("triple masking (subject)",
        kg.size() == 2 && kg[0].input == "[MASK], award received, Palme d'Or" &&
            kg[0].target == "Pulp Fiction");
  check("triple masking (object)",
        kg.size() == 2 && kg[1].input == "Pulp Fiction, award received, [MASK]" &&
            kg[1].target == "Palme d'Or");

  policy.role_choice = RoleChoice::kObject;
  const auto kelm =
      MaskSentence(MatchRecord(sentence, {pulp}), policy, rng).examples;
  check("sentence masking (object)",
        kelm.size() == 1 &&
            kelm[0].input ==
                "Quentin Tarantino won the [MASK] in 1994 for Pulp Fiction." &&
            kelm[0].target == "Palme d'Or");

  const auto bracket = MatchEntity("John Doe (born 1990)",
                                   "John Doe stars in the film.");
  check("bracket fallback", bracket.size() == 1 && bracket[0].start == 0 &&
                                bracket[0].end == 8);

  auto near = [](const Rational &r, double want) {
    return std::abs(ToDouble(r) - want) <= 0.005;
  };
  check("epochs on 35,697,715 triples ~ 7.17",
        near(Epochs({500000, 1024, Rational(1, 2), 35697715}), 7.17));
  check("epochs on 15,628,486 sentences ~ 16.38",
        near(Epochs({500000, 1024, Rational(1, 2), 15628486}), 16.38));

  const std::vector<EMResult> table = {
      {"FreebaseQA", "test", "base+C4", ParseRational("28.33"), 0, 0},
      {"FreebaseQA", "test", "base+WikiKG", ParseRational("28.38"), 0, 0}};
  check("delta EM 0.05",
        ComputeDelta(table, "base+C4", "base+WikiKG").rows.at(0).delta ==
            Rational(5, 100));

  Json report;
  report["passed"] = passed;
  report["failed"] = failed;
  if (!g.report.empty()) EmitReport(g, report, out);
  return failed == 0 ? kExitOk : kExitData;
}

}  // namespace

int RunCli(const std::vector<std::string> &args, std::ostream &out,
           std::ostream &err) {
  CLI::App app{"Knowledge-infusion corpus toolkit: triple ingestion, entity "
               "span matching, salient span masking, corpus mixing, QA "
               "alignment and EM scoring.",
               "skillkit"};
  app.require_subcommand(1, 1);
  app.config_formatter(std::make_shared<TomlOrJsonConfig>());
  app.set_config("--config", "", "TOML or JSON config file (flags override it)")
      ->envname("SKILLKIT_CONFIG");

  GlobalOptions g;
  app.add_option("--seed", g.seed, "Random seed")->capture_default_str();
  app.add_option("--parallelism", g.parallelism, "Worker threads")
      ->check(CLI::Range(std::size_t{1}, std::size_t{1024}))
      ->capture_default_str();
  app.add_flag("--strict", g.strict, "Abort (exit 2) on the first bad record");
  app.add_option("--report", g.report, "Write the JSON run report here");

  auto sub = [&app](const char *name, const char *help) {
    CLI::App *s = app.add_subcommand(name, help);
    s->fallthrough();
    return s;
  };

  IngestArgs ingest;
  auto *ingest_cmd = sub("ingest", "Validate a triples TSV and write a clean copy");
  ingest_cmd->add_option("--triples", ingest.triples)->required()->check(CLI::ExistingFile);
  ingest_cmd->add_option("-o,--output", ingest.output)->required();
  ingest_cmd->add_flag("--dedupe", ingest.dedupe, "Drop exact duplicate triples");

  StatsArgs stats;
  auto *stats_cmd = sub("stats", "Triple, entity and relation counts");
  stats_cmd->add_option("--triples", stats.triples)->required()->check(CLI::ExistingFile);
  stats_cmd->add_option("-o,--output", stats.output, "Write stats JSON here");
  stats_cmd->add_flag("--dedupe", stats.dedupe, "Drop exact duplicate triples");

  MatchKelmArgs match_kelm;
  auto *match_kelm_cmd = sub("match-kelm", "Find entity spans in triple-aligned sentences");
  match_kelm_cmd->add_option("--kelm", match_kelm.kelm)->required()->check(CLI::ExistingFile);
  match_kelm_cmd->add_option("-o,--output", match_kelm.output)->required();

  MaskArgs mask;
  auto *mask_cmd = sub("mask", "Produce salient-span-masked examples");
  mask_cmd->add_option("--triples", mask.triples, "Triples TSV")->check(CLI::ExistingFile);
  mask_cmd->add_option("--kelm", mask.kelm, "Aligned sentences JSONL (matched or raw)")
      ->check(CLI::ExistingFile);
  mask_cmd->add_option("--role", mask.role, "random, subject, object or both")
      ->capture_default_str();
  mask_cmd->add_option("--sentinel", mask.sentinel)->capture_default_str();
  mask_cmd->add_option("-o,--output", mask.output)->required();

  MixArgs mix;
  auto *mix_cmd = sub("mix", "Block-exact weighted interleaving of JSONL streams");
  mix_cmd->add_option("--source", mix.sources, "id=path:weight")->required();
  mix_cmd->add_option("--block", mix.block, "Records per exact-ratio block")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  mix_cmd->add_option("-o,--output", mix.output)->required();

  MatchQaArgs match_qa;
  auto *match_qa_cmd = sub("match-qa", "Keep QA items answerable from a single triple");
  match_qa_cmd->add_option("--triples", match_qa.triples)->required()->check(CLI::ExistingFile);
  match_qa_cmd->add_option("--qa", match_qa.qa)->required()->check(CLI::ExistingFile);
  match_qa_cmd->add_option("-o,--output", match_qa.output)->required();

  SplitArgs split;
  auto *split_cmd = sub("split", "Move the last fraction of a file into a dev split");
  split_cmd->add_option("--input", split.input)->required()->check(CLI::ExistingFile);
  split_cmd->add_option("--fraction", split.fraction)->capture_default_str();
  split_cmd->add_option("--head", split.head)->required();
  split_cmd->add_option("--tail", split.tail)->required();

  ScoreArgs score;
  auto *score_cmd = sub("score", "Exact Match of predictions against gold answers");
  score_cmd->add_option("--qa", score.qa)->required()->check(CLI::ExistingFile);
  score_cmd->add_option("--preds", score.preds)->required()->check(CLI::ExistingFile);
  score_cmd->add_option("--task", score.meta.task)->required();
  score_cmd->add_option("--split", score.meta.split)->required()->check(
      CLI::IsMember({"dev", "test"}));
  score_cmd->add_option("--model", score.meta.model)->required();
  score_cmd->add_option("--em-mode", score.mode, "normalized or strict")
      ->capture_default_str();
  score_cmd->add_option("-o,--output", score.output)->required();

  DeltaArgs delta;
  auto *delta_cmd = sub("delta", "Per-task EM differences between two models");
  delta_cmd->add_option("--results", delta.results, "em.json files")
      ->required()
      ->check(CLI::ExistingFile);
  delta_cmd->add_option("--baseline", delta.baseline)->required();
  delta_cmd->add_option("--treatment", delta.treatment)->required();
  delta_cmd->add_option("-o,--output", delta.output)->required();

  auto *selftest_cmd = sub("selftest", "Run the built-in reference checks");

  std::vector<const char *> argv;
  argv.reserve(args.size());
  for (const std::string &a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp &) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError &e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  }

  try {
    if (*ingest_cmd) return RunIngest(ingest, g, out, err);
    if (*stats_cmd) return RunStats(stats, g, out, err);
    if (*match_kelm_cmd) return RunMatchKelm(match_kelm, g, out, err);
    if (*mask_cmd) return RunMask(mask, g, out, err);
    if (*mix_cmd) return RunMix(mix, g, out, err);
    if (*match_qa_cmd) return RunMatchQa(match_qa, g, out, err);
    if (*split_cmd) return RunSplit(split, g, out, err);
    if (*score_cmd) return RunScore(score, g, out, err);
    if (*delta_cmd) return RunDelta(delta, g, out, err);
    if (*selftest_cmd) return RunSelftest(g, out);
  } catch (const UsageError &e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const DataError &e) {
    err << "data error: " << e.what() << "\n";
    return kExitData;
  } catch (const FatalDataError &e) {
    err << "data error: " << e.what() << "\n";
    return kExitData;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  }
  return kExitConfig;
}

}  // namespace skillkit
