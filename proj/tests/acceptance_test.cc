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


// Acceptance suite: one PASS/FAIL line per criterion. Exits nonzero if any
// hard criterion fails; throughput is reported but never fails the run.

#include <unistd.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "generators.h"
#include "oracle/brute_force.h"
#include "skillkit/cli.h"
#include "skillkit/eval.h"
#include "skillkit/kg_store.h"
#include "skillkit/masker.h"
#include "skillkit/matcher.h"
#include "skillkit/mixer.h"
#include "skillkit/qa_align.h"
#include "skillkit/records.h"

namespace skillkit {
namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

double Seconds(Clock::time_point since) {
  return std::chrono::duration<double>(Clock::now() - since).count();
}

int failures = 0;

void Report(int id, bool ok, const std::string &detail, bool soft = false) {
  std::cout << (ok ? "PASS" : (soft ? "SOFT-FAIL" : "FAIL")) << " [" << id
            << "] " << detail << std::endl;
  if (!ok && !soft) ++failures;
}

const Triple kPulp{"Pulp Fiction", "award received", "Palme d'Or"};

void Criterion1() {
  const auto start = Clock::now();
  MaskPolicy policy;
  policy.role_choice = RoleChoice::kObject;
  RecordRng rng(0, kTripleStream, 0);
  const auto kg = MaskTriple(kPulp, policy, rng).examples;
  const auto m = MatchRecord(
      "Quentin Tarantino won the Palme d'Or in 1994 for Pulp Fiction.", {kPulp});
  RecordRng rng2(0, kSentenceStream, 0);
  const auto kelm = MaskSentence(m, policy, rng2).examples;
  const double secs = Seconds(start);
  const bool ok =
      kg.size() == 1 && kg[0].input == "Pulp Fiction, award received, [MASK]" &&
      kg[0].target == "Palme d'Or" && kelm.size() == 1 &&
      kelm[0].input ==
          "Quentin Tarantino won the [MASK] in 1994 for Pulp Fiction." &&
      kelm[0].target == "Palme d'Or" && secs < 1.0;
  std::ostringstream d;
  d << "reference triple and sentence masks byte-exact (" << secs * 1e3 << " ms)";
  Report(1, ok, d.str());
}

void Criterion2() {
  const double wiki = ToDouble(Epochs({500000, 1024, Rational(1, 2), 35697715}));
  const double kelm = ToDouble(Epochs({500000, 1024, Rational(1, 2), 15628486}));
  const bool ok =
      std::abs(wiki - 7.17) <= 0.005 && std::abs(kelm - 16.38) <= 0.005;
  std::ostringstream d;
  d.precision(6);
  d << "epochs " << wiki << " (want 7.17) and " << kelm
    << " (want 16.38), tolerance 0.005";
  Report(2, ok, d.str());
}

void Criterion3() {
  const auto start = Clock::now();
  testing::SentenceGenerator gen(20261019);
  std::size_t mismatches = 0, comparisons = 0, spans = 0;
  for (int i = 0; i < 1000; ++i) {
    const std::string sentence = gen.Next();
    const auto cands = oracle::Candidates(sentence);
    const PreparedSentence prepared(sentence);
    for (const std::string &entity : gen.Probes()) {
      const auto got = MatchEntity(entity, prepared);
      ++comparisons;
      spans += got.size();
      if (got != oracle::MatchEntity(entity, sentence, cands)) {
        if (mismatches++ == 0) {
          std::cerr << "  first mismatch: entity '" << entity << "' in '"
                    << sentence << "'\n";
        }
      }
    }
  }
  const double secs = Seconds(start);
  std::ostringstream d;
  d << "matcher vs brute force on 1000 sentences: " << comparisons
    << " comparisons, " << spans << " spans, " << mismatches
    << " mismatches (" << secs << " s, limit 10 s)";
  Report(3, mismatches == 0 && secs < 10.0, d.str());
}

void Criterion4() {
  const auto triples = testing::ToyGraph(2000, 44);
  std::size_t matched = 0, subject_hits = 0, object_hits = 0;
  std::size_t want_subject = 0;
  for (std::size_t i = 0; i < triples.size(); ++i) {
    const bool full = MatchRecord(testing::TemplateSentence(triples[i], true, i),
                                  {triples[i]})
                          .matched();
    matched += full;
    const bool with_subject = i % 2 == 0;
    want_subject += with_subject;
    const auto m = MatchRecord(
        testing::TemplateSentence(triples[i], with_subject, i), {triples[i]});
    subject_hits += m.entity_spans.contains({0, Role::kSubject});
    object_hits += m.entity_spans.contains({0, Role::kObject});
  }
  std::ostringstream d;
  d << "templated records matched " << matched << "/" << triples.size()
    << "; with half the subjects dropped: subject " << subject_hits << " (want "
    << want_subject << "), object " << object_hits << " (want "
    << triples.size() << ")";
  Report(4, matched == triples.size() && subject_hits == want_subject &&
                object_hits == triples.size(),
         d.str());
}

void Criterion5() {
  const auto triples = testing::ToyGraph(5000, 55, 2500);
  const auto kg = KnowledgeGraph::Build(triples);
  const auto items = testing::SyntheticQA(triples, 500, 56);
  FilterReport report;
  const auto matched = FilterDataset(items, kg, &report, 4);
  std::size_t verified = 0;
  std::vector<std::size_t> got, want;
  for (const auto &m : matched) {
    got.push_back(m.index);
    const auto &item = items[m.index];
    const Witness &w = m.witness;
    const std::string answer = PreprocessText(w.triple.entity(w.answer_role));
    bool answer_ok = false;
    for (const auto &a : item.answers) answer_ok |= PreprocessText(a) == answer;
    const std::string &other = w.triple.entity(Opposite(w.answer_role));
    if (w.ordinal < triples.size() && triples[w.ordinal] == w.triple &&
        answer_ok && oracle::Mentions(item.question, other) &&
        PreprocessText(w.question_entity) == PreprocessText(other)) {
      ++verified;
    }
  }
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (oracle::Answerable(items[i].answers, items[i].question, triples)) {
      want.push_back(i);
    }
  }
  std::ostringstream d;
  d << "QA filter over 5000 triples: " << matched.size() << "/500 matched, "
    << verified << " witnesses re-verified, brute-force subset "
    << (got == want ? "identical" : "differs");
  Report(5, verified == matched.size() && got == want && !matched.empty(),
         d.str());
}

// Determinism: the whole CLI pipeline run three times (parallelism 1, 1, 8);
// every output and report must hash identically.
class Workspace {
 public:
  Workspace()
      : dir_(fs::temp_directory_path() /
             ("skillkit_acceptance_" + std::to_string(::getpid()))) {
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  ~Workspace() { fs::remove_all(dir_); }

  std::string Path(const std::string &name) const { return (dir_ / name).string(); }

  void Write(const std::string &name, const std::string &content) const {
    std::ofstream(Path(name), std::ios::binary) << content;
  }

  std::string Read(const std::string &name) const {
    std::ifstream in(Path(name), std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

 private:
  fs::path dir_;
};

void Criterion6() {
  Workspace ws;
  const auto triples = testing::ToyGraph(6000, 66, 3000);
  std::string tsv;
  for (std::size_t i = 0; i < triples.size(); ++i) {
    tsv += SerializeTriples(std::span(&triples[i], 1));
    if (i % 1000 == 17) tsv += "malformed line\n";
  }
  ws.Write("triples.tsv", tsv);
  std::string kelm, natural;
  for (std::size_t i = 0; i < triples.size(); ++i) {
    Json rec;
    rec["sentence"] = testing::TemplateSentence(triples[i], i % 3 != 0, i);
    rec["triples"] = Json::array(
        {Json::array({triples[i].subject, triples[i].relation, triples[i].object})});
    kelm += rec.dump() + "\n";
    natural += "{\"text\":\"natural " + std::to_string(i) + "\"}\n";
  }
  ws.Write("kelm.jsonl", kelm);
  ws.Write("natural.jsonl", natural);
  const auto items = testing::SyntheticQA(triples, 5000, 67);
  std::string qa, preds;
  for (const auto &item : items) {
    Json q;
    q["id"] = item.id;
    q["question"] = item.question;
    q["answers"] = item.answers;
    qa += q.dump() + "\n";
    if (item.id.back() != '7') {
      Json p;
      p["id"] = item.id;
      p["prediction"] = item.answers.back();
      preds += p.dump() + "\n";
    }
  }
  ws.Write("qa.jsonl", qa);
  ws.Write("preds.jsonl", preds);

  using Args = std::vector<std::string>;
  const std::vector<std::pair<std::string, Args>> steps = {
      {"ingest", {"ingest", "--triples", ws.Path("triples.tsv"), "-o",
                  ws.Path("clean.tsv"), "--dedupe"}},
      {"stats", {"stats", "--triples", ws.Path("triples.tsv"), "-o",
                 ws.Path("stats.json")}},
      {"match-kelm", {"match-kelm", "--kelm", ws.Path("kelm.jsonl"), "-o",
                      ws.Path("matched_kelm.jsonl")}},
      {"mask", {"mask", "--triples", ws.Path("triples.tsv"), "--kelm",
                ws.Path("matched_kelm.jsonl"), "-o", ws.Path("masked.jsonl")}},
      {"mix", {"mix", "--source", "kg=" + ws.Path("masked.jsonl") + ":0.5",
               "--source", "c4=" + ws.Path("natural.jsonl") + ":0.5", "-o",
               ws.Path("mixed.jsonl")}},
      {"match-qa", {"match-qa", "--triples", ws.Path("triples.tsv"), "--qa",
                    ws.Path("qa.jsonl"), "-o", ws.Path("qa_matched.jsonl")}},
      {"split", {"split", "--input", ws.Path("qa.jsonl"), "--head",
                 ws.Path("train.jsonl"), "--tail", ws.Path("dev.jsonl")}},
      {"score-a", {"score", "--qa", ws.Path("qa.jsonl"), "--preds",
                   ws.Path("preds.jsonl"), "--task", "toy", "--split", "test",
                   "--model", "a", "-o", ws.Path("em_a.json")}},
      {"score-b", {"score", "--qa", ws.Path("qa.jsonl"), "--preds",
                   ws.Path("preds.jsonl"), "--task", "toy", "--split", "test",
                   "--model", "b", "--em-mode", "strict", "-o",
                   ws.Path("em_b.json")}},
      {"delta", {"delta", "--results", ws.Path("em_a.json"), ws.Path("em_b.json"),
                 "--baseline", "a", "--treatment", "b", "-o",
                 ws.Path("delta.csv")}},
      {"selftest", {"selftest"}},
  };
  const std::vector<std::string> outputs = {
      "clean.tsv",   "stats.json",  "matched_kelm.jsonl", "masked.jsonl",
      "mixed.jsonl", "qa_matched.jsonl", "train.jsonl",  "dev.jsonl",
      "em_a.json",   "em_b.json",   "delta.csv"};

  auto run_all = [&](const std::string &parallelism, std::vector<std::size_t> &hashes,
                     std::string &error) {
    for (const auto &[name, args] : steps) {
      Args full = {"skillkit", "--seed", "1234", "--parallelism", parallelism,
                   "--report", ws.Path("report_" + name + ".json")};
      full.insert(full.end(), args.begin(), args.end());
      std::ostringstream out, err;
      const int code = RunCli(full, out, err);
      if (code != kExitOk) {
        error = name + " exited " + std::to_string(code) + ": " + err.str();
        return;
      }
      hashes.push_back(std::hash<std::string>{}(out.str()));
      hashes.push_back(
          std::hash<std::string>{}(ws.Read("report_" + name + ".json")));
    }
    for (const auto &f : outputs) hashes.push_back(std::hash<std::string>{}(ws.Read(f)));
  };

  std::vector<std::size_t> h1, h1b, h8;
  std::string error;
  run_all("1", h1, error);
  if (error.empty()) run_all("1", h1b, error);
  if (error.empty()) run_all("8", h8, error);
  if (!error.empty()) {
    Report(6, false, "determinism: " + error);
    return;
  }
  std::size_t differing = 0;
  for (std::size_t i = 0; i < h1.size(); ++i) {
    differing += h1[i] != h1b[i] || h1[i] != h8[i];
  }
  const std::string masked = ws.Read("masked.jsonl");
  const auto lines = std::count(masked.begin(), masked.end(), '\n');
  std::ostringstream d;
  d << "11 subcommand runs x3 (parallelism 1, 1, 8): " << h1.size()
    << " output/report hashes, " << differing << " differ (masked.jsonl has "
    << lines << " lines)";
  Report(6, differing == 0 && lines > 4096, d.str());
}

void Criterion7() {
  std::vector<std::string> a, b;
  for (int i = 0; i < 10000; ++i) {
    a.push_back("a" + std::to_string(i));
    b.push_back("b" + std::to_string(i));
  }
  VectorStream sa(a), sb(b);
  RecordStream *streams[] = {&sa, &sb};
  const MixSpec spec{{{"kg", Rational(1, 2)}, {"c4", Rational(1, 2)}}, 77, 2};
  long balance = 0;
  std::size_t emitted = 0, bad_prefixes = 0;
  Mix(streams, spec, [&](std::size_t source, std::string) {
    balance += source == 0 ? 1 : -1;
    if (++emitted % 2 == 0 && balance != 0) ++bad_prefixes;
  });
  std::ostringstream d;
  d << "mix block 2, weights 1/2 1/2: " << emitted << " records, "
    << bad_prefixes << " unbalanced even prefixes";
  Report(7, emitted == 20000 && bad_prefixes == 0, d.str());
}

void Criterion8() {
  const std::vector<QAItem> items = {{"1", "q1", {"Aldi"}},
                                     {"2", "q2", {"Paris"}},
                                     {"3", "q3", {"1994"}},
                                     {"4", "q4", {"Palme d'Or"}}};
  const std::vector<PredictionRecord> preds = {
      {"1", "Tesco"}, {"2", "London"}, {"3", "1994"}, {"4", "Cannes"}};
  const EMResult em = Score(preds, items, {"toy", "test", "m"});
  const std::vector<EMResult> table = {
      {"FreebaseQA", "test", "base+C4", ParseRational("28.33"), 0, 0},
      {"FreebaseQA", "test", "base+WikiKG", ParseRational("28.38"), 0, 0},
      {"WikiHop", "test", "XXL+C4", ParseRational("22.23"), 0, 0},
      {"WikiHop", "test", "XXL+WikiKG", ParseRational("27.65"), 0, 0}};
  const Rational base = ComputeDelta(table, "base+C4", "base+WikiKG").rows.at(0).delta;
  const Rational xxl = ComputeDelta(table, "XXL+C4", "XXL+WikiKG").rows.at(0).delta;
  std::ostringstream d;
  d << "em " << FormatDecimal(em.em) << " (want 25.00); delta EM "
    << FormatDecimal(base) << " (want 0.05) and " << FormatDecimal(xxl)
    << " (want 5.42)";
  Report(8, em.em == Rational(25) && base == Rational(5, 100) &&
                xxl == Rational(542, 100),
         d.str());
}

void Criterion9() {
  constexpr std::size_t kTriples = 1000000;
  const auto triples = testing::ToyGraph(kTriples, 99, kTriples / 2);
  MaskPolicy policy;
  std::vector<MaskedExample> masked;
  masked.reserve(kTriples);
  auto start = Clock::now();
  for (std::size_t i = 0; i < triples.size(); ++i) {
    RecordRng rng(policy.seed, kTripleStream, i);
    for (auto &ex : MaskTriple(triples[i], policy, rng).examples) {
      masked.push_back(std::move(ex));
    }
  }
  const double mask_rate = kTriples / Seconds(start);
  // JSON Lines serialization is measured on its own; it is output cost,
  // not masking.
  std::size_t bytes = 0;
  start = Clock::now();
  for (const auto &ex : masked) bytes += ToJson(ex).dump().size() + 1;
  const double json_rate = masked.size() / Seconds(start);

  constexpr std::size_t kSentences = 100000;
  std::size_t matched = 0;
  start = Clock::now();
  for (std::size_t i = 0; i < kSentences; ++i) {
    const Triple &t = triples[(i * 7919) % kTriples];
    const Triple &u = triples[(i * 104729) % kTriples];
    auto m = MatchRecord("In the archive, " + testing::TemplateSentence(t, true, i) +
                             " Later noted alongside " + u.object + " in 1994.",
                         {t, u});
    matched += m.matched();
  }
  const double match_rate = kSentences / Seconds(start);
  std::ostringstream d;
  d.setf(std::ios::fixed);
  d.precision(0);
  d << "throughput (single thread, 1M-triple graph): mask " << mask_rate
    << " triples/s (target 100000), match " << match_rate
    << " sentences/s (target 10000); JSON output " << json_rate
    << " records/s; " << masked.size() << " examples, " << matched
    << " matched records";
  Report(9, mask_rate >= 100000 && match_rate >= 10000 && bytes > 0, d.str(),
         /*soft=*/true);
}

}  // namespace
}  // namespace skillkit

int main() {
  using namespace skillkit;
  Criterion1();
  Criterion2();
  Criterion3();
  Criterion4();
  Criterion5();
  Criterion6();
  Criterion7();
  Criterion8();
  Criterion9();
  std::cout << (failures == 0 ? "ALL HARD CRITERIA PASSED" : "FAILURES: ")
            << (failures == 0 ? "" : std::to_string(failures)) << std::endl;
  return failures == 0 ? 0 : 1;
}
