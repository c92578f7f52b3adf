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


// Single-threaded throughput numbers on a synthetic graph.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "skillkit/kg_store.h"
#include "skillkit/masker.h"
#include "skillkit/matcher.h"
#include "skillkit/qa_align.h"
#include "skillkit/records.h"

namespace {

using Clock = std::chrono::steady_clock;
using skillkit::Triple;

double Seconds(Clock::time_point since) {
  return std::chrono::duration<double>(Clock::now() - since).count();
}

std::vector<Triple> SyntheticGraph(std::size_t n, std::uint64_t seed) {
  static const char *kRelations[] = {"director", "cast member", "award received",
                                     "located in", "author"};
  std::mt19937_64 rng(seed);
  std::vector<Triple> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back({"Entity" + std::to_string(rng() % (n / 2 + 1)) + " Alpha",
                   kRelations[rng() % 5],
                   "Thing" + std::to_string(rng() % (n / 2 + 1)) + " Beta"});
  }
  return out;
}

void Line(const std::string &what, double count, double secs,
          const char *unit) {
  std::cout << what << ": " << static_cast<std::uint64_t>(count / secs) << " "
            << unit << "/s (" << count << " in " << secs << " s)\n";
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"skillkit throughput benchmark"};
  std::size_t triples = 1000000;
  std::size_t sentences = 200000;
  std::size_t questions = 100000;
  app.add_option("--triples", triples)->capture_default_str();
  app.add_option("--sentences", sentences)->capture_default_str();
  app.add_option("--questions", questions)->capture_default_str();
  CLI11_PARSE(app, argc, argv);

  auto start = Clock::now();
  const auto graph = SyntheticGraph(triples, 1);
  Line("generate graph", triples, Seconds(start), "triples");

  start = Clock::now();
  const auto kg = skillkit::KnowledgeGraph::Build(graph);
  Line("build index", triples, Seconds(start), "triples");

  skillkit::MaskPolicy policy;
  std::vector<skillkit::MaskedExample> masked;
  masked.reserve(triples);
  start = Clock::now();
  for (std::size_t i = 0; i < graph.size(); ++i) {
    skillkit::RecordRng rng(policy.seed, skillkit::kTripleStream, i);
    for (auto &ex : skillkit::MaskTriple(graph[i], policy, rng).examples) {
      masked.push_back(std::move(ex));
    }
  }
  Line("mask triples", triples, Seconds(start), "triples");

  std::size_t bytes = 0;
  start = Clock::now();
  for (const auto &ex : masked) bytes += skillkit::ToJson(ex).dump().size() + 1;
  Line("serialize masked JSON", masked.size(), Seconds(start), "records");

  std::size_t matched = 0;
  start = Clock::now();
  for (std::size_t i = 0; i < sentences; ++i) {
    const Triple &t = graph[(i * 7919) % graph.size()];
    const Triple &u = graph[(i * 104729) % graph.size()];
    const std::string s = "In the archive, " + t.subject + " is connected to " +
                          t.object + ". Later noted alongside " + u.object +
                          " on 23 May 1994.";
    matched += skillkit::MatchRecord(s, {t, u}).matched();
  }
  Line("match sentences (2 triples each)", sentences, Seconds(start),
       "sentences");

  std::vector<skillkit::QAItem> items;
  items.reserve(questions);
  for (std::size_t i = 0; i < questions; ++i) {
    const Triple &t = graph[(i * 31337) % graph.size()];
    items.push_back({std::to_string(i),
                     "What is the " + t.relation + " of " + t.subject + "?",
                     {i % 2 ? t.object : "Nobody"}});
  }
  skillkit::FilterReport report;
  start = Clock::now();
  skillkit::FilterDataset(items, kg, &report, 1);
  Line("filter QA items", questions, Seconds(start), "items");

  std::cout << "checksum " << bytes + matched + report.matched << "\n";
  return 0;
}
