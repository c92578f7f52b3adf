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

#include "skillkit/qa_align.h"

#include <optional>
#include <stdexcept>

#include "skillkit/parallel.h"
#include "skillkit/text.h"

namespace skillkit {

MatchVerdict IsMatched(const QAItem &item, const KnowledgeGraph &kg) {
  if (kg.size() == 0) return {};
  const NormalizedText question = Preprocess(item.question);
  for (const std::string &answer : item.answers) {
    for (const Posting &p : kg.Lookup(answer)) {
      const std::string &other = kg.NormalizedEntity(p.ordinal, Opposite(p.role));
      const auto hits = FindTokenOccurrences(question.text, other);
      if (hits.empty()) continue;
      const auto [begin, end] =
          question.SourceRange(hits.front().first, hits.front().second);
      return {Witness{kg.triple(p.ordinal), p.ordinal, p.role,
                      item.question.substr(begin, end - begin)}};
    }
  }
  return {};
}

std::vector<MatchedItem> FilterDataset(const std::vector<QAItem> &items,
                                       const KnowledgeGraph &kg,
                                       FilterReport *report,
                                       std::size_t parallelism) {
  std::vector<MatchVerdict> verdicts(items.size());
  ParallelFor(items.size(), parallelism,
              [&](std::size_t i) { verdicts[i] = IsMatched(items[i], kg); });
  std::vector<MatchedItem> out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (verdicts[i].matched()) {
      out.push_back({i, std::move(*verdicts[i].witness)});
    }
  }
  if (report != nullptr) {
    report->total = items.size();
    report->matched = out.size();
  }
  return out;
}

std::size_t TailSize(std::size_t n, const Rational &fraction) {
  if (fraction <= 0 || fraction >= 1) {
    throw std::invalid_argument("split fraction must be in (0, 1), got " +
                                FormatDecimal(fraction));
  }
  const auto num = static_cast<unsigned __int128>(fraction.numerator()) * n;
  const auto den = static_cast<unsigned __int128>(fraction.denominator());
  return static_cast<std::size_t>((num + den - 1) / den);
}

}  // namespace skillkit
