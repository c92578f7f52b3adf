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

#include "skillkit/eval.h"

#include <map>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "skillkit/text.h"

namespace skillkit {
namespace {

bool IsArticle(std::string_view token) {
  return token == "a" || token == "an" || token == "the";
}

std::string CsvField(std::string_view s) {
  if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string NormalizeAnswer(std::string_view text) {
  const std::string pre = PreprocessText(text);
  std::string out;
  out.reserve(pre.size());
  for (const auto &[begin, end] : TokenRanges(pre)) {
    const std::string_view token(pre.data() + begin, end - begin);
    if (IsArticle(token)) continue;
    if (!out.empty()) out += ' ';
    out += token;
  }
  return out;
}

bool ExactMatch(std::string_view prediction,
                std::span<const std::string> golds, EmMode mode) {
  if (golds.empty()) throw std::domain_error("exact_match: no gold answers");
  if (mode == EmMode::kStrict) {
    for (const std::string &g : golds) {
      if (g == prediction) return true;
    }
    return false;
  }
  const std::string p = NormalizeAnswer(prediction);
  for (const std::string &g : golds) {
    if (NormalizeAnswer(g) == p) return true;
  }
  return false;
}

EMResult Score(std::span<const PredictionRecord> preds,
               std::span<const QAItem> items, const ScoreMeta &meta,
               EmMode mode, std::vector<std::string> *missing) {
  if (items.empty()) throw ScoreError("score: no items");
  std::unordered_set<std::string_view> item_ids;
  for (const QAItem &item : items) {
    if (!item_ids.insert(item.id).second) {
      throw ScoreError("score: duplicate item id '" + item.id + "'");
    }
  }
  std::unordered_map<std::string_view, std::string_view> by_id;
  for (const PredictionRecord &p : preds) {
    if (!item_ids.contains(p.id)) {
      throw ScoreError("score: prediction for unknown id '" + p.id + "'");
    }
    if (!by_id.emplace(p.id, p.prediction).second) {
      throw ScoreError("score: duplicate prediction id '" + p.id + "'");
    }
  }
  EMResult result{meta.task, meta.split, meta.model, {}, 0, items.size()};
  for (const QAItem &item : items) {
    auto it = by_id.find(item.id);
    if (it == by_id.end()) {
      if (missing != nullptr) missing->push_back(item.id);
      continue;
    }
    if (ExactMatch(it->second, item.answers, mode)) ++result.matches;
  }
  result.em = Rational(static_cast<std::int64_t>(result.matches) * 100,
                       static_cast<std::int64_t>(result.n));
  return result;
}

DeltaReport ComputeDelta(std::span<const EMResult> results,
                         std::string_view baseline,
                         std::string_view treatment) {
  using Key = std::pair<std::string, std::string>;
  std::vector<Key> order;
  std::map<Key, Rational> base;
  std::map<Key, Rational> treat;
  for (const EMResult &r : results) {
    const bool is_base = r.model == baseline;
    const bool is_treat = r.model == treatment;
    if (!is_base && !is_treat) continue;
    Key key{r.task, r.split};
    for (auto [table, active] : {std::pair{&base, is_base}, {&treat, is_treat}}) {
      if (!active) continue;
      if (!table->emplace(key, r.em).second) {
        throw ScoreError("delta: duplicate result for model '" + r.model +
                         "', task '" + r.task + "', split '" + r.split + "'");
      }
    }
    if (is_base) order.push_back(key);
  }
  if (base.empty()) {
    throw ScoreError("delta: no results for baseline model '" +
                     std::string(baseline) + "'");
  }
  for (const auto &[key, em] : treat) {
    if (!base.contains(key)) {
      throw ScoreError("delta: baseline '" + std::string(baseline) +
                       "' has no result for task '" + key.first +
                       "', split '" + key.second + "'");
    }
  }
  DeltaReport report;
  Rational sum;
  for (const Key &key : order) {
    auto it = treat.find(key);
    if (it == treat.end()) {
      throw ScoreError("delta: treatment '" + std::string(treatment) +
                       "' has no result for task '" + key.first +
                       "', split '" + key.second + "'");
    }
    const Rational d = it->second - base.at(key);
    report.rows.push_back({key.first, key.second, d});
    sum += d;
  }
  report.average = sum / static_cast<std::int64_t>(report.rows.size());
  return report;
}

std::string DeltaCsv(const DeltaReport &report) {
  std::string out = "task,split,delta_em\n";
  for (const DeltaRow &row : report.rows) {
    out += CsvField(row.task) + "," + CsvField(row.split) + "," +
           FormatDecimal(row.delta) + "\n";
  }
  out += "__average__,all," + FormatDecimal(report.average) + "\n";
  return out;
}

}  // namespace skillkit
