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

#ifndef SKILLKIT_EVAL_H_
#define SKILLKIT_EVAL_H_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "skillkit/qa_align.h"
#include "skillkit/rational.h"

namespace skillkit {

// Lowercase, drop punctuation, drop the articles a/an/the, fold whitespace.
std::string NormalizeAnswer(std::string_view text);

enum class EmMode { kNormalized, kStrict };

// True when the prediction equals some gold answer after normalization (or
// byte-for-byte in strict mode). Throws std::domain_error for empty golds.
bool ExactMatch(std::string_view prediction,
                std::span<const std::string> golds,
                EmMode mode = EmMode::kNormalized);

struct PredictionRecord {
  std::string id;
  std::string prediction;
};

struct EMResult {
  std::string task;
  std::string split;
  std::string model;
  Rational em;  // percent
  std::size_t matches = 0;
  std::size_t n = 0;
};

class ScoreError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ScoreMeta {
  std::string task;
  std::string split;
  std::string model;
};

// EM over all items; items without a prediction count as misses and are
// listed in `missing`. Duplicate or unknown prediction ids, and an empty item
// set, throw ScoreError.
EMResult Score(std::span<const PredictionRecord> preds,
               std::span<const QAItem> items, const ScoreMeta &meta,
               EmMode mode = EmMode::kNormalized,
               std::vector<std::string> *missing = nullptr);

struct DeltaRow {
  std::string task;
  std::string split;
  Rational delta;
};

struct DeltaReport {
  std::vector<DeltaRow> rows;  // baseline order of first appearance
  Rational average;            // unweighted mean of rows
};

// treatment.em - baseline.em per (task, split). Throws ScoreError naming
// the first (task, split) present for one model but not the other, or
// reported twice for the same model.
DeltaReport ComputeDelta(std::span<const EMResult> results,
                         std::string_view baseline,
                         std::string_view treatment);

// "task,split,delta_em" header, one row per pair, then "__average__,all,x".
std::string DeltaCsv(const DeltaReport &report);

}  // namespace skillkit

#endif  // SKILLKIT_EVAL_H_
