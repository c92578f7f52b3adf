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

#ifndef SKILLKIT_RECORDS_H_
#define SKILLKIT_RECORDS_H_

#include <cstddef>
#include <filesystem>
#include <fstream>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "skillkit/eval.h"
#include "skillkit/masker.h"
#include "skillkit/matcher.h"
#include "skillkit/qa_align.h"

namespace skillkit {

using Json = nlohmann::ordered_json;

// JSONL codecs. Parse* functions throw RecordError(line, reason) for records
// that are not valid JSON or do not have the expected shape.

// kelm.jsonl: {"sentence": s, "triples": [[s, r, o], ...]} with an optional
// "entity_spans" list as written by ToJson(MatchedSentence).
struct KelmRecord {
  Json raw;
  std::string sentence;
  std::vector<Triple> triples;
  bool has_spans = false;
  std::map<EntityKey, std::vector<Span>> entity_spans;
};
KelmRecord ParseKelmRecord(std::string_view line, std::size_t line_number);

Json SpansToJson(const MatchedSentence &m);
// `raw` plus an "entity_spans" field (replacing any existing one).
Json MatchedToJson(Json raw, const MatchedSentence &m);

Json ToJson(const MaskedExample &ex);

QAItem ParseQAItem(std::string_view line, std::size_t line_number,
                   Json *raw = nullptr);
Json ToJson(const Witness &w);

PredictionRecord ParsePrediction(std::string_view line,
                                 std::size_t line_number);

Json ToJson(const EMResult &r);
// Uses "matches"/"n" when present for an exact em, else the "em" number.
EMResult EMResultFromJson(const Json &j);

Json ToJson(const CorpusStats &s);

// Compact single-line serialization used for every JSONL record.
inline std::string Dump(const Json &j) {
  return j.dump(-1, ' ', false, Json::error_handler_t::strict);
}

// Writes to "<path>.tmp-<pid>" and renames onto `path` on Commit(). A writer
// destroyed without Commit() removes the temporary, so failed runs leave no
// partial output.
class AtomicFile {
 public:
  explicit AtomicFile(std::filesystem::path path);
  ~AtomicFile();
  AtomicFile(const AtomicFile &) = delete;
  AtomicFile &operator=(const AtomicFile &) = delete;

  std::ostream &stream() { return out_; }
  void Commit();

 private:
  std::filesystem::path path_;
  std::filesystem::path tmp_;
  std::ofstream out_;
  bool committed_ = false;
};

// Reads a whole file; throws std::runtime_error if it cannot be opened.
std::string ReadFile(const std::filesystem::path &path);

}  // namespace skillkit

#endif  // SKILLKIT_RECORDS_H_
