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

#include "skillkit/records.h"

#include <unistd.h>

#include <sstream>
#include <stdexcept>

namespace skillkit {
namespace {

Json ParseObject(std::string_view line, std::size_t line_number) {
  Json j;
  try {
    j = Json::parse(line);
  } catch (const Json::parse_error &e) {
    throw RecordError(line_number, std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw RecordError(line_number, "expected a JSON object");
  return j;
}

std::string StringField(const Json &j, const char *name,
                        std::size_t line_number) {
  auto it = j.find(name);
  if (it == j.end() || !it->is_string()) {
    throw RecordError(line_number,
                      std::string("missing or non-string field '") + name + "'");
  }
  return it->get<std::string>();
}

Json TripleJson(const Triple &t) {
  return Json::array({t.subject, t.relation, t.object});
}

}  // namespace

KelmRecord ParseKelmRecord(std::string_view line, std::size_t line_number) {
  KelmRecord rec;
  rec.raw = ParseObject(line, line_number);
  rec.sentence = StringField(rec.raw, "sentence", line_number);
  auto triples = rec.raw.find("triples");
  if (triples == rec.raw.end() || !triples->is_array()) {
    throw RecordError(line_number, "missing or non-array field 'triples'");
  }
  for (const Json &t : *triples) {
    if (!t.is_array() || t.size() != 3 || !t[0].is_string() ||
        !t[1].is_string() || !t[2].is_string()) {
      throw RecordError(line_number,
                        "each triple must be an array of 3 strings");
    }
    Triple triple{t[0].get<std::string>(), t[1].get<std::string>(),
                  t[2].get<std::string>()};
    if (auto problem = ValidateTriple(triple); !problem.empty()) {
      throw RecordError(line_number, "triple " +
                                         std::to_string(rec.triples.size()) +
                                         ": " + problem);
    }
    rec.triples.push_back(std::move(triple));
  }
  auto spans = rec.raw.find("entity_spans");
  if (spans == rec.raw.end()) return rec;
  rec.has_spans = true;
  try {
    for (const Json &entry : spans->get_ref<const Json::array_t &>()) {
      const auto triple = entry.at("triple").get<std::size_t>();
      const Role role = ParseRole(entry.at("role").get<std::string>());
      if (triple >= rec.triples.size()) {
        throw std::invalid_argument("triple index out of range");
      }
      std::vector<Span> list;
      for (const Json &s : entry.at("spans")) {
        Span span{s.at(0).get<std::size_t>(), s.at(1).get<std::size_t>()};
        if (s.size() != 2 || !IsValidSpan(rec.sentence, span)) {
          throw std::invalid_argument("invalid span");
        }
        list.push_back(span);
      }
      if (list.empty()) continue;
      if (ResolveOverlaps(list) != list) {
        throw std::invalid_argument("spans must be sorted and non-overlapping");
      }
      if (!rec.entity_spans.emplace(EntityKey{triple, role}, std::move(list))
               .second) {
        throw std::invalid_argument("duplicate (triple, role) entry");
      }
    }
  } catch (const RecordError &) {
    throw;
  } catch (const std::exception &e) {
    throw RecordError(line_number,
                      std::string("bad entity_spans: ") + e.what());
  }
  return rec;
}

Json SpansToJson(const MatchedSentence &m) {
  Json out = Json::array();
  for (const auto &[key, spans] : m.entity_spans) {
    Json list = Json::array();
    for (const Span &s : spans) list.push_back(Json::array({s.start, s.end}));
    out.push_back(Json{{"triple", key.triple},
                       {"role", RoleName(key.role)},
                       {"spans", std::move(list)}});
  }
  return out;
}

Json MatchedToJson(Json raw, const MatchedSentence &m) {
  raw.erase("entity_spans");
  raw["entity_spans"] = SpansToJson(m);
  return raw;
}

Json ToJson(const MaskedExample &ex) {
  Json j;
  j["input"] = ex.input;
  j["target"] = ex.target;
  j["source"] = SourceName(ex.source);
  if (ex.provenance) {
    j["triple"] = TripleJson(ex.provenance->triple);
    j["masked_role"] = RoleName(ex.provenance->role);
  } else {
    j["triple"] = nullptr;
    j["masked_role"] = nullptr;
  }
  return j;
}

QAItem ParseQAItem(std::string_view line, std::size_t line_number, Json *raw) {
  Json j = ParseObject(line, line_number);
  QAItem item;
  item.id = StringField(j, "id", line_number);
  item.question = StringField(j, "question", line_number);
  auto answers = j.find("answers");
  if (answers == j.end() || !answers->is_array() || answers->empty()) {
    throw RecordError(line_number, "'answers' must be a non-empty array");
  }
  for (const Json &a : *answers) {
    if (!a.is_string()) throw RecordError(line_number, "non-string answer");
    item.answers.push_back(a.get<std::string>());
  }
  if (item.question.empty()) throw RecordError(line_number, "empty question");
  if (raw != nullptr) *raw = std::move(j);
  return item;
}

Json ToJson(const Witness &w) {
  Json j;
  j["triple"] = TripleJson(w.triple);
  j["answer_role"] = RoleName(w.answer_role);
  j["question_entity"] = w.question_entity;
  return j;
}

PredictionRecord ParsePrediction(std::string_view line,
                                 std::size_t line_number) {
  Json j = ParseObject(line, line_number);
  return {StringField(j, "id", line_number),
          StringField(j, "prediction", line_number)};
}

Json ToJson(const EMResult &r) {
  Json j;
  j["task"] = r.task;
  j["split"] = r.split;
  j["model"] = r.model;
  // Rounded for readability; matches/n carry the exact value.
  j["em"] = std::stod(FormatDecimal(r.em, 2, 6));
  j["matches"] = r.matches;
  j["n"] = r.n;
  return j;
}

EMResult EMResultFromJson(const Json &j) {
  EMResult r;
  r.task = j.at("task").get<std::string>();
  r.split = j.at("split").get<std::string>();
  r.model = j.at("model").get<std::string>();
  if (j.contains("matches") && j.contains("n")) {
    r.matches = j.at("matches").get<std::size_t>();
    r.n = j.at("n").get<std::size_t>();
    if (r.n == 0 || r.matches > r.n) {
      throw std::invalid_argument("EM result needs 0 <= matches <= n, n > 0");
    }
    r.em = Rational(static_cast<std::int64_t>(r.matches) * 100,
                    static_cast<std::int64_t>(r.n));
  } else {
    r.em = RationalFromDouble(j.at("em").get<double>());
    if (r.em < 0 || r.em > 100) {
      throw std::invalid_argument("EM must lie in [0, 100]");
    }
  }
  return r;
}

Json ToJson(const CorpusStats &s) {
  Json j;
  j["triple_count"] = s.triple_count;
  j["distinct_entities"] = s.distinct_entities;
  j["distinct_relations"] = s.distinct_relations;
  return j;
}

AtomicFile::AtomicFile(std::filesystem::path path)
    : path_(std::move(path)),
      tmp_(path_.string() + ".tmp-" + std::to_string(::getpid())),
      out_(tmp_, std::ios::binary | std::ios::trunc) {
  if (!out_) {
    throw std::runtime_error("cannot open '" + tmp_.string() + "' for writing");
  }
}

AtomicFile::~AtomicFile() {
  if (committed_) return;
  out_.close();
  std::error_code ec;
  std::filesystem::remove(tmp_, ec);
}

void AtomicFile::Commit() {
  out_.flush();
  if (!out_) throw std::runtime_error("write to '" + tmp_.string() + "' failed");
  out_.close();
  std::filesystem::rename(tmp_, path_);
  committed_ = true;
}

std::string ReadFile(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace skillkit
