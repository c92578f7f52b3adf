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

#include "skillkit/kg_store.h"

#include <algorithm>
#include <sstream>
#include <unordered_set>

#include "skillkit/text.h"

namespace skillkit {
namespace {

constexpr std::size_t kMaxRecordedErrors = 16;

struct TripleHash {
  std::size_t operator()(const Triple &t) const {
    std::hash<std::string> h;
    std::size_t seed = h(t.subject);
    seed ^= h(t.relation) + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
    seed ^= h(t.object) + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
    return seed;
  }
};

}  // namespace

Triple ParseTripleLine(std::string_view line, std::size_t line_number) {
  const std::size_t first = line.find('\t');
  const std::size_t second =
      first == std::string_view::npos ? first : line.find('\t', first + 1);
  if (second == std::string_view::npos ||
      line.find('\t', second + 1) != std::string_view::npos) {
    const auto fields =
        static_cast<std::size_t>(std::count(line.begin(), line.end(), '\t')) +
        1;
    throw RecordError(line_number, "expected 3 tab-separated fields, got " +
                                       std::to_string(fields));
  }
  Triple t{std::string(line.substr(0, first)),
           std::string(line.substr(first + 1, second - first - 1)),
           std::string(line.substr(second + 1))};
  if (auto problem = ValidateTriple(t); !problem.empty()) {
    throw RecordError(line_number, problem);
  }
  return t;
}

std::optional<Triple> TripleReader::Next() {
  while (std::getline(in_, line_)) {
    ++lines_;
    if (!line_.empty() && line_.back() == '\r') line_.pop_back();
    if (auto bad = FindInvalidUtf8(line_)) {
      throw FatalDataError("line " + std::to_string(lines_) +
                           ": invalid UTF-8 at byte " + std::to_string(*bad));
    }
    try {
      return ParseTripleLine(line_, lines_);
    } catch (const RecordError &e) {
      if (strict_) throw;
      ++skipped_;
      if (errors_.size() < kMaxRecordedErrors) errors_.emplace_back(e.what());
    }
  }
  return std::nullopt;
}

std::vector<Triple> ParseTriples(std::istream &in, bool strict,
                                 ParseSummary *summary) {
  TripleReader reader(in, strict);
  std::vector<Triple> out;
  while (auto t = reader.Next()) out.push_back(std::move(*t));
  if (summary != nullptr) {
    summary->lines = reader.lines();
    summary->skipped = reader.skipped();
  }
  return out;
}

void WriteTriple(std::ostream &out, const Triple &t) {
  out << t.subject << '\t' << t.relation << '\t' << t.object << '\n';
}

std::string SerializeTriples(std::span<const Triple> triples) {
  std::ostringstream out;
  for (const Triple &t : triples) WriteTriple(out, t);
  return out.str();
}

KnowledgeGraph KnowledgeGraph::Build(std::vector<Triple> triples) {
  KnowledgeGraph kg;
  kg.triples_ = std::move(triples);
  const std::size_t n = kg.triples_.size();
  kg.subject_key_.reserve(n);
  kg.object_key_.reserve(n);

  auto intern = [&kg](std::string key) -> std::uint32_t {
    auto [it, inserted] = kg.key_ids_.try_emplace(
        std::move(key), static_cast<std::uint32_t>(kg.keys_.size()));
    if (inserted) {
      kg.keys_.push_back(it->first);
      kg.postings_.emplace_back();
    }
    return it->second;
  };

  std::unordered_set<std::string> relations;
  for (std::size_t i = 0; i < n; ++i) {
    const Triple &t = kg.triples_[i];
    const auto ordinal = static_cast<std::uint32_t>(i);
    const std::uint32_t s = intern(PreprocessText(t.subject));
    const std::uint32_t o = intern(PreprocessText(t.object));
    kg.subject_key_.push_back(s);
    kg.object_key_.push_back(o);
    // Ordinals only grow, so each posting list stays sorted by
    // (ordinal, role) without a final sort.
    kg.postings_[s].push_back({ordinal, Role::kSubject});
    kg.postings_[o].push_back({ordinal, Role::kObject});
    relations.insert(PreprocessText(t.relation));
  }
  kg.distinct_relations_ = relations.size();
  return kg;
}

std::span<const Posting> KnowledgeGraph::LookupNormalized(
    std::string_view key) const {
  if (key.empty()) return {};
  auto it = key_ids_.find(std::string(key));
  if (it == key_ids_.end()) return {};
  return postings_[it->second];
}

std::span<const Posting> KnowledgeGraph::Lookup(std::string_view name) const {
  return LookupNormalized(PreprocessText(name));
}

const std::string &KnowledgeGraph::NormalizedEntity(std::uint32_t ordinal,
                                                    Role role) const {
  return keys_[role == Role::kSubject ? subject_key_[ordinal]
                                      : object_key_[ordinal]];
}

std::set<std::string> KnowledgeGraph::Neighbors(
    std::string_view entity, std::optional<std::string_view> relation) const {
  std::optional<std::string> relation_key;
  if (relation) relation_key = PreprocessText(*relation);
  std::set<std::string> out;
  for (const Posting &p : Lookup(entity)) {
    const Triple &t = triples_[p.ordinal];
    if (relation_key && PreprocessText(t.relation) != *relation_key) continue;
    out.insert(t.entity(Opposite(p.role)));
  }
  return out;
}

CorpusStats KnowledgeGraph::Stats() const {
  return {triples_.size(), keys_.size(), distinct_relations_};
}

std::vector<Triple> Deduplicate(std::vector<Triple> triples) {
  std::unordered_set<Triple, TripleHash> seen;
  std::vector<Triple> out;
  out.reserve(triples.size());
  for (Triple &t : triples) {
    if (seen.insert(t).second) out.push_back(std::move(t));
  }
  return out;
}

}  // namespace skillkit
