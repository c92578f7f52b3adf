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

#ifndef SKILLKIT_KG_STORE_H_
#define SKILLKIT_KG_STORE_H_

#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "skillkit/triple.h"

namespace skillkit {

// Streaming reader for TSV triple dumps: one `subject\trelation\tobject`
// record per LF-terminated line.
//
// Malformed lines raise RecordError in strict mode and are skipped and
// counted otherwise. Invalid UTF-8 always raises FatalDataError.
class TripleReader {
 public:
  TripleReader(std::istream &in, bool strict) : in_(in), strict_(strict) {}

  std::optional<Triple> Next();

  std::size_t lines() const { return lines_; }
  std::size_t skipped() const { return skipped_; }
  // First few skip reasons, for diagnostics.
  const std::vector<std::string> &errors() const { return errors_; }

 private:
  std::istream &in_;
  bool strict_;
  std::string line_;
  std::size_t lines_ = 0;
  std::size_t skipped_ = 0;
  std::vector<std::string> errors_;
};

struct ParseSummary {
  std::size_t lines = 0;
  std::size_t skipped = 0;
};

std::vector<Triple> ParseTriples(std::istream &in, bool strict,
                                 ParseSummary *summary = nullptr);

// Parses one record. Throws RecordError (tagged with `line`) when the record
// does not have exactly three valid fields.
Triple ParseTripleLine(std::string_view line, std::size_t line_number);

void WriteTriple(std::ostream &out, const Triple &t);
std::string SerializeTriples(std::span<const Triple> triples);

struct Posting {
  std::uint32_t ordinal;
  Role role;

  auto operator<=>(const Posting &) const = default;
};

struct CorpusStats {
  std::size_t triple_count = 0;
  std::size_t distinct_entities = 0;
  std::size_t distinct_relations = 0;

  bool operator==(const CorpusStats &) const = default;
};

// Immutable triple store indexed by normalized entity name. Keys are the
// matcher's Preprocess output, so lookups are case- and
// punctuation-insensitive. Safe for concurrent readers once built.
class KnowledgeGraph {
 public:
  KnowledgeGraph() = default;

  static KnowledgeGraph Build(std::vector<Triple> triples);

  std::span<const Triple> triples() const { return triples_; }
  const Triple &triple(std::uint32_t ordinal) const {
    return triples_[ordinal];
  }
  std::size_t size() const { return triples_.size(); }

  // Postings under Preprocess(name), ordered by (ordinal, role). Unknown and
  // empty-after-normalization names yield an empty span.
  std::span<const Posting> Lookup(std::string_view name) const;

  // Same as Lookup, but for an already-normalized key.
  std::span<const Posting> LookupNormalized(std::string_view key) const;

  // Normalized name of the entity at (ordinal, role).
  const std::string &NormalizedEntity(std::uint32_t ordinal, Role role) const;

  // Surface forms opposite `entity` in any triple, optionally restricted to
  // relations whose normalized name equals that of `relation`.
  std::set<std::string> Neighbors(
      std::string_view entity,
      std::optional<std::string_view> relation = std::nullopt) const;

  CorpusStats Stats() const;

  // Normalized keys in first-appearance order.
  std::span<const std::string> keys() const { return keys_; }

 private:
  std::vector<Triple> triples_;
  // Per triple: key ids for subject and object.
  std::vector<std::uint32_t> subject_key_;
  std::vector<std::uint32_t> object_key_;
  std::vector<std::string> keys_;
  std::vector<std::vector<Posting>> postings_;
  std::unordered_map<std::string, std::uint32_t> key_ids_;
  std::size_t distinct_relations_ = 0;
};

// Removes exact duplicate triples, keeping first occurrences in order.
std::vector<Triple> Deduplicate(std::vector<Triple> triples);

}  // namespace skillkit

#endif  // SKILLKIT_KG_STORE_H_
