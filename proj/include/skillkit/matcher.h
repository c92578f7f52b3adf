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

#ifndef SKILLKIT_MATCHER_H_
#define SKILLKIT_MATCHER_H_

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "skillkit/text.h"
#include "skillkit/triple.h"

namespace skillkit {

// Byte range [start, end) of an entity mention in the original sentence.
struct Span {
  std::size_t start = 0;
  std::size_t end = 0;

  std::string_view Surface(std::string_view sentence) const {
    return sentence.substr(start, end - start);
  }

  auto operator<=>(const Span &) const = default;
};

// Checks 0 <= start < end <= size and that both offsets fall on UTF-8
// character boundaries of `sentence`.
bool IsValidSpan(std::string_view sentence, const Span &span);

// Keeps a non-overlapping subset: candidates are visited by ascending start
// (longer first on ties) and accepted when they begin at or after the end of
// the last accepted span.
std::vector<Span> ResolveOverlaps(std::vector<Span> candidates);

// Strips one trailing " (...)" from a raw entity name, e.g.
// "John Doe (born 1990)" -> "John Doe". Nested parentheses inside the
// trailing group are not handled and yield nullopt.
std::optional<std::string_view> StripTrailingParenthetical(
    std::string_view entity);

// A sentence preprocessed once and reused across all entities of a record.
class PreparedSentence {
 public:
  explicit PreparedSentence(std::string_view sentence);

  std::string_view sentence() const { return sentence_; }
  const NormalizedText &normalized() const { return normalized_; }
  // Token ranges of the normalized text.
  std::span<const std::pair<std::size_t, std::size_t>> tokens() const {
    return tokens_;
  }

 private:
  std::string_view sentence_;
  NormalizedText normalized_;
  std::vector<std::pair<std::size_t, std::size_t>> tokens_;
};

// Spans of `entity` in the sentence: date-equal token windows, then exact
// token-boundary matches of the preprocessed name, and, only if both found
// nothing, exact matches of the name with its trailing parenthetical
// removed. Result is sorted and non-overlapping.
std::vector<Span> MatchEntity(std::string_view entity,
                              const PreparedSentence &sentence);

inline std::vector<Span> MatchEntity(std::string_view entity,
                                     std::string_view sentence) {
  return MatchEntity(entity, PreparedSentence(sentence));
}

struct EntityKey {
  std::size_t triple = 0;
  Role role = Role::kSubject;

  auto operator<=>(const EntityKey &) const = default;
};

// A sentence with its aligned triples and the spans found for each
// (triple, role). Only keys with at least one span are stored.
struct MatchedSentence {
  std::string sentence;
  std::vector<Triple> triples;
  std::map<EntityKey, std::vector<Span>> entity_spans;

  bool matched() const { return !entity_spans.empty(); }
};

MatchedSentence MatchRecord(std::string sentence, std::vector<Triple> triples);

}  // namespace skillkit

#endif  // SKILLKIT_MATCHER_H_
