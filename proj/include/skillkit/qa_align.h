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

#ifndef SKILLKIT_QA_ALIGN_H_
#define SKILLKIT_QA_ALIGN_H_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "skillkit/kg_store.h"
#include "skillkit/rational.h"

namespace skillkit {

struct QAItem {
  std::string id;
  std::string question;
  std::vector<std::string> answers;
};

struct Witness {
  Triple triple;
  std::uint32_t ordinal = 0;
  Role answer_role = Role::kSubject;
  // The other entity as it appears in the question.
  std::string question_entity;
};

struct MatchVerdict {
  std::optional<Witness> witness;
  bool matched() const { return witness.has_value(); }
};

// An item is knowledge-answerable when some triple has a gold answer as its
// subject or object and the triple's other entity is mentioned in the
// question. Both tests compare Preprocess output; the mention must sit on
// token boundaries. The witness is the first hit by (answer index, triple
// ordinal, subject before object).
MatchVerdict IsMatched(const QAItem &item, const KnowledgeGraph &kg);

struct FilterReport {
  std::size_t total = 0;
  std::size_t matched = 0;
};

struct MatchedItem {
  std::size_t index;  // position in the input
  Witness witness;
};

// Order-preserving filter; `parallelism` workers share the items.
std::vector<MatchedItem> FilterDataset(const std::vector<QAItem> &items,
                                       const KnowledgeGraph &kg,
                                       FilterReport *report,
                                       std::size_t parallelism = 1);

// Size of the tail for `n` items: ceil(fraction * n). Throws
// std::invalid_argument unless 0 < fraction < 1.
std::size_t TailSize(std::size_t n, const Rational &fraction);

template <typename T>
struct HeadTail {
  std::vector<T> head;
  std::vector<T> tail;
};

template <typename T>
HeadTail<T> SplitTail(std::vector<T> items, const Rational &fraction) {
  const std::size_t tail = TailSize(items.size(), fraction);
  HeadTail<T> out;
  const auto cut = items.begin() + static_cast<std::ptrdiff_t>(items.size() - tail);
  out.head.assign(std::make_move_iterator(items.begin()),
                  std::make_move_iterator(cut));
  out.tail.assign(std::make_move_iterator(cut),
                  std::make_move_iterator(items.end()));
  return out;
}

}  // namespace skillkit

#endif  // SKILLKIT_QA_ALIGN_H_
