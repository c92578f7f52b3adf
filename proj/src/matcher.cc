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

#include "skillkit/matcher.h"

#include <algorithm>

#include "skillkit/date.h"

namespace skillkit {
namespace {

bool IsContinuationByte(char c) {
  return (static_cast<unsigned char>(c) & 0xC0) == 0x80;
}

// Longest date expression is "Month D, YYYY": three normalized tokens.
constexpr std::size_t kMaxDateTokens = 3;

void AddDateSpans(const CalendarDate &date, const PreparedSentence &sentence,
                  std::vector<Span> &out) {
  const auto &norm = sentence.normalized();
  const auto tokens = sentence.tokens();
  struct Window {
    std::size_t first, last;  // token indices, inclusive
  };
  // Every window that reads as a date; only those that match are emitted,
  // and only when no wider date expression contains them.
  std::vector<Window> windows;
  std::vector<bool> matches;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    for (std::size_t len = 1; len <= kMaxDateTokens && i + len <= tokens.size();
         ++len) {
      const auto [begin, end] =
          norm.SourceRange(tokens[i].first, tokens[i + len - 1].second);
      const auto parsed =
          ParseDate(sentence.sentence().substr(begin, end - begin));
      if (!parsed) continue;
      windows.push_back({i, i + len - 1});
      matches.push_back(SameDate(*parsed, date));
    }
  }
  for (std::size_t k = 0; k < windows.size(); ++k) {
    if (!matches[k]) continue;
    const Window &w = windows[k];
    const bool dominated = std::any_of(
        windows.begin(), windows.end(), [&w](const Window &o) {
          return o.first <= w.first && w.last <= o.last &&
                 (o.first != w.first || o.last != w.last);
        });
    if (dominated) continue;
    const auto [begin, end] =
        norm.SourceRange(tokens[w.first].first, tokens[w.last].second);
    out.push_back({begin, end});
  }
}

void AddExactSpans(std::string_view normalized_entity,
                   const PreparedSentence &sentence, std::vector<Span> &out) {
  const auto &norm = sentence.normalized();
  for (const auto &[begin, end] :
       FindTokenOccurrences(norm.text, normalized_entity)) {
    const auto [s, e] = norm.SourceRange(begin, end);
    out.push_back({s, e});
  }
}

}  // namespace

bool IsValidSpan(std::string_view sentence, const Span &span) {
  if (span.start >= span.end || span.end > sentence.size()) return false;
  if (IsContinuationByte(sentence[span.start])) return false;
  return span.end == sentence.size() || !IsContinuationByte(sentence[span.end]);
}

std::vector<Span> ResolveOverlaps(std::vector<Span> candidates) {
  std::sort(candidates.begin(), candidates.end(),
            [](const Span &a, const Span &b) {
              return a.start != b.start ? a.start < b.start : a.end > b.end;
            });
  std::vector<Span> out;
  for (const Span &c : candidates) {
    if (out.empty() || c.start >= out.back().end) out.push_back(c);
  }
  return out;
}

std::optional<std::string_view> StripTrailingParenthetical(
    std::string_view entity) {
  if (entity.empty() || entity.back() != ')') return std::nullopt;
  const std::size_t open = entity.rfind('(');
  if (open == std::string_view::npos || open == 0 || entity[open - 1] != ' ') {
    return std::nullopt;
  }
  const std::string_view inner =
      entity.substr(open + 1, entity.size() - open - 2);
  if (inner.find_first_of("()") != std::string_view::npos) return std::nullopt;
  std::string_view name = entity.substr(0, open);
  while (!name.empty() && name.back() == ' ') name.remove_suffix(1);
  if (name.empty()) return std::nullopt;
  return name;
}

PreparedSentence::PreparedSentence(std::string_view sentence)
    : sentence_(sentence),
      normalized_(Preprocess(sentence)),
      tokens_(TokenRanges(normalized_.text)) {}

std::vector<Span> MatchEntity(std::string_view entity,
                              const PreparedSentence &sentence) {
  std::vector<Span> candidates;
  if (auto date = ParseDate(entity)) AddDateSpans(*date, sentence, candidates);
  AddExactSpans(PreprocessText(entity), sentence, candidates);
  if (candidates.empty()) {
    if (auto stripped = StripTrailingParenthetical(entity)) {
      AddExactSpans(PreprocessText(*stripped), sentence, candidates);
    }
  }
  return ResolveOverlaps(std::move(candidates));
}

MatchedSentence MatchRecord(std::string sentence, std::vector<Triple> triples) {
  MatchedSentence out{std::move(sentence), std::move(triples), {}};
  const PreparedSentence prepared(out.sentence);
  for (std::size_t i = 0; i < out.triples.size(); ++i) {
    for (Role role : {Role::kSubject, Role::kObject}) {
      auto spans = MatchEntity(out.triples[i].entity(role), prepared);
      if (!spans.empty()) out.entity_spans[{i, role}] = std::move(spans);
    }
  }
  return out;
}

}  // namespace skillkit
