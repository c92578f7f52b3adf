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

// Literal, unoptimized reference implementations used only by tests. They
// search the original text directly instead of the normalized text and its
// offset maps, so they share no search code with the library.

#ifndef SKILLKIT_TESTS_ORACLE_BRUTE_FORCE_H_
#define SKILLKIT_TESTS_ORACLE_BRUTE_FORCE_H_

#include <unicode/uchar.h>
#include <unicode/utf8.h>

#include <algorithm>
#include <string>
#include <string_view>
#include <vector>

#include "skillkit/date.h"
#include "skillkit/kg_store.h"
#include "skillkit/matcher.h"
#include "skillkit/text.h"

namespace skillkit::oracle {

struct CodePoint {
  std::size_t begin;
  std::size_t end;
  UChar32 value;
};

inline std::vector<CodePoint> Decode(std::string_view s) {
  std::vector<CodePoint> out;
  const auto *p = reinterpret_cast<const std::uint8_t *>(s.data());
  const auto n = static_cast<std::int32_t>(s.size());
  std::int32_t i = 0;
  while (i < n) {
    const std::int32_t b = i;
    UChar32 c;
    U8_NEXT(p, i, n, c);
    out.push_back({static_cast<std::size_t>(b), static_cast<std::size_t>(i), c});
  }
  return out;
}

inline bool IsPunct(UChar32 c) { return c >= 0 && u_ispunct(c); }
inline bool IsSpace(UChar32 c) { return c >= 0 && u_isUWhiteSpace(c); }
inline bool IsContent(UChar32 c) { return !IsPunct(c) && !IsSpace(c); }

// Substring [cps[i].begin, cps[j-1].end) is a candidate when it starts and
// ends with a content character and, looking outward past punctuation, meets
// whitespace or the string edge on both sides.
inline bool IsCandidate(const std::vector<CodePoint> &cps, std::size_t i,
                        std::size_t j) {
  if (!IsContent(cps[i].value) || !IsContent(cps[j - 1].value)) return false;
  std::size_t l = i;
  while (l > 0 && IsPunct(cps[l - 1].value)) --l;
  if (l > 0 && !IsSpace(cps[l - 1].value)) return false;
  std::size_t r = j;
  while (r < cps.size() && IsPunct(cps[r].value)) ++r;
  return r == cps.size() || IsSpace(cps[r].value);
}

struct Candidate {
  Span span;
  std::string normalized;
};

// Every candidate substring of a sentence with its Preprocess form.
inline std::vector<Candidate> Candidates(std::string_view sentence) {
  const auto cps = Decode(sentence);
  std::vector<Candidate> out;
  for (std::size_t i = 0; i < cps.size(); ++i) {
    for (std::size_t j = i + 1; j <= cps.size(); ++j) {
      if (!IsCandidate(cps, i, j)) continue;
      Span s{cps[i].begin, cps[j - 1].end};
      out.push_back({s, PreprocessText(s.Surface(sentence))});
    }
  }
  return out;
}

inline std::vector<Span> LeftmostLongest(std::vector<Span> spans) {
  std::vector<Span> out;
  while (!spans.empty()) {
    // Pick the candidate with the smallest start, longest on ties.
    auto best = std::min_element(spans.begin(), spans.end(),
                                 [](const Span &a, const Span &b) {
                                   if (a.start != b.start) return a.start < b.start;
                                   return a.end > b.end;
                                 });
    const Span chosen = *best;
    out.push_back(chosen);
    std::erase_if(spans, [&](const Span &s) { return s.start < chosen.end; });
  }
  return out;
}

// Entity name without a trailing " (...)" group, or empty when the raw name
// does not have the form "<name> (<text without parentheses>)".
inline std::string BracketBase(std::string_view e) {
  for (std::size_t k = 1; k + 2 < e.size(); ++k) {
    if (e.substr(k, 2) != " (" || e.back() != ')') continue;
    const std::string_view inner = e.substr(k + 2, e.size() - k - 3);
    if (inner.find('(') != std::string_view::npos ||
        inner.find(')') != std::string_view::npos) {
      continue;
    }
    std::string base(e.substr(0, k));
    while (!base.empty() && base.back() == ' ') base.pop_back();
    return base;
  }
  return {};
}

// MatchEntity by exhaustive substring enumeration.
inline std::vector<Span> MatchEntity(std::string_view entity,
                                     std::string_view sentence,
                                     const std::vector<Candidate> &cands) {
  std::vector<Span> spans;
  if (auto date = ParseDate(entity)) {
    std::vector<Span> dates, hits;
    for (const Candidate &c : cands) {
      auto d = ParseDate(c.span.Surface(sentence));
      if (!d) continue;
      dates.push_back(c.span);
      if (SameDate(*d, *date)) hits.push_back(c.span);
    }
    for (const Span &s : hits) {
      bool contained = false;
      for (const Span &o : dates) {
        if (o != s && o.start <= s.start && s.end <= o.end) contained = true;
      }
      if (!contained) spans.push_back(s);
    }
  }
  const std::string e = PreprocessText(entity);
  for (const Candidate &c : cands) {
    if (!e.empty() && c.normalized == e) spans.push_back(c.span);
  }
  if (spans.empty()) {
    const std::string base = PreprocessText(BracketBase(entity));
    for (const Candidate &c : cands) {
      if (!base.empty() && c.normalized == base) spans.push_back(c.span);
    }
  }
  return LeftmostLongest(std::move(spans));
}

inline std::vector<Span> MatchEntity(std::string_view entity,
                                     std::string_view sentence) {
  return MatchEntity(entity, sentence, Candidates(sentence));
}

// Token-boundary containment on preprocessed strings, by direct scanning.
inline bool Mentions(std::string_view text, std::string_view entity) {
  const std::string t = " " + PreprocessText(text) + " ";
  const std::string e = PreprocessText(entity);
  if (e.empty()) return false;
  return t.find(" " + e + " ") != std::string::npos;
}

// Knowledge-answerability by scanning every triple; no index.
inline bool Answerable(const std::vector<std::string> &answers,
                       std::string_view question,
                       std::span<const Triple> triples) {
  for (const std::string &a : answers) {
    const std::string key = PreprocessText(a);
    if (key.empty()) continue;
    for (const Triple &t : triples) {
      if (PreprocessText(t.subject) == key && Mentions(question, t.object)) return true;
      if (PreprocessText(t.object) == key && Mentions(question, t.subject)) return true;
    }
  }
  return false;
}

}  // namespace skillkit::oracle

#endif  // SKILLKIT_TESTS_ORACLE_BRUTE_FORCE_H_
