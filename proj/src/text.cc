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

#include "skillkit/text.h"

#include <unicode/uchar.h>
#include <unicode/utf8.h>

namespace skillkit {
namespace {

constexpr UChar32 kReplacement = 0xFFFD;

// Shared core of Preprocess / PreprocessText. `Sink` receives each output
// byte together with the source range of the character it came from.
template <typename Sink>
void Normalize(std::string_view text, Sink &&emit) {
  const auto *s = reinterpret_cast<const std::uint8_t *>(text.data());
  const auto length = static_cast<std::int32_t>(text.size());
  bool have_content = false;
  bool pending_space = false;
  std::size_t space_at = 0;
  std::int32_t i = 0;
  while (i < length) {
    const std::int32_t start = i;
    UChar32 c;
    U8_NEXT(s, i, length, c);
    if (c < 0) c = kReplacement;
    if (u_isUWhiteSpace(c)) {
      if (have_content && !pending_space) {
        pending_space = true;
        space_at = static_cast<std::size_t>(start);
      }
      continue;
    }
    if (u_ispunct(c)) continue;
    if (pending_space) {
      emit(' ', space_at, space_at + 1);
      pending_space = false;
    }
    have_content = true;
    char buf[U8_MAX_LENGTH];
    std::int32_t n = 0;
    U8_APPEND_UNSAFE(buf, n, u_tolower(c));
    for (std::int32_t k = 0; k < n; ++k) {
      emit(buf[k], static_cast<std::size_t>(start),
           static_cast<std::size_t>(i));
    }
  }
}

}  // namespace

NormalizedText Preprocess(std::string_view text) {
  NormalizedText out;
  out.text.reserve(text.size());
  out.offset_map.reserve(text.size());
  out.end_map.reserve(text.size());
  Normalize(text, [&](char ch, std::size_t begin, std::size_t end) {
    out.text.push_back(ch);
    out.offset_map.push_back(begin);
    out.end_map.push_back(end);
  });
  return out;
}

std::string PreprocessText(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  Normalize(text, [&](char ch, std::size_t, std::size_t) { out.push_back(ch); });
  return out;
}

std::optional<std::size_t> FindInvalidUtf8(std::string_view text) {
  const auto *s = reinterpret_cast<const std::uint8_t *>(text.data());
  const auto length = static_cast<std::int32_t>(text.size());
  std::int32_t i = 0;
  while (i < length) {
    const std::int32_t start = i;
    UChar32 c;
    U8_NEXT(s, i, length, c);
    if (c < 0) return static_cast<std::size_t>(start);
  }
  return std::nullopt;
}

std::vector<std::pair<std::size_t, std::size_t>> FindTokenOccurrences(
    std::string_view haystack, std::string_view needle) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  if (needle.empty()) return out;
  for (std::size_t pos = haystack.find(needle); pos != std::string_view::npos;
       pos = haystack.find(needle, pos + 1)) {
    if (AtTokenBoundaries(haystack, pos, pos + needle.size())) {
      out.emplace_back(pos, pos + needle.size());
    }
  }
  return out;
}

bool ContainsToken(std::string_view haystack, std::string_view needle) {
  if (needle.empty()) return false;
  for (std::size_t pos = haystack.find(needle); pos != std::string_view::npos;
       pos = haystack.find(needle, pos + 1)) {
    if (AtTokenBoundaries(haystack, pos, pos + needle.size())) return true;
  }
  return false;
}

std::vector<std::pair<std::size_t, std::size_t>> TokenRanges(
    std::string_view normalized) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  std::size_t begin = 0;
  while (begin < normalized.size()) {
    std::size_t end = normalized.find(' ', begin);
    if (end == std::string_view::npos) end = normalized.size();
    out.emplace_back(begin, end);
    begin = end + 1;
  }
  return out;
}

}  // namespace skillkit
