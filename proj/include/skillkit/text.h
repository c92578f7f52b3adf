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

#ifndef SKILLKIT_TEXT_H_
#define SKILLKIT_TEXT_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace skillkit {

// Result of Preprocess: lowercased text with Unicode punctuation removed and
// whitespace runs collapsed to single spaces, plus a mapping from every
// byte of `text` back to the source.
//
// offset_map[i] is the source byte offset where the character that produced
// text[i] starts; end_map[i] is where it ends. A collapsed space maps to the
// first whitespace byte of its run.
struct NormalizedText {
  std::string text;
  std::vector<std::size_t> offset_map;
  std::vector<std::size_t> end_map;

  // Source byte range covered by normalized bytes [begin, end). Requires
  // begin < end <= text.size().
  std::pair<std::size_t, std::size_t> SourceRange(std::size_t begin,
                                                  std::size_t end) const {
    return {offset_map[begin], end_map[end - 1]};
  }
};

// Lowercase + RemovePunctuation, with whitespace folding and offset tracking.
// Ill-formed UTF-8 sequences are treated as U+FFFD.
NormalizedText Preprocess(std::string_view text);

// Convenience: Preprocess(text).text without building the maps.
std::string PreprocessText(std::string_view text);

// Returns the byte offset of the first ill-formed sequence, or nullopt when
// `text` is valid UTF-8 (no overlongs, no surrogates).
std::optional<std::size_t> FindInvalidUtf8(std::string_view text);

// True when [begin, end) in a preprocessed string starts and ends at token
// boundaries (string edges or single spaces).
inline bool AtTokenBoundaries(std::string_view normalized, std::size_t begin,
                              std::size_t end) {
  return (begin == 0 || normalized[begin - 1] == ' ') &&
         (end == normalized.size() || normalized[end] == ' ');
}

// All (possibly overlapping) token-boundary occurrences of `needle` in
// `haystack`, both already preprocessed, as [begin, end) pairs in ascending
// order. Empty needle yields nothing.
std::vector<std::pair<std::size_t, std::size_t>> FindTokenOccurrences(
    std::string_view haystack, std::string_view needle);

// True when `needle` occurs at least once at token boundaries.
bool ContainsToken(std::string_view haystack, std::string_view needle);

// Splits a preprocessed string on single spaces: [begin, end) per token.
std::vector<std::pair<std::size_t, std::size_t>> TokenRanges(
    std::string_view normalized);

}  // namespace skillkit

#endif  // SKILLKIT_TEXT_H_
