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

#include "skillkit/date.h"

#include <array>
#include <cctype>
#include <string>
#include <vector>

namespace skillkit {
namespace {

constexpr std::array<std::string_view, 12> kMonths = {
    "january", "february", "march",     "april",   "may",      "june",
    "july",    "august",   "september", "october", "november", "december"};

bool IsAsciiSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

std::vector<std::string_view> SplitWhitespace(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && IsAsciiSpace(text[i])) ++i;
    const std::size_t begin = i;
    while (i < text.size() && !IsAsciiSpace(text[i])) ++i;
    if (i > begin) out.push_back(text.substr(begin, i - begin));
  }
  return out;
}

std::optional<int> Digits(std::string_view s, std::size_t min_len,
                          std::size_t max_len) {
  if (s.size() < min_len || s.size() > max_len) return std::nullopt;
  int value = 0;
  for (char c : s) {
    if (c < '0' || c > '9') return std::nullopt;
    value = value * 10 + (c - '0');
  }
  return value;
}

std::optional<int> Year(std::string_view s) {
  auto y = Digits(s, 4, 4);
  if (!y || *y < 1000 || *y > 2999) return std::nullopt;
  return y;
}

std::optional<int> Month(std::string_view s) {
  if (s.size() < 3 || s.size() > 9) return std::nullopt;
  std::string lower(s);
  for (char &c : lower) {
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  for (std::size_t m = 0; m < kMonths.size(); ++m) {
    if (lower == kMonths[m]) return static_cast<int>(m) + 1;
  }
  return std::nullopt;
}

int DaysInMonth(int year, int month) {
  static constexpr std::array<int, 12> kDays = {31, 28, 31, 30, 31, 30,
                                                31, 31, 30, 31, 30, 31};
  if (month == 2 &&
      ((year % 4 == 0 && year % 100 != 0) || year % 400 == 0)) {
    return 29;
  }
  return kDays[static_cast<std::size_t>(month - 1)];
}

std::optional<CalendarDate> Make(std::optional<int> year,
                                 std::optional<int> month,
                                 std::optional<int> day) {
  if (!year || !month || !day) return std::nullopt;
  if (*month < 1 || *month > 12) return std::nullopt;
  if (*day < 1 || *day > DaysInMonth(*year, *month)) return std::nullopt;
  return CalendarDate{*year, month, day};
}

std::optional<CalendarDate> ParseIso(std::string_view s) {
  if (s.size() != 10 || s[4] != '-' || s[7] != '-') return std::nullopt;
  return Make(Year(s.substr(0, 4)), Digits(s.substr(5, 2), 2, 2),
              Digits(s.substr(8, 2), 2, 2));
}

}  // namespace

std::optional<CalendarDate> ParseDate(std::string_view text) {
  const auto tokens = SplitWhitespace(text);
  switch (tokens.size()) {
    case 1: {
      if (auto iso = ParseIso(tokens[0])) return iso;
      if (auto year = Year(tokens[0])) return CalendarDate{*year, {}, {}};
      return std::nullopt;
    }
    case 3: {
      // D Month YYYY
      if (auto month = Month(tokens[1])) {
        return Make(Year(tokens[2]), month, Digits(tokens[0], 1, 2));
      }
      // Month D, YYYY
      std::string_view day = tokens[1];
      if (day.empty() || day.back() != ',') return std::nullopt;
      day.remove_suffix(1);
      return Make(Year(tokens[2]), Month(tokens[0]), Digits(day, 1, 2));
    }
    case 4: {
      // Month D , YYYY
      if (tokens[2] != ",") return std::nullopt;
      return Make(Year(tokens[3]), Month(tokens[0]), Digits(tokens[1], 1, 2));
    }
    default:
      return std::nullopt;
  }
}

bool SameDate(const CalendarDate &a, const CalendarDate &b) {
  if (a.year != b.year) return false;
  if (a.month && b.month && *a.month != *b.month) return false;
  if (a.day && b.day && *a.day != *b.day) return false;
  return true;
}

}  // namespace skillkit
