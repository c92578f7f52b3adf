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

#ifndef SKILLKIT_DATE_H_
#define SKILLKIT_DATE_H_

#include <optional>
#include <string_view>

namespace skillkit {

// A possibly partial calendar date. A bare year leaves month and day empty.
struct CalendarDate {
  int year = 0;
  std::optional<int> month;
  std::optional<int> day;

  bool operator==(const CalendarDate &) const = default;
};

// Recognized shapes (English month names, case-insensitive):
//   1994-05-23      23 May 1994      May 23, 1994      1994
// Years must have four digits in [1000, 2999]; day must exist in its month.
std::optional<CalendarDate> ParseDate(std::string_view text);

// Compatibility rather than identity: every component populated on both sides
// must agree, so a bare year is the same date as any day in that year.
bool SameDate(const CalendarDate &a, const CalendarDate &b);

}  // namespace skillkit

#endif  // SKILLKIT_DATE_H_
