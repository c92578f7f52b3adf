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

#include "skillkit/rational.h"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace skillkit {
namespace {

std::int64_t ParseInt(std::string_view digits, std::string_view whole) {
  if (digits.empty() || digits.size() > 18) {
    throw std::invalid_argument("not a number: '" + std::string(whole) + "'");
  }
  std::int64_t v = 0;
  for (char c : digits) {
    if (c < '0' || c > '9') {
      throw std::invalid_argument("not a number: '" + std::string(whole) + "'");
    }
    v = v * 10 + (c - '0');
  }
  return v;
}

}  // namespace

Rational ParseRational(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  Rational value;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    const std::int64_t den = ParseInt(s.substr(slash + 1), text);
    if (den == 0) throw std::invalid_argument("zero denominator: '" +
                                              std::string(text) + "'");
    value = Rational(ParseInt(s.substr(0, slash), text), den);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    const std::string_view whole = s.substr(0, dot);
    const std::string_view frac = s.substr(dot + 1);
    if (whole.empty() && frac.empty()) {
      throw std::invalid_argument("not a number: '" + std::string(text) + "'");
    }
    if (frac.size() > 18) {
      throw std::invalid_argument("too many digits: '" + std::string(text) + "'");
    }
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    const std::int64_t w = whole.empty() ? 0 : ParseInt(whole, text);
    const std::int64_t f = frac.empty() ? 0 : ParseInt(frac, text);
    value = Rational(w) + Rational(f, scale);
  } else {
    value = Rational(ParseInt(s, text));
  }
  return negative ? -value : value;
}

Rational RationalFromDouble(double value) {
  constexpr std::int64_t kScale = 1'000'000;
  if (!std::isfinite(value) ||
      std::fabs(value) > static_cast<double>(std::numeric_limits<std::int64_t>::max() / kScale)) {
    throw std::invalid_argument("value out of range");
  }
  return Rational(std::llround(value * kScale), kScale);
}

std::string FormatDecimal(const Rational &r, int min_digits, int max_digits) {
  std::int64_t scale = 1;
  for (int i = 0; i < max_digits; ++i) scale *= 10;
  const bool negative = r < 0;
  const Rational a = negative ? -r : r;
  // Round half away from zero at `max_digits`.
  const Rational scaled = a * scale;
  std::int64_t units = scaled.numerator() / scaled.denominator();
  if ((scaled - units) * 2 >= 1) ++units;

  std::string frac = std::to_string(units % scale);
  frac.insert(0, static_cast<std::size_t>(max_digits) - frac.size(), '0');
  while (static_cast<int>(frac.size()) > min_digits && frac.back() == '0') {
    frac.pop_back();
  }
  std::string out = (negative && units != 0) ? "-" : "";
  out += std::to_string(units / scale);
  if (!frac.empty()) out += "." + frac;
  return out;
}

}  // namespace skillkit
