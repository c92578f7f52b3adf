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

#ifndef SKILLKIT_RATIONAL_H_
#define SKILLKIT_RATIONAL_H_

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace skillkit {

using Rational = boost::rational<std::int64_t>;

// Accepts "3", "-0.25", "1/3" and "1e-3"-free decimals. Throws
// std::invalid_argument on anything else.
Rational ParseRational(std::string_view text);

// Nearest representable rational with denominator 10^6; used for values
// that arrive as binary floating point (JSON numbers).
Rational RationalFromDouble(double value);

inline double ToDouble(const Rational &r) {
  return boost::rational_cast<double>(r);
}

// Decimal rendering rounded half away from zero to `max_digits` fraction
// digits, trailing zeros trimmed down to `min_digits`.
std::string FormatDecimal(const Rational &r, int min_digits = 2,
                          int max_digits = 6);

}  // namespace skillkit

#endif  // SKILLKIT_RATIONAL_H_
