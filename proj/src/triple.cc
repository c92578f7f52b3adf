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

#include "skillkit/triple.h"

#include <unicode/uchar.h>
#include <unicode/utf8.h>

namespace skillkit {
namespace {

bool IsBlank(std::string_view s) {
  const auto *p = reinterpret_cast<const std::uint8_t *>(s.data());
  const auto length = static_cast<std::int32_t>(s.size());
  std::int32_t i = 0;
  while (i < length) {
    UChar32 c;
    U8_NEXT(p, i, length, c);
    if (c < 0 || !u_isUWhiteSpace(c)) return false;
  }
  return true;
}

std::string CheckField(std::string_view name, std::string_view value) {
  if (value.empty()) return std::string(name) + " is empty";
  if (value.find_first_of("\t\n") != std::string_view::npos) {
    return std::string(name) + " contains a tab or newline";
  }
  if (IsBlank(value)) return std::string(name) + " is whitespace-only";
  return {};
}

}  // namespace

Role ParseRole(std::string_view name) {
  if (name == "subject") return Role::kSubject;
  if (name == "object") return Role::kObject;
  throw std::invalid_argument("unknown role '" + std::string(name) + "'");
}

std::string ValidateTriple(const Triple &t) {
  if (auto e = CheckField("subject", t.subject); !e.empty()) return e;
  if (auto e = CheckField("relation", t.relation); !e.empty()) return e;
  return CheckField("object", t.object);
}

}  // namespace skillkit
