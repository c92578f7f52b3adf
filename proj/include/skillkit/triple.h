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

#ifndef SKILLKIT_TRIPLE_H_
#define SKILLKIT_TRIPLE_H_

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

namespace skillkit {

// Position of an entity inside a triple. The relation is never a role:
// it is neither indexed as an entity nor matched or masked.
enum class Role { kSubject, kObject };

inline std::string_view RoleName(Role role) {
  return role == Role::kSubject ? "subject" : "object";
}

inline Role Opposite(Role role) {
  return role == Role::kSubject ? Role::kObject : Role::kSubject;
}

// Throws std::invalid_argument for anything other than "subject"/"object".
Role ParseRole(std::string_view name);

// One (subject, relation, object) fact.
struct Triple {
  std::string subject;
  std::string relation;
  std::string object;

  const std::string &entity(Role role) const {
    return role == Role::kSubject ? subject : object;
  }

  auto operator<=>(const Triple &) const = default;
};

// Raised for a single bad input record. Lenient readers count and skip it;
// strict readers let it propagate.
class RecordError : public std::runtime_error {
 public:
  RecordError(std::size_t line, const std::string &what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Raised for input that cannot be processed at all (e.g. invalid UTF-8).
class FatalDataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Returns an empty string when `t` satisfies the Triple invariants, otherwise
// a description of the first violation.
std::string ValidateTriple(const Triple &t);

}  // namespace skillkit

#endif  // SKILLKIT_TRIPLE_H_
