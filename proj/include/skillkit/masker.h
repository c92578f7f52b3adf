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

#ifndef SKILLKIT_MASKER_H_
#define SKILLKIT_MASKER_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "skillkit/matcher.h"
#include "skillkit/random.h"
#include "skillkit/triple.h"

namespace skillkit {

enum class Source { kKg, kKelm, kNatural };
std::string_view SourceName(Source source);

enum class RoleChoice { kRandom, kSubject, kObject, kBoth };
// "random", "subject", "object" or "both"; throws std::invalid_argument.
RoleChoice ParseRoleChoice(std::string_view name);

struct MaskPolicy {
  std::string sentinel = "[MASK]";
  RoleChoice role_choice = RoleChoice::kRandom;
  std::uint64_t seed = 0;
};

// Throws std::invalid_argument if the sentinel is empty or contains a tab or
// newline.
void ValidatePolicy(const MaskPolicy &policy);

struct MaskProvenance {
  Triple triple;
  Role role = Role::kSubject;
  // Masked byte ranges in the source sentence; empty for triples.
  std::vector<Span> spans;
};

// One salient-span-masked training pair.
struct MaskedExample {
  std::string input;
  std::string target;
  Source source = Source::kKg;
  std::optional<MaskProvenance> provenance;
};

enum class DropReason { kNone, kNoSpans, kSentinelCollision };

struct MaskResult {
  std::vector<MaskedExample> examples;
  DropReason dropped = DropReason::kNone;
};

// "<subject>, <relation>, <object>", no escaping.
std::string SerializeTriple(const Triple &t);

// Replaces the subject or object of the serialized triple with the sentinel.
// role_choice=both yields the subject example then the object example. A
// triple that already contains the sentinel text is dropped.
MaskResult MaskTriple(const Triple &t, const MaskPolicy &policy,
                      RecordRng &rng);

// Picks one (triple, role) key with spans and replaces every span of it
// whose surface equals the leftmost one with the sentinel; the target is that
// surface. random draws uniformly among all keys with spans; subject/object
// prefer keys of that role and fall back to the other; both emits one example
// per role that has keys.
MaskResult MaskSentence(const MatchedSentence &m, const MaskPolicy &policy,
                        RecordRng &rng);

// Substitutes `target` for every sentinel occurrence in `input`.
std::string Unmask(std::string_view input, std::string_view sentinel,
                   std::string_view target);

}  // namespace skillkit

#endif  // SKILLKIT_MASKER_H_
