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

#include "skillkit/masker.h"

#include <stdexcept>

namespace skillkit {
namespace {

bool Contains(std::string_view haystack, std::string_view needle) {
  return haystack.find(needle) != std::string_view::npos;
}

std::string MaskedTripleInput(const Triple &t, Role role,
                              std::string_view sentinel) {
  std::string out;
  out.reserve(t.subject.size() + t.relation.size() + t.object.size() +
              sentinel.size() + 4);
  out += role == Role::kSubject ? std::string_view(sentinel)
                                : std::string_view(t.subject);
  out += ", ";
  out += t.relation;
  out += ", ";
  out += role == Role::kObject ? std::string_view(sentinel)
                               : std::string_view(t.object);
  return out;
}

// Masks the spans of `key` that share the leftmost span's surface.
std::optional<MaskedExample> MaskKey(const MatchedSentence &m,
                                     const EntityKey &key,
                                     std::string_view sentinel) {
  const std::vector<Span> &spans = m.entity_spans.at(key);
  const std::string_view sentence = m.sentence;
  const std::string_view surface = spans.front().Surface(sentence);

  MaskedExample ex;
  ex.source = Source::kKelm;
  ex.target = std::string(surface);
  MaskProvenance prov{m.triples[key.triple], key.role, {}};
  std::size_t cursor = 0;
  for (const Span &s : spans) {
    if (s.Surface(sentence) != surface) continue;
    ex.input.append(sentence.substr(cursor, s.start - cursor));
    ex.input.append(sentinel);
    cursor = s.end;
    prov.spans.push_back(s);
  }
  ex.input.append(sentence.substr(cursor));
  ex.provenance = std::move(prov);
  if (Contains(ex.target, sentinel) ||
      Unmask(ex.input, sentinel, ex.target) != sentence) {
    return std::nullopt;
  }
  return ex;
}

}  // namespace

std::string_view SourceName(Source source) {
  switch (source) {
    case Source::kKg:
      return "kg";
    case Source::kKelm:
      return "kelm";
    case Source::kNatural:
      return "natural";
  }
  return "kg";
}

RoleChoice ParseRoleChoice(std::string_view name) {
  if (name == "random") return RoleChoice::kRandom;
  if (name == "subject") return RoleChoice::kSubject;
  if (name == "object") return RoleChoice::kObject;
  if (name == "both") return RoleChoice::kBoth;
  throw std::invalid_argument("unknown role choice '" + std::string(name) +
                              "' (expected random, subject, object or both)");
}

void ValidatePolicy(const MaskPolicy &policy) {
  if (policy.sentinel.empty()) {
    throw std::invalid_argument("sentinel must not be empty");
  }
  if (policy.sentinel.find_first_of("\t\n") != std::string::npos) {
    throw std::invalid_argument("sentinel must not contain tab or newline");
  }
}

std::string SerializeTriple(const Triple &t) {
  return t.subject + ", " + t.relation + ", " + t.object;
}

std::string Unmask(std::string_view input, std::string_view sentinel,
                   std::string_view target) {
  std::string out;
  out.reserve(input.size() + target.size());
  std::size_t cursor = 0;
  for (std::size_t pos = input.find(sentinel); pos != std::string_view::npos;
       pos = input.find(sentinel, cursor)) {
    out.append(input.substr(cursor, pos - cursor));
    out.append(target);
    cursor = pos + sentinel.size();
  }
  out.append(input.substr(cursor));
  return out;
}

MaskResult MaskTriple(const Triple &t, const MaskPolicy &policy,
                      RecordRng &rng) {
  MaskResult result;
  std::vector<Role> roles;
  switch (policy.role_choice) {
    case RoleChoice::kRandom:
      roles.push_back(rng.Coin() ? Role::kSubject : Role::kObject);
      break;
    case RoleChoice::kSubject:
      roles.push_back(Role::kSubject);
      break;
    case RoleChoice::kObject:
      roles.push_back(Role::kObject);
      break;
    case RoleChoice::kBoth:
      roles = {Role::kSubject, Role::kObject};
      break;
  }
  const std::string_view sentinel = policy.sentinel;
  if (Contains(t.subject, sentinel) || Contains(t.relation, sentinel) ||
      Contains(t.object, sentinel)) {
    result.dropped = DropReason::kSentinelCollision;
    return result;
  }
  const std::string serialized = SerializeTriple(t);
  for (Role role : roles) {
    MaskedExample ex;
    ex.input = MaskedTripleInput(t, role, sentinel);
    ex.target = t.entity(role);
    ex.source = Source::kKg;
    ex.provenance = MaskProvenance{t, role, {}};
    // A sentinel can still appear across a field boundary.
    if (Unmask(ex.input, sentinel, ex.target) != serialized) {
      result.examples.clear();
      result.dropped = DropReason::kSentinelCollision;
      return result;
    }
    result.examples.push_back(std::move(ex));
  }
  return result;
}

MaskResult MaskSentence(const MatchedSentence &m, const MaskPolicy &policy,
                        RecordRng &rng) {
  MaskResult result;
  if (!m.matched()) {
    result.dropped = DropReason::kNoSpans;
    return result;
  }
  if (Contains(m.sentence, policy.sentinel)) {
    result.dropped = DropReason::kSentinelCollision;
    return result;
  }

  std::vector<EntityKey> subject_keys;
  std::vector<EntityKey> object_keys;
  std::vector<EntityKey> all_keys;
  for (const auto &[key, spans] : m.entity_spans) {
    if (spans.empty()) continue;
    (key.role == Role::kSubject ? subject_keys : object_keys).push_back(key);
    all_keys.push_back(key);
  }
  if (all_keys.empty()) {
    result.dropped = DropReason::kNoSpans;
    return result;
  }

  auto pick = [&rng](const std::vector<EntityKey> &keys) {
    return keys[rng.Below(keys.size())];
  };
  std::vector<EntityKey> chosen;
  switch (policy.role_choice) {
    case RoleChoice::kRandom:
      chosen.push_back(pick(all_keys));
      break;
    case RoleChoice::kSubject:
      chosen.push_back(pick(subject_keys.empty() ? object_keys : subject_keys));
      break;
    case RoleChoice::kObject:
      chosen.push_back(pick(object_keys.empty() ? subject_keys : object_keys));
      break;
    case RoleChoice::kBoth:
      if (!subject_keys.empty()) chosen.push_back(pick(subject_keys));
      if (!object_keys.empty()) chosen.push_back(pick(object_keys));
      break;
  }
  for (const EntityKey &key : chosen) {
    auto ex = MaskKey(m, key, policy.sentinel);
    if (!ex) {
      result.examples.clear();
      result.dropped = DropReason::kSentinelCollision;
      return result;
    }
    result.examples.push_back(std::move(*ex));
  }
  return result;
}

}  // namespace skillkit
