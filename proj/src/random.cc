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

#include "skillkit/random.h"

namespace skillkit {

RecordRng::RecordRng(std::uint64_t seed, std::uint64_t stream,
                     std::uint64_t ordinal)
    : state_(Mix(Mix(Mix(seed + kGamma) ^ stream) + ordinal)) {}

std::uint64_t RecordRng::Below(std::uint64_t bound) {
  // Rejection sampling on the largest multiple of `bound`.
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t x;
  do {
    x = Next();
  } while (x >= limit);
  return x % bound;
}

}  // namespace skillkit
