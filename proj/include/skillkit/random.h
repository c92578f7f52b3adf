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

#ifndef SKILLKIT_RANDOM_H_
#define SKILLKIT_RANDOM_H_

#include <cstdint>

namespace skillkit {

// Independent random stream for one record, derived from (seed, stream,
// ordinal). Results depend only on those three values, never on which
// worker processes the record or in what order.
//
// The generator is SplitMix64 over a state keyed by all three values. It
// costs a few nanoseconds to set up, which matters at one stream per record,
// and its output is fixed by definition on every platform.
class RecordRng {
 public:
  RecordRng(std::uint64_t seed, std::uint64_t stream, std::uint64_t ordinal);

  std::uint64_t Next() {
    state_ += kGamma;
    return Mix(state_);
  }

  bool Coin() { return (Next() >> 63) != 0; }

  // Uniform in [0, bound). bound must be positive.
  std::uint64_t Below(std::uint64_t bound);

 private:
  static constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;

  static std::uint64_t Mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
};

// Stream ids keep the different consumers of one seed apart.
inline constexpr std::uint64_t kTripleStream = 1;
inline constexpr std::uint64_t kSentenceStream = 2;
inline constexpr std::uint64_t kMixStream = 3;

}  // namespace skillkit

#endif  // SKILLKIT_RANDOM_H_
