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

#ifndef SKILLKIT_MIXER_H_
#define SKILLKIT_MIXER_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "skillkit/rational.h"

namespace skillkit {

struct MixSource {
  std::string id;
  Rational weight;
};

// Within every block of `block` output records, source i contributes exactly
// block * weight_i records.
struct MixSpec {
  std::vector<MixSource> sources;
  std::uint64_t seed = 0;
  std::uint64_t block = 2;
};

// Throws std::invalid_argument unless weights are non-negative, sum to
// exactly 1, and block * weight is integral for every source.
void ValidateMixSpec(const MixSpec &spec);

// Records per block for each source. Requires a valid spec.
std::vector<std::uint64_t> BlockQuotas(const MixSpec &spec);

// Source index for each slot of block `block_index`: the quota multiset in
// a seeded Fisher-Yates order.
std::vector<std::size_t> BlockOrder(const MixSpec &spec,
                                    std::uint64_t block_index);

// Pull-based record source.
class RecordStream {
 public:
  virtual ~RecordStream() = default;
  virtual std::optional<std::string> Next() = 0;
};

class VectorStream : public RecordStream {
 public:
  explicit VectorStream(std::vector<std::string> records)
      : records_(std::move(records)) {}
  std::optional<std::string> Next() override {
    if (pos_ == records_.size()) return std::nullopt;
    return records_[pos_++];
  }

 private:
  std::vector<std::string> records_;
  std::size_t pos_ = 0;
};

struct MixReport {
  std::size_t emitted = 0;
  std::vector<std::size_t> emitted_per_source;
  // Records read but not emitted plus records never read.
  std::vector<std::size_t> leftover_per_source;
};

using MixSink = std::function<void(std::size_t source, std::string record)>;

// Emits whole blocks until some source cannot fill its quota, then drains
// the remaining records of every stream to count leftovers. streams[i]
// feeds spec.sources[i].
MixReport Mix(std::span<RecordStream *const> streams, const MixSpec &spec,
              const MixSink &sink);

struct TrainConfig {
  std::uint64_t steps = 0;
  std::uint64_t batch_size = 0;
  // Fraction of each batch drawn from the knowledge corpus.
  Rational mix_fraction{1, 2};
  std::uint64_t corpus_size = 0;
};

// steps * batch_size * mix_fraction / corpus_size. Throws std::domain_error
// for an empty corpus.
Rational Epochs(const TrainConfig &cfg);

}  // namespace skillkit

#endif  // SKILLKIT_MIXER_H_
