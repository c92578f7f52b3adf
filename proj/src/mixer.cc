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

#include "skillkit/mixer.h"

#include <stdexcept>

#include "skillkit/random.h"

namespace skillkit {

void ValidateMixSpec(const MixSpec &spec) {
  if (spec.sources.empty()) throw std::invalid_argument("no mix sources");
  if (spec.block == 0) throw std::invalid_argument("block must be positive");
  Rational total;
  for (const MixSource &s : spec.sources) {
    if (s.weight < 0) {
      throw std::invalid_argument("source '" + s.id + "' has negative weight");
    }
    total += s.weight;
  }
  if (total != Rational(1)) {
    throw std::invalid_argument("mix weights sum to " + FormatDecimal(total) +
                                ", expected 1");
  }
  for (const MixSource &s : spec.sources) {
    const Rational share = s.weight * static_cast<std::int64_t>(spec.block);
    if (share.denominator() != 1) {
      throw std::invalid_argument(
          "source '" + s.id + "': block " + std::to_string(spec.block) +
          " x weight " + FormatDecimal(s.weight) + " is not an integer");
    }
  }
}

std::vector<std::uint64_t> BlockQuotas(const MixSpec &spec) {
  std::vector<std::uint64_t> quotas;
  quotas.reserve(spec.sources.size());
  for (const MixSource &s : spec.sources) {
    const Rational share = s.weight * static_cast<std::int64_t>(spec.block);
    quotas.push_back(static_cast<std::uint64_t>(share.numerator()));
  }
  return quotas;
}

std::vector<std::size_t> BlockOrder(const MixSpec &spec,
                                    std::uint64_t block_index) {
  std::vector<std::size_t> order;
  order.reserve(spec.block);
  const auto quotas = BlockQuotas(spec);
  for (std::size_t i = 0; i < quotas.size(); ++i) {
    order.insert(order.end(), quotas[i], i);
  }
  RecordRng rng(spec.seed, kMixStream, block_index);
  for (std::size_t i = order.size(); i > 1; --i) {
    std::swap(order[i - 1], order[rng.Below(i)]);
  }
  return order;
}

MixReport Mix(std::span<RecordStream *const> streams, const MixSpec &spec,
              const MixSink &sink) {
  ValidateMixSpec(spec);
  if (streams.size() != spec.sources.size()) {
    throw std::invalid_argument("stream count does not match mix sources");
  }
  const auto quotas = BlockQuotas(spec);
  const std::size_t n = streams.size();
  MixReport report;
  report.emitted_per_source.assign(n, 0);
  report.leftover_per_source.assign(n, 0);

  std::vector<std::vector<std::string>> pending(n);
  for (std::uint64_t block = 0;; ++block) {
    bool complete = true;
    for (std::size_t i = 0; i < n && complete; ++i) {
      while (pending[i].size() < quotas[i]) {
        auto rec = streams[i]->Next();
        if (!rec) {
          complete = false;
          break;
        }
        pending[i].push_back(std::move(*rec));
      }
    }
    if (!complete) break;

    std::vector<std::size_t> cursor(n, 0);
    for (std::size_t source : BlockOrder(spec, block)) {
      sink(source, std::move(pending[source][cursor[source]++]));
      ++report.emitted_per_source[source];
      ++report.emitted;
    }
    for (auto &p : pending) p.clear();
  }

  for (std::size_t i = 0; i < n; ++i) {
    report.leftover_per_source[i] = pending[i].size();
    while (streams[i]->Next()) ++report.leftover_per_source[i];
  }
  return report;
}

Rational Epochs(const TrainConfig &cfg) {
  if (cfg.corpus_size == 0) {
    throw std::domain_error("epochs: corpus size must be positive");
  }
  return Rational(static_cast<std::int64_t>(cfg.steps)) *
         static_cast<std::int64_t>(cfg.batch_size) * cfg.mix_fraction /
         static_cast<std::int64_t>(cfg.corpus_size);
}

}  // namespace skillkit
