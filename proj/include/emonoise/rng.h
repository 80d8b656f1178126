// Copyright 2026 The Emonoise Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef EMONOISE_RNG_H_
#define EMONOISE_RNG_H_

#include <cstdint>
#include <string_view>

namespace emonoise {

// Counter-based SplitMix64 generator. Fully specified here (no stdlib
// distributions) so streams are identical across platforms and compilers.
// fork() derives an independent child stream from a tag, which is how batch
// jobs hand every (utterance, spec) task its own seed: results do not depend
// on worker count or task order.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1) with 53 random bits.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  // Uniform integer in [0, n). n must be > 0.
  std::uint64_t next_below(std::uint64_t n) {
    // Rejection sampling keeps the distribution exact.
    std::uint64_t threshold = (0 - n) % n;
    for (;;) {
      std::uint64_t r = next_u64();
      if (r >= threshold) return r % n;
    }
  }

  // Uniform integer in [lo, hi] inclusive.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(
                    next_below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  // Standard normal via Box-Muller on two fresh uniforms.
  double next_gaussian();

  // Independent child stream derived from this stream's seed and a tag.
  Rng fork(std::uint64_t tag) const;
  Rng fork(std::string_view tag) const;

  std::uint64_t seed() const { return state_; }

 private:
  std::uint64_t state_;
};

// FNV-1a over a string, used for tag-derived seeds.
std::uint64_t hash_tag(std::string_view s);

}  // namespace emonoise

#endif  // EMONOISE_RNG_H_
