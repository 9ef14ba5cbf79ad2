// Copyright 2026 The HICODE Authors
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

#ifndef HICODE_RANDOM_H_
#define HICODE_RANDOM_H_

#include <cstdint>
#include <initializer_list>
#include <random>
#include <span>
#include <utility>

namespace hicode {

// SplitMix64 finalizer. Used both to derive child seeds and as a cheap mixer.
constexpr uint64_t Mix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Stage tags for the seed split scheme. Every random decision in a pipeline
// run is seeded with SplitSeed(master, tag, a, b), so changing one stage never
// perturbs the random stream of another.
enum class SeedStage : uint64_t {
  kIdentify = 1,
  kRefine = 2,
  kProbeIdentify = 3,
  kProbeRefine = 4,
  kReduceEdge = 5,
  kCommunity = 6,
  kGenerator = 7,
};

// Components are folded left through Mix64 on top of the mixed master seed
// and stage tag.
inline uint64_t SplitSeed(uint64_t master, SeedStage stage,
                          std::initializer_list<uint64_t> parts = {}) {
  uint64_t h = Mix64(master ^ (static_cast<uint64_t>(stage) << 56));
  for (uint64_t p : parts) h = Mix64(h ^ Mix64(p));
  return h;
}

// Thin wrapper over mt19937_64 with distribution helpers whose output is
// defined here rather than by the standard library implementation, so seeded
// results are identical across toolchains.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  uint64_t Next() { return engine_(); }

  // Uniform in [0, 1) with 53 bits of resolution.
  double UniformReal() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // Uniform in [0, bound). Rejection sampling removes modulo bias.
  uint64_t UniformInt(uint64_t bound) {
    const uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % bound;
  }

  bool Bernoulli(double p) { return UniformReal() < p; }

  template <typename T>
  void Shuffle(std::span<T> items) {
    for (size_t i = items.size(); i > 1; --i) {
      size_t j = UniformInt(i);
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace hicode

#endif  // HICODE_RANDOM_H_
