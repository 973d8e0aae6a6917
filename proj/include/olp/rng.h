// Copyright 2026 The OnlineLP Authors
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

#ifndef OLP_RNG_H_
#define OLP_RNG_H_

#include <cstdint>
#include <initializer_list>
#include <random>
#include <span>
#include <utility>

namespace olp {

// SplitMix64 finalizer.
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Stream splitting rule: the seed of a sub-stream is obtained by folding each
// stream id into the base seed with mix64, in order. E.g. the permutation of
// repetition r of a K-duplicated run uses derive_seed(seed, {K, r}).
inline std::uint64_t derive_seed(std::uint64_t seed,
                                 std::initializer_list<std::uint64_t> ids) {
  std::uint64_t s = mix64(seed);
  for (std::uint64_t id : ids) s = mix64(s ^ mix64(id + 0x632be59bd9b4e019ULL));
  return s;
}

// Portable generator: std::mt19937_64 plus distribution code written here, so
// draws are identical across standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform on [0, 1) with 53 random bits.
  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // Uniform on {0, ..., bound - 1}; Lemire's multiply-and-reject method.
  std::uint64_t below(std::uint64_t bound) {
    unsigned __int128 prod =
        static_cast<unsigned __int128>(engine_()) * bound;
    auto low = static_cast<std::uint64_t>(prod);
    if (low < bound) {
      const std::uint64_t threshold = (0 - bound) % bound;
      while (low < threshold) {
        prod = static_cast<unsigned __int128>(engine_()) * bound;
        low = static_cast<std::uint64_t>(prod);
      }
    }
    return static_cast<std::uint64_t>(prod >> 64);
  }

  // Uniform on {lo, ..., hi}.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(
                    below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  template <typename T>
  void shuffle(std::span<T> values) {
    for (std::size_t i = values.size(); i > 1; --i) {
      const auto k = static_cast<std::size_t>(below(i));
      std::swap(values[i - 1], values[k]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace olp

#endif  // OLP_RNG_H_
