// Copyright 2026 The rglab Authors
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

#ifndef RGLAB_RNG_H_
#define RGLAB_RNG_H_

#include <cstdint>
#include <random>

namespace rglab {

// SplitMix64 finalizer. Used to derive well-separated engine seeds from
// (master seed, stream index) pairs.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Identifies one reproducible random stream: trial `index` of an experiment
// seeded with `master_seed`.
//
// The engine seed is splitmix64(splitmix64(master_seed) + index). Distinct
// indices give unrelated engines, so trials can run on any thread in any
// order and still reproduce bit-for-bit.
struct RngStream {
  std::uint64_t master_seed = 0;
  std::uint64_t index = 0;

  constexpr std::uint64_t engine_seed() const {
    return splitmix64(splitmix64(master_seed) + index);
  }

  // Stream for trial `index` of a sub-experiment tagged by `tag` (for
  // instance the vertex count of a grid point), so that grid points do not
  // share graphs.
  static constexpr RngStream tagged(std::uint64_t master_seed,
                                    std::uint64_t tag, std::uint64_t index) {
    return RngStream{splitmix64(master_seed ^ splitmix64(tag)), index};
  }
};

// Random source over a single stream. The uniform conversions are written
// out explicitly (instead of using std::*_distribution) because the standard
// distributions are implementation-defined and would break cross-platform
// reproducibility.
class Rng {
 public:
  explicit Rng(RngStream stream) : engine_(stream.engine_seed()) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform on [0, 1) with 53 random bits.
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // Uniform integer on [0, bound); bound > 0. Rejection sampling, unbiased.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % bound;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace rglab

#endif  // RGLAB_RNG_H_
