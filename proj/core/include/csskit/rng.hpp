// Copyright 2026 The csskit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#ifndef CSSKIT_RNG_HPP
#define CSSKIT_RNG_HPP

#include <cstdint>
#include <random>

#include "csskit/linalg.hpp"

namespace csskit {

/// SplitMix64 finalizer; used to derive independent engine seeds.
std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// Seedable sampler. Algorithm, for reproduction in other languages:
///
///   engine   = mt19937_64 seeded with splitmix64(seed ^ splitmix64(stream))
///   uniform  = (engine() >> 11) * 2^-53, mapped to (0, 1] as 1 - u
///   normal   = Box-Muller on two uniforms; cosine branch first, sine branch
///              cached for the next call
///   complex  = (normal, normal), real part drawn first
///
/// Stream k of seed s is independent of stream k' != k, so parallel workers
/// each take their own stream and results do not depend on scheduling.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

  /// A fresh generator on stream `k` of the same seed.
  Rng split(std::uint64_t k) const { return Rng(seed_, k); }

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t next_u64() { return engine_(); }

  /// Uniform on (0, 1].
  double uniform();
  double normal();
  Complex complex_normal();

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace csskit

#endif  // CSSKIT_RNG_HPP
