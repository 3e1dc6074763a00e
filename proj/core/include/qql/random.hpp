// Copyright 2026 The qql Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace qql {

/// Seeded pseudo-random source used by every sampler in the library.
///
/// Wraps `std::mt19937_64`, whose output sequence is fixed by the C++
/// standard. The derived draws (bounded integers, doubles, normals) are
/// computed here rather than through `<random>` distributions, whose
/// algorithms are implementation-defined, so a given seed reproduces the
/// same experiment bit-for-bit on every standard library.
///
/// Independent trials use `Rng::for_trial(seed, index)`, which seeds the
/// engine with `seed ^ index`.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  static Rng for_trial(std::uint64_t seed, std::uint64_t index) {
    return Rng(seed ^ index);
  }

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [0, bound). `bound` must be positive.
  std::uint64_t below(std::uint64_t bound);

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform();

  /// Standard normal variate (Box-Muller, no caching).
  double normal();

  bool coin() { return (next() >> 63) != 0; }

  /// Fisher-Yates shuffle driven by `below`.
  template <typename T>
  void shuffle(std::span<T> values) {
    for (std::size_t i = values.size(); i > 1; --i) {
      const auto j = static_cast<std::size_t>(below(i));
      std::swap(values[i - 1], values[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace qql
