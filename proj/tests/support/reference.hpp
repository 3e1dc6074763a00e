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

// Test-only reference implementations. Each one computes its value by a
// route unrelated to the library code it checks.

#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

namespace qql::reference {

using Amps = std::vector<std::complex<double>>;

inline double grover_theta(std::size_t n) {
  return std::asin(std::pow(2.0, -0.5 * static_cast<double>(n)));
}

/// Probability of measuring the marked string after k rounds.
inline double grover_found(std::size_t n, std::size_t k) {
  const double s = std::sin((2.0 * static_cast<double>(k) + 1.0) * grover_theta(n));
  return s * s;
}

/// 1 - |<psi0|psi_k>|^2 for one marked string.
inline double grover_separation(std::size_t n, std::size_t k) {
  const double s = std::sin(2.0 * static_cast<double>(k) * grover_theta(n));
  return s * s;
}

inline double one_query_closed_form(std::size_t n) {
  const double size = std::ldexp(1.0, static_cast<int>(n));
  return 4.0 / size - 4.0 / (size * size);
}

/// Probability that a uniformly random function on N = 2^n points misses
/// a fixed value, and hits it exactly once.
inline double no_preimage(std::size_t n) {
  const double size = std::ldexp(1.0, static_cast<int>(n));
  return std::pow(1.0 - 1.0 / size, size);
}
inline double unique_preimage(std::size_t n) {
  const double size = std::ldexp(1.0, static_cast<int>(n));
  return std::pow(1.0 - 1.0 / size, size - 1.0);
}

/// Majority of k independent trials by dynamic programming over the count
/// of correct votes.
inline double majority_dp(double p, std::size_t k) {
  std::vector<double> count(k + 1, 0.0);
  count[0] = 1.0;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t c = i + 1; c > 0; --c) {
      count[c] = count[c] * (1.0 - p) + count[c - 1] * p;
    }
    count[0] *= 1.0 - p;
  }
  double total = 0.0;
  for (std::size_t c = k / 2 + 1; c <= k; ++c) {
    total += count[c];
  }
  return total;
}

/// Same quantity by enumerating all 2^k outcomes.
inline double majority_brute(double p, std::size_t k) {
  double total = 0.0;
  for (std::uint64_t w = 0; w < (std::uint64_t{1} << k); ++w) {
    const int ones = __builtin_popcountll(w);
    if (static_cast<std::size_t>(ones) * 2 > k) {
      total += std::pow(p, ones) * std::pow(1.0 - p, static_cast<double>(k) - ones);
    }
  }
  return total;
}

/// Smallest odd k whose majority success reaches 1 - eps, by linear search.
inline std::size_t repetitions_search(double eps, double p = 2.0 / 3.0) {
  for (std::size_t k = 1;; k += 2) {
    if (majority_dp(p, k) >= 1.0 - eps) {
      return k;
    }
  }
}

/// Applies a 2^t x 2^t row-major matrix on `targets` by visiting every
/// (input, output) pair. Quadratic in the dimension; small registers only.
inline Amps apply_naive(const Amps& in, std::size_t m,
                        const std::vector<std::size_t>& targets,
                        const Amps& matrix) {
  const std::size_t t = targets.size();
  const std::size_t local = std::size_t{1} << t;
  auto local_of = [&](std::uint64_t x) {
    std::uint64_t r = 0;
    for (std::size_t i = 0; i < t; ++i) {
      r = (r << 1) | ((x >> (m - 1 - targets[i])) & 1U);
    }
    return r;
  };
  auto with_local = [&](std::uint64_t x, std::uint64_t r) {
    for (std::size_t i = 0; i < t; ++i) {
      const std::uint64_t bit = std::uint64_t{1} << (m - 1 - targets[i]);
      const bool on = ((r >> (t - 1 - i)) & 1U) != 0;
      x = on ? (x | bit) : (x & ~bit);
    }
    return x;
  };
  Amps out(in.size(), 0.0);
  for (std::uint64_t x = 0; x < in.size(); ++x) {
    const std::uint64_t col = local_of(x);
    for (std::uint64_t row = 0; row < local; ++row) {
      out[with_local(x, row)] += matrix[row * local + col] * in[x];
    }
  }
  return out;
}

}  // namespace qql::reference
