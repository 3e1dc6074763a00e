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

#include "qql/statevector.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qql {

namespace {

std::size_t checked_dimension(std::size_t num_qubits) {
  if (num_qubits > kMaxQubits) {
    throw std::invalid_argument("state of " + std::to_string(num_qubits) +
                                " qubits exceeds the simulator limit of " +
                                std::to_string(kMaxQubits));
  }
  return std::size_t{1} << num_qubits;
}

// Offsets of the 2^t sub-basis states of `targets`, relative to a base index
// whose target bits are all zero.
std::vector<std::uint64_t> target_offsets(std::size_t num_qubits,
                                          std::span<const std::size_t> targets) {
  const std::size_t t = targets.size();
  std::vector<std::uint64_t> offsets(std::size_t{1} << t, 0);
  for (std::size_t j = 0; j < offsets.size(); ++j) {
    for (std::size_t k = 0; k < t; ++k) {
      if ((j >> (t - 1 - k)) & 1U) {
        offsets[j] |= qubit_mask(num_qubits, targets[k]);
      }
    }
  }
  return offsets;
}

}  // namespace

StateVector StateVector::basis(std::size_t num_qubits, std::uint64_t index) {
  std::vector<Complex> amps(checked_dimension(num_qubits));
  if (index >= amps.size()) {
    throw std::out_of_range("basis index " + std::to_string(index) +
                            " out of range for " + std::to_string(num_qubits) +
                            " qubits");
  }
  amps[index] = 1.0;
  return StateVector(num_qubits, std::move(amps));
}

StateVector StateVector::uniform(std::size_t num_qubits) {
  const std::size_t dim = checked_dimension(num_qubits);
  const double amp = 1.0 / std::sqrt(static_cast<double>(dim));
  return StateVector(num_qubits, std::vector<Complex>(dim, Complex{amp, 0.0}));
}

StateVector::StateVector(std::size_t num_qubits, std::vector<Complex> amplitudes)
    : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() != checked_dimension(num_qubits)) {
    throw std::invalid_argument(
        "amplitude count " + std::to_string(amplitudes_.size()) +
        " does not equal 2^" + std::to_string(num_qubits));
  }
}

double StateVector::norm() const {
  double sum = 0.0;
  for (const auto& a : amplitudes_) {
    sum += std::norm(a);
  }
  return std::sqrt(sum);
}

bool StateVector::is_normalized(double tol) const {
  double sum = 0.0;
  for (const auto& a : amplitudes_) {
    sum += std::norm(a);
  }
  return std::abs(sum - 1.0) <= tol;
}

StateVector StateVector::tensor(const StateVector& low) const {
  std::vector<Complex> amps(
      checked_dimension(num_qubits_ + low.num_qubits_));
  const std::size_t low_dim = low.dimension();
  for (std::size_t hi = 0; hi < amplitudes_.size(); ++hi) {
    for (std::size_t lo = 0; lo < low_dim; ++lo) {
      amps[hi * low_dim + lo] = amplitudes_[hi] * low.amplitudes_[lo];
    }
  }
  return StateVector(num_qubits_ + low.num_qubits_, std::move(amps));
}

Distribution::Distribution(std::vector<double> probabilities)
    : probabilities_(std::move(probabilities)) {
  double sum = 0.0;
  for (double p : probabilities_) {
    if (!(p >= -kTolerance && p <= 1.0 + kTolerance)) {
      throw std::invalid_argument("probability outside [0, 1]");
    }
    sum += p;
  }
  if (std::abs(sum - 1.0) > kTolerance) {
    throw std::invalid_argument("probabilities sum to " + std::to_string(sum) +
                                ", not 1");
  }
}

UnitaryOp::UnitaryOp(std::vector<std::size_t> targets,
                     std::vector<Complex> matrix)
    : targets_(std::move(targets)), matrix_(std::move(matrix)) {
  std::vector<std::size_t> sorted = targets_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("UnitaryOp: duplicate target qubit");
  }
  if (targets_.size() > 12) {
    throw std::invalid_argument("UnitaryOp: at most 12 targets supported");
  }
  const std::size_t dim = dimension();
  if (matrix_.size() != dim * dim) {
    throw std::invalid_argument("UnitaryOp: matrix must be " +
                                std::to_string(dim) + "x" +
                                std::to_string(dim));
  }
  // U^dagger U = I, entrywise.
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      Complex sum = 0.0;
      for (std::size_t k = 0; k < dim; ++k) {
        sum += std::conj(matrix_[k * dim + i]) * matrix_[k * dim + j];
      }
      const Complex expected = (i == j) ? 1.0 : 0.0;
      if (std::abs(sum - expected) > kTolerance) {
        throw std::invalid_argument("UnitaryOp: matrix is not unitary");
      }
    }
  }
}

UnitaryOp UnitaryOp::hadamard(std::size_t qubit) {
  const double h = std::numbers::sqrt2 / 2.0;
  return UnitaryOp({qubit}, {h, h, h, -h});
}

UnitaryOp UnitaryOp::pauli_x(std::size_t qubit) {
  return UnitaryOp({qubit}, {0.0, 1.0, 1.0, 0.0});
}

UnitaryOp UnitaryOp::ry(std::size_t qubit, double theta) {
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  return UnitaryOp({qubit}, {c, -s, s, c});
}

UnitaryOp UnitaryOp::cnot(std::size_t control, std::size_t target) {
  std::vector<Complex> m(16, 0.0);
  m[0 * 4 + 0] = 1.0;
  m[1 * 4 + 1] = 1.0;
  m[2 * 4 + 3] = 1.0;
  m[3 * 4 + 2] = 1.0;
  return UnitaryOp({control, target}, std::move(m));
}

UnitaryOp UnitaryOp::adjoint() const {
  const std::size_t dim = dimension();
  std::vector<Complex> m(dim * dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      m[i * dim + j] = std::conj(matrix_[j * dim + i]);
    }
  }
  return UnitaryOp(targets_, std::move(m));
}

Complex inner_product(const StateVector& a, const StateVector& b) {
  if (a.num_qubits() != b.num_qubits()) {
    throw std::invalid_argument("inner_product: dimension mismatch");
  }
  Complex sum = 0.0;
  for (std::size_t i = 0; i < a.dimension(); ++i) {
    sum += std::conj(a[i]) * b[i];
  }
  return sum;
}

double euclidean_distance(const StateVector& a, const StateVector& b) {
  if (a.num_qubits() != b.num_qubits()) {
    throw std::invalid_argument("euclidean_distance: dimension mismatch (" +
                                std::to_string(a.num_qubits()) + " vs " +
                                std::to_string(b.num_qubits()) + " qubits)");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < a.dimension(); ++i) {
    sum += std::norm(a[i] - b[i]);
  }
  return std::sqrt(sum);
}

Distribution measure(const StateVector& s) {
  if (!s.is_normalized()) {
    throw std::invalid_argument("measure: state is not normalized (norm " +
                                std::to_string(s.norm()) + ")");
  }
  std::vector<double> p(s.dimension());
  for (std::size_t i = 0; i < p.size(); ++i) {
    p[i] = std::norm(s[i]);
  }
  return Distribution(std::move(p));
}

double tv_distance(const Distribution& d1, const Distribution& d2) {
  if (d1.size() != d2.size()) {
    throw std::invalid_argument("tv_distance: length mismatch");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < d1.size(); ++i) {
    sum += std::abs(d1[i] - d2[i]);
  }
  return sum;
}

void check_qubits(std::size_t num_qubits, std::span<const std::size_t> qubits) {
  std::uint64_t seen = 0;
  for (std::size_t q : qubits) {
    if (q >= num_qubits || q >= 64) {
      throw std::invalid_argument("qubit index " + std::to_string(q) +
                                  " out of range for " +
                                  std::to_string(num_qubits) + " qubits");
    }
    const std::uint64_t bit = std::uint64_t{1} << q;
    if (seen & bit) {
      throw std::invalid_argument("qubit index " + std::to_string(q) +
                                  " listed twice");
    }
    seen |= bit;
  }
}

void apply_in_place(StateVector& s, const UnitaryOp& u) {
  const std::size_t m = s.num_qubits();
  check_qubits(m, u.targets());
  const auto offsets = target_offsets(m, u.targets());
  std::uint64_t target_bits = 0;
  for (auto off : offsets) {
    target_bits |= off;
  }
  const std::size_t d = offsets.size();
  const auto matrix = u.matrix();
  auto amps = s.amplitudes();
  std::vector<Complex> in(d);
  for (std::uint64_t base = 0; base < amps.size(); ++base) {
    if (base & target_bits) {
      continue;
    }
    for (std::size_t j = 0; j < d; ++j) {
      in[j] = amps[base | offsets[j]];
    }
    for (std::size_t r = 0; r < d; ++r) {
      Complex acc = 0.0;
      const Complex* row = matrix.data() + r * d;
      for (std::size_t c = 0; c < d; ++c) {
        acc += row[c] * in[c];
      }
      amps[base | offsets[r]] = acc;
    }
  }
}

StateVector apply(const StateVector& s, const UnitaryOp& u) {
  StateVector out = s;
  apply_in_place(out, u);
  return out;
}

void hadamard_in_place(StateVector& s, std::span<const std::size_t> qubits) {
  check_qubits(s.num_qubits(), qubits);
  const double h = std::numbers::sqrt2 / 2.0;
  auto amps = s.amplitudes();
  for (std::size_t q : qubits) {
    const std::uint64_t mask = qubit_mask(s.num_qubits(), q);
    for (std::uint64_t i = 0; i < amps.size(); ++i) {
      if (i & mask) {
        continue;
      }
      const Complex a0 = amps[i];
      const Complex a1 = amps[i | mask];
      amps[i] = h * (a0 + a1);
      amps[i | mask] = h * (a0 - a1);
    }
  }
}

void reflect_about_uniform_in_place(StateVector& s,
                                    std::span<const std::size_t> qubits) {
  check_qubits(s.num_qubits(), qubits);
  const auto offsets = target_offsets(s.num_qubits(), qubits);
  std::uint64_t reg_bits = 0;
  for (auto off : offsets) {
    reg_bits |= off;
  }
  const double inv = 1.0 / static_cast<double>(offsets.size());
  auto amps = s.amplitudes();
  for (std::uint64_t base = 0; base < amps.size(); ++base) {
    if (base & reg_bits) {
      continue;
    }
    Complex mean = 0.0;
    for (auto off : offsets) {
      mean += amps[base | off];
    }
    mean *= inv;
    for (auto off : offsets) {
      amps[base | off] = 2.0 * mean - amps[base | off];
    }
  }
}

StateVector random_state(std::size_t num_qubits, Rng& rng) {
  std::vector<Complex> amps(checked_dimension(num_qubits));
  double sum = 0.0;
  for (auto& a : amps) {
    a = Complex{rng.normal(), rng.normal()};
    sum += std::norm(a);
  }
  const double scale = 1.0 / std::sqrt(sum);
  for (auto& a : amps) {
    a *= scale;
  }
  return StateVector(num_qubits, std::move(amps));
}

UnitaryOp random_unitary(std::vector<std::size_t> targets, Rng& rng) {
  const std::size_t dim = std::size_t{1} << targets.size();
  // Columns of a Gaussian matrix, orthonormalized (modified Gram-Schmidt).
  std::vector<std::vector<Complex>> cols(dim, std::vector<Complex>(dim));
  for (auto& col : cols) {
    for (auto& z : col) {
      z = Complex{rng.normal(), rng.normal()};
    }
  }
  for (std::size_t c = 0; c < dim; ++c) {
    for (std::size_t p = 0; p < c; ++p) {
      Complex proj = 0.0;
      for (std::size_t r = 0; r < dim; ++r) {
        proj += std::conj(cols[p][r]) * cols[c][r];
      }
      for (std::size_t r = 0; r < dim; ++r) {
        cols[c][r] -= proj * cols[p][r];
      }
    }
    double n = 0.0;
    for (const auto& z : cols[c]) {
      n += std::norm(z);
    }
    n = std::sqrt(n);
    for (auto& z : cols[c]) {
      z /= n;
    }
  }
  std::vector<Complex> m(dim * dim);
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) {
      m[r * dim + c] = cols[c][r];
    }
  }
  return UnitaryOp(std::move(targets), std::move(m));
}

}  // namespace qql
