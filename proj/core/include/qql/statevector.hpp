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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "qql/random.hpp"

namespace qql {

using Complex = std::complex<double>;

/// Absolute tolerance for every normalization, unitarity and equality check.
inline constexpr double kTolerance = 1e-9;

/// Largest register the dense simulator will allocate.
inline constexpr std::size_t kMaxQubits = 26;

/// Bit mask of `qubit` inside an index over `num_qubits` qubits.
///
/// Basis labels are big-endian: qubit 0 is the most significant bit of the
/// index, so the bitstring "b0 b1 ... b(m-1)" has index sum b_q 2^(m-1-q).
inline std::uint64_t qubit_mask(std::size_t num_qubits, std::size_t qubit) {
  return std::uint64_t{1} << (num_qubits - 1 - qubit);
}

/// Dense pure state over `num_qubits` qubits.
class StateVector {
 public:
  /// Computational basis state |index>.
  static StateVector basis(std::size_t num_qubits, std::uint64_t index);

  /// Uniform superposition over every basis label.
  static StateVector uniform(std::size_t num_qubits);

  /// Takes ownership of `amplitudes`; their count must equal 2^num_qubits.
  /// No normalization is performed or required.
  StateVector(std::size_t num_qubits, std::vector<Complex> amplitudes);

  std::size_t num_qubits() const { return num_qubits_; }
  std::size_t dimension() const { return amplitudes_.size(); }

  std::span<const Complex> amplitudes() const { return amplitudes_; }
  std::span<Complex> amplitudes() { return amplitudes_; }

  const Complex& operator[](std::uint64_t index) const {
    return amplitudes_[index];
  }
  Complex& operator[](std::uint64_t index) { return amplitudes_[index]; }

  double norm() const;
  bool is_normalized(double tol = kTolerance) const;

  /// Tensor product: `*this` occupies the leading (more significant) qubits.
  StateVector tensor(const StateVector& low) const;

 private:
  std::size_t num_qubits_;
  std::vector<Complex> amplitudes_;
};

/// Probability distribution over the basis labels of a register.
class Distribution {
 public:
  /// Entries must lie in [0, 1] and sum to 1 within kTolerance.
  explicit Distribution(std::vector<double> probabilities);

  std::size_t size() const { return probabilities_.size(); }
  std::span<const double> probabilities() const { return probabilities_; }
  double operator[](std::size_t i) const { return probabilities_[i]; }

 private:
  std::vector<double> probabilities_;
};

/// Unitary matrix acting on an ordered list of target qubits.
///
/// The matrix is 2^t x 2^t, row-major, with the sub-index of the targets
/// read big-endian: targets[0] is the most significant bit of the row and
/// column labels.
class UnitaryOp {
 public:
  /// Throws std::invalid_argument on duplicate targets, a size mismatch, or
  /// a matrix that is not unitary within kTolerance.
  UnitaryOp(std::vector<std::size_t> targets, std::vector<Complex> matrix);

  static UnitaryOp hadamard(std::size_t qubit);
  static UnitaryOp pauli_x(std::size_t qubit);
  /// Real rotation exp(-i theta Y / 2).
  static UnitaryOp ry(std::size_t qubit, double theta);
  static UnitaryOp cnot(std::size_t control, std::size_t target);

  std::span<const std::size_t> targets() const { return targets_; }
  std::span<const Complex> matrix() const { return matrix_; }
  std::size_t dimension() const { return std::size_t{1} << targets_.size(); }
  Complex at(std::size_t row, std::size_t col) const {
    return matrix_[row * dimension() + col];
  }

  UnitaryOp adjoint() const;

 private:
  std::vector<std::size_t> targets_;
  std::vector<Complex> matrix_;
};

/// <a|b>, conjugate-linear in the first argument.
Complex inner_product(const StateVector& a, const StateVector& b);

/// (sum_x |a_x - b_x|^2)^(1/2).
double euclidean_distance(const StateVector& a, const StateVector& b);

/// Outcome distribution of a full computational-basis measurement.
/// Throws std::invalid_argument if the state is not normalized.
Distribution measure(const StateVector& s);

/// sum_x |d1(x) - d2(x)|, without the conventional factor 1/2.
double tv_distance(const Distribution& d1, const Distribution& d2);

/// Applies `u` to its targets, identity elsewhere.
StateVector apply(const StateVector& s, const UnitaryOp& u);
void apply_in_place(StateVector& s, const UnitaryOp& u);

/// Hadamard on each listed qubit.
void hadamard_in_place(StateVector& s, std::span<const std::size_t> qubits);

/// 2|u><u| - I on `qubits`, u the uniform superposition of that register
/// ("inversion about the average"), identity on the other qubits.
void reflect_about_uniform_in_place(StateVector& s,
                                    std::span<const std::size_t> qubits);

/// Throws unless every qubit is in range and the list has no duplicates.
void check_qubits(std::size_t num_qubits, std::span<const std::size_t> qubits);

/// Normalized state with i.i.d. complex Gaussian amplitudes (Haar random).
StateVector random_state(std::size_t num_qubits, Rng& rng);

/// Haar-random unitary on `targets`, via Gram-Schmidt on a Gaussian matrix.
UnitaryOp random_unitary(std::vector<std::size_t> targets, Rng& rng);

}  // namespace qql
