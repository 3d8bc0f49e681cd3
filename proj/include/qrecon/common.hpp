// Copyright 2026 The qrecon Authors
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

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace qrecon {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

/// Largest qubit count for which dense 2^N x 2^N matrices are built.
inline constexpr int kMaxQubits = 6;

inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kPositivityTol = 1e-9;
inline constexpr double kQuestionTol = 1e-9;

/// Raised when user-supplied data (files, vectors) is malformed or illegal.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when objects of different qubit counts are combined.
class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline void require_qubits(int n_qubits, int max_qubits = kMaxQubits) {
  if (n_qubits < 1 || n_qubits > max_qubits) {
    throw std::out_of_range("qubit count " + std::to_string(n_qubits) +
                            " outside [1, " + std::to_string(max_qubits) + "]");
  }
}

inline void require_same_qubits(int a, int b) {
  if (a != b) {
    throw DimensionMismatch("qubit counts differ: " + std::to_string(a) + " vs " +
                            std::to_string(b));
  }
}

/// 2^N
constexpr std::size_t hilbert_dim(int n_qubits) { return std::size_t{1} << n_qubits; }

/// 4^N - 1, the number of questions in the informationally complete set.
constexpr std::size_t bloch_dim(int n_qubits) {
  return (std::size_t{1} << (2 * n_qubits)) - 1;
}

}  // namespace qrecon
