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

// Multi-indexed Pauli algebra and the dense Hilbert-space kernel.
//
// A question Q_{mu_1...mu_N} is labelled by a QuestionIndex; its Hilbert-side
// image is sigma_{mu_1} (x) ... (x) sigma_{mu_N}. Qubit 1 is the most
// significant tensor factor, so sigma_{z_1} for N = 2 is diag(1, 1, -1, -1).
//
// Bloch components are ordered lexicographically in (mu_1, ..., mu_N) with
// 0 < x < y < z; that makes the ordinal of an index its base-4 value minus 1.

#pragma once

#include "qrecon/common.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <compare>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qrecon {

enum class Axis : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

constexpr char axis_char(Axis a) {
  constexpr std::array<char, 4> chars{'0', 'x', 'y', 'z'};
  return chars[static_cast<std::size_t>(a)];
}

constexpr std::optional<Axis> axis_from_char(char c) {
  switch (c) {
    case '0': return Axis::I;
    case 'x': case 'X': return Axis::X;
    case 'y': case 'Y': return Axis::Y;
    case 'z': case 'Z': return Axis::Z;
    default: return std::nullopt;
  }
}

/// Label of one binary question / one non-identity Pauli basis element.
class QuestionIndex {
 public:
  QuestionIndex(int n_qubits, std::uint32_t code) : n_qubits_(n_qubits), code_(code) {
    require_qubits(n_qubits);
    if (code == 0 || code > bloch_dim(n_qubits)) {
      throw std::invalid_argument("question code " + std::to_string(code) +
                                  " invalid for N=" + std::to_string(n_qubits));
    }
  }

  static QuestionIndex from_axes(const std::vector<Axis>& axes) {
    std::uint32_t code = 0;
    for (Axis a : axes) code = code * 4 + static_cast<std::uint32_t>(a);
    return QuestionIndex(static_cast<int>(axes.size()), code);
  }

  static QuestionIndex from_ordinal(int n_qubits, std::size_t ordinal) {
    return QuestionIndex(n_qubits, static_cast<std::uint32_t>(ordinal + 1));
  }

  /// Parses strings like "zx0"; the length fixes N.
  static QuestionIndex parse(std::string_view text) {
    if (text.empty() || text.size() > static_cast<std::size_t>(kMaxQubits)) {
      throw InputError("bad question index '" + std::string(text) + "'");
    }
    std::vector<Axis> axes;
    for (char c : text) {
      auto a = axis_from_char(c);
      if (!a) throw InputError("bad question index '" + std::string(text) + "'");
      axes.push_back(*a);
    }
    if (std::all_of(axes.begin(), axes.end(), [](Axis a) { return a == Axis::I; })) {
      throw InputError("the all-zero index is the identity, not a question");
    }
    return from_axes(axes);
  }

  int n_qubits() const { return n_qubits_; }
  std::uint32_t code() const { return code_; }
  std::size_t ordinal() const { return code_ - 1; }

  /// Axis on qubit `k` (0-based; k = 0 is qubit 1).
  Axis axis(int k) const {
    return static_cast<Axis>((code_ >> (2 * (n_qubits_ - 1 - k))) & 3u);
  }

  std::vector<Axis> axes() const {
    std::vector<Axis> out(static_cast<std::size_t>(n_qubits_));
    for (int k = 0; k < n_qubits_; ++k) out[static_cast<std::size_t>(k)] = axis(k);
    return out;
  }

  int weight() const {
    int w = 0;
    for (int k = 0; k < n_qubits_; ++k) w += axis(k) != Axis::I;
    return w;
  }

  /// Only I and z factors, i.e. the Pauli image is diagonal.
  bool is_diagonal() const {
    for (int k = 0; k < n_qubits_; ++k) {
      if (axis(k) == Axis::X || axis(k) == Axis::Y) return false;
    }
    return true;
  }

  std::string to_string() const {
    std::string s;
    for (int k = 0; k < n_qubits_; ++k) s.push_back(axis_char(axis(k)));
    return s;
  }

  auto operator<=>(const QuestionIndex&) const = default;

 private:
  int n_qubits_;
  std::uint32_t code_;
};

/// All 4^N - 1 questions in ordinal order.
inline std::vector<QuestionIndex> all_questions(int n_qubits) {
  std::vector<QuestionIndex> out;
  out.reserve(bloch_dim(n_qubits));
  for (std::size_t i = 0; i < bloch_dim(n_qubits); ++i) {
    out.push_back(QuestionIndex::from_ordinal(n_qubits, i));
  }
  return out;
}

/// Phase i^power, power in {0,1,2,3}.
struct Phase {
  int power = 0;

  Complex value() const {
    constexpr std::array<Complex, 4> table{Complex{1, 0}, Complex{0, 1}, Complex{-1, 0},
                                           Complex{0, -1}};
    return table[static_cast<std::size_t>(power & 3)];
  }
  bool is_real() const { return (power & 1) == 0; }
  Phase operator*(Phase other) const { return Phase{(power + other.power) & 3}; }
  bool operator==(const Phase&) const = default;
};

/// sigma_a . sigma_b = phase . sigma_result (result empty means identity).
struct PauliProduct {
  std::optional<QuestionIndex> result;
  Phase phase;
};

namespace detail {

/// Single-qubit product table: sigma_a sigma_b = i^power sigma_c.
constexpr std::pair<Axis, int> axis_product(Axis a, Axis b) {
  if (a == Axis::I) return {b, 0};
  if (b == Axis::I) return {a, 0};
  if (a == b) return {Axis::I, 0};
  const int ia = static_cast<int>(a);
  const int ib = static_cast<int>(b);
  const auto c = static_cast<Axis>(6 - ia - ib);
  // cyclic (x,y), (y,z), (z,x) -> +i
  const bool cyclic = (ib - ia + 3) % 3 == 1;
  return {c, cyclic ? 1 : 3};
}

inline std::uint32_t x_mask(const QuestionIndex& q) {
  std::uint32_t m = 0;
  for (int k = 0; k < q.n_qubits(); ++k) {
    const Axis a = q.axis(k);
    if (a == Axis::X || a == Axis::Y) m |= 1u << (q.n_qubits() - 1 - k);
  }
  return m;
}

inline std::uint32_t z_mask(const QuestionIndex& q) {
  std::uint32_t m = 0;
  for (int k = 0; k < q.n_qubits(); ++k) {
    const Axis a = q.axis(k);
    if (a == Axis::Z || a == Axis::Y) m |= 1u << (q.n_qubits() - 1 - k);
  }
  return m;
}

inline int y_count(const QuestionIndex& q) {
  int n = 0;
  for (int k = 0; k < q.n_qubits(); ++k) n += q.axis(k) == Axis::Y;
  return n;
}

/// sigma_q[row, row ^ x_mask]; every other entry in the row is zero.
inline Complex pauli_entry(std::uint32_t row, std::uint32_t xm, std::uint32_t zm, int ny) {
  const std::uint32_t col = row ^ xm;
  const int sign_power = std::popcount(col & zm) & 1 ? 2 : 0;
  return Phase{ny + sign_power}.value();
}

}  // namespace detail

inline PauliProduct symbolic_product(const QuestionIndex& a, const QuestionIndex& b) {
  require_same_qubits(a.n_qubits(), b.n_qubits());
  std::vector<Axis> axes(static_cast<std::size_t>(a.n_qubits()));
  int power = 0;
  for (int k = 0; k < a.n_qubits(); ++k) {
    auto [c, p] = detail::axis_product(a.axis(k), b.axis(k));
    axes[static_cast<std::size_t>(k)] = c;
    power += p;
  }
  PauliProduct out;
  out.phase = Phase{power & 3};
  if (a != b) out.result = QuestionIndex::from_axes(axes);
  return out;
}

inline bool anticommute(const QuestionIndex& a, const QuestionIndex& b) {
  return !symbolic_product(a, b).phase.is_real();
}

/// Dense complex Hermitian matrix; the invariant is checked on construction.
class HermitianMatrix {
 public:
  explicit HermitianMatrix(CMatrix m, double tol = kHermitianTol) : m_(std::move(m)) {
    if (m_.rows() != m_.cols()) throw std::invalid_argument("matrix is not square");
    const double dev = (m_ - m_.adjoint()).cwiseAbs().maxCoeff();
    if (dev > tol) {
      throw std::invalid_argument("matrix is not Hermitian (deviation " +
                                  std::to_string(dev) + ")");
    }
  }

  const CMatrix& matrix() const { return m_; }
  Eigen::Index dim() const { return m_.rows(); }
  Complex trace() const { return m_.trace(); }

 private:
  CMatrix m_;
};

inline HermitianMatrix pauli_matrix(const QuestionIndex& q) {
  const std::size_t dim = hilbert_dim(q.n_qubits());
  const std::uint32_t xm = detail::x_mask(q);
  const std::uint32_t zm = detail::z_mask(q);
  const int ny = detail::y_count(q);
  CMatrix m = CMatrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::uint32_t r = 0; r < dim; ++r) {
    m(r, r ^ xm) = detail::pauli_entry(r, xm, zm, ny);
  }
  return HermitianMatrix(std::move(m), 0.0);
}

/// tr(m . sigma_q) using the one-nonzero-per-row structure of sigma_q.
inline Complex trace_with_pauli(const CMatrix& m, const QuestionIndex& q) {
  const std::uint32_t xm = detail::x_mask(q);
  const std::uint32_t zm = detail::z_mask(q);
  const int ny = detail::y_count(q);
  Complex acc{0, 0};
  const auto dim = static_cast<std::uint32_t>(m.rows());
  for (std::uint32_t r = 0; r < dim; ++r) {
    // tr(m sigma) = sum_r sigma[r, r^xm] m[r^xm, r]
    acc += detail::pauli_entry(r, xm, zm, ny) * m(r ^ xm, r);
  }
  return acc;
}

/// sum_i v_i sigma_i for a real vector of length 4^N - 1.
inline CMatrix pauli_combination(int n_qubits, const RVector& coeffs) {
  if (static_cast<std::size_t>(coeffs.size()) != bloch_dim(n_qubits)) {
    throw DimensionMismatch("coefficient count does not match 4^N-1");
  }
  const std::size_t dim = hilbert_dim(n_qubits);
  CMatrix m = CMatrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::size_t i = 0; i < bloch_dim(n_qubits); ++i) {
    const double c = coeffs(static_cast<Eigen::Index>(i));
    if (c == 0.0) continue;
    const auto q = QuestionIndex::from_ordinal(n_qubits, i);
    const std::uint32_t xm = detail::x_mask(q);
    const std::uint32_t zm = detail::z_mask(q);
    const int ny = detail::y_count(q);
    for (std::uint32_t r = 0; r < dim; ++r) {
      m(r, r ^ xm) += c * detail::pauli_entry(r, xm, zm, ny);
    }
  }
  return m;
}

/// Components tr(m sigma_i) / 2^N for all i (real part).
inline RVector pauli_coordinates(int n_qubits, const CMatrix& m) {
  RVector out(static_cast<Eigen::Index>(bloch_dim(n_qubits)));
  const double norm = static_cast<double>(hilbert_dim(n_qubits));
  for (std::size_t i = 0; i < bloch_dim(n_qubits); ++i) {
    out(static_cast<Eigen::Index>(i)) =
        trace_with_pauli(m, QuestionIndex::from_ordinal(n_qubits, i)).real() / norm;
  }
  return out;
}

struct Eigendecomposition {
  RVector eigenvalues;  // descending
  CMatrix unitary;      // columns are eigenvectors, det = 1
};

/// Eigen-decomposition of a Hermitian matrix, eigenvalues descending, with the
/// eigenvector matrix rephased into SU(dim).
inline Eigendecomposition diagonalize(const HermitianMatrix& h) {
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(h.matrix());
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigensolver failed");
  const Eigen::Index n = h.dim();
  Eigendecomposition out;
  out.eigenvalues = solver.eigenvalues().reverse();
  out.unitary = solver.eigenvectors().rowwise().reverse();
  const Complex det = out.unitary.determinant();
  const Complex fix = std::polar(1.0, -std::arg(det) / static_cast<double>(n));
  out.unitary *= fix;
  return out;
}

/// exp(-i t h), built from the eigendecomposition so it is unitary to rounding.
inline CMatrix unitary_exp(const HermitianMatrix& h, double t) {
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(h.matrix());
  const CMatrix& v = solver.eigenvectors();
  CVector phases(h.dim());
  for (Eigen::Index k = 0; k < h.dim(); ++k) {
    phases(k) = std::polar(1.0, -t * solver.eigenvalues()(k));
  }
  return v * phases.asDiagonal() * v.adjoint();
}

}  // namespace qrecon
