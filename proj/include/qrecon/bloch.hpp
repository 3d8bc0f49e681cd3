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

// Bloch-vector states r = 2y - 1, the quadratic information measure
// alpha_i = r_i^2, complementarity inequalities and the density-matrix map
// rho = (1 + r . sigma) / 2^N.

#pragma once

#include "qrecon/questions.hpp"

#include <string_view>
#include <vector>

namespace qrecon {

class BlochVector {
 public:
  explicit BlochVector(int n_qubits)
      : n_qubits_(n_qubits), r_(RVector::Zero(static_cast<Eigen::Index>(check(n_qubits)))) {}

  BlochVector(int n_qubits, RVector components)
      : n_qubits_(n_qubits), r_(std::move(components)) {
    if (static_cast<std::size_t>(r_.size()) != check(n_qubits)) {
      throw DimensionMismatch("Bloch vector for N=" + std::to_string(n_qubits) + " needs " +
                              std::to_string(bloch_dim(n_qubits)) + " components, got " +
                              std::to_string(r_.size()));
    }
  }

  /// Unit vector delta_q.
  static BlochVector delta(const QuestionIndex& q) {
    BlochVector v(q.n_qubits());
    v[q] = 1.0;
    return v;
  }
  static BlochVector delta(std::string_view label) { return delta(QuestionIndex::parse(label)); }

  int n_qubits() const { return n_qubits_; }
  Eigen::Index size() const { return r_.size(); }
  const RVector& components() const { return r_; }
  RVector& components() { return r_; }

  double operator[](const QuestionIndex& q) const {
    require_same_qubits(q.n_qubits(), n_qubits_);
    return r_(static_cast<Eigen::Index>(q.ordinal()));
  }
  double& operator[](const QuestionIndex& q) {
    require_same_qubits(q.n_qubits(), n_qubits_);
    return r_(static_cast<Eigen::Index>(q.ordinal()));
  }
  double at(std::string_view label) const { return (*this)[QuestionIndex::parse(label)]; }

  double squared_norm() const { return r_.squaredNorm(); }

  BlochVector operator+(const BlochVector& o) const {
    require_same_qubits(n_qubits_, o.n_qubits_);
    return BlochVector(n_qubits_, r_ + o.r_);
  }
  BlochVector operator-(const BlochVector& o) const {
    require_same_qubits(n_qubits_, o.n_qubits_);
    return BlochVector(n_qubits_, r_ - o.r_);
  }
  BlochVector operator-() const { return BlochVector(n_qubits_, -r_); }
  BlochVector operator*(double s) const { return BlochVector(n_qubits_, s * r_); }
  friend BlochVector operator*(double s, const BlochVector& v) { return v * s; }

 private:
  static std::size_t check(int n_qubits) {
    require_qubits(n_qubits);
    return bloch_dim(n_qubits);
  }

  int n_qubits_;
  RVector r_;
};

/// The maximal complementary sets used for information reports: the named
/// 6 pentagons + 20 triangles for N = 2, the enumerated cliques for N = 1, 3.
inline const std::vector<ComplementaritySet>& standard_sets(int n_qubits) {
  static const std::vector<ComplementaritySet> n1 = maximal_complementary_sets(1);
  static const std::vector<ComplementaritySet> n2 = named_maximal_sets_n2();
  static const std::vector<ComplementaritySet> empty;
  switch (n_qubits) {
    case 1: return n1;
    case 2: return n2;
    case 3: {
      static const std::vector<ComplementaritySet> n3 = maximal_complementary_sets(3);
      return n3;
    }
    default: return empty;
  }
}

inline double set_information(const BlochVector& r, const ComplementaritySet& set) {
  double acc = 0.0;
  for (const auto& q : set.members) acc += r[q] * r[q];
  return acc;
}

struct InformationReport {
  RVector per_question;  // alpha_i = r_i^2, indexed by ordinal
  double total = 0.0;
  std::vector<std::pair<ComplementaritySet, double>> per_set;
};

inline InformationReport information(const BlochVector& r,
                                     const std::vector<ComplementaritySet>& sets) {
  InformationReport rep;
  rep.per_question = r.components().array().square();
  rep.total = rep.per_question.sum();
  rep.per_set.reserve(sets.size());
  for (const auto& s : sets) rep.per_set.emplace_back(s, set_information(r, s));
  return rep;
}

inline InformationReport information(const BlochVector& r) {
  return information(r, standard_sets(r.n_qubits()));
}

/// I(Pent_a) for N = 2.
inline double pentagon_information(const BlochVector& r, int a) {
  require_same_qubits(r.n_qubits(), 2);
  return set_information(r, pentagon(a));
}

inline double triangle_information(const BlochVector& r, int t) {
  require_same_qubits(r.n_qubits(), 2);
  return set_information(r, triangle(t));
}

struct Violation {
  std::size_t set_index;
  double excess;  // bits above the 1-bit bound
};

/// Sets whose information exceeds 1 bit by more than `tol`.
inline std::vector<Violation> complementarity_check(const BlochVector& r,
                                                   const std::vector<ComplementaritySet>& sets,
                                                   double tol = kPositivityTol) {
  std::vector<Violation> out;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    const double excess = set_information(r, sets[i]) - 1.0;
    if (excess > tol) out.push_back({i, excess});
  }
  return out;
}

inline HermitianMatrix to_density(const BlochVector& r) {
  const auto dim = static_cast<Eigen::Index>(hilbert_dim(r.n_qubits()));
  CMatrix rho = CMatrix::Identity(dim, dim) + pauli_combination(r.n_qubits(), r.components());
  rho /= static_cast<double>(dim);
  return HermitianMatrix(std::move(rho));
}

/// r_i = tr(rho sigma_i). Assumes unit trace.
inline BlochVector from_density(int n_qubits, const CMatrix& rho) {
  require_qubits(n_qubits);
  if (static_cast<std::size_t>(rho.rows()) != hilbert_dim(n_qubits)) {
    throw DimensionMismatch("density matrix dimension does not match N");
  }
  return BlochVector(n_qubits, pauli_coordinates(n_qubits, rho) *
                                   static_cast<double>(hilbert_dim(n_qubits)));
}

inline BlochVector from_density(const HermitianMatrix& rho) {
  int n = 0;
  while (static_cast<Eigen::Index>(hilbert_dim(n)) < rho.dim()) ++n;
  return from_density(n, rho.matrix());
}

struct Legality {
  bool legal = false;
  double min_eigenvalue = 0.0;
};

/// Legal iff rho(r) is positive semidefinite up to `tol`.
inline Legality legality(const BlochVector& r, double tol = kPositivityTol) {
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(to_density(r).matrix(),
                                                Eigen::EigenvaluesOnly);
  const double lo = solver.eigenvalues().minCoeff();
  return Legality{lo >= -tol, lo};
}

/// Spectrum (descending) of 1 + sum_i r_i sigma_i over a mutually
/// complementary set; analytically {1 + |r|, 1 - |r|}.
inline RVector anticommuting_spectrum(const RVector& r_restricted,
                                      const ComplementaritySet& set) {
  if (static_cast<std::size_t>(r_restricted.size()) != set.members.size()) {
    throw DimensionMismatch("one coefficient per set member expected");
  }
  if (set.members.empty()) throw std::invalid_argument("empty set");
  if (!is_mutually_complementary(set.members)) {
    throw std::invalid_argument("set " + set.to_string() + " is not mutually complementary");
  }
  const int n = set.members.front().n_qubits();
  const auto dim = static_cast<Eigen::Index>(hilbert_dim(n));
  CMatrix s = CMatrix::Identity(dim, dim);
  for (std::size_t i = 0; i < set.members.size(); ++i) {
    s += r_restricted(static_cast<Eigen::Index>(i)) * pauli_matrix(set.members[i]).matrix();
  }
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(s, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().reverse();
}

}  // namespace qrecon
