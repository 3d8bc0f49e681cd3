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

// Question vectors, the Born rule y = (1 + q.r)/2, Heisenberg/Schroedinger
// duality and a single-shot interrogation simulator with projective updates.

#pragma once

#include "qrecon/states.hpp"

#include <string>
#include <vector>

namespace qrecon {

/// Raised when a Born probability leaves [0, 1]: the question/state pair is illegal.
class IllegalPair : public InputError {
 public:
  using InputError::InputError;
};

struct QuestionCheck {
  bool ok = false;
  std::string reason;

  explicit operator bool() const { return ok; }
};

/// q is a question vector iff |q| = 1 and q.sigma has spectrum +-1 with equal
/// multiplicities.
inline QuestionCheck is_question(int n_qubits, const RVector& v, double tol = kQuestionTol) {
  require_qubits(n_qubits);
  if (static_cast<std::size_t>(v.size()) != bloch_dim(n_qubits)) {
    return {false, "expected " + std::to_string(bloch_dim(n_qubits)) + " components"};
  }
  const double norm2 = v.squaredNorm();
  if (std::abs(norm2 - 1.0) > tol) {
    return {false, "squared length " + std::to_string(norm2) + " != 1"};
  }
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(pauli_combination(n_qubits, v),
                                                Eigen::EigenvaluesOnly);
  std::size_t plus = 0;
  for (Eigen::Index k = 0; k < solver.eigenvalues().size(); ++k) {
    const double e = solver.eigenvalues()(k);
    if (std::abs(std::abs(e) - 1.0) > std::sqrt(tol)) {
      return {false, "eigenvalue " + std::to_string(e) + " is not +-1"};
    }
    plus += e > 0;
  }
  if (plus != hilbert_dim(n_qubits) / 2) {
    return {false, "unbalanced spectrum (" + std::to_string(plus) + " positive eigenvalues)"};
  }
  return {true, ""};
}

class QuestionVector {
 public:
  /// Validated question vector; throws InputError otherwise.
  QuestionVector(int n_qubits, RVector components, double tol = kQuestionTol)
      : n_qubits_(n_qubits), q_(std::move(components)) {
    if (static_cast<std::size_t>(q_.size()) != bloch_dim(n_qubits)) {
      throw DimensionMismatch("question vector needs " + std::to_string(bloch_dim(n_qubits)) +
                              " components");
    }
    const QuestionCheck c = is_question(n_qubits, q_, tol);
    if (!c) throw InputError("not a question vector: " + c.reason);
  }

  /// delta_q for a basis question.
  explicit QuestionVector(const QuestionIndex& q)
      : n_qubits_(q.n_qubits()), q_(BlochVector::delta(q).components()) {}

  static QuestionVector parse(std::string_view label) {
    return QuestionVector(QuestionIndex::parse(label));
  }

  int n_qubits() const { return n_qubits_; }
  const RVector& components() const { return q_; }

  /// Image T.q under an evolution (still a question vector).
  QuestionVector transformed(const RMatrix& t) const {
    return QuestionVector(n_qubits_, t * q_, 1e-8);
  }

  /// Projector (1 + s q.sigma) / 2 for answer s = +1 (yes) or -1 (no).
  CMatrix projector(int answer) const {
    const auto dim = static_cast<Eigen::Index>(hilbert_dim(n_qubits_));
    return 0.5 * (CMatrix::Identity(dim, dim) +
                  static_cast<double>(answer) * pauli_combination(n_qubits_, q_));
  }

 private:
  int n_qubits_;
  RVector q_;
};

/// y(q | r) = (1 + q.r) / 2; out-of-range values raise IllegalPair.
inline double born(const QuestionVector& q, const BlochVector& r, double tol = 1e-12) {
  require_same_qubits(q.n_qubits(), r.n_qubits());
  const double y = 0.5 * (1.0 + q.components().dot(r.components()));
  if (y < -tol || y > 1.0 + tol) {
    throw IllegalPair("Born probability " + std::to_string(y) + " outside [0, 1]");
  }
  return y;
}

/// tr(P_q rho(r)).
inline double born_trace(const QuestionVector& q, const BlochVector& r) {
  require_same_qubits(q.n_qubits(), r.n_qubits());
  return (q.projector(1) * to_density(r).matrix()).trace().real();
}

struct DualityResidual {
  double heisenberg = 0.0;    // |y(q | T r) - y(T^T q | r)|
  double simultaneous = 0.0;  // |y(T q | T r) - y(q | r)|
};

inline DualityResidual dual_evolution_check(const QuestionVector& q, const BlochVector& r,
                                            const EvolutionMatrix& t) {
  const double forward = born(q, t.apply(r));
  const double backward = born(q.transformed(t.matrix.transpose()), r);
  const double both = born(q.transformed(t.matrix), t.apply(r));
  return {std::abs(forward - backward), std::abs(both - born(q, r))};
}

/// A uniformly random question vector T.delta_{z1} from the generated group.
inline QuestionVector random_question(int n_qubits, Rng& rng) {
  const CMatrix u = haar_unitary(hilbert_dim(n_qubits), rng);
  const QuestionIndex z1 = QuestionIndex::from_axes([&] {
    std::vector<Axis> a(static_cast<std::size_t>(n_qubits), Axis::I);
    a[0] = Axis::Z;
    return a;
  }());
  return QuestionVector(n_qubits, induced_evolution(u, n_qubits).apply(BlochVector::delta(z1))
                                      .components(),
                        1e-8);
}

// ---------------------------------------------------------------------------
// Interrogation.

struct InterrogationRecord {
  std::vector<QuestionVector> asked;
  std::vector<int> answers;             // +1 yes, -1 no
  std::vector<double> yes_probability;  // before each question
  BlochVector posterior;
};

/// Projective (Lueders) update rho -> P rho P / tr(P rho).
inline BlochVector project(const BlochVector& r, const QuestionVector& q, int answer) {
  const CMatrix p = q.projector(answer);
  const CMatrix rho = to_density(r).matrix();
  const CMatrix out = p * rho * p;
  const double norm = out.trace().real();
  if (norm < 1e-14) throw std::domain_error("projection onto a zero-probability answer");
  CMatrix h = out / norm;
  h = 0.5 * (h + h.adjoint()).eval();
  return from_density(r.n_qubits(), h);
}

inline InterrogationRecord interrogate(const BlochVector& prior,
                                       const std::vector<QuestionVector>& questions, Rng& rng) {
  if (!legality(prior).legal) throw InputError("prior is not a legal state");
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  InterrogationRecord rec{{}, {}, {}, prior};
  for (const auto& q : questions) {
    require_same_qubits(q.n_qubits(), prior.n_qubits());
    const double y = born(q, rec.posterior, 1e-9);
    int answer;
    if (y < 1e-14) {
      answer = -1;
    } else if (y > 1.0 - 1e-14) {
      answer = 1;
    } else {
      answer = unit(rng) < y ? 1 : -1;
    }
    rec.posterior = project(rec.posterior, q, answer);
    rec.asked.push_back(q);
    rec.answers.push_back(answer);
    rec.yes_probability.push_back(y);
  }
  return rec;
}

inline InterrogationRecord interrogate(const BlochVector& prior,
                                       const std::vector<QuestionVector>& questions,
                                       std::uint64_t seed) {
  Rng rng(seed);
  return interrogate(prior, questions, rng);
}

struct ShotStatistics {
  std::size_t shots = 0;
  std::vector<std::size_t> yes_counts;  // per question position

  double frequency(std::size_t k) const {
    return static_cast<double>(yes_counts.at(k)) / static_cast<double>(shots);
  }
};

/// Repeats an interrogation `shots` times with independent streams.
inline ShotStatistics run_shots(const BlochVector& prior,
                                const std::vector<QuestionVector>& questions, std::size_t shots,
                                std::uint64_t seed,
                                std::vector<InterrogationRecord>* records = nullptr) {
  ShotStatistics st{shots, std::vector<std::size_t>(questions.size(), 0)};
  for (std::size_t s = 0; s < shots; ++s) {
    Rng rng = stream(seed, s);
    InterrogationRecord rec = interrogate(prior, questions, rng);
    for (std::size_t k = 0; k < rec.answers.size(); ++k) st.yes_counts[k] += rec.answers[k] > 0;
    if (records) records->push_back(std::move(rec));
  }
  return st;
}

}  // namespace qrecon
