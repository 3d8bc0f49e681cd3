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

// The psu(2^N) layer in Bloch space: pentagon swap generators for two qubits,
// adjoint (structure-constant) generators for any N, pair embeddings,
// exponentials and the Lie-algebra / Hilbert-space consistency checks.

#pragma once

#include "qrecon/bloch.hpp"
#include "qrecon/random.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <array>
#include <cmath>
#include <numbers>
#include <string>
#include <tuple>
#include <vector>

namespace qrecon {

/// Real antisymmetric (4^N-1) x (4^N-1) Lie-algebra element.
struct SwapGenerator {
  int n_qubits = 0;
  RMatrix matrix;
  std::string label;

  /// Upper-triangular nonzeros as (i, j, value).
  std::vector<std::tuple<QuestionIndex, QuestionIndex, double>> nonzeros(double tol = 0.0) const {
    std::vector<std::tuple<QuestionIndex, QuestionIndex, double>> out;
    for (Eigen::Index i = 0; i < matrix.rows(); ++i) {
      for (Eigen::Index j = i + 1; j < matrix.cols(); ++j) {
        if (std::abs(matrix(i, j)) > tol) {
          out.emplace_back(QuestionIndex::from_ordinal(n_qubits, static_cast<std::size_t>(i)),
                           QuestionIndex::from_ordinal(n_qubits, static_cast<std::size_t>(j)),
                           matrix(i, j));
        }
      }
    }
    return out;
  }
};

/// Orthogonal evolution r -> T r.
struct EvolutionMatrix {
  int n_qubits = 0;
  RMatrix matrix;
  double t = 0.0;

  BlochVector apply(const BlochVector& r) const {
    require_same_qubits(n_qubits, r.n_qubits());
    return BlochVector(n_qubits, matrix * r.components());
  }
  RVector apply(const RVector& v) const { return matrix * v; }

  EvolutionMatrix operator*(const EvolutionMatrix& o) const {
    require_same_qubits(n_qubits, o.n_qubits);
    return EvolutionMatrix{n_qubits, matrix * o.matrix, 0.0};
  }
  EvolutionMatrix inverse() const { return EvolutionMatrix{n_qubits, matrix.transpose(), -t}; }

  double orthogonality_residual() const {
    const auto n = matrix.rows();
    return (matrix.transpose() * matrix - RMatrix::Identity(n, n)).cwiseAbs().maxCoeff();
  }

  static EvolutionMatrix identity(int n_qubits) {
    const auto n = static_cast<Eigen::Index>(bloch_dim(n_qubits));
    return EvolutionMatrix{n_qubits, RMatrix::Identity(n, n), 0.0};
  }
};

namespace detail {

struct SwapTerm {
  const char* i;
  const char* j;
  double value;
};

struct SwapEntry {
  int a;
  int b;
  std::array<SwapTerm, 4> terms;
};

// Transcribed pentagon-pair generators; each term is value * (e_ij - e_ji).
inline const std::array<SwapEntry, 15>& swap_table() {
  static const std::array<SwapEntry, 15> table{{
      // entangling swaps (overlap is a composite question)
      {1, 2, {{{"y0", "zx", 1}, {"xy", "0z", 1}, {"z0", "yx", -1}, {"xz", "0y", -1}}}},
      {1, 4, {{{"z0", "yy", 1}, {"xx", "0z", 1}, {"y0", "zy", -1}, {"xz", "0x", -1}}}},
      {1, 6, {{{"y0", "zz", 1}, {"xx", "0y", 1}, {"z0", "yz", -1}, {"xy", "0x", -1}}}},
      {2, 3, {{{"0y", "yz", 1}, {"zx", "x0", 1}, {"0z", "yy", -1}, {"xx", "z0", -1}}}},
      {2, 5, {{{"0y", "zz", 1}, {"xx", "y0", 1}, {"0z", "zy", -1}, {"yx", "x0", -1}}}},
      {3, 4, {{{"yz", "0x", 1}, {"z0", "xy", 1}, {"yx", "0z", -1}, {"x0", "zy", -1}}}},
      {3, 6, {{{"yy", "0x", 1}, {"x0", "zz", 1}, {"yx", "0y", -1}, {"z0", "xz", -1}}}},
      {4, 5, {{{"0x", "zz", 1}, {"yy", "x0", 1}, {"0z", "zx", -1}, {"xy", "y0", -1}}}},
      {5, 6, {{{"zy", "0x", 1}, {"y0", "xz", 1}, {"zx", "0y", -1}, {"x0", "yz", -1}}}},
      // product swaps (overlap is an individual question)
      {1, 3, {{{"x0", "y0", 1}, {"yz", "xz", -1}, {"yy", "xy", -1}, {"yx", "xx", -1}}}},
      {1, 5, {{{"z0", "x0", 1}, {"xz", "zz", -1}, {"xy", "zy", -1}, {"xx", "zx", -1}}}},
      {2, 4, {{{"0y", "0x", 1}, {"zx", "zy", -1}, {"yx", "yy", -1}, {"xx", "xy", -1}}}},
      {2, 6, {{{"0z", "0x", 1}, {"zx", "zz", -1}, {"yx", "yz", -1}, {"xx", "xz", -1}}}},
      {3, 5, {{{"z0", "y0", 1}, {"yz", "zz", -1}, {"yy", "zy", -1}, {"yx", "zx", -1}}}},
      {4, 6, {{{"0z", "0y", 1}, {"zy", "zz", -1}, {"yy", "yz", -1}, {"xy", "xz", -1}}}},
  }};
  return table;
}

inline void add_antisymmetric(RMatrix& m, const QuestionIndex& i, const QuestionIndex& j,
                              double value) {
  const auto a = static_cast<Eigen::Index>(i.ordinal());
  const auto b = static_cast<Eigen::Index>(j.ordinal());
  m(a, b) += value;
  m(b, a) -= value;
}

}  // namespace detail

/// G^{Pent_a, Pent_b} for two qubits, a < b.
inline SwapGenerator swap_generator(int a, int b) {
  if (a >= b) throw std::invalid_argument("swap_generator expects a < b");
  for (const auto& e : detail::swap_table()) {
    if (e.a != a || e.b != b) continue;
    SwapGenerator g{2, RMatrix::Zero(15, 15),
                    "Pent" + std::to_string(a) + ",Pent" + std::to_string(b)};
    for (const auto& t : e.terms) {
      detail::add_antisymmetric(g.matrix, QuestionIndex::parse(t.i), QuestionIndex::parse(t.j),
                                t.value);
    }
    return g;
  }
  throw std::out_of_range("no pentagon pair (" + std::to_string(a) + "," + std::to_string(b) + ")");
}

/// All 15 pentagon pairs (a < b) in lexicographic order.
inline std::vector<std::pair<int, int>> pentagon_pairs() {
  std::vector<std::pair<int, int>> out;
  for (int a = 1; a <= kPentagonCount; ++a) {
    for (int b = a + 1; b <= kPentagonCount; ++b) out.emplace_back(a, b);
  }
  return out;
}

/// Adjoint generator (G^q)_{jk} = Re(tr([sigma_j, sigma_k] sigma_q) / (2i 2^N)).
/// With sigma_j sigma_k = p sigma_q the entry is Im(p), so entries are in {-1, 0, 1}.
inline SwapGenerator adjoint_generator(const QuestionIndex& q) {
  const int n = q.n_qubits();
  require_qubits(n, 4);
  const auto dim = static_cast<Eigen::Index>(bloch_dim(n));
  SwapGenerator g{n, RMatrix::Zero(dim, dim), "ad(" + q.to_string() + ")"};
  const auto qs = all_questions(n);
  for (const auto& j : qs) {
    // sigma_j sigma_k ~ sigma_q  <=>  k = j * q up to phase
    const PauliProduct jq = symbolic_product(j, q);
    if (!jq.result || jq.phase.is_real()) continue;
    const QuestionIndex& k = *jq.result;
    const PauliProduct jk = symbolic_product(j, k);
    g.matrix(static_cast<Eigen::Index>(j.ordinal()), static_cast<Eigen::Index>(k.ordinal())) =
        jk.phase.value().imag();
  }
  return g;
}

/// The full adjoint basis, one generator per question in ordinal order.
inline std::vector<SwapGenerator> adjoint_basis(int n_qubits) {
  std::vector<SwapGenerator> out;
  for (const auto& q : all_questions(n_qubits)) out.push_back(adjoint_generator(q));
  return out;
}

/// Promotes a two-qubit generator to N qubits acting on qubits (first, second)
/// (1-based, first < second); all other slots carry a Kronecker delta and the
/// (00) block of the two-qubit generator is zero.
inline SwapGenerator embed_pair_generator(const SwapGenerator& g, int first, int second,
                                          int n_qubits) {
  require_same_qubits(g.n_qubits, 2);
  require_qubits(n_qubits, 4);
  if (first < 1 || first >= second || second > n_qubits) {
    throw std::invalid_argument("qubit pair must satisfy 1 <= first < second <= N");
  }
  const auto dim = static_cast<Eigen::Index>(bloch_dim(n_qubits));
  SwapGenerator out{n_qubits, RMatrix::Zero(dim, dim),
                    g.label + "@(" + std::to_string(first) + "," + std::to_string(second) + ")"};
  const auto qs = all_questions(n_qubits);
  const int s1 = first - 1;
  const int s2 = second - 1;
  auto pair_code = [&](const QuestionIndex& q) {
    return static_cast<std::uint32_t>(q.axis(s1)) * 4 + static_cast<std::uint32_t>(q.axis(s2));
  };
  auto rest_equal = [&](const QuestionIndex& a, const QuestionIndex& b) {
    for (int k = 0; k < n_qubits; ++k) {
      if (k != s1 && k != s2 && a.axis(k) != b.axis(k)) return false;
    }
    return true;
  };
  for (const auto& mu : qs) {
    const std::uint32_t cm = pair_code(mu);
    if (cm == 0) continue;
    for (const auto& nu : qs) {
      const std::uint32_t cn = pair_code(nu);
      if (cn == 0 || !rest_equal(mu, nu)) continue;
      out.matrix(static_cast<Eigen::Index>(mu.ordinal()), static_cast<Eigen::Index>(nu.ordinal())) =
          g.matrix(static_cast<Eigen::Index>(cm - 1), static_cast<Eigen::Index>(cn - 1));
    }
  }
  return out;
}

/// Diagonal projector onto the rows where g is nonzero.
inline RMatrix support_projector(const RMatrix& g, double tol = 1e-12) {
  RMatrix p = RMatrix::Zero(g.rows(), g.cols());
  for (Eigen::Index i = 0; i < g.rows(); ++i) {
    if (g.row(i).cwiseAbs().maxCoeff() > tol) p(i, i) = 1.0;
  }
  return p;
}

/// exp(t G) = (cos t - 1) P + sin t G + 1 for a single basis generator,
/// where P projects onto the swapped questions.
inline EvolutionMatrix closed_form_exp(const SwapGenerator& g, double t) {
  const RMatrix& m = g.matrix;
  const RMatrix p = support_projector(m);
  if ((m * m + p).cwiseAbs().maxCoeff() > 1e-12) {
    throw std::invalid_argument("generator " + g.label +
                                " is not a single swap (G^2 != -P on its support)");
  }
  const auto n = m.rows();
  EvolutionMatrix out{g.n_qubits, (std::cos(t) - 1.0) * p + std::sin(t) * m, t};
  out.matrix += RMatrix::Identity(n, n);
  return out;
}

/// exp(t g) for any real antisymmetric g (Pade-13 scaling and squaring).
inline EvolutionMatrix generic_exp(const RMatrix& g, double t, int n_qubits) {
  if ((g + g.transpose()).cwiseAbs().maxCoeff() > 1e-12) {
    throw std::invalid_argument("generic_exp expects an antisymmetric matrix");
  }
  const RMatrix scaled = t * g;
  return EvolutionMatrix{n_qubits, scaled.exp(), t};
}

inline EvolutionMatrix generic_exp(const SwapGenerator& g, double t) {
  return generic_exp(g.matrix, t, g.n_qubits);
}

/// T_ij = tr(sigma_i U sigma_j U^dagger) / 2^N.
inline EvolutionMatrix induced_evolution(const CMatrix& u, int n_qubits, double t = 0.0) {
  require_qubits(n_qubits);
  if (static_cast<std::size_t>(u.rows()) != hilbert_dim(n_qubits)) {
    throw DimensionMismatch("unitary dimension does not match N");
  }
  const auto dim = static_cast<Eigen::Index>(bloch_dim(n_qubits));
  EvolutionMatrix out{n_qubits, RMatrix(dim, dim), t};
  for (Eigen::Index j = 0; j < dim; ++j) {
    const auto qj = QuestionIndex::from_ordinal(n_qubits, static_cast<std::size_t>(j));
    const CMatrix conj = u * pauli_matrix(qj).matrix() * u.adjoint();
    out.matrix.col(j) = pauli_coordinates(n_qubits, conj);
  }
  return out;
}

/// Bloch-space generator G with exp(tG) induced by exp(-i t h):
/// G = -2 sum_q c_q G^q where h = sum_q c_q sigma_q (+ trace part).
inline RMatrix hamiltonian_generator(const HermitianMatrix& h, int n_qubits) {
  const RVector c = pauli_coordinates(n_qubits, h.matrix());
  const auto dim = static_cast<Eigen::Index>(bloch_dim(n_qubits));
  RMatrix g = RMatrix::Zero(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    if (c(i) == 0.0) continue;
    g -= 2.0 * c(i) *
         adjoint_generator(QuestionIndex::from_ordinal(n_qubits, static_cast<std::size_t>(i)))
             .matrix;
  }
  return g;
}

// ---------------------------------------------------------------------------
// Consistency checks.

struct CoincidenceEntry {
  int a = 0;
  int b = 0;
  QuestionIndex overlap{2, 1};
  int sign = 0;  // adjoint = sign * swap
  double max_deviation = 0.0;
};

/// Compares ad(q) with G^{Pent_a,Pent_b} for q the pentagon overlap, recording
/// the sign that makes them equal.
inline std::vector<CoincidenceEntry> coincidence_table() {
  std::vector<CoincidenceEntry> out;
  for (auto [a, b] : pentagon_pairs()) {
    const QuestionIndex q = pentagon_overlap(a, b);
    const RMatrix ad = adjoint_generator(q).matrix;
    const RMatrix sw = swap_generator(a, b).matrix;
    const double plus = (ad - sw).cwiseAbs().maxCoeff();
    const double minus = (ad + sw).cwiseAbs().maxCoeff();
    out.push_back({a, b, q, plus <= minus ? 1 : -1, std::min(plus, minus)});
  }
  return out;
}

struct LieClosureReport {
  int n_qubits = 0;
  std::size_t pairs = 0;
  std::size_t commuting_pairs = 0;
  double max_residual = 0.0;           // |[Ga,Gb] - sum_c coef_c G^c|
  double max_coefficient_error = 0.0;  // |coef_c - (-(G^c)_{ab})|
};

/// [G^a, G^b] = -sum_c (G^c)_{ab} G^c for the adjoint basis; expansion
/// coefficients are obtained by Frobenius projection and compared.
inline LieClosureReport lie_closure_check(int n_qubits) {
  require_qubits(n_qubits, 3);
  const auto basis = adjoint_basis(n_qubits);
  const std::size_t n = basis.size();
  std::vector<double> norms(n);
  for (std::size_t c = 0; c < n; ++c) norms[c] = basis[c].matrix.squaredNorm();

  LieClosureReport rep;
  rep.n_qubits = n_qubits;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      const RMatrix comm =
          basis[a].matrix * basis[b].matrix - basis[b].matrix * basis[a].matrix;
      RMatrix expansion = RMatrix::Zero(comm.rows(), comm.cols());
      for (std::size_t c = 0; c < n; ++c) {
        const double coef = (comm.array() * basis[c].matrix.array()).sum() / norms[c];
        const double expected =
            -basis[c].matrix(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b));
        rep.max_coefficient_error = std::max(rep.max_coefficient_error, std::abs(coef - expected));
        if (coef != 0.0) expansion += coef * basis[c].matrix;
      }
      rep.max_residual = std::max(rep.max_residual, (comm - expansion).cwiseAbs().maxCoeff());
      rep.commuting_pairs += comm.cwiseAbs().maxCoeff() <= 1e-12;
      ++rep.pairs;
    }
  }
  return rep;
}

/// sum_{i in Pent_a, j} r_i g_ij r_j.
inline double conservation_residual(const BlochVector& r, const RMatrix& g, int pent) {
  require_same_qubits(r.n_qubits(), 2);
  const RVector gr = g * r.components();
  double acc = 0.0;
  for (const auto& q : pentagon(pent).members) {
    acc += r[q] * gr(static_cast<Eigen::Index>(q.ordinal()));
  }
  return acc;
}

inline double conservation_residual(const BlochVector& r, const SwapGenerator& g, int pent) {
  require_same_qubits(g.n_qubits, 2);
  return conservation_residual(r, g.matrix, pent);
}

/// Product of `factors` single-generator exponentials with random generators
/// from `basis` and random angles: a random element of the generated group.
inline EvolutionMatrix random_generated_element(const std::vector<SwapGenerator>& basis, Rng& rng,
                                                int factors = 12) {
  if (basis.empty()) throw std::invalid_argument("empty generator basis");
  std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  EvolutionMatrix t = EvolutionMatrix::identity(basis.front().n_qubits);
  for (int k = 0; k < factors; ++k) {
    const auto& g = basis[pick(rng)];
    t = closed_form_exp(g, angle(rng)) * t;
  }
  return t;
}

/// The 15 pentagon swap generators in pentagon_pairs() order.
inline const std::vector<SwapGenerator>& swap_basis() {
  static const std::vector<SwapGenerator> basis = [] {
    std::vector<SwapGenerator> out;
    for (auto [a, b] : pentagon_pairs()) out.push_back(swap_generator(a, b));
    return out;
  }();
  return basis;
}

struct VonNeumannReport {
  double orthogonality_residual = 0.0;  // |T^T T - 1|
  double max_state_deviation = 0.0;     // |rho(T r) - U rho U^dagger|
  double max_derivative_error = 0.0;    // |finite-difference d rho/dt + i[h, rho]|
  std::size_t samples = 0;
};

/// Compares Bloch-space evolution induced by U = exp(-i h t) with the
/// Hilbert-space evolution for random pure states, including a central
/// finite difference of rho(t) taken along the Bloch path.
inline VonNeumannReport von_neumann_consistency(const HermitianMatrix& h, double t,
                                                std::size_t samples = 50,
                                                std::uint64_t seed = 42,
                                                double fd_step = 1e-5) {
  int n = 0;
  while (static_cast<Eigen::Index>(hilbert_dim(n)) < h.dim()) ++n;
  require_qubits(n, 3);
  if (std::abs(h.trace()) > 1e-10) {
    throw std::invalid_argument("Hamiltonian must be traceless");
  }
  const CMatrix u = unitary_exp(h, t);
  const EvolutionMatrix tm = induced_evolution(u, n, t);
  const EvolutionMatrix tp = induced_evolution(unitary_exp(h, t + fd_step), n);
  const EvolutionMatrix tn = induced_evolution(unitary_exp(h, t - fd_step), n);

  VonNeumannReport rep;
  rep.orthogonality_residual = tm.orthogonality_residual();
  rep.samples = samples;
  for (std::size_t s = 0; s < samples; ++s) {
    Rng rng = stream(seed, s);
    const CVector psi = haar_state(hilbert_dim(n), rng);
    const CMatrix rho0 = psi * psi.adjoint();
    const BlochVector r = from_density(n, rho0);

    const CMatrix rho_t = to_density(tm.apply(r)).matrix();
    const CMatrix direct = u * rho0 * u.adjoint();
    rep.max_state_deviation = std::max(rep.max_state_deviation, (rho_t - direct).cwiseAbs().maxCoeff());

    const CMatrix fd = (to_density(tp.apply(r)).matrix() - to_density(tn.apply(r)).matrix()) /
                       (2.0 * fd_step);
    const CMatrix rhs = Complex(0, -1) * (h.matrix() * rho_t - rho_t * h.matrix());
    rep.max_derivative_error = std::max(rep.max_derivative_error, (fd - rhs).cwiseAbs().maxCoeff());
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Replay of the sign fixing for a pentagon-pair swap ansatz.

struct SwapAnsatz {
  int a = 1;
  int b = 2;
  // G = e(t0) + s1 e(t1) + s2 e(t2) + s3 e(t3) - transpose
  std::array<std::pair<QuestionIndex, QuestionIndex>, 4> terms;
};

inline RMatrix ansatz_matrix(const SwapAnsatz& ansatz, const std::array<int, 3>& signs) {
  RMatrix g = RMatrix::Zero(15, 15);
  for (std::size_t k = 0; k < 4; ++k) {
    const double s = k == 0 ? 1.0 : static_cast<double>(signs[k - 1]);
    detail::add_antisymmetric(g, ansatz.terms[k].first, ansatz.terms[k].second, s);
  }
  return g;
}

/// A random information configuration where `pivot` is known to be 'yes':
/// every question complementary to the pivot carries no information and each
/// compatible pair (q, c) with sigma_q sigma_pivot = s sigma_c obeys the XNOR
/// correlation r_c = s r_q.
inline BlochVector pivot_configuration(const QuestionIndex& pivot, Rng& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  BlochVector r(pivot.n_qubits());
  r[pivot] = 1.0;
  for (const auto& q : all_questions(pivot.n_qubits())) {
    if (q == pivot || anticommute(q, pivot)) continue;
    const PauliProduct p = symbolic_product(q, pivot);
    const QuestionIndex& c = *p.result;
    if (c < q) continue;  // the partner fixes this one
    const double v = u(rng);
    r[q] = v;
    r[c] = (p.phase.power == 0 ? 1.0 : -1.0) * v;
  }
  return r;
}

/// Screens all 8 relative-sign assignments of `ansatz` against the conservation
/// of both swapped pentagons on random configurations for each pivot; returns
/// the surviving assignments.
inline std::vector<std::array<int, 3>> derive_swap_signs(const SwapAnsatz& ansatz,
                                                         const std::vector<QuestionIndex>& pivots,
                                                         std::uint64_t seed = 7,
                                                         int draws = 8) {
  std::vector<std::array<int, 3>> survivors;
  for (int mask = 0; mask < 8; ++mask) {
    const std::array<int, 3> signs{mask & 1 ? -1 : 1, mask & 2 ? -1 : 1, mask & 4 ? -1 : 1};
    const RMatrix g = ansatz_matrix(ansatz, signs);
    Rng rng(seed);
    bool ok = true;
    for (const auto& pivot : pivots) {
      for (int d = 0; d < draws && ok; ++d) {
        const BlochVector r = pivot_configuration(pivot, rng);
        ok = std::abs(conservation_residual(r, g, ansatz.a)) < 1e-12 &&
             std::abs(conservation_residual(r, g, ansatz.b)) < 1e-12;
      }
    }
    if (ok) survivors.push_back(signs);
  }
  return survivors;
}

/// Ansatz delta_{y1}delta_{zx} + s1 delta_{z1}delta_{yx} + s2 delta_{xy}delta_{z2}
/// + s3 delta_{xz}delta_{y2} for the Pent_1 / Pent_2 swap, with pivots x_2, x_1, zz.
inline std::vector<std::array<int, 3>> derive_pent12_signs() {
  SwapAnsatz ansatz{1, 2,
                    {{{QuestionIndex::parse("y0"), QuestionIndex::parse("zx")},
                      {QuestionIndex::parse("z0"), QuestionIndex::parse("yx")},
                      {QuestionIndex::parse("xy"), QuestionIndex::parse("0z")},
                      {QuestionIndex::parse("xz"), QuestionIndex::parse("0y")}}}};
  return derive_swap_signs(ansatz, {QuestionIndex::parse("0x"), QuestionIndex::parse("x0"),
                                    QuestionIndex::parse("zz")});
}

/// Ansatz delta_{y1}delta_{z1} + s1 delta_{yx}delta_{zx} + s2 delta_{yy}delta_{zy}
/// + s3 delta_{yz}delta_{zz} for the Pent_3 / Pent_5 swap, with pivots x_2, y_2, z_2.
inline std::vector<std::array<int, 3>> derive_pent35_signs() {
  SwapAnsatz ansatz{3, 5,
                    {{{QuestionIndex::parse("y0"), QuestionIndex::parse("z0")},
                      {QuestionIndex::parse("yx"), QuestionIndex::parse("zx")},
                      {QuestionIndex::parse("yy"), QuestionIndex::parse("zy")},
                      {QuestionIndex::parse("yz"), QuestionIndex::parse("zz")}}}};
  return derive_swap_signs(ansatz, {QuestionIndex::parse("0x"), QuestionIndex::parse("0y"),
                                    QuestionIndex::parse("0z")});
}

}  // namespace qrecon
