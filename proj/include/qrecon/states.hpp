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

// Pure states: sampling, the two-qubit pentagon/conservation characterization,
// product seed states, evolution to product form and decomposition into
// compatible question vectors.

#pragma once

#include "qrecon/generators.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <limits>
#include <string>
#include <vector>

namespace qrecon {

class NotPureState : public InputError {
 public:
  NotPureState() : InputError("not a pure state") {}
};

/// N from a Hilbert dimension; throws unless dim is a power of two >= 2.
inline int qubits_for_dim(Eigen::Index dim) {
  int n = 0;
  while (static_cast<Eigen::Index>(hilbert_dim(n)) < dim && n <= kMaxQubits) ++n;
  if (n == 0 || static_cast<Eigen::Index>(hilbert_dim(n)) != dim) {
    throw DimensionMismatch("dimension " + std::to_string(dim) + " is not 2^N");
  }
  return n;
}

/// r_i = <psi| sigma_i |psi>, with psi normalised first.
inline BlochVector bloch_from_amplitudes(const CVector& amplitudes) {
  const int n = qubits_for_dim(amplitudes.size());
  const double norm = amplitudes.norm();
  if (!(norm > 0.0)) throw InputError("zero amplitude vector");
  const CVector psi = amplitudes / norm;
  return from_density(n, psi * psi.adjoint());
}

struct PureStateSample {
  CVector amplitudes;
  BlochVector bloch;
};

inline PureStateSample sample_pure(int n_qubits, Rng& rng) {
  require_qubits(n_qubits, 4);
  CVector psi = haar_state(hilbert_dim(n_qubits), rng);
  BlochVector r = bloch_from_amplitudes(psi);
  return PureStateSample{std::move(psi), std::move(r)};
}

inline PureStateSample sample_pure(int n_qubits, std::uint64_t seed) {
  Rng rng(seed);
  return sample_pure(n_qubits, rng);
}

/// Random convex mixture of `components` Haar pure states.
inline BlochVector sample_mixed(int n_qubits, Rng& rng, int components = 3) {
  const RVector w = simplex_weights(static_cast<std::size_t>(components), rng);
  BlochVector r(n_qubits);
  for (int k = 0; k < components; ++k) r = r + w(k) * sample_pure(n_qubits, rng).bloch;
  return r;
}

// ---------------------------------------------------------------------------
// Seed product states.

enum class Convention { xnor, xor_ };

inline const char* to_string(Convention c) { return c == Convention::xnor ? "XNOR" : "XOR"; }

struct SeedSet {
  Convention convention = Convention::xnor;
  std::vector<BlochVector> vectors;
};

/// Seed for computational basis state |b> (qubit 1 most significant):
/// r_q = prod of s_k over the z slots of q, s_k = +1 iff bit k is 0; all
/// non-z-sector components vanish.
inline BlochVector basis_seed(int n_qubits, std::size_t b) {
  require_qubits(n_qubits);
  if (b >= hilbert_dim(n_qubits)) throw std::out_of_range("basis index out of range");
  BlochVector r(n_qubits);
  for (const auto& q : all_questions(n_qubits)) {
    if (!q.is_diagonal()) continue;
    int sign = 1;
    for (int k = 0; k < n_qubits; ++k) {
      const bool bit = (b >> (n_qubits - 1 - k)) & 1U;
      if (q.axis(k) == Axis::Z && bit) sign = -sign;
    }
    r[q] = sign;
  }
  return r;
}

/// All 2^N seeds in basis order. The XOR class (global negation) exists for N = 2.
inline SeedSet seed_states(int n_qubits, Convention convention) {
  require_qubits(n_qubits, 4);
  if (convention == Convention::xor_ && n_qubits != 2) {
    throw std::invalid_argument("the XOR seed class is materialised for N = 2 only");
  }
  SeedSet out{convention, {}};
  for (std::size_t b = 0; b < hilbert_dim(n_qubits); ++b) {
    const BlochVector r = basis_seed(n_qubits, b);
    out.vectors.push_back(convention == Convention::xnor ? r : -r);
  }
  return out;
}

/// Two-qubit seeds numbered as in the solution listing: 1..4 XNOR with
/// (z1, z2) = (+,+), (-,-), (+,-), (-,+); 5..8 their XOR negations.
inline BlochVector solution(int k) {
  static constexpr std::array<std::size_t, 4> basis{0, 3, 1, 2};
  if (k < 1 || k > 8) throw std::out_of_range("solution number must be 1..8");
  const BlochVector r = basis_seed(2, basis[static_cast<std::size_t>((k - 1) % 4)]);
  return k <= 4 ? r : -r;
}

// ---------------------------------------------------------------------------
// Two-qubit purity: 6 pentagon equalities and 15 conservation equations.

struct PureStateReport {
  std::array<double, kPentagonCount> pentagon_residuals{};  // I(Pent_a) - 1
  std::vector<std::pair<std::pair<int, int>, double>> conservation_residuals;
  double max_pentagon = 0.0;
  double max_conservation = 0.0;
  bool passed = false;

  double max_residual() const { return std::max(max_pentagon, max_conservation); }
};

inline PureStateReport pure_state_check(const BlochVector& r, double tol = kPositivityTol) {
  require_same_qubits(r.n_qubits(), 2);
  PureStateReport rep;
  for (int a = 1; a <= kPentagonCount; ++a) {
    const double res = pentagon_information(r, a) - 1.0;
    rep.pentagon_residuals[static_cast<std::size_t>(a - 1)] = res;
    rep.max_pentagon = std::max(rep.max_pentagon, std::abs(res));
  }
  const auto pairs = pentagon_pairs();
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const double res = conservation_residual(r, swap_basis()[k], pairs[k].first);
    rep.conservation_residuals.emplace_back(pairs[k], res);
    rep.max_conservation = std::max(rep.max_conservation, std::abs(res));
  }
  rep.passed = rep.max_residual() <= tol;
  return rep;
}

/// Purity for any N: |r|^2 = 2^N - 1, legality, and for N = 2 the 21 equations.
inline bool is_pure(const BlochVector& r, double tol = kPositivityTol) {
  const double target = static_cast<double>(hilbert_dim(r.n_qubits()) - 1);
  if (std::abs(r.squared_norm() - target) > tol * target) return false;
  if (!legality(r, tol).legal) return false;
  return r.n_qubits() != 2 || pure_state_check(r, tol).passed;
}

/// alpha_q and the information in the six (N = 2) questions compatible with q.
struct BulkBoundary {
  double alpha = 0.0;
  double boundary = 0.0;
};

inline BulkBoundary bulk_boundary(const BlochVector& r, const QuestionIndex& q,
                                  double tol = kPositivityTol) {
  require_same_qubits(r.n_qubits(), 2);
  require_same_qubits(q.n_qubits(), 2);
  if (!pure_state_check(r, tol).passed) throw NotPureState();
  BulkBoundary out{r[q] * r[q], 0.0};
  for (const auto& p : all_questions(2)) {
    if (p != q && !anticommute(p, q)) out.boundary += r[p] * r[p];
  }
  return out;
}

// ---------------------------------------------------------------------------
// Evolution to product form.

struct ProductForm {
  BlochVector product;
  EvolutionMatrix evolution;  // evolution.apply(r) == product
};

/// Diagonalises chi = sum_i r_i sigma_i with U in SU(2^N) (eigenvalues
/// descending) and maps r through the orthogonal matrix induced by U^dagger.
/// The result is the all-'yes' seed basis_seed(N, 0).
inline ProductForm evolve_to_product(const BlochVector& r, double tol = 1e-8) {
  const int n = r.n_qubits();
  const HermitianMatrix chi(pauli_combination(n, r.components()));
  const Eigendecomposition eig = diagonalize(chi);
  EvolutionMatrix t = induced_evolution(eig.unitary.adjoint(), n);
  BlochVector product = t.apply(r);
  for (const auto& q : all_questions(n)) {
    const double v = product[q];
    if (std::abs(v) > 1.0 + tol) throw NotPureState();
    if (q.is_diagonal() ? std::abs(v - 1.0) > tol : std::abs(v) > tol) throw NotPureState();
  }
  return ProductForm{std::move(product), std::move(t)};
}

// ---------------------------------------------------------------------------
// Decomposition of pure states into compatible question vectors.

using SignPattern = std::vector<int>;

inline std::string to_string(const SignPattern& d) {
  std::string s;
  for (int v : d) s += v > 0 ? '+' : '-';
  return s;
}

/// Bloch components tr(diag(d) sigma_i) / 2^N of a diagonal +-1 pattern.
inline BlochVector pattern_vector(int n_qubits, const SignPattern& d) {
  if (d.size() != hilbert_dim(n_qubits)) throw DimensionMismatch("pattern length must be 2^N");
  CMatrix m = CMatrix::Zero(static_cast<Eigen::Index>(d.size()), static_cast<Eigen::Index>(d.size()));
  for (std::size_t k = 0; k < d.size(); ++k) {
    m(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k)) = d[k];
  }
  return BlochVector(n_qubits, pauli_coordinates(n_qubits, m));
}

/// Balanced +-1 patterns of length 2^N with +1 at position 0, lexicographic
/// with '+' before '-'.
inline std::vector<SignPattern> balanced_patterns(int n_qubits) {
  require_qubits(n_qubits, 3);
  const std::size_t dim = hilbert_dim(n_qubits);
  std::vector<SignPattern> out;
  for (std::uint32_t mask = 0; mask < (1U << (dim - 1)); ++mask) {
    // bit k set: position dim-1-k is '-'
    if (static_cast<std::size_t>(std::popcount(mask)) != dim / 2) continue;
    SignPattern d(dim, 1);
    for (std::size_t k = 0; k + 1 < dim; ++k) {
      if ((mask >> (dim - 2 - k)) & 1U) d[k + 1] = -1;
    }
    out.push_back(std::move(d));
  }
  return out;
}

struct Decomposition {
  std::vector<SignPattern> patterns;   // in the product frame
  std::vector<BlochVector> questions;  // mapped back to the frame of the target
  BlochVector target;
};

namespace detail {

inline void decomposition_search(const std::vector<SignPattern>& candidates, std::size_t start,
                                 std::size_t remaining, std::vector<int>& plus_left,
                                 std::vector<std::size_t>& chosen,
                                 std::vector<std::vector<std::size_t>>& out) {
  if (remaining == 0) {
    if (std::all_of(plus_left.begin() + 1, plus_left.end(), [](int v) { return v == 0; })) {
      out.push_back(chosen);
    }
    return;
  }
  for (std::size_t c = start; c + remaining <= candidates.size(); ++c) {
    const SignPattern& d = candidates[c];
    bool fits = true;
    for (std::size_t p = 1; p < d.size() && fits; ++p) fits = d[p] < 0 || plus_left[p] > 0;
    if (!fits) continue;
    for (std::size_t p = 1; p < d.size(); ++p) plus_left[p] -= d[p] > 0;
    // every position must still be able to reach zero with the remaining picks
    bool feasible = true;
    for (std::size_t p = 1; p < d.size() && feasible; ++p) {
      feasible = static_cast<std::size_t>(plus_left[p]) <= remaining - 1;
    }
    if (feasible) {
      chosen.push_back(c);
      decomposition_search(candidates, c + 1, remaining - 1, plus_left, chosen, out);
      chosen.pop_back();
    }
    for (std::size_t p = 1; p < d.size(); ++p) plus_left[p] += d[p] > 0;
  }
}

}  // namespace detail

/// Every set of 2^N - 1 distinct balanced diagonal patterns summing to the
/// product form diag(2^N - 1, -1, ..., -1): each position other than 0 must
/// collect exactly 2^(N-1) - 1 plus signs.
inline std::vector<std::vector<SignPattern>> product_decompositions(int n_qubits) {
  const auto candidates = balanced_patterns(n_qubits);
  const std::size_t dim = hilbert_dim(n_qubits);
  std::vector<int> plus_left(dim, static_cast<int>(dim / 2 - 1));
  plus_left[0] = 0;
  std::vector<std::size_t> chosen;
  std::vector<std::vector<std::size_t>> hits;
  detail::decomposition_search(candidates, 0, dim - 1, plus_left, chosen, hits);
  std::vector<std::vector<SignPattern>> out;
  for (const auto& h : hits) {
    std::vector<SignPattern> set;
    for (std::size_t c : h) set.push_back(candidates[c]);
    out.push_back(std::move(set));
  }
  return out;
}

inline std::vector<Decomposition> decompose_pure(const BlochVector& r, double tol = 1e-8) {
  require_qubits(r.n_qubits(), 3);
  const int n = r.n_qubits();
  const ProductForm pf = evolve_to_product(r, tol);
  const RMatrix back = pf.evolution.matrix.transpose();
  std::vector<Decomposition> out;
  for (auto& patterns : product_decompositions(n)) {
    Decomposition d{std::move(patterns), {}, r};
    for (const auto& p : d.patterns) {
      d.questions.emplace_back(n, back * pattern_vector(n, p).components());
    }
    out.push_back(std::move(d));
  }
  return out;
}

/// The seed-aligned decomposition (the z-sector questions z_1, ..., z_1..z_N as
/// diagonal patterns) with basis positions relabelled by `perm`: entry b of
/// each pattern is taken from position perm[b].
inline std::vector<SignPattern> permuted_seed_patterns(int n_qubits,
                                                       const std::vector<std::size_t>& perm) {
  const std::size_t dim = hilbert_dim(n_qubits);
  if (perm.size() != dim) throw DimensionMismatch("permutation length must be 2^N");
  std::vector<SignPattern> out;
  for (const auto& q : all_questions(n_qubits)) {
    if (!q.is_diagonal()) continue;
    SignPattern d(dim);
    for (std::size_t b = 0; b < dim; ++b) {
      int sign = 1;
      for (int k = 0; k < n_qubits; ++k) {
        const bool bit = (perm[b] >> (n_qubits - 1 - k)) & 1U;
        if (q.axis(k) == Axis::Z && bit) sign = -sign;
      }
      d[b] = sign;
    }
    out.push_back(std::move(d));
  }
  return out;
}

/// True if some decomposition uses exactly the given patterns (in any order).
inline bool contains_decomposition(const std::vector<std::vector<SignPattern>>& decompositions,
                                   std::vector<SignPattern> patterns) {
  std::sort(patterns.begin(), patterns.end());
  for (auto d : decompositions) {
    std::sort(d.begin(), d.end());
    if (d == patterns) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Orbit connectivity of the two-qubit seeds.

struct SeedMap {
  std::string generator;
  int from = 0;
  int to = 0;
  double residual = 0.0;
};

struct OrbitReport {
  std::vector<SeedMap> maps;
  std::size_t group_samples = 0;
  double min_distance_to_xor = std::numeric_limits<double>::infinity();
  std::size_t xor_hits = 0;  // samples landing within 1e-6 of an XOR seed
};

/// Checks the pi-rotations connecting the XNOR solutions and samples random
/// group elements acting on solution 1, recording the closest XOR seed.
inline OrbitReport orbit_connectivity_demo(std::size_t group_samples = 10000,
                                           std::uint64_t seed = 42) {
  OrbitReport rep;
  struct Link {
    int a, b, from, to;
  };
  const std::array<Link, 8> links{{{3, 5, 1, 4}, {3, 5, 2, 3}, {1, 5, 1, 4}, {1, 5, 2, 3},
                                   {4, 6, 1, 3}, {4, 6, 2, 4}, {2, 6, 1, 3}, {2, 6, 2, 4}}};
  for (const auto& l : links) {
    const EvolutionMatrix t = closed_form_exp(swap_generator(l.a, l.b), std::numbers::pi);
    const double res = (t.apply(solution(l.from)) - solution(l.to)).components().cwiseAbs().maxCoeff();
    rep.maps.push_back({swap_generator(l.a, l.b).label, l.from, l.to, res});
  }
  rep.group_samples = group_samples;
  const BlochVector start = solution(1);
  for (std::size_t s = 0; s < group_samples; ++s) {
    Rng rng = stream(seed, s);
    const BlochVector image = random_generated_element(swap_basis(), rng).apply(start);
    for (int k = 5; k <= 8; ++k) {
      const double d = (image - solution(k)).components().norm();
      rep.min_distance_to_xor = std::min(rep.min_distance_to_xor, d);
      rep.xor_hits += d < 1e-6;
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Three-qubit maximal-set information (exploratory).

struct SetStatistics {
  ComplementaritySet set;
  double min = std::numeric_limits<double>::infinity();
  double max = -std::numeric_limits<double>::infinity();
  double mean = 0.0;
};

struct ConjectureReport {
  int n_qubits = 3;
  std::size_t samples = 0;
  std::map<std::size_t, std::size_t> size_spectrum;  // set size -> count
  std::vector<SetStatistics> sets;
  double global_min = std::numeric_limits<double>::infinity();
  double global_max = -std::numeric_limits<double>::infinity();
};

/// Information content of every maximal complementary set on random pure states.
inline ConjectureReport conjecture_report(int n_qubits, std::size_t samples, std::uint64_t seed) {
  require_qubits(n_qubits, 3);
  ConjectureReport rep;
  rep.n_qubits = n_qubits;
  rep.samples = samples;
  const auto& sets = standard_sets(n_qubits);
  for (const auto& s : sets) {
    ++rep.size_spectrum[s.members.size()];
    rep.sets.push_back({s});
  }
  for (std::size_t k = 0; k < samples; ++k) {
    Rng rng = stream(seed, k);
    const BlochVector r = sample_pure(n_qubits, rng).bloch;
    for (auto& st : rep.sets) {
      const double info = set_information(r, st.set);
      st.min = std::min(st.min, info);
      st.max = std::max(st.max, info);
      st.mean += info / static_cast<double>(samples);
    }
  }
  for (const auto& st : rep.sets) {
    rep.global_min = std::min(rep.global_min, st.min);
    rep.global_max = std::max(rep.global_max, st.max);
  }
  return rep;
}

}  // namespace qrecon
