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

#include "qrecon/generators.hpp"
#include "qrecon/states.hpp"

#include <gtest/gtest.h>

#include <numbers>
#include <set>

#include "oracle.hpp"

namespace qrecon {
namespace {

QuestionIndex Q(const char* s) { return QuestionIndex::parse(s); }
std::size_t O(const char* s) { return Q(s).ordinal(); }

double max_abs(const RMatrix& m) { return m.cwiseAbs().maxCoeff(); }

TEST(SwapGenerator, TranscribedEntries) {
  const RMatrix g = swap_generator(1, 2).matrix;
  EXPECT_EQ(g(O("y0"), O("zx")), 1);
  EXPECT_EQ(g(O("z0"), O("yx")), -1);
  EXPECT_EQ(g(O("xy"), O("0z")), 1);
  EXPECT_EQ(g(O("xz"), O("0y")), -1);
  EXPECT_EQ(g(O("zx"), O("y0")), -1);
  const RMatrix h = swap_generator(3, 5).matrix;
  EXPECT_EQ(h(O("z0"), O("y0")), 1);
  EXPECT_EQ(h(O("yx"), O("zx")), -1);
  EXPECT_EQ(h(O("yy"), O("zy")), -1);
  EXPECT_EQ(h(O("yz"), O("zz")), -1);
  EXPECT_THROW(swap_generator(2, 1), std::invalid_argument);
}

TEST(SwapGenerator, StructureOfAllFifteen) {
  std::map<std::pair<std::size_t, std::size_t>, int> seen;
  for (const auto& g : swap_basis()) {
    EXPECT_EQ(max_abs(g.matrix + g.matrix.transpose()), 0.0);
    EXPECT_EQ((g.matrix.array() != 0.0).count(), 8);
    for (const auto& [i, j, v] : g.nonzeros()) {
      EXPECT_TRUE(anticommute(i, j)) << g.label << " " << i.to_string() << "," << j.to_string();
      ++seen[{i.ordinal(), j.ordinal()}];
    }
  }
  EXPECT_EQ(seen.size(), 60u);
  for (const auto& [k, v] : seen) EXPECT_EQ(v, 1);
}

TEST(AdjointGenerator, MatchesDenseTraceOracle) {
  for (int n = 1; n <= 2; ++n) {
    for (const auto& l : oracle::labels(n)) {
      const RMatrix mine = adjoint_generator(Q(l.c_str())).matrix;
      EXPECT_LT(max_abs(mine - oracle::adjoint(l)), 1e-14) << l;
    }
  }
  for (const char* l : {"xx0", "z0y", "yyy"}) {
    EXPECT_LT(max_abs(adjoint_generator(Q(l)).matrix - oracle::adjoint(l)), 1e-14) << l;
  }
}

TEST(AdjointGenerator, SingleQubitRotation) {
  const RMatrix g = adjoint_generator(Q("z")).matrix;
  EXPECT_EQ(std::abs(g(0, 1)), 1.0);
  EXPECT_EQ(g(0, 1), -g(1, 0));
  EXPECT_EQ(g.cwiseAbs().sum(), 2.0);
}

TEST(Coincidence, AdjointEqualsSwapUpToSign) {
  const auto table = coincidence_table();
  ASSERT_EQ(table.size(), 15u);
  for (const auto& e : table) {
    EXPECT_EQ(e.max_deviation, 0.0) << e.a << "," << e.b;
    EXPECT_EQ(e.overlap, pentagon_overlap(e.a, e.b));
    const RMatrix ad = oracle::adjoint(e.overlap.to_string());
    EXPECT_LT(max_abs(ad - e.sign * swap_generator(e.a, e.b).matrix), 1e-14);
  }
  EXPECT_EQ(table.front().overlap.to_string(), "xx");
}

TEST(Embedding, PairOneTwoMatchesAdjoint) {
  const SwapGenerator e = embed_pair_generator(swap_generator(1, 2), 1, 2, 3);
  EXPECT_LT(max_abs(e.matrix - adjoint_generator(Q("xx0")).matrix), 1e-15);
  for (const auto& q : all_questions(3)) {
    if (q.axis(0) == Axis::I && q.axis(1) == Axis::I) {
      EXPECT_EQ(e.matrix.row(static_cast<Eigen::Index>(q.ordinal())).cwiseAbs().sum(), 0.0);
      EXPECT_EQ(e.matrix.col(static_cast<Eigen::Index>(q.ordinal())).cwiseAbs().sum(), 0.0);
    }
  }
  const SwapGenerator f = embed_pair_generator(swap_generator(1, 2), 1, 3, 3);
  EXPECT_LT(max_abs(f.matrix - adjoint_generator(Q("x0x")).matrix), 1e-15);
  EXPECT_THROW(embed_pair_generator(swap_generator(1, 2), 2, 1, 3), std::invalid_argument);
}

TEST(Embedding, ProductGeneratorsFormTwoCommutingSo3) {
  const std::array<std::pair<int, int>, 3> first{{{3, 5}, {1, 5}, {1, 3}}};
  const std::array<std::pair<int, int>, 3> second{{{4, 6}, {2, 6}, {2, 4}}};
  for (auto [a, b] : first) {
    for (auto [c, d] : second) {
      const RMatrix g = embed_pair_generator(swap_generator(a, b), 1, 2, 3).matrix;
      const RMatrix h = embed_pair_generator(swap_generator(c, d), 1, 2, 3).matrix;
      EXPECT_LT(max_abs(g * h - h * g), 1e-15);
    }
  }
}

TEST(ClosedForm, AgreesWithPadeExponential) {
  Rng rng(21);
  std::uniform_real_distribution<double> angle(-10.0, 10.0);
  for (const auto& g : swap_basis()) {
    for (int k = 0; k < 20; ++k) {
      const double t = angle(rng);
      const EvolutionMatrix a = closed_form_exp(g, t);
      EXPECT_LT(max_abs(a.matrix - generic_exp(g, t).matrix), 1e-10);
      EXPECT_LT(a.orthogonality_residual(), 1e-12);
      EXPECT_NEAR(a.matrix.determinant(), 1.0, 1e-10);
    }
  }
  EXPECT_EQ(max_abs(closed_form_exp(swap_generator(1, 2), 0).matrix - RMatrix::Identity(15, 15)), 0.0);
}

TEST(ClosedForm, QuarterTurnSwapsInformation) {
  const EvolutionMatrix t = closed_form_exp(swap_generator(1, 2), std::numbers::pi / 2);
  for (auto [a, b] : std::array<std::pair<const char*, const char*>, 4>{
           {{"y0", "zx"}, {"z0", "yx"}, {"xy", "0z"}, {"xz", "0y"}}}) {
    const BlochVector out = t.apply(BlochVector::delta(a));
    EXPECT_NEAR(std::abs(out.at(b)), 1.0, 1e-15);
    EXPECT_NEAR(out.at(a), 0.0, 1e-15);
  }
}

TEST(ClosedForm, PiRotationMapsSolutionOneToFour) {
  const BlochVector s1 = BlochVector::delta("z0") + BlochVector::delta("0z") + BlochVector::delta("zz");
  const BlochVector s4 = -BlochVector::delta("z0") + BlochVector::delta("0z") - BlochVector::delta("zz");
  const BlochVector out = closed_form_exp(swap_generator(3, 5), std::numbers::pi).apply(s1);
  EXPECT_LT((out - s4).components().cwiseAbs().maxCoeff(), 1e-15);
}

TEST(ClosedForm, RejectsCombinations) {
  SwapGenerator g = swap_generator(1, 2);
  g.matrix += swap_generator(1, 3).matrix;
  EXPECT_THROW(closed_form_exp(g, 0.3), std::invalid_argument);
  EXPECT_NO_THROW(generic_exp(g, 0.3));
}

TEST(GenericExp, GroupLaws) {
  RMatrix g = 0.4 * swap_generator(1, 2).matrix - 1.3 * swap_generator(2, 5).matrix;
  EXPECT_LT(max_abs(generic_exp(g, 0.7, 2).matrix * generic_exp(g, -0.7, 2).matrix - RMatrix::Identity(15, 15)), 1e-13);
  EXPECT_LT(max_abs(generic_exp(g, 1.1, 2).matrix - generic_exp(g, 0.4, 2).matrix * generic_exp(g, 0.7, 2).matrix), 1e-13);
  EXPECT_THROW(generic_exp(RMatrix::Identity(15, 15), 1.0, 2), std::invalid_argument);
}

TEST(LieClosure, StructureConstantsCloseAtAllSizes) {
  for (int n = 1; n <= 3; ++n) {
    const LieClosureReport r = lie_closure_check(n);
    EXPECT_LE(r.max_residual, 1e-10) << n;
    EXPECT_LE(r.max_coefficient_error, 1e-10) << n;
  }
  // [G^x1, G^y1] against the dense oracle
  const RMatrix gx = oracle::adjoint("x0");
  const RMatrix gy = oracle::adjoint("y0");
  const RMatrix gz = oracle::adjoint("z0");
  const double coef = -gz(O("x0"), O("y0"));
  EXPECT_LT(max_abs(gx * gy - gy * gx - coef * gz), 1e-14);
  EXPECT_NE(coef, 0.0);
}

TEST(LieClosure, DisjointPentagonPairsCommute) {
  const RMatrix a = swap_generator(1, 2).matrix;
  const RMatrix b = swap_generator(3, 4).matrix;
  EXPECT_LT(max_abs(a * b - b * a), 1e-15);
  const RMatrix c = embed_pair_generator(swap_generator(1, 2), 1, 2, 4).matrix;
  const RMatrix d = embed_pair_generator(swap_generator(2, 5), 3, 4, 4).matrix;
  EXPECT_LT(max_abs(c * d - d * c), 1e-15);
}

TEST(Conservation, SeedAndViolator) {
  const BlochVector s = BlochVector::delta("z0") + BlochVector::delta("0z") + BlochVector::delta("zz");
  EXPECT_EQ(conservation_residual(s, swap_generator(1, 2), 1), 0.0);
  // half a bit on each of xy, z2, xz, y2 and one bit on x1
  BlochVector v(2);
  v[Q("xy")] = std::sqrt(0.5);
  v[Q("0z")] = std::sqrt(0.5);
  v[Q("xz")] = std::sqrt(0.5);
  v[Q("0y")] = -std::sqrt(0.5);
  v[Q("x0")] = 1.0;
  EXPECT_GT(std::abs(conservation_residual(v, swap_generator(1, 2), 1)), 0.5);
}

TEST(Conservation, EvolvedPureStatesKeepCharges) {
  Rng rng(31);
  std::uniform_int_distribution<std::size_t> pick(0, 14);
  std::uniform_real_distribution<double> angle(0, 2 * std::numbers::pi);
  for (int k = 0; k < 100; ++k) {
    const CVector psi = haar_state(4, rng);
    const BlochVector r(2, oracle::bloch(psi * psi.adjoint(), 2));
    const BlochVector out = closed_form_exp(swap_basis()[pick(rng)], angle(rng)).apply(r);
    EXPECT_LE(pure_state_check(out).max_residual(), 1e-9);
  }
}

TEST(InducedEvolution, MatchesHilbertEvolution) {
  Rng rng(41);
  for (int n = 1; n <= 3; ++n) {
    const CMatrix u = haar_unitary(hilbert_dim(n), rng);
    const EvolutionMatrix t = induced_evolution(u, n);
    EXPECT_LT(t.orthogonality_residual(), 1e-12);
    EXPECT_NEAR(t.matrix.determinant(), 1.0, 1e-9);
    const CVector psi = haar_state(hilbert_dim(n), rng);
    const CMatrix rho = psi * psi.adjoint();
    const RVector want = oracle::bloch(u * rho * u.adjoint(), n);
    EXPECT_LT((t.apply(RVector(oracle::bloch(rho, n))) - want).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(HamiltonianGenerator, SingleQubitPrecession) {
  const HermitianMatrix h = pauli_matrix(Q("z"));
  const double t = 0.37;
  const RMatrix tm = induced_evolution(unitary_exp(h, t), 1).matrix;
  // rotation about z by 2t
  EXPECT_NEAR(tm(2, 2), 1.0, 1e-14);
  EXPECT_NEAR(tm(0, 0), std::cos(2 * t), 1e-14);
  EXPECT_NEAR(std::abs(tm(1, 0)), std::sin(2 * t), 1e-14);
  EXPECT_LT(max_abs(generic_exp(hamiltonian_generator(h, 1), t, 1).matrix - tm), 1e-14);
  EXPECT_LT(max_abs(induced_evolution(unitary_exp(h, 0), 1).matrix - RMatrix::Identity(3, 3)), 1e-15);
}

TEST(VonNeumann, DualPathAndDerivative) {
  const VonNeumannReport a = von_neumann_consistency(pauli_matrix(Q("xx")), std::numbers::pi / 4, 50, 3);
  EXPECT_LE(a.orthogonality_residual, 1e-10);
  EXPECT_LE(a.max_state_deviation, 1e-9);
  EXPECT_LE(a.max_derivative_error, 1e-6);
  Rng rng(2);
  for (int n = 1; n <= 3; ++n) {
    RVector c = RVector::Random(static_cast<Eigen::Index>(bloch_dim(n)));
    const VonNeumannReport r = von_neumann_consistency(HermitianMatrix(pauli_combination(n, c)), 0.9, 10, 5);
    EXPECT_LE(r.max_state_deviation, 1e-9);
    EXPECT_LE(r.max_derivative_error, 1e-6);
  }
  EXPECT_THROW(von_neumann_consistency(HermitianMatrix(CMatrix::Identity(4, 4)), 1.0), std::invalid_argument);
}

TEST(SignReplay, PentagonOneTwo) {
  const auto s = derive_pent12_signs();
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s[0], (std::array<int, 3>{-1, 1, -1}));
  // the surviving ansatz is the transcribed generator
  const SwapAnsatz a{1, 2, {{{Q("y0"), Q("zx")}, {Q("z0"), Q("yx")}, {Q("xy"), Q("0z")}, {Q("xz"), Q("0y")}}}};
  EXPECT_EQ(max_abs(ansatz_matrix(a, s[0]) - swap_generator(1, 2).matrix), 0.0);
}

TEST(SignReplay, PentagonThreeFiveIsTheAdjointForm) {
  const auto s = derive_pent35_signs();
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s[0], (std::array<int, 3>{1, 1, 1}));
  const SwapAnsatz a{3, 5, {{{Q("y0"), Q("z0")}, {Q("yx"), Q("zx")}, {Q("yy"), Q("zy")}, {Q("yz"), Q("zz")}}}};
  EXPECT_EQ(max_abs(ansatz_matrix(a, s[0]) + swap_generator(3, 5).matrix), 0.0);
}

TEST(RandomGeneratedElement, IsOrthogonal) {
  Rng rng(1);
  const EvolutionMatrix t = random_generated_element(swap_basis(), rng, 30);
  EXPECT_LT(t.orthogonality_residual(), 1e-12);
  EXPECT_LT(max_abs((t * t.inverse()).matrix - RMatrix::Identity(15, 15)), 1e-12);
}

}  // namespace
}  // namespace qrecon
