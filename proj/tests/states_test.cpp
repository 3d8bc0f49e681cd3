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

#include "qrecon/states.hpp"

#include <gtest/gtest.h>

#include <functional>
#include <numbers>

#include "oracle.hpp"

namespace qrecon {
namespace {

QuestionIndex Q(const char* s) { return QuestionIndex::parse(s); }

TEST(SamplePure, LengthAndDeterminism) {
  for (int n = 1; n <= 3; ++n) {
    for (std::uint64_t s = 0; s < 50; ++s) {
      const PureStateSample p = sample_pure(n, s);
      EXPECT_NEAR(p.amplitudes.squaredNorm(), 1.0, 1e-12);
      EXPECT_NEAR(p.bloch.squared_norm(), static_cast<double>(hilbert_dim(n) - 1), 1e-9);
      const CMatrix rho = p.amplitudes * p.amplitudes.adjoint();
      EXPECT_LT((p.bloch.components() - oracle::bloch(rho, n)).cwiseAbs().maxCoeff(), 1e-12);
    }
  }
  EXPECT_EQ(sample_pure(2, 7).bloch.components(), sample_pure(2, 7).bloch.components());
}

TEST(Seeds, XnorAndXorClasses) {
  const SeedSet x = seed_states(2, Convention::xnor);
  ASSERT_EQ(x.vectors.size(), 4u);
  const auto has = [&](const SeedSet& s, double z1, double z2, double zz) {
    for (const auto& v : s.vectors) {
      if (v.at("z0") == z1 && v.at("0z") == z2 && v.at("zz") == zz) return true;
    }
    return false;
  };
  EXPECT_TRUE(has(x, 1, 1, 1));
  EXPECT_TRUE(has(x, 1, -1, -1));
  EXPECT_TRUE(has(x, -1, -1, 1));
  EXPECT_TRUE(has(x, -1, 1, -1));
  const SeedSet y = seed_states(2, Convention::xor_);
  for (std::size_t k = 0; k < 4; ++k) {
    EXPECT_EQ(y.vectors[k].components(), (-x.vectors[k]).components());
    EXPECT_FALSE(legality(y.vectors[k]).legal);
  }
  EXPECT_THROW(seed_states(3, Convention::xor_), std::invalid_argument);
  for (int n = 1; n <= 3; ++n) {
    const SeedSet s = seed_states(n, Convention::xnor);
    for (std::size_t b = 0; b < s.vectors.size(); ++b) {
      EXPECT_TRUE(legality(s.vectors[b]).legal);
      CMatrix proj = CMatrix::Zero(static_cast<Eigen::Index>(hilbert_dim(n)), static_cast<Eigen::Index>(hilbert_dim(n)));
      proj(static_cast<Eigen::Index>(b), static_cast<Eigen::Index>(b)) = 1.0;
      EXPECT_LT((s.vectors[b].components() - oracle::bloch(proj, n)).cwiseAbs().maxCoeff(), 1e-15);
    }
  }
  // XNOR multiplicativity at N=3
  for (const auto& v : seed_states(3, Convention::xnor).vectors) {
    EXPECT_EQ(v.at("zzz"), v.at("z00") * v.at("0z0") * v.at("00z"));
    EXPECT_EQ(v.at("z0z"), v.at("z00") * v.at("00z"));
  }
}

TEST(Solutions, Numbering) {
  EXPECT_EQ(solution(1).at("z0"), 1);
  EXPECT_EQ(solution(2).at("z0"), -1);
  EXPECT_EQ(solution(2).at("zz"), 1);
  EXPECT_EQ(solution(3).at("0z"), -1);
  EXPECT_EQ(solution(4).at("z0"), -1);
  EXPECT_EQ(solution(4).at("0z"), 1);
  EXPECT_EQ(solution(5).at("zz"), -1);
}

TEST(PureStateCheck, HaarStatesPass) {
  Rng rng(3);
  for (int k = 0; k < 300; ++k) {
    const PureStateReport r = pure_state_check(sample_pure(2, rng).bloch);
    EXPECT_TRUE(r.passed);
    EXPECT_EQ(r.conservation_residuals.size(), 15u);
  }
}

TEST(PureStateCheck, MaximallyMixedAndXorState) {
  const PureStateReport m = pure_state_check(BlochVector(2));
  for (double v : m.pentagon_residuals) EXPECT_EQ(v, -1.0);
  EXPECT_FALSE(m.passed);
  // r_z1 = r_z2 = 1, r_zz = -1: the 21 equations hold, positivity does not
  BlochVector x(2);
  x[Q("z0")] = 1;
  x[Q("0z")] = 1;
  x[Q("zz")] = -1;
  EXPECT_TRUE(pure_state_check(x).passed);
  EXPECT_FALSE(legality(x).legal);
  EXPECT_FALSE(is_pure(x));
}

TEST(BulkBoundary, Relation) {
  const BulkBoundary b = bulk_boundary(solution(1), Q("z0"));
  EXPECT_DOUBLE_EQ(b.alpha, 1.0);
  EXPECT_DOUBLE_EQ(b.boundary, 2.0);
  Rng rng(8);
  for (int k = 0; k < 100; ++k) {
    const BlochVector r = sample_pure(2, rng).bloch;
    for (const auto& q : all_questions(2)) {
      const BulkBoundary bb = bulk_boundary(r, q);
      EXPECT_NEAR(bb.alpha, bb.boundary - 1.0, 1e-9);
    }
  }
  EXPECT_THROW(bulk_boundary(BlochVector(2), Q("z0")), NotPureState);
}

TEST(BulkBoundary, OneBitInZ1ForcesEqualCorrelations) {
  Rng rng(10);
  for (int k = 0; k < 50; ++k) {
    // evolve a random pure state with the product rotation that fixes z1
    BlochVector r = solution(1);
    r = closed_form_exp(swap_generator(4, 6), std::uniform_real_distribution<double>(0, 6)(rng)).apply(r);
    r = closed_form_exp(swap_generator(2, 6), std::uniform_real_distribution<double>(0, 6)(rng)).apply(r);
    ASSERT_NEAR(r.at("z0") * r.at("z0"), 1.0, 1e-12);
    EXPECT_NEAR(r.at("zz") * r.at("zz"), r.at("0z") * r.at("0z"), 1e-12);
  }
}

TEST(EvolveToProduct, RandomStatesReachSeed) {
  Rng rng(17);
  for (int n = 2; n <= 3; ++n) {
    for (int k = 0; k < 50; ++k) {
      const BlochVector r = sample_pure(n, rng).bloch;
      const ProductForm pf = evolve_to_product(r);
      std::size_t unit = 0;
      for (const auto& q : all_questions(n)) {
        const double v = std::abs(pf.product[q]);
        if (std::abs(v - 1.0) <= 1e-8) {
          ++unit;
          EXPECT_TRUE(q.is_diagonal());
        } else {
          EXPECT_LE(v, 1e-8);
        }
      }
      EXPECT_EQ(unit, hilbert_dim(n) - 1);
      EXPECT_LT(pf.evolution.orthogonality_residual(), 1e-10);
      EXPECT_LT((pf.evolution.apply(r) - pf.product).components().cwiseAbs().maxCoeff(), 1e-15);
    }
  }
}

TEST(EvolveToProduct, SeedIsFixedAndMixedIsRejected) {
  const ProductForm pf = evolve_to_product(solution(1));
  EXPECT_LT((pf.product - solution(1)).components().cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_THROW(evolve_to_product(BlochVector(2)), NotPureState);
  EXPECT_THROW(evolve_to_product(2.0 * solution(1)), NotPureState);
}

TEST(EvolveToProduct, OrbitInvariance) {
  Rng rng(19);
  for (int k = 0; k < 20; ++k) {
    const BlochVector r = sample_pure(2, rng).bloch;
    const BlochVector t = random_generated_element(swap_basis(), rng).apply(r);
    EXPECT_LT((evolve_to_product(r).product - evolve_to_product(t).product).components().cwiseAbs().maxCoeff(), 1e-8);
  }
}

TEST(BalancedPatterns, Counts) {
  EXPECT_EQ(balanced_patterns(1).size(), 1u);
  EXPECT_EQ(balanced_patterns(2).size(), 3u);
  EXPECT_EQ(balanced_patterns(3).size(), 35u);
  for (const auto& d : balanced_patterns(3)) {
    EXPECT_EQ(d[0], 1);
    EXPECT_EQ(std::count(d.begin(), d.end(), 1), 4);
    const BlochVector q = pattern_vector(3, d);
    EXPECT_NEAR(q.squared_norm(), 1.0, 1e-14);
    // candidate filter: q . seed = 1 iff the pattern has + at position 0
    EXPECT_NEAR(q.components().dot(basis_seed(3, 0).components()), 1.0, 1e-14);
  }
}

/// Oracle: every 7-subset of the 35 candidates whose diagonal sum equals
/// diag(7, -1, ..., -1), counted without pruning.
std::size_t brute_force_count_n3() {
  const auto c = balanced_patterns(3);
  std::size_t count = 0;
  std::array<std::size_t, 7> idx{};
  std::function<void(std::size_t, std::size_t, std::array<int, 8>)> rec =
      [&](std::size_t start, std::size_t depth, std::array<int, 8> sum) {
        if (depth == 7) {
          bool ok = sum[0] == 7;
          for (int p = 1; p < 8; ++p) ok = ok && sum[static_cast<std::size_t>(p)] == -1;
          count += ok;
          return;
        }
        for (std::size_t i = start; i < c.size(); ++i) {
          idx[depth] = i;
          auto s = sum;
          for (std::size_t p = 0; p < 8; ++p) s[p] += c[i][p];
          rec(i + 1, depth + 1, s);
        }
      };
  rec(0, 0, {});
  return count;
}

TEST(Decompose, Counts) {
  EXPECT_EQ(product_decompositions(1).size(), 1u);
  EXPECT_EQ(product_decompositions(2).size(), 1u);
  const auto d3 = product_decompositions(3);
  EXPECT_GE(d3.size(), 2u);
  EXPECT_EQ(d3.size(), brute_force_count_n3());
  EXPECT_EQ(d3.size(), 11205u);
}

TEST(Decompose, PermutationWitness) {
  const auto w = permuted_seed_patterns(3, {0, 2, 1, 4, 3, 5, 6, 7});
  bool found = false;
  for (const auto& p : w) found = found || to_string(p) == "+++-+---";
  EXPECT_TRUE(found);
  EXPECT_TRUE(contains_decomposition(product_decompositions(3), w));
  EXPECT_TRUE(contains_decomposition(product_decompositions(3), permuted_seed_patterns(3, {0, 1, 2, 3, 4, 5, 6, 7})));
}

TEST(Decompose, MembersSumToTargetAndAreCertain) {
  for (int n = 1; n <= 3; ++n) {
    const BlochVector r = sample_pure(n, 100 + static_cast<std::uint64_t>(n)).bloch;
    const auto ds = decompose_pure(r);
    ASSERT_FALSE(ds.empty());
    for (std::size_t i = 0; i < std::min<std::size_t>(ds.size(), 20); ++i) {
      RVector sum = RVector::Zero(r.size());
      std::vector<oracle::M> ops;
      for (const auto& q : ds[i].questions) {
        sum += q.components();
        EXPECT_NEAR(q.squared_norm(), 1.0, 1e-10);
        EXPECT_NEAR(0.5 * (1 + q.components().dot(r.components())), 1.0, 1e-10);
        ops.push_back(oracle::density(q.components(), n) * static_cast<double>(hilbert_dim(n)) -
                      oracle::M::Identity(static_cast<Eigen::Index>(hilbert_dim(n)), static_cast<Eigen::Index>(hilbert_dim(n))));
      }
      EXPECT_LT((sum - r.components()).cwiseAbs().maxCoeff(), 1e-10);
      for (std::size_t a = 0; a < ops.size(); ++a)
        for (std::size_t b = a + 1; b < ops.size(); ++b)
          EXPECT_LT((ops[a] * ops[b] - ops[b] * ops[a]).cwiseAbs().maxCoeff(), 1e-10);
    }
  }
  const auto one = decompose_pure(sample_pure(1, 3).bloch);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_LT((one.front().questions.front() - one.front().target).components().cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Orbit, FootnoteMapsAndSeparation) {
  const OrbitReport rep = orbit_connectivity_demo(2000, 5);
  ASSERT_EQ(rep.maps.size(), 8u);
  for (const auto& m : rep.maps) EXPECT_LT(m.residual, 1e-12) << m.generator << " " << m.from << "->" << m.to;
  EXPECT_EQ(rep.xor_hits, 0u);
  EXPECT_GT(rep.min_distance_to_xor, 1e-6);
}

TEST(Conjecture, ThreeQubitReportShape) {
  const ConjectureReport rep = conjecture_report(3, 5, 1);
  EXPECT_EQ(rep.sets.size(), 2640u);
  EXPECT_EQ(rep.size_spectrum.at(7), 288u);
  EXPECT_GE(rep.global_min, 0.0);
  EXPECT_LE(rep.global_max, 1.0 + 1e-9);
}

}  // namespace
}  // namespace qrecon
