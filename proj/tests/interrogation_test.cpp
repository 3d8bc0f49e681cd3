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

#include "qrecon/interrogation.hpp"

#include <gtest/gtest.h>

#include "oracle.hpp"

namespace qrecon {
namespace {

QuestionVector QV(const char* s) { return QuestionVector::parse(s); }

TEST(IsQuestion, Examples) {
  EXPECT_TRUE(is_question(2, BlochVector::delta("z0").components()));
  RVector v = (BlochVector::delta("z0") + BlochVector::delta("0z") + BlochVector::delta("zz")).components() / std::sqrt(3.0);
  const QuestionCheck c = is_question(2, v);
  EXPECT_FALSE(c);
  EXPECT_FALSE(c.reason.empty());
  EXPECT_FALSE(is_question(2, 2.0 * BlochVector::delta("z0").components()));
  EXPECT_FALSE(is_question(2, RVector::Zero(3)));
  Rng rng(1);
  for (int n = 1; n <= 3; ++n) {
    for (int k = 0; k < 20; ++k) EXPECT_TRUE(is_question(n, random_question(n, rng).components(), 1e-8));
  }
  EXPECT_THROW(QuestionVector(2, v), InputError);
}

TEST(Born, DualPathAgainstDenseTrace) {
  Rng rng(2);
  for (int n = 1; n <= 3; ++n) {
    for (int k = 0; k < 300; ++k) {
      const QuestionVector q = random_question(n, rng);
      const BlochVector r = sample_mixed(n, rng);
      const oracle::M p = 0.5 * (oracle::M::Identity(1 << n, 1 << n) +
                                 (oracle::density(q.components(), n) * static_cast<double>(1 << n) -
                                  oracle::M::Identity(1 << n, 1 << n)));
      const double dense = (p * oracle::density(r.components(), n)).trace().real();
      EXPECT_NEAR(born(q, r), dense, 1e-12);
      EXPECT_NEAR(born(q, r), born_trace(q, r), 1e-12);
    }
  }
}

TEST(Born, BasisTableAndNoInformation) {
  for (const auto& qi : all_questions(2)) {
    EXPECT_EQ(born(QuestionVector(qi), BlochVector(2)), 0.5);
    for (const auto& rj : all_questions(2)) {
      EXPECT_EQ(born(QuestionVector(qi), BlochVector::delta(rj)), qi == rj ? 1.0 : 0.5);
    }
  }
}

TEST(Born, AffineInMixtures) {
  Rng rng(3);
  for (int k = 0; k < 100; ++k) {
    const QuestionVector q = random_question(2, rng);
    const BlochVector a = sample_pure(2, rng).bloch;
    const BlochVector b = sample_pure(2, rng).bloch;
    EXPECT_NEAR(born(q, 0.25 * a + 0.75 * b), 0.25 * born(q, a) + 0.75 * born(q, b), 1e-14);
  }
}

TEST(Born, IllegalPairSurfaced) {
  EXPECT_THROW(born(QV("z0"), 3.0 * BlochVector::delta("z0")), IllegalPair);
}

TEST(Duality, ResidualsVanish) {
  Rng rng(4);
  const DualityResidual id = dual_evolution_check(QV("xy"), sample_pure(2, rng).bloch, EvolutionMatrix::identity(2));
  EXPECT_EQ(id.heisenberg, 0.0);
  for (int k = 0; k < 200; ++k) {
    const QuestionVector q = random_question(2, rng);
    const BlochVector r = sample_pure(2, rng).bloch;
    const EvolutionMatrix t = induced_evolution(haar_unitary(4, rng), 2);
    const DualityResidual d = dual_evolution_check(q, r, t);
    EXPECT_LE(d.heisenberg, 1e-12);
    EXPECT_LE(d.simultaneous, 1e-12);
  }
}

TEST(Duality, RelationsPreserved) {
  Rng rng(5);
  const EvolutionMatrix t = induced_evolution(haar_unitary(4, rng), 2);
  const auto qs = all_questions(2);
  for (std::size_t a = 0; a < qs.size(); ++a) {
    for (std::size_t b = a + 1; b < qs.size(); ++b) {
      const CMatrix pa = pauli_combination(2, t.matrix.col(static_cast<Eigen::Index>(a)));
      const CMatrix pb = pauli_combination(2, t.matrix.col(static_cast<Eigen::Index>(b)));
      EXPECT_EQ((pa * pb + pb * pa).cwiseAbs().maxCoeff() < 1e-9, anticommute(qs[a], qs[b]));
    }
  }
}

TEST(Duality, OrbitQuestionsAreCertainInTheirOwnState) {
  Rng rng(6);
  for (int k = 0; k < 50; ++k) {
    const QuestionVector q = random_question(3, rng);
    EXPECT_NEAR(born(q, BlochVector(3, q.components())), 1.0, 1e-12);
  }
}

TEST(Interrogate, DependentThirdBit) {
  for (std::uint64_t s = 0; s < 50; ++s) {
    const InterrogationRecord rec = interrogate(BlochVector(2), {QV("z0"), QV("0z"), QV("zz")}, s);
    EXPECT_EQ(rec.yes_probability[0], 0.5);
    EXPECT_NEAR(rec.yes_probability[1], 0.5, 1e-15);
    EXPECT_NEAR(rec.yes_probability[2], rec.answers[0] == rec.answers[1] ? 1.0 : 0.0, 1e-12);
    EXPECT_EQ(rec.answers[2], rec.answers[0] * rec.answers[1]);
    bool seed = false;
    for (const auto& v : seed_states(2, Convention::xnor).vectors) {
      seed = seed || (v - rec.posterior).components().cwiseAbs().maxCoeff() < 1e-12;
    }
    EXPECT_TRUE(seed);
    EXPECT_TRUE(pure_state_check(rec.posterior).passed);
  }
}

TEST(Interrogate, ComplementaryQuestionErasesAnswer) {
  const InterrogationRecord rec = interrogate(BlochVector(2), {QV("x0"), QV("y0")}, 3);
  EXPECT_NEAR(rec.posterior.at("x0"), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(rec.posterior.at("y0")), 1.0, 1e-12);
}

TEST(Interrogate, CompatibleIndependentAnswersRetained) {
  for (std::uint64_t s = 0; s < 20; ++s) {
    const InterrogationRecord rec = interrogate(BlochVector(2), {QV("x0"), QV("0x")}, s);
    EXPECT_NEAR(rec.posterior.at("x0"), rec.answers[0], 1e-12);
    EXPECT_NEAR(rec.posterior.at("0x"), rec.answers[1], 1e-12);
  }
}

TEST(Interrogate, RepeatabilityAndRejectsIllegalPrior) {
  Rng rng(7);
  for (int k = 0; k < 100; ++k) {
    const QuestionVector q = random_question(2, rng);
    const InterrogationRecord rec = interrogate(sample_mixed(2, rng), {q, q, q}, rng);
    EXPECT_EQ(rec.answers[0], rec.answers[1]);
    EXPECT_EQ(rec.answers[1], rec.answers[2]);
    EXPECT_NEAR(rec.yes_probability[1], rec.answers[0] > 0 ? 1.0 : 0.0, 1e-9);
  }
  EXPECT_THROW(interrogate(-solution(1), {QV("z0")}, 1), InputError);
}

TEST(Interrogate, FrequencyWithinThreeSigma) {
  const std::size_t shots = 20000;
  const ShotStatistics st = run_shots(BlochVector(1), {QV("z")}, shots, 9);
  EXPECT_NEAR(st.frequency(0), 0.5, 3.0 * std::sqrt(0.25 / shots));
  const BlochVector prior = 0.6 * BlochVector::delta("x");
  const ShotStatistics st2 = run_shots(prior, {QV("x")}, shots, 10);
  EXPECT_NEAR(st2.frequency(0), 0.8, 3.0 * std::sqrt(0.16 / shots));
}

}  // namespace
}  // namespace qrecon
