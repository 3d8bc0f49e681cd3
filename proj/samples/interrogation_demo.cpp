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

// Asks z1, z2 and then zz of a system in the state of no information.

#include "qrecon/qrecon.hpp"

#include <iostream>

int main() {
  using namespace qrecon;
  const std::vector<QuestionVector> qs{QuestionVector::parse("z0"), QuestionVector::parse("0z"),
                                       QuestionVector::parse("zz")};
  Rng rng(2026);
  for (int shot = 0; shot < 5; ++shot) {
    const InterrogationRecord rec = interrogate(BlochVector(2), qs, rng);
    std::cout << "answers";
    for (std::size_t k = 0; k < rec.answers.size(); ++k) {
      std::cout << ' ' << (rec.answers[k] > 0 ? "yes" : "no") << " (p=" << rec.yes_probability[k] << ")";
    }
    std::cout << "\n  posterior " << state_to_json(rec.posterior, 1e-12).dump() << "\n";
  }

  const ShotStatistics st = run_shots(BlochVector(2), {QuestionVector::parse("x0"), QuestionVector::parse("y0"),
                                                       QuestionVector::parse("x0")},
                                      10000, 1);
  std::cout << "x1, y1, x1: yes frequencies " << st.frequency(0) << ' ' << st.frequency(1) << ' '
            << st.frequency(2) << "\n";
}
