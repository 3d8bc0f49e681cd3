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

// Two qubits: questions, states, information and evolution.

#include "qrecon/qrecon.hpp"

#include <iostream>

int main() {
  using namespace qrecon;
  const auto zx = QuestionIndex::parse("zx");
  const auto yy = QuestionIndex::parse("yy");
  std::cout << "zx and yy are " << to_string(relation(zx, yy)) << "\n";

  const BlochVector r = sample_pure(2, 7).bloch;
  std::cout << "total information " << information(r).total << " bits\n";
  for (int a = 1; a <= kPentagonCount; ++a) {
    std::cout << "  " << pentagon(a).to_string() << " carries " << pentagon_information(r, a) << " bits\n";
  }

  const EvolutionMatrix t = closed_form_exp(swap_generator(1, 2), 0.4);
  const BlochVector s = t.apply(r);
  std::cout << "after evolution, pure-state residual " << pure_state_check(s).max_residual() << "\n";

  const ProductForm pf = evolve_to_product(s);
  std::cout << "product form " << state_to_json(pf.product, 1e-9).dump() << "\n";

  const QuestionVector q = QuestionVector::parse("xy");
  std::cout << "P(yes to xy) = " << born(q, s) << "\n";
}
