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

// Named verification suites and their JSON / text reports.

#pragma once

#include "qrecon/io.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace qrecon {

struct SuiteConfig {
  std::string suite = "all";
  int n_qubits = 2;
  std::size_t samples = 1000;
  std::uint64_t seed = 42;
  double tolerance = 1e-9;
  std::optional<BlochVector> state;  // extra user state folded into state checks
  bool timing = true;
};

struct Check {
  std::string name;
  bool passed = false;
  double max_violation = 0.0;
  std::size_t samples = 0;
  std::string paper_ref;
  Json details = Json::object();
};

struct CheckReport {
  std::string suite;
  SuiteConfig config;
  std::vector<Check> checks;
  double wall_time_ms = 0.0;

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
  }
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"graph",  "charges",   "generators",
                                              "purestates", "born",  "decompose",
                                              "interrogate", "conjecture-n3"};
  return names;
}

class UnknownSuite : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace suites {

inline Check make_check(std::string name, double violation, double tol, std::size_t samples,
                        std::string ref) {
  return Check{std::move(name), violation <= tol, violation, samples, std::move(ref), Json::object()};
}

inline Check count_check(std::string name, bool ok, double violation, std::size_t samples,
                         std::string ref) {
  return Check{std::move(name), ok, violation, samples, std::move(ref), Json::object()};
}

/// Haar pure states for sample k, plus the user state (if pure and of the right N).
inline std::vector<BlochVector> pure_samples(const SuiteConfig& cfg, int n, std::uint64_t salt) {
  std::vector<BlochVector> out;
  out.reserve(cfg.samples + 1);
  for (std::size_t k = 0; k < cfg.samples; ++k) {
    Rng rng = stream(cfg.seed + salt, k);
    out.push_back(sample_pure(n, rng).bloch);
  }
  if (cfg.state && cfg.state->n_qubits() == n && is_pure(*cfg.state, 1e-8)) {
    out.push_back(*cfg.state);
  }
  return out;
}

// ---------------------------------------------------------------------------

inline std::vector<Check> graph(const SuiteConfig& cfg) {
  const int n = cfg.n_qubits;
  require_qubits(n, 4);
  std::vector<Check> out;
  const auto qs = all_questions(n);

  std::size_t mismatches = 0;
  for (const auto& a : qs) {
    for (const auto& b : qs) {
      if (a != b) mismatches += relation(a, b) != relation_by_index_count(a, b);
    }
  }
  out.push_back(count_check("relation_index_rule", mismatches == 0, static_cast<double>(mismatches),
                            qs.size() * (qs.size() - 1), "complementarity index criterion"));

  // every non-identity Pauli anticommutes with half of the 4^N Pauli operators
  const int expected_comp = static_cast<int>((bloch_dim(n) + 1) / 2);
  const int expected_compat = static_cast<int>(bloch_dim(n)) - 1 - expected_comp;
  std::size_t bad = 0;
  for (const auto& [q, d] : degree_profile(n)) {
    bad += d.compatible != expected_compat || d.complementary != expected_comp;
  }
  Check deg = count_check("degree_profile", bad == 0, static_cast<double>(bad), qs.size(),
                          "question graph degrees");
  deg.details = {{"compatible", expected_compat}, {"complementary", expected_comp}};
  out.push_back(deg);

  const std::size_t pairs = complementary_pair_count(n);
  const std::size_t expected_pairs = qs.size() * static_cast<std::size_t>(expected_comp) / 2;
  Check pc = count_check("complementary_pairs", pairs == expected_pairs,
                         std::abs(static_cast<double>(pairs) - static_cast<double>(expected_pairs)),
                         1, "complementary pair count");
  pc.details = {{"count", pairs}};
  out.push_back(pc);

  if (n <= 3) {
    const auto cliques = maximal_complementary_sets(n);
    std::map<std::size_t, std::size_t> sizes;
    std::size_t not_maximal = 0;
    for (const auto& c : cliques) {
      ++sizes[c.members.size()];
      not_maximal += !is_maximal(c, n) || !is_mutually_complementary(c.members);
    }
    bool ok = not_maximal == 0;
    double violation = static_cast<double>(not_maximal);
    if (n == 1) ok = ok && cliques.size() == 1 && cliques.front().members.size() == 3;
    if (n == 2) {
      auto named = named_maximal_sets_n2();
      auto sorted = cliques;
      auto key = [](const ComplementaritySet& a, const ComplementaritySet& b) {
        return a.members < b.members;
      };
      std::sort(named.begin(), named.end(), key);
      std::sort(sorted.begin(), sorted.end(), key);
      const bool same = named == sorted;
      ok = ok && same && sizes[5] == 6 && sizes[3] == 20 && sizes.size() == 2;
      violation += same ? 0.0 : 1.0;
    }
    Check c = count_check("maximal_complementary_sets", ok, violation, 1,
                          "maximal mutually complementary sets");
    Json spectrum = Json::object();
    for (auto [size, count] : sizes) spectrum[std::to_string(size)] = count;
    c.details = {{"count", cliques.size()}, {"size_spectrum", spectrum}};
    out.push_back(c);
  }

  if (n == 2) {
    std::size_t cover_bad = 0;
    for (const auto& q : qs) {
      int in = 0;
      for (int a = 1; a <= kPentagonCount; ++a) in += pentagon(a).contains(q);
      cover_bad += in != 2;
    }
    out.push_back(count_check("pentagon_cover", cover_bad == 0, static_cast<double>(cover_bad),
                              qs.size(), "every question in two pentagons"));

    std::size_t overlap_bad = 0;
    for (auto [a, b] : pentagon_pairs()) {
      try {
        (void)pentagon_overlap(a, b);
      } catch (const std::logic_error&) {
        ++overlap_bad;
      }
    }
    out.push_back(count_check("pentagon_overlaps", overlap_bad == 0,
                              static_cast<double>(overlap_bad), 15, "pentagon pair overlaps"));

    const auto tris = correlation_triangles(2);
    std::map<QuestionIndex, int> membership;
    std::size_t mixed = 0;
    for (const auto& t : tris) {
      int individuals = 0;
      for (const auto& m : t.members) {
        ++membership[m];
        individuals += m.weight() == 1;
      }
      mixed += individuals == 2;
    }
    std::size_t tri_bad = tris.size() == 15 && mixed == 9 ? 0 : 1;
    for (const auto& q : qs) tri_bad += membership[q] != 3;
    auto parity = [](const char* a, const char* b) {
      return correlation_triangle(QuestionIndex::parse(a), QuestionIndex::parse(b)).parity;
    };
    tri_bad += parity("xx", "yy") != Parity::odd;
    tri_bad += parity("xy", "yx") != Parity::even;
    tri_bad += parity("x0", "0x") != Parity::even;
    Check t = count_check("correlation_triangles", tri_bad == 0, static_cast<double>(tri_bad),
                          tris.size(), "correlation triangle parities");
    t.details = {{"triangles", tris.size()}, {"mixed", mixed}, {"composite", tris.size() - mixed}};
    out.push_back(t);
  }
  return out;
}

// ---------------------------------------------------------------------------

inline std::vector<Check> charges(const SuiteConfig& cfg) {
  const int n = cfg.n_qubits;
  require_qubits(n, 3);
  std::vector<Check> out;
  const auto states = pure_samples(cfg, n, 1);
  const double bits = static_cast<double>(hilbert_dim(n) - 1);

  double norm_dev = 0.0;
  for (const auto& r : states) norm_dev = std::max(norm_dev, std::abs(r.squared_norm() - bits));
  out.push_back(make_check("pure_state_length", norm_dev, cfg.tolerance, states.size(),
                           "pure states carry 2^N-1 bits"));

  // states evolved by random elements of the generated group
  const std::vector<SwapGenerator> basis = n == 2 ? swap_basis() : adjoint_basis(n);
  std::vector<BlochVector> evolved;
  evolved.reserve(states.size());
  double total_dev = 0.0;
  for (std::size_t k = 0; k < states.size(); ++k) {
    Rng rng = stream(cfg.seed + 2, k);
    evolved.push_back(random_generated_element(basis, rng).apply(states[k]));
    total_dev = std::max(total_dev, std::abs(evolved.back().squared_norm() - states[k].squared_norm()));
  }
  out.push_back(make_check("total_information_conserved", total_dev, cfg.tolerance, states.size(),
                           "total information is an invariant"));

  if (n == 2) {
    double pent = 0.0, cons = 0.0, pent_ev = 0.0, cons_ev = 0.0, sum_rule = 0.0, tri = 0.0,
           bulk = 0.0;
    for (std::size_t k = 0; k < states.size(); ++k) {
      const PureStateReport a = pure_state_check(states[k]);
      const PureStateReport b = pure_state_check(evolved[k]);
      pent = std::max(pent, a.max_pentagon);
      cons = std::max(cons, a.max_conservation);
      pent_ev = std::max(pent_ev, b.max_pentagon);
      cons_ev = std::max(cons_ev, b.max_conservation);
      double total = 0.0;
      for (int p = 1; p <= kPentagonCount; ++p) total += pentagon_information(states[k], p);
      sum_rule = std::max(sum_rule, std::abs(total - 2.0 * states[k].squared_norm()));
      for (auto [x, y] : triangle_identity_pairs()) {
        tri = std::max(tri, std::abs(triangle_information(states[k], x) -
                                     triangle_information(states[k], y)));
      }
      for (const auto& q : all_questions(2)) {
        const BulkBoundary bb = bulk_boundary(states[k], q, 1e-8);
        bulk = std::max(bulk, std::abs(bb.alpha - (bb.boundary - 1.0)));
      }
    }
    const std::size_t s = states.size();
    out.push_back(make_check("pentagon_equalities", pent, cfg.tolerance, s, "pentagon equalities"));
    out.push_back(make_check("conservation_equations", cons, cfg.tolerance, s,
                             "15 conservation equations"));
    out.push_back(make_check("pentagon_equalities_evolved", pent_ev, cfg.tolerance, s,
                             "orbit closure of the pure-state equations"));
    out.push_back(make_check("conservation_equations_evolved", cons_ev, cfg.tolerance, s,
                             "orbit closure of the pure-state equations"));
    out.push_back(make_check("pentagon_sum_rule", sum_rule, cfg.tolerance, s,
                             "every question in two pentagons"));
    out.push_back(make_check("triangle_identities", tri, cfg.tolerance, s,
                             "pairwise triangle equalities"));
    out.push_back(make_check("bulk_boundary", bulk, cfg.tolerance, s, "bulk-boundary relation"));
  }

  // complementarity inequalities on pure states and convex mixtures
  const auto& sets = standard_sets(n);
  double excess = 0.0;
  std::size_t violations = 0, checked = 0;
  auto scan = [&](const BlochVector& r) {
    for (const auto& v : complementarity_check(r, sets, cfg.tolerance)) {
      excess = std::max(excess, v.excess);
      ++violations;
    }
    ++checked;
  };
  for (const auto& r : states) scan(r);
  for (const auto& r : evolved) scan(r);
  for (std::size_t k = 0; k < cfg.samples; ++k) {
    Rng rng = stream(cfg.seed + 3, k);
    scan(sample_mixed(n, rng, 2 + static_cast<int>(k % 4)));
  }
  if (cfg.state && cfg.state->n_qubits() == n && legality(*cfg.state).legal) scan(*cfg.state);
  Check c = count_check("complementarity_inequalities", violations == 0, excess, checked,
                        "complementarity inequalities");
  c.details = {{"sets", sets.size()}, {"violations", violations}};
  out.push_back(c);
  return out;
}

// ---------------------------------------------------------------------------

inline std::vector<Check> generators(const SuiteConfig& cfg) {
  const int n = cfg.n_qubits;
  require_qubits(n, 3);
  std::vector<Check> out;

  const LieClosureReport lie = lie_closure_check(n);
  Check lc = make_check("lie_closure", std::max(lie.max_residual, lie.max_coefficient_error), 1e-10,
                        lie.pairs, "commutator algebra closes");
  lc.details = {{"pairs", lie.pairs}, {"commuting_pairs", lie.commuting_pairs}};
  out.push_back(lc);

  double anti = 0.0;
  std::size_t compatible_entries = 0;
  for (const auto& g : adjoint_basis(n)) {
    anti = std::max(anti, (g.matrix + g.matrix.transpose()).cwiseAbs().maxCoeff());
    for (const auto& [i, j, v] : g.nonzeros()) compatible_entries += !anticommute(i, j);
  }
  out.push_back(count_check("generators_antisymmetric_on_complementary_pairs",
                            anti == 0.0 && compatible_entries == 0,
                            anti + static_cast<double>(compatible_entries), bloch_dim(n),
                            "generator entries only on complementary pairs"));

  if (n == 2) {
    const auto table = coincidence_table();
    double dev = 0.0;
    Json signs = Json::array();
    for (const auto& e : table) {
      dev = std::max(dev, e.max_deviation);
      signs.push_back({{"pentagons", {e.a, e.b}}, {"overlap", e.overlap.to_string()},
                       {"sign", e.sign}});
    }
    Check c = make_check("generator_coincidence", dev, 1e-12, table.size(),
                         "swap generators coincide with the adjoint representation");
    c.details = {{"signs", signs}};
    out.push_back(c);

    std::map<std::pair<std::size_t, std::size_t>, int> seen;
    for (const auto& g : swap_basis()) {
      for (const auto& [i, j, v] : g.nonzeros()) ++seen[{i.ordinal(), j.ordinal()}];
    }
    std::size_t bad = seen.size() == 60 ? 0 : 1;
    for (const auto& [k, v] : seen) bad += v != 1;
    out.push_back(count_check("swap_pair_exclusivity", bad == 0, static_cast<double>(bad), 60,
                              "each complementary pair in one generator"));

    const auto s12 = derive_pent12_signs();
    const auto s35 = derive_pent35_signs();
    const bool ok12 = s12.size() == 1 && s12.front() == std::array<int, 3>{-1, 1, -1};
    const bool ok35 = s35.size() == 1 && s35.front() == std::array<int, 3>{1, 1, 1};
    Check d = count_check("sign_derivation_replay", ok12 && ok35, (ok12 ? 0.0 : 1.0) + (ok35 ? 0.0 : 1.0),
                          2, "swap generator sign fixing");
    d.details = {{"pent12", s12}, {"pent35", s35}};
    out.push_back(d);

    const OrbitReport orbit = orbit_connectivity_demo(cfg.samples, cfg.seed);
    double map_res = 0.0;
    for (const auto& m : orbit.maps) map_res = std::max(map_res, m.residual);
    out.push_back(make_check("seed_connectivity", map_res, 1e-12, orbit.maps.size(),
                             "seed states connected by pi rotations"));
    Check x = count_check("xnor_xor_separation", orbit.xor_hits == 0,
                          static_cast<double>(orbit.xor_hits), orbit.group_samples,
                          "XNOR and XOR seeds not connected (sampled)");
    x.details = {{"min_distance", orbit.min_distance_to_xor}};
    out.push_back(x);
  }

  // closed form against Pade exponential
  const std::vector<SwapGenerator> basis = n == 2 ? swap_basis() : adjoint_basis(n);
  double cf = 0.0;
  std::size_t cf_samples = 0;
  {
    Rng rng(cfg.seed + 4);
    std::uniform_real_distribution<double> angle(-2.0 * std::numbers::pi, 2.0 * std::numbers::pi);
    for (const auto& g : basis) {
      for (int k = 0; k < 20; ++k) {
        const double t = angle(rng);
        cf = std::max(cf, (closed_form_exp(g, t).matrix - generic_exp(g, t).matrix).cwiseAbs().maxCoeff());
        ++cf_samples;
      }
    }
  }
  out.push_back(make_check("closed_form_exponential", cf, 1e-10, cf_samples,
                           "closed-form exponential of a swap generator"));

  if (n >= 2) {
    double emb = 0.0;
    for (const auto& e : coincidence_table()) {
      const SwapGenerator g = swap_generator(e.a, e.b);
      for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
          std::vector<Axis> axes(static_cast<std::size_t>(n), Axis::I);
          axes[static_cast<std::size_t>(i - 1)] = e.overlap.axis(0);
          axes[static_cast<std::size_t>(j - 1)] = e.overlap.axis(1);
          const RMatrix ad = adjoint_generator(QuestionIndex::from_axes(axes)).matrix;
          emb = std::max(emb, (embed_pair_generator(g, i, j, n).matrix - e.sign * ad)
                                  .cwiseAbs()
                                  .maxCoeff());
        }
      }
    }
    out.push_back(make_check("pair_embedding", emb, 1e-12, 15,
                             "embedded two-qubit generators are adjoint generators"));
  }

  // Hamiltonian path: induced T, generator map and finite-difference von Neumann check
  double orth = 0.0, state_dev = 0.0, deriv = 0.0, gen_dev = 0.0;
  const std::size_t hams = std::max<std::size_t>(1, std::min<std::size_t>(cfg.samples / 100, 20));
  for (std::size_t k = 0; k < hams; ++k) {
    Rng rng = stream(cfg.seed + 5, k);
    std::normal_distribution<double> gauss;
    RVector c(static_cast<Eigen::Index>(bloch_dim(n)));
    for (Eigen::Index i = 0; i < c.size(); ++i) c(i) = gauss(rng);
    const HermitianMatrix h(pauli_combination(n, c) / c.norm());
    const double t = std::uniform_real_distribution<double>(-3.0, 3.0)(rng);
    const VonNeumannReport vn = von_neumann_consistency(h, t, 10, cfg.seed + k);
    orth = std::max(orth, vn.orthogonality_residual);
    state_dev = std::max(state_dev, vn.max_state_deviation);
    deriv = std::max(deriv, vn.max_derivative_error);
    const RMatrix tg = generic_exp(hamiltonian_generator(h, n), t, n).matrix;
    gen_dev = std::max(gen_dev, (tg - induced_evolution(unitary_exp(h, t), n).matrix).cwiseAbs().maxCoeff());
  }
  out.push_back(make_check("induced_orthogonality", orth, 1e-10, hams, "unitary evolution is orthogonal"));
  out.push_back(make_check("von_neumann_states", state_dev, cfg.tolerance, hams * 10,
                           "Bloch and Hilbert evolution agree"));
  out.push_back(make_check("von_neumann_derivative", deriv, 1e-6, hams * 10,
                           "finite-difference von Neumann equation"));
  out.push_back(make_check("hamiltonian_generator", gen_dev, 1e-9, hams,
                           "Bloch generator of a Hamiltonian"));
  return out;
}

// ---------------------------------------------------------------------------

inline std::vector<Check> purestates(const SuiteConfig& cfg) {
  const int n = cfg.n_qubits;
  require_qubits(n, 3);
  std::vector<Check> out;
  const auto states = pure_samples(cfg, n, 6);

  double prod = 0.0, orth = 0.0, map = 0.0;
  std::size_t failures = 0;
  const BlochVector target = basis_seed(n, 0);
  for (const auto& r : states) {
    try {
      const ProductForm pf = evolve_to_product(r);
      prod = std::max(prod, (pf.product - target).components().cwiseAbs().maxCoeff());
      orth = std::max(orth, pf.evolution.orthogonality_residual());
      map = std::max(map, (pf.evolution.apply(r) - pf.product).components().cwiseAbs().maxCoeff());
    } catch (const NotPureState&) {
      ++failures;
    }
  }
  Check p = count_check("evolve_to_product", failures == 0 && prod <= 1e-8 && orth <= 1e-10,
                        std::max(prod, static_cast<double>(failures)), states.size(),
                        "every pure state evolves to a product state");
  p.details = {{"orthogonality", orth}, {"failures", failures}};
  out.push_back(p);

  double seed_dev = 0.0;
  std::size_t illegal = 0;
  const SeedSet seeds = seed_states(n, Convention::xnor);
  for (std::size_t b = 0; b < seeds.vectors.size(); ++b) {
    illegal += !legality(seeds.vectors[b]).legal;
    CVector basis_state = CVector::Zero(static_cast<Eigen::Index>(hilbert_dim(n)));
    basis_state(static_cast<Eigen::Index>(b)) = 1.0;
    seed_dev = std::max(seed_dev, (bloch_from_amplitudes(basis_state) - seeds.vectors[b])
                                      .components()
                                      .cwiseAbs()
                                      .maxCoeff());
  }
  out.push_back(count_check("xnor_seeds", illegal == 0 && seed_dev <= 1e-12,
                            seed_dev + static_cast<double>(illegal), seeds.vectors.size(),
                            "XNOR seed states are basis projectors"));

  if (n == 2) {
    double pure = 0.0;
    for (const auto& r : states) pure = std::max(pure, pure_state_check(r).max_residual());
    out.push_back(make_check("pure_state_equations", pure, cfg.tolerance, states.size(),
                             "21 pure-state equations"));
    std::size_t legal_xor = 0;
    for (const auto& r : seed_states(2, Convention::xor_).vectors) legal_xor += legality(r).legal;
    out.push_back(count_check("xor_seeds_illegal_in_xnor", legal_xor == 0,
                              static_cast<double>(legal_xor), 4,
                              "XOR class is a different convention"));
  }
  return out;
}

// ---------------------------------------------------------------------------

inline std::vector<Check> born(const SuiteConfig& cfg) {
  const int n = cfg.n_qubits;
  require_qubits(n, 3);
  std::vector<Check> out;

  double dual = 0.0, heis = 0.0, simul = 0.0, affine = 0.0;
  for (std::size_t k = 0; k < cfg.samples; ++k) {
    Rng rng = stream(cfg.seed + 7, k);
    const QuestionVector q = random_question(n, rng);
    const BlochVector r = k % 2 ? sample_pure(n, rng).bloch : sample_mixed(n, rng);
    dual = std::max(dual, std::abs(born(q, r) - born_trace(q, r)));
    const EvolutionMatrix t = induced_evolution(haar_unitary(hilbert_dim(n), rng), n);
    const DualityResidual d = dual_evolution_check(q, r, t);
    heis = std::max(heis, d.heisenberg);
    simul = std::max(simul, d.simultaneous);
    const BlochVector r2 = sample_pure(n, rng).bloch;
    const double lam = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    affine = std::max(affine, std::abs(born(q, lam * r + (1.0 - lam) * r2) -
                                       (lam * born(q, r) + (1.0 - lam) * born(q, r2))));
  }
  out.push_back(make_check("born_dual_path", dual, 1e-12, cfg.samples, "Born rule"));
  out.push_back(make_check("heisenberg_schroedinger", heis, 1e-12, cfg.samples,
                           "state/question duality"));
  out.push_back(make_check("simultaneous_evolution", simul, 1e-12, cfg.samples,
                           "state/question duality"));
  out.push_back(make_check("affine_mixtures", affine, 1e-12, cfg.samples,
                           "affine linearity in the state"));

  double table = 0.0;
  for (const auto& qi : all_questions(n)) {
    const QuestionVector q(qi);
    table = std::max(table, std::abs(born(q, BlochVector(n)) - 0.5));
    for (const auto& rj : all_questions(n)) {
      table = std::max(table, std::abs(born(q, BlochVector::delta(rj)) -
                                       0.5 * (1.0 + (qi == rj ? 1.0 : 0.0))));
    }
  }
  out.push_back(make_check("basis_table", table, 0.0, bloch_dim(n) * bloch_dim(n),
                           "basis Born table"));

  std::size_t relation_changes = 0;
  double orbit = 0.0;
  {
    const auto qs = all_questions(n);
    const std::size_t trials = std::min<std::size_t>(cfg.samples, 20);
    for (std::size_t k = 0; k < trials; ++k) {
      Rng rng = stream(cfg.seed + 8, k);
      const EvolutionMatrix t = induced_evolution(haar_unitary(hilbert_dim(n), rng), n);
      for (std::size_t a = 0; a < qs.size(); ++a) {
        const RVector ta = t.matrix.col(static_cast<Eigen::Index>(a));
        const QuestionCheck qc = is_question(n, ta, 1e-8);
        orbit = std::max(orbit, qc ? 0.0 : 1.0);
        orbit = std::max(orbit, std::abs(0.5 * (1.0 + ta.squaredNorm()) - 1.0));
        for (std::size_t b = a + 1; b < qs.size(); ++b) {
          const RVector tb = t.matrix.col(static_cast<Eigen::Index>(b));
          const CMatrix pa = pauli_combination(n, ta);
          const CMatrix pb = pauli_combination(n, tb);
          const bool anti = (pa * pb + pb * pa).cwiseAbs().maxCoeff() < 1e-8;
          relation_changes += anti != anticommute(qs[a], qs[b]);
        }
      }
    }
  }
  out.push_back(count_check("relations_preserved", relation_changes == 0,
                            static_cast<double>(relation_changes), bloch_dim(n),
                            "question graph invariant under evolution"));
  out.push_back(make_check("question_orbit", orbit, 1e-8, bloch_dim(n),
                           "evolved questions are question vectors"));

  if (n == 2) {
    BlochVector ill(2);
    ill[QuestionIndex::parse("x0")] = 1.0 / std::sqrt(2.0);
    ill[QuestionIndex::parse("0x")] = 1.0 / std::sqrt(2.0);
    const Legality a = legality(ill);
    BlochVector fixed = ill;
    fixed[QuestionIndex::parse("xx")] = std::sqrt(2.0) - 1.0;
    const Legality b = legality(fixed);
    const bool ok = !a.legal && b.min_eigenvalue >= -1e-9 && b.min_eigenvalue <= 1e-6;
    Check c = count_check("legality_boundary", ok, std::abs(b.min_eigenvalue), 2,
                          "illegal state and its boundary repair");
    c.details = {{"illegal_min_eigenvalue", a.min_eigenvalue},
                 {"repaired_min_eigenvalue", b.min_eigenvalue}};
    out.push_back(c);

    RVector v = RVector::Zero(15);
    for (const char* l : {"z0", "0z", "zz"}) {
      v(static_cast<Eigen::Index>(QuestionIndex::parse(l).ordinal())) = 1.0 / std::sqrt(3.0);
    }
    const bool rejected = !is_question(2, v);
    out.push_back(count_check("rescaled_state_not_question", rejected, rejected ? 0.0 : 1.0, 1,
                              "rescaled pure state is not a question"));
  }
  return out;
}

// ---------------------------------------------------------------------------

inline std::vector<Check> decompose(const SuiteConfig& cfg) {
  const int n = cfg.n_qubits;
  require_qubits(n, 3);
  std::vector<Check> out;
  const auto patterns = product_decompositions(n);
  bool ok = n <= 2 ? patterns.size() == 1 : patterns.size() >= 2;
  bool witness = true;
  if (n == 3) {
    witness = contains_decomposition(patterns, permuted_seed_patterns(3, {0, 2, 1, 4, 3, 5, 6, 7}));
  }
  Check c = count_check("decomposition_count", ok && witness, ok && witness ? 0.0 : 1.0, 1,
                        "decomposition (non-)uniqueness");
  c.details = {{"count", patterns.size()}, {"witness_present", witness}};
  out.push_back(c);

  // on random pure states: sum, unit length, compatibility and certainty
  double sum_dev = 0.0, unit_dev = 0.0, born_dev = 0.0;
  std::size_t incompatible = 0;
  const std::size_t trials = std::min<std::size_t>(cfg.samples, n == 3 ? 5 : 50);
  for (std::size_t k = 0; k < trials; ++k) {
    Rng rng = stream(cfg.seed + 9, k);
    const BlochVector r = sample_pure(n, rng).bloch;
    const auto ds = decompose_pure(r);
    const std::size_t limit = std::min<std::size_t>(ds.size(), 50);
    for (std::size_t i = 0; i < limit; ++i) {
      const Decomposition& d = ds[i];
      RVector sum = RVector::Zero(r.size());
      std::vector<CMatrix> ops;
      for (const auto& q : d.questions) {
        sum += q.components();
        unit_dev = std::max(unit_dev, std::abs(q.squared_norm() - 1.0));
        born_dev = std::max(born_dev, std::abs(0.5 * (1.0 + q.components().dot(r.components())) - 1.0));
        ops.push_back(pauli_combination(n, q.components()));
      }
      sum_dev = std::max(sum_dev, (sum - r.components()).cwiseAbs().maxCoeff());
      for (std::size_t a = 0; a < ops.size(); ++a) {
        for (std::size_t b = a + 1; b < ops.size(); ++b) {
          incompatible += (ops[a] * ops[b] - ops[b] * ops[a]).cwiseAbs().maxCoeff() > 1e-8;
        }
      }
    }
  }
  out.push_back(make_check("decomposition_sum", sum_dev, 1e-8, trials, "pure state as question sum"));
  out.push_back(make_check("decomposition_unit_questions", std::max(unit_dev, born_dev), 1e-8,
                           trials, "decomposition members are certain 1-bit questions"));
  out.push_back(count_check("decomposition_compatible", incompatible == 0,
                            static_cast<double>(incompatible), trials,
                            "decomposition members are compatible"));
  return out;
}

// ---------------------------------------------------------------------------

inline double sigma_distance(double freq, double p, std::size_t shots) {
  const double se = std::sqrt(p * (1.0 - p) / static_cast<double>(shots));
  return se > 0 ? std::abs(freq - p) / se : std::abs(freq - p);
}

inline std::vector<Check> interrogate(const SuiteConfig& cfg) {
  const int n = cfg.n_qubits;
  require_qubits(n, 3);
  std::vector<Check> out;
  const std::size_t shots = cfg.samples;
  auto label = [n](char axis, int qubit) {
    std::string s(static_cast<std::size_t>(n), '0');
    s[static_cast<std::size_t>(qubit - 1)] = axis;
    return QuestionVector::parse(s);
  };
  const BlochVector none(n);

  {
    const ShotStatistics st = run_shots(none, {label('z', 1)}, shots, cfg.seed + 10);
    const double z = sigma_distance(st.frequency(0), 0.5, shots);
    Check c = count_check("single_question_frequency", z <= 3.0, z, shots,
                          "Born frequencies from no information");
    c.details = {{"frequency", st.frequency(0)}};
    out.push_back(c);
  }
  {
    const ShotStatistics st =
        run_shots(none, {label('x', 1), label('y', 1), label('x', 1)}, shots, cfg.seed + 11);
    const double z = sigma_distance(st.frequency(2), 0.5, shots);
    Check c = count_check("complementary_information_loss", z <= 3.0, z, shots,
                          "complementary question erases the answer");
    c.details = {{"frequency", st.frequency(2)}};
    out.push_back(c);
  }
  {
    std::size_t changed = 0;
    const std::size_t trials = std::min<std::size_t>(shots, 500);
    for (std::size_t k = 0; k < trials; ++k) {
      Rng rng = stream(cfg.seed + 12, k);
      const QuestionVector q = random_question(n, rng);
      const BlochVector prior = sample_mixed(n, rng);
      const InterrogationRecord rec = interrogate(prior, {q, q}, rng);
      changed += rec.answers[0] != rec.answers[1];
    }
    out.push_back(count_check("repeatability", changed == 0, static_cast<double>(changed), trials,
                              "questions are repeatable"));
  }
  if (n >= 2) {
    std::size_t lost = 0;
    const std::size_t trials = std::min<std::size_t>(shots, 500);
    for (std::size_t k = 0; k < trials; ++k) {
      Rng rng = stream(cfg.seed + 13, k);
      const InterrogationRecord rec = interrogate(none, {label('x', 1), label('x', 2)}, rng);
      const double kept = rec.posterior[QuestionIndex::parse(std::string("x") + std::string(static_cast<std::size_t>(n - 1), '0'))];
      lost += std::abs(kept - rec.answers[0]) > 1e-9;
    }
    out.push_back(count_check("compatible_answers_retained", lost == 0, static_cast<double>(lost),
                              trials, "compatible independent questions keep answers"));
  }
  if (n == 2) {
    std::size_t bad = 0;
    double purity = 0.0;
    const std::size_t trials = std::min<std::size_t>(shots, 500);
    for (std::size_t k = 0; k < trials; ++k) {
      Rng rng = stream(cfg.seed + 14, k);
      const InterrogationRecord rec = interrogate(
          none, {QuestionVector::parse("z0"), QuestionVector::parse("0z"), QuestionVector::parse("zz")},
          rng);
      const double p3 = rec.yes_probability[2];
      bad += std::abs(p3 - 0.5 * (1.0 + rec.answers[0] * rec.answers[1])) > 1e-12;
      bool seed = false;
      for (const auto& s : seed_states(2, Convention::xnor).vectors) {
        seed = seed || (s - rec.posterior).components().cwiseAbs().maxCoeff() < 1e-9;
      }
      bad += !seed;
      purity = std::max(purity, pure_state_check(rec.posterior).max_residual());
    }
    out.push_back(count_check("dependent_third_bit", bad == 0 && purity <= cfg.tolerance,
                              std::max(static_cast<double>(bad), purity), trials,
                              "correlation question is dependent"));
  }
  return out;
}

// ---------------------------------------------------------------------------

inline std::vector<Check> conjecture_n3(const SuiteConfig& cfg) {
  const std::size_t samples = std::min<std::size_t>(cfg.samples, 200);
  const ConjectureReport rep = conjecture_report(3, samples, cfg.seed + 15);
  Check c{"maximal_set_information_n3", true, 0.0, samples,
          "exploratory: maximal sets at three qubits", Json::object()};
  Json by_size = Json::object();
  std::map<std::size_t, std::array<double, 3>> agg;  // min, max, mean-sum
  std::map<std::size_t, std::size_t> counts;
  for (const auto& s : rep.sets) {
    const std::size_t k = s.set.members.size();
    auto it = agg.find(k);
    if (it == agg.end()) it = agg.emplace(k, std::array<double, 3>{s.min, s.max, 0.0}).first;
    it->second[0] = std::min(it->second[0], s.min);
    it->second[1] = std::max(it->second[1], s.max);
    it->second[2] += s.mean;
    ++counts[k];
  }
  for (const auto& [k, v] : agg) {
    by_size[std::to_string(k)] = {{"sets", counts[k]},
                                  {"min", v[0]},
                                  {"max", v[1]},
                                  {"mean", v[2] / static_cast<double>(counts[k])}};
  }
  c.details = {{"sets", rep.sets.size()},
               {"global_min", rep.global_min},
               {"global_max", rep.global_max},
               {"by_size", by_size}};
  return {c};
}

}  // namespace suites

/// Runs one named suite or "all" (the individual suites in registration order).
inline CheckReport run_suite(const SuiteConfig& cfg) {
  if (cfg.samples < 1) throw std::invalid_argument("samples must be >= 1");
  using Runner = std::function<std::vector<Check>(const SuiteConfig&)>;
  static const std::map<std::string, Runner> runners{
      {"graph", suites::graph},           {"charges", suites::charges},
      {"generators", suites::generators}, {"purestates", suites::purestates},
      {"born", suites::born},             {"decompose", suites::decompose},
      {"interrogate", suites::interrogate}, {"conjecture-n3", suites::conjecture_n3}};
  if (cfg.suite != "all" && !runners.contains(cfg.suite)) {
    throw UnknownSuite("unknown suite '" + cfg.suite + "'");
  }
  if (cfg.state) require_same_qubits(cfg.state->n_qubits(), cfg.n_qubits);

  const auto start = std::chrono::steady_clock::now();
  CheckReport rep{cfg.suite, cfg, {}, 0.0};
  for (const auto& name : suite_names()) {
    if (cfg.suite != "all" && cfg.suite != name) continue;
    for (auto& c : runners.at(name)(cfg)) {
      if (cfg.suite == "all") c.name = name + "." + c.name;
      rep.checks.push_back(std::move(c));
    }
  }
  if (cfg.timing) {
    rep.wall_time_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
  return rep;
}

inline Json report_to_json(const CheckReport& rep) {
  Json checks = Json::array();
  for (const auto& c : rep.checks) {
    Json j{{"name", c.name},
           {"passed", c.passed},
           {"max_violation", c.max_violation},
           {"samples", c.samples},
           {"paper_ref", c.paper_ref}};
    if (!c.details.empty()) j["details"] = c.details;
    checks.push_back(std::move(j));
  }
  Json config{{"n_qubits", rep.config.n_qubits},
              {"samples", rep.config.samples},
              {"seed", rep.config.seed},
              {"tolerance", rep.config.tolerance}};
  if (rep.config.state) config["state"] = state_to_json(*rep.config.state);
  return Json{{"suite", rep.suite},
              {"config", config},
              {"passed", rep.passed()},
              {"checks", checks},
              {"wall_time_ms", rep.wall_time_ms}};
}

/// Fixed-width table.
inline std::string report_to_text(const CheckReport& rep) {
  std::ostringstream os;
  os << "suite " << rep.suite << "  N=" << rep.config.n_qubits << "  samples=" << rep.config.samples
     << "  seed=" << rep.config.seed << "  tol=" << rep.config.tolerance << '\n';
  os << std::left << std::setw(52) << "check" << std::setw(6) << "ok" << std::setw(14)
     << "max_violation" << "samples\n";
  for (const auto& c : rep.checks) {
    os << std::left << std::setw(52) << c.name << std::setw(6) << (c.passed ? "PASS" : "FAIL")
       << std::setw(14) << std::setprecision(4) << c.max_violation << c.samples << '\n';
  }
  os << (rep.passed() ? "all checks passed" : "some checks FAILED");
  if (rep.config.timing) os << "  (" << std::fixed << std::setprecision(1) << rep.wall_time_ms << " ms)";
  os << '\n';
  return os.str();
}

}  // namespace qrecon
