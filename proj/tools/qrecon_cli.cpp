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

// qrecon: batch verification harness.
//
//   qrecon --suite charges --n-qubits 2 --samples 1000 --seed 7
//   qrecon --export graph --n-qubits 2
//   qrecon --script shots.json
//
// Exit codes: 0 all checks passed, 1 a check failed, 2 usage error,
// 3 input error (unreadable, malformed or illegal state), 4 dimension mismatch.

#include "qrecon/qrecon.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

enum Exit { kOk = 0, kCheckFailed = 1, kUsage = 2, kInput = 3, kDimension = 4 };

void emit(const std::string& text, const std::string& output) {
  if (output.empty() || output == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(output);
  if (!out) throw qrecon::InputError("cannot write " + output);
  out << text;
}

std::string export_artifact(const std::string& what, int n, const std::optional<qrecon::BlochVector>& state,
                            std::uint64_t seed) {
  using namespace qrecon;
  if (what == "graph") return export_graph(n);
  if (what == "sets") {
    const auto sets = n == 2 ? named_maximal_sets_n2() : maximal_complementary_sets(n);
    return sets_to_json(sets).dump(2) + "\n";
  }
  if (what == "generators") {
    Json out = Json::array();
    if (n == 2) {
      for (const auto& g : swap_basis()) out.push_back(generator_to_json(g));
    } else {
      for (const auto& g : adjoint_basis(n)) out.push_back(generator_to_json(g));
    }
    return out.dump(2) + "\n";
  }
  // decompositions
  const BlochVector r = state ? *state : sample_pure(n, seed).bloch;
  return decompositions_to_json(decompose_pure(r)).dump(2) + "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification harness for the informational reconstruction of qubit quantum theory"};
  qrecon::SuiteConfig cfg;
  std::string format = "json";
  std::string state_path;
  std::string script_path;
  std::string export_what;
  std::string output;
  bool require_legal = false;
  bool no_timing = false;
  bool no_records = false;

  std::vector<std::string> suites = qrecon::suite_names();
  suites.push_back("all");
  app.add_option("--suite", cfg.suite, "check suite to run")
      ->check(CLI::IsMember(suites));
  app.add_option("--n-qubits,-n", cfg.n_qubits, "number of qubits")
      ->check(CLI::Range(1, 4));
  app.add_option("--samples", cfg.samples, "random samples (shots for interrogate)")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "RNG seed");
  app.add_option("--tol", cfg.tolerance, "tolerance for Monte Carlo residuals")
      ->check(CLI::PositiveNumber);
  app.add_option("--state", state_path, "state file (Bloch or amplitude JSON)");
  app.add_flag("--require-legal", require_legal, "reject states with a non-positive density matrix");
  app.add_option("--format", format, "report format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--output,-o", output, "write the report to a file instead of stdout");
  app.add_flag("--no-timing", no_timing, "report wall_time_ms = 0 for byte-identical output");
  app.add_option("--script", script_path, "run an interrogation script (JSON)");
  app.add_flag("--no-records", no_records, "omit per-shot records from script output");
  app.add_option("--export", export_what, "dump an artifact instead of running checks")
      ->check(CLI::IsMember({"graph", "sets", "generators", "decompositions"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }
  cfg.timing = !no_timing;

  try {
    if (!state_path.empty()) {
      cfg.state = qrecon::load_state(state_path, require_legal);
      if (app.count("--n-qubits") == 0) cfg.n_qubits = cfg.state->n_qubits();
      qrecon::require_same_qubits(cfg.state->n_qubits(), cfg.n_qubits);
    }
    if (!script_path.empty()) {
      const qrecon::InterrogationScript script = qrecon::load_script(script_path);
      emit(qrecon::run_script(script, !no_records).dump(2) + "\n", output);
      return kOk;
    }
    if (!export_what.empty()) {
      if ((export_what == "sets" || export_what == "decompositions") && cfg.n_qubits > 3) {
        std::cerr << "error: --export " << export_what << " supports N <= 3\n";
        return kUsage;
      }
      emit(export_artifact(export_what, cfg.n_qubits, cfg.state, cfg.seed), output);
      return kOk;
    }
    if (cfg.n_qubits > 3) {
      std::cerr << "error: check suites support N <= 3\n";
      return kUsage;
    }
    const qrecon::CheckReport rep = qrecon::run_suite(cfg);
    emit(format == "json" ? qrecon::report_to_json(rep).dump(2) + "\n" : qrecon::report_to_text(rep),
         output);
    return rep.passed() ? kOk : kCheckFailed;
  } catch (const qrecon::DimensionMismatch& e) {
    std::cerr << "dimension mismatch: " << e.what() << '\n';
    return kDimension;
  } catch (const qrecon::InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInput;
  } catch (const qrecon::UnknownSuite& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInput;
  } catch (const std::out_of_range& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInput;
  }
}
