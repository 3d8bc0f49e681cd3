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

// JSON readers and writers for states, question vectors, interrogation
// scripts, generators, complementarity sets and decompositions.
//
// State files take one of three forms:
//   {"n_qubits": 2, "components": {"zz": 1.0}}     (or a dense array)
//   {"amplitudes": [[1, 0], [0, 0], [0, 0], [0, 0]]}
//   {"zz": 1.0, "x0": 0.5}                         (N from the label length)

#pragma once

#include "qrecon/interrogation.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace qrecon {

using Json = nlohmann::json;

namespace detail {

inline int qubits_for_components(std::size_t count) {
  for (int n = 1; n <= kMaxQubits; ++n) {
    if (bloch_dim(n) == count) return n;
  }
  throw DimensionMismatch("no qubit count has " + std::to_string(count) + " Bloch components");
}

inline double number(const Json& j, const std::string& what) {
  if (!j.is_number()) throw InputError(what + " must be a number");
  return j.get<double>();
}

inline QuestionIndex label(const std::string& text, int expected_n) {
  const QuestionIndex q = QuestionIndex::parse(text);
  if (expected_n > 0) require_same_qubits(q.n_qubits(), expected_n);
  return q;
}

/// Sparse {label: value} map; N from `n` or, if 0, from the first label.
inline BlochVector sparse_components(const Json& obj, int n) {
  if (obj.empty() && n == 0) throw InputError("empty component map without n_qubits");
  if (n == 0) n = QuestionIndex::parse(obj.begin().key()).n_qubits();
  BlochVector r(n);
  for (const auto& [key, value] : obj.items()) r[label(key, n)] = number(value, key);
  return r;
}

inline RVector dense_components(const Json& arr) {
  RVector v(static_cast<Eigen::Index>(arr.size()));
  for (std::size_t k = 0; k < arr.size(); ++k) {
    v(static_cast<Eigen::Index>(k)) = number(arr[k], "component");
  }
  return v;
}

}  // namespace detail

inline CVector amplitudes_from_json(const Json& arr) {
  if (!arr.is_array()) throw InputError("amplitudes must be an array of [re, im] pairs");
  CVector psi(static_cast<Eigen::Index>(arr.size()));
  for (std::size_t k = 0; k < arr.size(); ++k) {
    const Json& a = arr[k];
    if (a.is_number()) {
      psi(static_cast<Eigen::Index>(k)) = a.get<double>();
    } else if (a.is_array() && a.size() == 2) {
      psi(static_cast<Eigen::Index>(k)) =
          Complex(detail::number(a[0], "re"), detail::number(a[1], "im"));
    } else {
      throw InputError("amplitude entries must be numbers or [re, im] pairs");
    }
  }
  return psi;
}

inline BlochVector state_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("state must be a JSON object");
  if (j.contains("amplitudes")) {
    const CVector psi = amplitudes_from_json(j.at("amplitudes"));
    const BlochVector r = bloch_from_amplitudes(psi);
    if (j.contains("n_qubits")) require_same_qubits(j.at("n_qubits").get<int>(), r.n_qubits());
    return r;
  }
  if (j.contains("components")) {
    const Json& c = j.at("components");
    int n = 0;
    if (j.contains("n_qubits")) {
      if (!j.at("n_qubits").is_number_integer()) throw InputError("n_qubits must be an integer");
      n = j.at("n_qubits").get<int>();
      require_qubits(n);
    }
    if (c.is_array()) {
      const RVector v = detail::dense_components(c);
      const int inferred = detail::qubits_for_components(static_cast<std::size_t>(v.size()));
      if (n != 0) require_same_qubits(n, inferred);
      return BlochVector(inferred, v);
    }
    if (c.is_object()) return detail::sparse_components(c, n);
    throw InputError("components must be an object or an array");
  }
  return detail::sparse_components(j, 0);
}

inline Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

/// Reads a state file; with `require_legal` illegal states raise InputError.
inline BlochVector load_state(const std::filesystem::path& path, bool require_legal = false,
                              double tol = kPositivityTol) {
  const Json j = read_json_file(path);
  BlochVector r = [&] {
    try {
      return state_from_json(j);
    } catch (const Json::exception& e) {
      throw InputError(path.string() + ": " + e.what());
    }
  }();
  if (require_legal) {
    const Legality l = legality(r, tol);
    if (!l.legal) {
      throw InputError("illegal state: minimum density eigenvalue " +
                       std::to_string(l.min_eigenvalue));
    }
  }
  return r;
}

/// Sparse form, dropping components with |r_i| <= tol.
inline Json state_to_json(const BlochVector& r, double tol = 0.0) {
  Json comps = Json::object();
  for (const auto& q : all_questions(r.n_qubits())) {
    if (std::abs(r[q]) > tol) comps[q.to_string()] = r[q];
  }
  return Json{{"n_qubits", r.n_qubits()}, {"components", comps}};
}

/// Index string, dense array or sparse map.
inline QuestionVector question_from_json(const Json& j, int n_qubits = 0) {
  if (j.is_string()) {
    const QuestionIndex q = detail::label(j.get<std::string>(), n_qubits);
    return QuestionVector(q);
  }
  if (j.is_array()) {
    const RVector v = detail::dense_components(j);
    const int n = detail::qubits_for_components(static_cast<std::size_t>(v.size()));
    if (n_qubits > 0) require_same_qubits(n, n_qubits);
    return QuestionVector(n, v);
  }
  if (j.is_object()) {
    const BlochVector r = detail::sparse_components(j, n_qubits);
    return QuestionVector(r.n_qubits(), r.components());
  }
  throw InputError("question must be an index string, an array or an object");
}

inline Json question_to_json(const QuestionVector& q) {
  const RVector& v = q.components();
  for (const auto& idx : all_questions(q.n_qubits())) {
    const double c = v(static_cast<Eigen::Index>(idx.ordinal()));
    if (std::abs(c - 1.0) < 1e-12) return idx.to_string();
  }
  return state_to_json(BlochVector(q.n_qubits(), v), 1e-15).at("components");
}

// ---------------------------------------------------------------------------
// Interrogation scripts.

struct InterrogationScript {
  BlochVector prior{1};
  std::vector<QuestionVector> questions;
  std::size_t shots = 1;
  std::uint64_t seed = 42;
};

/// {"prior": <state>, "questions": [...], "shots": n, "seed": s}; a missing
/// prior means the state of no information, which then needs "n_qubits".
inline InterrogationScript script_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("questions") || !j.at("questions").is_array()) {
    throw InputError("script needs a \"questions\" array");
  }
  InterrogationScript s;
  int n = 0;
  if (j.contains("prior")) {
    s.prior = state_from_json(j.at("prior"));
    n = s.prior.n_qubits();
  } else if (j.contains("n_qubits")) {
    n = j.at("n_qubits").get<int>();
    require_qubits(n);
    s.prior = BlochVector(n);
  } else {
    throw InputError("script needs a \"prior\" state or \"n_qubits\"");
  }
  for (const auto& q : j.at("questions")) s.questions.push_back(question_from_json(q, n));
  if (j.contains("shots")) {
    const auto shots = j.at("shots").get<long long>();
    if (shots < 1) throw InputError("shots must be >= 1");
    s.shots = static_cast<std::size_t>(shots);
  }
  if (j.contains("seed")) s.seed = j.at("seed").get<std::uint64_t>();
  return s;
}

inline InterrogationScript load_script(const std::filesystem::path& path) {
  const Json j = read_json_file(path);
  try {
    return script_from_json(j);
  } catch (const Json::exception& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

/// Per-shot answers plus aggregate 'yes' frequencies.
inline Json run_script(const InterrogationScript& s, bool include_records = true) {
  std::vector<InterrogationRecord> records;
  const ShotStatistics st =
      run_shots(s.prior, s.questions, s.shots, s.seed, include_records ? &records : nullptr);
  Json qs = Json::array();
  for (const auto& q : s.questions) qs.push_back(question_to_json(q));
  Json freq = Json::array();
  for (std::size_t k = 0; k < s.questions.size(); ++k) freq.push_back(st.frequency(k));
  Json out{{"prior", state_to_json(s.prior)},
           {"questions", qs},
           {"shots", s.shots},
           {"seed", s.seed},
           {"yes_frequencies", freq}};
  if (include_records) {
    Json recs = Json::array();
    for (const auto& r : records) recs.push_back(Json{{"answers", r.answers}});
    out["records"] = std::move(recs);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Exports.

/// {"label": ..., "n_qubits": N, "entries": [[i, j, v], ...]} (upper triangle).
inline Json generator_to_json(const SwapGenerator& g) {
  Json entries = Json::array();
  for (const auto& [i, j, v] : g.nonzeros(1e-15)) {
    entries.push_back(Json::array({i.to_string(), j.to_string(), v}));
  }
  return Json{{"label", g.label}, {"n_qubits", g.n_qubits}, {"entries", entries}};
}

inline Json sets_to_json(const std::vector<ComplementaritySet>& sets) {
  Json out = Json::array();
  for (const auto& s : sets) {
    Json members = Json::array();
    for (const auto& q : s.members) members.push_back(q.to_string());
    out.push_back(std::move(members));
  }
  return out;
}

inline Json decompositions_to_json(const std::vector<Decomposition>& ds) {
  Json out = Json::array();
  for (const auto& d : ds) {
    Json patterns = Json::array();
    for (const auto& p : d.patterns) patterns.push_back(to_string(p));
    out.push_back(std::move(patterns));
  }
  return out;
}

}  // namespace qrecon
