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

// The question graph: compatibility / complementarity, XNOR correlation
// triangles and maximal mutually complementary sets.

#pragma once

#include "qrecon/pauli.hpp"

#include <array>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace qrecon {

enum class Relation { compatible, complementary };

inline const char* to_string(Relation r) {
  return r == Relation::compatible ? "compatible" : "complementary";
}

/// Complementary iff the Pauli images anti-commute.
inline Relation relation(const QuestionIndex& a, const QuestionIndex& b) {
  if (a == b) throw std::invalid_argument("relation() needs two distinct questions");
  return anticommute(a, b) ? Relation::complementary : Relation::compatible;
}

/// Combinatorial rule: complementary iff the number of slots where both
/// indices are non-zero and differ is odd.
inline Relation relation_by_index_count(const QuestionIndex& a, const QuestionIndex& b) {
  require_same_qubits(a.n_qubits(), b.n_qubits());
  int clashes = 0;
  for (int k = 0; k < a.n_qubits(); ++k) {
    const Axis u = a.axis(k);
    const Axis v = b.axis(k);
    clashes += u != Axis::I && v != Axis::I && u != v;
  }
  return clashes % 2 ? Relation::complementary : Relation::compatible;
}

enum class Parity { even, odd };

/// Three mutually compatible questions, each the XNOR (even) or XOR (odd)
/// of the other two.
struct CorrelationTriangle {
  std::array<QuestionIndex, 3> members;
  Parity parity;
};

inline CorrelationTriangle correlation_triangle(const QuestionIndex& a, const QuestionIndex& b) {
  if (a == b) throw std::invalid_argument("correlation_triangle needs distinct questions");
  const PauliProduct p = symbolic_product(a, b);
  if (!p.phase.is_real()) {
    throw std::invalid_argument("questions " + a.to_string() + " and " + b.to_string() +
                                " are complementary; no correlation exists");
  }
  return CorrelationTriangle{{a, b, *p.result},
                             p.phase.power == 0 ? Parity::even : Parity::odd};
}

/// All correlation triangles, members sorted, triangles in lexicographic order.
inline std::vector<CorrelationTriangle> correlation_triangles(int n_qubits) {
  std::vector<CorrelationTriangle> out;
  const auto qs = all_questions(n_qubits);
  for (std::size_t i = 0; i < qs.size(); ++i) {
    for (std::size_t j = i + 1; j < qs.size(); ++j) {
      const PauliProduct p = symbolic_product(qs[i], qs[j]);
      if (!p.phase.is_real() || *p.result <= qs[j]) continue;
      out.push_back(CorrelationTriangle{{qs[i], qs[j], *p.result},
                                        p.phase.power == 0 ? Parity::even : Parity::odd});
    }
  }
  return out;
}

struct ComplementaritySet {
  std::vector<QuestionIndex> members;  // sorted
  bool maximal = false;

  bool contains(const QuestionIndex& q) const {
    return std::binary_search(members.begin(), members.end(), q);
  }
  bool operator==(const ComplementaritySet& o) const { return members == o.members; }

  std::string to_string() const {
    std::string s = "{";
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (i) s += ",";
      s += members[i].to_string();
    }
    return s + "}";
  }
};

inline ComplementaritySet make_set(const std::vector<std::string>& labels, bool maximal = true) {
  ComplementaritySet s;
  for (const auto& l : labels) s.members.push_back(QuestionIndex::parse(l));
  std::sort(s.members.begin(), s.members.end());
  s.maximal = maximal;
  return s;
}

inline bool is_mutually_complementary(const std::vector<QuestionIndex>& qs) {
  for (std::size_t i = 0; i < qs.size(); ++i) {
    for (std::size_t j = i + 1; j < qs.size(); ++j) {
      if (!anticommute(qs[i], qs[j])) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Named two-qubit sets. Individual questions x_1 = "x0", x_2 = "0x".

inline constexpr int kPentagonCount = 6;
inline constexpr int kTriangleCount = 20;

/// Pent_1 ... Pent_6 (1-based ids).
inline const ComplementaritySet& pentagon(int id) {
  static const std::array<ComplementaritySet, kPentagonCount> sets{
      make_set({"xx", "xy", "xz", "y0", "z0"}), make_set({"xx", "yx", "zx", "0y", "0z"}),
      make_set({"yx", "yy", "yz", "x0", "z0"}), make_set({"xy", "yy", "zy", "0x", "0z"}),
      make_set({"zx", "zy", "zz", "x0", "y0"}), make_set({"xz", "yz", "zz", "0x", "0y"}),
  };
  if (id < 1 || id > kPentagonCount) throw std::out_of_range("pentagon id must be 1..6");
  return sets[static_cast<std::size_t>(id - 1)];
}

/// Tri_1 ... Tri_20 (1-based ids).
inline const ComplementaritySet& triangle(int id) {
  static const std::array<ComplementaritySet, kTriangleCount> sets{
      make_set({"xx", "xy", "0z"}), make_set({"xx", "xz", "0y"}), make_set({"xx", "yx", "z0"}),
      make_set({"xx", "zx", "y0"}), make_set({"xy", "xz", "0x"}), make_set({"xy", "yy", "z0"}),
      make_set({"xy", "zy", "y0"}), make_set({"xz", "zz", "y0"}), make_set({"xz", "yz", "z0"}),
      make_set({"yx", "yy", "0z"}), make_set({"yx", "yz", "0y"}), make_set({"yx", "zx", "x0"}),
      make_set({"yy", "yz", "0x"}), make_set({"yy", "zy", "x0"}), make_set({"yz", "zz", "x0"}),
      make_set({"zx", "zy", "0z"}), make_set({"zx", "zz", "0y"}), make_set({"zy", "zz", "0x"}),
      make_set({"x0", "y0", "z0"}), make_set({"0x", "0y", "0z"}),
  };
  if (id < 1 || id > kTriangleCount) throw std::out_of_range("triangle id must be 1..20");
  return sets[static_cast<std::size_t>(id - 1)];
}

/// Pairs of triangles whose information contents coincide on pure states.
inline const std::array<std::pair<int, int>, 10>& triangle_identity_pairs() {
  static const std::array<std::pair<int, int>, 10> pairs{{
      {1, 15}, {2, 14}, {3, 18}, {4, 13}, {5, 12}, {6, 17}, {7, 11}, {8, 10}, {9, 16}, {19, 20},
  }};
  return pairs;
}

/// The unique question shared by two distinct pentagons.
inline QuestionIndex pentagon_overlap(int a, int b) {
  if (a == b) throw std::invalid_argument("pentagon_overlap needs distinct pentagons");
  const auto& pa = pentagon(a).members;
  const auto& pb = pentagon(b).members;
  std::vector<QuestionIndex> common;
  std::set_intersection(pa.begin(), pa.end(), pb.begin(), pb.end(), std::back_inserter(common));
  if (common.size() != 1) {
    throw std::logic_error("pentagons " + std::to_string(a) + "," + std::to_string(b) +
                           " share " + std::to_string(common.size()) + " questions");
  }
  return common.front();
}

/// Pentagons then triangles in their named order: all 26 maximal sets for N = 2.
inline std::vector<ComplementaritySet> named_maximal_sets_n2() {
  std::vector<ComplementaritySet> out;
  for (int a = 1; a <= kPentagonCount; ++a) out.push_back(pentagon(a));
  for (int t = 1; t <= kTriangleCount; ++t) out.push_back(triangle(t));
  return out;
}

// ---------------------------------------------------------------------------
// Graph-level queries.

namespace detail {

using Bits = std::uint64_t;

inline void bron_kerbosch(Bits r, Bits p, Bits x, const std::vector<Bits>& adj,
                          std::vector<Bits>& out) {
  if (p == 0 && x == 0) {
    out.push_back(r);
    return;
  }
  // pivot: vertex of P u X with most neighbours in P
  int pivot = -1;
  int best = -1;
  for (Bits px = p | x; px; px &= px - 1) {
    const int u = std::countr_zero(px);
    const int deg = std::popcount(p & adj[static_cast<std::size_t>(u)]);
    if (deg > best) {
      best = deg;
      pivot = u;
    }
  }
  for (Bits cand = p & ~adj[static_cast<std::size_t>(pivot)]; cand; cand &= cand - 1) {
    const int v = std::countr_zero(cand);
    const Bits vb = Bits{1} << v;
    bron_kerbosch(r | vb, p & adj[static_cast<std::size_t>(v)],
                  x & adj[static_cast<std::size_t>(v)], adj, out);
    p &= ~vb;
    x |= vb;
  }
}

}  // namespace detail

/// Every maximal clique of the complementarity graph, ordered
/// lexicographically by their sorted members.
inline std::vector<ComplementaritySet> maximal_complementary_sets(int n_qubits) {
  if (n_qubits < 1 || n_qubits > 3) {
    throw std::out_of_range("clique enumeration supports N <= 3");
  }
  const auto qs = all_questions(n_qubits);
  const std::size_t n = qs.size();
  std::vector<detail::Bits> adj(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && anticommute(qs[i], qs[j])) adj[i] |= detail::Bits{1} << j;
    }
  }
  std::vector<detail::Bits> cliques;
  const detail::Bits all = n == 64 ? ~detail::Bits{0} : (detail::Bits{1} << n) - 1;
  detail::bron_kerbosch(0, all, 0, adj, cliques);

  std::vector<ComplementaritySet> out;
  out.reserve(cliques.size());
  for (detail::Bits c : cliques) {
    ComplementaritySet s;
    for (; c; c &= c - 1) s.members.push_back(qs[static_cast<std::size_t>(std::countr_zero(c))]);
    s.maximal = true;
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.members < b.members; });
  return out;
}

/// True if no question outside `set` is complementary to all its members.
inline bool is_maximal(const ComplementaritySet& set, int n_qubits) {
  for (const auto& q : all_questions(n_qubits)) {
    if (set.contains(q)) continue;
    bool all = true;
    for (const auto& m : set.members) all = all && anticommute(q, m);
    if (all) return false;
  }
  return true;
}

struct DegreeCounts {
  int compatible = 0;
  int complementary = 0;
  bool operator==(const DegreeCounts&) const = default;
};

inline std::map<QuestionIndex, DegreeCounts> degree_profile(int n_qubits) {
  require_qubits(n_qubits, 4);
  const auto qs = all_questions(n_qubits);
  std::map<QuestionIndex, DegreeCounts> out;
  for (const auto& a : qs) {
    DegreeCounts d;
    for (const auto& b : qs) {
      if (a == b) continue;
      (anticommute(a, b) ? d.complementary : d.compatible)++;
    }
    out.emplace(a, d);
  }
  return out;
}

inline std::size_t complementary_pair_count(int n_qubits) {
  std::size_t twice = 0;
  for (const auto& [q, d] : degree_profile(n_qubits)) twice += static_cast<std::size_t>(d.complementary);
  return twice / 2;
}

/// Line-oriented adjacency export: "<a> <b> <compatible|complementary>".
inline std::string export_graph(int n_qubits) {
  const auto qs = all_questions(n_qubits);
  std::ostringstream os;
  for (std::size_t i = 0; i < qs.size(); ++i) {
    for (std::size_t j = i + 1; j < qs.size(); ++j) {
      os << qs[i].to_string() << ' ' << qs[j].to_string() << ' '
         << to_string(relation(qs[i], qs[j])) << '\n';
    }
  }
  return os.str();
}

}  // namespace qrecon
