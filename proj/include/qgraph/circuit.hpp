// Copyright 2026 The qgraph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <map>
#include <utility>
#include <vector>

#include "qgraph/gate.hpp"
#include "qgraph/gf.hpp"
#include "qgraph/simulator.hpp"

namespace qgraph {

/// A register prepared in a product of |s> and |0> factors followed by a
/// gate sequence in time order.
struct Circuit {
  Field field;
  int num_qudits = 0;
  std::vector<InitKind> init;
  std::vector<Gate> gates;

  Circuit(Field f, std::vector<InitKind> pattern, std::vector<Gate> g = {});

  /// Throws std::invalid_argument on a malformed pattern or gate.
  void validate() const;
  int count_plus() const;
  bool only_controlled_adds() const;

  StateVector simulate() const;
};

/// Bipartite graph state: every qudit in S starts in |s>, every qudit in O
/// in |0>, and each edge i -> j (i in S, j in O) carries C_ij(b_ij). The
/// controlled adds commute, so the edge set fixes the state.
class GraphState {
 public:
  using EdgeMap = std::map<std::pair<int, int>, Element>;

  GraphState(Field field, int num_qudits, std::vector<int> s_vertices, EdgeMap edges = {});

  const Field& field() const { return field_; }
  int num_qudits() const { return num_qudits_; }
  const std::vector<int>& S() const { return s_; }
  const std::vector<int>& O() const { return o_; }
  const EdgeMap& edges() const { return edges_; }

  bool in_s(int q) const;
  /// b_ij, zero when absent.
  Element label(int i, int j) const;
  /// Sets b_ij; a zero label removes the edge.
  void set_edge(int i, int j, Element b);

  std::vector<InitKind> init_pattern() const;
  /// Standard-form circuit, gates ordered by (i, j).
  Circuit to_circuit() const;
  StateVector simulate() const;

  friend bool operator==(const GraphState& a, const GraphState& b) {
    return a.field_ == b.field_ && a.num_qudits_ == b.num_qudits_ && a.s_ == b.s_ &&
           a.edges_ == b.edges_;
  }

 private:
  Field field_;
  int num_qudits_;
  std::vector<int> s_;
  std::vector<int> o_;
  EdgeMap edges_;
};

}  // namespace qgraph
