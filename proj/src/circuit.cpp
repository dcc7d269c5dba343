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

#include "qgraph/circuit.hpp"

#include <algorithm>
#include <stdexcept>

namespace qgraph {

Circuit::Circuit(Field f, std::vector<InitKind> pattern, std::vector<Gate> g)
    : field(std::move(f)),
      num_qudits(static_cast<int>(pattern.size())),
      init(std::move(pattern)),
      gates(std::move(g)) {}

void Circuit::validate() const {
  if (num_qudits < 1) throw std::invalid_argument("circuit needs at least one qudit");
  if (static_cast<int>(init.size()) != num_qudits) {
    throw std::invalid_argument("initial pattern length differs from qudit count");
  }
  for (const auto& g : gates) qgraph::validate(g, field, num_qudits);
}

int Circuit::count_plus() const {
  return static_cast<int>(std::count(init.begin(), init.end(), InitKind::Plus));
}

bool Circuit::only_controlled_adds() const {
  return std::all_of(gates.begin(), gates.end(),
                     [](const Gate& g) { return g.kind == GateKind::C; });
}

StateVector Circuit::simulate() const {
  validate();
  auto st = StateVector::init(field, init);
  st.apply(gates);
  return st;
}

GraphState::GraphState(Field field, int num_qudits, std::vector<int> s_vertices, EdgeMap edges)
    : field_(std::move(field)), num_qudits_(num_qudits), s_(std::move(s_vertices)) {
  if (num_qudits_ < 1) throw std::invalid_argument("graph needs at least one vertex");
  std::sort(s_.begin(), s_.end());
  if (std::adjacent_find(s_.begin(), s_.end()) != s_.end()) {
    throw std::invalid_argument("S has duplicate vertices");
  }
  for (int q : s_) {
    if (q < 1 || q > num_qudits_) throw std::invalid_argument("S vertex out of range");
  }
  for (int q = 1; q <= num_qudits_; ++q) {
    if (!in_s(q)) o_.push_back(q);
  }
  for (const auto& [e, b] : edges) set_edge(e.first, e.second, b);
}

bool GraphState::in_s(int q) const { return std::binary_search(s_.begin(), s_.end(), q); }

Element GraphState::label(int i, int j) const {
  auto it = edges_.find({i, j});
  return it == edges_.end() ? Element{0} : it->second;
}

void GraphState::set_edge(int i, int j, Element b) {
  if (!in_s(i) || j < 1 || j > num_qudits_ || in_s(j)) {
    throw std::invalid_argument("edge " + std::to_string(i) + "->" + std::to_string(j) +
                                " must run from S to O");
  }
  field_.element(b.index);
  if (b.is_zero()) {
    edges_.erase({i, j});
  } else {
    edges_[{i, j}] = b;
  }
}

std::vector<InitKind> GraphState::init_pattern() const {
  std::vector<InitKind> pattern(num_qudits_, InitKind::Zero);
  for (int q : s_) pattern[q - 1] = InitKind::Plus;
  return pattern;
}

Circuit GraphState::to_circuit() const {
  std::vector<Gate> gates;
  for (const auto& [e, b] : edges_) gates.push_back(Gate::C(e.first, e.second, b));
  return Circuit(field_, init_pattern(), std::move(gates));
}

StateVector GraphState::simulate() const { return to_circuit().simulate(); }

}  // namespace qgraph
