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

#include "qgraph/gate.hpp"

#include <stdexcept>

namespace qgraph {

std::vector<int> Gate::wires() const {
  if (is_two_qudit()) return {q0, q1};
  return {q0};
}

void validate(const Gate& g, const Field& field, int num_qudits) {
  auto in_range = [num_qudits](int q) { return q >= 1 && q <= num_qudits; };
  if (!in_range(g.q0) || (g.is_two_qudit() && !in_range(g.q1))) {
    throw std::invalid_argument("gate " + to_string(g) + " has a wire outside 1.." +
                                std::to_string(num_qudits));
  }
  if (g.is_two_qudit() && g.q0 == g.q1) {
    throw std::invalid_argument("gate " + to_string(g) + " repeats a wire");
  }
  if (g.has_param() && g.param.index >= field.order()) {
    throw std::invalid_argument("gate " + to_string(g) + " parameter outside GF(" +
                                std::to_string(field.order()) + ")");
  }
  if (g.kind == GateKind::D && g.param.is_zero()) {
    throw std::invalid_argument("D(0) is not unitary");
  }
}

char kind_letter(GateKind k) {
  switch (k) {
    case GateKind::A: return 'A';
    case GateKind::D: return 'D';
    case GateKind::C: return 'C';
    case GateKind::H: return 'H';
    case GateKind::V: return 'V';
    case GateKind::W: return 'W';
  }
  return '?';
}

std::string to_string(const Gate& g) {
  std::string s(1, kind_letter(g.kind));
  s += " " + std::to_string(g.q0);
  if (g.is_two_qudit()) s += " " + std::to_string(g.q1);
  if (g.has_param()) s += " " + std::to_string(g.param.index);
  return s;
}

std::vector<Gate> adjoint(const Field& field, const Gate& g) {
  switch (g.kind) {
    case GateKind::A: return {Gate::A(g.q0, field.neg(g.param))};
    case GateKind::D: return {Gate::D(g.q0, field.inv(g.param))};
    case GateKind::C: return {Gate::C(g.q0, g.q1, field.neg(g.param))};
    case GateKind::H: return {g, g, g};  // H^2 |b> = |-b>, so H^4 = I
    case GateKind::V:
    case GateKind::W: return {g};
  }
  return {g};
}

}  // namespace qgraph
