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

#include <string>
#include <vector>

#include "qgraph/gf.hpp"

namespace qgraph {

/// A: |x> -> |x + a>          D: |x> -> |a x>          C: |x, y> -> |x, y + a x>
/// H: field Fourier transform V: coefficient reversal  W: swap
enum class GateKind { A, D, C, H, V, W };

/// One gate on 1-based qudit wires. For C, `q0` is the control and `q1` the
/// target; single-qudit gates leave `q1` at 0.
struct Gate {
  GateKind kind = GateKind::A;
  int q0 = 0;
  int q1 = 0;
  Element param{};

  static Gate A(int m, Element a) { return {GateKind::A, m, 0, a}; }
  static Gate D(int m, Element a) { return {GateKind::D, m, 0, a}; }
  static Gate C(int control, int target, Element a) { return {GateKind::C, control, target, a}; }
  static Gate H(int m) { return {GateKind::H, m, 0, {}}; }
  static Gate V(int m) { return {GateKind::V, m, 0, {}}; }
  static Gate W(int m, int n) { return {GateKind::W, m, n, {}}; }

  bool is_two_qudit() const { return kind == GateKind::C || kind == GateKind::W; }
  bool has_param() const {
    return kind == GateKind::A || kind == GateKind::D || kind == GateKind::C;
  }
  /// Wires touched, in gate order.
  std::vector<int> wires() const;
  bool acts_on(int q) const { return q0 == q || (is_two_qudit() && q1 == q); }

  friend bool operator==(const Gate&, const Gate&) = default;
};

/// Throws std::invalid_argument for a D(0), repeated or out-of-range wires,
/// or a parameter outside the field.
void validate(const Gate& g, const Field& field, int num_qudits);

char kind_letter(GateKind k);
/// Circuit-file spelling, e.g. "C 1 2 3".
std::string to_string(const Gate& g);

/// Adjoint expressed in the same gate alphabet (H^dagger = H^3).
std::vector<Gate> adjoint(const Field& field, const Gate& g);

}  // namespace qgraph
