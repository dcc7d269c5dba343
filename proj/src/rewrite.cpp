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

#include "qgraph/rewrite.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qgraph {

SymbolicState SymbolicState::from_pattern(const Field& field, std::span<const InitKind> pattern) {
  SymbolicState sym{field, static_cast<int>(pattern.size()), {}, {}};
  const int k = static_cast<int>(std::count(pattern.begin(), pattern.end(), InitKind::Plus));
  sym.matrix = FieldMatrix(k, sym.num_qudits);
  sym.offsets.assign(sym.num_qudits, Element{0});
  int row = 0;
  for (int q = 0; q < sym.num_qudits; ++q) {
    if (pattern[q] == InitKind::Plus) sym.matrix(row++, q) = field.one();
  }
  return sym;
}

StateVector SymbolicState::to_state() const {
  const std::uint64_t d = field.order();
  QuditState st(d, num_qudits);
  std::uint64_t points = 1;
  for (int i = 0; i < k(); ++i) points *= d;
  const double amp = std::pow(static_cast<double>(d), -0.5 * k());
  std::vector<std::uint32_t> x(k(), 0);
  std::vector<std::uint32_t> ket(num_qudits);
  for (std::uint64_t step = 0; step < points; ++step) {
    for (int q = 0; q < num_qudits; ++q) {
      Element v = offsets[q];
      for (int i = 0; i < k(); ++i) v = field.add(v, field.mul(Element{x[i]}, matrix(i, q)));
      ket[q] = v.index;
    }
    st[st.index_of(ket)] += amp;
    for (int i = k(); i-- > 0;) {
      if (++x[i] < d) break;
      x[i] = 0;
    }
  }
  return StateVector(field, std::move(st));
}

SymbolicState symbolic_apply(SymbolicState sym, const Gate& g) {
  validate(g, sym.field, sym.num_qudits);
  const Field& f = sym.field;
  const int m = g.q0 - 1;
  const int n = g.q1 - 1;
  switch (g.kind) {
    case GateKind::C:
      for (int i = 0; i < sym.k(); ++i) {
        sym.matrix(i, n) = f.add(sym.matrix(i, n), f.mul(g.param, sym.matrix(i, m)));
      }
      sym.offsets[n] = f.add(sym.offsets[n], f.mul(g.param, sym.offsets[m]));
      break;
    case GateKind::A:
      sym.offsets[m] = f.add(sym.offsets[m], g.param);
      break;
    case GateKind::D:
      for (int i = 0; i < sym.k(); ++i) sym.matrix(i, m) = f.mul(g.param, sym.matrix(i, m));
      sym.offsets[m] = f.mul(g.param, sym.offsets[m]);
      break;
    case GateKind::W:
      for (int i = 0; i < sym.k(); ++i) std::swap(sym.matrix(i, m), sym.matrix(i, n));
      std::swap(sym.offsets[m], sym.offsets[n]);
      break;
    case GateKind::H:
    case GateKind::V:
      throw std::invalid_argument("gate " + to_string(g) + " has no affine symbolic image");
  }
  return sym;
}

SymbolicState symbolic_run(const Circuit& circuit) {
  circuit.validate();
  auto sym = SymbolicState::from_pattern(circuit.field, circuit.init);
  for (const auto& g : circuit.gates) sym = symbolic_apply(std::move(sym), g);
  return sym;
}

bool states_equal_symbolic(const SymbolicState& a, const SymbolicState& b) {
  if (!(a.field == b.field) || a.num_qudits != b.num_qudits) return false;
  const Field& f = a.field;
  const int ra = rank(f, a.matrix);
  if (ra != rank(f, b.matrix)) return false;
  FieldMatrix stacked = a.matrix;
  for (int i = 0; i < b.k(); ++i) {
    std::vector<Element> row(b.num_qudits);
    for (int q = 0; q < b.num_qudits; ++q) row[q] = b.matrix(i, q);
    stacked.append_row(row);
  }
  if (rank(f, stacked) != ra) return false;
  std::vector<Element> diff(a.num_qudits);
  for (int q = 0; q < a.num_qudits; ++q) diff[q] = f.sub(a.offsets[q], b.offsets[q]);
  FieldMatrix with_shift = a.matrix;
  with_shift.append_row(diff);
  return rank(f, with_shift) == ra;
}

bool CanonicalForm::has_residual() const {
  return std::any_of(residual_shifts.begin(), residual_shifts.end(),
                     [](Element e) { return !e.is_zero(); });
}

StateVector CanonicalForm::reconstruct() const {
  auto circuit = graph.to_circuit();
  for (int q = 1; q <= graph.num_qudits(); ++q) {
    if (!residual_shifts[q - 1].is_zero()) {
      circuit.gates.push_back(Gate::A(q, residual_shifts[q - 1]));
    }
  }
  const auto st = circuit.simulate();
  return StateVector(graph.field(), relabel_qudits(st.dense(), permutation));
}

CanonicalForm canonicalize(const Circuit& circuit) {
  circuit.validate();
  const int n = circuit.num_qudits;
  const int k = circuit.count_plus();
  if (k == 0 || k == n) {
    throw std::invalid_argument("circuit needs both |s> and |0> qudits for a bipartition");
  }
  const auto sym = symbolic_run(circuit);
  const Field& f = circuit.field;

  std::vector<int> s_wires, o_wires;  // 0-based
  for (int q = 0; q < n; ++q) {
    (circuit.init[q] == InitKind::Plus ? s_wires : o_wires).push_back(q);
  }
  std::vector<int> order = s_wires;
  order.insert(order.end(), o_wires.begin(), o_wires.end());

  const auto ech = row_reduce(f, sym.matrix, order);
  if (static_cast<int>(ech.pivots.size()) != k) {
    throw std::logic_error("coefficient matrix lost rank; circuit state is not a graph state");
  }
  const FieldMatrix& r = ech.reduced;

  std::vector<int> pivot_row(n, -1);
  for (int row = 0; row < k; ++row) pivot_row[ech.pivots[row]] = row;
  std::vector<int> pivots, rest;
  for (int q = 0; q < n; ++q) (pivot_row[q] >= 0 ? pivots : rest).push_back(q);

  CanonicalForm out{std::vector<int>(n, 0),
                    GraphState(f, n, [&] {
                      std::vector<int> s;
                      for (int q : s_wires) s.push_back(q + 1);
                      return s;
                    }()),
                    std::vector<Element>(n, Element{0}),
                    {}};
  for (int q : pivots) out.pivots.push_back(q + 1);
  for (int i = 0; i < k; ++i) out.permutation[pivots[i]] = s_wires[i] + 1;
  for (int j = 0; j < n - k; ++j) out.permutation[rest[j]] = o_wires[j] + 1;

  for (int i = 0; i < k; ++i) {
    const int row = pivot_row[pivots[i]];
    for (int j = 0; j < n - k; ++j) {
      out.graph.set_edge(s_wires[i] + 1, o_wires[j] + 1, r(row, rest[j]));
    }
  }

  // Offsets reduced modulo the row space: t' = t - sum_i t_{P_i} R_i.
  for (int j = 0; j < n - k; ++j) {
    Element t = sym.offsets[rest[j]];
    for (int i = 0; i < k; ++i) {
      const int row = pivot_row[pivots[i]];
      t = f.sub(t, f.mul(sym.offsets[pivots[i]], r(row, rest[j])));
    }
    out.residual_shifts[o_wires[j]] = t;
  }
  return out;
}

std::string_view relation_name(Relation r) {
  switch (r) {
    case Relation::ShiftMerge: return "shift-merge";
    case Relation::ScaleMerge: return "scale-merge";
    case Relation::ScalePastShift: return "scale-past-shift";
    case Relation::AddPastControlShift: return "add-past-control-shift";
    case Relation::AddPastTargetShift: return "add-past-target-shift";
    case Relation::AddPastControlScale: return "add-past-control-scale";
    case Relation::AddPastTargetScale: return "add-past-target-scale";
    case Relation::AddMerge: return "add-merge";
    case Relation::OpposedAddsInvertible: return "opposed-adds-invertible";
    case Relation::OpposedAddsSwap: return "opposed-adds-swap";
    case Relation::SharedControl: return "shared-control";
    case Relation::SharedTarget: return "shared-target";
    case Relation::ChainTargetFirst: return "chain-target-first";
    case Relation::ChainControlFirst: return "chain-control-first";
    case Relation::Disjoint: return "disjoint";
  }
  return "?";
}

namespace {

bool share_wire(const Gate& a, const Gate& b) {
  for (int q : a.wires()) {
    if (b.acts_on(q)) return true;
  }
  return false;
}

[[noreturn]] void no_rule(const Gate& left, const Gate& right) {
  throw std::invalid_argument("no commutation rule for (" + to_string(left) + ") * (" +
                              to_string(right) + ")");
}

}  // namespace

Rewrite rewrite_pair(const Field& f, const Gate& left, const Gate& right) {
  int wires = 0;
  for (const Gate* g : {&left, &right}) {
    for (int q : g->wires()) wires = std::max(wires, q);
  }
  validate(left, f, wires);
  validate(right, f, wires);
  if (!share_wire(left, right)) return {Relation::Disjoint, {right, left}};

  const bool left_single = !left.is_two_qudit();
  const bool right_single = !right.is_two_qudit();

  if (left_single && right_single) {
    const int m = left.q0;
    const Element i = left.param;
    const Element j = right.param;
    if (left.kind == GateKind::A && right.kind == GateKind::A) {
      return {Relation::ShiftMerge, {Gate::A(m, f.add(i, j))}};
    }
    if (left.kind == GateKind::D && right.kind == GateKind::D) {
      return {Relation::ScaleMerge, {Gate::D(m, f.mul(i, j))}};
    }
    if (left.kind == GateKind::D && right.kind == GateKind::A) {
      return {Relation::ScalePastShift, {Gate::A(m, f.mul(i, j)), Gate::D(m, i)}};
    }
    no_rule(left, right);
  }

  if (left.kind == GateKind::C && right_single) {
    const int m = left.q0;
    const int n = left.q1;
    const Element i = left.param;
    const Element j = right.param;
    if (right.kind == GateKind::A && right.q0 == m) {
      return {Relation::AddPastControlShift,
              {Gate::A(n, f.mul(i, j)), Gate::A(m, j), Gate::C(m, n, i)}};
    }
    if (right.kind == GateKind::A && right.q0 == n) {
      return {Relation::AddPastTargetShift, {Gate::A(n, j), Gate::C(m, n, i)}};
    }
    if (right.kind == GateKind::D && right.q0 == m) {
      return {Relation::AddPastControlScale, {Gate::D(m, j), Gate::C(m, n, f.mul(j, i))}};
    }
    if (right.kind == GateKind::D && right.q0 == n) {
      if (j.is_zero()) throw std::invalid_argument("D(0) is not invertible");
      return {Relation::AddPastTargetScale, {Gate::D(n, j), Gate::C(m, n, f.mul(f.inv(j), i))}};
    }
    no_rule(left, right);
  }

  if (left.kind == GateKind::C && right.kind == GateKind::C) {
    const Element i = left.param;
    const Element j = right.param;
    if (left.q0 == right.q0 && left.q1 == right.q1) {
      return {Relation::AddMerge, {Gate::C(left.q0, left.q1, f.add(i, j))}};
    }
    if (left.q0 == right.q1 && left.q1 == right.q0) {
      const int m = left.q0;
      const int n = left.q1;
      const Element a = f.add(f.one(), f.mul(i, j));
      if (!a.is_zero()) {
        const Element a_inv = f.inv(a);
        return {Relation::OpposedAddsInvertible,
                {Gate::D(m, a_inv), Gate::D(n, a), Gate::C(n, m, f.mul(a, j)),
                 Gate::C(m, n, f.mul(a_inv, i))}};
      }
      // 1 + ij == 0 forces j != 0.
      return {Relation::OpposedAddsSwap,
              {Gate::W(m, n), Gate::D(m, i), Gate::D(n, j), Gate::C(m, n, f.inv(j))}};
    }
    if (left.q0 == right.q0) return {Relation::SharedControl, {right, left}};
    if (left.q1 == right.q1) return {Relation::SharedTarget, {right, left}};
    if (left.q0 == right.q1) {
      // left = C_nl(j'), right = C_mn(i'), right acts first.
      const int m = right.q0;
      const int l = left.q1;
      return {Relation::ChainTargetFirst,
              {Gate::C(m, l, f.mul(right.param, left.param)), right, left}};
    }
    if (left.q1 == right.q0) {
      // left = C_mn(i'), right = C_nl(j').
      const int m = left.q0;
      const int l = right.q1;
      return {Relation::ChainControlFirst,
              {right, left, Gate::C(m, l, f.neg(f.mul(left.param, right.param)))}};
    }
  }
  no_rule(left, right);
}

std::vector<Gate> commute_pair(const Field& field, const Gate& left, const Gate& right) {
  return rewrite_pair(field, left, right).product;
}

}  // namespace qgraph
