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

#include <string_view>
#include <vector>

#include "qgraph/circuit.hpp"
#include "qgraph/field_matrix.hpp"

namespace qgraph {

/// Exact image of a circuit built from A, D, C and W gates:
///
///   |psi> = d^{-k/2} sum_{x in F^k} |x M + t>
///
/// with M the k x N coefficient matrix and t the offset vector.
struct SymbolicState {
  Field field;
  int num_qudits = 0;
  FieldMatrix matrix;
  std::vector<Element> offsets;

  int k() const { return matrix.rows(); }

  /// Row i holds a single 1 in the column of the i-th |s> qudit.
  static SymbolicState from_pattern(const Field& field, std::span<const InitKind> pattern);

  /// Dense amplitudes by direct enumeration of the d^k row-space points.
  StateVector to_state() const;
};

/// Column update for one gate. Rejects H and V (no affine image) and D(0).
SymbolicState symbolic_apply(SymbolicState sym, const Gate& g);
SymbolicState symbolic_run(const Circuit& circuit);

/// Equal affine row spaces, i.e. the two states are identical.
bool states_equal_symbolic(const SymbolicState& a, const SymbolicState& b);

/// Result of reducing a circuit to a bipartite graph state.
struct CanonicalForm {
  /// permutation[q - 1] is the graph vertex that carries input qudit q.
  std::vector<int> permutation;
  GraphState graph;
  /// A-shifts left on graph vertices after normalisation (all zero for
  /// circuits made only of controlled adds).
  std::vector<Element> residual_shifts;
  /// Pivot columns (1-based input qudits) chosen by the elimination.
  std::vector<int> pivots;

  bool has_residual() const;
  /// Graph circuit, then residual shifts, then the qudit relabelling; equals
  /// the input circuit's state.
  StateVector reconstruct() const;
};

/// Reduces a circuit to a graph state on the circuit's own S/O split, up to
/// a qudit permutation.
///
/// Pivot columns are found by Gauss-Jordan elimination scanning the |s>
/// qudits first and then the |0> qudits, each in increasing order; the
/// permutation sends pivots onto S and the remaining columns onto O, both
/// order-preserving. Throws std::invalid_argument for H/V gates or when S
/// or O is empty, and std::logic_error on a rank defect.
CanonicalForm canonicalize(const Circuit& circuit);

/// Named commutation rules. Products are read right to left: in `left *
/// right`, `right` acts first.
enum class Relation {
  ShiftMerge,             // A_m(i) A_m(j) = A_m(i+j)
  ScaleMerge,             // D_m(i) D_m(j) = D_m(ij)
  ScalePastShift,         // D_m(i) A_m(j) = A_m(ij) D_m(i)
  AddPastControlShift,    // C_mn(i) A_m(j) = A_n(ij) A_m(j) C_mn(i)
  AddPastTargetShift,     // C_mn(i) A_n(j) = A_n(j) C_mn(i)
  AddPastControlScale,    // C_mn(i) D_m(j) = D_m(j) C_mn(ji)
  AddPastTargetScale,     // C_mn(i) D_n(j) = D_n(j) C_mn(i/j)
  AddMerge,               // C_mn(i) C_mn(j) = C_mn(i+j)
  OpposedAddsInvertible,  // C_mn(i) C_nm(j), A = 1+ij != 0
  OpposedAddsSwap,        // C_mn(i) C_nm(j), A = 1+ij == 0
  SharedControl,          // C_mn(i) C_ml(j) = C_ml(j) C_mn(i)
  SharedTarget,           // C_mn(i) C_ln(j) = C_ln(j) C_mn(i)
  ChainTargetFirst,       // C_nl(j) C_mn(i) = C_ml(ij) C_mn(i) C_nl(j)
  ChainControlFirst,      // C_mn(i) C_nl(j) = C_nl(j) C_mn(i) C_ml(-ij)
  Disjoint,               // gates on disjoint wires commute
};

std::string_view relation_name(Relation r);

struct Rewrite {
  Relation relation;
  std::vector<Gate> product;  // right-hand side, same reading order
};

/// Matches `left * right` against the rule table and returns the rewritten
/// product. Throws std::invalid_argument when no rule applies or a rule
/// would need D(0).
Rewrite rewrite_pair(const Field& field, const Gate& left, const Gate& right);

/// Right-hand side of the rule matching `left * right`.
std::vector<Gate> commute_pair(const Field& field, const Gate& left, const Gate& right);

}  // namespace qgraph
