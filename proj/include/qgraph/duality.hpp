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

// Dual graphs and numerical checks of their local-unitary equivalence.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qgraph/circuit.hpp"
#include "qgraph/dense.hpp"

namespace qgraph {

/// S and O swapped, every edge i -> j with label b turned into j -> i.
GraphState dual_graph(const GraphState& graph);

/// Where a dense comparison first exceeded the tolerance.
struct DualityCounterexample {
  std::optional<Element> parameter;  // set for the conjugation identity
  std::uint64_t row = 0;
  std::uint64_t col = 0;
  Complex lhs;
  Complex rhs;
};

struct DualityReport {
  std::string field;  // descriptor "p n poly_index"
  std::optional<bool> conjugation_identity_holds;
  std::optional<bool> state_equivalence_holds;
  std::optional<bool> signature_match;
  double max_deviation = 0.0;
  /// Parameters a for which the conjugation identity held / failed.
  std::vector<Element> passing_parameters;
  std::vector<Element> failing_parameters;
  std::optional<DualityCounterexample> counterexample;
};

/// Dense two-qudit check of
///
///   H_1^dag V_1 V_2 H_2 C_12(a) H_2^dag V_2^dag V_1^dag H_1 == C_21(a).
///
/// Requires a != 0.
DualityReport check_conjugation_identity(const Field& field, Element a,
                                         double tol = kDefaultTolerance);

/// The same check for every a != 0, merged into one report.
DualityReport check_conjugation_identity(const Field& field, double tol = kDefaultTolerance);

/// One merged report per monic irreducible polynomial of degree n over Z_p.
std::vector<DualityReport> survey_conjugation_identity(int p, int n,
                                                       double tol = kDefaultTolerance);

/// Sorted multiset of reduced-density spectra. Each bipartition is counted
/// once, from its smaller side; for |A| = N/2 the side containing qudit 1
/// is used.
struct LuSignature {
  std::vector<std::vector<double>> spectra;
};

LuSignature lu_signature(const QuditState& state);
bool signatures_match(const LuSignature& a, const LuSignature& b, double tol = kDefaultTolerance);
/// Rounded copy usable as an ordered map key.
std::vector<std::vector<long long>> signature_key(const LuSignature& sig, double resolution = 1e-8);

/// Simulates the graph and its dual, applies H^dag V to every S wire and
/// V H to every O wire of the graph state, and compares with the dual state
/// up to global phase. Independently compares the LU signatures of the two
/// undressed states.
DualityReport verify_dual_equivalence(const GraphState& graph, double tol = kDefaultTolerance);

/// V H |0> = |s> and H^dag V |s> = |0>, up to global phase.
bool fourier_reversal_maps_basis(const Field& field, double tol = kDefaultTolerance);

}  // namespace qgraph
