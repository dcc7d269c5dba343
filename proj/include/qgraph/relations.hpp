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

// Dense-operator verification of the commutation rules in rewrite.hpp.

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qgraph/dense.hpp"
#include "qgraph/rewrite.hpp"

namespace qgraph {

/// Wire roles m, n, l for one placement of a relation on 2 or 3 qudits.
struct WireLayout {
  int m = 1;
  int n = 2;
  int l = 3;
};

/// One rule to check: the left-hand product `left * right` built from two
/// field parameters, plus the parameter domain where the rule applies.
struct RelationCase {
  Relation relation;
  int num_qudits;
  std::function<bool(const Field&, Element, Element)> admissible;
  std::function<std::pair<Gate, Gate>(const WireLayout&, Element, Element)> lhs;
};

/// The full rule table, one case per rule (the two opposed-add branches are
/// separate cases). Disjoint-wire commutation is included.
const std::vector<RelationCase>& relation_catalog();

using Rewriter = std::function<std::vector<Gate>(const Field&, const Gate&, const Gate&)>;

struct RelationResult {
  Relation relation;
  std::string field;
  std::uint64_t tuples_checked = 0;
  std::uint64_t failures = 0;
  double max_deviation = 0.0;
  /// First failing (i, j) parameter pair and wire layout.
  std::optional<std::pair<Element, Element>> counterexample;
  std::optional<WireLayout> counterexample_layout;

  bool passed() const { return failures == 0 && tuples_checked > 0; }
};

struct SuiteOptions {
  /// Unset: every admissible parameter pair. Set: this many seeded random
  /// admissible pairs per relation and layout.
  std::optional<std::uint64_t> random_samples;
  std::uint64_t seed = 1;
  double tolerance = kDefaultTolerance;
  /// Right-hand side generator under test; defaults to commute_pair.
  Rewriter rewriter;
  /// Also check the mirrored wire layout (m, n, l) = (3, 1, 2) / (2, 1).
  bool both_layouts = true;
};

/// Compiles both sides of every catalog rule to dense matrices and compares
/// them entrywise.
std::vector<RelationResult> run_relation_suite(const Field& field, const SuiteOptions& options);

/// Entrywise max |L - R| for two operator products on `num_qudits` qudits.
double operator_deviation(const Field& field, int num_qudits, std::span<const Gate> lhs,
                          std::span<const Gate> rhs);

}  // namespace qgraph
