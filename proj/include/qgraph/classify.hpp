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

// Enumeration of small standard-form graph states up to LU signature.
//
// Graphs with S = {1..k}, k <= N/2, and every label assignment are
// simulated; any graph with a single-qudit marginal of rank 1 is dropped.
// Survivors are bucketed by LU signature. A bucket's type is the smallest
// |S| among its members, and the type count is the number of distinct types.

#pragma once

#include <cstdint>
#include <vector>

#include "qgraph/circuit.hpp"
#include "qgraph/duality.hpp"

namespace qgraph {

struct LuClass {
  /// First member in enumeration order (smallest |S|, then labels).
  GraphState representative;
  int type = 0;
  std::uint64_t members = 0;
  LuSignature signature;
};

struct Classification {
  Field field;
  int num_qudits = 0;
  std::uint64_t graphs_enumerated = 0;
  std::uint64_t graphs_kept = 0;
  std::vector<LuClass> classes;
  /// Distinct class types, ascending.
  std::vector<int> types;

  std::size_t type_count() const { return types.size(); }
};

/// Requires 2 <= N <= 5 (or any N whose enumeration fits the dense guard).
Classification classify(const Field& field, int num_qudits, double tol = kDefaultTolerance);

}  // namespace qgraph
