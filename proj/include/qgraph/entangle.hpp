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

// Four-party maximally entangled states and bipartition verdicts.

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "qgraph/dense.hpp"
#include "qgraph/rewrite.hpp"
#include "qgraph/simulator.hpp"

namespace qgraph {

/// d^{-1} sum_{i,k} |a_i, a_i + a_r a_k, a_k, a_i + a_k>.
StateVector psi_state(const Field& field, Element a_r);

/// A register over the ring Z_d; d need not be a prime power.
class RingState {
 public:
  RingState(std::uint64_t modulus, QuditState state);

  std::uint64_t modulus() const { return state_.local_dim(); }
  const QuditState& dense() const { return state_; }

 private:
  QuditState state_;
};

/// d^{-1} sum_{i,k} |i, i-k, k, i+k> with arithmetic mod d.
RingState p_prime_state(std::uint64_t d);

/// Systemwise tensor product: composite system q pairs up system q of every
/// input. All inputs must have the same number of systems.
QuditState compose_mes(std::span<const QuditState> states);

struct MesConstruction {
  QuditState state;
  /// One line per tensor factor, in composition order.
  std::vector<std::string> factors;
};

struct MesRefusal {
  std::string reason;
};

inline constexpr std::uint64_t kMaxFactoredDimension = 1'000'000;

/// Odd d >= 3: P'(d). d = 0 mod 4: psi over GF(2^m) (a_r = element 2)
/// tensored with P'(p) for each odd prime factor p, with multiplicity.
/// d = 2 mod 4: refusal. Throws std::invalid_argument for d < 2.
std::variant<MesConstruction, MesRefusal> mes_for_dimension(std::uint64_t d);

inline constexpr const char* kMesRefusalReason =
    "existence unknown; conjectured not to exist for d = 2 mod 4";

struct BipartitionRecord {
  std::vector<int> subset;
  int rank = 0;
  bool flat = false;
  bool maximally_mixed = false;
  /// max |rho_A - I / d^|A||.
  double deviation = 0.0;
};

struct BipartitionReport {
  bool verdict = false;
  std::vector<BipartitionRecord> bipartitions;
};

/// Proper subsets A with |A| < N/2, plus |A| = N/2 when A contains qudit 1,
/// ordered by size and then lexicographically. For N = 4 these are the four
/// singletons and {1,2}, {1,3}, {1,4}.
std::vector<std::vector<int>> bipartition_subsets(int num_qudits);

/// Every listed bipartition must have rho_A = I / d^|A| within `tol`.
BipartitionReport mes_verdict(const QuditState& state, double tol = kDefaultTolerance);

/// Rank of rho_A for a coefficient-matrix state:
/// d^(rank M_A + rank M_B - k) with M_A, M_B the column blocks of A and its
/// complement.
std::uint64_t symbolic_rdm_rank(const SymbolicState& sym, std::span<const int> subset);

struct TripartiteCheck {
  int rank = 0;
  /// Largest max-norm deviation of rho_ij from I/d^2 over the three pairs.
  double pair_deviation = 0.0;
  bool holds = false;
};

struct EntropyProblemReport {
  std::uint64_t d = 0;
  /// I/d^3: rank d^3 >= d with maximally mixed pair marginals.
  TripartiteCheck trivial;
  /// One system traced out of the dimension-d MES: rank d, pair marginals
  /// I/d^2. Absent when no MES construction exists.
  std::optional<TripartiteCheck> from_mes;
};

EntropyProblemReport entropy_problem_checks(std::uint64_t d, double tol = kDefaultTolerance);

}  // namespace qgraph
