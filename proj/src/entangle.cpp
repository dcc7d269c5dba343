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

#include "qgraph/entangle.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>

#include "qgraph/field_matrix.hpp"

namespace qgraph {

StateVector psi_state(const Field& field, Element a_r) {
  const std::uint32_t d = field.order();
  QuditState state(d, 4);
  const double amp = 1.0 / d;
  for (std::uint32_t i = 0; i < d; ++i) {
    for (std::uint32_t k = 0; k < d; ++k) {
      const Element ai{i};
      const Element ak{k};
      const std::array<std::uint32_t, 4> ket{i, field.add(ai, field.mul(a_r, ak)).index, k,
                                             field.add(ai, ak).index};
      state[state.index_of(ket)] += amp;
    }
  }
  return StateVector(field, std::move(state));
}

RingState::RingState(std::uint64_t modulus, QuditState state) : state_(std::move(state)) {
  if (state_.local_dim() != modulus) throw std::invalid_argument("modulus/state mismatch");
}

RingState p_prime_state(std::uint64_t d) {
  if (d < 2) throw std::invalid_argument("P' needs d >= 2");
  QuditState state(d, 4);
  const double amp = 1.0 / static_cast<double>(d);
  for (std::uint64_t i = 0; i < d; ++i) {
    for (std::uint64_t k = 0; k < d; ++k) {
      const std::array<std::uint32_t, 4> ket{
          static_cast<std::uint32_t>(i), static_cast<std::uint32_t>((i + d - k) % d),
          static_cast<std::uint32_t>(k), static_cast<std::uint32_t>((i + k) % d)};
      state[state.index_of(ket)] += amp;
    }
  }
  return RingState(d, std::move(state));
}

QuditState compose_mes(std::span<const QuditState> states) {
  if (states.size() == 1) return states.front();
  return systemwise_tensor(states);
}

std::variant<MesConstruction, MesRefusal> mes_for_dimension(std::uint64_t d) {
  if (d < 2) throw std::invalid_argument("dimension must be at least 2");
  if (d % 4 == 2) return MesRefusal{kMesRefusalReason};
  if (d > kMaxFactoredDimension) {
    throw ResourceLimitError("dimension above the factorisation limit of 10^6");
  }
  // The dense state below has d^4 amplitudes; fail before building factors.
  checked_dimension(d, 4);

  std::vector<QuditState> parts;
  std::vector<std::string> factors;
  std::uint64_t rest = d;
  if (d % 4 == 0) {
    int m = 0;
    while (rest % 2 == 0) {
      rest /= 2;
      ++m;
    }
    const Field f = Field::make(2, m);
    parts.push_back(psi_state(f, Element{2}).dense());
    factors.push_back("psi(2) over GF(2^" + std::to_string(m) + ") [" + f.descriptor() + "]");
  } else {
    // Odd d: P'(d) directly.
    parts.push_back(p_prime_state(d).dense());
    factors.push_back("P'(" + std::to_string(d) + ")");
    rest = 1;
  }
  for (std::uint64_t p = 3; p * p <= rest; p += 2) {
    while (rest % p == 0) {
      parts.push_back(p_prime_state(p).dense());
      factors.push_back("P'(" + std::to_string(p) + ")");
      rest /= p;
    }
  }
  if (rest > 1) {
    parts.push_back(p_prime_state(rest).dense());
    factors.push_back("P'(" + std::to_string(rest) + ")");
  }
  return MesConstruction{compose_mes(parts), std::move(factors)};
}

std::vector<std::vector<int>> bipartition_subsets(int num_qudits) {
  std::vector<std::vector<int>> out;
  if (num_qudits < 2 || num_qudits > 30) return out;
  for (std::uint32_t mask = 1; mask + 1 < (1u << num_qudits); ++mask) {
    const int size = std::popcount(mask);
    if (2 * size > num_qudits) continue;
    if (2 * size == num_qudits && !(mask & 1u)) continue;
    std::vector<int> subset;
    for (int q = 0; q < num_qudits; ++q) {
      if (mask & (1u << q)) subset.push_back(q + 1);
    }
    out.push_back(std::move(subset));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

BipartitionReport mes_verdict(const QuditState& state, double tol) {
  BipartitionReport report;
  report.verdict = true;
  for (auto& subset : bipartition_subsets(state.num_qudits())) {
    const DensityMatrix dm = reduced_density(state, subset);
    const auto spec = spectrum(dm);
    BipartitionRecord rec;
    rec.subset = std::move(subset);
    rec.rank = static_cast<int>(std::count_if(spec.begin(), spec.end(),
                                              [tol](double x) { return x > tol; }));
    rec.flat = rec.rank > 0 && spec.front() - spec[static_cast<std::size_t>(rec.rank) - 1] < tol;
    rec.deviation = max_deviation_from_maximally_mixed(dm.rho);
    rec.maximally_mixed = rec.deviation < tol;
    report.verdict = report.verdict && rec.maximally_mixed;
    report.bipartitions.push_back(std::move(rec));
  }
  if (report.bipartitions.empty()) report.verdict = false;
  return report;
}

std::uint64_t symbolic_rdm_rank(const SymbolicState& sym, std::span<const int> subset) {
  const auto a = normalize_subset(subset, sym.num_qudits);
  std::vector<int> b;
  std::vector<int> a_cols;
  for (int q = 1; q <= sym.num_qudits; ++q) {
    if (std::binary_search(a.begin(), a.end(), q)) {
      a_cols.push_back(q - 1);
    } else {
      b.push_back(q - 1);
    }
  }
  const int ra = rank(sym.field, sym.matrix.select_columns(a_cols));
  const int rb = rank(sym.field, sym.matrix.select_columns(b));
  const int exponent = ra + rb - sym.k();
  std::uint64_t out = 1;
  for (int i = 0; i < exponent; ++i) out *= sym.field.order();
  return out;
}

namespace {

TripartiteCheck check_tripartite(const Eigen::MatrixXcd& rho, std::uint64_t d, int expected_rank,
                                 double tol) {
  TripartiteCheck out;
  const auto spec = hermitian_spectrum(rho);
  out.rank = static_cast<int>(
      std::count_if(spec.begin(), spec.end(), [tol](double x) { return x > tol; }));
  const std::array<std::array<int, 2>, 3> pairs{{{1, 2}, {1, 3}, {2, 3}}};
  for (const auto& pr : pairs) {
    const Eigen::MatrixXcd m = partial_trace(rho, d, 3, std::vector<int>(pr.begin(), pr.end()));
    out.pair_deviation = std::max(out.pair_deviation, max_deviation_from_maximally_mixed(m));
  }
  const bool rank_ok = expected_rank < 0 ? out.rank >= static_cast<int>(d) : out.rank == expected_rank;
  out.holds = rank_ok && out.pair_deviation < tol;
  return out;
}

}  // namespace

EntropyProblemReport entropy_problem_checks(std::uint64_t d, double tol) {
  if (d < 2) throw std::invalid_argument("dimension must be at least 2");
  EntropyProblemReport report;
  report.d = d;
  const auto total = static_cast<Eigen::Index>(checked_dimension(d, 3));
  const Eigen::MatrixXcd trivial =
      Eigen::MatrixXcd::Identity(total, total) / static_cast<double>(total);
  report.trivial = check_tripartite(trivial, d, -1, tol);

  const auto mes = mes_for_dimension(d);
  if (const auto* c = std::get_if<MesConstruction>(&mes)) {
    const DensityMatrix abc = reduced_density(c->state, std::vector<int>{1, 2, 3});
    report.from_mes = check_tripartite(abc.rho, d, static_cast<int>(d), tol);
  }
  return report;
}

}  // namespace qgraph
