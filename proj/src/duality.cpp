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

#include "qgraph/duality.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "qgraph/simulator.hpp"

namespace qgraph {

GraphState dual_graph(const GraphState& graph) {
  GraphState dual(graph.field(), graph.num_qudits(), graph.O());
  for (const auto& [ij, b] : graph.edges()) dual.set_edge(ij.second, ij.first, b);
  return dual;
}

namespace {

// Product (leftmost factor applied last) of H^dag on wire q.
void push_h_dagger(std::vector<Gate>& product, int q) {
  for (int i = 0; i < 3; ++i) product.push_back(Gate::H(q));
}

void merge(DualityReport& into, const DualityReport& part) {
  into.max_deviation = std::max(into.max_deviation, part.max_deviation);
  into.passing_parameters.insert(into.passing_parameters.end(), part.passing_parameters.begin(),
                                 part.passing_parameters.end());
  into.failing_parameters.insert(into.failing_parameters.end(), part.failing_parameters.begin(),
                                 part.failing_parameters.end());
  if (!into.counterexample && part.counterexample) into.counterexample = part.counterexample;
}

}  // namespace

DualityReport check_conjugation_identity(const Field& field, Element a, double tol) {
  if (a.is_zero()) throw std::invalid_argument("conjugation identity needs a != 0");
  // H_1^dag V_1 V_2 H_2 C_12(a) H_2^dag V_2^dag V_1^dag H_1, V self-adjoint.
  std::vector<Gate> lhs;
  push_h_dagger(lhs, 1);
  lhs.push_back(Gate::V(1));
  lhs.push_back(Gate::V(2));
  lhs.push_back(Gate::H(2));
  lhs.push_back(Gate::C(1, 2, a));
  push_h_dagger(lhs, 2);
  lhs.push_back(Gate::V(2));
  lhs.push_back(Gate::V(1));
  lhs.push_back(Gate::H(1));
  const std::vector<Gate> rhs{Gate::C(2, 1, a)};

  const Eigen::MatrixXcd l = operator_matrix(field, 2, lhs);
  const Eigen::MatrixXcd r = operator_matrix(field, 2, rhs);

  DualityReport report;
  report.field = field.descriptor();
  report.max_deviation = (l - r).cwiseAbs().maxCoeff();
  const bool holds = report.max_deviation < tol;
  report.conjugation_identity_holds = holds;
  (holds ? report.passing_parameters : report.failing_parameters).push_back(a);
  if (!holds) {
    for (Eigen::Index i = 0; i < l.rows() && !report.counterexample; ++i) {
      for (Eigen::Index j = 0; j < l.cols(); ++j) {
        if (std::abs(l(i, j) - r(i, j)) >= tol) {
          report.counterexample = DualityCounterexample{a, static_cast<std::uint64_t>(i),
                                                        static_cast<std::uint64_t>(j), l(i, j),
                                                        r(i, j)};
          break;
        }
      }
    }
  }
  return report;
}

DualityReport check_conjugation_identity(const Field& field, double tol) {
  DualityReport report;
  report.field = field.descriptor();
  for (std::uint32_t a = 1; a < field.order(); ++a) {
    merge(report, check_conjugation_identity(field, Element{a}, tol));
  }
  report.conjugation_identity_holds = report.failing_parameters.empty();
  return report;
}

std::vector<DualityReport> survey_conjugation_identity(int p, int n, double tol) {
  std::vector<DualityReport> out;
  for (const auto& poly : poly::irreducible_polynomials(p, n)) {
    out.push_back(check_conjugation_identity(Field::make(p, n, poly), tol));
  }
  return out;
}

LuSignature lu_signature(const QuditState& state) {
  const int n = state.num_qudits();
  LuSignature sig;
  for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
    const int size = std::popcount(mask);
    if (2 * size > n) continue;
    if (2 * size == n && !(mask & 1u)) continue;
    std::vector<int> subset;
    for (int q = 0; q < n; ++q) {
      if (mask & (1u << q)) subset.push_back(q + 1);
    }
    auto spec = spectrum(reduced_density(state, subset));
    for (double& v : spec) v = std::max(v, 0.0);
    sig.spectra.push_back(std::move(spec));
  }
  const auto key = [](const std::vector<double>& s) {
    std::vector<long long> k;
    k.reserve(s.size() + 1);
    k.push_back(static_cast<long long>(s.size()));
    for (double v : s) k.push_back(std::llround(v * 1e8));
    return k;
  };
  std::sort(sig.spectra.begin(), sig.spectra.end(),
            [&](const auto& a, const auto& b) { return key(a) < key(b); });
  return sig;
}

bool signatures_match(const LuSignature& a, const LuSignature& b, double tol) {
  if (a.spectra.size() != b.spectra.size()) return false;
  for (std::size_t i = 0; i < a.spectra.size(); ++i) {
    if (a.spectra[i].size() != b.spectra[i].size()) return false;
    for (std::size_t j = 0; j < a.spectra[i].size(); ++j) {
      if (std::abs(a.spectra[i][j] - b.spectra[i][j]) >= tol) return false;
    }
  }
  return true;
}

std::vector<std::vector<long long>> signature_key(const LuSignature& sig, double resolution) {
  std::vector<std::vector<long long>> out;
  for (const auto& s : sig.spectra) {
    std::vector<long long> row;
    for (double v : s) row.push_back(std::llround(v / resolution));
    out.push_back(std::move(row));
  }
  return out;
}

DualityReport verify_dual_equivalence(const GraphState& graph, double tol) {
  const GraphState dual = dual_graph(graph);
  StateVector state = graph.simulate();
  const StateVector dual_state = dual.simulate();

  DualityReport report;
  report.field = graph.field().descriptor();

  const LuSignature sa = lu_signature(state.dense());
  const LuSignature sb = lu_signature(dual_state.dense());
  report.signature_match = signatures_match(sa, sb, tol);

  // H^dag V on S wires (V first), V H on O wires (H first).
  for (int q : graph.S()) {
    state.apply(Gate::V(q));
    for (int i = 0; i < 3; ++i) state.apply(Gate::H(q));
  }
  for (int q : graph.O()) {
    state.apply(Gate::H(q));
    state.apply(Gate::V(q));
  }
  report.max_deviation = phase_aligned_deviation(state.dense(), dual_state.dense());
  report.state_equivalence_holds = report.max_deviation < tol;
  if (!*report.state_equivalence_holds) {
    const Complex phase = [&] {
      const Complex overlap = state.amplitudes().dot(dual_state.amplitudes());
      return std::abs(overlap) > 0 ? overlap / std::abs(overlap) : Complex(1.0);
    }();
    for (std::uint64_t i = 0; i < state.size(); ++i) {
      if (std::abs(state[i] * phase - dual_state[i]) >= tol) {
        report.counterexample = DualityCounterexample{std::nullopt, i, 0, state[i] * phase,
                                                      dual_state[i]};
        break;
      }
    }
  }
  return report;
}

bool fourier_reversal_maps_basis(const Field& field, double tol) {
  const std::vector<InitKind> zero{InitKind::Zero};
  const std::vector<InitKind> plus{InitKind::Plus};

  StateVector a = StateVector::init(field, zero);
  a.apply(Gate::H(1));
  a.apply(Gate::V(1));
  const bool forward = states_equal_up_to_phase(a, StateVector::init(field, plus), tol);

  StateVector b = StateVector::init(field, plus);
  b.apply(Gate::V(1));
  for (int i = 0; i < 3; ++i) b.apply(Gate::H(1));
  const bool backward = states_equal_up_to_phase(b, StateVector::init(field, zero), tol);
  return forward && backward;
}

}  // namespace qgraph
