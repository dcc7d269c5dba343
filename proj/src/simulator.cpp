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

#include "qgraph/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace qgraph {

std::vector<std::uint64_t> gate_permutation(const Field& field, int num_qudits,
                                            const Gate& g) {
  validate(g, field, num_qudits);
  const std::uint64_t d = field.order();
  const std::uint64_t total = checked_dimension(d, num_qudits);
  auto stride_of = [&](int q) {
    std::uint64_t s = 1;
    for (int k = q; k < num_qudits; ++k) s *= d;
    return s;
  };
  const std::uint64_t s0 = stride_of(g.q0);
  const std::uint64_t s1 = g.is_two_qudit() ? stride_of(g.q1) : 0;

  // Single-qudit maps as lookup tables over digit values.
  std::vector<std::uint64_t> local(d);
  switch (g.kind) {
    case GateKind::A:
      for (std::uint32_t x = 0; x < d; ++x) local[x] = field.add(Element{x}, g.param).index;
      break;
    case GateKind::D:
      for (std::uint32_t x = 0; x < d; ++x) local[x] = field.mul(Element{x}, g.param).index;
      break;
    case GateKind::V:
      for (std::uint32_t x = 0; x < d; ++x) local[x] = field.reverse(Element{x}).index;
      break;
    case GateKind::C:
      // local[x] = a x, the amount added to the target.
      for (std::uint32_t x = 0; x < d; ++x) local[x] = field.mul(g.param, Element{x}).index;
      break;
    case GateKind::W:
      break;
    case GateKind::H:
      throw std::invalid_argument("H is not a basis permutation");
  }

  std::vector<std::uint64_t> perm(total);
  for (std::uint64_t i = 0; i < total; ++i) {
    const std::uint64_t x = (i / s0) % d;
    switch (g.kind) {
      case GateKind::A:
      case GateKind::D:
      case GateKind::V:
        perm[i] = i + (local[x] - x) * s0;
        break;
      case GateKind::C: {
        const std::uint64_t y = (i / s1) % d;
        const std::uint64_t y2 = field.add(Element{static_cast<std::uint32_t>(y)},
                                           Element{static_cast<std::uint32_t>(local[x])})
                                     .index;
        perm[i] = i + (y2 - y) * s1;
        break;
      }
      case GateKind::W: {
        const std::uint64_t y = (i / s1) % d;
        perm[i] = i - x * s0 - y * s1 + y * s0 + x * s1;
        break;
      }
      case GateKind::H:
        break;
    }
  }
  return perm;
}

Eigen::MatrixXcd hadamard_matrix(const Field& field) {
  const auto d = static_cast<Eigen::Index>(field.order());
  const double scale = 1.0 / std::sqrt(static_cast<double>(d));
  const double angle = 2.0 * std::numbers::pi / field.p();
  Eigen::MatrixXcd h(d, d);
  for (Eigen::Index a = 0; a < d; ++a) {
    for (Eigen::Index b = 0; b < d; ++b) {
      const int e = field.dot(Element{static_cast<std::uint32_t>(a)},
                              Element{static_cast<std::uint32_t>(b)});
      h(a, b) = std::polar(scale, angle * e);
    }
  }
  return h;
}

Eigen::MatrixXcd reversal_matrix(const Field& field) {
  const auto d = static_cast<Eigen::Index>(field.order());
  Eigen::MatrixXcd v = Eigen::MatrixXcd::Zero(d, d);
  for (Eigen::Index a = 0; a < d; ++a) {
    v(field.reverse(Element{static_cast<std::uint32_t>(a)}).index, a) = 1.0;
  }
  return v;
}

std::optional<std::vector<std::uint64_t>> basis_map(const Field& field, int num_qudits,
                                                    std::span<const Gate> product) {
  const auto total = checked_dimension(field.order(), num_qudits);
  if (std::any_of(product.begin(), product.end(),
                  [](const Gate& g) { return g.kind == GateKind::H; })) {
    return std::nullopt;
  }
  std::vector<std::uint64_t> image(total);
  for (std::size_t i = 0; i < image.size(); ++i) image[i] = i;
  for (auto it = product.rbegin(); it != product.rend(); ++it) {
    const auto perm = gate_permutation(field, num_qudits, *it);
    for (auto& x : image) x = perm[x];
  }
  return image;
}

Eigen::MatrixXcd operator_matrix(const Field& field, int num_qudits,
                                 std::span<const Gate> product) {
  const auto total = static_cast<Eigen::Index>(checked_dimension(field.order(), num_qudits));
  if (const auto image = basis_map(field, num_qudits, product)) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(total, total);
    for (std::size_t i = 0; i < image->size(); ++i) {
      m(static_cast<Eigen::Index>((*image)[i]), static_cast<Eigen::Index>(i)) = 1.0;
    }
    return m;
  }
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(total, total);
  for (auto it = product.rbegin(); it != product.rend(); ++it) {
    apply_gate_rows(m, field, num_qudits, *it);
  }
  return m;
}

StateVector::StateVector(Field field, QuditState state)
    : field_(std::move(field)), state_(std::move(state)) {
  if (state_.local_dim() != field_.order()) {
    throw std::invalid_argument("state dimension does not match field order");
  }
}

StateVector StateVector::init(const Field& field, std::span<const InitKind> pattern) {
  const int n = static_cast<int>(pattern.size());
  const std::uint64_t d = field.order();
  QuditState st(d, n);
  const double amp = 1.0 / std::sqrt(static_cast<double>(d));
  // Product of per-qudit factors; a |0> factor restricts its digit to 0.
  for (std::uint64_t i = 0; i < st.size(); ++i) {
    std::uint64_t rem = i;
    Complex v{1.0, 0.0};
    for (int q = n; q-- > 0;) {
      const std::uint64_t x = rem % d;
      rem /= d;
      if (pattern[q] == InitKind::Zero) {
        if (x != 0) {
          v = 0.0;
          break;
        }
      } else {
        v *= amp;
      }
    }
    st[i] = v;
  }
  return StateVector(field, std::move(st));
}

StateVector StateVector::basis(const Field& field, std::span<const Element> kets) {
  QuditState st(field.order(), static_cast<int>(kets.size()));
  std::vector<std::uint32_t> digits;
  for (auto e : kets) digits.push_back(field.element(e.index).index);
  st[st.index_of(digits)] = 1.0;
  return StateVector(field, std::move(st));
}

void StateVector::apply(const Gate& g) {
  Eigen::VectorXcd& amps = state_.amplitudes();
  if (g.kind == GateKind::H) {
    apply_gate_rows(amps, field_, num_qudits(), g);
    return;
  }
  const auto perm = gate_permutation(field_, num_qudits(), g);
  Eigen::VectorXcd moved(amps.size());
  for (std::size_t i = 0; i < perm.size(); ++i) {
    moved(static_cast<Eigen::Index>(perm[i])) = amps(static_cast<Eigen::Index>(i));
  }
  amps.swap(moved);
}

void StateVector::apply(std::span<const Gate> circuit) {
  for (const auto& g : circuit) apply(g);
}

StateVector apply_gate(StateVector state, const Gate& g) {
  state.apply(g);
  return state;
}

DensityMatrix reduced_density(const StateVector& state, std::span<const int> subset) {
  return reduced_density(state.dense(), subset);
}

bool states_equal_up_to_phase(const StateVector& a, const StateVector& b, double tol) {
  return a.field() == b.field() && states_equal_up_to_phase(a.dense(), b.dense(), tol);
}

}  // namespace qgraph
