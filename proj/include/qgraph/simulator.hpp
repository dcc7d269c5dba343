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

#include <Eigen/Dense>

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qgraph/dense.hpp"
#include "qgraph/gate.hpp"
#include "qgraph/gf.hpp"

namespace qgraph {

/// Initial single-qudit factor: |s> (uniform) or |0>.
enum class InitKind { Plus, Zero };

/// Basis permutation realised by a permutation gate (A, D, C, V, W) on an
/// N-qudit register: basis index i maps to result[i].
std::vector<std::uint64_t> gate_permutation(const Field& field, int num_qudits,
                                            const Gate& g);

/// H_{ab} = omega^{a.b} / sqrt(d), omega = exp(2 pi i / p), with a.b the
/// coefficient dot product mod p.
Eigen::MatrixXcd hadamard_matrix(const Field& field);
/// Permutation matrix of the coefficient reversal.
Eigen::MatrixXcd reversal_matrix(const Field& field);

/// Applies `u` (d x d) to qudit `qudit` of every column of `block`; each
/// column holds one register state.
template <typename Derived>
void apply_local_rows(Eigen::MatrixBase<Derived>& block, std::uint64_t local_dim,
                      int num_qudits, int qudit, const Eigen::MatrixXcd& u) {
  const auto d = static_cast<Eigen::Index>(local_dim);
  std::uint64_t stride = 1;
  for (int q = qudit; q < num_qudits; ++q) stride *= local_dim;
  const std::uint64_t total = static_cast<std::uint64_t>(block.rows());
  Eigen::VectorXcd tmp(d);
  for (std::uint64_t base = 0; base < total; ++base) {
    if ((base / stride) % local_dim != 0) continue;
    for (Eigen::Index c = 0; c < block.cols(); ++c) {
      for (Eigen::Index j = 0; j < d; ++j) {
        tmp(j) = block(static_cast<Eigen::Index>(base + j * stride), c);
      }
      const Eigen::VectorXcd out = u * tmp;
      for (Eigen::Index j = 0; j < d; ++j) {
        block(static_cast<Eigen::Index>(base + j * stride), c) = out(j);
      }
    }
  }
}

/// Applies `g` to every column of `block` in place.
template <typename Derived>
void apply_gate_rows(Eigen::MatrixBase<Derived>& block, const Field& field,
                     int num_qudits, const Gate& g) {
  validate(g, field, num_qudits);
  if (g.kind == GateKind::H) {
    apply_local_rows(block, field.order(), num_qudits, g.q0, hadamard_matrix(field));
    return;
  }
  const auto perm = gate_permutation(field, num_qudits, g);
  typename Derived::PlainObject moved(block.rows(), block.cols());
  for (std::size_t i = 0; i < perm.size(); ++i) {
    moved.row(static_cast<Eigen::Index>(perm[i])) = block.row(static_cast<Eigen::Index>(i));
  }
  block = moved;
}

/// Basis map of a product without H gates: column i of its matrix has a
/// single 1 in row image[i]. Empty when the product contains H.
std::optional<std::vector<std::uint64_t>> basis_map(const Field& field, int num_qudits,
                                                    std::span<const Gate> product);

/// Dense matrix of the operator product g[0] g[1] ... g[k-1] (the last
/// factor acts first).
Eigen::MatrixXcd operator_matrix(const Field& field, int num_qudits,
                                 std::span<const Gate> product);

/// Field-aware N-qudit register.
class StateVector {
 public:
  StateVector(Field field, QuditState state);

  /// Tensor product of |s> and |0> factors, qudit 1 first.
  static StateVector init(const Field& field, std::span<const InitKind> pattern);
  /// Computational basis ket |x_1 ... x_N>.
  static StateVector basis(const Field& field, std::span<const Element> kets);

  const Field& field() const { return field_; }
  int num_qudits() const { return state_.num_qudits(); }
  std::uint64_t size() const { return state_.size(); }
  const QuditState& dense() const { return state_; }
  const Eigen::VectorXcd& amplitudes() const { return state_.amplitudes(); }
  Complex operator[](std::uint64_t index) const { return state_[index]; }

  /// Applies `g` in place. Throws std::invalid_argument for invalid gates.
  void apply(const Gate& g);
  /// Applies gates in time order.
  void apply(std::span<const Gate> circuit);

 private:
  Field field_;
  QuditState state_;
};

StateVector apply_gate(StateVector state, const Gate& g);

DensityMatrix reduced_density(const StateVector& state, std::span<const int> subset);

bool states_equal_up_to_phase(const StateVector& a, const StateVector& b,
                              double tol = kDefaultTolerance);

}  // namespace qgraph
