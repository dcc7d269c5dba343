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

// Dense N-qudit registers over an arbitrary local dimension, and the
// partial-trace / spectrum machinery shared by field and ring states.
//
// Basis index layout: qudit 1 is the most significant base-d digit, so the
// ket |x_1 x_2 ... x_N> sits at index sum_q x_q d^(N-q).

#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <complex>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace qgraph {

using Complex = std::complex<double>;

inline constexpr double kDefaultTolerance = 1e-10;
inline constexpr std::uint64_t kMaxAmplitudes = std::uint64_t{1} << 24;

/// Raised when a dense object would exceed kMaxAmplitudes entries.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// d^N, throwing ResourceLimitError above kMaxAmplitudes.
std::uint64_t checked_dimension(std::uint64_t local_dim, int num_qudits);

/// A pure state of N qudits of equal local dimension.
class QuditState {
 public:
  QuditState(std::uint64_t local_dim, int num_qudits);
  QuditState(std::uint64_t local_dim, int num_qudits, Eigen::VectorXcd amps);

  std::uint64_t local_dim() const { return local_dim_; }
  int num_qudits() const { return num_qudits_; }
  std::uint64_t size() const { return static_cast<std::uint64_t>(amps_.size()); }

  const Eigen::VectorXcd& amplitudes() const { return amps_; }
  Eigen::VectorXcd& amplitudes() { return amps_; }

  Complex operator[](std::uint64_t index) const { return amps_[static_cast<Eigen::Index>(index)]; }
  Complex& operator[](std::uint64_t index) { return amps_[static_cast<Eigen::Index>(index)]; }

  /// Base-d digits of `index`, qudit 1 first.
  std::vector<std::uint32_t> digits(std::uint64_t index) const;
  std::uint64_t index_of(std::span<const std::uint32_t> digits) const;
  /// d^(N-q) for 1-based qudit q.
  std::uint64_t stride(int qudit) const;

  double norm() const { return amps_.norm(); }

 private:
  std::uint64_t local_dim_;
  int num_qudits_;
  Eigen::VectorXcd amps_;
};

/// Reduced state of a pure register on a qudit subset.
struct DensityMatrix {
  std::vector<int> qudits;  // 1-based, ascending
  std::uint64_t local_dim = 0;
  Eigen::MatrixXcd rho;
};

/// Validates a 1-based qudit subset: sorted copy, distinct, in range.
std::vector<int> normalize_subset(std::span<const int> subset, int num_qudits);

/// rho_A = Tr_{complement}(|psi><psi|) for the qudits listed in `keep`.
///
/// `amps` is any column-vector expression of length local_dim^num_qudits.
/// The kept qudits keep their relative order.
template <typename Derived>
Eigen::MatrixXcd reduced_density(const Eigen::MatrixBase<Derived>& amps,
                                 std::uint64_t local_dim, int num_qudits,
                                 std::span<const int> keep) {
  const auto kept = normalize_subset(keep, num_qudits);
  const auto total = checked_dimension(local_dim, num_qudits);
  if (static_cast<std::uint64_t>(amps.size()) != total) {
    throw std::invalid_argument("amplitude vector has wrong length");
  }
  std::vector<bool> is_kept(num_qudits + 1, false);
  for (int q : kept) is_kept[q] = true;

  std::uint64_t kept_dim = 1;
  for (std::size_t i = 0; i < kept.size(); ++i) kept_dim *= local_dim;
  const std::uint64_t rest_dim = total / kept_dim;

  // Psi(kept_index, traced_index); rho = Psi Psi^dagger.
  Eigen::MatrixXcd psi(static_cast<Eigen::Index>(kept_dim),
                       static_cast<Eigen::Index>(rest_dim));
  for (std::uint64_t i = 0; i < total; ++i) {
    std::uint64_t rem = i;
    std::uint64_t a = 0, b = 0, wa = 1, wb = 1;
    for (int q = num_qudits; q >= 1; --q) {
      const std::uint64_t digit = rem % local_dim;
      rem /= local_dim;
      if (is_kept[q]) {
        a += digit * wa;
        wa *= local_dim;
      } else {
        b += digit * wb;
        wb *= local_dim;
      }
    }
    psi(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) =
        amps(static_cast<Eigen::Index>(i));
  }
  return psi * psi.adjoint();
}

/// Partial trace of a density matrix on `num_qudits` qudits down to `keep`.
template <typename Derived>
Eigen::MatrixXcd partial_trace(const Eigen::MatrixBase<Derived>& rho,
                               std::uint64_t local_dim, int num_qudits,
                               std::span<const int> keep) {
  const auto kept = normalize_subset(keep, num_qudits);
  const auto total = checked_dimension(local_dim, num_qudits);
  if (static_cast<std::uint64_t>(rho.rows()) != total ||
      static_cast<std::uint64_t>(rho.cols()) != total) {
    throw std::invalid_argument("density matrix has wrong shape");
  }
  std::vector<bool> is_kept(num_qudits + 1, false);
  for (int q : kept) is_kept[q] = true;

  std::uint64_t kept_dim = 1;
  for (std::size_t i = 0; i < kept.size(); ++i) kept_dim *= local_dim;

  std::vector<std::uint64_t> kept_idx(total), rest_idx(total);
  for (std::uint64_t i = 0; i < total; ++i) {
    std::uint64_t rem = i;
    std::uint64_t a = 0, b = 0, wa = 1, wb = 1;
    for (int q = num_qudits; q >= 1; --q) {
      const std::uint64_t digit = rem % local_dim;
      rem /= local_dim;
      if (is_kept[q]) {
        a += digit * wa;
        wa *= local_dim;
      } else {
        b += digit * wb;
        wb *= local_dim;
      }
    }
    kept_idx[i] = a;
    rest_idx[i] = b;
  }
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(kept_dim),
                                                static_cast<Eigen::Index>(kept_dim));
  for (std::uint64_t i = 0; i < total; ++i) {
    for (std::uint64_t j = 0; j < total; ++j) {
      if (rest_idx[i] != rest_idx[j]) continue;
      out(static_cast<Eigen::Index>(kept_idx[i]), static_cast<Eigen::Index>(kept_idx[j])) +=
          rho(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    }
  }
  return out;
}

/// Eigenvalues of a Hermitian matrix, sorted descending.
template <typename Derived>
std::vector<double> hermitian_spectrum(const Eigen::MatrixBase<Derived>& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m.derived(),
                                                         Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();
  std::vector<double> out(ev.data(), ev.data() + ev.size());
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

/// Largest |m_ij - (I/dim)_ij|.
template <typename Derived>
double max_deviation_from_maximally_mixed(const Eigen::MatrixBase<Derived>& m) {
  const auto n = m.rows();
  const Eigen::MatrixXcd target =
      Eigen::MatrixXcd::Identity(n, n) / static_cast<double>(n);
  return (m - target).cwiseAbs().maxCoeff();
}

DensityMatrix reduced_density(const QuditState& state, std::span<const int> subset);

std::vector<double> spectrum(const DensityMatrix& dm);
/// Number of eigenvalues above `tol`.
int rank(const DensityMatrix& dm, double tol = kDefaultTolerance);

/// |<a|b>| == 1 within `tol`, judged entrywise after aligning the phase.
bool states_equal_up_to_phase(const QuditState& a, const QuditState& b,
                              double tol = kDefaultTolerance);
/// max_i |a_i - e^{i theta} b_i| for the best global phase theta.
double phase_aligned_deviation(const QuditState& a, const QuditState& b);

/// New state whose qudit q carries old qudit `source[q - 1]`.
QuditState relabel_qudits(const QuditState& state, std::span<const int> source);

/// Systemwise tensor product: composite qudit q is the tuple of the inputs'
/// qudits q, first input most significant.
QuditState systemwise_tensor(std::span<const QuditState> parts);

}  // namespace qgraph
