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

#include "qgraph/dense.hpp"

#include <cmath>

namespace qgraph {

std::uint64_t checked_dimension(std::uint64_t local_dim, int num_qudits) {
  if (local_dim < 1) throw std::invalid_argument("local dimension must be >= 1");
  if (num_qudits < 1) throw std::invalid_argument("need at least one qudit");
  std::uint64_t total = 1;
  for (int i = 0; i < num_qudits; ++i) {
    total *= local_dim;
    if (total > kMaxAmplitudes) {
      throw ResourceLimitError("state of " + std::to_string(num_qudits) +
                               " qudits with d=" + std::to_string(local_dim) +
                               " exceeds 2^24 amplitudes");
    }
  }
  return total;
}

QuditState::QuditState(std::uint64_t local_dim, int num_qudits)
    : local_dim_(local_dim), num_qudits_(num_qudits) {
  amps_ = Eigen::VectorXcd::Zero(
      static_cast<Eigen::Index>(checked_dimension(local_dim, num_qudits)));
}

QuditState::QuditState(std::uint64_t local_dim, int num_qudits, Eigen::VectorXcd amps)
    : local_dim_(local_dim), num_qudits_(num_qudits), amps_(std::move(amps)) {
  if (static_cast<std::uint64_t>(amps_.size()) != checked_dimension(local_dim, num_qudits)) {
    throw std::invalid_argument("amplitude vector has wrong length");
  }
}

std::vector<std::uint32_t> QuditState::digits(std::uint64_t index) const {
  std::vector<std::uint32_t> out(num_qudits_);
  for (int q = num_qudits_; q-- > 0;) {
    out[q] = static_cast<std::uint32_t>(index % local_dim_);
    index /= local_dim_;
  }
  return out;
}

std::uint64_t QuditState::index_of(std::span<const std::uint32_t> digits) const {
  if (static_cast<int>(digits.size()) != num_qudits_) {
    throw std::invalid_argument("digit string has wrong length");
  }
  std::uint64_t idx = 0;
  for (auto x : digits) {
    if (x >= local_dim_) throw std::out_of_range("digit out of range");
    idx = idx * local_dim_ + x;
  }
  return idx;
}

std::uint64_t QuditState::stride(int qudit) const {
  if (qudit < 1 || qudit > num_qudits_) throw std::out_of_range("qudit out of range");
  std::uint64_t s = 1;
  for (int q = qudit; q < num_qudits_; ++q) s *= local_dim_;
  return s;
}

std::vector<int> normalize_subset(std::span<const int> subset, int num_qudits) {
  std::vector<int> out(subset.begin(), subset.end());
  std::sort(out.begin(), out.end());
  if (out.empty()) throw std::invalid_argument("qudit subset is empty");
  if (std::adjacent_find(out.begin(), out.end()) != out.end()) {
    throw std::invalid_argument("qudit subset has duplicates");
  }
  if (out.front() < 1 || out.back() > num_qudits) {
    throw std::out_of_range("qudit subset out of range");
  }
  return out;
}

DensityMatrix reduced_density(const QuditState& state, std::span<const int> subset) {
  auto kept = normalize_subset(subset, state.num_qudits());
  if (static_cast<int>(kept.size()) == state.num_qudits()) {
    throw std::invalid_argument("reduced density needs a proper subset");
  }
  DensityMatrix dm;
  dm.rho = reduced_density(state.amplitudes(), state.local_dim(), state.num_qudits(), kept);
  dm.qudits = std::move(kept);
  dm.local_dim = state.local_dim();
  return dm;
}

std::vector<double> spectrum(const DensityMatrix& dm) { return hermitian_spectrum(dm.rho); }

int rank(const DensityMatrix& dm, double tol) {
  const auto ev = spectrum(dm);
  return static_cast<int>(std::count_if(ev.begin(), ev.end(), [tol](double x) { return x > tol; }));
}

double phase_aligned_deviation(const QuditState& a, const QuditState& b) {
  if (a.size() != b.size()) throw std::invalid_argument("states differ in dimension");
  const Complex overlap = b.amplitudes().dot(a.amplitudes());  // <b|a>
  Complex phase{1.0, 0.0};
  if (std::abs(overlap) > 0.0) phase = overlap / std::abs(overlap);
  return (a.amplitudes() - phase * b.amplitudes()).cwiseAbs().maxCoeff();
}

bool states_equal_up_to_phase(const QuditState& a, const QuditState& b, double tol) {
  if (a.local_dim() != b.local_dim() || a.num_qudits() != b.num_qudits()) return false;
  const double overlap = std::abs(b.amplitudes().dot(a.amplitudes()));
  if (std::abs(overlap - 1.0) > std::sqrt(tol)) return false;
  return phase_aligned_deviation(a, b) < tol;
}

QuditState relabel_qudits(const QuditState& state, std::span<const int> source) {
  const int n = state.num_qudits();
  if (static_cast<int>(source.size()) != n) {
    throw std::invalid_argument("permutation has wrong length");
  }
  std::vector<int> check(source.begin(), source.end());
  std::sort(check.begin(), check.end());
  for (int q = 0; q < n; ++q) {
    if (check[q] != q + 1) throw std::invalid_argument("not a permutation of 1..N");
  }
  QuditState out(state.local_dim(), n);
  for (std::uint64_t i = 0; i < state.size(); ++i) {
    const auto old_digits = state.digits(i);
    std::vector<std::uint32_t> new_digits(n);
    for (int q = 0; q < n; ++q) new_digits[q] = old_digits[source[q] - 1];
    out[out.index_of(new_digits)] = state[i];
  }
  return out;
}

QuditState systemwise_tensor(std::span<const QuditState> parts) {
  if (parts.empty()) throw std::invalid_argument("nothing to compose");
  const int n = parts.front().num_qudits();
  std::uint64_t dim = 1;
  for (const auto& s : parts) {
    if (s.num_qudits() != n) throw std::invalid_argument("parts differ in qudit count");
    dim *= s.local_dim();
    if (dim > kMaxAmplitudes) throw ResourceLimitError("composite dimension too large");
  }
  QuditState out(dim, n);
  out.amplitudes().setZero();
  // Walk the tensor product of nonzero supports.
  std::vector<std::vector<std::uint64_t>> supports(parts.size());
  for (std::size_t j = 0; j < parts.size(); ++j) {
    for (std::uint64_t i = 0; i < parts[j].size(); ++i) {
      if (parts[j][i] != Complex{0.0, 0.0}) supports[j].push_back(i);
    }
    if (supports[j].empty()) return out;
  }
  std::vector<std::size_t> pos(parts.size(), 0);
  std::vector<std::uint32_t> composite(n);
  while (true) {
    Complex amp{1.0, 0.0};
    std::fill(composite.begin(), composite.end(), 0u);
    for (std::size_t j = 0; j < parts.size(); ++j) {
      const auto idx = supports[j][pos[j]];
      amp *= parts[j][idx];
      const auto dj = parts[j].digits(idx);
      for (int q = 0; q < n; ++q) {
        composite[q] = static_cast<std::uint32_t>(composite[q] * parts[j].local_dim() + dj[q]);
      }
    }
    out[out.index_of(composite)] = amp;
    std::size_t j = parts.size();
    while (j-- > 0) {
      if (++pos[j] < supports[j].size()) break;
      pos[j] = 0;
    }
    if (j == static_cast<std::size_t>(-1)) break;
  }
  return out;
}

}  // namespace qgraph
