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

#include "qgraph/field_matrix.hpp"

#include <numeric>
#include <stdexcept>

namespace qgraph {

FieldMatrix FieldMatrix::select_columns(std::span<const int> cols) const {
  FieldMatrix out(rows_, static_cast<int>(cols.size()));
  for (int r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols.size(); ++c) out(r, static_cast<int>(c)) = (*this)(r, cols[c]);
  }
  return out;
}

void FieldMatrix::append_row(std::span<const Element> row) {
  if (rows_ == 0 && cols_ == 0) cols_ = static_cast<int>(row.size());
  if (static_cast<int>(row.size()) != cols_) throw std::invalid_argument("row has wrong length");
  data_.insert(data_.end(), row.begin(), row.end());
  ++rows_;
}

EchelonForm row_reduce(const Field& field, FieldMatrix m, std::span<const int> column_order) {
  std::vector<int> order(column_order.begin(), column_order.end());
  if (order.empty()) {
    order.resize(m.cols());
    std::iota(order.begin(), order.end(), 0);
  }
  EchelonForm out;
  int row = 0;
  for (int c : order) {
    if (row == m.rows()) break;
    int pivot = -1;
    for (int r = row; r < m.rows(); ++r) {
      if (!m(r, c).is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != row) {
      for (int k = 0; k < m.cols(); ++k) std::swap(m(pivot, k), m(row, k));
    }
    const Element scale = field.inv(m(row, c));
    for (int k = 0; k < m.cols(); ++k) m(row, k) = field.mul(scale, m(row, k));
    for (int r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, c).is_zero()) continue;
      const Element f = m(r, c);
      for (int k = 0; k < m.cols(); ++k) {
        m(r, k) = field.sub(m(r, k), field.mul(f, m(row, k)));
      }
    }
    out.pivots.push_back(c);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

int rank(const Field& field, const FieldMatrix& m) {
  return static_cast<int>(row_reduce(field, m).pivots.size());
}

}  // namespace qgraph
