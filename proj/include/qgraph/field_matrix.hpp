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

#include <span>
#include <vector>

#include "qgraph/gf.hpp"

namespace qgraph {

/// Row-major dense matrix over GF(p^n).
class FieldMatrix {
 public:
  FieldMatrix() = default;
  FieldMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Element operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  Element& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

  /// Columns `cols` (0-based) as a new matrix.
  FieldMatrix select_columns(std::span<const int> cols) const;
  void append_row(std::span<const Element> row);

  friend bool operator==(const FieldMatrix&, const FieldMatrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Element> data_;
};

struct EchelonForm {
  FieldMatrix reduced;      // reduced row echelon form, zero rows last
  std::vector<int> pivots;  // pivot column per nonzero row
};

/// Gauss-Jordan elimination, scanning columns in `column_order` (default
/// 0..cols-1) and taking the first usable pivot row.
EchelonForm row_reduce(const Field& field, FieldMatrix m,
                       std::span<const int> column_order = {});

int rank(const Field& field, const FieldMatrix& m);

}  // namespace qgraph
