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

#include "qgraph/relations.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <stdexcept>

#include "qgraph/simulator.hpp"

namespace qgraph {

namespace {

bool any_params(const Field&, Element, Element) { return true; }
bool first_nonzero(const Field&, Element i, Element) { return !i.is_zero(); }
bool second_nonzero(const Field&, Element, Element j) { return !j.is_zero(); }
bool both_nonzero(const Field&, Element i, Element j) { return !i.is_zero() && !j.is_zero(); }

bool opposed_invertible(const Field& f, Element i, Element j) {
  return !f.add(f.one(), f.mul(i, j)).is_zero();
}
bool opposed_singular(const Field& f, Element i, Element j) {
  return f.add(f.one(), f.mul(i, j)).is_zero();
}

std::vector<RelationCase> build_catalog() {
  using L = WireLayout;
  using P = std::pair<Gate, Gate>;
  return {
      {Relation::ShiftMerge, 1, any_params,
       [](const L& w, Element i, Element j) { return P{Gate::A(w.m, i), Gate::A(w.m, j)}; }},
      {Relation::ScaleMerge, 1, both_nonzero,
       [](const L& w, Element i, Element j) { return P{Gate::D(w.m, i), Gate::D(w.m, j)}; }},
      {Relation::ScalePastShift, 1, first_nonzero,
       [](const L& w, Element i, Element j) { return P{Gate::D(w.m, i), Gate::A(w.m, j)}; }},
      {Relation::AddPastControlShift, 2, any_params,
       [](const L& w, Element i, Element j) { return P{Gate::C(w.m, w.n, i), Gate::A(w.m, j)}; }},
      {Relation::AddPastTargetShift, 2, any_params,
       [](const L& w, Element i, Element j) { return P{Gate::C(w.m, w.n, i), Gate::A(w.n, j)}; }},
      {Relation::AddPastControlScale, 2, second_nonzero,
       [](const L& w, Element i, Element j) { return P{Gate::C(w.m, w.n, i), Gate::D(w.m, j)}; }},
      {Relation::AddPastTargetScale, 2, second_nonzero,
       [](const L& w, Element i, Element j) { return P{Gate::C(w.m, w.n, i), Gate::D(w.n, j)}; }},
      {Relation::AddMerge, 2, any_params,
       [](const L& w, Element i, Element j) {
         return P{Gate::C(w.m, w.n, i), Gate::C(w.m, w.n, j)};
       }},
      {Relation::OpposedAddsInvertible, 2, opposed_invertible,
       [](const L& w, Element i, Element j) {
         return P{Gate::C(w.m, w.n, i), Gate::C(w.n, w.m, j)};
       }},
      {Relation::OpposedAddsSwap, 2, opposed_singular,
       [](const L& w, Element i, Element j) {
         return P{Gate::C(w.m, w.n, i), Gate::C(w.n, w.m, j)};
       }},
      {Relation::SharedControl, 3, any_params,
       [](const L& w, Element i, Element j) {
         return P{Gate::C(w.m, w.n, i), Gate::C(w.m, w.l, j)};
       }},
      {Relation::SharedTarget, 3, any_params,
       [](const L& w, Element i, Element j) {
         return P{Gate::C(w.m, w.n, i), Gate::C(w.l, w.n, j)};
       }},
      {Relation::ChainTargetFirst, 3, any_params,
       [](const L& w, Element i, Element j) {
         return P{Gate::C(w.n, w.l, j), Gate::C(w.m, w.n, i)};
       }},
      {Relation::ChainControlFirst, 3, any_params,
       [](const L& w, Element i, Element j) {
         return P{Gate::C(w.m, w.n, i), Gate::C(w.n, w.l, j)};
       }},
      {Relation::Disjoint, 3, second_nonzero,
       [](const L& w, Element i, Element j) { return P{Gate::C(w.m, w.n, i), Gate::D(w.l, j)}; }},
  };
}

std::vector<WireLayout> layouts_for(int num_qudits, bool both) {
  switch (num_qudits) {
    case 1: return {{1, 0, 0}};
    case 2: return both ? std::vector<WireLayout>{{1, 2, 0}, {2, 1, 0}}
                        : std::vector<WireLayout>{{1, 2, 0}};
    default: return both ? std::vector<WireLayout>{{1, 2, 3}, {3, 1, 2}}
                         : std::vector<WireLayout>{{1, 2, 3}};
  }
}

}  // namespace

const std::vector<RelationCase>& relation_catalog() {
  static const std::vector<RelationCase> catalog = build_catalog();
  return catalog;
}

double operator_deviation(const Field& field, int num_qudits, std::span<const Gate> lhs,
                          std::span<const Gate> rhs) {
  // Two permutation matrices differ entrywise by exactly 0 or 1, so the
  // basis maps decide the dense comparison without materialising it.
  const auto a_map = basis_map(field, num_qudits, lhs);
  const auto b_map = basis_map(field, num_qudits, rhs);
  if (a_map && b_map) return *a_map == *b_map ? 0.0 : 1.0;
  const Eigen::MatrixXcd a = operator_matrix(field, num_qudits, lhs);
  const Eigen::MatrixXcd b = operator_matrix(field, num_qudits, rhs);
  return (a - b).cwiseAbs().maxCoeff();
}

std::vector<RelationResult> run_relation_suite(const Field& field, const SuiteOptions& options) {
  const Rewriter rewriter = options.rewriter ? options.rewriter : Rewriter(commute_pair);
  const std::uint32_t d = field.order();
  std::vector<RelationResult> results;

  for (const auto& rc : relation_catalog()) {
    RelationResult res;
    res.relation = rc.relation;
    res.field = field.descriptor();
    const auto layouts = layouts_for(rc.num_qudits, options.both_layouts);
    for (std::size_t li = 0; li < layouts.size(); ++li) {
      const auto& layout = layouts[li];
      auto check = [&](Element i, Element j) {
        const auto [left, right] = rc.lhs(layout, i, j);
        const std::vector<Gate> lhs{left, right};
        double dev = 0.0;
        try {
          const auto rhs = rewriter(field, left, right);
          dev = operator_deviation(field, rc.num_qudits, lhs, rhs);
        } catch (const std::invalid_argument&) {
          dev = std::numeric_limits<double>::infinity();
        }
        ++res.tuples_checked;
        res.max_deviation = std::max(res.max_deviation, dev);
        if (!(dev < options.tolerance)) {
          if (res.failures++ == 0) {
            res.counterexample = {i, j};
            res.counterexample_layout = layout;
          }
        }
      };

      if (!options.random_samples) {
        for (std::uint32_t i = 0; i < d; ++i) {
          for (std::uint32_t j = 0; j < d; ++j) {
            if (rc.admissible(field, Element{i}, Element{j})) check(Element{i}, Element{j});
          }
        }
        continue;
      }
      std::mt19937_64 rng(options.seed * 1000003ULL +
                          static_cast<std::uint64_t>(rc.relation) * 131ULL + li);
      std::uniform_int_distribution<std::uint32_t> pick(0, d - 1);
      for (std::uint64_t s = 0; s < *options.random_samples; ++s) {
        // Rejection sampling; every catalog domain has density >= 1/d.
        for (int attempt = 0; attempt < 100000; ++attempt) {
          const Element i{pick(rng)};
          const Element j{pick(rng)};
          if (rc.admissible(field, i, j)) {
            check(i, j);
            break;
          }
        }
      }
    }
    results.push_back(std::move(res));
  }
  return results;
}

}  // namespace qgraph
