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

#include <gtest/gtest.h>

#include <set>

#include "qgraph/relations.hpp"
#include "qgraph/simulator.hpp"

namespace qgraph {
namespace {

void expect_all_pass(const std::vector<RelationResult>& results) {
  EXPECT_EQ(results.size(), relation_catalog().size());
  for (const auto& r : results) {
    EXPECT_TRUE(r.passed()) << relation_name(r.relation) << " over " << r.field << ": "
                            << r.failures << " failures, max deviation " << r.max_deviation;
  }
}

TEST(Relations, CatalogCoversEveryRule) {
  std::set<Relation> seen;
  for (const auto& c : relation_catalog()) seen.insert(c.relation);
  EXPECT_EQ(seen.size(), relation_catalog().size());
  EXPECT_EQ(seen.size(), 15u);
}

TEST(Relations, ExhaustiveSmallFields) {
  for (const Field& f : {Field::make(2, 1), Field::make(3, 1), Field::make(2, 2), Field::make(5, 1)}) {
    expect_all_pass(run_relation_suite(f, SuiteOptions{}));
  }
}

TEST(Relations, ExhaustiveCountsForGf3) {
  const auto results = run_relation_suite(Field::make(3, 1), SuiteOptions{});
  for (const auto& r : results) {
    if (r.relation == Relation::AddMerge) EXPECT_EQ(r.tuples_checked, 18u);  // 9 pairs x 2 layouts
    if (r.relation == Relation::ShiftMerge) EXPECT_EQ(r.tuples_checked, 9u);
    if (r.relation == Relation::OpposedAddsSwap) EXPECT_EQ(r.tuples_checked, 4u);  // ij = 2
  }
}

TEST(Relations, RandomLargerFields) {
  for (const Field& f : {Field::make(7, 1), Field::make(2, 3), Field::make(3, 2)}) {
    SuiteOptions opt;
    opt.random_samples = 1000;
    opt.seed = 42;
    expect_all_pass(run_relation_suite(f, opt));
  }
}

TEST(Relations, SeedDeterminesSamples) {
  SuiteOptions opt;
  opt.random_samples = 5;
  opt.seed = 3;
  // A rewriter that records what it was asked.
  std::vector<std::pair<Gate, Gate>> first;
  std::vector<std::pair<Gate, Gate>> second;
  auto recorder = [](std::vector<std::pair<Gate, Gate>>& log) {
    return [&log](const Field& f, const Gate& l, const Gate& r) {
      log.emplace_back(l, r);
      return commute_pair(f, l, r);
    };
  };
  opt.rewriter = recorder(first);
  run_relation_suite(Field::make(3, 2), opt);
  opt.rewriter = recorder(second);
  run_relation_suite(Field::make(3, 2), opt);
  EXPECT_EQ(first, second);
}

TEST(Relations, CorruptedRuleIsReported) {
  // Drops the correction gate from the chain rule.
  SuiteOptions opt;
  opt.rewriter = [](const Field& f, const Gate& l, const Gate& r) {
    auto rw = rewrite_pair(f, l, r);
    if (rw.relation == Relation::ChainTargetFirst) rw.product.erase(rw.product.begin());
    return rw.product;
  };
  const auto results = run_relation_suite(Field::make(3, 1), opt);
  for (const auto& r : results) {
    if (r.relation == Relation::ChainTargetFirst) {
      EXPECT_FALSE(r.passed());
      ASSERT_TRUE(r.counterexample.has_value());
      // The dropped gate is C_ml(ij): the first failure has ij != 0.
      EXPECT_FALSE(r.counterexample->first.is_zero());
      EXPECT_FALSE(r.counterexample->second.is_zero());
      EXPECT_EQ(r.max_deviation, 1.0);
    } else {
      EXPECT_TRUE(r.passed()) << relation_name(r.relation);
    }
  }
}

TEST(Relations, PermutationShortcutAgreesWithDenseMatrices) {
  const Field f = Field::make(2, 2);
  const auto& catalog = relation_catalog();
  for (const auto& rc : catalog) {
    for (std::uint32_t i = 0; i < 4; ++i) {
      for (std::uint32_t j = 0; j < 4; ++j) {
        if (!rc.admissible(f, Element{i}, Element{j})) continue;
        const auto [l, r] = rc.lhs(WireLayout{}, Element{i}, Element{j});
        const std::vector<Gate> lhs{l, r};
        const std::vector<Gate> wrong{r, l};
        for (const auto& rhs : {commute_pair(f, l, r), wrong}) {
          const Eigen::MatrixXcd a = operator_matrix(f, rc.num_qudits, lhs);
          const Eigen::MatrixXcd b = operator_matrix(f, rc.num_qudits, rhs);
          ASSERT_EQ(operator_deviation(f, rc.num_qudits, lhs, rhs), (a - b).cwiseAbs().maxCoeff());
        }
      }
    }
  }
}

TEST(Relations, OperatorDeviationWithFourierGates) {
  const Field f = Field::make(3, 1);
  const std::vector<Gate> hhhh{Gate::H(1), Gate::H(1), Gate::H(1), Gate::H(1)};
  const std::vector<Gate> none{};
  EXPECT_LT(operator_deviation(f, 1, hhhh, none), 1e-12);
  const std::vector<Gate> hh{Gate::H(1), Gate::H(1)};
  EXPECT_GT(operator_deviation(f, 1, hh, none), 0.5);
}

}  // namespace
}  // namespace qgraph
