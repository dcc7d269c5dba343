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

#include <random>

#include "oracle.hpp"
#include "qgraph/duality.hpp"
#include "qgraph/entangle.hpp"

namespace qgraph {
namespace {

constexpr double kTol = 1e-10;

// Conjugation identity evaluated column by column on the reference register.
bool oracle_identity_holds(const Field& f, int a) {
  const oracle::Gf o(f.p(), f.n(), f.poly());
  using oracle::Kind;
  std::vector<oracle::Op> time_order{{Kind::H, 1, 0, 0}, {Kind::V, 1, 0, 0}, {Kind::V, 2, 0, 0}};
  for (int i = 0; i < 3; ++i) time_order.push_back({Kind::H, 2, 0, 0});
  time_order.push_back({Kind::C, 1, 2, a});
  time_order.push_back({Kind::H, 2, 0, 0});
  time_order.push_back({Kind::V, 2, 0, 0});
  time_order.push_back({Kind::V, 1, 0, 0});
  for (int i = 0; i < 3; ++i) time_order.push_back({Kind::H, 1, 0, 0});

  for (int col = 0; col < o.d * o.d; ++col) {
    oracle::Register lhs(o.d, 2);
    lhs.amp[col] = 1.0;
    oracle::Register rhs = lhs;
    for (const auto& op : time_order) oracle::apply(o, lhs, op);
    oracle::apply(o, rhs, {Kind::C, 2, 1, a});
    for (std::size_t i = 0; i < lhs.amp.size(); ++i) {
      if (std::abs(lhs.amp[i] - rhs.amp[i]) >= kTol) return false;
    }
  }
  return true;
}

GraphState square_graph(const Field& f, Element a_r) {
  GraphState g(f, 4, {1, 3});
  g.set_edge(1, 2, f.one());
  g.set_edge(1, 4, f.one());
  g.set_edge(3, 4, f.one());
  g.set_edge(3, 2, a_r);
  return g;
}

TEST(DualGraph, TwoQuditExample) {
  const Field f = Field::make(3, 1);
  GraphState g(f, 2, {1});
  g.set_edge(1, 2, f.one());
  const GraphState d = dual_graph(g);
  EXPECT_EQ(d.S(), std::vector<int>{2});
  EXPECT_EQ(d.O(), std::vector<int>{1});
  EXPECT_EQ(d.label(2, 1), f.one());
  EXPECT_EQ(d.init_pattern(), (std::vector<InitKind>{InitKind::Zero, InitKind::Plus}));
}

TEST(DualGraph, SquareEdgesReverse) {
  const Field f = Field::make(2, 2);
  const GraphState d = dual_graph(square_graph(f, Element{2}));
  EXPECT_EQ(d.S(), (std::vector<int>{2, 4}));
  EXPECT_EQ(d.edges().size(), 4u);
  EXPECT_EQ(d.label(2, 1), f.one());
  EXPECT_EQ(d.label(4, 1), f.one());
  EXPECT_EQ(d.label(4, 3), f.one());
  EXPECT_EQ(d.label(2, 3), Element{2});
}

TEST(DualGraph, IsInvolution) {
  std::mt19937_64 rng(1);
  const Field f = Field::make(5, 1);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<int> s;
    for (int q = 1; q <= 5; ++q) {
      if (rng() & 1) s.push_back(q);
    }
    if (s.empty() || s.size() == 5) continue;
    GraphState g(f, 5, s);
    for (int i : g.S()) {
      for (int j : g.O()) g.set_edge(i, j, Element{static_cast<std::uint32_t>(rng() % 5)});
    }
    EXPECT_EQ(dual_graph(dual_graph(g)), g);
  }
}

TEST(ConjugationIdentity, HoldsForPrimeFields) {
  for (int p : {2, 3, 5, 7}) {
    const auto r = check_conjugation_identity(Field::make(p, 1));
    EXPECT_TRUE(r.conjugation_identity_holds.value()) << p;
    EXPECT_LT(r.max_deviation, kTol);
    EXPECT_EQ(r.passing_parameters.size(), static_cast<std::size_t>(p - 1));
    EXPECT_FALSE(r.counterexample.has_value());
  }
}

TEST(ConjugationIdentity, AgreesWithOracleForEveryModulus) {
  for (auto [p, n] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}}) {
    for (const auto& report : survey_conjugation_identity(p, n)) {
      const Field f = Field::parse_descriptor(report.field);
      ASSERT_TRUE(report.conjugation_identity_holds.has_value());
      EXPECT_EQ(report.counterexample.has_value(), !*report.conjugation_identity_holds);
      for (Element a : report.passing_parameters) {
        EXPECT_TRUE(oracle_identity_holds(f, static_cast<int>(a.index))) << report.field << " a=" << a.index;
      }
      for (Element a : report.failing_parameters) {
        EXPECT_FALSE(oracle_identity_holds(f, static_cast<int>(a.index))) << report.field << " a=" << a.index;
      }
      EXPECT_EQ(report.passing_parameters.size() + report.failing_parameters.size(), f.order() - 1);
    }
  }
}

// Measured outcome, frozen from the reference evaluation above.
TEST(ConjugationIdentity, Gf4OutcomeIsOnlyTheUnit) {
  const auto r = check_conjugation_identity(Field::make(2, 2));
  EXPECT_FALSE(r.conjugation_identity_holds.value());
  EXPECT_EQ(r.passing_parameters, std::vector<Element>{Element{1}});
  EXPECT_EQ(r.failing_parameters, (std::vector<Element>{Element{2}, Element{3}}));
  ASSERT_TRUE(r.counterexample.has_value());
  EXPECT_EQ(r.counterexample->parameter, Element{2});
}

TEST(ConjugationIdentity, RejectsZero) {
  EXPECT_THROW(check_conjugation_identity(Field::make(3, 1), Element{0}), std::invalid_argument);
}

TEST(FourierReversal, MapsZeroAndPlus) {
  for (const Field& f : {Field::make(2, 1), Field::make(3, 1), Field::make(2, 2), Field::make(5, 1),
                         Field::make(7, 1), Field::make(2, 3), Field::make(3, 2)}) {
    EXPECT_TRUE(fourier_reversal_maps_basis(f)) << f.descriptor();
  }
}

TEST(DualEquivalence, TwoQuditGraphOverGf3) {
  const Field f = Field::make(3, 1);
  GraphState g(f, 2, {1});
  g.set_edge(1, 2, f.one());
  const auto r = verify_dual_equivalence(g);
  EXPECT_TRUE(r.state_equivalence_holds.value());
  EXPECT_TRUE(r.signature_match.value());
  EXPECT_LT(r.max_deviation, kTol);
}

TEST(DualEquivalence, QubitGhz) {
  const Field f = Field::make(2, 1);
  GraphState g(f, 3, {1});
  g.set_edge(1, 2, f.one());
  g.set_edge(1, 3, f.one());
  const auto r = verify_dual_equivalence(g);
  EXPECT_TRUE(r.state_equivalence_holds.value());
  EXPECT_TRUE(r.signature_match.value());
}

TEST(DualEquivalence, SquareGraphOverGf4SignaturesMatch) {
  const auto r = verify_dual_equivalence(square_graph(Field::make(2, 2), Element{2}));
  EXPECT_TRUE(r.signature_match.value());
}

// Every standard-form graph (any S, all labels) for the given field and N.
template <typename Fn>
void for_each_graph(const Field& f, int n, Fn&& fn) {
  for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
    std::vector<int> s;
    for (int q = 0; q < n; ++q) {
      if (mask & (1u << q)) s.push_back(q + 1);
    }
    GraphState base(f, n, s);
    std::vector<std::pair<int, int>> slots;
    for (int i : base.S()) {
      for (int j : base.O()) slots.emplace_back(i, j);
    }
    std::vector<std::uint32_t> labels(slots.size(), 0);
    while (true) {
      GraphState g = base;
      for (std::size_t e = 0; e < slots.size(); ++e) g.set_edge(slots[e].first, slots[e].second, Element{labels[e]});
      fn(g);
      std::size_t pos = slots.size();
      while (pos > 0 && ++labels[pos - 1] == f.order()) labels[--pos] = 0;
      if (pos == 0) break;
    }
  }
}

TEST(DualEquivalence, SignaturesMatchExhaustivelySmallFields) {
  for (const Field& f : {Field::make(2, 1), Field::make(3, 1)}) {
    for (int n = 2; n <= 4; ++n) {
      for_each_graph(f, n, [&](const GraphState& g) {
        ASSERT_TRUE(verify_dual_equivalence(g).signature_match.value()) << f.descriptor();
      });
    }
  }
}

TEST(DualEquivalence, SignaturesMatchRandomGf4Gf5) {
  std::mt19937_64 rng(500);
  for (const Field& f : {Field::make(2, 2), Field::make(5, 1)}) {
    for (int trial = 0; trial < 500; ++trial) {
      const int n = 2 + static_cast<int>(rng() % 3);
      std::vector<int> s;
      while (s.empty() || static_cast<int>(s.size()) == n) {
        s.clear();
        for (int q = 1; q <= n; ++q) {
          if (rng() & 1) s.push_back(q);
        }
      }
      GraphState g(f, n, s);
      for (int i : g.S()) {
        for (int j : g.O()) g.set_edge(i, j, Element{static_cast<std::uint32_t>(rng() % f.order())});
      }
      ASSERT_TRUE(verify_dual_equivalence(g).signature_match.value());
    }
  }
}

TEST(LuSignature, InvariantUnderLocalUnitariesAndRelabelling) {
  std::mt19937_64 rng(9);
  const Field f = Field::make(3, 1);
  const auto base = square_graph(f, Element{2}).simulate();
  const auto sig = lu_signature(base.dense());
  for (int trial = 0; trial < 20; ++trial) {
    StateVector st = base;
    for (int q = 1; q <= 4; ++q) {
      st.apply(Gate::H(q));
      st.apply(Gate::D(q, Element{static_cast<std::uint32_t>(1 + rng() % 2)}));
      st.apply(Gate::A(q, Element{static_cast<std::uint32_t>(rng() % 3)}));
    }
    std::vector<int> perm{1, 2, 3, 4};
    std::shuffle(perm.begin(), perm.end(), rng);
    EXPECT_TRUE(signatures_match(sig, lu_signature(relabel_qudits(st.dense(), perm))));
  }
  // A GHZ state is not LU-equivalent to the square state.
  GraphState ghz(f, 4, {1});
  for (int j = 2; j <= 4; ++j) ghz.set_edge(1, j, f.one());
  EXPECT_FALSE(signatures_match(sig, lu_signature(ghz.simulate().dense())));
}

}  // namespace
}  // namespace qgraph
