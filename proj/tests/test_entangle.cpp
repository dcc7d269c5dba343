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

#include "qgraph/entangle.hpp"

namespace qgraph {
namespace {

constexpr double kTol = 1e-10;

std::vector<Field> psi_fields() {
  return {Field::make(3, 1), Field::make(2, 2), Field::make(5, 1), Field::make(7, 1),
          Field::make(2, 3), Field::make(3, 2)};
}

TEST(Psi, Gf4LiteralExpansion) {
  const auto psi = psi_state(Field::make(2, 2), Element{2});
  const std::vector<std::string> kets{"0000", "0211", "0322", "0133", "1101", "1310", "1223", "1032",
                                      "2202", "2013", "2120", "2331", "3303", "3112", "3021", "3230"};
  std::vector<bool> listed(psi.size(), false);
  for (const auto& k : kets) {
    std::vector<std::uint32_t> digits;
    for (char c : k) digits.push_back(static_cast<std::uint32_t>(c - '0'));
    const auto idx = psi.dense().index_of(digits);
    listed[idx] = true;
    EXPECT_LT(std::abs(psi[idx] - Complex(0.25)), kTol) << k;
  }
  for (std::uint64_t i = 0; i < psi.size(); ++i) {
    if (!listed[i]) ASSERT_EQ(psi[i], Complex(0.0)) << i;
  }
}

TEST(Psi, VerdictExamples) {
  const auto f4 = Field::make(2, 2);
  const auto report = mes_verdict(psi_state(f4, Element{2}).dense());
  EXPECT_TRUE(report.verdict);
  ASSERT_EQ(report.bipartitions.size(), 7u);
  for (const auto& b : report.bipartitions) {
    EXPECT_LT(b.deviation, kTol);
    EXPECT_TRUE(b.flat);
  }
  EXPECT_EQ(report.bipartitions[4].subset, (std::vector<int>{1, 2}));
  EXPECT_EQ(report.bipartitions[4].rank, 16);
  EXPECT_FALSE(mes_verdict(psi_state(f4, Element{0}).dense()).verdict);
}

TEST(Psi, MaximalExactlyOutsideZeroAndOne) {
  for (const Field& f : psi_fields()) {
    for (std::uint32_t r = 0; r < f.order(); ++r) {
      const bool verdict = mes_verdict(psi_state(f, Element{r}).dense()).verdict;
      EXPECT_EQ(verdict, r >= 2) << f.descriptor() << " a_r=" << r;
    }
  }
  const Field f2 = Field::make(2, 1);
  for (std::uint32_t r = 0; r < 2; ++r) EXPECT_FALSE(mes_verdict(psi_state(f2, Element{r}).dense()).verdict);
}

TEST(Verdict, BellPairsAndGhzFail) {
  const Field f = Field::make(3, 1);
  // Bell pairs on (1,2) and (3,4): {1,2} is pure; on (1,3) and (2,4): {1,3} is.
  const std::vector<InitKind> pattern{InitKind::Plus, InitKind::Zero, InitKind::Plus, InitKind::Zero};
  StateVector pairs = StateVector::init(f, pattern);
  pairs.apply(Gate::C(1, 2, f.one()));
  pairs.apply(Gate::C(3, 4, f.one()));
  const auto r = mes_verdict(pairs.dense());
  EXPECT_FALSE(r.verdict);
  for (int i = 0; i < 4; ++i) EXPECT_TRUE(r.bipartitions[i].maximally_mixed);
  EXPECT_FALSE(r.bipartitions[4].maximally_mixed);  // {1,2}
  EXPECT_EQ(r.bipartitions[4].rank, 1);
  EXPECT_TRUE(r.bipartitions[5].maximally_mixed);  // {1,3}

  const auto crossed = mes_verdict(relabel_qudits(pairs.dense(), std::vector<int>{1, 3, 2, 4}));
  EXPECT_FALSE(crossed.verdict);
  EXPECT_TRUE(crossed.bipartitions[4].maximally_mixed);
  EXPECT_FALSE(crossed.bipartitions[5].maximally_mixed);

  StateVector ghz = StateVector::init(f, std::vector<InitKind>{InitKind::Plus, InitKind::Zero,
                                                               InitKind::Zero, InitKind::Zero});
  for (int j = 2; j <= 4; ++j) ghz.apply(Gate::C(1, j, f.one()));
  const auto g = mes_verdict(ghz.dense());
  EXPECT_FALSE(g.verdict);
  EXPECT_EQ(g.bipartitions[4].rank, 3);
}

TEST(Verdict, SubsetConvention) {
  EXPECT_EQ(bipartition_subsets(4),
            (std::vector<std::vector<int>>{{1}, {2}, {3}, {4}, {1, 2}, {1, 3}, {1, 4}}));
  EXPECT_EQ(bipartition_subsets(5).size(), 15u);
  EXPECT_EQ(bipartition_subsets(2), (std::vector<std::vector<int>>{{1}}));
}

TEST(PPrime, ParityLaw) {
  for (std::uint64_t d = 2; d <= 15; ++d) {
    const auto report = mes_verdict(p_prime_state(d).dense());
    EXPECT_EQ(report.verdict, d % 2 == 1) << d;
  }
}

TEST(Compose, TensorOfMesIsMes) {
  const auto psi = psi_state(Field::make(2, 2), Element{2}).dense();
  const auto p3 = p_prime_state(3).dense();
  const auto p5 = p_prime_state(5).dense();

  const std::vector<QuditState> single{p3};
  const auto same = compose_mes(single);
  EXPECT_LT((same.amplitudes() - p3.amplitudes()).cwiseAbs().maxCoeff(), kTol);

  const std::vector<QuditState> twelve{psi, p3};
  const auto c12 = compose_mes(twelve);
  EXPECT_EQ(c12.local_dim(), 12u);
  EXPECT_TRUE(mes_verdict(c12, 1e-9).verdict);

  const std::vector<QuditState> fifteen{p3, p5};
  EXPECT_TRUE(mes_verdict(compose_mes(fifteen)).verdict);

  // Systemwise digit layout: composite digit = first * d_2 + second.
  const std::vector<QuditState> two{p3, p3};
  const auto c9 = compose_mes(two);
  const std::vector<std::uint32_t> ket{0 * 3 + 1, 2 * 3 + 0, 1 * 3 + 1, 1 * 3 + 2};  // (0,2,1,1) x (1,0,1,2)
  EXPECT_NEAR(c9[c9.index_of(ket)].real(), 1.0 / 9, kTol);
}

TEST(MesForDimension, Branches) {
  const auto seven = mes_for_dimension(7);
  ASSERT_TRUE(std::holds_alternative<MesConstruction>(seven));
  EXPECT_EQ(std::get<MesConstruction>(seven).factors, std::vector<std::string>{"P'(7)"});
  EXPECT_TRUE(mes_verdict(std::get<MesConstruction>(seven).state).verdict);

  const auto twelve = mes_for_dimension(12);
  ASSERT_TRUE(std::holds_alternative<MesConstruction>(twelve));
  const auto& c = std::get<MesConstruction>(twelve);
  EXPECT_EQ(c.factors.size(), 2u);
  EXPECT_EQ(c.state.local_dim(), 12u);
  EXPECT_TRUE(mes_verdict(c.state, 1e-9).verdict);

  for (std::uint64_t d : {2, 6, 10, 14}) {
    const auto r = mes_for_dimension(d);
    ASSERT_TRUE(std::holds_alternative<MesRefusal>(r)) << d;
    EXPECT_NE(std::get<MesRefusal>(r).reason.find("conjectured not to exist"), std::string::npos);
  }
  EXPECT_THROW(mes_for_dimension(1), std::invalid_argument);
  EXPECT_THROW(mes_for_dimension(68), ResourceLimitError);
}

TEST(MesForDimension, EightAndThirtySix) {
  const auto eight = std::get<MesConstruction>(mes_for_dimension(8));
  EXPECT_EQ(eight.factors.size(), 1u);
  EXPECT_TRUE(mes_verdict(eight.state).verdict);
  const auto c36 = std::get<MesConstruction>(mes_for_dimension(36));
  EXPECT_EQ(c36.factors.size(), 3u);  // psi over GF(4), P'(3), P'(3)
}

SymbolicState sym_from_rows(const Field& f, std::vector<std::vector<std::uint32_t>> rows) {
  FieldMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) m(r, c) = Element{rows[r][c]};
  }
  const int n = m.cols();
  return SymbolicState{f, n, m, std::vector<Element>(n)};
}

TEST(SymbolicRank, Examples) {
  for (const Field& f : {Field::make(2, 1), Field::make(3, 1)}) {
    const std::vector<int> a1{1};
    const std::vector<int> a12{1, 2};
    EXPECT_EQ(symbolic_rdm_rank(sym_from_rows(f, {{1, 1}}), a1), f.order());
    const auto ghz = sym_from_rows(f, {{1, 1, 1}});
    EXPECT_EQ(symbolic_rdm_rank(ghz, a12), f.order());
    EXPECT_EQ(static_cast<std::uint64_t>(rank(reduced_density(ghz.to_state(), a12))), f.order());
  }
  // Square graph with a_r = 2 over GF(4): rows for qudits 1 and 3.
  const auto sq = sym_from_rows(Field::make(2, 2), {{1, 1, 0, 1}, {0, 2, 1, 1}});
  const std::vector<int> a13{1, 3};
  EXPECT_EQ(symbolic_rdm_rank(sq, a13), 16u);
  EXPECT_EQ(rank(reduced_density(sq.to_state(), a13)), 16);
}

TEST(SymbolicRank, AgreesWithDenseOnRandomCircuits) {
  std::mt19937_64 rng(500);
  for (const Field& f : {Field::make(2, 1), Field::make(3, 1), Field::make(2, 2), Field::make(5, 1)}) {
    for (int trial = 0; trial < 500; ++trial) {
      const int n = 2 + static_cast<int>(rng() % 3);
      std::vector<InitKind> pattern(n, InitKind::Zero);
      const int k = 1 + static_cast<int>(rng() % (n - 1));
      for (int i = 0; i < k; ++i) pattern[i] = InitKind::Plus;
      std::shuffle(pattern.begin(), pattern.end(), rng);
      std::vector<Gate> gates;
      for (int g = 0; g < 12; ++g) {
        const int m = 1 + static_cast<int>(rng() % n);
        const int t = 1 + static_cast<int>(rng() % n);
        if (m != t) gates.push_back(Gate::C(m, t, Element{static_cast<std::uint32_t>(rng() % f.order())}));
      }
      const Circuit c(f, pattern, gates);
      std::vector<int> subset;
      while (subset.empty() || static_cast<int>(subset.size()) == n) {
        subset.clear();
        for (int q = 1; q <= n; ++q) {
          if (rng() & 1) subset.push_back(q);
        }
      }
      const auto dm = reduced_density(c.simulate(), subset);
      const auto spec = spectrum(dm);
      const int dense_rank = rank(dm);
      ASSERT_EQ(symbolic_rdm_rank(symbolic_run(c), subset), static_cast<std::uint64_t>(dense_rank));
      // Flat: every nonzero eigenvalue equals 1 / rank.
      ASSERT_LT(spec.front() - spec[dense_rank - 1], kTol);
    }
  }
}

TEST(EntropyProblem, TracingOneSystemOfMes) {
  for (std::uint64_t d : {3, 4, 5}) {
    const auto r = entropy_problem_checks(d);
    EXPECT_TRUE(r.trivial.holds);
    EXPECT_EQ(r.trivial.rank, static_cast<int>(d * d * d));
    ASSERT_TRUE(r.from_mes.has_value());
    EXPECT_EQ(r.from_mes->rank, static_cast<int>(d));
    EXPECT_LT(r.from_mes->pair_deviation, kTol);
    EXPECT_TRUE(r.from_mes->holds);
  }
  const auto two = entropy_problem_checks(2);
  EXPECT_TRUE(two.trivial.holds);
  EXPECT_EQ(two.trivial.rank, 8);
  EXPECT_FALSE(two.from_mes.has_value());
}

}  // namespace
}  // namespace qgraph
