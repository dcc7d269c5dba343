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

// Acceptance run: one PASS/FAIL line per criterion. A criterion passes only
// if its checks hold and it finishes inside its runtime budget.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "qgraph/classify.hpp"
#include "qgraph/cli.hpp"
#include "qgraph/duality.hpp"
#include "qgraph/entangle.hpp"
#include "qgraph/io.hpp"
#include "qgraph/relations.hpp"
#include "qgraph/rewrite.hpp"

namespace qgraph {
namespace {

constexpr double kTol = 1e-10;

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      if (ok) detail = what;
      ok = false;
    }
  }
};

using Check = std::function<Outcome()>;

bool run_criterion(const char* id, const char* name, double budget_s, const Check& check) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = check();
  } catch (const std::exception& e) {
    out.ok = false;
    out.detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (out.ok && secs >= budget_s) {
    out.ok = false;
    out.detail = "over runtime budget";
  }
  std::printf("%s  %-3s %-44s %8.2f s / %5.0f s%s%s\n", out.ok ? "PASS" : "FAIL", id, name, secs,
              budget_s, out.detail.empty() ? "" : "  ", out.detail.c_str());
  std::fflush(stdout);
  return out.ok;
}

std::vector<InitKind> random_pattern(int n, std::mt19937_64& rng) {
  std::vector<InitKind> p(n, InitKind::Zero);
  const int k = 1 + static_cast<int>(rng() % (n - 1));
  std::fill(p.begin(), p.begin() + k, InitKind::Plus);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

std::vector<Gate> random_adds(const Field& f, int n, int count, std::mt19937_64& rng) {
  std::vector<Gate> out;
  while (static_cast<int>(out.size()) < count) {
    const int m = 1 + static_cast<int>(rng() % n);
    const int t = 1 + static_cast<int>(rng() % n);
    if (m != t) out.push_back(Gate::C(m, t, Element{static_cast<std::uint32_t>(rng() % f.order())}));
  }
  return out;
}

Outcome f4_tables() {
  Outcome o;
  const Field f = Field::make(2, 2);
  const int add[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  const int mul[4][4] = {{0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}};
  for (std::uint32_t a = 0; a < 4; ++a) {
    for (std::uint32_t b = 0; b < 4; ++b) {
      o.require(f.add(Element{a}, Element{b}).index == static_cast<std::uint32_t>(add[a][b]), "add table");
      o.require(f.mul(Element{a}, Element{b}).index == static_cast<std::uint32_t>(mul[a][b]), "mul table");
    }
  }
  return o;
}

Outcome relation_suite() {
  Outcome o;
  const std::vector<std::pair<int, int>> fields{{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}};
  for (auto [p, n] : fields) {
    const Field f = Field::make(p, n);
    SuiteOptions opts;
    opts.tolerance = kTol;
    if (f.order() > 5) opts.random_samples = 1000;
    for (const auto& r : run_relation_suite(f, opts)) {
      o.require(r.passed() && r.max_deviation <= kTol,
                std::string(relation_name(r.relation)) + " over " + r.field);
    }
  }
  return o;
}

Outcome canonical_forms() {
  Outcome o;
  std::mt19937_64 rng(2026);
  for (auto [p, n] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}}) {
    const Field f = Field::make(p, n);
    for (int trial = 0; trial < 200; ++trial) {
      const int qudits = 2 + static_cast<int>(rng() % 4);
      const int gates = 1 + static_cast<int>(rng() % 30);
      const Circuit c(f, random_pattern(qudits, rng), random_adds(f, qudits, gates, rng));
      const auto form = canonicalize(c);
      const double dev = (form.reconstruct().dense().amplitudes() - c.simulate().dense().amplitudes())
                             .cwiseAbs()
                             .maxCoeff();
      o.require(!form.has_residual() && dev <= kTol, "reconstruction mismatch over " + f.descriptor());
    }
  }
  return o;
}

Outcome psi_literal() {
  Outcome o;
  const auto psi = psi_state(Field::make(2, 2), Element{2});
  const std::vector<std::string> kets{"0000", "0211", "0322", "0133", "1101", "1310", "1223", "1032",
                                      "2202", "2013", "2120", "2331", "3303", "3112", "3021", "3230"};
  std::vector<bool> listed(psi.size(), false);
  for (const auto& k : kets) {
    std::vector<std::uint32_t> digits;
    for (char c : k) digits.push_back(static_cast<std::uint32_t>(c - '0'));
    const auto idx = psi.dense().index_of(digits);
    listed[idx] = true;
    o.require(std::abs(psi[idx] - Complex(0.25)) < kTol, "amplitude of " + k);
  }
  for (std::uint64_t i = 0; i < psi.size(); ++i) {
    if (!listed[i]) o.require(psi[i] == Complex(0.0), "unexpected ket");
  }
  return o;
}

Outcome psi_sweep() {
  Outcome o;
  for (auto [p, n] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}}) {
    const Field f = Field::make(p, n);
    for (std::uint32_t r = 0; r < f.order(); ++r) {
      const bool expect = f.order() > 2 && r >= 2;
      o.require(mes_verdict(psi_state(f, Element{r}).dense(), kTol).verdict == expect,
                "d=" + std::to_string(f.order()) + " a_r=" + std::to_string(r));
    }
  }
  return o;
}

Outcome p_prime_parity() {
  Outcome o;
  for (std::uint64_t d : {3, 5, 7, 9, 11, 13, 15, 2, 4, 6, 8}) {
    o.require(mes_verdict(p_prime_state(d).dense(), kTol).verdict == (d % 2 == 1),
              "d=" + std::to_string(d));
  }
  return o;
}

int cli_exit(std::vector<std::string> args, std::string* out_text = nullptr) {
  args.insert(args.begin(), "qgraph");
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  if (out_text) *out_text = out.str();
  return code;
}

Outcome make_mes_twelve() {
  Outcome o;
  const auto path = (std::filesystem::temp_directory_path() / "qgraph_acceptance_mes12.txt").string();
  o.require(cli_exit({"make-mes", "12", "-o", path}) == cli::kOk, "make-mes 12 failed");
  std::ifstream in(path);
  const auto state = read_state(in);
  in.close();
  std::filesystem::remove(path);
  o.require(state.local_dim() == 12 && state.size() == 20736, "wrong register shape");
  const auto report = mes_verdict(state, 1e-9);
  o.require(report.bipartitions.size() == 7, "expected 7 subset checks");
  for (const auto& b : report.bipartitions) o.require(b.maximally_mixed, "subset not maximally mixed");
  o.require(report.verdict, "verdict false");
  o.require(cli_exit({"make-mes", "6"}) == cli::kVerdictFalse, "make-mes 6 did not refuse");
  o.require(std::holds_alternative<MesRefusal>(mes_for_dimension(6)), "d=6 constructed");
  return o;
}

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

Outcome duality_prime() {
  Outcome o;
  for (int p : {2, 3, 5, 7}) {
    const auto r = check_conjugation_identity(Field::make(p, 1), kTol);
    o.require(r.conjugation_identity_holds.value_or(false), "fails for d=" + std::to_string(p));
  }
  return o;
}

Outcome duality_extension() {
  Outcome o;
  std::string summary;
  for (auto [p, n] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}}) {
    for (const auto& r : survey_conjugation_identity(p, n, kTol)) {
      o.require(r.conjugation_identity_holds.has_value(), "no verdict for " + r.field);
      std::string passing;
      for (Element a : r.passing_parameters) passing += (passing.empty() ? "" : ",") + std::to_string(a.index);
      summary += (summary.empty() ? "" : "; ") + std::string("[") + r.field + "] " +
                 (*r.conjugation_identity_holds ? "holds" : "fails, holds only for a in {" + passing + "}");
    }
  }
  if (o.ok) o.detail = summary;
  return o;
}

Outcome duality_signatures() {
  Outcome o;
  std::uint64_t graphs = 0;
  for (auto [p, n] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {2, 2}}) {
    const Field f = Field::make(p, n);
    for (int qudits = 2; qudits <= 4; ++qudits) {
      for_each_graph(f, qudits, [&](const GraphState& g) {
        ++graphs;
        o.require(verify_dual_equivalence(g, kTol).signature_match.value_or(false),
                  "signature mismatch over " + f.descriptor());
      });
    }
  }
  if (o.ok) o.detail = std::to_string(graphs) + " graphs";
  return o;
}

Outcome classification() {
  Outcome o;
  const std::size_t expected[] = {1, 1, 2, 2};
  for (int p : {2, 3}) {
    for (int n = 2; n <= 5; ++n) {
      const auto c = classify(Field::make(p, 1), n);
      o.require(c.type_count() == expected[n - 2],
                "d=" + std::to_string(p) + " N=" + std::to_string(n) + " gave " + std::to_string(c.type_count()));
    }
  }
  return o;
}

Outcome tripartite() {
  Outcome o;
  for (std::uint64_t d : {3, 4, 5}) {
    const auto r = entropy_problem_checks(d, kTol);
    o.require(r.trivial.holds, "I/d^3 check, d=" + std::to_string(d));
    o.require(r.from_mes && r.from_mes->holds && r.from_mes->rank == static_cast<int>(d) &&
                  r.from_mes->pair_deviation <= kTol,
              "traced MES, d=" + std::to_string(d));
  }
  return o;
}

Outcome symbolic_rank() {
  Outcome o;
  std::mt19937_64 rng(11);
  for (auto [p, n] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}}) {
    const Field f = Field::make(p, n);
    for (int trial = 0; trial < 500; ++trial) {
      const int qudits = 2 + static_cast<int>(rng() % 3);
      const Circuit c(f, random_pattern(qudits, rng), random_adds(f, qudits, 12, rng));
      std::vector<int> subset;
      while (subset.empty() || static_cast<int>(subset.size()) == qudits) {
        subset.clear();
        for (int q = 1; q <= qudits; ++q) {
          if (rng() & 1) subset.push_back(q);
        }
      }
      const auto dense = static_cast<std::uint64_t>(rank(reduced_density(c.simulate(), subset)));
      o.require(symbolic_rdm_rank(symbolic_run(c), subset) == dense, "rank mismatch over " + f.descriptor());
    }
  }
  return o;
}

}  // namespace
}  // namespace qgraph

int main() {
  using namespace qgraph;
  bool all = true;
  all &= run_criterion("1", "F4 addition and multiplication tables", 1, f4_tables);
  all &= run_criterion("2", "commutation relations as operator identities", 120, relation_suite);
  all &= run_criterion("3", "canonical form reproduces circuit state", 120, canonical_forms);
  all &= run_criterion("4", "psi(2) over F4 term-by-term expansion", 1, psi_literal);
  all &= run_criterion("5", "psi(a_r) maximal iff a_r outside {0,1}", 60, psi_sweep);
  all &= run_criterion("6", "P' maximal exactly for odd d", 60, p_prime_parity);
  all &= run_criterion("7", "make-mes 12 verified, make-mes 6 refused", 60, make_mes_twelve);
  all &= run_criterion("8a", "conjugation identity over prime fields", 60, duality_prime);
  all &= run_criterion("8b", "conjugation identity report, GF(4) and GF(8)", 60, duality_extension);
  all &= run_criterion("8c", "graph and dual share LU signature", 60, duality_signatures);
  all &= run_criterion("9", "classification type counts, d = 2 and 3", 300, classification);
  all &= run_criterion("10", "rank-d tripartite state from traced MES", 30, tripartite);
  all &= run_criterion("11", "symbolic vs dense marginal rank", 120, symbolic_rank);
  std::printf("%s\n", all ? "ALL PASS" : "SOME CRITERIA FAILED");
  return all ? 0 : 1;
}
