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

#include "qgraph/report.hpp"

#include "qgraph/io.hpp"

namespace qgraph {

namespace {

ordered_json complex_json(Complex c) { return ordered_json::array({c.real(), c.imag()}); }

ordered_json indices(std::span<const Element> xs) {
  ordered_json out = ordered_json::array();
  for (Element e : xs) out.push_back(e.index);
  return out;
}

template <typename T>
ordered_json optional_json(const std::optional<T>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

}  // namespace

ordered_json to_json(const CanonicalForm& form) {
  ordered_json residual = ordered_json::array();
  for (Element e : form.residual_shifts) residual.push_back(e.index);
  return {{"permutation", form.permutation},
          {"pivots", form.pivots},
          {"graph", graph_to_json(form.graph)},
          {"residual_shifts", residual}};
}

ordered_json to_json(const DualityReport& report) {
  ordered_json j;
  j["field"] = report.field;
  j["conjugation_identity_holds"] = optional_json(report.conjugation_identity_holds);
  j["state_equivalence_holds"] = optional_json(report.state_equivalence_holds);
  j["signature_match"] = optional_json(report.signature_match);
  j["max_deviation"] = report.max_deviation;
  j["passing_parameters"] = indices(report.passing_parameters);
  j["failing_parameters"] = indices(report.failing_parameters);
  if (report.counterexample) {
    const auto& c = *report.counterexample;
    j["counterexample"] = {
        {"parameter", c.parameter ? ordered_json(c.parameter->index) : ordered_json(nullptr)},
        {"row", c.row},
        {"col", c.col},
        {"lhs", complex_json(c.lhs)},
        {"rhs", complex_json(c.rhs)}};
  } else {
    j["counterexample"] = nullptr;
  }
  return j;
}

ordered_json to_json(const BipartitionReport& report) {
  ordered_json parts = ordered_json::array();
  for (const auto& r : report.bipartitions) {
    parts.push_back({{"A", r.subset},
                     {"rank", r.rank},
                     {"deviation", r.deviation},
                     {"maximally_mixed", r.maximally_mixed},
                     {"flat", r.flat}});
  }
  return {{"verdict", report.verdict},
          {"convention", "every subset A with |A| < N/2, and |A| = N/2 when A contains qudit 1"},
          {"bipartitions", parts}};
}

ordered_json to_json(const Classification& c) {
  ordered_json classes = ordered_json::array();
  for (const auto& cls : c.classes) {
    ordered_json sig = ordered_json::array();
    for (const auto& s : cls.signature.spectra) sig.push_back(s);
    classes.push_back({{"type", cls.type},
                       {"members", cls.members},
                       {"representative", graph_to_json(cls.representative)},
                       {"signature", sig}});
  }
  return {{"field", field_to_json(c.field)},
          {"qudits", c.num_qudits},
          {"convention",
           "S = {1..k} with k <= N/2, all labels; graphs with a product qudit dropped; "
           "classes bucketed by LU signature; class type = smallest |S| in the bucket"},
          {"graphs_enumerated", c.graphs_enumerated},
          {"graphs_kept", c.graphs_kept},
          {"type_count", c.type_count()},
          {"types", c.types},
          {"lu_class_count", c.classes.size()},
          {"classes", classes}};
}

ordered_json to_json(std::span<const RelationResult> results) {
  ordered_json rows = ordered_json::array();
  bool all = true;
  for (const auto& r : results) {
    all = all && r.passed();
    ordered_json row{{"relation", std::string(relation_name(r.relation))},
                     {"field", r.field},
                     {"tuples", r.tuples_checked},
                     {"failures", r.failures},
                     {"max_deviation", r.max_deviation},
                     {"passed", r.passed()}};
    if (r.counterexample) {
      const auto& w = *r.counterexample_layout;
      row["counterexample"] = {{"i", r.counterexample->first.index},
                               {"j", r.counterexample->second.index},
                               {"wires", {w.m, w.n, w.l}}};
    }
    rows.push_back(std::move(row));
  }
  return {{"all_passed", all}, {"results", rows}};
}

ordered_json to_json(const EntropyProblemReport& report) {
  auto part = [](const TripartiteCheck& t) {
    return ordered_json{{"rank", t.rank}, {"pair_deviation", t.pair_deviation}, {"holds", t.holds}};
  };
  return {{"d", report.d},
          {"trivial", part(report.trivial)},
          {"from_mes", report.from_mes ? part(*report.from_mes) : ordered_json(nullptr)}};
}

}  // namespace qgraph
