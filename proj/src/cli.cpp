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

#include "qgraph/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include "qgraph/io.hpp"
#include "qgraph/report.hpp"

namespace qgraph::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// "p n [poly_index]" or a bare prime-power order "d".
Field parse_field(const std::string& text) {
  std::vector<long long> parts;
  std::string tok;
  std::string t = text;
  std::replace(t.begin(), t.end(), ',', ' ');
  std::istringstream ts(t);
  while (ts >> tok) {
    try {
      std::size_t used = 0;
      parts.push_back(std::stoll(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw UsageError("bad field '" + text + "'");
    }
  }
  if (parts.size() == 1) {
    const long long d = parts[0];
    for (long long p = 2; p <= d; ++p) {
      if (d % p != 0) continue;
      int n = 0;
      long long rest = d;
      while (rest % p == 0) {
        rest /= p;
        ++n;
      }
      if (rest != 1) throw UsageError("field order " + std::to_string(d) + " is not a prime power");
      return Field::make(static_cast<int>(p), n);
    }
    throw UsageError("field order must be at least 2");
  }
  return Field::parse_descriptor(t);
}

std::string fmt(double v) {
  std::ostringstream s;
  s.precision(3);
  s << std::scientific << v;
  return s.str();
}

void write_graph_text(std::ostream& out, const GraphState& g) {
  out << "field " << g.field().descriptor() << "\n";
  out << "S";
  for (int v : g.S()) out << ' ' << v;
  out << "\nO";
  for (int v : g.O()) out << ' ' << v;
  out << "\nedges";
  if (g.edges().empty()) out << " (none)";
  out << '\n';
  for (const auto& [ij, b] : g.edges()) {
    out << "  " << ij.first << " -> " << ij.second << " : " << b.index << '\n';
  }
}

GraphState load_graph(const std::string& path) {
  const std::string text = slurp(path);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    const auto j = nlohmann::ordered_json::parse(text);
    return graph_from_json(j.contains("graph") ? j.at("graph") : j);
  }
  return canonicalize(parse_circuit(text)).graph;
}

struct Options {
  double tolerance = kDefaultTolerance;
  std::uint64_t seed = 1;
  std::string format;
};

int cmd_normalize(const Options& opt, const std::string& path, const std::optional<std::string>& field,
                  bool verify, std::ostream& out, std::ostream& err) {
  Circuit c = parse_circuit(slurp(path));
  if (field) {
    c = Circuit(parse_field(*field), c.init, c.gates);
    c.validate();
  }
  if (!c.only_controlled_adds()) throw UsageError("normalize accepts only C gates");
  const CanonicalForm form = canonicalize(c);

  std::optional<double> deviation;
  if (verify) {
    deviation = phase_aligned_deviation(form.reconstruct().dense(), c.simulate().dense());
  }
  const bool ok = !deviation || *deviation < opt.tolerance;
  const std::string format = opt.format.empty() ? "json" : opt.format;
  const std::string verify_line =
      deviation ? std::string("verify: ") + (ok ? "ok" : "FAILED") + " (max deviation " +
                      fmt(*deviation) + ")"
                : "";

  if (format == "json") {
    auto j = to_json(form);
    if (deviation) {
      j["verified"] = ok;
      j["max_deviation"] = *deviation;
    }
    out << j.dump(2) << '\n';
  } else if (format == "text") {
    out << "permutation";
    for (int v : form.permutation) out << ' ' << v;
    out << '\n';
    write_graph_text(out, form.graph);
    if (deviation) out << verify_line << '\n';
  } else if (format == "dot") {
    out << graph_to_dot(form.graph);
    if (deviation) err << verify_line << '\n';
  } else {
    write_circuit(out, form.graph.to_circuit());
    if (deviation) err << verify_line << '\n';
  }
  return ok ? kOk : kVerdictFalse;
}

int cmd_classify(const Options& opt, const std::string& field, int qudits, std::ostream& out) {
  if (qudits < 2 || qudits > 5) throw UsageError("classify supports 2 <= N <= 5");
  const Classification c = classify(parse_field(field), qudits, opt.tolerance);
  if (opt.format == "text") {
    out << "field " << c.field.descriptor() << ", N = " << c.num_qudits << ": " << c.type_count()
        << " type(s), " << c.classes.size() << " LU class(es); kept " << c.graphs_kept << " of "
        << c.graphs_enumerated << " graphs\n";
    for (std::size_t i = 0; i < c.classes.size(); ++i) {
      const auto& cls = c.classes[i];
      out << "class " << i + 1 << ": type |S|=" << cls.type << ", " << cls.members
          << " member(s); representative:";
      for (const auto& [ij, b] : cls.representative.edges()) {
        out << ' ' << ij.first << "->" << ij.second << ':' << b.index;
      }
      out << '\n';
    }
  } else {
    out << to_json(c).dump(2) << '\n';
  }
  return kOk;
}

int cmd_dual_check(const Options& opt, const std::optional<std::string>& field,
                   const std::optional<std::string>& graph_path, bool all_polys, std::ostream& out) {
  std::optional<GraphState> graph;
  if (graph_path) graph = load_graph(*graph_path);
  if (!field && !graph) throw UsageError("dual-check needs --field or --graph");
  const Field f = field ? parse_field(*field) : graph->field();

  ordered_json j;
  bool ok = true;
  ordered_json identity = ordered_json::array();
  const auto reports = all_polys ? survey_conjugation_identity(f.p(), f.n(), opt.tolerance)
                                 : std::vector<DualityReport>{check_conjugation_identity(f, opt.tolerance)};
  for (const auto& r : reports) {
    ok = ok && r.conjugation_identity_holds.value_or(false);
    identity.push_back(to_json(r));
  }
  j["conjugation_identity"] = identity;
  const bool basis = fourier_reversal_maps_basis(f, opt.tolerance);
  j["fourier_reversal_maps_basis"] = basis;
  ok = ok && basis;
  if (graph) {
    const DualityReport r = verify_dual_equivalence(*graph, opt.tolerance);
    j["dual_graph"] = graph_to_json(dual_graph(*graph));
    j["graph_check"] = to_json(r);
    ok = ok && r.state_equivalence_holds.value_or(false) && r.signature_match.value_or(false);
  }
  j["all_hold"] = ok;
  out << j.dump(2) << '\n';
  return ok ? kOk : kVerdictFalse;
}

int cmd_verify_mes(const Options& opt, const std::string& path, std::ostream& out) {
  const QuditState state = parse_state(slurp(path));
  const BipartitionReport r = mes_verdict(state, opt.tolerance);
  if (opt.format == "text") {
    for (const auto& b : r.bipartitions) {
      out << "A = {";
      for (std::size_t i = 0; i < b.subset.size(); ++i) out << (i ? "," : "") << b.subset[i];
      out << "}  rank " << b.rank << "  deviation " << fmt(b.deviation) << "  "
          << (b.maximally_mixed ? "maximally mixed" : "NOT maximally mixed") << '\n';
    }
    out << "verdict: " << (r.verdict ? "maximally entangled" : "not maximally entangled") << '\n';
  } else {
    out << to_json(r).dump(2) << '\n';
  }
  return r.verdict ? kOk : kVerdictFalse;
}

int cmd_make_mes(long long d, const std::optional<std::string>& output, std::ostream& out,
                 std::ostream& err) {
  if (d < 2) throw UsageError("make-mes needs d >= 2");
  const auto result = mes_for_dimension(static_cast<std::uint64_t>(d));
  if (const auto* refusal = std::get_if<MesRefusal>(&result)) {
    err << "make-mes: d = " << d << ": " << refusal->reason << '\n';
    return kVerdictFalse;
  }
  const auto& c = std::get<MesConstruction>(result);
  std::vector<std::string> comments{"make-mes " + std::to_string(d)};
  for (const auto& f : c.factors) comments.push_back("factor " + f);
  if (output) {
    std::ofstream file(*output);
    if (!file) throw UsageError("cannot write '" + *output + "'");
    write_state(file, c.state, comments);
  } else {
    write_state(out, c.state, comments);
  }
  return kOk;
}

int cmd_relations(const Options& opt, const std::vector<std::string>& fields,
                  std::optional<std::uint64_t> samples, std::ostream& out) {
  std::vector<Field> list;
  if (fields.empty()) {
    for (int d : {2, 3, 4, 5, 7, 8, 9}) list.push_back(parse_field(std::to_string(d)));
  } else {
    for (const auto& f : fields) list.push_back(parse_field(f));
  }
  std::vector<RelationResult> all;
  for (const Field& f : list) {
    if (f.order() > 9) throw UsageError("relations-test supports fields with d <= 9");
    SuiteOptions so;
    so.seed = opt.seed;
    so.tolerance = opt.tolerance;
    if (f.order() > 5) so.random_samples = samples.value_or(1000);
    auto rs = run_relation_suite(f, so);
    all.insert(all.end(), rs.begin(), rs.end());
  }
  bool ok = true;
  for (const auto& r : all) ok = ok && r.passed();
  if (opt.format == "json") {
    out << to_json(all).dump(2) << '\n';
  } else {
    for (const auto& r : all) {
      out << (r.passed() ? "PASS " : "FAIL ") << "[" << r.field << "] " << relation_name(r.relation)
          << "  tuples " << r.tuples_checked << "  max deviation " << fmt(r.max_deviation);
      if (r.counterexample) {
        out << "  first failure i=" << r.counterexample->first.index
            << " j=" << r.counterexample->second.index;
      }
      out << '\n';
    }
    out << (ok ? "all relations hold" : "some relations FAILED") << '\n';
  }
  return ok ? kOk : kVerdictFalse;
}

int cmd_simulate(const std::string& path, const std::optional<std::string>& field, std::ostream& out) {
  Circuit c = parse_circuit(slurp(path));
  if (field) {
    c = Circuit(parse_field(*field), c.init, c.gates);
    c.validate();
  }
  write_state(out, c.simulate().dense(), {"simulate " + path});
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graph states over finite fields: canonical forms, duality and MES checks", "qgraph"};
  app.require_subcommand(1);
  Options opt;
  std::optional<std::string> field;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--tolerance", opt.tolerance, "Comparison tolerance")
        ->check(CLI::PositiveNumber);
    sub->add_option("--seed", opt.seed, "Seed for randomized suites");
  };

  std::string path;
  bool verify = false;
  auto* normalize = app.add_subcommand("normalize", "Reduce a C-only circuit to standard form");
  normalize->add_option("file", path, "Circuit file")->required();
  normalize->add_option("--field", field, "Field override: 'p n [poly]' or order d");
  normalize->add_flag("--verify", verify, "Re-simulate and compare with the input circuit");
  normalize->add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"json", "dot", "text", "circuit"}));
  add_common(normalize);

  int qudits = 0;
  std::string field_text;
  auto* cls = app.add_subcommand("classify", "Enumerate standard-form graphs up to LU signature");
  cls->add_option("--qudits,-N", qudits, "Number of qudits")->required();
  cls->add_option("--field", field_text, "'p n [poly]' or order d")->required();
  cls->add_option("--format", opt.format)->check(CLI::IsMember({"json", "text"}));
  add_common(cls);

  std::optional<std::string> graph_path;
  bool all_polys = false;
  auto* dual = app.add_subcommand("dual-check", "Fourier/reversal conjugation and dual-graph checks");
  dual->add_option("--field", field, "'p n [poly]' or order d");
  dual->add_option("--graph", graph_path, "Graph JSON or circuit file");
  dual->add_flag("--all-polys", all_polys, "Check every irreducible polynomial of the degree");
  add_common(dual);

  auto* verify_mes = app.add_subcommand("verify-mes", "Bipartition report for a state dump");
  verify_mes->add_option("file", path, "State dump")->required();
  verify_mes->add_option("--format", opt.format)->check(CLI::IsMember({"json", "text"}));
  add_common(verify_mes);

  long long mes_dim = 0;
  std::optional<std::string> output;
  auto* make_mes = app.add_subcommand("make-mes", "Build a 4-party MES of local dimension d");
  make_mes->add_option("d", mes_dim, "Local dimension")->required();
  make_mes->add_option("-o,--output", output, "Write the state dump here instead of stdout");
  add_common(make_mes);

  std::vector<std::string> rel_fields;
  std::optional<std::uint64_t> samples;
  auto* rel = app.add_subcommand("relations-test", "Dense check of every commutation rule");
  rel->add_option("--field", rel_fields, "Field(s); default d in {2,3,4,5,7,8,9}");
  rel->add_option("--samples", samples, "Random tuples per rule and layout for d > 5");
  rel->add_option("--format", opt.format)->check(CLI::IsMember({"json", "text"}));
  add_common(rel);

  auto* sim = app.add_subcommand("simulate", "Dense simulation of a circuit file");
  sim->add_option("file", path, "Circuit file")->required();
  sim->add_option("--field", field, "Field override");
  add_common(sim);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (*normalize) return cmd_normalize(opt, path, field, verify, out, err);
    if (*cls) return cmd_classify(opt, field_text, qudits, out);
    if (*dual) return cmd_dual_check(opt, field, graph_path, all_polys, out);
    if (*verify_mes) return cmd_verify_mes(opt, path, out);
    if (*make_mes) return cmd_make_mes(mes_dim, output, out, err);
    if (*rel) return cmd_relations(opt, rel_fields, samples, out);
    if (*sim) return cmd_simulate(path, field, out);
  } catch (const ResourceLimitError& e) {
    err << "qgraph: resource limit: " << e.what() << '\n';
    return kResourceLimit;
  } catch (const std::exception& e) {
    err << "qgraph: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace qgraph::cli
