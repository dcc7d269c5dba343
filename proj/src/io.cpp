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

#include "qgraph/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <optional>
#include <sstream>

namespace qgraph {

ParseError::ParseError(int line, const std::string& message)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message : message),
      line_(line) {}

namespace {

std::vector<std::string> tokens_of(const std::string& raw) {
  const std::string line = raw.substr(0, raw.find('#'));
  std::istringstream ss(line);
  std::vector<std::string> out;
  for (std::string t; ss >> t;) out.push_back(t);
  return out;
}

template <typename T>
T parse_number(const std::string& tok, int line, const char* what) {
  T value{};
  const auto* end = tok.data() + tok.size();
  const auto [ptr, ec] = std::from_chars(tok.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw ParseError(line, std::string("expected ") + what + ", got '" + tok + "'");
  }
  return value;
}

Element parse_element(const Field& field, const std::string& tok, int line) {
  const bool negate = !tok.empty() && tok[0] == '-';
  const auto idx = parse_number<std::uint32_t>(negate ? tok.substr(1) : tok, line, "element index");
  if (idx >= field.order()) {
    throw ParseError(line, "element index " + std::to_string(idx) + " outside field of order " +
                               std::to_string(field.order()));
  }
  const Element e{idx};
  return negate ? field.neg(e) : e;
}

void expect_arity(const std::vector<std::string>& tok, std::size_t n, int line) {
  if (tok.size() != n) {
    throw ParseError(line, "'" + tok[0] + "' takes " + std::to_string(n - 1) + " argument(s), got " +
                               std::to_string(tok.size() - 1));
  }
}

Gate parse_gate(const Field& field, int num_qudits, const std::vector<std::string>& tok,
                int line) {
  const std::string& op = tok[0];
  auto wire = [&](std::size_t i) { return parse_number<int>(tok[i], line, "qudit index"); };
  Gate g;
  if (op == "C") {
    expect_arity(tok, 4, line);
    g = Gate::C(wire(1), wire(2), parse_element(field, tok[3], line));
  } else if (op == "A" || op == "D") {
    expect_arity(tok, 3, line);
    const Element e = parse_element(field, tok[2], line);
    g = op == "A" ? Gate::A(wire(1), e) : Gate::D(wire(1), e);
  } else if (op == "H" || op == "V") {
    expect_arity(tok, 2, line);
    g = op == "H" ? Gate::H(wire(1)) : Gate::V(wire(1));
  } else if (op == "W") {
    expect_arity(tok, 3, line);
    g = Gate::W(wire(1), wire(2));
  } else {
    throw ParseError(line, "unknown directive '" + op + "'");
  }
  try {
    validate(g, field, num_qudits);
  } catch (const std::exception& e) {
    throw ParseError(line, e.what());
  }
  return g;
}

std::string fmt_double(double v) {
  if (v == 0.0) v = 0.0;  // drop negative zero
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

Circuit read_circuit(std::istream& in) {
  std::optional<Field> field;
  int num_qudits = 0;
  std::optional<std::vector<InitKind>> init;
  std::vector<Gate> gates;

  int line_no = 0;
  for (std::string raw; std::getline(in, raw);) {
    ++line_no;
    const auto tok = tokens_of(raw);
    if (tok.empty()) continue;
    const std::string& op = tok[0];
    if (!field) {
      if (op != "field") throw ParseError(line_no, "expected 'field p n poly_index'");
      expect_arity(tok, 4, line_no);
      try {
        field = Field::from_descriptor(parse_number<int>(tok[1], line_no, "prime"),
                                       parse_number<int>(tok[2], line_no, "degree"),
                                       parse_number<std::uint64_t>(tok[3], line_no, "poly index"));
      } catch (const ParseError&) {
        throw;
      } catch (const std::exception& e) {
        throw ParseError(line_no, e.what());
      }
    } else if (num_qudits == 0) {
      if (op != "qudits") throw ParseError(line_no, "expected 'qudits N'");
      expect_arity(tok, 2, line_no);
      num_qudits = parse_number<int>(tok[1], line_no, "qudit count");
      if (num_qudits < 1) throw ParseError(line_no, "qudit count must be positive");
    } else if (!init) {
      if (op != "init") throw ParseError(line_no, "expected 'init c_1 ... c_N'");
      if (tok.size() != static_cast<std::size_t>(num_qudits) + 1) {
        throw ParseError(line_no, "init needs " + std::to_string(num_qudits) + " entries");
      }
      init.emplace();
      for (std::size_t i = 1; i < tok.size(); ++i) {
        if (tok[i] == "s") {
          init->push_back(InitKind::Plus);
        } else if (tok[i] == "0") {
          init->push_back(InitKind::Zero);
        } else {
          throw ParseError(line_no, "init entries must be 's' or '0', got '" + tok[i] + "'");
        }
      }
    } else {
      gates.push_back(parse_gate(*field, num_qudits, tok, line_no));
    }
  }
  if (!init) throw ParseError(line_no, "incomplete header: need field, qudits and init lines");
  return Circuit(*field, std::move(*init), std::move(gates));
}

Circuit parse_circuit(const std::string& text) {
  std::istringstream in(text);
  return read_circuit(in);
}

void write_circuit(std::ostream& out, const Circuit& circuit) {
  const Field& f = circuit.field;
  out << "field " << f.p() << ' ' << f.n() << ' ' << f.poly_index() << '\n';
  out << "qudits " << circuit.num_qudits << '\n';
  out << "init";
  for (InitKind k : circuit.init) out << (k == InitKind::Plus ? " s" : " 0");
  out << '\n';
  for (const Gate& g : circuit.gates) out << to_string(g) << '\n';
}

std::string format_circuit(const Circuit& circuit) {
  std::ostringstream out;
  write_circuit(out, circuit);
  return out.str();
}

nlohmann::ordered_json field_to_json(const Field& field) {
  return {{"p", field.p()}, {"n", field.n()}, {"poly", field.poly_index()}};
}

Field field_from_json(const nlohmann::ordered_json& j) {
  return Field::from_descriptor(j.at("p").get<int>(), j.at("n").get<int>(),
                                j.at("poly").get<std::uint64_t>());
}

nlohmann::ordered_json graph_to_json(const GraphState& graph) {
  nlohmann::ordered_json edges = nlohmann::ordered_json::array();
  for (const auto& [ij, b] : graph.edges()) {
    edges.push_back({{"from", ij.first}, {"to", ij.second}, {"label", b.index}});
  }
  return {{"field", field_to_json(graph.field())},
          {"S", graph.S()},
          {"O", graph.O()},
          {"edges", std::move(edges)}};
}

GraphState graph_from_json(const nlohmann::ordered_json& j) {
  const Field field = field_from_json(j.at("field"));
  const auto s = j.at("S").get<std::vector<int>>();
  const auto o = j.at("O").get<std::vector<int>>();
  GraphState g(field, static_cast<int>(s.size() + o.size()), s);
  if (g.O() != o) throw std::invalid_argument("S and O do not partition 1..N");
  for (const auto& e : j.at("edges")) {
    g.set_edge(e.at("from").get<int>(), e.at("to").get<int>(),
               field.element(e.at("label").get<std::uint32_t>()));
  }
  return g;
}

std::string graph_to_dot(const GraphState& graph) {
  std::ostringstream out;
  out << "digraph G {\n";
  out << "  // field " << graph.field().descriptor() << "\n";
  out << "  rankdir=TB;\n";
  out << "  { rank=same;";
  for (int v : graph.S()) out << " " << v << " [shape=box];";
  out << " }\n";
  out << "  { rank=same;";
  for (int v : graph.O()) out << " " << v << " [shape=circle];";
  out << " }\n";
  for (const auto& [ij, b] : graph.edges()) {
    out << "  " << ij.first << " -> " << ij.second << " [label=\"" << b.index << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

void write_state(std::ostream& out, const QuditState& state,
                 const std::vector<std::string>& comments) {
  for (const auto& c : comments) out << "# " << c << '\n';
  const std::uint64_t d = state.local_dim();
  out << "dim " << d << '\n';
  out << "qudits " << state.num_qudits() << '\n';
  for (std::uint64_t i = 0; i < state.size(); ++i) {
    const Complex a = state[i];
    if (std::abs(a) < 1e-14) continue;
    const auto digits = state.digits(i);
    for (std::size_t q = 0; q < digits.size(); ++q) {
      if (d > 10 && q > 0) out << '.';
      out << digits[q];
    }
    out << ' ' << fmt_double(a.real()) << ' ' << fmt_double(a.imag()) << '\n';
  }
}

std::string format_state(const QuditState& state, const std::vector<std::string>& comments) {
  std::ostringstream out;
  write_state(out, state, comments);
  return out.str();
}

QuditState read_state(std::istream& in) {
  std::uint64_t dim = 0;
  int num_qudits = 0;
  std::optional<QuditState> state;
  std::vector<bool> seen;

  int line_no = 0;
  for (std::string raw; std::getline(in, raw);) {
    ++line_no;
    const auto tok = tokens_of(raw);
    if (tok.empty()) continue;
    if (dim == 0) {
      if (tok[0] != "dim" || tok.size() != 2) throw ParseError(line_no, "expected 'dim D'");
      dim = parse_number<std::uint64_t>(tok[1], line_no, "dimension");
      if (dim < 2) throw ParseError(line_no, "dimension must be at least 2");
      continue;
    }
    if (num_qudits == 0) {
      if (tok[0] != "qudits" || tok.size() != 2) throw ParseError(line_no, "expected 'qudits N'");
      num_qudits = parse_number<int>(tok[1], line_no, "qudit count");
      if (num_qudits < 1) throw ParseError(line_no, "qudit count must be positive");
      try {
        state.emplace(dim, num_qudits);
      } catch (const ResourceLimitError&) {
        throw;
      } catch (const std::exception& e) {
        throw ParseError(line_no, e.what());
      }
      seen.assign(state->size(), false);
      continue;
    }
    if (tok.size() != 3) throw ParseError(line_no, "expected '<digits> <re> <im>'");
    std::vector<std::uint32_t> digits;
    if (dim <= 10) {
      for (char c : tok[0]) {
        if (c < '0' || c > '9') throw ParseError(line_no, "bad digit string '" + tok[0] + "'");
        digits.push_back(static_cast<std::uint32_t>(c - '0'));
      }
    } else {
      std::istringstream parts(tok[0]);
      for (std::string part; std::getline(parts, part, '.');) {
        digits.push_back(parse_number<std::uint32_t>(part, line_no, "digit"));
      }
    }
    if (digits.size() != static_cast<std::size_t>(num_qudits)) {
      throw ParseError(line_no, "expected " + std::to_string(num_qudits) + " digits");
    }
    for (auto x : digits) {
      if (x >= dim) throw ParseError(line_no, "digit " + std::to_string(x) + " out of range");
    }
    double re = 0.0;
    double im = 0.0;
    try {
      re = std::stod(tok[1]);
      im = std::stod(tok[2]);
    } catch (const std::exception&) {
      throw ParseError(line_no, "bad amplitude");
    }
    const std::uint64_t idx = state->index_of(digits);
    if (seen[idx]) throw ParseError(line_no, "duplicate basis state");
    seen[idx] = true;
    state->amplitudes()[static_cast<Eigen::Index>(idx)] = Complex(re, im);
  }
  if (!state) throw ParseError(line_no, "incomplete header: need dim and qudits lines");
  return *state;
}

QuditState parse_state(const std::string& text) {
  std::istringstream in(text);
  return read_state(in);
}

}  // namespace qgraph
