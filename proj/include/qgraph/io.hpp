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

// Text formats: circuit files, graph-state JSON/DOT, dense state dumps.
//
// Circuit file (one directive per line, '#' starts a comment):
//
//   field p n poly_index
//   qudits N
//   init c_1 ... c_N        c_i in {s, 0}
//   C m n e | A m e | D m e | H m | V m | W m n
//
// Element parameters are integer indices; a leading '-' denotes the
// additive inverse of that element.

#pragma once

#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "qgraph/circuit.hpp"
#include "qgraph/dense.hpp"

namespace qgraph {

/// Malformed input; `line()` is 1-based, 0 when not tied to a line.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message);
  int line() const { return line_; }

 private:
  int line_;
};

Circuit read_circuit(std::istream& in);
Circuit parse_circuit(const std::string& text);
void write_circuit(std::ostream& out, const Circuit& circuit);
std::string format_circuit(const Circuit& circuit);

nlohmann::ordered_json field_to_json(const Field& field);
Field field_from_json(const nlohmann::ordered_json& j);

/// {"field": {p, n, poly}, "S": [...], "O": [...], "edges": [{from, to, label}]}
/// with `poly` the polynomial index and edges ordered by (from, to).
nlohmann::ordered_json graph_to_json(const GraphState& graph);
GraphState graph_from_json(const nlohmann::ordered_json& j);

/// Two-row drawing: S vertices as boxes on top, O vertices as circles below.
std::string graph_to_dot(const GraphState& graph);

/// Debug dump of the nonzero amplitudes:
///
///   dim D
///   qudits N
///   <digits> <re> <im>
///
/// Digits are concatenated for D <= 10 and '.'-separated otherwise; rows
/// are sorted by basis index. `comments` are written as leading '#' lines.
void write_state(std::ostream& out, const QuditState& state,
                 const std::vector<std::string>& comments = {});
std::string format_state(const QuditState& state, const std::vector<std::string>& comments = {});
QuditState read_state(std::istream& in);
QuditState parse_state(const std::string& text);

}  // namespace qgraph
