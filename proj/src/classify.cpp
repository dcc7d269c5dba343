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

#include "qgraph/classify.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace qgraph {

namespace {

bool has_product_qudit(const QuditState& state, double tol) {
  for (int q = 1; q <= state.num_qudits(); ++q) {
    const std::vector<int> one{q};
    if (rank(reduced_density(state, one), tol) == 1) return true;
  }
  return false;
}

}  // namespace

Classification classify(const Field& field, int num_qudits, double tol) {
  if (num_qudits < 2) throw std::invalid_argument("classification needs N >= 2");
  checked_dimension(field.order(), num_qudits);

  Classification out{field, num_qudits, 0, 0, {}, {}};
  std::map<std::vector<std::vector<long long>>, std::size_t> bucket_of;
  const std::uint32_t d = field.order();

  for (int k = 1; 2 * k <= num_qudits; ++k) {
    std::vector<int> s(k);
    std::iota(s.begin(), s.end(), 1);
    std::vector<std::pair<int, int>> slots;
    for (int i = 1; i <= k; ++i) {
      for (int j = k + 1; j <= num_qudits; ++j) slots.emplace_back(i, j);
    }
    // Odometer over all labellings; last slot varies fastest.
    std::vector<std::uint32_t> labels(slots.size(), 0);
    while (true) {
      GraphState g(field, num_qudits, s);
      for (std::size_t e = 0; e < slots.size(); ++e) {
        g.set_edge(slots[e].first, slots[e].second, Element{labels[e]});
      }
      ++out.graphs_enumerated;
      const StateVector state = g.simulate();
      if (!has_product_qudit(state.dense(), tol)) {
        ++out.graphs_kept;
        LuSignature sig = lu_signature(state.dense());
        const auto key = signature_key(sig);
        const auto [it, inserted] = bucket_of.try_emplace(key, out.classes.size());
        if (inserted) {
          out.classes.push_back(LuClass{g, k, 0, std::move(sig)});
        }
        ++out.classes[it->second].members;
      }
      std::size_t pos = slots.size();
      while (pos > 0 && ++labels[pos - 1] == d) labels[--pos] = 0;
      if (pos == 0) break;
    }
  }
  for (const auto& c : out.classes) out.types.push_back(c.type);
  std::sort(out.types.begin(), out.types.end());
  out.types.erase(std::unique(out.types.begin(), out.types.end()), out.types.end());
  return out;
}

}  // namespace qgraph
