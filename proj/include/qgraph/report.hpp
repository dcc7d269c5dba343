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

// JSON views of the analysis results. Key order is fixed, so identical
// inputs serialise to identical bytes.

#pragma once

#include <span>

#include <json.hpp>

#include "qgraph/classify.hpp"
#include "qgraph/duality.hpp"
#include "qgraph/entangle.hpp"
#include "qgraph/relations.hpp"
#include "qgraph/rewrite.hpp"

namespace qgraph {

using ordered_json = nlohmann::ordered_json;

ordered_json to_json(const CanonicalForm& form);
ordered_json to_json(const DualityReport& report);
ordered_json to_json(const BipartitionReport& report);
ordered_json to_json(const Classification& classification);
ordered_json to_json(std::span<const RelationResult> results);
ordered_json to_json(const EntropyProblemReport& report);

}  // namespace qgraph
