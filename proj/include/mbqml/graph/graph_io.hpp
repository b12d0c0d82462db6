// Copyright 2026 The mbqml Authors
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

#ifndef MBQML_GRAPH_GRAPH_IO_HPP_
#define MBQML_GRAPH_GRAPH_IO_HPP_

#include "json.hpp"
#include "mbqml/graph/flow.hpp"
#include "mbqml/graph/open_graph.hpp"

namespace mbqml::graph {

// {nodes, edges: [[u,v],...], inputs, outputs,
//  init: {"<node>": "plus" | "zero" | "T" | [re0, im0, re1, im1]}}
nlohmann::json to_json(const OpenGraph &g);
OpenGraph graph_from_json(const nlohmann::json &j);

nlohmann::json qubit_state_to_json(const QubitState &s);
QubitState qubit_state_from_json(const nlohmann::json &j);

// {f: [...], order: [...]}
nlohmann::json to_json(const Flow &fl);

}  // namespace mbqml::graph

#endif  // MBQML_GRAPH_GRAPH_IO_HPP_
