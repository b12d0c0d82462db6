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

#ifndef MBQML_MUTA_NETWORK_IO_HPP_
#define MBQML_MUTA_NETWORK_IO_HPP_

#include <map>

#include "json.hpp"
#include "mbqml/muta/muta.hpp"

namespace mbqml::muta {

// Everything needed to rebuild a resource state and its measurement roles.
// Nodes listed in `init` that would be global inputs are treated as prepared
// nodes instead.
struct NetworkFile {
    NetworkSpec spec;
    // Nodes absent from the map take their default role.
    std::map<int, NodeRole> roles;
    std::map<int, graph::QubitState> init;
};

// The realized graph (init states applied) and a complete role map.
struct RealizedNetwork {
    Network network;
    RoleMap roles;
};

RealizedNetwork realize(const NetworkFile &file);

nlohmann::json to_json(const LayerSpec &spec);
LayerSpec layer_from_json(const nlohmann::json &j);
nlohmann::json to_json(const NodeRole &role);
NodeRole role_from_json(const nlohmann::json &j);
nlohmann::json to_json(const NetworkFile &file);
NetworkFile network_from_json(const nlohmann::json &j);

}  // namespace mbqml::muta

#endif  // MBQML_MUTA_NETWORK_IO_HPP_
