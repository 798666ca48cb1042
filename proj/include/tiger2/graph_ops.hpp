// Copyright 2026 The tiger2 Authors.
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

#ifndef TIGER2_GRAPH_OPS_HPP_
#define TIGER2_GRAPH_OPS_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tiger2/model.hpp"

namespace tiger2 {

// Read-only queries over a single Graph. Functions taking a node id throw
// LookupError when it does not name a node of the graph. Only same-graph
// edge targets take part in traversal; external references are skipped.

const Node* node_lookup(const Graph& graph, std::string_view id);

std::vector<const Edge*> out_edges(const Graph& graph, std::string_view node,
                                   const std::optional<TypeFilter>& filter = {});
std::vector<const Edge*> in_edges(const Graph& graph, std::string_view node,
                                  const std::optional<TypeFilter>& filter = {});

// Targets of out_edges(node, filter) that resolve within the graph, in
// edge order.
std::vector<const Node*> children(const Graph& graph, std::string_view node,
                                  const std::optional<TypeFilter>& filter = {});

// Terminals in surface order. Position of terminals[i] is i + 1.
std::vector<const Node*> terminal_order(const Graph& graph);

// 1-based position of terminal `id`, or nullopt when it is not a terminal.
std::optional<std::size_t> terminal_position(const Graph& graph,
                                             std::string_view id);

// Sorted positions of the terminals reachable from `node` over edges
// selected by `filter`. A terminal always yields itself. Cycles are
// traversed once.
std::vector<std::size_t> yield_of(const Graph& graph, std::string_view node,
                                  const std::optional<TypeFilter>& filter);

// One cycle per back edge found by a depth-first search in document order.
// Each cycle lists node ids from the back-edge target to its source.
std::vector<std::vector<std::string>> detect_cycles(
    const Graph& graph, const std::optional<TypeFilter>& filter = {});

struct Discontinuity {
  bool discontinuous = false;
  std::vector<std::string> offenders;  // document order

  bool operator==(const Discontinuity&) const = default;
};

Discontinuity is_discontinuous(const Graph& graph,
                               const std::optional<TypeFilter>& filter);

// Keeps every terminal, the nonterminals selected by `node_types`, and the
// edges selected by `edge_types` whose endpoints survive. External targets
// survive whenever their source does. The root is dropped when its node is.
Graph extract_layer(const Graph& graph,
                    const std::optional<TypeFilter>& node_types,
                    const TypeFilter& edge_types);

}  // namespace tiger2

#endif  // TIGER2_GRAPH_OPS_HPP_
