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

#include "tiger2/graph_ops.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>
#include <unordered_set>

#include "tiger2/error.hpp"

namespace tiger2 {

namespace {

// Dense numbering of a graph's nodes: terminals first, then nonterminals,
// with outgoing adjacency restricted to a type filter.
class Index {
 public:
  Index(const Graph& graph, const std::optional<TypeFilter>& filter)
      : graph_(graph) {
    const std::size_t n = graph.node_count();
    nodes_.reserve(n);
    for (const auto& t : graph.terminals) nodes_.push_back(&t);
    for (const auto& nt : graph.nonterminals) nodes_.push_back(&nt);
    for (std::size_t i = 0; i < n; ++i) ids_.emplace(nodes_[i]->id, i);
    adjacency_.resize(n);
    for (const auto& e : graph.edges) {
      if (!matches(filter, e.elem_type) || !e.target.is_local()) continue;
      auto s = find(e.source);
      auto t = find(e.target.fragment);
      if (s && t) adjacency_[*s].push_back(*t);
    }
  }

  std::optional<std::size_t> find(std::string_view id) const {
    auto it = ids_.find(std::string(id));
    if (it == ids_.end()) return std::nullopt;
    return it->second;
  }

  std::size_t require(std::string_view id) const {
    auto i = find(id);
    if (!i) throw LookupError("no node \"" + std::string(id) + "\" in graph");
    return *i;
  }

  std::size_t size() const { return nodes_.size(); }
  const Node& node(std::size_t i) const { return *nodes_[i]; }
  bool is_terminal(std::size_t i) const { return i < graph_.terminals.size(); }
  const std::vector<std::size_t>& successors(std::size_t i) const {
    return adjacency_[i];
  }

  // Positions are 1-based; terminal i sits at i + 1.
  std::vector<std::size_t> yield(std::size_t start) const {
    std::vector<bool> seen(size(), false);
    std::vector<std::size_t> out;
    std::deque<std::size_t> queue{start};
    seen[start] = true;
    while (!queue.empty()) {
      auto u = queue.front();
      queue.pop_front();
      if (is_terminal(u)) out.push_back(u + 1);
      for (auto v : adjacency_[u]) {
        if (!seen[v]) {
          seen[v] = true;
          queue.push_back(v);
        }
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  const Graph& graph_;
  std::vector<const Node*> nodes_;
  std::unordered_map<std::string, std::size_t> ids_;
  std::vector<std::vector<std::size_t>> adjacency_;
};

bool node_exists(const Graph& graph, std::string_view id) {
  return node_lookup(graph, id) != nullptr;
}

}  // namespace

const Node* node_lookup(const Graph& graph, std::string_view id) {
  for (const auto& t : graph.terminals)
    if (t.id == id) return &t;
  for (const auto& nt : graph.nonterminals)
    if (nt.id == id) return &nt;
  return nullptr;
}

std::vector<const Edge*> out_edges(const Graph& graph, std::string_view node,
                                   const std::optional<TypeFilter>& filter) {
  if (!node_exists(graph, node))
    throw LookupError("no node \"" + std::string(node) + "\" in graph");
  std::vector<const Edge*> out;
  for (const auto& e : graph.edges)
    if (e.source == node && matches(filter, e.elem_type)) out.push_back(&e);
  return out;
}

std::vector<const Edge*> in_edges(const Graph& graph, std::string_view node,
                                  const std::optional<TypeFilter>& filter) {
  if (!node_exists(graph, node))
    throw LookupError("no node \"" + std::string(node) + "\" in graph");
  std::vector<const Edge*> out;
  for (const auto& e : graph.edges)
    if (e.target.is_local() && e.target.fragment == node &&
        matches(filter, e.elem_type))
      out.push_back(&e);
  return out;
}

std::vector<const Node*> children(const Graph& graph, std::string_view node,
                                  const std::optional<TypeFilter>& filter) {
  std::vector<const Node*> out;
  for (const auto* e : out_edges(graph, node, filter)) {
    if (!e->target.is_local()) continue;
    if (const auto* child = node_lookup(graph, e->target.fragment))
      out.push_back(child);
  }
  return out;
}

std::vector<const Node*> terminal_order(const Graph& graph) {
  std::vector<const Node*> out;
  out.reserve(graph.terminals.size());
  for (const auto& t : graph.terminals) out.push_back(&t);
  return out;
}

std::optional<std::size_t> terminal_position(const Graph& graph,
                                             std::string_view id) {
  for (std::size_t i = 0; i < graph.terminals.size(); ++i)
    if (graph.terminals[i].id == id) return i + 1;
  return std::nullopt;
}

std::vector<std::size_t> yield_of(const Graph& graph, std::string_view node,
                                  const std::optional<TypeFilter>& filter) {
  Index index(graph, filter);
  return index.yield(index.require(node));
}

std::vector<std::vector<std::string>> detect_cycles(
    const Graph& graph, const std::optional<TypeFilter>& filter) {
  Index index(graph, filter);
  const std::size_t n = index.size();
  enum class Color { white, gray, black };
  std::vector<Color> color(n, Color::white);
  // Position of each gray node on the current DFS path.
  std::vector<std::size_t> path_pos(n, 0);
  std::vector<std::vector<std::string>> cycles;

  struct Frame {
    std::size_t node;
    std::size_t next = 0;
  };
  std::vector<Frame> path;

  for (std::size_t start = 0; start < n; ++start) {
    if (color[start] != Color::white) continue;
    color[start] = Color::gray;
    path_pos[start] = 0;
    path.push_back({start});
    while (!path.empty()) {
      auto& frame = path.back();
      const auto& succ = index.successors(frame.node);
      if (frame.next == succ.size()) {
        color[frame.node] = Color::black;
        path.pop_back();
        continue;
      }
      auto v = succ[frame.next++];
      if (color[v] == Color::gray) {
        std::vector<std::string> cycle;
        for (std::size_t i = path_pos[v]; i < path.size(); ++i)
          cycle.push_back(index.node(path[i].node).id);
        cycles.push_back(std::move(cycle));
      } else if (color[v] == Color::white) {
        color[v] = Color::gray;
        path_pos[v] = path.size();
        path.push_back({v});
      }
    }
  }
  return cycles;
}

Discontinuity is_discontinuous(const Graph& graph,
                               const std::optional<TypeFilter>& filter) {
  Index index(graph, filter);
  Discontinuity result;
  for (std::size_t i = 0; i < index.size(); ++i) {
    auto positions = index.yield(i);
    if (positions.empty()) continue;
    if (positions.back() - positions.front() + 1 != positions.size())
      result.offenders.push_back(index.node(i).id);
  }
  result.discontinuous = !result.offenders.empty();
  return result;
}

Graph extract_layer(const Graph& graph,
                    const std::optional<TypeFilter>& node_types,
                    const TypeFilter& edge_types) {
  Graph out;
  out.discontinuous = graph.discontinuous;
  out.terminals = graph.terminals;
  for (const auto& nt : graph.nonterminals)
    if (matches(node_types, nt.elem_type)) out.nonterminals.push_back(nt);

  std::unordered_set<std::string> kept;
  for (const auto& t : out.terminals) kept.insert(t.id);
  for (const auto& nt : out.nonterminals) kept.insert(nt.id);
  auto survives = [&kept](const std::string& id) { return kept.contains(id); };
  for (const auto& e : graph.edges) {
    if (!edge_types.matches(e.elem_type) || !survives(e.source)) continue;
    if (e.target.is_local() && !survives(e.target.fragment)) continue;
    out.edges.push_back(e);
  }
  if (graph.root && survives(*graph.root)) out.root = graph.root;
  return out;
}

}  // namespace tiger2
