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

#ifndef TIGER2_MODEL_HPP_
#define TIGER2_MODEL_HPP_

#include <initializer_list>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tiger2/declarations.hpp"

namespace tiger2 {

// Bucket name used when reporting untyped elements.
inline constexpr std::string_view kUntyped = "untyped";

using Annotations = std::map<std::string, std::string>;

// Selects elements by elem_type. Untyped elements are their own class and
// only match when `untyped` is set.
struct TypeFilter {
  std::set<std::string> types;
  bool untyped = false;

  TypeFilter() = default;
  TypeFilter(std::initializer_list<std::string> labels) : types(labels) {}

  static TypeFilter untyped_only() {
    TypeFilter filter;
    filter.untyped = true;
    return filter;
  }

  bool matches(const std::optional<std::string>& elem_type) const {
    return elem_type ? types.contains(*elem_type) : untyped;
  }
  bool empty() const { return types.empty() && !untyped; }

  bool operator==(const TypeFilter&) const = default;
};

// An absent filter selects everything.
inline bool matches(const std::optional<TypeFilter>& filter,
                    const std::optional<std::string>& elem_type) {
  return !filter || filter->matches(elem_type);
}

// Edge target: a same-graph node id, or `document#fragment` pointing
// outside the current document.
struct NodeRef {
  std::string document;  // empty for same-graph references
  std::string fragment;

  static NodeRef local(std::string id) { return {{}, std::move(id)}; }
  // Parses "#id", "doc#id", or a bare id (taken as local).
  static NodeRef parse(std::string_view text);

  bool is_local() const { return document.empty(); }
  std::string to_string() const { return document + "#" + fragment; }

  bool operator==(const NodeRef&) const = default;
  auto operator<=>(const NodeRef&) const = default;
};

enum class NodeKind { terminal, nonterminal };

struct Node {
  std::string id;
  NodeKind kind = NodeKind::terminal;
  std::optional<std::string> elem_type;
  Annotations annotations;
  std::optional<std::string> corresp;  // terminals only

  bool is_terminal() const { return kind == NodeKind::terminal; }

  // Inline surface text. Carried as the ordinary annotation "word"; only
  // terminals have one.
  std::optional<std::string> word() const;

  const std::string* annotation(std::string_view name) const;

  bool operator==(const Node&) const = default;
};

struct Edge {
  std::string source;
  NodeRef target;
  std::optional<std::string> elem_type;
  Annotations annotations;

  const std::string* annotation(std::string_view name) const;

  bool operator==(const Edge&) const = default;
  auto operator<=>(const Edge&) const = default;
};

// Short human-readable label, e.g. `s1_t1 -[dep:OBJ]-> #s1_nt2`.
std::string describe(const Edge& edge);

struct Graph {
  std::optional<std::string> root;
  std::optional<bool> discontinuous;
  std::vector<Node> terminals;
  std::vector<Node> nonterminals;
  std::vector<Edge> edges;

  std::size_t node_count() const {
    return terminals.size() + nonterminals.size();
  }

  bool operator==(const Graph&) const = default;
};

struct Segment {
  std::string id;
  std::vector<Graph> graphs;

  bool operator==(const Segment&) const = default;
};

struct Corpus {
  std::string id;
  std::vector<std::pair<std::string, std::string>> meta;
  DeclarationRegistry registry;
  std::vector<Segment> segments;
  std::vector<Corpus> subcorpora;

  bool operator==(const Corpus&) const;
};

// Calls `fn(segment)` on every segment of the corpus tree: own segments
// first, then each subcorpus depth-first.
template <typename Fn>
void for_each_segment(const Corpus& corpus, Fn&& fn) {
  for (const auto& segment : corpus.segments) fn(segment);
  for (const auto& sub : corpus.subcorpora) for_each_segment(sub, fn);
}

// Equality up to edge order and declaration order. Terminal and
// nonterminal sequences, annotations, and everything else compare exactly.
// When `why` is given it receives a description of the first difference.
bool structurally_equal(const Corpus& a, const Corpus& b,
                        std::string* why = nullptr);
bool structurally_equal(const Graph& a, const Graph& b,
                        std::string* why = nullptr);

}  // namespace tiger2

#endif  // TIGER2_MODEL_HPP_
