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

#include "tiger2/validate.hpp"

#include <map>
#include <set>
#include <tuple>
#include <unordered_map>

#include "tiger2/graph_ops.hpp"

namespace tiger2 {

namespace {

bool is_alpha(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }
bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_hex(char c) {
  return is_digit(c) || (c >= 'a' && c <= 'f') || (c >= 'A' && c <= 'F');
}

bool is_uri_char(char c) {
  if (static_cast<unsigned char>(c) >= 0x80) return true;  // IRI
  if (is_alpha(c) || is_digit(c)) return true;
  static constexpr std::string_view kAllowed = "-._~:/?#[]@!$&'()*+,;=";
  return kAllowed.find(c) != std::string_view::npos;
}

std::string quoted(std::string_view s) { return "\"" + std::string(s) + "\""; }

std::string type_phrase(Domain domain, const std::optional<std::string>& type) {
  std::string out = type ? "type " + quoted(*type) : std::string("untyped");
  out += " ";
  out += to_string(domain);
  return out;
}

// (domain, elem_type, annotation name); name absent for type usage.
using UsageKey =
    std::tuple<Domain, std::optional<std::string>, std::optional<std::string>>;

class Validator {
 public:
  Validator(const Corpus& root, const ValidationOptions& options)
      : root_(root), registry_(root.registry), options_(options) {}

  std::vector<Diagnostic> run() {
    check_head();
    note_id(root_.id, {{}, root_.id}, {});
    walk(root_);
    report_unused();
    sort_diagnostics(out_);
    return std::move(out_);
  }

 private:
  void emit(Severity severity, std::string_view code, Location location,
            std::string message, SortKey key) {
    out_.push_back({severity, std::string(code), std::move(location),
                    std::move(message), key});
  }

  void check_head() {
    const auto& decls = registry_.declarations();
    for (std::size_t i = 0; i < decls.size(); ++i) {
      const auto& d = decls[i];
      SortKey key{0, 0, i + 1};
      if (d.dcr && !is_valid_dcr_uri(*d.dcr))
        emit(Severity::error, codes::kBadUri, Location::head(),
             "declaration " + describe(d) + " has malformed dcr:datcat " +
                 quoted(*d.dcr),
             key);
      for (const auto& v : d.values)
        if (v.dcr && !is_valid_dcr_uri(*v.dcr))
          emit(Severity::error, codes::kBadUri, Location::head(),
               "value " + quoted(v.name) + " of " + describe(d) +
                   " has malformed dcr:datcat " + quoted(*v.dcr),
               key);
    }
  }

  void report_unused() {
    const auto& decls = registry_.declarations();
    for (std::size_t i = 0; i < decls.size(); ++i) {
      const auto& d = decls[i];
      if (used_.contains({d.domain, d.elem_type, d.name})) continue;
      emit(Severity::warning, codes::kUnusedDecl, Location::head(),
           "declaration " + describe(d) + " is not used by any element",
           {0, 0, decls.size() + i + 1});
    }
  }

  void note_id(const std::string& id, const Location& where, SortKey key) {
    if (id.empty()) return;
    if (!ids_.emplace(id, where).second)
      emit(Severity::error, codes::kDupId, where,
           "duplicate id " + quoted(id) + " (first used at " +
               ids_.at(id).to_string() + ")",
           key);
  }

  void walk(const Corpus& corpus) {
    for (const auto& segment : corpus.segments) check_segment(segment);
    for (const auto& sub : corpus.subcorpora) {
      note_id(sub.id, {{}, sub.id}, {segment_ordinal_ + 1, 0, 0});
      walk(sub);
    }
  }

  void check_segment(const Segment& segment) {
    const std::size_t s = ++segment_ordinal_;
    note_id(segment.id, {segment.id, {}}, {s, 0, 0});
    for (std::size_t g = 0; g < segment.graphs.size(); ++g)
      check_graph(segment, segment.graphs[g], s, g + 1);
  }

  void check_graph(const Segment& segment, const Graph& graph, std::size_t s,
                   std::size_t g) {
    const Location graph_loc{segment.id, "graph[" + std::to_string(g) + "]"};
    const SortKey graph_key{s, g, 0};

    if (!graph.root) {
      emit(Severity::warning, codes::kNoRoot, graph_loc, "graph has no root",
           graph_key);
    } else if (!node_lookup(graph, *graph.root)) {
      emit(Severity::error, codes::kBadRef, graph_loc,
           "root " + quoted(*graph.root) + " does not name a node of the graph",
           graph_key);
    }

    if (graph.discontinuous) {
      bool computed =
          is_discontinuous(graph, options_.constituency_types).discontinuous;
      if (computed != *graph.discontinuous)
        emit(Severity::warning, codes::kDisc, graph_loc,
             std::string("graph declares discontinuous=\"") +
                 (*graph.discontinuous ? "true" : "false") +
                 "\" but its constituency layer is " +
                 (computed ? "discontinuous" : "continuous"),
             graph_key);
    }

    std::unordered_map<std::string, std::vector<const Edge*>> by_source;
    std::set<std::string> node_ids;
    for (const auto& t : graph.terminals) node_ids.insert(t.id);
    for (const auto& nt : graph.nonterminals) node_ids.insert(nt.id);
    for (const auto& e : graph.edges) by_source[e.source].push_back(&e);

    std::size_t ordinal = 0;
    auto visit = [&](const Node& node) {
      check_node(segment, node, {s, g, ++ordinal});
      auto it = by_source.find(node.id);
      if (it == by_source.end()) return;
      std::size_t k = 0;
      for (const auto* e : it->second)
        check_edge(segment, *e, node_ids, ++k, {s, g, ++ordinal});
      by_source.erase(it);
    };
    for (const auto& t : graph.terminals) visit(t);
    for (const auto& nt : graph.nonterminals) visit(nt);

    // Edges whose source is not a node of this graph.
    for (const auto& e : graph.edges) {
      if (node_ids.contains(e.source)) continue;
      emit(Severity::error, codes::kBadRef, {segment.id, e.source + "/edge"},
           "edge source " + quoted(e.source) +
               " does not name a node of the graph",
           {s, g, ++ordinal});
    }
  }

  void check_type(Domain domain, const std::optional<std::string>& type,
                  const Location& where, SortKey key) {
    if (!type) return;
    used_.insert({domain, type, std::nullopt});
    if (registry_.declared_types(domain).contains(*type)) return;
    emit(options_.strict ? Severity::error : Severity::warning,
         codes::kUndeclType, where,
         std::string(to_string(domain)) + " type " + quoted(*type) +
             " is not declared",
         key);
  }

  void check_annotations(Domain domain, const std::optional<std::string>& type,
                         const Annotations& annotations, const Location& where,
                         SortKey key) {
    for (const auto& [name, value] : annotations) {
      used_.insert({domain, type, name});
      const auto* decl = find_applicable(registry_, domain, type, name);
      if (!decl) {
        emit(Severity::error, codes::kUndeclAnn, where,
             "annotation " + quoted(name) + " is not declared for " +
                 type_phrase(domain, type),
             key);
      } else if (!decl->allows(value)) {
        emit(Severity::error, codes::kBadVal, where,
             "value " + quoted(value) + " is not in the value set of " +
                 describe(*decl),
             key);
      }
    }
  }

  void check_node(const Segment& segment, const Node& node, SortKey key) {
    const Location where{segment.id, node.id};
    note_id(node.id, where, key);
    const Domain domain = node.is_terminal() ? Domain::t : Domain::nt;
    check_type(domain, node.elem_type, where, key);
    if (node.corresp && !is_valid_uri_reference(*node.corresp))
      emit(Severity::error, codes::kBadUri, where,
           "malformed corresp URI " + quoted(*node.corresp), key);
    check_annotations(domain, node.elem_type, node.annotations, where, key);
  }

  void check_edge(const Segment& segment, const Edge& edge,
                  const std::set<std::string>& node_ids, std::size_t k,
                  SortKey key) {
    const Location where{segment.id,
                         edge.source + "/edge[" + std::to_string(k) + "]"};
    if (edge.target.fragment.empty()) {
      emit(Severity::error, codes::kBadRef, where, "edge has no target", key);
    } else if (edge.target.is_local() &&
               !node_ids.contains(edge.target.fragment)) {
      emit(Severity::error, codes::kBadRef, where,
           "edge target " + quoted("#" + edge.target.fragment) +
               " does not name a node of the graph",
           key);
    }
    check_type(Domain::edge, edge.elem_type, where, key);
    check_annotations(Domain::edge, edge.elem_type, edge.annotations, where,
                      key);
  }

  const Corpus& root_;
  const DeclarationRegistry& registry_;
  const ValidationOptions& options_;
  std::vector<Diagnostic> out_;
  std::map<std::string, Location> ids_;
  std::set<UsageKey> used_;
  std::size_t segment_ordinal_ = 0;
};

}  // namespace

bool is_valid_uri_reference(std::string_view uri) {
  if (uri.empty()) return false;
  std::size_t hashes = 0;
  for (std::size_t i = 0; i < uri.size(); ++i) {
    char c = uri[i];
    if (c == '%') {
      if (i + 2 >= uri.size() || !is_hex(uri[i + 1]) || !is_hex(uri[i + 2]))
        return false;
      i += 2;
      continue;
    }
    if (!is_uri_char(c)) return false;
    if (c == '#' && ++hashes > 1) return false;
  }
  // A colon before any of "/?#" must terminate a valid scheme.
  auto delim = uri.find_first_of(":/?#");
  if (delim != std::string_view::npos && uri[delim] == ':') {
    if (delim == 0 || !is_alpha(uri[0])) return false;
    for (std::size_t i = 1; i < delim; ++i) {
      char c = uri[i];
      if (!is_alpha(c) && !is_digit(c) && c != '+' && c != '-' && c != '.')
        return false;
    }
  }
  return true;
}

bool is_valid_dcr_uri(std::string_view uri) {
  if (!is_valid_uri_reference(uri)) return false;
  auto lower_prefix = [&](std::string_view prefix) {
    if (uri.size() < prefix.size()) return false;
    for (std::size_t i = 0; i < prefix.size(); ++i) {
      char c = uri[i];
      if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
      if (c != prefix[i]) return false;
    }
    return true;
  };
  std::size_t rest;
  if (lower_prefix("http://"))
    rest = 7;
  else if (lower_prefix("https://"))
    rest = 8;
  else
    return false;
  auto end = uri.find_first_of("/?#", rest);
  auto authority = uri.substr(rest, end == std::string_view::npos
                                        ? std::string_view::npos
                                        : end - rest);
  return !authority.empty();
}

std::vector<Diagnostic> validate_corpus(const Corpus& corpus,
                                        const ValidationOptions& options) {
  return Validator(corpus, options).run();
}

}  // namespace tiger2
