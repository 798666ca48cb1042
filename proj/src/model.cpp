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

#include "tiger2/model.hpp"

#include <algorithm>
#include <sstream>

namespace tiger2 {

namespace {

const std::string* find_annotation(const Annotations& annotations,
                                   std::string_view name) {
  auto it = annotations.find(std::string(name));
  return it == annotations.end() ? nullptr : &it->second;
}

std::string show(const std::optional<std::string>& value) {
  return value ? "\"" + *value + "\"" : "(absent)";
}

bool fail(std::string* why, const std::string& message) {
  if (why) *why = message;
  return false;
}

bool equal_nodes(const std::vector<Node>& a, const std::vector<Node>& b,
                 const char* what, std::string* why) {
  if (a.size() != b.size())
    return fail(why, std::string(what) + " count " + std::to_string(a.size()) +
                         " vs " + std::to_string(b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].id != b[i].id)
      return fail(why, std::string(what) + " #" + std::to_string(i + 1) +
                           ": id " + a[i].id + " vs " + b[i].id);
    if (!(a[i] == b[i]))
      return fail(why, "node " + a[i].id + " differs");
  }
  return true;
}

}  // namespace

NodeRef NodeRef::parse(std::string_view text) {
  auto hash = text.find('#');
  if (hash == std::string_view::npos) return local(std::string(text));
  return {std::string(text.substr(0, hash)),
          std::string(text.substr(hash + 1))};
}

std::optional<std::string> Node::word() const {
  if (!is_terminal()) return std::nullopt;
  if (const auto* w = annotation("word")) return *w;
  return std::nullopt;
}

const std::string* Node::annotation(std::string_view name) const {
  return find_annotation(annotations, name);
}

const std::string* Edge::annotation(std::string_view name) const {
  return find_annotation(annotations, name);
}

std::string describe(const Edge& edge) {
  std::ostringstream out;
  out << edge.source << " -[";
  out << (edge.elem_type ? *edge.elem_type : std::string(kUntyped));
  if (const auto* label = edge.annotation("label")) out << ':' << *label;
  out << "]-> " << edge.target.to_string();
  return out.str();
}

bool Corpus::operator==(const Corpus& other) const {
  return id == other.id && meta == other.meta &&
         registry.declarations() == other.registry.declarations() &&
         segments == other.segments && subcorpora == other.subcorpora;
}

bool structurally_equal(const Graph& a, const Graph& b, std::string* why) {
  if (a.root != b.root)
    return fail(why, "root " + show(a.root) + " vs " + show(b.root));
  if (a.discontinuous != b.discontinuous)
    return fail(why, "discontinuous flag differs");
  if (!equal_nodes(a.terminals, b.terminals, "terminal", why)) return false;
  if (!equal_nodes(a.nonterminals, b.nonterminals, "nonterminal", why))
    return false;
  auto ea = a.edges;
  auto eb = b.edges;
  std::sort(ea.begin(), ea.end());
  std::sort(eb.begin(), eb.end());
  if (ea.size() != eb.size())
    return fail(why, "edge count " + std::to_string(ea.size()) + " vs " +
                         std::to_string(eb.size()));
  for (std::size_t i = 0; i < ea.size(); ++i)
    if (!(ea[i] == eb[i]))
      return fail(why, "edge " + describe(ea[i]) + " vs " + describe(eb[i]));
  return true;
}

bool structurally_equal(const Corpus& a, const Corpus& b, std::string* why) {
  if (a.id != b.id) return fail(why, "corpus id " + a.id + " vs " + b.id);
  if (a.meta != b.meta) return fail(why, "meta of corpus " + a.id + " differs");

  auto da = a.registry.declarations();
  auto db = b.registry.declarations();
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) {
    for (const auto& d : da)
      if (!std::binary_search(db.begin(), db.end(), d))
        return fail(why, "declaration " + describe(d) + " missing on the right");
    for (const auto& d : db)
      if (!std::binary_search(da.begin(), da.end(), d))
        return fail(why, "declaration " + describe(d) + " missing on the left");
    return fail(why, "declaration multisets differ");
  }

  if (a.segments.size() != b.segments.size())
    return fail(why, "segment count " + std::to_string(a.segments.size()) +
                         " vs " + std::to_string(b.segments.size()));
  for (std::size_t s = 0; s < a.segments.size(); ++s) {
    const auto& sa = a.segments[s];
    const auto& sb = b.segments[s];
    if (sa.id != sb.id) return fail(why, "segment id " + sa.id + " vs " + sb.id);
    if (sa.graphs.size() != sb.graphs.size())
      return fail(why, "graph count of segment " + sa.id);
    for (std::size_t g = 0; g < sa.graphs.size(); ++g) {
      std::string detail;
      if (!structurally_equal(sa.graphs[g], sb.graphs[g], &detail))
        return fail(why, "segment " + sa.id + " graph " +
                             std::to_string(g + 1) + ": " + detail);
    }
  }

  if (a.subcorpora.size() != b.subcorpora.size())
    return fail(why, "subcorpus count of " + a.id);
  for (std::size_t i = 0; i < a.subcorpora.size(); ++i)
    if (!structurally_equal(a.subcorpora[i], b.subcorpora[i], why)) return false;
  return true;
}

}  // namespace tiger2
