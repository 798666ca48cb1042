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

#include "tiger2/stats.hpp"

namespace tiger2 {

namespace {

void count(TypeCounts& counts, const std::optional<std::string>& elem_type) {
  ++counts[elem_type ? *elem_type : std::string(kUntyped)];
}

void merge(TypeCounts& into, const TypeCounts& from) {
  for (const auto& [type, n] : from) into[type] += n;
}

}  // namespace

std::size_t total(const TypeCounts& counts) {
  std::size_t sum = 0;
  for (const auto& [type, n] : counts) sum += n;
  return sum;
}

CorpusStats& CorpusStats::operator+=(const CorpusStats& other) {
  segments += other.segments;
  graphs += other.graphs;
  merge(terminals, other.terminals);
  merge(nonterminals, other.nonterminals);
  merge(edges, other.edges);
  return *this;
}

CorpusStats stats(const Graph& graph) {
  CorpusStats out;
  out.graphs = 1;
  for (const auto& t : graph.terminals) count(out.terminals, t.elem_type);
  for (const auto& nt : graph.nonterminals) count(out.nonterminals, nt.elem_type);
  for (const auto& e : graph.edges) count(out.edges, e.elem_type);
  return out;
}

CorpusStats stats(const Corpus& corpus) {
  CorpusStats out;
  for_each_segment(corpus, [&](const Segment& segment) {
    ++out.segments;
    for (const auto& graph : segment.graphs) out += stats(graph);
  });
  return out;
}

}  // namespace tiger2
