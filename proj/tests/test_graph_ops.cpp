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

#include <gtest/gtest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "random_corpus.hpp"
#include "tiger2/error.hpp"
#include "tiger2/graph_ops.hpp"

namespace tiger2 {
namespace {

using testing::wallpaper_corpus;
using testing::first_graph;

std::vector<std::string> ids(const std::vector<const Node*>& nodes) {
  std::vector<std::string> out;
  for (const auto* n : nodes) out.push_back(n->id);
  return out;
}

class Wallpaper : public ::testing::Test {
 protected:
  Corpus corpus = wallpaper_corpus();
  const Graph& graph = first_graph(corpus);
};

TEST_F(Wallpaper, EdgesByNodeAndType) {
  EXPECT_EQ(out_edges(graph, "s1_nt1").size(), 3u);
  EXPECT_EQ(out_edges(graph, "s1_nt3", TypeFilter{"dep"}).size(), 1u);
  EXPECT_EQ(in_edges(graph, "s1_t3").size(), 2u);
  EXPECT_EQ(in_edges(graph, "s1_t3", TypeFilter{"const"}).size(), 1u);
  EXPECT_TRUE(out_edges(graph, "s1_t2").empty());
  EXPECT_THROW(out_edges(graph, "nope"), LookupError);
  EXPECT_THROW(in_edges(graph, "nope"), LookupError);
}

TEST_F(Wallpaper, ChildrenFollowEdgeOrder) {
  EXPECT_EQ(ids(children(graph, "s1_nt1", TypeFilter{"const"})),
            (std::vector<std::string>{"s1_t1", "s1_t2", "s1_nt2"}));
  EXPECT_EQ(ids(children(graph, "s1_t1", TypeFilter{"dep"})),
            (std::vector<std::string>{"s1_nt2", "s1_t2"}));
}

TEST_F(Wallpaper, TerminalOrderAndYield) {
  EXPECT_EQ(ids(terminal_order(graph)),
            (std::vector<std::string>{"s1_t1", "s1_t2", "s1_t3", "s1_t4", "s1_t5"}));
  EXPECT_EQ(terminal_position(graph, "s1_t4"), 4u);
  EXPECT_FALSE(terminal_position(graph, "s1_nt1").has_value());
  EXPECT_EQ(yield_of(graph, "s1_nt2", TypeFilter{"const"}),
            (std::vector<std::size_t>{3, 4, 5}));
  EXPECT_EQ(yield_of(graph, "s1_t2", TypeFilter{"const"}),
            (std::vector<std::size_t>{2}));
  // the dep edge into the NP stops there: NP has no dep edges of its own
  EXPECT_EQ(yield_of(graph, "s1_t1", TypeFilter{"dep"}),
            (std::vector<std::size_t>{1, 2}));
  EXPECT_EQ(yield_of(graph, "s1_nt1", std::nullopt),
            (std::vector<std::size_t>{1, 2, 3, 4, 5}));
  EXPECT_THROW(yield_of(graph, "nope", {}), LookupError);
}

TEST_F(Wallpaper, ConstituencyLayerIsContinuousAndAcyclic) {
  EXPECT_FALSE(is_discontinuous(graph, TypeFilter{"const"}).discontinuous);
  EXPECT_TRUE(detect_cycles(graph).empty());
}

TEST_F(Wallpaper, ExtractLayerKeepsMatchingEdges) {
  auto dep = extract_layer(graph, std::nullopt, TypeFilter{"dep"});
  EXPECT_EQ(dep.edges.size(), 3u);
  EXPECT_EQ(dep.terminals.size(), 5u);
  EXPECT_EQ(dep.nonterminals.size(), 3u);
  EXPECT_EQ(dep.root, graph.root);

  auto compound_only = extract_layer(graph, TypeFilter{"compound"}, TypeFilter{"const"});
  EXPECT_EQ(compound_only.nonterminals.size(), 1u);
  EXPECT_EQ(compound_only.edges.size(), 2u);
  EXPECT_FALSE(compound_only.root.has_value());
}

TEST(Cycles, ReportsSelfLoopAndLongerCycle) {
  Graph g;
  for (std::string id : {"a", "b", "c"})
    g.nonterminals.push_back({id, NodeKind::nonterminal, {}, {}, {}});
  g.edges.push_back({"a", NodeRef::local("b"), {}, {}});
  g.edges.push_back({"b", NodeRef::local("c"), {}, {}});
  g.edges.push_back({"c", NodeRef::local("a"), std::string("coref"), {}});
  g.edges.push_back({"b", NodeRef::local("b"), {}, {}});
  auto cycles = detect_cycles(g);
  EXPECT_EQ(cycles.size(), 2u);
  EXPECT_TRUE(std::any_of(cycles.begin(), cycles.end(),
                          [](const auto& c) { return c.size() == 3; }));
  EXPECT_EQ(detect_cycles(g, TypeFilter::untyped_only()).size(), 1u);
}

TEST(Discontinuity, CrossingConstituentIsFlagged) {
  Graph g;
  for (std::string id : {"t1", "t2", "t3"})
    g.terminals.push_back({id, NodeKind::terminal, {}, {}, {}});
  g.nonterminals.push_back({"x", NodeKind::nonterminal, {}, {}, {}});
  g.edges.push_back({"x", NodeRef::local("t1"), std::string("const"), {}});
  g.edges.push_back({"x", NodeRef::local("t3"), std::string("const"), {}});
  auto d = is_discontinuous(g, TypeFilter{"const"});
  EXPECT_TRUE(d.discontinuous);
  EXPECT_EQ(d.offenders, std::vector<std::string>{"x"});
  EXPECT_FALSE(is_discontinuous(g, TypeFilter{"dep"}).discontinuous);
}

TEST(CyclesProperty, AgreesWithPathEnumeration) {
  testing::Random rnd(7);
  for (int i = 0; i < 300; ++i) {
    Graph g = testing::random_small_graph(rnd);
    bool expected = testing::has_cycle_by_path_enumeration(
        testing::to_matrix(g, std::nullopt));
    ASSERT_EQ(!detect_cycles(g).empty(), expected) << "case " << i;
  }
}

TEST(CyclesProperty, EveryReportedCycleIsClosedWalk) {
  testing::Random rnd(11);
  for (int i = 0; i < 300; ++i) {
    Graph g = testing::random_small_graph(rnd);
    auto m = testing::to_matrix(g, std::nullopt);
    auto index = [&](const std::string& id) {
      return std::find(m.ids.begin(), m.ids.end(), id) - m.ids.begin();
    };
    for (const auto& cycle : detect_cycles(g)) {
      ASSERT_FALSE(cycle.empty());
      for (std::size_t k = 0; k < cycle.size(); ++k) {
        auto from = index(cycle[k]);
        auto to = index(cycle[(k + 1) % cycle.size()]);
        ASSERT_TRUE(m.adj[from][to]) << "case " << i;
      }
    }
  }
}

TEST(DiscontinuityProperty, AgreesWithClosureOracle) {
  testing::Random rnd(13);
  const std::vector<std::optional<TypeFilter>> filters = {
      std::nullopt, TypeFilter{"const"}, TypeFilter{"dep"}};
  for (int i = 0; i < 300; ++i) {
    Graph g = testing::random_structure(rnd);
    for (const auto& f : filters) {
      auto expected = testing::discontinuous_by_closure(testing::to_matrix(g, f));
      auto got = is_discontinuous(g, f);
      ASSERT_EQ(got.offenders, expected) << "case " << i;
      ASSERT_EQ(got.discontinuous, !expected.empty());
    }
  }
}

TEST(ExtractLayerProperty, OnlySelectedTypesSurviveAndAllEndpointsExist) {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    Corpus c = testing::random_corpus(seed);
    for_each_segment(c, [&](const Segment& s) {
      for (const auto& g : s.graphs) {
        TypeFilter edges{"const"};
        Graph layer = extract_layer(g, std::nullopt, edges);
        EXPECT_EQ(layer.terminals, g.terminals);
        for (const auto& e : layer.edges) {
          EXPECT_EQ(e.elem_type, std::string("const"));
          EXPECT_NE(node_lookup(layer, e.source), nullptr);
          if (e.target.is_local()) {
            EXPECT_NE(node_lookup(layer, e.target.fragment), nullptr);
          }
        }
        auto expected = std::count_if(g.edges.begin(), g.edges.end(), [](const Edge& e) {
          return e.elem_type == std::string("const");
        });
        EXPECT_EQ(static_cast<long>(layer.edges.size()), expected);
      }
    });
  }
}

TEST(YieldProperty, PositionsAreTerminalsAndTerminalsYieldThemselves) {
  testing::Random rnd(17);
  for (int i = 0; i < 300; ++i) {
    Graph g = testing::random_structure(rnd);
    const std::size_t n = g.terminals.size();
    const std::vector<std::optional<TypeFilter>> filters = {std::nullopt, TypeFilter{"const"}};
    for (const auto& f : filters) {
      for (const auto& nt : g.nonterminals)
        for (auto p : yield_of(g, nt.id, f)) ASSERT_TRUE(p >= 1 && p <= n);
      for (std::size_t k = 0; k < n; ++k) {
        const auto& t = g.terminals[k];
        if (!out_edges(g, t.id, f).empty()) continue;
        ASSERT_EQ(yield_of(g, t.id, f), std::vector<std::size_t>{k + 1});
      }
    }
  }
}

TEST(ExtractLayerProperty, IdempotentAndNeverInvents) {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    Corpus c = testing::random_corpus(seed);
    testing::Random rnd(seed);
    for_each_segment(c, [&](const Segment& s) {
      for (const auto& g : s.graphs) {
        std::optional<TypeFilter> nodes;
        if (rnd.chance(0.5)) nodes = TypeFilter::untyped_only();
        TypeFilter edges{"const", "coref"};
        edges.untyped = rnd.chance(0.5);
        Graph once = extract_layer(g, nodes, edges);
        Graph twice = extract_layer(once, nodes, edges);
        std::string why;
        ASSERT_TRUE(structurally_equal(once, twice, &why)) << seed << ": " << why;
        for (const auto& nt : once.nonterminals) ASSERT_NE(node_lookup(g, nt.id), nullptr);
        for (const auto& e : once.edges)
          ASSERT_NE(std::find(g.edges.begin(), g.edges.end(), e), g.edges.end());
      }
    });
  }
}

}  // namespace
}  // namespace tiger2
