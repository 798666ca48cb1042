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

#include "fixtures.hpp"
#include "random_corpus.hpp"
#include "tiger2/error.hpp"
#include "tiger2/stats.hpp"
#include "tiger2/tiger2_xml.hpp"
#include "tiger2/xml.hpp"

namespace tiger2 {
namespace {

using testing::wallpaper_corpus;
using testing::read_fixture;
using testing::replace_once;

bool has_code(const std::vector<Diagnostic>& ds, std::string_view code) {
  return std::any_of(ds.begin(), ds.end(),
                     [&](const Diagnostic& d) { return d.code == code; });
}

const char* kMinimal = R"(<?xml version="1.0"?>
<corpus xml:id="c" xmlns:tiger2="http://korpling.german.hu-berlin.de/tiger2/V2/">
  <head><annotation><feature name="word" domain="t"/></annotation></head>
  <body><s xml:id="s1"><graph root="t1"><terminals>
    <t xml:id="t1" word="a"/>
  </terminals></graph></s></body>
</corpus>)";

TEST(Tiger2Reader, WallpaperModel) {
  auto corpus = wallpaper_corpus();
  EXPECT_EQ(corpus.id, "wallpaper");
  ASSERT_EQ(corpus.meta.size(), 1u);
  EXPECT_EQ(corpus.meta[0].first, "name");
  EXPECT_EQ(corpus.registry.size(), 11u);

  const auto& g = corpus.segments.at(0).graphs.at(0);
  EXPECT_EQ(g.root, "s1_nt1");
  EXPECT_EQ(g.discontinuous, true);
  EXPECT_EQ(g.terminals[0].corresp, "tokens.xml#wordForm1");
  EXPECT_EQ(g.terminals[0].annotations, (Annotations{{"pos", "VB"}, {"lemma", "put"}}));
  EXPECT_EQ(g.nonterminals[2].elem_type, "compound");

  const auto& first_edge = g.edges.front();
  EXPECT_EQ(first_edge.source, "s1_t1");
  EXPECT_EQ(first_edge.target, NodeRef::local("s1_nt2"));
  EXPECT_EQ(first_edge.elem_type, "dep");
  EXPECT_EQ(*first_edge.annotation("label"), "OBJ");

  const auto* jj = &corpus.registry.declarations()[5].values[0];
  EXPECT_EQ(jj->name, "JJ");
  EXPECT_EQ(jj->description, "Adjective");
  EXPECT_EQ(jj->dcr, "http://www.isocat.org/datcat/DC-1230");
}

TEST(Tiger2Reader, RejectsMalformedXmlWithLine) {
  try {
    parse_tiger2("<corpus>\n<head>\n</corpus>");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3);
    EXPECT_EQ(std::string(e.what()).rfind("line 3: ", 0), 0u) << e.what();
  }
  EXPECT_THROW(parse_tiger2("<notcorpus/>"), ParseError);
  EXPECT_THROW(parse_tiger2(""), ParseError);
}

TEST(Tiger2Reader, LegacyIdsAreAccepted) {
  auto r = parse_tiger2(R"(<corpus id="c"><body><s id="s1"><graph root="t1">
      <terminals><t id="t1"/></terminals></graph></s></body></corpus>)");
  EXPECT_EQ(r.corpus.id, "c");
  EXPECT_EQ(r.corpus.segments[0].id, "s1");
  EXPECT_EQ(r.corpus.segments[0].graphs[0].terminals[0].id, "t1");
  EXPECT_FALSE(has_code(r.diagnostics, "W-LEGACYID"));

  auto both = parse_tiger2(replace_once(kMinimal, "xml:id=\"t1\"", "xml:id=\"t1\" id=\"x\""));
  EXPECT_TRUE(has_code(both.diagnostics, "W-LEGACYID"));
  EXPECT_EQ(both.corpus.segments[0].graphs[0].terminals[0].id, "t1");
}

TEST(Tiger2Reader, ReservedAttributesUseTheConfiguredNamespace) {
  std::string custom = replace_once(kMinimal, "http://korpling.german.hu-berlin.de/tiger2/V2/",
                                    "urn:example:t2");
  custom = replace_once(custom, "word=\"a\"", "word=\"a\" tiger2:corresp=\"w.xml#1\"");
  auto default_ns = parse_tiger2(custom);
  EXPECT_TRUE(has_code(default_ns.diagnostics, "W-UNKNOWNATTR"));
  EXPECT_FALSE(default_ns.corpus.segments[0].graphs[0].terminals[0].corresp);

  ParseOptions options;
  options.reserved_ns = "urn:example:t2";
  auto configured = parse_tiger2(custom, options);
  EXPECT_FALSE(has_code(configured.diagnostics, "W-UNKNOWNATTR"));
  EXPECT_EQ(configured.corpus.segments[0].graphs[0].terminals[0].corresp, "w.xml#1");
}

TEST(Tiger2Reader, BadDomainBecomesDiagnostic) {
  auto r = parse_tiger2(replace_once(kMinimal, "domain=\"t\"", "domain=\"T\""));
  EXPECT_TRUE(has_code(r.diagnostics, "E-BADDECL"));
  auto dup = parse_tiger2(replace_once(
      kMinimal, "<feature name=\"word\" domain=\"t\"/>",
      "<feature name=\"word\" domain=\"t\"/><feature name=\"word\" domain=\"t\"/>"));
  EXPECT_TRUE(has_code(dup.diagnostics, "E-DUPDECL"));
}

TEST(Tiger2Reader, SubcorporaAreRecursive) {
  auto text = replace_once(kMinimal, "</s></body>",
                           "</s><subcorpus xml:id=\"sub\"><s xml:id=\"s2\"><graph>"
                           "<terminals><t xml:id=\"t2\" word=\"b\"/></terminals>"
                           "</graph></s></subcorpus></body>");
  auto r = parse_tiger2(text);
  ASSERT_EQ(r.corpus.subcorpora.size(), 1u);
  EXPECT_EQ(r.corpus.subcorpora[0].id, "sub");
  EXPECT_EQ(stats(r.corpus).segments, 2u);
  EXPECT_TRUE(has_code(r.diagnostics, "W-NOROOT"));
}

TEST(Tiger2Writer, WallpaperRoundTrip) {
  auto corpus = wallpaper_corpus();
  auto text = serialize_tiger2(corpus);
  auto back = parse_tiger2(text);
  std::string why;
  EXPECT_TRUE(structurally_equal(corpus, back.corpus, &why)) << why;
  EXPECT_EQ(serialize_tiger2(back.corpus), text);
}

TEST(Tiger2Writer, EdgesAreNestedUnderTheirSource) {
  auto text = serialize_tiger2(wallpaper_corpus());
  auto doc = xml::parse(text);
  const auto* t1 = doc.child("body")->child("s")->child("graph")->child("terminals")->child("t");
  ASSERT_NE(t1, nullptr);
  ASSERT_EQ(t1->children.size(), 2u);
  EXPECT_EQ(t1->children[0].name, "edge");
  EXPECT_EQ(t1->children[0].attr("label"), "OBJ");
  EXPECT_EQ(t1->children[0].find(std::string(kDefaultReservedNs), "target")->value, "#s1_nt2");
}

TEST(Tiger2Writer, RefusesInvalidCorpusInStrictMode) {
  auto corpus = wallpaper_corpus();
  corpus.segments[0].graphs[0].edges[0].annotations["label"] = "xyz";
  try {
    serialize_tiger2(corpus);
    FAIL();
  } catch (const ExportRefused& e) {
    EXPECT_NE(std::string(e.what()).find("E-BADVAL"), std::string::npos) << e.what();
  }
  // lax mode tolerates undeclared types, not bad values
  SerializeOptions lax;
  lax.strict = false;
  EXPECT_THROW(serialize_tiger2(corpus, lax), ExportRefused);

  auto untyped = wallpaper_corpus();
  untyped.segments[0].graphs[0].terminals[3].elem_type = "morph";
  EXPECT_THROW(serialize_tiger2(untyped), ExportRefused);
  EXPECT_NO_THROW(serialize_tiger2(untyped, lax));
}

TEST(Tiger2Writer, EmptyCorpusSkeleton) {
  auto r = parse_tiger2(R"(<corpus xml:id="c"><head><annotation/></head><body/></corpus>)");
  EXPECT_TRUE(r.diagnostics.empty());
  auto doc = xml::parse(serialize_tiger2(r.corpus));
  ASSERT_EQ(doc.children.size(), 2u);
  EXPECT_EQ(doc.children[0].name, "head");
  ASSERT_EQ(doc.children[0].children.size(), 1u);
  EXPECT_EQ(doc.children[0].children[0].name, "annotation");
  EXPECT_EQ(doc.children[1].name, "body");
  EXPECT_TRUE(doc.children[1].children.empty());
}

TEST(Tiger2RoundTrip, PlainTypeAttributeCoexistsWithReservedType) {
  auto text = replace_once(read_fixture("wallpaper.xml"),
                           "<t xml:id=\"s1_t4\" tiger2:type=\"stem\"",
                           "<t xml:id=\"s1_t4\" tiger2:type=\"stem\" type=\"free\"");
  text = replace_once(text, "<feature type=\"stem\" domain=\"t\"/>",
                      "<feature type=\"stem\" domain=\"t\"/>"
                      "<feature name=\"type\" type=\"stem\" domain=\"t\"/>");
  auto r = parse_tiger2(text);
  EXPECT_FALSE(has_errors(r.diagnostics));
  const auto& t4 = r.corpus.segments[0].graphs[0].terminals[3];
  EXPECT_EQ(t4.elem_type, "stem");
  EXPECT_EQ(*t4.annotation("type"), "free");
  auto out = serialize_tiger2(r.corpus);
  EXPECT_NE(out.find("tiger2:corresp=\"tokens.xml#wordForm4\" type=\"free\""),
            std::string::npos)
      << out;
  EXPECT_TRUE(structurally_equal(r.corpus, parse_tiger2(out).corpus));
}

TEST(Tiger2Writer, LegacyWordCanBeOmitted) {
  auto corpus = parse_tiger2(kMinimal).corpus;
  SerializeOptions options;
  EXPECT_NE(serialize_tiger2(corpus, options).find("word=\"a\""), std::string::npos);
  options.emit_legacy_word = false;
  EXPECT_EQ(serialize_tiger2(corpus, options).find("word=\"a\""), std::string::npos);
}

TEST(Tiger2Writer, EscapesSpecialCharacters) {
  auto corpus = parse_tiger2(kMinimal).corpus;
  auto& t = corpus.segments[0].graphs[0].terminals[0];
  t.annotations["word"] = "a<&>\"'\t\n\r \xe4\xb8\xad";
  auto back = parse_tiger2(serialize_tiger2(corpus)).corpus;
  EXPECT_EQ(back.segments[0].graphs[0].terminals[0].word(), t.annotations["word"]);
}

TEST(Tiger2RoundTrip, RandomCorporaAreStable) {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    auto corpus = testing::random_corpus(seed);
    auto text = serialize_tiger2(corpus);
    auto back = parse_tiger2(text);
    std::string why;
    ASSERT_TRUE(structurally_equal(corpus, back.corpus, &why)) << seed << ": " << why;
    ASSERT_FALSE(has_errors(back.diagnostics)) << seed;
    ASSERT_EQ(serialize_tiger2(back.corpus), text) << seed;
  }
}

TEST(Tiger2RoundTrip, TerminalOrderIsPreserved) {
  for (std::uint64_t seed = 200; seed < 230; ++seed) {
    auto corpus = testing::random_corpus(seed);
    auto back = parse_tiger2(serialize_tiger2(corpus)).corpus;
    std::vector<std::string> a, b;
    for_each_segment(corpus, [&](const Segment& s) {
      for (const auto& g : s.graphs)
        for (const auto& t : g.terminals) a.push_back(t.id);
    });
    for_each_segment(back, [&](const Segment& s) {
      for (const auto& g : s.graphs)
        for (const auto& t : g.terminals) b.push_back(t.id);
    });
    ASSERT_EQ(a, b) << seed;
  }
}

TEST(Tiger2RoundTrip, CompactIndentParsesTheSame) {
  auto corpus = testing::random_corpus(99);
  SerializeOptions compact;
  compact.indent = 0;
  auto back = parse_tiger2(serialize_tiger2(corpus, compact)).corpus;
  EXPECT_TRUE(structurally_equal(corpus, back));
}

}  // namespace
}  // namespace tiger2
