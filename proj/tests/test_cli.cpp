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

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "fixtures.hpp"
#include "json.hpp"

namespace tiger2 {
namespace {

namespace fs = std::filesystem;
using testing::fixture_path;
using testing::read_fixture;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "tiger2");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    std::random_device rd;
    dir_ = fs::temp_directory_path() / ("tiger2_cli_" + std::to_string(rd()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& content) {
    auto path = dir_ / name;
    std::ofstream(path, std::ios::binary) << content;
    return path.string();
  }
  std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
  }

  fs::path dir_;
};

TEST_F(Cli, ValidateCleanDocumentExitsZero) {
  auto r = run({"validate", fixture_path("wallpaper.xml")});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_NE(r.err.find("warning W-DISC s1:graph[1]"), std::string::npos) << r.err;
  EXPECT_NE(r.err.find("0 error(s), 1 warning(s)"), std::string::npos) << r.err;
}

TEST_F(Cli, DiagnosticsNeverReachTheOutputStream) {
  EXPECT_TRUE(run({"validate", fixture_path("wallpaper.xml")}).out.empty());
  auto r = run({"convert", "--from", "tiger2", "--to", "tigerxml", fixture_path("wallpaper.xml")});
  EXPECT_EQ(r.out.find("dropped"), std::string::npos);
  EXPECT_EQ(r.out.rfind("<?xml", 0), 0u);
  EXPECT_TRUE(run({"convert", "--from", "tiger2", "--to", "conll",
                   fixture_path("wallpaper.xml")}).out.empty());
}

TEST_F(Cli, ValidateReportsErrorsWithExitOne) {
  auto path = write("bad.xml", testing::replace_once(read_fixture("wallpaper.xml"),
                                                     "label=\"PRT\"/>", "label=\"xyz\"/>"));
  auto r = run({"validate", path});
  EXPECT_EQ(r.code, cli::kErrors);
  EXPECT_NE(r.err.find("error E-BADVAL"), std::string::npos) << r.err;
}

TEST_F(Cli, LaxModeTurnsUndeclaredTypesIntoWarnings) {
  auto path = write("t.xml", testing::replace_once(read_fixture("wallpaper.xml"),
                                                   "<feature type=\"stem\" domain=\"t\"/>", ""));
  EXPECT_EQ(run({"validate", path}).code, cli::kErrors);
  EXPECT_EQ(run({"validate", "--strict", path}).code, cli::kErrors);
  auto lax = run({"validate", "--lax", path});
  EXPECT_EQ(lax.code, cli::kOk);
  EXPECT_NE(lax.err.find("warning E-UNDECLTYPE"), std::string::npos) << lax.err;
}

TEST_F(Cli, MalformedXmlIsFatal) {
  auto r = run({"validate", write("m.xml", "<corpus>")});
  EXPECT_EQ(r.code, cli::kFatal);
  EXPECT_NE(r.err.find("line 1"), std::string::npos) << r.err;
  EXPECT_EQ(run({"validate", (dir_ / "absent.xml").string()}).code, cli::kFatal);
}

TEST_F(Cli, UsageErrorsAreFatal) {
  EXPECT_EQ(run({}).code, cli::kFatal);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kFatal);
  EXPECT_EQ(run({"validate", "--strict", "--lax", fixture_path("wallpaper.xml")}).code,
            cli::kFatal);
  EXPECT_EQ(run({"--help"}).code, cli::kOk);
}

TEST_F(Cli, ConvertWritesOutputAndLoss) {
  auto target = (dir_ / "out.xml").string();
  auto r = run({"convert", "--from", "tiger2", "--to", "tigerxml",
                fixture_path("wallpaper.xml"), "-o", target});
  EXPECT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_TRUE(r.out.empty());
  EXPECT_NE(slurp(target).find("<corpus id=\"wallpaper\">"), std::string::npos);
  EXPECT_NE(r.err.find("converted tiger2 -> tigerxml"), std::string::npos) << r.err;
  EXPECT_NE(r.err.find("dropped s1_t1 -[dep:OBJ]-> #s1_nt2"), std::string::npos) << r.err;
}

TEST_F(Cli, ConvertToStdout) {
  auto r = run({"convert", "--from", "conll", "--to", "conll", fixture_path("sample.conll")});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_EQ(r.out, read_fixture("sample.conll"));
}

TEST_F(Cli, ConvertRefusalAndUnknownFormat) {
  const auto wallpaper = fixture_path("wallpaper.xml");
  auto refused = run({"convert", "--from", "tiger2", "--to", "conll", wallpaper});
  EXPECT_EQ(refused.code, cli::kErrors);
  EXPECT_NE(refused.err.find("not CoNLL-representable"), std::string::npos) << refused.err;
  auto unknown = run({"convert", "--from", "penn", "--to", "tiger2", wallpaper});
  EXPECT_EQ(unknown.code, cli::kFatal);
  EXPECT_NE(unknown.err.find("unknown format \"penn\""), std::string::npos);
}

TEST_F(Cli, StatsJson) {
  auto r = run({"stats", "--json", fixture_path("wallpaper.xml")});
  ASSERT_EQ(r.code, cli::kOk);
  auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["segments"], 1);
  EXPECT_EQ(doc["graphs"], 1);
  EXPECT_EQ(doc["terminals_by_type"]["stem"], 2);
  EXPECT_EQ(doc["terminals_by_type"]["untyped"], 3);
  EXPECT_EQ(doc["nonterminals_by_type"]["compound"], 1);
  EXPECT_EQ(doc["edges_by_type"]["const"], 7);
  EXPECT_EQ(doc["edges_by_type"]["dep"], 3);
}

TEST_F(Cli, StatsEmptyAndDoubled) {
  auto empty = write("e.xml", "<corpus xml:id=\"c\"><head><annotation/></head><body/></corpus>");
  auto r = run({"stats", "--json", empty});
  ASSERT_EQ(r.code, cli::kOk);
  auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["segments"], 0);
  EXPECT_EQ(doc["graphs"], 0);
  EXPECT_TRUE(doc["edges_by_type"].empty());

  auto text = read_fixture("wallpaper.xml");
  auto s = text.substr(text.find("<s xml:id=\"s1\">"));
  s = s.substr(0, s.find("</s>") + 4);
  auto second = s;
  for (auto pos = second.find("s1"); pos != std::string::npos; pos = second.find("s1", pos))
    second.replace(pos, 2, "s2");
  auto doubled = write("d.xml", testing::replace_once(text, "</body>", second + "</body>"));
  auto d = nlohmann::json::parse(run({"stats", "--json", doubled}).out);
  EXPECT_EQ(d["segments"], 2);
  EXPECT_EQ(d["edges_by_type"]["const"], 14);
  EXPECT_EQ(d["edges_by_type"]["dep"], 6);
  EXPECT_EQ(d["terminals_by_type"]["stem"], 4);
}

TEST_F(Cli, StatsText) {
  auto r = run({"stats", fixture_path("wallpaper.xml")});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_NE(r.out.find("  const 7"), std::string::npos) << r.out;
}

TEST_F(Cli, ExtractKeepsOneLayer) {
  auto target = (dir_ / "dep.xml").string();
  auto r = run({"extract", fixture_path("wallpaper.xml"), "--edge-type", "dep", "-o", target});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  auto layer = parse_tiger2(slurp(target)).corpus;
  const auto& g = layer.segments[0].graphs[0];
  EXPECT_EQ(g.edges.size(), 3u);
  EXPECT_FALSE(layer.registry.contains(std::nullopt, std::string("const"), Domain::edge));

  auto none = run({"extract", fixture_path("wallpaper.xml"), "--edge-type", "coref"});
  EXPECT_EQ(none.code, cli::kOk);
  EXPECT_NE(none.err.find("warning: edge type \"coref\" matches no edge"), std::string::npos);
}

TEST_F(Cli, ExtractAllTypesKeepsGraphContent) {
  auto r = run({"extract", fixture_path("wallpaper.xml"), "--edge-type", "const",
                "--edge-type", "dep"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  auto original = testing::wallpaper_corpus();
  auto extracted = parse_tiger2(r.out).corpus;
  std::string why;
  EXPECT_TRUE(structurally_equal(original.segments[0].graphs[0],
                                 extracted.segments[0].graphs[0], &why))
      << why;
}

TEST_F(Cli, ExtractSyntaxLayerDropsFields) {
  auto r = run({"extract", fixture_path("tueba_relcl_layers.xml"), "--edge-type", "const",
                "--node-type", "untyped"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  auto layer = parse_tiger2(r.out).corpus;
  for (const auto& nt : layer.segments[0].graphs[0].nonterminals)
    EXPECT_FALSE(nt.elem_type.has_value()) << nt.id;
}

TEST_F(Cli, ResolveCountsLinks) {
  auto ok = run({"resolve", fixture_path("wallpaper.xml"), "--tokens", fixture_path("tokens.xml")});
  EXPECT_EQ(ok.code, cli::kOk);
  EXPECT_EQ(ok.out, "resolved 5/5\n");

  auto corpus = write("wallpaper.xml", read_fixture("wallpaper.xml"));
  auto tokens = write("tokens.xml", read_fixture("tokens_missing5.xml"));
  auto missing = run({"resolve", corpus, "--tokens", tokens});
  EXPECT_EQ(missing.code, cli::kErrors);
  EXPECT_EQ(missing.out, "resolved 4/5\nunresolved s1_t5 tokens.xml#wordForm5\n");

  auto absent = run({"resolve", corpus, "--tokens", (dir_ / "nope.xml").string()});
  EXPECT_EQ(absent.code, cli::kFatal);
}

TEST_F(Cli, ConvertTigerXmlToTiger2) {
  auto target = (dir_ / "t2.xml").string();
  auto r = run({"convert", "--from", "tigerxml", "--to", "tiger2",
                fixture_path("tueba_relcl_tigerxml.xml"), "--output", target});
  EXPECT_EQ(r.code, cli::kOk) << r.err;
  auto parsed = parse_tiger2(slurp(target));
  EXPECT_FALSE(has_errors(parsed.diagnostics));
  EXPECT_EQ(parsed.corpus.segments[0].graphs[0].edges.size(), 25u);
}

}  // namespace
}  // namespace tiger2
