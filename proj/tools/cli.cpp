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

#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "tiger2/convert.hpp"
#include "tiger2/error.hpp"
#include "tiger2/graph_ops.hpp"
#include "tiger2/standoff.hpp"
#include "tiger2/stats.hpp"
#include "tiger2/tiger2_xml.hpp"

namespace tiger2::cli {

namespace {

namespace fs = std::filesystem;

class IoError : public Error {
 public:
  using Error::Error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_output(const std::string& path, const std::string& bytes,
                  std::ostream& out) {
  if (path.empty() || path == "-") {
    out << bytes;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file || !(file << bytes)) throw IoError("cannot write " + path);
}

TypeFilter to_filter(const std::vector<std::string>& labels) {
  TypeFilter filter;
  for (const auto& label : labels) {
    if (label == kUntyped)
      filter.untyped = true;
    else
      filter.types.insert(label);
  }
  return filter;
}

struct Globals {
  std::string reserved_ns{kDefaultReservedNs};
  std::string dcr_ns{kDefaultDcrNs};

  ParseOptions parse_options(bool strict = true) const {
    ParseOptions options;
    options.strict = strict;
    options.reserved_ns = reserved_ns;
    options.dcr_ns = dcr_ns;
    return options;
  }
  SerializeOptions serialize_options() const {
    SerializeOptions options;
    options.reserved_ns = reserved_ns;
    options.dcr_ns = dcr_ns;
    return options;
  }
};

std::size_t print_diagnostics(const std::vector<Diagnostic>& diagnostics,
                              std::ostream& err) {
  for (const auto& d : diagnostics) err << render(d) << '\n';
  return count_errors(diagnostics);
}

int validate(const Globals& globals, const std::string& path, bool lax,
             std::ostream& err) {
  auto result = parse_tiger2(read_file(path), globals.parse_options(!lax));
  auto errors = print_diagnostics(result.diagnostics, err);
  err << path << ": " << errors << " error(s), "
      << result.diagnostics.size() - errors << " warning(s)\n";
  return errors ? kErrors : kOk;
}

int convert(const Globals& globals, const std::string& from,
            const std::string& to, const std::string& input,
            const std::string& output, std::ostream& out, std::ostream& err) {
  auto registry = MapperRegistry::with_builtins(globals.parse_options(),
                                                globals.serialize_options());
  if (!registry.has_importer(from) || !registry.has_exporter(to)) {
    err << "error: unknown format \"" << (registry.has_importer(from) ? to : from)
        << "\"\n";
    return kFatal;
  }
  ConversionResult result;
  try {
    result = registry.convert(from, read_file(input), to);
  } catch (const ExportRefused& e) {
    err << "error: " << e.what() << '\n';
    return kErrors;
  }
  write_output(output, result.bytes, out);

  const auto& report = result.report;
  auto errors = print_diagnostics(report.diagnostics, err);
  err << "converted " << report.route.first << " -> " << report.route.second
      << ": " << errors << " error(s), " << report.diagnostics.size() - errors
      << " warning(s)";
  if (report.loss) {
    err << ", " << report.loss->dropped_elements.size() << " dropped, "
        << report.loss->degraded.size() << " degraded";
  }
  err << '\n';
  if (report.loss) {
    for (const auto& [id, reason] : report.loss->dropped_elements)
      err << "dropped " << id << ": " << reason << '\n';
    for (const auto& [id, what] : report.loss->degraded)
      err << "degraded " << id << ": " << what << '\n';
  }
  return errors ? kErrors : kOk;
}

nlohmann::ordered_json to_json(const TypeCounts& counts) {
  nlohmann::ordered_json object = nlohmann::ordered_json::object();
  for (const auto& [type, n] : counts) object[type] = n;
  return object;
}

int show_stats(const Globals& globals, const std::string& path, bool json,
               std::ostream& out) {
  auto result = parse_tiger2(read_file(path), globals.parse_options(false));
  auto report = stats(result.corpus);
  if (json) {
    nlohmann::ordered_json doc;
    doc["segments"] = report.segments;
    doc["graphs"] = report.graphs;
    doc["terminals_by_type"] = to_json(report.terminals);
    doc["nonterminals_by_type"] = to_json(report.nonterminals);
    doc["edges_by_type"] = to_json(report.edges);
    out << doc.dump(2) << '\n';
    return kOk;
  }
  out << "segments      " << report.segments << '\n'
      << "graphs        " << report.graphs << '\n';
  auto section = [&out](std::string_view title, const TypeCounts& counts) {
    out << title << std::string(14 - title.size(), ' ') << total(counts) << '\n';
    for (const auto& [type, n] : counts) out << "  " << type << ' ' << n << '\n';
  };
  section("terminals", report.terminals);
  section("nonterminals", report.nonterminals);
  section("edges", report.edges);
  return kOk;
}

int extract(const Globals& globals, const std::string& path,
            const std::vector<std::string>& edge_types,
            const std::vector<std::string>& node_types,
            const std::string& output, std::ostream& out, std::ostream& err) {
  auto parsed = parse_tiger2(read_file(path), globals.parse_options());
  const TypeFilter edges = to_filter(edge_types);
  std::optional<TypeFilter> nodes;
  if (!node_types.empty()) nodes = to_filter(node_types);

  Corpus layer;
  layer.id = parsed.corpus.id;
  layer.meta = parsed.corpus.meta;
  for (const auto& d : parsed.corpus.registry.declarations()) {
    bool keep = d.domain == Domain::t ||
                (d.domain == Domain::nt && matches(nodes, d.elem_type)) ||
                (d.domain == Domain::edge && edges.matches(d.elem_type));
    if (keep) layer.registry.add(d);
  }

  std::set<std::string> seen_types;
  std::function<void(const Corpus&, Corpus&)> project =
      [&](const Corpus& from, Corpus& into) {
        for (const auto& segment : from.segments) {
          Segment s{segment.id, {}};
          for (const auto& graph : segment.graphs) {
            for (const auto& e : graph.edges)
              seen_types.insert(e.elem_type.value_or(std::string(kUntyped)));
            s.graphs.push_back(extract_layer(graph, nodes, edges));
          }
          into.segments.push_back(std::move(s));
        }
        for (const auto& sub : from.subcorpora) {
          Corpus projected;
          projected.id = sub.id;
          project(sub, projected);
          into.subcorpora.push_back(std::move(projected));
        }
      };
  project(parsed.corpus, layer);

  for (const auto& type : edge_types)
    if (!seen_types.contains(type))
      err << "warning: edge type \"" << type << "\" matches no edge in " << path
          << '\n';

  std::string document;
  try {
    document = serialize_tiger2(layer, globals.serialize_options());
  } catch (const ExportRefused& e) {
    err << "error: " << e.what() << '\n';
    return kErrors;
  }
  write_output(output, document, out);
  return kOk;
}

int resolve(const Globals& globals, const std::string& path,
            const std::vector<std::string>& token_paths, std::ostream& out) {
  auto parsed = parse_tiger2(read_file(path), globals.parse_options(false));
  const fs::path base = fs::absolute(fs::path(path)).parent_path();

  std::map<fs::path, TokenTable> loaded;
  for (const auto& token_path : token_paths) {
    auto key = fs::weakly_canonical(fs::absolute(token_path));
    loaded[key] = load_token_document(read_file(token_path), token_path);
  }

  // Corresp document parts are relative to the corpus document.
  TokenTables tables;
  for_each_segment(parsed.corpus, [&](const Segment& segment) {
    for (const auto& graph : segment.graphs)
      for (const auto& t : graph.terminals) {
        if (!t.corresp) continue;
        auto document = NodeRef::parse(*t.corresp).document;
        if (document.empty() || tables.contains(document)) continue;
        auto key = fs::weakly_canonical(base / document);
        if (auto it = loaded.find(key); it != loaded.end())
          tables.emplace(document, it->second);
      }
  });

  auto report = resolve_corresp(parsed.corpus, tables);
  out << "resolved " << report.resolved << "/" << report.total() << '\n';
  for (const auto& u : report.unresolved)
    out << "unresolved " << u.terminal << ' ' << u.uri << '\n';
  for (const auto& m : report.mismatches)
    out << "mismatch " << m.terminal << " inline=\"" << m.inline_word
        << "\" external=\"" << m.external_form << "\"\n";
  return report.unresolved.empty() ? kOk : kErrors;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Validate, convert, and inspect <tiger2/> syntactic corpora.",
               "tiger2"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals globals;
  app.add_option("--reserved-ns", globals.reserved_ns,
                 "Namespace URI of the reserved tiger2 attributes");
  app.add_option("--dcr-ns", globals.dcr_ns,
                 "Namespace URI of dcr:datcat references");

  std::string input;
  std::string output;

  auto* validate_cmd = app.add_subcommand("validate", "Check a tiger2 document");
  bool strict = false;
  bool lax = false;
  validate_cmd->add_option("path", input, "tiger2 document")->required();
  auto* strict_flag = validate_cmd->add_flag(
      "--strict", strict, "Undeclared element types are errors (default)");
  validate_cmd->add_flag("--lax", lax, "Report undeclared element types as warnings")
      ->excludes(strict_flag);

  auto* convert_cmd = app.add_subcommand("convert", "Convert between formats");
  std::string from;
  std::string to;
  convert_cmd->add_option("--from", from, "Input format (tiger2, tigerxml, conll)")
      ->required();
  convert_cmd->add_option("--to", to, "Output format (tiger2, tigerxml, conll)")
      ->required();
  convert_cmd->add_option("input", input, "Input file")->required();
  convert_cmd->add_option("-o,--output", output, "Output file (default stdout)");

  auto* stats_cmd = app.add_subcommand("stats", "Count segments, nodes, and edges");
  bool json = false;
  stats_cmd->add_option("path", input, "tiger2 document")->required();
  stats_cmd->add_flag("--json", json, "Machine-readable output");

  auto* extract_cmd =
      app.add_subcommand("extract", "Keep only selected edge and node types");
  std::vector<std::string> edge_types;
  std::vector<std::string> node_types;
  extract_cmd->add_option("path", input, "tiger2 document")->required();
  extract_cmd->add_option("--edge-type", edge_types, "Edge type to keep (repeatable)")
      ->required()
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  extract_cmd->add_option("--node-type", node_types,
                          "Nonterminal type to keep (repeatable; default all)")
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  extract_cmd->add_option("-o,--output", output, "Output file (default stdout)");

  auto* resolve_cmd =
      app.add_subcommand("resolve", "Check terminal corresp links against token files");
  std::vector<std::string> tokens;
  resolve_cmd->add_option("path", input, "tiger2 document")->required();
  resolve_cmd->add_option("--tokens", tokens, "Token document (repeatable)")
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kFatal;
  }

  try {
    if (*validate_cmd) return validate(globals, input, lax, err);
    if (*convert_cmd) return convert(globals, from, to, input, output, out, err);
    if (*stats_cmd) return show_stats(globals, input, json, out);
    if (*extract_cmd)
      return extract(globals, input, edge_types, node_types, output, out, err);
    if (*resolve_cmd) return resolve(globals, input, tokens, out);
  } catch (const RegistryError& e) {
    err << "error: " << e.what() << '\n';
    return kFatal;
  } catch (const Error& e) {
    err << "fatal: " << e.what() << '\n';
    return kFatal;
  } catch (const std::exception& e) {
    err << "fatal: " << e.what() << '\n';
    return kFatal;
  }
  return kFatal;
}

}  // namespace tiger2::cli
