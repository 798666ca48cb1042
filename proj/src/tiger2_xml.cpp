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

#include "tiger2/tiger2_xml.hpp"

#include <unordered_map>

#include "tiger2/error.hpp"
#include "tiger2/validate.hpp"
#include "tiger2/xml.hpp"

namespace tiger2 {

namespace {

std::string quoted(std::string_view s) { return "\"" + std::string(s) + "\""; }

class Reader {
 public:
  explicit Reader(const ParseOptions& options) : options_(options) {}

  ParseResult read(std::string_view document) {
    xml::Element root = xml::parse(document);
    if (root.name != "corpus")
      throw ParseError("root element is <" + root.name + ">, expected <corpus>",
                       root.line);
    ParseResult result;
    result.corpus.id = element_id(root, {{}, root.name}, {});
    if (const auto* head = root.child("head")) read_head(*head, result.corpus);
    if (const auto* body = root.child("body")) read_body(*body, result.corpus);

    ValidationOptions validation;
    validation.strict = options_.strict;
    result.diagnostics = std::move(diagnostics_);
    auto checked = validate_corpus(result.corpus, validation);
    result.diagnostics.insert(result.diagnostics.end(),
                              std::make_move_iterator(checked.begin()),
                              std::make_move_iterator(checked.end()));
    sort_diagnostics(result.diagnostics);
    return result;
  }

 private:
  void warn(std::string_view code, Location where, std::string message,
            SortKey key) {
    diagnostics_.push_back({Severity::warning, std::string(code),
                            std::move(where), std::move(message), key});
  }

  void unknown_attribute(const xml::Attribute& a, std::string_view element,
                         const Location& where, SortKey key) {
    std::string name = a.prefix.empty() ? a.name : a.prefix + ":" + a.name;
    warn(codes::kUnknownAttr, where,
         "ignoring attribute " + name + " on <" + std::string(element) + ">",
         key);
  }

  // xml:id, falling back to the legacy @id.
  std::string element_id(const xml::Element& e, const Location& where,
                         SortKey key) {
    const auto* xml_id = e.find(xml::kXmlNamespace, "id");
    const auto* legacy = e.find({}, "id");
    if (xml_id && legacy)
      warn(codes::kLegacyId, where,
           "both xml:id and legacy id on <" + e.name + ">; using xml:id " +
               quoted(xml_id->value),
           key);
    if (xml_id) return xml_id->value;
    if (legacy) return legacy->value;
    return {};
  }

  bool is_reserved(const xml::Attribute& a) const {
    return a.ns == options_.reserved_ns;
  }

  void read_head(const xml::Element& head, Corpus& corpus) {
    if (const auto* meta = head.child("meta"))
      for (const auto& entry : meta->children)
        corpus.meta.emplace_back(entry.name, entry.text);

    const auto* annotation = head.child("annotation");
    if (!annotation) return;
    std::size_t index = 0;
    for (const auto& feature : annotation->children) {
      if (feature.name != "feature") continue;
      const SortKey key{0, 0, ++index};
      const auto domain_text = feature.attr("domain");
      auto domain = domain_text ? parse_domain(*domain_text) : std::nullopt;
      if (!domain) {
        diagnostics_.push_back(
            {Severity::error, std::string(codes::kBadDecl), Location::head(),
             "feature on line " + std::to_string(feature.line) +
                 " has missing or invalid domain " +
                 quoted(domain_text.value_or("")),
             key});
        continue;
      }
      FeatureDecl decl;
      decl.domain = *domain;
      decl.name = feature.attr("name");
      decl.elem_type = feature.attr("type");
      if (!decl.elem_type)
        if (const auto* t = feature.find(options_.reserved_ns, "type"))
          decl.elem_type = t->value;
      if (const auto* dcr = feature.find(options_.dcr_ns, "datcat"))
        decl.dcr = dcr->value;
      for (const auto& value : feature.children) {
        if (value.name != "value") continue;
        ValueDecl v;
        v.name = value.attr("name").value_or("");
        v.description = value.text;
        if (const auto* dcr = value.find(options_.dcr_ns, "datcat"))
          v.dcr = dcr->value;
        decl.values.push_back(std::move(v));
      }
      try {
        corpus.registry.add(std::move(decl));
      } catch (const DeclarationError& e) {
        diagnostics_.push_back({Severity::error, e.code(), Location::head(),
                                std::string(e.what()) + " (line " +
                                    std::to_string(feature.line) + ")",
                                key});
      }
    }
  }

  void read_body(const xml::Element& body, Corpus& corpus) {
    // Segments precede subcorpora in the model; read them in that order so
    // diagnostic keys follow validation order.
    for (const auto& child : body.children)
      if (child.name == "s") corpus.segments.push_back(read_segment(child));
    for (const auto& child : body.children) {
      if (child.name != "subcorpus") continue;
      Corpus sub;
      sub.id = element_id(child, {{}, "subcorpus"}, {segment_ordinal_ + 1, 0, 0});
      if (sub.id.empty()) sub.id = child.attr("name").value_or("");
      read_body(child, sub);
      corpus.subcorpora.push_back(std::move(sub));
    }
  }

  Segment read_segment(const xml::Element& s) {
    const std::size_t ordinal = ++segment_ordinal_;
    Segment segment;
    segment.id = element_id(s, {{}, "s"}, {ordinal, 0, 0});
    std::size_t g = 0;
    for (const auto& child : s.children)
      if (child.name == "graph")
        segment.graphs.push_back(read_graph(child, segment.id, {ordinal, ++g, 0}));
    return segment;
  }

  Graph read_graph(const xml::Element& e, const std::string& segment_id,
                   SortKey key) {
    Graph graph;
    const Location where{segment_id, "graph[" + std::to_string(key.graph) + "]"};
    graph.root = e.attr("root");
    if (auto flag = e.attr("discontinuous")) {
      if (*flag == "true" || *flag == "1")
        graph.discontinuous = true;
      else if (*flag == "false" || *flag == "0")
        graph.discontinuous = false;
      else
        warn(codes::kUnknownAttr, where,
             "ignoring discontinuous=" + quoted(*flag), key);
    }
    std::size_t ordinal = 0;
    auto read_nodes = [&](std::string_view container, std::string_view tag,
                          NodeKind kind, std::vector<Node>& into) {
      for (const auto& c : e.children) {
        if (c.name != container) continue;
        for (const auto& n : c.children)
          if (n.name == tag)
            read_node(n, kind, segment_id, key, ordinal, into, graph.edges);
      }
    };
    read_nodes("terminals", "t", NodeKind::terminal, graph.terminals);
    read_nodes("nonterminals", "nt", NodeKind::nonterminal, graph.nonterminals);
    return graph;
  }

  void read_node(const xml::Element& e, NodeKind kind,
                 const std::string& segment_id, SortKey graph_key,
                 std::size_t& ordinal, std::vector<Node>& into,
                 std::vector<Edge>& edges) {
    Node node;
    node.kind = kind;
    SortKey key = graph_key;
    key.element = ++ordinal;
    Location where{segment_id, e.attr("id").value_or("")};
    node.id = element_id(e, where, key);
    where.element = node.id;

    for (const auto& a : e.attributes) {
      if (a.ns == xml::kXmlNamespace && a.name == "id") continue;
      if (a.ns.empty()) {
        if (a.name != "id") node.annotations[a.name] = a.value;
        continue;
      }
      if (is_reserved(a)) {
        if (a.name == "type") {
          node.elem_type = a.value;
          continue;
        }
        if (a.name == "corresp" && kind == NodeKind::terminal) {
          node.corresp = a.value;
          continue;
        }
      }
      unknown_attribute(a, e.name, where, key);
    }

    std::size_t k = 0;
    for (const auto& child : e.children) {
      if (child.name != "edge") continue;
      SortKey edge_key = graph_key;
      edge_key.element = ++ordinal;
      const Location edge_where{segment_id,
                                node.id + "/edge[" + std::to_string(++k) + "]"};
      Edge edge;
      edge.source = node.id;
      for (const auto& a : child.attributes) {
        if (a.ns.empty()) {
          edge.annotations[a.name] = a.value;
          continue;
        }
        if (is_reserved(a) && a.name == "type") {
          edge.elem_type = a.value;
          continue;
        }
        if (is_reserved(a) && a.name == "target") {
          edge.target = NodeRef::parse(a.value);
          continue;
        }
        unknown_attribute(a, "edge", edge_where, edge_key);
      }
      edges.push_back(std::move(edge));
    }
    into.push_back(std::move(node));
  }

  const ParseOptions& options_;
  std::vector<Diagnostic> diagnostics_;
  std::size_t segment_ordinal_ = 0;
};

class Serializer {
 public:
  explicit Serializer(const SerializeOptions& options)
      : options_(options), out_(options.indent) {}

  std::string write(const Corpus& corpus) {
    out_.open("corpus");
    out_.attribute("xmlns:tiger2", options_.reserved_ns);
    out_.attribute("xmlns:dcr", options_.dcr_ns);
    out_.attribute("xml:id", corpus.id);
    write_head(corpus);
    out_.open("body");
    write_body(corpus);
    out_.close();
    out_.close();
    return out_.finish();
  }

 private:
  void write_head(const Corpus& corpus) {
    out_.open("head");
    if (!corpus.meta.empty()) {
      out_.open("meta");
      for (const auto& [key, value] : corpus.meta) out_.text_element(key, value);
      out_.close();
    }
    out_.open("annotation");
    for (const auto& d : corpus.registry.declarations()) {
      out_.open("feature");
      if (d.name) out_.attribute("name", *d.name);
      if (d.elem_type) out_.attribute("type", *d.elem_type);
      out_.attribute("domain", to_string(d.domain));
      if (d.dcr) out_.attribute("dcr:datcat", *d.dcr);
      for (const auto& v : d.values) {
        out_.open("value");
        out_.attribute("name", v.name);
        if (v.dcr) out_.attribute("dcr:datcat", *v.dcr);
        out_.text(v.description);
        out_.close();
      }
      out_.close();
    }
    out_.close();
    out_.close();
  }

  void write_body(const Corpus& corpus) {
    for (const auto& segment : corpus.segments) {
      out_.open("s");
      out_.attribute("xml:id", segment.id);
      for (const auto& graph : segment.graphs) write_graph(graph);
      out_.close();
    }
    for (const auto& sub : corpus.subcorpora) {
      out_.open("subcorpus");
      out_.attribute("xml:id", sub.id);
      write_body(sub);
      out_.close();
    }
  }

  void write_graph(const Graph& graph) {
    std::unordered_map<std::string, std::vector<const Edge*>> by_source;
    for (const auto& e : graph.edges) by_source[e.source].push_back(&e);

    out_.open("graph");
    if (graph.root) out_.attribute("root", *graph.root);
    if (graph.discontinuous)
      out_.attribute("discontinuous", *graph.discontinuous ? "true" : "false");
    out_.open("terminals");
    for (const auto& t : graph.terminals) write_node("t", t, by_source);
    out_.close();
    out_.open("nonterminals");
    for (const auto& nt : graph.nonterminals) write_node("nt", nt, by_source);
    out_.close();
    out_.close();
  }

  void write_node(
      std::string_view tag, const Node& node,
      const std::unordered_map<std::string, std::vector<const Edge*>>& edges) {
    out_.open(tag);
    out_.attribute("xml:id", node.id);
    if (node.elem_type) out_.attribute("tiger2:type", *node.elem_type);
    if (node.is_terminal() && node.corresp)
      out_.attribute("tiger2:corresp", *node.corresp);
    for (const auto& [name, value] : node.annotations) {
      if (name == "word" && node.is_terminal() && !options_.emit_legacy_word)
        continue;
      out_.attribute(name, value);
    }
    if (auto it = edges.find(node.id); it != edges.end()) {
      for (const auto* e : it->second) {
        out_.open("edge");
        if (e->elem_type) out_.attribute("tiger2:type", *e->elem_type);
        out_.attribute("tiger2:target", e->target.to_string());
        for (const auto& [name, value] : e->annotations)
          out_.attribute(name, value);
        out_.close();
      }
    }
    out_.close();
  }

  const SerializeOptions& options_;
  xml::Writer out_;
};

}  // namespace

ParseResult parse_tiger2(std::string_view document,
                         const ParseOptions& options) {
  return Reader(options).read(document);
}

std::string serialize_tiger2(const Corpus& corpus,
                             const SerializeOptions& options) {
  ValidationOptions validation;
  validation.strict = options.strict;
  for (const auto& d : validate_corpus(corpus, validation))
    if (d.is_error())
      throw ExportRefused("refusing to serialise invalid corpus: " + render(d));
  return Serializer(options).write(corpus);
}

}  // namespace tiger2
