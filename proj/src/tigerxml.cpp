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

#include "tiger2/tigerxml.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "tiger2/error.hpp"
#include "tiger2/validate.hpp"
#include "tiger2/xml.hpp"

namespace tiger2 {

namespace {

std::string upper(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

std::vector<ValueDecl> read_values(const xml::Element& e) {
  std::vector<ValueDecl> values;
  for (const auto& v : e.children)
    if (v.name == "value")
      values.push_back({v.attr("name").value_or(""), v.text, std::nullopt});
  return values;
}

class Importer {
 public:
  explicit Importer(const ImportMapping& mapping) : mapping_(mapping) {}

  TigerXmlImport run(std::string_view document) {
    xml::Element root = xml::parse(document);
    if (root.name != "corpus")
      throw ParseError("root element is <" + root.name + ">, expected <corpus>",
                       root.line);
    TigerXmlImport result;
    Corpus& corpus = result.corpus;
    corpus.id = root.attr("id").value_or("");
    if (const auto* head = root.child("head")) read_head(*head, corpus);
    if (const auto* body = root.child("body")) read_body(*body, corpus);
    add_node_type_declarations(corpus);

    result.diagnostics = std::move(diagnostics_);
    auto checked = validate_corpus(corpus);
    result.diagnostics.insert(result.diagnostics.end(), checked.begin(),
                              checked.end());
    sort_diagnostics(result.diagnostics);
    return result;
  }

 private:
  void declare(Corpus& corpus, FeatureDecl decl) {
    try {
      corpus.registry.add(std::move(decl));
    } catch (const DeclarationError& e) {
      diagnostics_.push_back({Severity::error, e.code(), Location::head(),
                              e.what(), {0, 0, corpus.registry.size() + 1}});
    }
  }

  void read_head(const xml::Element& head, Corpus& corpus) {
    if (const auto* meta = head.child("meta"))
      for (const auto& entry : meta->children)
        corpus.meta.emplace_back(entry.name, entry.text);

    std::vector<ValueDecl> edge_labels;
    std::vector<ValueDecl> secedge_labels;
    if (const auto* annotation = head.child("annotation")) {
      for (const auto& c : annotation->children) {
        if (c.name == "feature") {
          auto name = c.attr("name");
          auto domain = upper(c.attr("domain").value_or(""));
          auto values = read_values(c);
          std::vector<Domain> domains;
          if (domain == "T") domains = {Domain::t};
          else if (domain == "NT") domains = {Domain::nt};
          else if (domain == "FREC") domains = {Domain::t, Domain::nt};
          if (domains.empty() || !name) {
            diagnostics_.push_back(
                {Severity::error, std::string(codes::kBadDecl), Location::head(),
                 "feature on line " + std::to_string(c.line) +
                     " lacks a name or has domain " + c.attr("domain").value_or("(absent)"),
                 {0, 0, corpus.registry.size() + 1}});
            continue;
          }
          for (auto d : domains)
            declare(corpus, {name, std::nullopt, d, std::nullopt, values});
        } else if (c.name == "edgelabel") {
          edge_labels = read_values(c);
        } else if (c.name == "secedgelabel") {
          secedge_labels = read_values(c);
        }
      }
    }
    for (const auto& [type, labels] :
         {std::pair{mapping_.primary_edge_type, edge_labels},
          std::pair{mapping_.secondary_edge_type, secedge_labels}}) {
      declare(corpus, {std::nullopt, type, Domain::edge, std::nullopt, {}});
      declare(corpus, {"label", type, Domain::edge, std::nullopt, labels});
    }
  }

  void read_body(const xml::Element& body, Corpus& corpus) {
    for (const auto& child : body.children)
      if (child.name == "s") corpus.segments.push_back(read_segment(child));
    for (const auto& child : body.children) {
      if (child.name != "subcorpus") continue;
      Corpus sub;
      sub.id = child.attr("name").value_or(child.attr("id").value_or(""));
      read_body(child, sub);
      corpus.subcorpora.push_back(std::move(sub));
    }
  }

  Segment read_segment(const xml::Element& s) {
    Segment segment;
    segment.id = s.attr("id").value_or("");
    for (const auto& g : s.children)
      if (g.name == "graph") segment.graphs.push_back(read_graph(g));
    return segment;
  }

  Graph read_graph(const xml::Element& e) {
    Graph graph;
    graph.root = e.attr("root");
    if (auto flag = e.attr("discontinuous"))
      graph.discontinuous = (*flag == "true" || *flag == "1");
    for (const auto& c : e.children) {
      if (c.name == "terminals") {
        for (const auto& t : c.children)
          if (t.name == "t") graph.terminals.push_back(read_node(t, NodeKind::terminal, graph));
      } else if (c.name == "nonterminals") {
        for (const auto& nt : c.children)
          if (nt.name == "nt")
            graph.nonterminals.push_back(read_node(nt, NodeKind::nonterminal, graph));
      }
    }
    return graph;
  }

  Node read_node(const xml::Element& e, NodeKind kind, Graph& graph) {
    Node node;
    node.kind = kind;
    for (const auto& a : e.attributes) {
      if (!a.ns.empty()) continue;
      if (a.name == "id")
        node.id = a.value;
      else
        node.annotations[a.name] = a.value;
    }
    if (kind == NodeKind::nonterminal && mapping_.node_type) {
      if (const auto* cat = node.annotation("cat")) {
        node.elem_type = mapping_.node_type(*cat);
        if (node.elem_type) assigned_types_.insert(*node.elem_type);
      }
    }
    for (const auto& c : e.children) {
      const bool primary = c.name == "edge";
      if (!primary && c.name != "secedge") continue;
      Edge edge;
      edge.source = node.id;
      edge.elem_type =
          primary ? mapping_.primary_edge_type : mapping_.secondary_edge_type;
      for (const auto& a : c.attributes) {
        if (!a.ns.empty()) continue;
        if (a.name == "idref")
          edge.target = NodeRef::local(a.value);
        else
          edge.annotations[a.name] = a.value;
      }
      graph.edges.push_back(std::move(edge));
    }
    return node;
  }

  // Typed nonterminals keep the annotations of untyped ones.
  void add_node_type_declarations(Corpus& corpus) {
    std::vector<FeatureDecl> untyped_nt;
    for (const auto& d : corpus.registry.declarations())
      if (d.domain == Domain::nt && !d.elem_type && d.name) untyped_nt.push_back(d);
    for (const auto& type : assigned_types_) {
      declare(corpus, {std::nullopt, type, Domain::nt, std::nullopt, {}});
      for (auto d : untyped_nt) {
        d.elem_type = type;
        declare(corpus, std::move(d));
      }
    }
  }

  const ImportMapping& mapping_;
  std::vector<Diagnostic> diagnostics_;
  std::set<std::string> assigned_types_;
};

class Exporter {
 public:
  explicit Exporter(const ImportMapping& mapping) : mapping_(mapping) {}

  TigerXmlExport run(const Corpus& corpus) {
    out_.open("corpus");
    out_.attribute("id", corpus.id);
    write_head(corpus);
    out_.open("body");
    write_body(corpus);
    out_.close();
    out_.close();
    return {out_.finish(), std::move(loss_)};
  }

 private:
  void drop(std::string id, std::string reason) {
    loss_.dropped_elements.emplace_back(std::move(id), std::move(reason));
  }
  void degrade(std::string id, std::string what) {
    loss_.degraded.emplace_back(std::move(id), std::move(what));
  }

  void write_values(const std::vector<ValueDecl>& values, const std::string& owner) {
    for (const auto& v : values) {
      if (v.dcr) degrade("head/" + owner, "dcr reference of value \"" + v.name + "\" dropped");
      out_.open("value");
      out_.attribute("name", v.name);
      out_.text(v.description);
      out_.close();
    }
  }

  void write_head(const Corpus& corpus) {
    out_.open("head");
    if (!corpus.meta.empty()) {
      out_.open("meta");
      for (const auto& [key, value] : corpus.meta) out_.text_element(key, value);
      out_.close();
    }
    out_.open("annotation");

    // Untyped node features, merged to FREC when declared for both domains.
    std::vector<std::string> order;
    std::map<std::string, std::map<Domain, const FeatureDecl*>> features;
    const FeatureDecl* edge_labels = nullptr;
    const FeatureDecl* secedge_labels = nullptr;
    for (const auto& d : corpus.registry.declarations()) {
      const std::string where = "head/feature[" + describe(d) + "]";
      if (d.domain != Domain::edge && !d.elem_type && d.name) {
        if (!features.contains(*d.name)) order.push_back(*d.name);
        features[*d.name][d.domain] = &d;
      } else if (d.domain == Domain::edge && d.name == "label" &&
                 d.elem_type == mapping_.primary_edge_type) {
        edge_labels = &d;
      } else if (d.domain == Domain::edge && d.name == "label" &&
                 d.elem_type == mapping_.secondary_edge_type) {
        secedge_labels = &d;
      } else if (d.domain == Domain::edge && !d.name &&
                 (d.elem_type == mapping_.primary_edge_type ||
                  d.elem_type == mapping_.secondary_edge_type)) {
        continue;  // implicit in TigerXML
      } else {
        degrade(where, "declaration not representable in TigerXML");
        continue;
      }
      if (d.dcr) degrade(where, "dcr reference dropped");
    }
    if (!features.contains("word")) {
      out_.open("feature");
      out_.attribute("name", "word");
      out_.attribute("domain", "T");
      out_.close();
    }
    for (const auto& name : order) {
      const auto& by_domain = features[name];
      const FeatureDecl* t = by_domain.contains(Domain::t) ? by_domain.at(Domain::t) : nullptr;
      const FeatureDecl* nt = by_domain.contains(Domain::nt) ? by_domain.at(Domain::nt) : nullptr;
      const FeatureDecl* first = t ? t : nt;
      out_.open("feature");
      out_.attribute("name", name);
      out_.attribute("domain", t && nt ? "FREC" : (t ? "T" : "NT"));
      if (t && nt && t->values != nt->values)
        degrade("head/feature[" + describe(*nt) + "]",
                "values merged into the terminal value set");
      write_values(first->values, "feature[" + describe(*first) + "]");
      out_.close();
    }
    out_.open("edgelabel");
    if (edge_labels) write_values(edge_labels->values, "edgelabel");
    out_.close();
    out_.open("secedgelabel");
    if (secedge_labels) write_values(secedge_labels->values, "secedgelabel");
    out_.close();

    out_.close();
    out_.close();
  }

  void write_body(const Corpus& corpus) {
    for (const auto& segment : corpus.segments) write_segment(segment);
    for (const auto& sub : corpus.subcorpora) {
      out_.open("subcorpus");
      out_.attribute("name", sub.id);
      write_body(sub);
      out_.close();
    }
  }

  void write_segment(const Segment& segment) {
    out_.open("s");
    out_.attribute("id", segment.id);
    for (std::size_t g = 0; g < segment.graphs.size(); ++g) {
      if (g == 0) {
        write_graph(segment.graphs[g]);
        continue;
      }
      // TigerXML holds one graph per sentence.
      const auto& extra = segment.graphs[g];
      const std::string reason = "alternative graph " + std::to_string(g + 1) +
                                 " of segment " + segment.id + " dropped";
      drop(segment.id + "/graph[" + std::to_string(g + 1) + "]", reason);
      for (const auto& t : extra.terminals) drop(t.id, reason);
      for (const auto& nt : extra.nonterminals) drop(nt.id, reason);
      for (const auto& e : extra.edges) drop(describe(e), reason);
    }
    out_.close();
  }

  enum class EdgeKind { primary, secondary, none };

  EdgeKind classify(const Edge& e, const Node& source) {
    std::string reason;
    if (!e.elem_type)
      reason = "untyped edge";
    else if (*e.elem_type != mapping_.primary_edge_type &&
             *e.elem_type != mapping_.secondary_edge_type)
      reason = "edge type \"" + *e.elem_type + "\" beyond the two TigerXML edge classes";
    else if (!e.target.is_local())
      reason = "external edge target";
    else if (*e.elem_type == mapping_.primary_edge_type && source.is_terminal())
      reason = "primary edge from a terminal";
    if (!reason.empty()) {
      drop(describe(e), reason);
      return EdgeKind::none;
    }
    return *e.elem_type == mapping_.primary_edge_type ? EdgeKind::primary
                                                      : EdgeKind::secondary;
  }

  void write_graph(const Graph& graph) {
    std::map<std::string, std::vector<const Edge*>> by_source;
    for (const auto& e : graph.edges) by_source[e.source].push_back(&e);
    for (const auto& [source, edges] : by_source) {
      const bool known =
          std::any_of(graph.terminals.begin(), graph.terminals.end(),
                      [&](const Node& n) { return n.id == source; }) ||
          std::any_of(graph.nonterminals.begin(), graph.nonterminals.end(),
                      [&](const Node& n) { return n.id == source; });
      if (!known)
        for (const auto* e : edges) drop(describe(*e), "edge source is not a node");
    }

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

  void write_node(std::string_view tag, const Node& node,
                  const std::map<std::string, std::vector<const Edge*>>& edges) {
    if (node.elem_type)
      degrade(node.id, "node type \"" + *node.elem_type + "\" dropped");
    if (node.corresp)
      degrade(node.id, "corresp \"" + *node.corresp + "\" dropped");

    out_.open(tag);
    out_.attribute("id", node.id);
    if (node.is_terminal()) {
      auto word = node.word();
      if (!word) degrade(node.id, "no inline word; empty word emitted");
      out_.attribute("word", word.value_or(""));
    }
    for (const auto& [name, value] : node.annotations)
      if (!(node.is_terminal() && name == "word")) out_.attribute(name, value);

    if (auto it = edges.find(node.id); it != edges.end()) {
      for (const auto* e : it->second) {
        auto kind = classify(*e, node);
        if (kind == EdgeKind::none) continue;
        out_.open(kind == EdgeKind::primary ? "edge" : "secedge");
        out_.attribute("idref", e->target.fragment);
        for (const auto& [name, value] : e->annotations) out_.attribute(name, value);
        out_.close();
      }
    }
    out_.close();
  }

  const ImportMapping& mapping_;
  xml::Writer out_{2};
  LossReport loss_;
};

}  // namespace

NodeTypePredicate categories_as_type(std::set<std::string> categories,
                                     std::string type) {
  return [categories = std::move(categories),
          type = std::move(type)](std::string_view cat) -> std::optional<std::string> {
    if (categories.contains(std::string(cat))) return type;
    return std::nullopt;
  };
}

const std::set<std::string>& topological_fields() {
  static const std::set<std::string> kFields = {
      "VF", "LK", "MF", "VC", "NF", "C", "KOORD", "PARORD", "FKOORD", "LV", "MFE", "VCE", "FKONJ"};
  return kFields;
}

TigerXmlImport import_tigerxml(std::string_view document,
                               const ImportMapping& mapping) {
  if (mapping.primary_edge_type == mapping.secondary_edge_type)
    throw Error("primary and secondary edge types must differ");
  return Importer(mapping).run(document);
}

TigerXmlExport export_tigerxml(const Corpus& corpus,
                               const ImportMapping& mapping) {
  if (mapping.primary_edge_type == mapping.secondary_edge_type)
    throw Error("primary and secondary edge types must differ");
  return Exporter(mapping).run(corpus);
}

}  // namespace tiger2
