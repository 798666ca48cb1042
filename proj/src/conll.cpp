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

#include "tiger2/conll.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>

#include "tiger2/error.hpp"
#include "tiger2/graph_ops.hpp"

namespace tiger2 {

namespace {

constexpr std::string_view kEmpty = "_";

// Annotation carrying each non-structural column; FORM maps to "word".
std::optional<std::string_view> annotation_for(ConllColumn column) {
  switch (column) {
    case ConllColumn::form: return "word";
    case ConllColumn::lemma: return "lemma";
    case ConllColumn::cpostag: return "cpos";
    case ConllColumn::postag: return "pos";
    case ConllColumn::feats: return "feats";
    default: return std::nullopt;
  }
}

void check_config(const ConllConfig& config) {
  for (auto required : {ConllColumn::id, ConllColumn::form, ConllColumn::head,
                        ConllColumn::deprel}) {
    if (std::find(config.columns.begin(), config.columns.end(), required) ==
        config.columns.end())
      throw Error("CoNLL column layout lacks one of ID, FORM, HEAD, DEPREL");
  }
  if (config.dep_edge_type.empty() || config.label_annotation.empty())
    throw Error("CoNLL dependency type and label annotation must be non-empty");
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    auto pos = line.find(sep, start);
    out.push_back(line.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::optional<long> to_int(std::string_view s) {
  long value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

struct Row {
  long line;
  std::map<ConllColumn, std::string> fields;
  long head;
};

class SentenceBuilder {
 public:
  SentenceBuilder(const ConllConfig& config, Corpus& corpus)
      : config_(config), corpus_(corpus) {}

  void add(Row row) { rows_.push_back(std::move(row)); }

  void flush() {
    if (rows_.empty()) return;
    Segment segment;
    segment.id = "s" + std::to_string(corpus_.segments.size() + 1);
    Graph graph;
    const long n = static_cast<long>(rows_.size());
    auto term_id = [&](long position) {
      return segment.id + "_t" + std::to_string(position);
    };
    for (long i = 0; i < n; ++i) {
      const Row& row = rows_[static_cast<std::size_t>(i)];
      if (row.head < 0 || row.head > n)
        throw ParseError("HEAD " + std::to_string(row.head) +
                             " out of range 0.." + std::to_string(n),
                         row.line);
      Node node;
      node.id = term_id(i + 1);
      node.kind = NodeKind::terminal;
      for (const auto& [column, value] : row.fields) {
        auto name = annotation_for(column);
        if (!name) continue;
        if (column != ConllColumn::form && value == kEmpty) continue;
        node.annotations[std::string(*name)] = value;
        used_t_.insert(std::string(*name));
      }
      const std::string& deprel = row.fields.at(ConllColumn::deprel);
      if (row.head == 0) {
        if (!graph.root) graph.root = node.id;
        if (deprel != kEmpty) {
          node.annotations[config_.label_annotation] = deprel;
          used_t_.insert(config_.label_annotation);
        }
      } else {
        Edge edge;
        edge.source = term_id(row.head);
        edge.target = NodeRef::local(node.id);
        edge.elem_type = config_.dep_edge_type;
        if (deprel != kEmpty) {
          edge.annotations[config_.label_annotation] = deprel;
          label_used_ = true;
        }
        graph.edges.push_back(std::move(edge));
      }
      graph.terminals.push_back(std::move(node));
    }
    segment.graphs.push_back(std::move(graph));
    corpus_.segments.push_back(std::move(segment));
    rows_.clear();
  }

  void declare() {
    std::vector<std::string> order = {"word", "lemma", "cpos", "pos", "feats"};
    if (std::find(order.begin(), order.end(), config_.label_annotation) == order.end())
      order.push_back(config_.label_annotation);
    for (const auto& name : order)
      if (used_t_.contains(name))
        corpus_.registry.add({name, std::nullopt, Domain::t, std::nullopt, {}});
    bool any_edge = false;
    for (const auto& s : corpus_.segments)
      for (const auto& g : s.graphs) any_edge = any_edge || !g.edges.empty();
    if (any_edge)
      corpus_.registry.add(
          {std::nullopt, config_.dep_edge_type, Domain::edge, std::nullopt, {}});
    if (label_used_)
      corpus_.registry.add({config_.label_annotation, config_.dep_edge_type,
                            Domain::edge, std::nullopt, {}});
  }

 private:
  const ConllConfig& config_;
  Corpus& corpus_;
  std::vector<Row> rows_;
  std::set<std::string> used_t_;
  bool label_used_ = false;
};

}  // namespace

ConllConfig ConllConfig::eight_column() {
  ConllConfig config;
  config.columns.resize(8);
  return config;
}

Corpus import_conll(std::string_view text, const ConllConfig& config) {
  check_config(config);
  Corpus corpus;
  corpus.id = "conll";
  SentenceBuilder sentence(config, corpus);

  long line_no = 0;
  long expected_id = 1;
  for (auto line : split(text, '\n')) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.find_first_not_of(" \t") == std::string_view::npos) {
      sentence.flush();
      expected_id = 1;
      continue;
    }
    if (line.front() == '#') continue;
    auto cells = split(line, '\t');
    if (cells.size() != config.columns.size())
      throw ParseError("expected " + std::to_string(config.columns.size()) +
                           " tab-separated columns, found " +
                           std::to_string(cells.size()),
                       line_no);
    Row row{line_no, {}, 0};
    for (std::size_t i = 0; i < cells.size(); ++i)
      row.fields[config.columns[i]] = std::string(cells[i]);

    auto id = to_int(row.fields[ConllColumn::id]);
    if (!id)
      throw ParseError("ID \"" + row.fields[ConllColumn::id] + "\" is not an integer",
                       line_no);
    if (*id != expected_id)
      throw ParseError("ID " + std::to_string(*id) + " out of sequence, expected " +
                           std::to_string(expected_id),
                       line_no);
    ++expected_id;
    auto head = to_int(row.fields[ConllColumn::head]);
    if (!head)
      throw ParseError("HEAD \"" + row.fields[ConllColumn::head] +
                           "\" is not an integer",
                       line_no);
    row.head = *head;
    sentence.add(std::move(row));
  }
  sentence.flush();
  sentence.declare();
  return corpus;
}

std::string export_conll(const Corpus& corpus, const ConllConfig& config) {
  check_config(config);
  std::string out;
  for_each_segment(corpus, [&](const Segment& segment) {
    for (const auto& graph : segment.graphs) {
      if (graph.terminals.empty()) continue;
      std::map<std::string, const Edge*> head_of;
      for (const auto& e : graph.edges) {
        if (e.elem_type != config.dep_edge_type) continue;
        const Node* source = node_lookup(graph, e.source);
        const Node* target =
            e.target.is_local() ? node_lookup(graph, e.target.fragment) : nullptr;
        if (!source || !source->is_terminal())
          throw ExportRefused("not CoNLL-representable: dependency edge " + describe(e) +
                              " starts at nonterminal " + e.source);
        if (!e.target.is_local())
          throw ExportRefused("not CoNLL-representable: dependency edge " + describe(e) +
                              " targets an external node");
        if (!target || !target->is_terminal())
          throw ExportRefused("not CoNLL-representable: dependency edge " + describe(e) +
                              " targets nonterminal " + e.target.fragment);
        if (!head_of.emplace(target->id, &e).second)
          throw ExportRefused("not CoNLL-representable: terminal " + target->id +
                              " has more than one head");
      }

      for (std::size_t i = 0; i < graph.terminals.size(); ++i) {
        const Node& t = graph.terminals[i];
        const Edge* incoming =
            head_of.contains(t.id) ? head_of.at(t.id) : nullptr;
        std::vector<std::string> cells;
        for (auto column : config.columns) {
          std::string cell(kEmpty);
          if (column == ConllColumn::id) {
            cell = std::to_string(i + 1);
          } else if (column == ConllColumn::head) {
            cell = incoming
                       ? std::to_string(*terminal_position(graph, incoming->source))
                       : "0";
          } else if (column == ConllColumn::deprel) {
            const std::string* label =
                incoming ? incoming->annotation(config.label_annotation)
                         : t.annotation(config.label_annotation);
            if (label) cell = *label;
          } else if (auto name = annotation_for(column)) {
            if (const auto* value = t.annotation(*name)) cell = *value;
          }
          cells.push_back(std::move(cell));
        }
        for (std::size_t c = 0; c < cells.size(); ++c) {
          if (c) out += '\t';
          out += cells[c];
        }
        out += '\n';
      }
      out += '\n';
    }
  });
  return out;
}

}  // namespace tiger2
