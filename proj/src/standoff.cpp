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

#include "tiger2/standoff.hpp"

#include "tiger2/error.hpp"
#include "tiger2/xml.hpp"

namespace tiger2 {

namespace {

std::string trim(std::string_view s) {
  auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string_view::npos) return {};
  auto end = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(begin, end - begin + 1));
}

void index(const xml::Element& e, TokenTable& table) {
  if (const auto* id = e.find(xml::kXmlNamespace, "id")) {
    TokenEntry entry;
    for (const auto& a : e.attributes) {
      if (&a == id) continue;
      if (a.ns.empty() && a.name == "form")
        entry.form = a.value;
      else if (a.ns.empty())
        entry.annotations[a.name] = a.value;
    }
    if (!e.find({}, "form")) entry.form = trim(e.text);
    if (!table.entries.emplace(id->value, std::move(entry)).second)
      throw ParseError("duplicate xml:id \"" + id->value + "\"", e.line);
  }
  for (const auto& child : e.children) index(child, table);
}

}  // namespace

TokenTable load_token_document(std::string_view document, std::string source) {
  TokenTable table;
  table.source = std::move(source);
  index(xml::parse(document), table);
  return table;
}

ResolutionReport resolve_corresp(const Corpus& corpus,
                                 const TokenTables& tables) {
  ResolutionReport report;
  for_each_segment(corpus, [&](const Segment& segment) {
    for (const auto& graph : segment.graphs) {
      for (const auto& t : graph.terminals) {
        if (!t.corresp) continue;
        const auto ref = NodeRef::parse(*t.corresp);
        const TokenEntry* entry = nullptr;
        if (auto doc = tables.find(ref.document); doc != tables.end()) {
          auto it = doc->second.entries.find(ref.fragment);
          if (it != doc->second.entries.end()) entry = &it->second;
        }
        if (!entry || t.corresp->find('#') == std::string::npos) {
          report.unresolved.push_back({t.id, *t.corresp});
          continue;
        }
        ++report.resolved;
        if (auto word = t.word(); word && *word != entry->form)
          report.mismatches.push_back({t.id, *word, entry->form});
      }
    }
  });
  return report;
}

}  // namespace tiger2
