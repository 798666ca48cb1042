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

#ifndef TIGER2_TIGERXML_HPP_
#define TIGER2_TIGERXML_HPP_

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tiger2/diagnostic.hpp"
#include "tiger2/model.hpp"

namespace tiger2 {

// Assigns an elem_type to an imported nonterminal from its @cat value.
using NodeTypePredicate =
    std::function<std::optional<std::string>(std::string_view cat)>;

struct ImportMapping {
  std::string primary_edge_type = "prim";
  std::string secondary_edge_type = "sec";
  // Unset: nonterminals stay untyped.
  NodeTypePredicate node_type;
};

// Predicate typing every nonterminal whose category is in `categories`.
NodeTypePredicate categories_as_type(std::set<std::string> categories,
                                     std::string type);

// Topological field labels of German treebanks.
const std::set<std::string>& topological_fields();

struct LossReport {
  std::vector<std::pair<std::string, std::string>> dropped_elements;
  std::vector<std::pair<std::string, std::string>> degraded;

  bool lossless() const { return dropped_elements.empty() && degraded.empty(); }
};

struct TigerXmlImport {
  Corpus corpus;
  std::vector<Diagnostic> diagnostics;
};

// Reads a TigerXML document. Throws ParseError only for malformed XML or a
// missing <corpus> root.
TigerXmlImport import_tigerxml(std::string_view document,
                               const ImportMapping& mapping = {});

struct TigerXmlExport {
  std::string document;
  LossReport loss;
};

// Writes the TigerXML-representable part of `corpus`. Edges of the
// mapping's primary type become <edge>, secondary become <secedge>;
// everything else is dropped or coerced and listed in the LossReport.
TigerXmlExport export_tigerxml(const Corpus& corpus,
                               const ImportMapping& mapping = {});

}  // namespace tiger2

#endif  // TIGER2_TIGERXML_HPP_
