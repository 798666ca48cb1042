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

#ifndef TIGER2_CONLL_HPP_
#define TIGER2_CONLL_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "tiger2/model.hpp"

namespace tiger2 {

enum class ConllColumn {
  id,
  form,
  lemma,
  cpostag,
  postag,
  feats,
  head,
  deprel,
  phead,
  pdeprel,
};

struct ConllConfig {
  std::string dep_edge_type = "dep";
  std::string label_annotation = "label";
  std::vector<ConllColumn> columns = {
      ConllColumn::id,     ConllColumn::form,   ConllColumn::lemma,
      ConllColumn::cpostag, ConllColumn::postag, ConllColumn::feats,
      ConllColumn::head,   ConllColumn::deprel, ConllColumn::phead,
      ConllColumn::pdeprel};

  // The 8-column layout without PHEAD/PDEPREL.
  static ConllConfig eight_column();
};

// Reads tab-separated CoNLL-X text into one segment per sentence. Throws
// ParseError with the offending line number on malformed rows or an
// out-of-range HEAD, and Error when the config lacks a required column.
Corpus import_conll(std::string_view text, const ConllConfig& config = {});

// Writes one row per terminal. Throws ExportRefused when a dependency edge
// touches a nonterminal or an external node, or a terminal has more than
// one head.
std::string export_conll(const Corpus& corpus, const ConllConfig& config = {});

}  // namespace tiger2

#endif  // TIGER2_CONLL_HPP_
