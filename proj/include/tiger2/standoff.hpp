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

#ifndef TIGER2_STANDOFF_HPP_
#define TIGER2_STANDOFF_HPP_

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "tiger2/model.hpp"

namespace tiger2 {

struct TokenEntry {
  std::string form;
  Annotations annotations;

  bool operator==(const TokenEntry&) const = default;
};

// Addressable elements of an external token document, keyed by xml:id.
struct TokenTable {
  std::string source;
  std::map<std::string, TokenEntry> entries;
};

// Indexes every xml:id-bearing element of `document`. The surface form is
// the element's @form attribute when present, otherwise its trimmed text.
// Throws ParseError on malformed XML or a repeated xml:id.
TokenTable load_token_document(std::string_view document,
                               std::string source = {});

struct Unresolved {
  std::string terminal;
  std::string uri;

  bool operator==(const Unresolved&) const = default;
};

struct Mismatch {
  std::string terminal;
  std::string inline_word;
  std::string external_form;

  bool operator==(const Mismatch&) const = default;
};

struct ResolutionReport {
  std::size_t resolved = 0;
  std::vector<Unresolved> unresolved;
  std::vector<Mismatch> mismatches;

  std::size_t total() const { return resolved + unresolved.size(); }
};

// Tables are keyed by the document part of the corresp URIs.
using TokenTables = std::map<std::string, TokenTable, std::less<>>;

ResolutionReport resolve_corresp(const Corpus& corpus,
                                 const TokenTables& tables);

}  // namespace tiger2

#endif  // TIGER2_STANDOFF_HPP_
