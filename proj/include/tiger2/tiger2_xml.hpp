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

#ifndef TIGER2_TIGER2_XML_HPP_
#define TIGER2_TIGER2_XML_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "tiger2/diagnostic.hpp"
#include "tiger2/model.hpp"

namespace tiger2 {

// Namespace of the reserved type/target/corresp attributes.
inline constexpr std::string_view kDefaultReservedNs =
    "http://korpling.german.hu-berlin.de/tiger2/V2/";
// Namespace of dcr:datcat references.
inline constexpr std::string_view kDefaultDcrNs = "http://www.isocat.org/ns/dcr";

struct ParseOptions {
  bool strict = true;
  std::string reserved_ns{kDefaultReservedNs};
  std::string dcr_ns{kDefaultDcrNs};
};

struct SerializeOptions {
  int indent = 2;
  // Declaration strictness of the validation run guarding the writer.
  bool strict = true;
  bool emit_legacy_word = true;
  std::string reserved_ns{kDefaultReservedNs};
  std::string dcr_ns{kDefaultDcrNs};
};

struct ParseResult {
  Corpus corpus;
  std::vector<Diagnostic> diagnostics;  // reader warnings + validation
};

// Reads a <tiger2/> document. Throws ParseError on malformed XML or a
// document whose root is not <corpus>; every other problem is reported as
// a diagnostic.
ParseResult parse_tiger2(std::string_view document,
                         const ParseOptions& options = {});

// Writes a <tiger2/> document. Throws ExportRefused naming the first error
// when validate_corpus reports any.
std::string serialize_tiger2(const Corpus& corpus,
                             const SerializeOptions& options = {});

}  // namespace tiger2

#endif  // TIGER2_TIGER2_XML_HPP_
