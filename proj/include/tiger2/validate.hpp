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

#ifndef TIGER2_VALIDATE_HPP_
#define TIGER2_VALIDATE_HPP_

#include <string_view>
#include <vector>

#include "tiger2/diagnostic.hpp"
#include "tiger2/model.hpp"

namespace tiger2 {

struct ValidationOptions {
  // Lax mode reports undeclared element types as warnings.
  bool strict = true;
  // Edge types whose projection is compared against a graph's declared
  // discontinuous flag (W-DISC).
  TypeFilter constituency_types{"const", "prim"};
};

// Runs the full rule catalogue over the corpus tree. The result is sorted
// with sort_diagnostics and is empty iff the corpus is valid.
std::vector<Diagnostic> validate_corpus(const Corpus& corpus,
                                        const ValidationOptions& options = {});

// Absolute http(s) URI with a non-empty authority.
bool is_valid_dcr_uri(std::string_view uri);

// RFC 3986 URI-reference (relative references allowed). Rejects
// whitespace, control characters, and broken percent escapes.
bool is_valid_uri_reference(std::string_view uri);

}  // namespace tiger2

#endif  // TIGER2_VALIDATE_HPP_
