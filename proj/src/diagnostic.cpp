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

#include "tiger2/diagnostic.hpp"

#include <algorithm>

namespace tiger2 {

std::string Location::to_string() const {
  if (segment.empty()) return element;
  if (element.empty()) return segment;
  return segment + ":" + element;
}

std::string_view to_string(Severity severity) {
  return severity == Severity::error ? "error" : "warning";
}

std::string render(const Diagnostic& d) {
  std::string out(to_string(d.severity));
  out += ' ';
  out += d.code;
  out += ' ';
  out += d.location.to_string();
  out += ' ';
  out += d.message;
  return out;
}

void sort_diagnostics(std::vector<Diagnostic>& diagnostics) {
  std::stable_sort(diagnostics.begin(), diagnostics.end(),
                   [](const Diagnostic& a, const Diagnostic& b) {
                     if (a.key != b.key) return a.key < b.key;
                     return a.code < b.code;
                   });
}

bool has_errors(const std::vector<Diagnostic>& diagnostics) {
  return count_errors(diagnostics) > 0;
}

std::size_t count_errors(const std::vector<Diagnostic>& diagnostics) {
  return static_cast<std::size_t>(
      std::count_if(diagnostics.begin(), diagnostics.end(),
                    [](const Diagnostic& d) { return d.is_error(); }));
}

}  // namespace tiger2
