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

#ifndef TIGER2_DIAGNOSTIC_HPP_
#define TIGER2_DIAGNOSTIC_HPP_

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace tiger2 {

enum class Severity { error, warning };

// Diagnostic codes.
namespace codes {
inline constexpr std::string_view kDupId = "E-DUPID";
inline constexpr std::string_view kBadRef = "E-BADREF";
inline constexpr std::string_view kUndeclType = "E-UNDECLTYPE";
inline constexpr std::string_view kUndeclAnn = "E-UNDECLANN";
inline constexpr std::string_view kBadVal = "E-BADVAL";
inline constexpr std::string_view kBadUri = "E-BADURI";
inline constexpr std::string_view kDupDecl = "E-DUPDECL";
inline constexpr std::string_view kBadDecl = "E-BADDECL";
inline constexpr std::string_view kDisc = "W-DISC";
inline constexpr std::string_view kNoRoot = "W-NOROOT";
inline constexpr std::string_view kUnusedDecl = "W-UNUSEDDECL";
inline constexpr std::string_view kUnknownAttr = "W-UNKNOWNATTR";
inline constexpr std::string_view kLegacyId = "W-LEGACYID";

inline constexpr std::array kAll = {
    kDupId,  kBadRef, kUndeclType, kUndeclAnn,  kBadVal,
    kBadUri, kDupDecl, kBadDecl,   kDisc,       kNoRoot,
    kUnusedDecl, kUnknownAttr, kLegacyId};
}  // namespace codes

// Where a diagnostic applies. Head diagnostics have an empty segment and
// element "head". Element ids of edges read `source/edge[k]`, graphs read
// `graph[k]`, both 1-based.
struct Location {
  std::string segment;
  std::string element;

  static Location head() { return {{}, "head"}; }
  std::string to_string() const;

  bool operator==(const Location&) const = default;
  auto operator<=>(const Location&) const = default;
};

// Document position used to order diagnostics: (segment ordinal, graph
// ordinal, element ordinal). Head entries use segment ordinal 0.
struct SortKey {
  std::size_t segment = 0;
  std::size_t graph = 0;
  std::size_t element = 0;

  bool operator==(const SortKey&) const = default;
  auto operator<=>(const SortKey&) const = default;
};

struct Diagnostic {
  Severity severity = Severity::error;
  std::string code;
  Location location;
  std::string message;
  SortKey key;

  bool is_error() const { return severity == Severity::error; }

  bool operator==(const Diagnostic&) const = default;
};

std::string_view to_string(Severity severity);

// `SEVERITY CODE location message`, no trailing newline.
std::string render(const Diagnostic& diagnostic);

// Stable sort by (key, code).
void sort_diagnostics(std::vector<Diagnostic>& diagnostics);

bool has_errors(const std::vector<Diagnostic>& diagnostics);
std::size_t count_errors(const std::vector<Diagnostic>& diagnostics);

}  // namespace tiger2

#endif  // TIGER2_DIAGNOSTIC_HPP_
