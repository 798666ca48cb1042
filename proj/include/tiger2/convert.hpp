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

#ifndef TIGER2_CONVERT_HPP_
#define TIGER2_CONVERT_HPP_

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tiger2/diagnostic.hpp"
#include "tiger2/model.hpp"
#include "tiger2/tiger2_xml.hpp"
#include "tiger2/tigerxml.hpp"

namespace tiger2 {

struct ImportOutcome {
  Corpus corpus;
  std::vector<Diagnostic> diagnostics;
};

struct ExportOutcome {
  std::string bytes;
  std::optional<LossReport> loss;
};

// Mappers translate between bytes and the shared corpus model; formats are
// never converted pairwise.
using Importer = std::function<ImportOutcome(std::string_view)>;
using Exporter = std::function<ExportOutcome(const Corpus&)>;

struct ConversionReport {
  std::pair<std::string, std::string> route;
  std::vector<Diagnostic> diagnostics;
  std::optional<LossReport> loss;
};

struct ConversionResult {
  std::string bytes;
  ConversionReport report;
};

class MapperRegistry {
 public:
  MapperRegistry() = default;

  // Registry holding importers and exporters for tiger2, tigerxml, conll.
  static MapperRegistry with_builtins(const ParseOptions& parse = {},
                                      const SerializeOptions& serialize = {});

  // Throw RegistryError when `format` is already registered in that
  // direction or is not a lowercase token.
  void register_importer(std::string format, Importer importer);
  void register_exporter(std::string format, Exporter exporter);

  bool has_importer(std::string_view format) const;
  bool has_exporter(std::string_view format) const;

  std::vector<std::string> importer_formats() const;
  std::vector<std::string> exporter_formats() const;

  std::size_t mapper_count() const { return importers_.size() + exporters_.size(); }
  // Every (in, out) pair, identity routes included.
  std::vector<std::pair<std::string, std::string>> routes() const;

  // exporter(importer(input)). Throws RegistryError for unregistered
  // formats; ParseError and ExportRefused from the mappers propagate with
  // the format name prefixed.
  ConversionResult convert(std::string_view in_format, std::string_view input,
                           std::string_view out_format) const;

 private:
  std::map<std::string, Importer, std::less<>> importers_;
  std::map<std::string, Exporter, std::less<>> exporters_;
};

}  // namespace tiger2

#endif  // TIGER2_CONVERT_HPP_
