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

#include "tiger2/convert.hpp"

#include <algorithm>

#include "tiger2/conll.hpp"
#include "tiger2/error.hpp"

namespace tiger2 {

namespace {

void check_format_id(std::string_view format) {
  bool ok = !format.empty() &&
            std::all_of(format.begin(), format.end(), [](char c) {
              return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') ||
                     c == '-' || c == '_';
            });
  if (!ok)
    throw RegistryError("format identifier \"" + std::string(format) +
                        "\" is not a lowercase token");
}

}  // namespace

MapperRegistry MapperRegistry::with_builtins(const ParseOptions& parse,
                                             const SerializeOptions& serialize) {
  MapperRegistry registry;
  registry.register_importer("tiger2", [parse](std::string_view bytes) {
    auto result = parse_tiger2(bytes, parse);
    return ImportOutcome{std::move(result.corpus), std::move(result.diagnostics)};
  });
  registry.register_exporter("tiger2", [serialize](const Corpus& corpus) {
    return ExportOutcome{serialize_tiger2(corpus, serialize), std::nullopt};
  });
  registry.register_importer("tigerxml", [](std::string_view bytes) {
    auto result = import_tigerxml(bytes);
    return ImportOutcome{std::move(result.corpus), std::move(result.diagnostics)};
  });
  registry.register_exporter("tigerxml", [](const Corpus& corpus) {
    auto result = export_tigerxml(corpus);
    return ExportOutcome{std::move(result.document), std::move(result.loss)};
  });
  registry.register_importer("conll", [](std::string_view bytes) {
    return ImportOutcome{import_conll(bytes), {}};
  });
  registry.register_exporter("conll", [](const Corpus& corpus) {
    return ExportOutcome{export_conll(corpus), std::nullopt};
  });
  return registry;
}

void MapperRegistry::register_importer(std::string format, Importer importer) {
  check_format_id(format);
  if (importers_.contains(format))
    throw RegistryError("importer \"" + format + "\" is already registered");
  importers_.emplace(std::move(format), std::move(importer));
}

void MapperRegistry::register_exporter(std::string format, Exporter exporter) {
  check_format_id(format);
  if (exporters_.contains(format))
    throw RegistryError("exporter \"" + format + "\" is already registered");
  exporters_.emplace(std::move(format), std::move(exporter));
}

bool MapperRegistry::has_importer(std::string_view format) const {
  return importers_.find(format) != importers_.end();
}

bool MapperRegistry::has_exporter(std::string_view format) const {
  return exporters_.find(format) != exporters_.end();
}

std::vector<std::string> MapperRegistry::importer_formats() const {
  std::vector<std::string> out;
  for (const auto& [format, mapper] : importers_) out.push_back(format);
  return out;
}

std::vector<std::string> MapperRegistry::exporter_formats() const {
  std::vector<std::string> out;
  for (const auto& [format, mapper] : exporters_) out.push_back(format);
  return out;
}

std::vector<std::pair<std::string, std::string>> MapperRegistry::routes() const {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& [in, importer] : importers_)
    for (const auto& [out_format, exporter] : exporters_)
      out.emplace_back(in, out_format);
  return out;
}

ConversionResult MapperRegistry::convert(std::string_view in_format,
                                         std::string_view input,
                                         std::string_view out_format) const {
  auto importer = importers_.find(in_format);
  if (importer == importers_.end())
    throw RegistryError("no importer registered for format \"" +
                        std::string(in_format) + "\"");
  auto exporter = exporters_.find(out_format);
  if (exporter == exporters_.end())
    throw RegistryError("no exporter registered for format \"" +
                        std::string(out_format) + "\"");

  ImportOutcome imported;
  try {
    imported = importer->second(input);
  } catch (const ParseError& e) {
    throw ParseError(std::string(in_format) + " import: " + e.what());
  }

  ConversionResult result;
  result.report.route = {std::string(in_format), std::string(out_format)};
  result.report.diagnostics = std::move(imported.diagnostics);
  try {
    auto exported = exporter->second(imported.corpus);
    result.bytes = std::move(exported.bytes);
    result.report.loss = std::move(exported.loss);
  } catch (const ExportRefused& e) {
    throw ExportRefused(std::string(out_format) + " export: " + e.what());
  }
  return result;
}

}  // namespace tiger2
