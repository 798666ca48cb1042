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

#include "tiger2/declarations.hpp"

#include <algorithm>

#include "tiger2/diagnostic.hpp"
#include "tiger2/error.hpp"

namespace tiger2 {

std::string_view to_string(Domain domain) {
  switch (domain) {
    case Domain::t: return "t";
    case Domain::nt: return "nt";
    case Domain::edge: return "edge";
  }
  return "?";
}

std::optional<Domain> parse_domain(std::string_view text) {
  if (text == "t") return Domain::t;
  if (text == "nt") return Domain::nt;
  if (text == "edge") return Domain::edge;
  return std::nullopt;
}

bool FeatureDecl::allows(std::string_view value) const {
  if (values.empty()) return true;
  return std::any_of(values.begin(), values.end(),
                     [&](const ValueDecl& v) { return v.name == value; });
}

std::string describe(const FeatureDecl& decl) {
  std::string out = decl.name.value_or("");
  if (decl.elem_type) out += "@" + *decl.elem_type;
  out += ":";
  out += to_string(decl.domain);
  return out;
}

void DeclarationRegistry::add(FeatureDecl decl) {
  if (!decl.name && !decl.elem_type)
    throw DeclarationError(std::string(codes::kBadDecl),
                           "declaration has neither name nor type");
  if (decl.name && decl.name->empty())
    throw DeclarationError(std::string(codes::kBadDecl),
                           "declaration has an empty name");
  if (decl.elem_type && decl.elem_type->empty())
    throw DeclarationError(std::string(codes::kBadDecl),
                           "declaration has an empty type");
  std::set<std::string> value_names;
  for (const auto& v : decl.values) {
    if (v.name.empty())
      throw DeclarationError(std::string(codes::kBadDecl),
                             "value without a name in " + describe(decl));
    if (!value_names.insert(v.name).second)
      throw DeclarationError(std::string(codes::kBadDecl),
                             "value \"" + v.name + "\" repeated in " +
                                 describe(decl));
  }
  if (contains(decl.name, decl.elem_type, decl.domain))
    throw DeclarationError(std::string(codes::kDupDecl),
                           "duplicate declaration " + describe(decl));
  if (decl.is_type_declaration()) types_[decl.domain].insert(*decl.elem_type);
  decls_.push_back(std::move(decl));
}

const std::set<std::string>& DeclarationRegistry::declared_types(
    Domain domain) const {
  static const std::set<std::string> kNone;
  auto it = types_.find(domain);
  return it == types_.end() ? kNone : it->second;
}

bool DeclarationRegistry::contains(const std::optional<std::string>& name,
                                   const std::optional<std::string>& elem_type,
                                   Domain domain) const {
  return std::any_of(decls_.begin(), decls_.end(), [&](const FeatureDecl& d) {
    return d.name == name && d.elem_type == elem_type && d.domain == domain;
  });
}

std::vector<const FeatureDecl*> applicable(
    const DeclarationRegistry& registry, Domain domain,
    const std::optional<std::string>& elem_type) {
  std::vector<const FeatureDecl*> out;
  for (const auto& d : registry.declarations())
    if (d.name && d.domain == domain && d.elem_type == elem_type)
      out.push_back(&d);
  return out;
}

const FeatureDecl* find_applicable(const DeclarationRegistry& registry,
                                   Domain domain,
                                   const std::optional<std::string>& elem_type,
                                   std::string_view name) {
  for (const auto& d : registry.declarations())
    if (d.name && *d.name == name && d.domain == domain &&
        d.elem_type == elem_type)
      return &d;
  return nullptr;
}

}  // namespace tiger2
