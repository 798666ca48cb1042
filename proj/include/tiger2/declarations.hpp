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

#ifndef TIGER2_DECLARATIONS_HPP_
#define TIGER2_DECLARATIONS_HPP_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace tiger2 {

// The element class a declaration governs.
enum class Domain { t, nt, edge };

std::string_view to_string(Domain domain);
std::optional<Domain> parse_domain(std::string_view text);

struct ValueDecl {
  std::string name;
  std::string description;
  std::optional<std::string> dcr;

  bool operator==(const ValueDecl&) const = default;
  auto operator<=>(const ValueDecl&) const = default;
};

// One entry of the <annotation> block. A declaration without a name is a
// pure type declaration; one with a name declares an annotation that
// applies to elements of exactly (domain, elem_type). An empty value list
// means the annotation is open-ended.
struct FeatureDecl {
  std::optional<std::string> name;
  std::optional<std::string> elem_type;
  Domain domain = Domain::t;
  std::optional<std::string> dcr;
  std::vector<ValueDecl> values;

  bool is_type_declaration() const { return !name.has_value(); }
  bool is_closed() const { return !values.empty(); }
  bool allows(std::string_view value) const;

  bool operator==(const FeatureDecl&) const = default;
  auto operator<=>(const FeatureDecl&) const = default;
};

// Readable key for a declaration, e.g. `label@dep:edge` or `@dep:edge`.
std::string describe(const FeatureDecl& decl);

class DeclarationRegistry {
 public:
  DeclarationRegistry() = default;

  // Appends `decl`. Throws DeclarationError with code E-DUPDECL when the
  // (name, elem_type, domain) triple is already registered, and E-BADDECL
  // when the declaration is malformed.
  void add(FeatureDecl decl);

  const std::vector<FeatureDecl>& declarations() const { return decls_; }
  bool empty() const { return decls_.empty(); }
  std::size_t size() const { return decls_.size(); }

  // Every elem_type mentioned by a declaration of `domain`.
  const std::set<std::string>& declared_types(Domain domain) const;

  bool contains(const std::optional<std::string>& name,
                const std::optional<std::string>& elem_type,
                Domain domain) const;

 private:
  std::vector<FeatureDecl> decls_;
  std::map<Domain, std::set<std::string>> types_;
};

// Declarations of `domain` whose elem_type equals `elem_type` exactly
// (absent matches absent only), excluding pure type declarations.
std::vector<const FeatureDecl*> applicable(
    const DeclarationRegistry& registry, Domain domain,
    const std::optional<std::string>& elem_type);

// The applicable declaration for annotation `name`, or nullptr.
const FeatureDecl* find_applicable(const DeclarationRegistry& registry,
                                   Domain domain,
                                   const std::optional<std::string>& elem_type,
                                   std::string_view name);

}  // namespace tiger2

#endif  // TIGER2_DECLARATIONS_HPP_
