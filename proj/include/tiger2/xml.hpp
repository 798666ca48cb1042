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

#ifndef TIGER2_XML_HPP_
#define TIGER2_XML_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tiger2::xml {

inline constexpr std::string_view kXmlNamespace =
    "http://www.w3.org/XML/1998/namespace";

struct Attribute {
  std::string ns;  // resolved namespace URI, empty when unqualified
  std::string name;
  std::string prefix;
  std::string value;
};

// Namespace-resolved element tree. `text` is the concatenated character
// data directly inside this element.
struct Element {
  std::string ns;
  std::string name;
  std::vector<Attribute> attributes;
  std::vector<Element> children;
  std::string text;
  long line = 0;

  const Attribute* find(std::string_view ns, std::string_view name) const;
  // Unqualified attribute value.
  std::optional<std::string> attr(std::string_view name) const;
  const Element* child(std::string_view name) const;
};

// Parses a complete document. Throws ParseError (with a line number) when
// the input is not well-formed. Encodings known to expat are accepted and
// transcoded to UTF-8.
Element parse(std::string_view document);

// Incremental pretty-printer producing UTF-8. An indent of 0 writes the
// document on a single line after the declaration.
class Writer {
 public:
  explicit Writer(int indent = 2);

  void open(std::string_view name);
  void attribute(std::string_view name, std::string_view value);
  void text(std::string_view value);
  void close();

  // Element with text content only, e.g. <name>x</name>.
  void text_element(std::string_view name, std::string_view value);

  // Closes any open elements and returns the document.
  std::string finish();

 private:
  struct Frame {
    std::string name;
    bool has_children = false;
    bool has_text = false;
  };

  void end_start_tag();
  void newline(std::size_t depth);

  int indent_;
  std::string out_;
  std::vector<Frame> stack_;
  bool start_tag_open_ = false;
};

std::string escape_text(std::string_view text);
std::string escape_attribute(std::string_view text);

}  // namespace tiger2::xml

#endif  // TIGER2_XML_HPP_
