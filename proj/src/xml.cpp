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

#include "tiger2/xml.hpp"

#include <expat.h>

#include <memory>

#include "tiger2/error.hpp"

namespace tiger2::xml {

namespace {

constexpr char kNsSeparator = '\x01';

// Splits expat's "uri\1local\1prefix" triplet form.
void split_name(const char* raw, std::string& ns, std::string& local,
                std::string* prefix) {
  std::string_view name(raw);
  auto first = name.find(kNsSeparator);
  if (first == std::string_view::npos) {
    ns.clear();
    local.assign(name);
    if (prefix) prefix->clear();
    return;
  }
  ns.assign(name.substr(0, first));
  auto rest = name.substr(first + 1);
  auto second = rest.find(kNsSeparator);
  local.assign(rest.substr(0, second));
  if (prefix) {
    if (second == std::string_view::npos)
      prefix->clear();
    else
      prefix->assign(rest.substr(second + 1));
  }
}

struct Builder {
  XML_Parser parser = nullptr;
  Element root;
  std::vector<Element*> stack;
  bool seen_root = false;

  static void on_start(void* data, const XML_Char* name,
                       const XML_Char** attrs) {
    auto* self = static_cast<Builder*>(data);
    Element element;
    split_name(name, element.ns, element.name, nullptr);
    element.line = static_cast<long>(XML_GetCurrentLineNumber(self->parser));
    for (int i = 0; attrs[i]; i += 2) {
      Attribute attribute;
      split_name(attrs[i], attribute.ns, attribute.name, &attribute.prefix);
      attribute.value = attrs[i + 1];
      element.attributes.push_back(std::move(attribute));
    }
    if (self->stack.empty()) {
      self->root = std::move(element);
      self->stack.push_back(&self->root);
      self->seen_root = true;
    } else {
      // Only the innermost open element grows, so the pointers to its
      // ancestors held on the stack stay valid.
      auto& children = self->stack.back()->children;
      children.push_back(std::move(element));
      self->stack.push_back(&children.back());
    }
  }

  static void on_end(void* data, const XML_Char*) {
    static_cast<Builder*>(data)->stack.pop_back();
  }

  static void on_text(void* data, const XML_Char* s, int len) {
    auto* self = static_cast<Builder*>(data);
    if (!self->stack.empty())
      self->stack.back()->text.append(s, static_cast<std::size_t>(len));
  }
};

struct ParserDeleter {
  void operator()(XML_Parser parser) const { XML_ParserFree(parser); }
};

}  // namespace

const Attribute* Element::find(std::string_view ns_uri,
                               std::string_view local) const {
  for (const auto& a : attributes)
    if (a.ns == ns_uri && a.name == local) return &a;
  return nullptr;
}

std::optional<std::string> Element::attr(std::string_view local) const {
  if (const auto* a = find({}, local)) return a->value;
  return std::nullopt;
}

const Element* Element::child(std::string_view local) const {
  for (const auto& c : children)
    if (c.name == local) return &c;
  return nullptr;
}

Element parse(std::string_view document) {
  std::unique_ptr<XML_ParserStruct, ParserDeleter> parser(
      XML_ParserCreateNS(nullptr, kNsSeparator));
  if (!parser) throw Error("cannot allocate XML parser");
  XML_SetReturnNSTriplet(parser.get(), 1);

  Builder builder;
  builder.parser = parser.get();
  XML_SetUserData(parser.get(), &builder);
  XML_SetElementHandler(parser.get(), &Builder::on_start, &Builder::on_end);
  XML_SetCharacterDataHandler(parser.get(), &Builder::on_text);

  if (XML_Parse(parser.get(), document.data(),
                static_cast<int>(document.size()), 1) == XML_STATUS_ERROR) {
    throw ParseError(
        std::string("malformed XML: ") +
            XML_ErrorString(XML_GetErrorCode(parser.get())),
        static_cast<long>(XML_GetCurrentLineNumber(parser.get())));
  }
  if (!builder.seen_root) throw ParseError("malformed XML: no root element");
  return std::move(builder.root);
}

std::string escape_text(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '\r': out += "&#13;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string escape_attribute(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\t': out += "&#9;"; break;
      case '\n': out += "&#10;"; break;
      case '\r': out += "&#13;"; break;
      default: out += c;
    }
  }
  return out;
}

Writer::Writer(int indent) : indent_(indent < 0 ? 0 : indent) {
  out_ = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
}

void Writer::newline(std::size_t depth) {
  if (indent_ == 0) return;
  out_ += '\n';
  out_.append(depth * static_cast<std::size_t>(indent_), ' ');
}

void Writer::end_start_tag() {
  if (start_tag_open_) {
    out_ += '>';
    start_tag_open_ = false;
  }
}

void Writer::open(std::string_view name) {
  end_start_tag();
  if (!stack_.empty()) {
    stack_.back().has_children = true;
    newline(stack_.size());
  }
  out_ += '<';
  out_ += name;
  stack_.push_back({std::string(name)});
  start_tag_open_ = true;
}

void Writer::attribute(std::string_view name, std::string_view value) {
  out_ += ' ';
  out_ += name;
  out_ += "=\"";
  out_ += escape_attribute(value);
  out_ += '"';
}

void Writer::text(std::string_view value) {
  if (value.empty()) return;
  end_start_tag();
  stack_.back().has_text = true;
  out_ += escape_text(value);
}

void Writer::close() {
  Frame frame = std::move(stack_.back());
  stack_.pop_back();
  if (start_tag_open_) {
    out_ += "/>";
    start_tag_open_ = false;
    return;
  }
  if (frame.has_children && !frame.has_text) newline(stack_.size());
  out_ += "</";
  out_ += frame.name;
  out_ += '>';
}

void Writer::text_element(std::string_view name, std::string_view value) {
  open(name);
  text(value);
  close();
}

std::string Writer::finish() {
  while (!stack_.empty()) close();
  out_ += '\n';
  return std::move(out_);
}

}  // namespace tiger2::xml
