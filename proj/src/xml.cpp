// src/xml.cpp

// Copyright 2026  The mixlang authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include "mixlang/xml.hpp"

#include <cctype>
#include <sstream>

namespace mixlang {
namespace xml {

const std::string &Element::attribute(const std::string &key) const {
  const auto it = attributes.find(key);
  if (it == attributes.end()) {
    throw MalformedXml("element " + name + " lacks attribute " + key);
  }
  return it->second;
}

const Element *Element::find_child(const std::string &child_name) const {
  for (const auto &c : children) {
    if (c->name == child_name) return c.get();
  }
  return nullptr;
}

std::vector<const Element *> Element::find_children(
    const std::string &child_name) const {
  std::vector<const Element *> out;
  for (const auto &c : children) {
    if (c->name == child_name) out.push_back(c.get());
  }
  return out;
}

namespace {

bool is_name_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == ':';
}
bool is_name_char(char c) {
  return is_name_start(c) || std::isdigit(static_cast<unsigned char>(c)) ||
         c == '-' || c == '.';
}

class Parser {
 public:
  explicit Parser(const std::string &text) : s_(text) {}

  std::unique_ptr<Element> parse_document() {
    skip_prolog();
    auto root = parse_element();
    skip_misc();
    if (pos_ != s_.size()) fail("content after the document element");
    return root;
  }

 private:
  [[noreturn]] void fail(const std::string &msg) const {
    throw MalformedXml("line " + std::to_string(line_) + ": " + msg);
  }

  bool eof() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }

  char take() {
    if (eof()) fail("unexpected end of input");
    const char c = s_[pos_++];
    if (c == '\n') ++line_;
    return c;
  }

  void expect(char c) {
    if (eof() || peek() != c) {
      fail(std::string("expected '") + c + "'");
    }
    take();
  }

  void expect_literal(const std::string &lit) {
    for (char c : lit) expect(c);
  }

  bool try_literal(const std::string &lit) {
    if (s_.compare(pos_, lit.size(), lit) != 0) return false;
    for (size_t i = 0; i < lit.size(); ++i) take();
    return true;
  }

  void skip_ws() {
    while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) take();
  }

  void skip_comment() {
    // positioned after "<!--"
    while (!try_literal("-->")) take();
  }

  void skip_prolog() {
    skip_ws();
    if (try_literal("<?xml")) {
      while (!try_literal("?>")) take();
    }
    skip_misc();
  }

  void skip_misc() {
    while (true) {
      skip_ws();
      if (try_literal("<!--")) {
        skip_comment();
        continue;
      }
      return;
    }
  }

  std::string parse_name() {
    if (eof() || !is_name_start(peek())) fail("expected a name");
    std::string name;
    name.push_back(take());
    while (!eof() && is_name_char(peek())) name.push_back(take());
    return name;
  }

  std::string decode_entity() {
    // positioned after '&'
    std::string ent;
    while (!eof() && peek() != ';') {
      ent.push_back(take());
      if (ent.size() > 8) fail("unterminated entity");
    }
    expect(';');
    if (ent == "amp") return "&";
    if (ent == "lt") return "<";
    if (ent == "gt") return ">";
    if (ent == "quot") return "\"";
    if (ent == "apos") return "'";
    if (!ent.empty() && ent[0] == '#') {
      int code = 0;
      try {
        code = ent[1] == 'x' || ent[1] == 'X'
                   ? std::stoi(ent.substr(2), nullptr, 16)
                   : std::stoi(ent.substr(1));
      } catch (const std::exception &) {
        fail("bad numeric entity &" + ent + ";");
      }
      if (code <= 0 || code > 0x10FFFF) fail("bad code point &" + ent + ";");
      // UTF-8 encode.
      std::string out;
      if (code < 0x80) {
        out.push_back(static_cast<char>(code));
      } else if (code < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (code >> 6)));
        out.push_back(static_cast<char>(0x80 | (code & 0x3F)));
      } else if (code < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (code >> 12)));
        out.push_back(static_cast<char>(0x80 | ((code >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (code & 0x3F)));
      } else {
        out.push_back(static_cast<char>(0xF0 | (code >> 18)));
        out.push_back(static_cast<char>(0x80 | ((code >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((code >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (code & 0x3F)));
      }
      return out;
    }
    fail("unknown entity &" + ent + ";");
  }

  std::string parse_attribute_value() {
    const char quote = take();
    if (quote != '"' && quote != '\'') fail("expected a quoted value");
    std::string value;
    while (true) {
      if (eof()) fail("unterminated attribute value");
      const char c = peek();
      if (c == quote) {
        take();
        return value;
      }
      if (c == '<') fail("'<' inside attribute value");
      if (c == '&') {
        take();
        value += decode_entity();
      } else {
        value.push_back(take());
      }
    }
  }

  std::unique_ptr<Element> parse_element() {
    expect('<');
    auto elem = std::make_unique<Element>();
    elem->name = parse_name();

    while (true) {
      skip_ws();
      if (eof()) fail("unterminated start tag of " + elem->name);
      if (try_literal("/>")) return elem;
      if (peek() == '>') {
        take();
        break;
      }
      const std::string attr = parse_name();
      skip_ws();
      expect('=');
      skip_ws();
      if (!elem->attributes.emplace(attr, parse_attribute_value()).second) {
        fail("duplicate attribute " + attr + " on " + elem->name);
      }
    }

    // Content until the matching end tag.
    while (true) {
      if (eof()) fail("missing end tag of " + elem->name);
      if (peek() == '<') {
        if (try_literal("</")) {
          const std::string closing = parse_name();
          if (closing != elem->name) {
            fail("mismatched end tag: expected " + elem->name + ", got " +
                 closing);
          }
          skip_ws();
          expect('>');
          return elem;
        }
        if (try_literal("<!--")) {
          skip_comment();
          continue;
        }
        elem->children.push_back(parse_element());
      } else if (peek() == '&') {
        take();
        elem->text += decode_entity();
      } else {
        elem->text.push_back(take());
      }
    }
  }

  const std::string &s_;
  size_t pos_ = 0;
  int line_ = 1;
};

}  // namespace

std::unique_ptr<Element> parse(const std::string &text) {
  Parser parser(text);
  return parser.parse_document();
}

std::string escape_text(const std::string &raw) {
  std::string out;
  out.reserve(raw.size());
  for (char c : raw) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

std::string escape_attribute(const std::string &raw) {
  std::string out;
  out.reserve(raw.size());
  for (char c : raw) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\n': out += "&#10;"; break;
      case '\t': out += "&#9;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

}  // namespace xml
}  // namespace mixlang
