// include/mixlang/xml.hpp

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

#ifndef MIXLANG_XML_HPP_
#define MIXLANG_XML_HPP_

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "mixlang/error.hpp"

namespace mixlang {
namespace xml {

class MalformedXml : public FormatError {
 public:
  using FormatError::FormatError;
};

/// Element tree of the XML subset EAF files use: declaration, comments,
/// elements with attributes, character data with the five standard
/// entities plus numeric references. No namespaces, CDATA or DTDs.
struct Element {
  std::string name;
  std::map<std::string, std::string> attributes;
  std::vector<std::unique_ptr<Element>> children;
  std::string text;  // concatenated character data directly inside

  const std::string &attribute(const std::string &key) const;
  const Element *find_child(const std::string &name) const;
  std::vector<const Element *> find_children(const std::string &name) const;
};

/// Parses a document and returns its root element.
/// Throws MalformedXml with a line number on structural errors.
std::unique_ptr<Element> parse(const std::string &text);

std::string escape_text(const std::string &raw);
std::string escape_attribute(const std::string &raw);

}  // namespace xml
}  // namespace mixlang

#endif  // MIXLANG_XML_HPP_
