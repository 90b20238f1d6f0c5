// src/text.cpp

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

#include "mixlang/text.hpp"

#include <cctype>

#include "mixlang/error.hpp"

namespace mixlang {

namespace {

bool is_vocab_char(char c) { return (c >= 'A' && c <= 'Z') || c == '\''; }

bool is_space_char(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' ||
         c == '\f';
}

}  // namespace

NormText normalize_transcript(const std::string &raw) {
  std::string out;
  out.reserve(raw.size());
  bool pending_space = false;
  for (char ch : raw) {
    char c = ch;
    if (c >= 'a' && c <= 'z') c = static_cast<char>(c - 'a' + 'A');
    if (is_space_char(c)) {
      pending_space = !out.empty();
      continue;
    }
    if (!is_vocab_char(c)) continue;  // digits, punctuation, non-ASCII
    if (pending_space) {
      out.push_back(' ');
      pending_space = false;
    }
    out.push_back(c);
  }
  return NormText(std::move(out));
}

bool is_normalized(const std::string &value) {
  char prev = ' ';
  for (char c : value) {
    if (!is_vocab_char(c) && c != ' ') return false;
    if (c == ' ' && prev == ' ') return false;  // leading or double space
    prev = c;
  }
  return value.empty() || value.back() != ' ';
}

NormText NormText::from_normalized(std::string value) {
  if (!is_normalized(value)) {
    throw ValidationError("text is not normalized: \"" + value + "\"");
  }
  NormText t;
  t.value_ = std::move(value);
  return t;
}

std::vector<std::string> NormText::words() const {
  std::vector<std::string> out;
  std::string current;
  for (char c : value_) {
    if (c == ' ') {
      out.push_back(current);
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  if (!current.empty()) out.push_back(current);
  return out;
}

}  // namespace mixlang
