// include/mixlang/text.hpp

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

#ifndef MIXLANG_TEXT_HPP_
#define MIXLANG_TEXT_HPP_

#include <string>
#include <vector>

namespace mixlang {

/// Transcript text over the fixed 27-character vocabulary (A-Z and
/// apostrophe) plus the word separator. Invariants: every character is
/// one of A-Z, apostrophe or space; no leading, trailing or double spaces.
class NormText {
 public:
  NormText() = default;

  /// Wraps a string that already satisfies the invariants.
  /// Throws ValidationError otherwise.
  static NormText from_normalized(std::string value);

  const std::string &str() const { return value_; }
  bool empty() const { return value_.empty(); }

  /// Space-separated words. Empty text yields an empty list.
  std::vector<std::string> words() const;

  friend bool operator==(const NormText &, const NormText &) = default;

 private:
  friend NormText normalize_transcript(const std::string &raw);
  explicit NormText(std::string value) : value_(std::move(value)) {}

  std::string value_;
};

/// Uppercases a-z, deletes every character outside {A-Z, apostrophe,
/// whitespace}, collapses whitespace runs to single spaces and trims.
/// Idempotent; empty input yields empty text.
NormText normalize_transcript(const std::string &raw);

/// True iff `value` satisfies the NormText invariants as-is.
bool is_normalized(const std::string &value);

}  // namespace mixlang

#endif  // MIXLANG_TEXT_HPP_
