// include/mixlang/language.hpp

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

#ifndef MIXLANG_LANGUAGE_HPP_
#define MIXLANG_LANGUAGE_HPP_

#include <optional>
#include <string>

#include "mixlang/error.hpp"

namespace mixlang {

/// A project deals with exactly two languages: the metalanguage carrying
/// commentary (transcribed) and the target language being documented
/// (left blank).
enum class LanguageKind { kMetalanguage, kTarget };

class LanguageLabel {
 public:
  LanguageLabel(LanguageKind kind, std::string code)
      : kind_(kind), code_(std::move(code)) {}

  LanguageKind kind() const { return kind_; }
  const std::string &code() const { return code_; }
  bool is_metalanguage() const { return kind_ == LanguageKind::kMetalanguage; }

  // Labels compare by role, not by display code.
  friend bool operator==(const LanguageLabel &a, const LanguageLabel &b) {
    return a.kind_ == b.kind_;
  }

 private:
  LanguageKind kind_;
  std::string code_;
};

/// The two labels of a project plus their display codes.
class LanguagePair {
 public:
  LanguagePair() : LanguagePair("eng", "zmu") {}
  LanguagePair(std::string metalanguage_code, std::string target_code);

  LanguageLabel metalanguage() const {
    return {LanguageKind::kMetalanguage, meta_code_};
  }
  LanguageLabel target() const { return {LanguageKind::kTarget, target_code_}; }

  const std::string &metalanguage_code() const { return meta_code_; }
  const std::string &target_code() const { return target_code_; }

  /// Resolves a display code to its label; nullopt if the code matches
  /// neither language.
  std::optional<LanguageLabel> from_code(const std::string &code) const;

 private:
  std::string meta_code_;
  std::string target_code_;
};

}  // namespace mixlang

#endif  // MIXLANG_LANGUAGE_HPP_
