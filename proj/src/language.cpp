// src/language.cpp

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

#include "mixlang/language.hpp"

namespace mixlang {

LanguagePair::LanguagePair(std::string metalanguage_code,
                           std::string target_code)
    : meta_code_(std::move(metalanguage_code)),
      target_code_(std::move(target_code)) {
  if (meta_code_.empty() || target_code_.empty()) {
    throw ValidationError("language display codes must be non-empty");
  }
  if (meta_code_ == target_code_) {
    throw ValidationError("the two language codes must differ: " + meta_code_);
  }
}

std::optional<LanguageLabel> LanguagePair::from_code(
    const std::string &code) const {
  if (code == meta_code_) return metalanguage();
  if (code == target_code_) return target();
  return std::nullopt;
}

}  // namespace mixlang
