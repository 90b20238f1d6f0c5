// include/mixlang/segment.hpp

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

#ifndef MIXLANG_SEGMENT_HPP_
#define MIXLANG_SEGMENT_HPP_

#include <optional>
#include <string>

#include "mixlang/language.hpp"
#include "mixlang/text.hpp"

namespace mixlang {

/// A time interval of a recording, optionally labelled with a language
/// and a transcript. Target-language segments carry no text; their blank
/// annotations mark regions for later community transcription.
///
/// `text` holds transcript bytes exactly as produced: machine output is
/// always normalized, human corrections re-imported from ELAN may carry
/// case and punctuation and are preserved verbatim. Text is normalized
/// with normalize_transcript only when it enters evaluation.
struct Segment {
  double start = 0.0;  // seconds
  double end = 0.0;    // seconds
  std::optional<LanguageLabel> language;
  std::optional<std::string> text;

  double duration() const { return end - start; }
};

}  // namespace mixlang

#endif  // MIXLANG_SEGMENT_HPP_
