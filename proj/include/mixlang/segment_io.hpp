// include/mixlang/segment_io.hpp

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

#ifndef MIXLANG_SEGMENT_IO_HPP_
#define MIXLANG_SEGMENT_IO_HPP_

#include <string>
#include <vector>

#include "mixlang/error.hpp"
#include "mixlang/language.hpp"
#include "mixlang/segment.hpp"

namespace mixlang {
namespace elan {

/// One transcript TSV row: recording_id, start_s, end_s, language, text.
struct SegmentRow {
  std::string recording_id;
  Segment segment;
};

/// Renders rows as UTF-8, LF-terminated TSV without a header unless
/// `with_header`. Times are printed with millisecond precision, so the
/// round trip is the identity for millisecond-aligned segments. Text must
/// not contain tabs or newlines.
std::string export_tsv(const std::vector<SegmentRow> &rows,
                       bool with_header = false);

/// Parses transcript TSV. Rows must have exactly 5 columns and a language
/// column matching one of the configured codes; violations raise
/// FormatError with the line number. A leading header line is skipped when
/// `with_header`.
std::vector<SegmentRow> import_tsv(const std::string &text,
                                   const LanguagePair &languages = {},
                                   bool with_header = false);

void save_tsv(const std::string &path, const std::vector<SegmentRow> &rows,
              bool with_header = false);
std::vector<SegmentRow> load_tsv(const std::string &path,
                                 const LanguagePair &languages = {},
                                 bool with_header = false);

}  // namespace elan
}  // namespace mixlang

#endif  // MIXLANG_SEGMENT_IO_HPP_
