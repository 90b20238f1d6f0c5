// include/mixlang/eaf.hpp

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

#ifndef MIXLANG_EAF_HPP_
#define MIXLANG_EAF_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "mixlang/error.hpp"
#include "mixlang/language.hpp"
#include "mixlang/segment.hpp"

namespace mixlang {
namespace elan {

class OverlapWithinTier : public ValidationError {
 public:
  using ValidationError::ValidationError;
};
class DanglingTimeSlot : public FormatError {
 public:
  using FormatError::FormatError;
};

/// The EAF subset this workflow touches: ANNOTATION_DOCUMENT,
/// HEADER/MEDIA_DESCRIPTOR, TIME_ORDER/TIME_SLOT, and TIER with
/// ALIGNABLE_ANNOTATIONs. Controlled vocabularies, reference annotations
/// and tier hierarchies are ignored on read and never written.
struct EafAnnotation {
  std::string id;
  std::string start_slot;
  std::string end_slot;
  std::string value;
};

struct EafTier {
  std::string id;
  std::vector<EafAnnotation> annotations;
};

struct EafDocument {
  std::map<std::string, int64_t> time_slots;  // id -> milliseconds
  std::vector<EafTier> tiers;
  std::string media_path;
  std::string media_mime = "audio/x-wav";

  int64_t slot_ms(const std::string &slot_id) const;  // DanglingTimeSlot
};

/// Builds a document with one tier per language (tier id = display code).
/// Metalanguage annotations carry the transcript, target-language ones an
/// empty value. Segments must be sorted; same-language overlap raises
/// OverlapWithinTier. Times are stored in integer milliseconds, rounded
/// half up.
EafDocument segments_to_eaf(const std::vector<Segment> &segments,
                            const std::string &media_path,
                            const LanguagePair &languages = {});

/// Inverse of segments_to_eaf up to millisecond quantization; annotation
/// text is preserved byte for byte. Tiers whose id matches neither
/// configured language code are skipped. Output is sorted by start time.
std::vector<Segment> eaf_to_segments(const EafDocument &doc,
                                     const LanguagePair &languages = {});

/// EAF XML serialization.
std::string write_eaf(const EafDocument &doc);
EafDocument read_eaf(const std::string &xml_text);
void save_eaf(const std::string &path, const EafDocument &doc);
EafDocument load_eaf(const std::string &path);

}  // namespace elan
}  // namespace mixlang

#endif  // MIXLANG_EAF_HPP_
