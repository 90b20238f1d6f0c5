// include/mixlang/wav.hpp

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

#ifndef MIXLANG_WAV_HPP_
#define MIXLANG_WAV_HPP_

#include <string>

#include "mixlang/audio.hpp"
#include "mixlang/error.hpp"

namespace mixlang {

class MalformedRiff : public FormatError {
 public:
  using FormatError::FormatError;
};
class UnsupportedFormat : public ValidationError {
 public:
  using ValidationError::ValidationError;
};
class UnsupportedSampleRate : public ValidationError {
 public:
  using ValidationError::ValidationError;
};
class UnsupportedChannels : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// Reads a RIFF/WAVE file. Accepts only 16-bit integer PCM (format tag 1),
/// mono, 16 kHz; anything else raises the matching error above. Unknown
/// chunks are skipped.
AudioBuffer load_wav(const std::string &path);

/// Writes a canonical 44-byte-header RIFF/WAVE file, 16-bit PCM
/// little-endian. load_wav(save_wav(x)) returns a sample-identical buffer.
void save_wav(const std::string &path, const AudioBuffer &audio);

}  // namespace mixlang

#endif  // MIXLANG_WAV_HPP_
