// include/mixlang/audio.hpp

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

#ifndef MIXLANG_AUDIO_HPP_
#define MIXLANG_AUDIO_HPP_

#include <cstdint>
#include <vector>

#include "mixlang/error.hpp"
#include "mixlang/segment.hpp"

namespace mixlang {

inline constexpr int kSampleRate = 16000;

/// Mono 16-bit PCM audio at 16 kHz.
struct AudioBuffer {
  std::vector<int16_t> samples;
  int sample_rate = kSampleRate;
  int channel_count = 1;

  double duration_seconds() const {
    return static_cast<double>(samples.size()) / sample_rate;
  }
};

class OutOfRange : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// Converts seconds to a sample index, rounding half up.
int64_t seconds_to_samples(double seconds, int sample_rate = kSampleRate);

/// Copies the samples of `seg` out of `audio`. Boundaries are converted
/// with seconds_to_samples. Throws OutOfRange if the segment does not fit.
AudioBuffer slice_segment(const AudioBuffer &audio, const Segment &seg);

}  // namespace mixlang

#endif  // MIXLANG_AUDIO_HPP_
