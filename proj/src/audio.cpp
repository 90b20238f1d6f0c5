// src/audio.cpp

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

#include "mixlang/audio.hpp"

#include <cmath>
#include <string>

namespace mixlang {

int64_t seconds_to_samples(double seconds, int sample_rate) {
  return static_cast<int64_t>(std::floor(seconds * sample_rate + 0.5));
}

AudioBuffer slice_segment(const AudioBuffer &audio, const Segment &seg) {
  if (seg.start < 0.0 || seg.end <= seg.start) {
    throw OutOfRange("invalid segment [" + std::to_string(seg.start) + ", " +
                     std::to_string(seg.end) + ")");
  }
  const int64_t begin = seconds_to_samples(seg.start, audio.sample_rate);
  const int64_t finish = seconds_to_samples(seg.end, audio.sample_rate);
  const int64_t n = static_cast<int64_t>(audio.samples.size());
  if (finish > n || begin >= finish) {
    throw OutOfRange("segment [" + std::to_string(seg.start) + ", " +
                     std::to_string(seg.end) + ") exceeds audio of " +
                     std::to_string(audio.duration_seconds()) + " s");
  }
  AudioBuffer out;
  out.sample_rate = audio.sample_rate;
  out.channel_count = audio.channel_count;
  out.samples.assign(audio.samples.begin() + begin,
                     audio.samples.begin() + finish);
  return out;
}

}  // namespace mixlang
