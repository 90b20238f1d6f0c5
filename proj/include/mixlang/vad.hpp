// include/mixlang/vad.hpp

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

#ifndef MIXLANG_VAD_HPP_
#define MIXLANG_VAD_HPP_

#include <string>
#include <vector>

#include "mixlang/audio.hpp"
#include "mixlang/error.hpp"
#include "mixlang/types.hpp"

namespace mixlang {
namespace vad {

struct VadConfig {
  double frame_ms = 30.0;
  double hop_ms = 10.0;
  // Speech threshold in dB over the recording's noise floor (the 20th
  // percentile of frame energies). The threshold is purely relative, which
  // keeps detection invariant to the overall gain of archival tapes.
  double energy_threshold_db = 6.0;
  double min_speech_ms = 200.0;
  double min_gap_ms = 300.0;

  /// Throws ValidationError unless frame_ms >= hop_ms > 0 and the
  /// duration limits are non-negative.
  void validate() const;
};

struct Interval {
  double start = 0.0;  // seconds
  double end = 0.0;    // seconds

  double duration() const { return end - start; }
  friend bool operator==(const Interval &, const Interval &) = default;
};

class EmptyAudio : public ValidationError {
 public:
  using ValidationError::ValidationError;
};
class UnsortedInput : public ValidationError {
 public:
  using ValidationError::ValidationError;
};
class InvalidInterval : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// Per-frame energies in dB: 10*log10(mean squared sample value), with
/// all-zero frames pinned to a floor well below any nonzero frame.
Vec frame_energies_db(const AudioBuffer &audio, const VadConfig &cfg);

/// Energy-based speech detection. Frames whose energy exceeds the noise
/// floor (20th-percentile frame energy) by cfg.energy_threshold_db are
/// speech; runs of speech frames become intervals. A recording whose
/// dynamic range is below the threshold is homogeneous: all speech if it
/// has signal, empty if it is digital silence. Output is sorted and
/// non-overlapping; no smoothing is applied.
std::vector<Interval> detect_speech(const AudioBuffer &audio,
                                    const VadConfig &cfg);

/// Merges adjacent intervals whose gap is shorter than cfg.min_gap_ms,
/// then drops intervals shorter than cfg.min_speech_ms. Input must be
/// sorted and non-overlapping (UnsortedInput otherwise). Idempotent.
std::vector<Interval> smooth_intervals(const std::vector<Interval> &raw,
                                       const VadConfig &cfg);

/// Parses a two-column TSV (start_seconds, end_seconds; no header) as
/// produced by external segmenters. Lines with end <= start raise
/// InvalidInterval; unparsable lines raise FormatError. Output is sorted
/// by start time.
std::vector<Interval> import_intervals(const std::string &path);

}  // namespace vad
}  // namespace mixlang

#endif  // MIXLANG_VAD_HPP_
