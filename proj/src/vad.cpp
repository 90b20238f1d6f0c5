// src/vad.cpp

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

#include "mixlang/vad.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace mixlang {
namespace vad {

namespace {

// Pinned energy of an all-zero frame; any frame containing a nonzero
// 16-bit sample scores at least 10*log10(1/frame_len) ~ -30 dB.
constexpr double kSilenceFloorDb = -400.0;
constexpr double kNoiseFloorQuantile = 0.20;

double quantile(std::vector<double> sorted_values, double q) {
  const auto n = sorted_values.size();
  const double pos = q * static_cast<double>(n - 1);
  const size_t lo = static_cast<size_t>(pos);
  const size_t hi = std::min(lo + 1, n - 1);
  const double frac = pos - static_cast<double>(lo);
  return sorted_values[lo] * (1.0 - frac) + sorted_values[hi] * frac;
}

}  // namespace

void VadConfig::validate() const {
  if (!(hop_ms > 0.0) || frame_ms < hop_ms) {
    throw ValidationError("VAD frames require frame_ms >= hop_ms > 0");
  }
  if (min_speech_ms < 0.0 || min_gap_ms < 0.0) {
    throw ValidationError("VAD duration limits must be non-negative");
  }
}

Vec frame_energies_db(const AudioBuffer &audio, const VadConfig &cfg) {
  cfg.validate();
  const int64_t n = static_cast<int64_t>(audio.samples.size());
  const int64_t frame_len = std::max<int64_t>(
      1, seconds_to_samples(cfg.frame_ms / 1000.0, audio.sample_rate));
  const int64_t hop = std::max<int64_t>(
      1, seconds_to_samples(cfg.hop_ms / 1000.0, audio.sample_rate));

  // Audio shorter than one frame is treated as a single whole-signal frame.
  const int64_t num_frames = n < frame_len ? 1 : (n - frame_len) / hop + 1;
  Vec energies(num_frames);
  for (int64_t i = 0; i < num_frames; ++i) {
    const int64_t begin = i * hop;
    const int64_t len = std::min(frame_len, n - begin);
    double sum_sq = 0.0;
    for (int64_t j = begin; j < begin + len; ++j) {
      const double s = audio.samples[j];
      sum_sq += s * s;
    }
    const double mean_sq = sum_sq / static_cast<double>(len);
    energies[i] =
        mean_sq > 0.0 ? 10.0 * std::log10(mean_sq) : kSilenceFloorDb;
  }
  return energies;
}

std::vector<Interval> detect_speech(const AudioBuffer &audio,
                                    const VadConfig &cfg) {
  cfg.validate();
  if (audio.samples.empty()) throw EmptyAudio("empty audio buffer");

  const Vec energies = frame_energies_db(audio, cfg);
  std::vector<double> sorted(energies.begin(), energies.end());
  std::sort(sorted.begin(), sorted.end());
  const double floor_db = quantile(sorted, kNoiseFloorQuantile);
  const double max_db = sorted.back();

  // Homogeneous recording: the dynamic range cannot separate speech from
  // background, so the whole buffer is either signal or digital silence.
  if (max_db - floor_db <= cfg.energy_threshold_db) {
    if (max_db <= kSilenceFloorDb) return {};
    return {{0.0, audio.duration_seconds()}};
  }

  const double threshold_db = floor_db + cfg.energy_threshold_db;
  const int64_t frame_len = std::max<int64_t>(
      1, seconds_to_samples(cfg.frame_ms / 1000.0, audio.sample_rate));
  const int64_t hop = std::max<int64_t>(
      1, seconds_to_samples(cfg.hop_ms / 1000.0, audio.sample_rate));
  const int64_t n = static_cast<int64_t>(audio.samples.size());

  std::vector<Interval> out;
  for (int64_t i = 0; i < energies.size(); ++i) {
    if (energies[i] <= threshold_db) continue;
    const double begin =
        static_cast<double>(i * hop) / audio.sample_rate;
    const double finish =
        static_cast<double>(std::min(i * hop + frame_len, n)) /
        audio.sample_rate;
    if (!out.empty() && begin <= out.back().end) {
      out.back().end = std::max(out.back().end, finish);
    } else {
      out.push_back({begin, finish});
    }
  }
  return out;
}

std::vector<Interval> smooth_intervals(const std::vector<Interval> &raw,
                                       const VadConfig &cfg) {
  cfg.validate();
  for (size_t i = 0; i < raw.size(); ++i) {
    if (raw[i].end <= raw[i].start) {
      throw InvalidInterval("interval " + std::to_string(i) +
                            " has end <= start");
    }
    if (i > 0 && raw[i].start < raw[i - 1].end) {
      throw UnsortedInput("intervals must be sorted and non-overlapping");
    }
  }

  const double min_gap_s = cfg.min_gap_ms / 1000.0;
  const double min_speech_s = cfg.min_speech_ms / 1000.0;

  std::vector<Interval> merged;
  for (const Interval &iv : raw) {
    if (!merged.empty() && iv.start - merged.back().end < min_gap_s) {
      merged.back().end = iv.end;
    } else {
      merged.push_back(iv);
    }
  }

  std::vector<Interval> out;
  for (const Interval &iv : merged) {
    if (iv.duration() >= min_speech_s) out.push_back(iv);
  }
  return out;
}

std::vector<Interval> import_intervals(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);

  std::vector<Interval> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos) {
      throw FormatError(path + ":" + std::to_string(lineno) +
                        ": expected two tab-separated columns");
    }
    Interval iv;
    try {
      size_t used = 0;
      iv.start = std::stod(line.substr(0, tab), &used);
      if (used != tab) throw std::invalid_argument(line);
      const std::string rest = line.substr(tab + 1);
      iv.end = std::stod(rest, &used);
      if (used != rest.size()) throw std::invalid_argument(line);
    } catch (const std::exception &) {
      throw FormatError(path + ":" + std::to_string(lineno) +
                        ": cannot parse interval line \"" + line + "\"");
    }
    if (iv.start < 0.0 || iv.end <= iv.start) {
      throw InvalidInterval(path + ":" + std::to_string(lineno) +
                            ": end must exceed start");
    }
    out.push_back(iv);
  }
  std::sort(out.begin(), out.end(), [](const Interval &a, const Interval &b) {
    return a.start != b.start ? a.start < b.start : a.end < b.end;
  });
  return out;
}

}  // namespace vad
}  // namespace mixlang
