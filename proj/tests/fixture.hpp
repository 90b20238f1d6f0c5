// tests/fixture.hpp

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

// Synthetic end-to-end fixtures with known ground truth.

#ifndef MIXLANG_TESTS_FIXTURE_HPP_
#define MIXLANG_TESTS_FIXTURE_HPP_

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "mixlang/sli.hpp"
#include "mixlang/wav.hpp"
#include "test_util.hpp"

namespace mixlang {
namespace testing {

struct BurstSpec {
  double start;             // seconds, frame-aligned in the fixture config
  double end;               // seconds
  bool metalanguage;        // embedding planted as eng or zmu
  std::string transcript;   // mock transcript for metalanguage bursts
};

struct PipelineFixture {
  std::string wav_path;
  std::string config_path;
  std::string embeddings_path;
  std::string model_path;
  std::vector<BurstSpec> bursts;
  double duration_s = 5.0;
};

/// Writes a tone-burst recording plus the sidecar files run_pipeline
/// needs: planted embeddings (+x for eng, -x for zmu), a fixed separating
/// SLI model, and a mock-acoustic config keyed by interval index. VAD runs
/// on non-overlapping 10 ms frames so detected boundaries land exactly on
/// the frame-aligned burst edges.
inline PipelineFixture make_pipeline_fixture(const TempDir &dir,
                                             const std::vector<BurstSpec> &bursts,
                                             double duration_s = 5.0,
                                             double min_gap_ms = 300.0) {
  PipelineFixture fx;
  fx.bursts = bursts;
  fx.duration_s = duration_s;

  // Audio: 440 Hz tone bursts at amplitude 8000 over digital silence.
  AudioBuffer audio;
  audio.samples.assign(static_cast<size_t>(duration_s * kSampleRate), 0);
  for (const BurstSpec &burst : bursts) {
    const auto begin = static_cast<size_t>(burst.start * kSampleRate);
    const auto finish = static_cast<size_t>(burst.end * kSampleRate);
    for (size_t i = begin; i < finish; ++i) {
      audio.samples[i] = static_cast<int16_t>(
          8000.0 * std::sin(2.0 * 3.14159265358979 * 440.0 * i / kSampleRate));
    }
  }
  fx.wav_path = dir.file("recording.wav");
  save_wav(fx.wav_path, audio);

  // Embeddings keyed by interval index: +e1 metalanguage, -e1 target.
  std::ostringstream embeddings;
  for (size_t i = 0; i < bursts.size(); ++i) {
    embeddings << i << "\t\t" << (bursts[i].metalanguage ? "1.0" : "-1.0")
               << "\t0.0\n";
  }
  fx.embeddings_path = dir.file("embeddings.tsv");
  write_file(fx.embeddings_path, embeddings.str());

  // A fixed separating model; no training needed for the fixture.
  sli::SliModel model;
  model.weights = Vec::Zero(2);
  model.weights[0] = 4.0;
  fx.model_path = dir.file("sli.json");
  sli::save_model(fx.model_path, model);

  std::ostringstream transcripts;
  bool first = true;
  for (size_t i = 0; i < bursts.size(); ++i) {
    if (!bursts[i].metalanguage) continue;
    if (!first) transcripts << ", ";
    transcripts << "\"" << i << "\": \"" << bursts[i].transcript << "\"";
    first = false;
  }

  std::ostringstream config;
  config << "{\n"
         << "  \"languages\": {\"metalanguage\": \"eng\", \"target\": "
            "\"zmu\"},\n"
         << "  \"vad\": {\"frame_ms\": 10, \"hop_ms\": 10, "
            "\"energy_threshold_db\": 6, \"min_speech_ms\": 50, "
            "\"min_gap_ms\": "
         << min_gap_ms << "},\n"
         << "  \"sli_model\": \"" << fx.model_path << "\",\n"
         << "  \"embeddings\": \"" << fx.embeddings_path << "\",\n"
         << "  \"mock_acoustic\": {\"frames_per_symbol\": 4, \"seed\": 1, "
            "\"transcripts\": {"
         << transcripts.str() << "}},\n"
         << "  \"fusion\": {\"beam_width\": 1}\n"
         << "}\n";
  fx.config_path = dir.file("config.json");
  write_file(fx.config_path, config.str());
  return fx;
}

/// The canonical three-burst recording: eng "HELLO", zmu, eng "WORLD",
/// separated by gaps wider than min_gap_ms.
inline PipelineFixture make_three_burst_fixture(const TempDir &dir) {
  return make_pipeline_fixture(dir, {{0.5, 1.5, true, "HELLO"},
                                     {2.0, 3.0, false, ""},
                                     {3.5, 4.5, true, "WORLD"}});
}

}  // namespace testing
}  // namespace mixlang

#endif  // MIXLANG_TESTS_FIXTURE_HPP_
