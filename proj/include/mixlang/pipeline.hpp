// include/mixlang/pipeline.hpp

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

#ifndef MIXLANG_PIPELINE_HPP_
#define MIXLANG_PIPELINE_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mixlang/error.hpp"
#include "mixlang/language.hpp"
#include "mixlang/segment.hpp"
#include "mixlang/vad.hpp"

namespace mixlang {
namespace pipeline {

class MissingEmbedding : public ValidationError {
 public:
  using ValidationError::ValidationError;
};
class StageError : public Error {
 public:
  StageError(const std::string &stage, const std::string &msg)
      : Error(stage + ": " + msg), stage_(stage) {}
  const std::string &stage() const { return stage_; }

 private:
  std::string stage_;
};

/// Deterministic mock acoustic source: per-interval transcripts rendered
/// by the mock backend, for demos and end-to-end tests.
struct MockAcousticSpec {
  int frames_per_symbol = 4;
  // Noise in dB; absent means noiseless.
  std::optional<double> noise_db;
  uint64_t seed = 0;
  // Interval index (post-smoothing, as decimal string) -> transcript.
  std::map<std::string, std::string> transcripts;
};

struct FusionConfig {
  double alpha = 0.5;
  double beta = 1.0;
  int beam_width = 25;
};

struct PipelineConfig {
  LanguagePair languages;
  vad::VadConfig vad;
  // When set, external segmentation takes precedence over the energy VAD.
  std::optional<std::string> vad_import;
  std::string sli_model_path;
  // TSV of embeddings keyed by the post-smoothing interval index.
  std::string embeddings_path;
  // Demo mode: every interval gets a synthetic metalanguage embedding and,
  // if no model file is given, a built-in separating model.
  bool mock_embeddings = false;
  // Directory of <index>.ctcl logit files, or a mock spec.
  std::optional<std::string> logits_dir;
  std::optional<MockAcousticSpec> mock_acoustic;
  std::optional<std::string> lm_path;
  FusionConfig fusion;

  static PipelineConfig from_json(const std::string &json_text);
  static PipelineConfig load(const std::string &path);
};

/// Runs VAD (or interval import), drops sub-minimum intervals, labels each
/// interval with the SLI model using its sidecar embedding, decodes the
/// metalanguage intervals, and merges adjacent metalanguage segments whose
/// gap is below vad.min_gap_ms, joining their texts with a single space.
/// Neighbors of different languages are never merged, so language
/// alternation always survives. Output is sorted and non-overlapping.
std::vector<Segment> run_pipeline(const std::string &recording_path,
                                  const PipelineConfig &cfg);

struct LanguageTally {
  double minutes = 0.0;
  int64_t utterances = 0;
};

struct RecordingTriage {
  std::string recording_id;
  double running_time_minutes = 0.0;
  std::map<std::string, LanguageTally> per_language;  // key: display code
};

/// Per-recording speech minutes and utterance counts per language, plus
/// grand totals; the shape of an access-triage summary table.
struct TriageReport {
  std::vector<RecordingTriage> recordings;
  double total_running_minutes = 0.0;
  std::map<std::string, LanguageTally> totals;

  /// Aligned text table, one row per recording plus a totals row.
  std::string to_table() const;
  std::string to_json() const;
};

TriageReport triage_report(
    const std::vector<std::pair<std::string, std::vector<Segment>>> &segments,
    const std::map<std::string, double> &running_time_seconds);

}  // namespace pipeline
}  // namespace mixlang

#endif  // MIXLANG_PIPELINE_HPP_
