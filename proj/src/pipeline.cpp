// src/pipeline.cpp

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

#include "mixlang/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <memory>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

#include "mixlang/arpa.hpp"
#include "mixlang/ctc.hpp"
#include "mixlang/embedding.hpp"
#include "mixlang/rng.hpp"
#include "mixlang/sli.hpp"
#include "mixlang/wav.hpp"

namespace mixlang {
namespace pipeline {

namespace {

using json = nlohmann::json;

// MissingEmbedding and backend failures keep their identity; everything
// else is tagged with the stage it came from.
template <typename Fn>
auto run_stage(const std::string &stage, Fn &&fn) {
  try {
    return fn();
  } catch (const MissingEmbedding &) {
    throw;
  } catch (const StageError &) {
    throw;
  } catch (const Error &e) {
    throw StageError(stage, e.what());
  }
}

// FNV-1a; stable across platforms, unlike std::hash.
uint64_t hash_key(const std::string &s) {
  uint64_t h = 1469598103934665603ULL;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ULL;
  }
  return h;
}

ctc::LogitMatrix mock_logits(const MockAcousticSpec &spec,
                             const std::string &key) {
  const auto it = spec.transcripts.find(key);
  const NormText text = it == spec.transcripts.end()
                            ? NormText()
                            : normalize_transcript(it->second);
  const double noise_db =
      spec.noise_db ? *spec.noise_db
                    : -std::numeric_limits<double>::infinity();
  return ctc::mock_acoustic(text, spec.frames_per_symbol, noise_db,
                            derive_seed(spec.seed, hash_key(key)));
}

}  // namespace

PipelineConfig PipelineConfig::from_json(const std::string &json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error &e) {
    throw FormatError(std::string("invalid pipeline config: ") + e.what());
  }

  try {
    PipelineConfig cfg;
    if (j.contains("languages")) {
      cfg.languages =
          LanguagePair(j["languages"].at("metalanguage").get<std::string>(),
                       j["languages"].at("target").get<std::string>());
    }
    if (j.contains("vad")) {
      const auto &v = j["vad"];
      cfg.vad.frame_ms = v.value("frame_ms", cfg.vad.frame_ms);
      cfg.vad.hop_ms = v.value("hop_ms", cfg.vad.hop_ms);
      cfg.vad.energy_threshold_db =
          v.value("energy_threshold_db", cfg.vad.energy_threshold_db);
      cfg.vad.min_speech_ms = v.value("min_speech_ms", cfg.vad.min_speech_ms);
      cfg.vad.min_gap_ms = v.value("min_gap_ms", cfg.vad.min_gap_ms);
    }
    cfg.vad.validate();
    if (j.contains("vad_import")) {
      cfg.vad_import = j["vad_import"].get<std::string>();
    }
    cfg.sli_model_path = j.value("sli_model", std::string());
    cfg.embeddings_path = j.value("embeddings", std::string());
    cfg.mock_embeddings = j.value("mock_embeddings", false);
    if (j.contains("logits_dir")) {
      cfg.logits_dir = j["logits_dir"].get<std::string>();
    }
    if (j.contains("mock_acoustic")) {
      const auto &m = j["mock_acoustic"];
      MockAcousticSpec spec;
      spec.frames_per_symbol =
          m.value("frames_per_symbol", spec.frames_per_symbol);
      if (m.contains("noise_db")) spec.noise_db = m["noise_db"].get<double>();
      spec.seed = m.value("seed", spec.seed);
      if (m.contains("transcripts")) {
        for (const auto &[key, value] : m["transcripts"].items()) {
          spec.transcripts[key] = value.get<std::string>();
        }
      }
      cfg.mock_acoustic = std::move(spec);
    }
    if (j.contains("lm")) cfg.lm_path = j["lm"].get<std::string>();
    if (j.contains("fusion")) {
      const auto &f = j["fusion"];
      cfg.fusion.alpha = f.value("alpha", cfg.fusion.alpha);
      cfg.fusion.beta = f.value("beta", cfg.fusion.beta);
      cfg.fusion.beam_width = f.value("beam_width", cfg.fusion.beam_width);
    }
    if (cfg.logits_dir && cfg.mock_acoustic) {
      throw ValidationError(
          "config selects both a logits directory and the mock backend");
    }
    return cfg;
  } catch (const json::exception &e) {
    throw FormatError(std::string("invalid pipeline config: ") + e.what());
  }
}

PipelineConfig PipelineConfig::load(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return from_json(ss.str());
}

std::vector<Segment> run_pipeline(const std::string &recording_path,
                                  const PipelineConfig &cfg) {
  if (cfg.fusion.beam_width < 1) {
    throw ctc::InvalidBeamWidth("fusion beam width must be >= 1, got " +
                                std::to_string(cfg.fusion.beam_width));
  }
  const AudioBuffer audio =
      run_stage("load", [&] { return load_wav(recording_path); });

  // Detected or imported intervals; only sub-minimum intervals are dropped
  // here. Gap merging waits until language labels exist, otherwise a brief
  // pause between a target and a metalanguage utterance would be fused
  // into a mixed-language interval.
  std::vector<vad::Interval> intervals = run_stage("vad", [&] {
    std::vector<vad::Interval> raw =
        cfg.vad_import ? vad::import_intervals(*cfg.vad_import)
                       : vad::detect_speech(audio, cfg.vad);
    vad::VadConfig drop_only = cfg.vad;
    drop_only.min_gap_ms = 0.0;
    return vad::smooth_intervals(raw, drop_only);
  });

  if (intervals.empty()) return {};

  const sli::SliModel model = run_stage("sli", [&] {
    if (cfg.sli_model_path.empty() && cfg.mock_embeddings) {
      // Demo mode: a fixed separator matching the synthetic embeddings.
      sli::SliModel demo;
      demo.weights = Vec::Zero(2);
      demo.weights[0] = 4.0;
      demo.languages = cfg.languages;
      return demo;
    }
    return sli::load_model(cfg.sli_model_path);
  });
  std::vector<sli::EmbeddingVector> embeddings;
  if (cfg.mock_embeddings) {
    for (size_t i = 0; i < intervals.size(); ++i) {
      sli::EmbeddingVector v;
      v.id = std::to_string(i);
      v.values = Vec::Zero(model.dim());
      v.values[0] = 1.0;
      embeddings.push_back(std::move(v));
    }
  } else {
    embeddings = run_stage("sli", [&] {
      return sli::ingest_embeddings(cfg.embeddings_path, cfg.languages);
    });
  }
  std::unordered_map<std::string, const sli::EmbeddingVector *> by_id;
  for (const auto &e : embeddings) by_id[e.id] = &e;

  std::unique_ptr<lm::BigramLm> fusion_lm;
  if (cfg.lm_path) {
    fusion_lm = run_stage("lm", [&] {
      return std::make_unique<lm::BigramLm>(lm::load_arpa(*cfg.lm_path));
    });
  }

  std::vector<Segment> segments;
  for (size_t i = 0; i < intervals.size(); ++i) {
    const std::string key = std::to_string(i);
    const auto emb = by_id.find(key);
    if (emb == by_id.end()) {
      throw MissingEmbedding("no embedding for interval " + key + " of " +
                             recording_path);
    }
    const auto [label, probability] = run_stage(
        "sli", [&] { return sli::predict(model, *emb->second); });

    Segment seg;
    seg.start = intervals[i].start;
    seg.end = intervals[i].end;
    seg.language = label;
    if (label.is_metalanguage()) {
      const ctc::LogitMatrix logits = run_stage("asr", [&] {
        if (cfg.mock_acoustic) return mock_logits(*cfg.mock_acoustic, key);
        if (!cfg.logits_dir) {
          throw ValidationError("no acoustic backend configured");
        }
        return ctc::load_logits(*cfg.logits_dir + "/" + key + ".ctcl");
      });
      const NormText decoded = run_stage("asr", [&] {
        if (fusion_lm != nullptr || cfg.fusion.beam_width > 1) {
          return ctc::beam_decode(logits, cfg.fusion.beam_width,
                                  fusion_lm.get(), cfg.fusion.alpha,
                                  cfg.fusion.beta);
        }
        return ctc::greedy_decode(logits);
      });
      seg.text = decoded.str();
    }
    segments.push_back(std::move(seg));
  }

  // Sentence fragments: glue adjacent metalanguage segments separated by
  // less than min_gap_ms into one utterance. Alternating-language
  // neighbours are never merged.
  const double min_gap_s = cfg.vad.min_gap_ms / 1000.0;
  std::vector<Segment> merged;
  for (Segment &seg : segments) {
    if (!merged.empty() && merged.back().language->is_metalanguage() &&
        seg.language->is_metalanguage() &&
        seg.start - merged.back().end < min_gap_s) {
      Segment &prev = merged.back();
      prev.end = seg.end;
      const std::string a = prev.text.value_or("");
      const std::string b = seg.text.value_or("");
      prev.text = a.empty() ? b : (b.empty() ? a : a + " " + b);
    } else {
      merged.push_back(std::move(seg));
    }
  }
  return merged;
}

TriageReport triage_report(
    const std::vector<std::pair<std::string, std::vector<Segment>>> &segments,
    const std::map<std::string, double> &running_time_seconds) {
  TriageReport report;
  for (const auto &[recording_id, segs] : segments) {
    RecordingTriage rec;
    rec.recording_id = recording_id;
    double max_end = 0.0;
    for (const Segment &seg : segs) {
      if (!seg.language) {
        throw ValidationError("unlabelled segment in " + recording_id);
      }
      auto &tally = rec.per_language[seg.language->code()];
      tally.minutes += seg.duration() / 60.0;
      tally.utterances += 1;
      max_end = std::max(max_end, seg.end);
    }
    const auto rt = running_time_seconds.find(recording_id);
    rec.running_time_minutes =
        (rt != running_time_seconds.end() ? rt->second : max_end) / 60.0;
    report.total_running_minutes += rec.running_time_minutes;
    for (const auto &[code, tally] : rec.per_language) {
      report.totals[code].minutes += tally.minutes;
      report.totals[code].utterances += tally.utterances;
    }
    report.recordings.push_back(std::move(rec));
  }
  std::sort(report.recordings.begin(), report.recordings.end(),
            [](const RecordingTriage &a, const RecordingTriage &b) {
              return a.recording_id < b.recording_id;
            });
  return report;
}

std::string TriageReport::to_table() const {
  // Column layout mirrors a duration/utterance summary table: one row per
  // recording, one minutes+utterances pair per language, totals last.
  std::vector<std::string> codes;
  for (const auto &[code, tally] : totals) codes.push_back(code);

  auto fmt = [](double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return std::string(buf);
  };

  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> head{"Recording (mins)"};
  for (const auto &code : codes) {
    head.push_back(code + " mins");
    head.push_back(code + " utts");
  }
  rows.push_back(head);
  auto render = [&](const std::string &name, double mins,
                    const std::map<std::string, LanguageTally> &tallies) {
    std::vector<std::string> row{name + " (" + fmt(mins) + ")"};
    for (const auto &code : codes) {
      const auto it = tallies.find(code);
      row.push_back(fmt(it == tallies.end() ? 0.0 : it->second.minutes));
      row.push_back(std::to_string(
          it == tallies.end() ? 0 : it->second.utterances));
    }
    rows.push_back(std::move(row));
  };
  for (const RecordingTriage &rec : recordings) {
    render(rec.recording_id, rec.running_time_minutes, rec.per_language);
  }
  render("Total", total_running_minutes, totals);

  std::vector<size_t> widths(rows.front().size(), 0);
  for (const auto &row : rows) {
    for (size_t c = 0; c < row.size(); ++c) {
      widths[c] = std::max(widths[c], row[c].size());
    }
  }
  std::ostringstream out;
  for (const auto &row : rows) {
    for (size_t c = 0; c < row.size(); ++c) {
      if (c > 0) out << "  ";
      out << row[c];
      if (c + 1 < row.size()) {
        out << std::string(widths[c] - row[c].size(), ' ');
      }
    }
    out << "\n";
  }
  return out.str();
}

std::string TriageReport::to_json() const {
  json j;
  json recs = json::array();
  for (const RecordingTriage &rec : recordings) {
    json languages = json::object();
    for (const auto &[code, tally] : rec.per_language) {
      languages[code] = {{"minutes", tally.minutes},
                         {"utterances", tally.utterances}};
    }
    recs.push_back({{"recording_id", rec.recording_id},
                    {"running_time_minutes", rec.running_time_minutes},
                    {"languages", std::move(languages)}});
  }
  j["recordings"] = std::move(recs);
  json total_langs = json::object();
  for (const auto &[code, tally] : totals) {
    total_langs[code] = {{"minutes", tally.minutes},
                         {"utterances", tally.utterances}};
  }
  j["totals"] = {{"running_time_minutes", total_running_minutes},
                 {"languages", std::move(total_langs)}};
  return j.dump(2) + "\n";
}

}  // namespace pipeline
}  // namespace mixlang
