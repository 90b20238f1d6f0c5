// src/cli.cpp

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

#include "mixlang/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mixlang/rng.hpp"

#include "mixlang/arpa.hpp"
#include "mixlang/bigram.hpp"
#include "mixlang/ctc.hpp"
#include "mixlang/eaf.hpp"
#include "mixlang/embedding.hpp"
#include "mixlang/eval.hpp"
#include "mixlang/pipeline.hpp"
#include "mixlang/segment_io.hpp"
#include "mixlang/sli.hpp"
#include "mixlang/vad.hpp"
#include "mixlang/wav.hpp"

namespace mixlang {

namespace {

namespace fs = std::filesystem;

void write_output(const std::optional<std::string> &path,
                  const std::string &content) {
  if (!path) {
    std::cout << content;
    return;
  }
  std::ofstream out(*path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + *path);
  out << content;
  if (!out) throw IoError("write failed: " + *path);
}

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string stem_of(const std::string &path) {
  return fs::path(path).stem().string();
}

std::string format_seconds(double seconds) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", seconds);
  return buf;
}

std::vector<NormText> read_sentences(const std::string &path) {
  std::istringstream in(read_file(path));
  std::vector<NormText> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    NormText t = normalize_transcript(line);
    if (!t.empty()) out.push_back(std::move(t));
  }
  return out;
}

struct LanguageFlags {
  std::string meta_code = "eng";
  std::string target_code = "zmu";

  void attach(CLI::App *cmd) {
    cmd->add_option("--meta-code", meta_code,
                    "Display code of the metalanguage");
    cmd->add_option("--target-code", target_code,
                    "Display code of the target language");
  }
  LanguagePair pair() const { return {meta_code, target_code}; }
};

struct FusionFlags {
  std::optional<std::string> lm_path;
  double alpha = 0.5;
  double beta = 1.0;
  int beam_width = 25;

  void attach(CLI::App *cmd) {
    cmd->add_option("--lm", lm_path, "ARPA language model for shallow fusion");
    cmd->add_option("--alpha", alpha, "LM weight at word boundaries");
    cmd->add_option("--beta", beta, "Word insertion bonus");
    cmd->add_option("--beam-width", beam_width, "Beam width");
  }
};

int dispatch(CLI::App &app, int argc, const char *const *argv);

}  // namespace

int cli_main(int argc, const char *const *argv) {
  CLI::App app{
      "Triage and transcription workflow for mixed-language recordings: "
      "voice activity detection, few-shot language identification, CTC "
      "decoding, and ELAN interchange."};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::help);

  try {
    return dispatch(app, argc, argv);
  } catch (const CLI::ParseError &e) {
    // CallForHelp lands here too; CLI11 prints the message.
    return app.exit(e) == 0 ? 0 : 1;
  } catch (const IoError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

namespace {

int dispatch(CLI::App &app, int argc, const char *const *argv) {
  // ---- segment ----
  auto *segment = app.add_subcommand(
      "segment", "Detect speech intervals in a recording");
  std::string seg_audio;
  std::optional<std::string> seg_import, seg_out;
  vad::VadConfig seg_cfg;
  segment->add_option("--audio", seg_audio, "16 kHz mono WAV file")
      ->required();
  segment->add_option("--vad-import", seg_import,
                      "Use externally produced intervals (TSV) instead of "
                      "the energy detector");
  segment->add_option("--frame-ms", seg_cfg.frame_ms, "Frame length");
  segment->add_option("--hop-ms", seg_cfg.hop_ms, "Frame hop");
  segment->add_option("--threshold-db", seg_cfg.energy_threshold_db,
                      "Speech threshold over the noise floor");
  segment->add_option("--min-speech-ms", seg_cfg.min_speech_ms,
                      "Drop intervals shorter than this");
  segment->add_option("--min-gap-ms", seg_cfg.min_gap_ms,
                      "Merge gaps shorter than this");
  segment->add_option("--out", seg_out, "Output TSV (default stdout)");
  segment->callback([&] {
    const AudioBuffer audio = load_wav(seg_audio);
    std::vector<vad::Interval> intervals =
        seg_import ? vad::import_intervals(*seg_import)
                   : vad::detect_speech(audio, seg_cfg);
    intervals = vad::smooth_intervals(intervals, seg_cfg);
    std::ostringstream out;
    for (const auto &iv : intervals) {
      out << format_seconds(iv.start) << '\t' << format_seconds(iv.end)
          << '\n';
    }
    write_output(seg_out, out.str());
  });

  // ---- identify ----
  auto *identify = app.add_subcommand(
      "identify", "Label utterance embeddings with a trained SLI model");
  std::string id_embeddings, id_model;
  std::optional<std::string> id_out;
  LanguageFlags id_langs;
  identify->add_option("--embeddings", id_embeddings, "Embedding TSV")
      ->required();
  identify->add_option("--model", id_model, "SLI model JSON")->required();
  identify->add_option("--out", id_out, "Output TSV (default stdout)");
  id_langs.attach(identify);
  identify->callback([&] {
    const sli::SliModel model = sli::load_model(id_model);
    const auto embeddings =
        sli::ingest_embeddings(id_embeddings, id_langs.pair());
    std::ostringstream out;
    for (const auto &e : embeddings) {
      const auto [label, probability] = sli::predict(model, e);
      char buf[32];
      std::snprintf(buf, sizeof(buf), "%.6f", probability);
      out << e.id << '\t' << label.code() << '\t' << buf << '\n';
    }
    write_output(id_out, out.str());
  });

  // ---- transcribe ----
  auto *transcribe = app.add_subcommand(
      "transcribe", "Decode CTC logit files to text");
  std::optional<std::string> tr_file, tr_dir, tr_out;
  FusionFlags tr_fusion;
  bool tr_greedy = false;
  transcribe->add_option("--logits", tr_file, "One .ctcl logit file");
  transcribe->add_option("--logits-dir", tr_dir,
                         "Directory of <id>.ctcl files");
  transcribe->add_flag("--greedy", tr_greedy,
                       "Greedy decoding instead of beam search");
  tr_fusion.attach(transcribe);
  transcribe->add_option("--out", tr_out, "Output (default stdout)");
  transcribe->callback([&] {
    if (tr_file.has_value() == tr_dir.has_value()) {
      throw ValidationError("pass exactly one of --logits or --logits-dir");
    }
    std::unique_ptr<lm::BigramLm> fusion_lm;
    if (tr_fusion.lm_path) {
      fusion_lm =
          std::make_unique<lm::BigramLm>(lm::load_arpa(*tr_fusion.lm_path));
    }
    auto decode = [&](const ctc::LogitMatrix &logits) {
      if (tr_greedy) return ctc::greedy_decode(logits);
      return ctc::beam_decode(logits, tr_fusion.beam_width, fusion_lm.get(),
                              tr_fusion.alpha, tr_fusion.beta);
    };
    std::ostringstream out;
    if (tr_file) {
      out << decode(ctc::load_logits(*tr_file)).str() << '\n';
    } else {
      std::vector<fs::path> files;
      for (const auto &entry : fs::directory_iterator(*tr_dir)) {
        if (entry.path().extension() == ".ctcl") {
          files.push_back(entry.path());
        }
      }
      std::sort(files.begin(), files.end());
      for (const auto &file : files) {
        out << file.stem().string() << '\t'
            << decode(ctc::load_logits(file.string())).str() << '\n';
      }
    }
    write_output(tr_out, out.str());
  });

  // ---- run ----
  auto *run = app.add_subcommand(
      "run", "Full workflow: VAD, SLI, ASR, EAF output");
  std::string run_audio, run_config, run_eaf;
  std::optional<std::string> run_segments_out, run_id;
  // Flags override the matching config fields.
  std::optional<std::string> run_vad_import, run_sli_model, run_embeddings;
  std::optional<std::string> run_logits_dir, run_lm;
  std::optional<double> run_alpha, run_beta;
  std::optional<int> run_beam_width;
  bool run_mock = false;
  run->add_option("--audio", run_audio, "16 kHz mono WAV file")->required();
  run->add_option("--config", run_config, "Pipeline config JSON")->required();
  run->add_option("--out", run_eaf, "Output EAF path")->required();
  run->add_option("--segments-out", run_segments_out,
                  "Also write the segment TSV");
  run->add_option("--recording-id", run_id,
                  "Recording id for TSV rows (default: audio file stem)");
  run->add_option("--vad-import", run_vad_import,
                  "Override: externally produced intervals TSV");
  run->add_option("--sli-model", run_sli_model, "Override: SLI model JSON");
  run->add_option("--embeddings", run_embeddings,
                  "Override: embedding TSV keyed by interval index");
  run->add_option("--logits-dir", run_logits_dir,
                  "Override: directory of <index>.ctcl files");
  run->add_option("--lm", run_lm, "Override: ARPA language model");
  run->add_option("--alpha", run_alpha, "Override: LM fusion weight");
  run->add_option("--beta", run_beta, "Override: word insertion bonus");
  run->add_option("--beam-width", run_beam_width, "Override: beam width");
  run->add_flag("--mock", run_mock,
                "Demo mode: synthetic embeddings and, unless configured "
                "otherwise, the mock acoustic backend");
  run->callback([&] {
    pipeline::PipelineConfig cfg = pipeline::PipelineConfig::load(run_config);
    if (run_vad_import) cfg.vad_import = run_vad_import;
    if (run_sli_model) cfg.sli_model_path = *run_sli_model;
    if (run_embeddings) cfg.embeddings_path = *run_embeddings;
    if (run_logits_dir) {
      cfg.logits_dir = run_logits_dir;
      cfg.mock_acoustic.reset();
    }
    if (run_lm) cfg.lm_path = run_lm;
    if (run_alpha) cfg.fusion.alpha = *run_alpha;
    if (run_beta) cfg.fusion.beta = *run_beta;
    if (run_beam_width) cfg.fusion.beam_width = *run_beam_width;
    if (run_mock) {
      cfg.mock_embeddings = true;
      if (!cfg.logits_dir && !cfg.mock_acoustic) {
        cfg.mock_acoustic.emplace();
      }
    }
    const std::vector<Segment> segments = pipeline::run_pipeline(run_audio, cfg);
    const elan::EafDocument doc =
        elan::segments_to_eaf(segments, run_audio, cfg.languages);
    elan::save_eaf(run_eaf, doc);
    if (run_segments_out) {
      std::vector<elan::SegmentRow> rows;
      const std::string rec_id = run_id ? *run_id : stem_of(run_audio);
      for (const Segment &seg : segments) rows.push_back({rec_id, seg});
      elan::save_tsv(*run_segments_out, rows);
    }
  });

  // ---- export-eaf ----
  auto *export_eaf = app.add_subcommand(
      "export-eaf", "Convert a segment TSV into an EAF document");
  std::string ee_segments, ee_media, ee_out;
  LanguageFlags ee_langs;
  export_eaf->add_option("--segments", ee_segments, "Segment TSV")->required();
  export_eaf->add_option("--media", ee_media, "Media file referenced by the "
                                              "EAF header")->required();
  export_eaf->add_option("--out", ee_out, "Output EAF path")->required();
  ee_langs.attach(export_eaf);
  export_eaf->callback([&] {
    const auto rows = elan::load_tsv(ee_segments, ee_langs.pair());
    std::vector<Segment> segments;
    for (const auto &row : rows) segments.push_back(row.segment);
    std::sort(segments.begin(), segments.end(),
              [](const Segment &a, const Segment &b) {
                return a.start != b.start ? a.start < b.start : a.end < b.end;
              });
    elan::save_eaf(ee_out,
                   elan::segments_to_eaf(segments, ee_media, ee_langs.pair()));
  });

  // ---- import-eaf ----
  auto *import_eaf = app.add_subcommand(
      "import-eaf", "Convert an EAF document into a segment TSV");
  std::string ie_eaf;
  std::optional<std::string> ie_out, ie_id;
  LanguageFlags ie_langs;
  import_eaf->add_option("--eaf", ie_eaf, "EAF file")->required();
  import_eaf->add_option("--out", ie_out, "Output TSV (default stdout)");
  import_eaf->add_option("--recording-id", ie_id,
                         "Recording id column (default: EAF file stem)");
  ie_langs.attach(import_eaf);
  import_eaf->callback([&] {
    const auto doc = elan::load_eaf(ie_eaf);
    const auto segments = elan::eaf_to_segments(doc, ie_langs.pair());
    std::vector<elan::SegmentRow> rows;
    const std::string rec_id = ie_id ? *ie_id : stem_of(ie_eaf);
    for (const Segment &seg : segments) rows.push_back({rec_id, seg});
    write_output(ie_out, elan::export_tsv(rows));
  });

  // ---- export-tsv ----
  auto *export_tsv = app.add_subcommand(
      "export-tsv",
      "Extract transcript rows (metalanguage only by default) from an EAF");
  std::string et_eaf;
  std::optional<std::string> et_out, et_id;
  bool et_all = false, et_header = false;
  LanguageFlags et_langs;
  export_tsv->add_option("--eaf", et_eaf, "EAF file")->required();
  export_tsv->add_option("--out", et_out, "Output TSV (default stdout)");
  export_tsv->add_option("--recording-id", et_id,
                         "Recording id column (default: EAF file stem)");
  export_tsv->add_flag("--all", et_all, "Include target-language rows");
  export_tsv->add_flag("--header", et_header, "Write a header line");
  et_langs.attach(export_tsv);
  export_tsv->callback([&] {
    const auto doc = elan::load_eaf(et_eaf);
    const auto segments = elan::eaf_to_segments(doc, et_langs.pair());
    std::vector<elan::SegmentRow> rows;
    const std::string rec_id = et_id ? *et_id : stem_of(et_eaf);
    for (const Segment &seg : segments) {
      if (!et_all && !seg.language->is_metalanguage()) continue;
      rows.push_back({rec_id, seg});
    }
    write_output(et_out, elan::export_tsv(rows, et_header));
  });

  // ---- train-sli ----
  auto *train_sli = app.add_subcommand(
      "train-sli", "Train the logistic-regression SLI classifier");
  std::string ts_embeddings, ts_out;
  double ts_lambda = 0.1;
  uint64_t ts_seed = 0;
  LanguageFlags ts_langs;
  train_sli->add_option("--embeddings", ts_embeddings, "Labelled embedding "
                                                       "TSV")->required();
  train_sli->add_option("--lambda", ts_lambda, "L2 regularization strength");
  train_sli->add_option("--seed", ts_seed, "Recorded training seed");
  train_sli->add_option("--out", ts_out, "Output model JSON")->required();
  ts_langs.attach(train_sli);
  train_sli->callback([&] {
    const auto data = sli::ingest_embeddings(ts_embeddings, ts_langs.pair());
    const auto model =
        sli::train_classifier(data, ts_lambda, ts_seed, ts_langs.pair());
    sli::save_model(ts_out, model);
    std::cerr << "trained on " << data.size() << " embeddings in "
              << model.train_meta.iterations_run << " iterations\n";
  });

  // ---- train-lm ----
  auto *train_lm = app.add_subcommand(
      "train-lm", "Train the word-level bigram language model");
  std::string tl_text, tl_out;
  double tl_discount = 0.75;
  train_lm->add_option("--text", tl_text, "Corpus file, one sentence per "
                                          "line")->required();
  train_lm->add_option("--discount", tl_discount, "Absolute discount in "
                                                  "(0,1)");
  train_lm->add_option("--out", tl_out, "Output ARPA path")->required();
  train_lm->callback([&] {
    const auto sentences = read_sentences(tl_text);
    const auto model = lm::train_bigram(sentences, tl_discount);
    lm::save_arpa(tl_out, model);
    std::cerr << "trained bigram model: " << model.vocabulary().size()
              << " unigrams, " << model.bigram_logp().size() << " bigrams\n";
  });

  // ---- eval-sli ----
  auto *eval_sli = app.add_subcommand(
      "eval-sli", "Bootstrap study of few-shot SLI training sizes");
  std::string es_embeddings;
  std::vector<int> es_sizes = {1, 5, 10, 25, 50};
  int es_iterations = 5000;
  uint64_t es_seed = 0;
  double es_lambda = 0.1;
  std::optional<std::string> es_out, es_csv;
  LanguageFlags es_langs;
  eval_sli->add_option("--embeddings", es_embeddings, "Labelled embedding "
                                                      "TSV")->required();
  eval_sli->add_option("--sizes", es_sizes, "Per-language subset sizes")
      ->delimiter(',');
  eval_sli->add_option("--iterations", es_iterations, "Bootstrap iterations");
  eval_sli->add_option("--seed", es_seed, "Master seed");
  eval_sli->add_option("--lambda", es_lambda, "L2 regularization strength");
  eval_sli->add_option("--out", es_out, "Report JSON (default stdout)");
  eval_sli->add_option("--csv", es_csv, "Per-iteration F1 CSV");
  es_langs.attach(eval_sli);
  eval_sli->callback([&] {
    const auto data = sli::ingest_embeddings(es_embeddings, es_langs.pair());
    const auto report = eval::sli_bootstrap(data, es_sizes, es_iterations,
                                            es_seed, es_lambda,
                                            es_langs.pair());
    write_output(es_out, report.to_json());
    if (es_csv) write_output(es_csv, report.to_csv());
  });

  // ---- eval-asr ----
  auto *eval_asr = app.add_subcommand(
      "eval-asr",
      "Cross-validated decoding study over a transcript fixture corpus "
      "rendered by the mock acoustic backend");
  std::string ea_transcripts;
  int ea_folds = 10, ea_frames = 4;
  double ea_train_fraction = 0.8;
  std::vector<double> ea_subset_fractions;
  std::optional<double> ea_noise_db;
  uint64_t ea_seed = 0;
  FusionFlags ea_fusion;
  std::optional<std::string> ea_out, ea_csv;
  eval_asr->add_option("--transcripts", ea_transcripts,
                       "Fixture corpus, one sentence per line")->required();
  eval_asr->add_option("--folds", ea_folds, "Cross-validation folds");
  eval_asr->add_option("--train-fraction", ea_train_fraction,
                       "Training fraction per fold");
  eval_asr->add_option("--subset-fractions", ea_subset_fractions,
                       "Nested training-subset fractions to materialize")
      ->delimiter(',');
  eval_asr->add_option("--noise-db", ea_noise_db,
                       "Mock backend noise level (omit for noiseless)");
  eval_asr->add_option("--frames-per-symbol", ea_frames,
                       "Mock backend frames per symbol");
  eval_asr->add_option("--seed", ea_seed, "Master seed");
  ea_fusion.attach(eval_asr);
  eval_asr->add_option("--out", ea_out, "Report JSON (default stdout)");
  eval_asr->add_option("--csv", ea_csv, "Per-fold WER/CER CSV");
  eval_asr->callback([&] {
    const auto sentences = read_sentences(ea_transcripts);
    std::vector<eval::Utterance> utterances;
    for (size_t i = 0; i < sentences.size(); ++i) {
      utterances.push_back({"u" + std::to_string(i), sentences[i]});
    }
    eval::SplitSpec spec;
    spec.folds = ea_folds;
    spec.train_fraction = ea_train_fraction;
    spec.subset_fractions = ea_subset_fractions;
    spec.seed = ea_seed;
    const auto splits =
        eval::make_splits(static_cast<int>(utterances.size()), spec);
    const double noise =
        ea_noise_db ? *ea_noise_db : -std::numeric_limits<double>::infinity();
    const auto backend = [&](const eval::Utterance &utt) {
      const uint64_t utt_seed =
          derive_seed(ea_seed, std::stoull(utt.id.substr(1)));
      return ctc::mock_acoustic(utt.text, ea_frames, noise, utt_seed);
    };
    std::unique_ptr<lm::BigramLm> fusion_lm;
    if (ea_fusion.lm_path) {
      fusion_lm =
          std::make_unique<lm::BigramLm>(lm::load_arpa(*ea_fusion.lm_path));
    }
    eval::FusionParams fusion{ea_fusion.alpha, ea_fusion.beta,
                              ea_fusion.beam_width};
    const auto report = eval::asr_experiment(backend, utterances, splits,
                                             fusion_lm.get(), fusion);
    write_output(ea_out, report.to_json());
    if (ea_csv) write_output(ea_csv, report.to_csv());
  });

  // ---- triage ----
  auto *triage = app.add_subcommand(
      "triage", "Summarize speech minutes and utterance counts per language");
  std::vector<std::string> tg_inputs;
  std::optional<std::string> tg_durations, tg_out;
  bool tg_json = false;
  LanguageFlags tg_langs;
  triage->add_option("--in", tg_inputs, "Segment TSV files")
      ->required()
      ->expected(-1);
  triage->add_option("--durations", tg_durations,
                     "TSV of recording_id<TAB>running_time_seconds; without "
                     "it the last segment end stands in");
  triage->add_flag("--json", tg_json, "Emit JSON instead of a text table");
  triage->add_option("--out", tg_out, "Output (default stdout)");
  tg_langs.attach(triage);
  triage->callback([&] {
    std::map<std::string, std::vector<Segment>> by_recording;
    for (const std::string &path : tg_inputs) {
      for (const auto &row : elan::load_tsv(path, tg_langs.pair())) {
        by_recording[row.recording_id].push_back(row.segment);
      }
    }
    std::vector<std::pair<std::string, std::vector<Segment>>> grouped(
        by_recording.begin(), by_recording.end());

    std::map<std::string, double> durations;
    if (tg_durations) {
      std::istringstream in(read_file(*tg_durations));
      std::string line;
      int lineno = 0;
      while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto tab = line.find('\t');
        if (tab == std::string::npos) {
          throw FormatError(*tg_durations + ":" + std::to_string(lineno) +
                            ": expected recording_id<TAB>seconds");
        }
        durations[line.substr(0, tab)] = std::stod(line.substr(tab + 1));
      }
    }
    const auto report = pipeline::triage_report(grouped, durations);
    write_output(tg_out, tg_json ? report.to_json() : report.to_table());
  });

  app.parse(argc, argv);
  return 0;
}

}  // namespace

}  // namespace mixlang
