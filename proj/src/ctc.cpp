// src/ctc.cpp

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

#include "mixlang/ctc.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>
#include <limits>
#include <map>

#include "mixlang/rng.hpp"

namespace mixlang {
namespace ctc {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kLn10 = 2.302585092994046;
constexpr float kSignalLogit = 10.0f;
constexpr uint32_t kFileSymbols = 29;

// Row-wise log10 softmax of the logits.
Mat log10_softmax(const MatF &frames) {
  Mat out = frames.cast<double>();
  for (Eigen::Index t = 0; t < out.rows(); ++t) {
    const double m = out.row(t).maxCoeff();
    const double lse =
        m + std::log((out.row(t).array() - m).exp().sum());
    out.row(t) = (out.row(t).array() - lse) / kLn10;
  }
  return out;
}

}  // namespace

double log10_add(double a, double b) {
  if (a == kNegInf) return b;
  if (b == kNegInf) return a;
  const double hi = std::max(a, b), lo = std::min(a, b);
  return hi + std::log1p(std::pow(10.0, lo - hi)) / kLn10;
}

double Hypothesis::total_logp() const {
  return log10_add(logp_blank, logp_nonblank);
}

SymbolInventory::SymbolInventory(std::string printable)
    : printable_(std::move(printable)) {
  if (printable_.empty()) {
    throw ValidationError("inventory needs at least one non-blank symbol");
  }
  std::fill(std::begin(char_to_index_), std::end(char_to_index_), -1);
  for (size_t i = 0; i < printable_.size(); ++i) {
    const auto c = static_cast<unsigned char>(printable_[i]);
    if (char_to_index_[c] != -1) {
      throw ValidationError("duplicate inventory symbol " + printable_);
    }
    char_to_index_[c] = static_cast<int>(i) + 1;
  }
}

const SymbolInventory &SymbolInventory::standard() {
  static const SymbolInventory inventory(" ABCDEFGHIJKLMNOPQRSTUVWXYZ'");
  return inventory;
}

int SymbolInventory::index_of(char c) const {
  return char_to_index_[static_cast<unsigned char>(c)];
}

void LogitMatrix::validate(const SymbolInventory &inventory) const {
  if (frames.rows() < 1) throw ValidationError("logit matrix has no frames");
  if (frames.cols() != inventory.size()) {
    throw ValidationError("logit matrix width " +
                          std::to_string(frames.cols()) +
                          " does not match inventory size " +
                          std::to_string(inventory.size()));
  }
  if (!frames.allFinite()) {
    throw ValidationError("logit matrix contains non-finite values");
  }
}

NormText greedy_decode(const LogitMatrix &logits,
                       const SymbolInventory &inventory) {
  logits.validate(inventory);
  std::string raw;
  int prev = SymbolInventory::kBlank;
  for (Eigen::Index t = 0; t < logits.frames.rows(); ++t) {
    int best = 0;
    float best_score = logits.frames(t, 0);
    for (int s = 1; s < inventory.size(); ++s) {
      if (logits.frames(t, s) > best_score) {  // ties keep the lowest index
        best_score = logits.frames(t, s);
        best = s;
      }
    }
    if (best != prev && best != SymbolInventory::kBlank) {
      raw.push_back(inventory.symbol(best));
    }
    prev = best;
  }
  return normalize_transcript(raw);
}

namespace {

struct Prefix {
  double lp_blank = kNegInf;     // log10 path mass ending in blank
  double lp_nonblank = kNegInf;  // log10 path mass ending in the last symbol
  double lm_accum = 0.0;         // fused score of completed words
  std::string lm_context = lm::kSentenceStart;
  bool lm_init = false;
};

// Word being formed after the last space of `text`.
std::string pending_word(const std::string &text) {
  const auto space = text.rfind(' ');
  return space == std::string::npos ? text : text.substr(space + 1);
}

}  // namespace

std::vector<Hypothesis> beam_decode_full(const LogitMatrix &logits,
                                         int beam_width, const lm::BigramLm *lm,
                                         double alpha, double beta,
                                         const SymbolInventory &inventory) {
  if (beam_width < 1) {
    throw InvalidBeamWidth("beam width must be >= 1, got " +
                           std::to_string(beam_width));
  }
  logits.validate(inventory);
  const Mat ls = log10_softmax(logits.frames);

  std::map<std::string, Prefix> beam;
  Prefix root;
  root.lp_blank = 0.0;  // log10(1): the empty path
  root.lm_init = true;
  beam.emplace("", root);

  for (Eigen::Index t = 0; t < ls.rows(); ++t) {
    std::map<std::string, Prefix> next;
    auto slot = [&next](const std::string &text) -> Prefix & {
      return next[text];
    };

    for (const auto &[text, p] : beam) {
      const double total = log10_add(p.lp_blank, p.lp_nonblank);
      const int last =
          text.empty() ? SymbolInventory::kBlank
                       : inventory.index_of(text.back());

      // Stay on this prefix: emit blank, or repeat the last symbol.
      {
        Prefix &same = slot(text);
        if (!same.lm_init) {
          same.lm_accum = p.lm_accum;
          same.lm_context = p.lm_context;
          same.lm_init = true;
        }
        same.lp_blank = log10_add(
            same.lp_blank, total + ls(t, SymbolInventory::kBlank));
        if (last != SymbolInventory::kBlank) {
          same.lp_nonblank =
              log10_add(same.lp_nonblank, p.lp_nonblank + ls(t, last));
        }
      }

      // Extend the prefix with every non-blank symbol.
      for (int s = 1; s < inventory.size(); ++s) {
        // A repeated symbol can only follow a blank-terminated path.
        const double base = (s == last) ? p.lp_blank : total;
        if (base == kNegInf) continue;
        const char c = inventory.symbol(s);
        std::string new_text = text;
        new_text.push_back(c);
        Prefix &ext = slot(new_text);
        if (!ext.lm_init) {
          ext.lm_accum = p.lm_accum;
          ext.lm_context = p.lm_context;
          if (lm != nullptr && c == ' ') {
            const std::string word = pending_word(text);
            if (!word.empty()) {
              ext.lm_accum += alpha * lm->cond_logp(p.lm_context, word) + beta;
              ext.lm_context = word;
            }
          }
          ext.lm_init = true;
        }
        ext.lp_nonblank = log10_add(ext.lp_nonblank, base + ls(t, s));
      }
    }

    // Prune to the beam width by fused score, ties lexicographic on text.
    std::vector<std::pair<const std::string *, const Prefix *>> order;
    order.reserve(next.size());
    for (const auto &[text, p] : next) order.emplace_back(&text, &p);
    std::sort(order.begin(), order.end(), [](const auto &a, const auto &b) {
      const double sa = log10_add(a.second->lp_blank, a.second->lp_nonblank) +
                        a.second->lm_accum;
      const double sb = log10_add(b.second->lp_blank, b.second->lp_nonblank) +
                        b.second->lm_accum;
      if (sa != sb) return sa > sb;
      return *a.first < *b.first;
    });
    std::map<std::string, Prefix> pruned;
    const size_t keep = std::min<size_t>(order.size(), beam_width);
    for (size_t i = 0; i < keep; ++i) {
      pruned.emplace(*order[i].first, *order[i].second);
    }
    beam = std::move(pruned);
  }

  // Close the final word, then rank.
  std::vector<Hypothesis> out;
  out.reserve(beam.size());
  for (const auto &[text, p] : beam) {
    Hypothesis h;
    h.text = text;
    h.logp_blank = p.lp_blank;
    h.logp_nonblank = p.lp_nonblank;
    h.lm_score = p.lm_accum;
    h.lm_state = p.lm_context;
    if (lm != nullptr) {
      const std::string word = pending_word(text);
      if (!word.empty()) {
        h.lm_score += alpha * lm->cond_logp(p.lm_context, word) + beta;
        h.lm_state = word;
      }
    }
    out.push_back(std::move(h));
  }
  std::sort(out.begin(), out.end(), [](const Hypothesis &a, const Hypothesis &b) {
    const double sa = a.total_logp() + a.lm_score;
    const double sb = b.total_logp() + b.lm_score;
    if (sa != sb) return sa > sb;
    return a.text < b.text;
  });
  return out;
}

NormText beam_decode(const LogitMatrix &logits, int beam_width,
                     const lm::BigramLm *lm, double alpha, double beta,
                     const SymbolInventory &inventory) {
  const auto hyps =
      beam_decode_full(logits, beam_width, lm, alpha, beta, inventory);
  return normalize_transcript(hyps.front().text);
}

LogitMatrix mock_acoustic(const NormText &text, int frames_per_symbol,
                          double noise_db, uint64_t seed) {
  if (frames_per_symbol < 2) {
    throw ValidationError("frames_per_symbol must be >= 2");
  }
  const SymbolInventory &inventory = SymbolInventory::standard();
  const Eigen::Index num_symbols = static_cast<Eigen::Index>(text.str().size());
  const Eigen::Index total =
      std::max<Eigen::Index>(1, num_symbols * frames_per_symbol);

  LogitMatrix out;
  out.frames = MatF::Zero(total, inventory.size());
  out.frame_duration_ms = 20.0;
  // One leading blank frame per symbol keeps repeated letters apart.
  for (Eigen::Index i = 0; i < num_symbols; ++i) {
    const int index = inventory.index_of(text.str()[i]);
    const Eigen::Index base = i * frames_per_symbol;
    out.frames(base, SymbolInventory::kBlank) = kSignalLogit;
    for (int k = 1; k < frames_per_symbol; ++k) {
      out.frames(base + k, index) = kSignalLogit;
    }
  }
  if (num_symbols == 0) {
    out.frames(0, SymbolInventory::kBlank) = kSignalLogit;
  }

  if (noise_db != kNegInf) {
    const double sigma = 2.0 * std::pow(10.0, noise_db / 20.0);
    auto rng = make_rng(seed);
    std::normal_distribution<double> gauss(0.0, sigma);
    for (Eigen::Index t = 0; t < out.frames.rows(); ++t) {
      for (Eigen::Index s = 0; s < out.frames.cols(); ++s) {
        out.frames(t, s) += static_cast<float>(gauss(rng));
      }
    }
  }
  return out;
}

namespace {

void put_u32(std::string &out, uint32_t v) {
  out.push_back(static_cast<char>(v & 0xff));
  out.push_back(static_cast<char>((v >> 8) & 0xff));
  out.push_back(static_cast<char>((v >> 16) & 0xff));
  out.push_back(static_cast<char>((v >> 24) & 0xff));
}

uint32_t get_u32(const uint8_t *p) {
  return static_cast<uint32_t>(p[0]) | (static_cast<uint32_t>(p[1]) << 8) |
         (static_cast<uint32_t>(p[2]) << 16) |
         (static_cast<uint32_t>(p[3]) << 24);
}

}  // namespace

void save_logits(const std::string &path, const LogitMatrix &logits) {
  logits.validate(SymbolInventory::standard());
  std::string out;
  out.append("CTCL");
  put_u32(out, static_cast<uint32_t>(logits.frames.rows()));
  put_u32(out, kFileSymbols);
  uint32_t frame_ms_bits = 0;
  const float frame_ms = static_cast<float>(logits.frame_duration_ms);
  std::memcpy(&frame_ms_bits, &frame_ms, 4);
  put_u32(out, frame_ms_bits);
  for (Eigen::Index t = 0; t < logits.frames.rows(); ++t) {
    for (Eigen::Index s = 0; s < logits.frames.cols(); ++s) {
      uint32_t bits = 0;
      const float v = logits.frames(t, s);
      std::memcpy(&bits, &v, 4);
      put_u32(out, bits);
    }
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot write " + path);
  file.write(out.data(), static_cast<std::streamsize>(out.size()));
  if (!file) throw IoError("write failed: " + path);
}

LogitMatrix load_logits(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::vector<uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                             std::istreambuf_iterator<char>());
  if (bytes.size() < 16 || std::memcmp(bytes.data(), "CTCL", 4) != 0) {
    throw FormatError(path + ": not a CTCL logit file");
  }
  const uint32_t num_frames = get_u32(bytes.data() + 4);
  const uint32_t num_symbols = get_u32(bytes.data() + 8);
  if (num_symbols != kFileSymbols) {
    throw FormatError(path + ": expected 29 symbols, got " +
                      std::to_string(num_symbols));
  }
  if (num_frames < 1) throw FormatError(path + ": no frames");
  const uint32_t frame_ms_bits = get_u32(bytes.data() + 12);
  float frame_ms = 0.0f;
  std::memcpy(&frame_ms, &frame_ms_bits, 4);

  const size_t expected = 16 + size_t(num_frames) * num_symbols * 4;
  if (bytes.size() != expected) {
    throw FormatError(path + ": truncated logit payload");
  }
  LogitMatrix out;
  out.frame_duration_ms = frame_ms;
  out.frames.resize(num_frames, num_symbols);
  const uint8_t *p = bytes.data() + 16;
  for (uint32_t t = 0; t < num_frames; ++t) {
    for (uint32_t s = 0; s < num_symbols; ++s) {
      const uint32_t bits = get_u32(p);
      float v = 0.0f;
      std::memcpy(&v, &bits, 4);
      out.frames(t, s) = v;
      p += 4;
    }
  }
  out.validate(SymbolInventory::standard());
  return out;
}

}  // namespace ctc
}  // namespace mixlang
