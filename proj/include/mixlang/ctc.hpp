// include/mixlang/ctc.hpp

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

#ifndef MIXLANG_CTC_HPP_
#define MIXLANG_CTC_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mixlang/bigram.hpp"
#include "mixlang/error.hpp"
#include "mixlang/text.hpp"
#include "mixlang/types.hpp"

namespace mixlang {
namespace ctc {

class InvalidBeamWidth : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// Ordered CTC symbol set: blank at index 0, then printable symbols.
/// The artifact's fixed inventory is [blank, space, A-Z, apostrophe]
/// (29 entries); it is hard-coded, never re-derived from data, so the
/// decoder's output indices can never be scrambled against the acoustic
/// backend's. Toy inventories are supported for exhaustive testing.
class SymbolInventory {
 public:
  /// `printable` lists the non-blank symbols in index order 1..n.
  explicit SymbolInventory(std::string printable);

  /// The fixed 29-symbol inventory: blank, space, A-Z, apostrophe.
  static const SymbolInventory &standard();

  int size() const { return static_cast<int>(printable_.size()) + 1; }
  static constexpr int kBlank = 0;

  /// Character of a non-blank index.
  char symbol(int index) const { return printable_[index - 1]; }
  /// Index of a character; -1 if the character is not in the inventory.
  int index_of(char c) const;

 private:
  std::string printable_;
  int char_to_index_[256];
};

/// Per-frame unnormalized scores over an inventory, one row per frame.
struct LogitMatrix {
  MatF frames;  // T x S
  double frame_duration_ms = 20.0;

  Eigen::Index num_frames() const { return frames.rows(); }
  Eigen::Index num_symbols() const { return frames.cols(); }

  /// Throws ValidationError if empty, non-finite, or the width does not
  /// match `inventory`.
  void validate(const SymbolInventory &inventory) const;
};

/// Prefix beam search state: one entry per collapsed prefix, with the
/// path mass split by whether the last emitted frame was blank.
struct Hypothesis {
  std::string text;
  double logp_blank;     // log10 mass of paths ending in blank
  double logp_nonblank;  // log10 mass of paths ending in the last symbol
  double lm_score;       // accumulated alpha*log10 Plm + beta over words
  std::string lm_state;  // last complete word, or <s> at the start

  double total_logp() const;  // logsumexp of the two path masses
};

/// Natural-log-sum-exp in base 10: log10(10^a + 10^b).
double log10_add(double a, double b);

/// Per-frame argmax (ties to the lowest index), collapse repeats, drop
/// blanks. The result is normalized, so it satisfies the NormText
/// invariants.
NormText greedy_decode(const LogitMatrix &logits,
                       const SymbolInventory &inventory =
                           SymbolInventory::standard());

/// Prefix beam search over collapsed label sequences, summing path
/// probabilities per prefix. With `lm` given, every completed word w with
/// previous word h adds alpha*log10 Plm(w|h) + beta to the hypothesis
/// score, at the space that closes the word and once more for the final
/// word at the end of the utterance. Deterministic: ties in score break
/// lexicographically on text.
NormText beam_decode(const LogitMatrix &logits, int beam_width,
                     const lm::BigramLm *lm = nullptr, double alpha = 0.5,
                     double beta = 1.0,
                     const SymbolInventory &inventory =
                         SymbolInventory::standard());

/// Full beam state after the last frame (end-of-utterance word fusion
/// applied), best first. Exposed for harnesses that inspect scores.
std::vector<Hypothesis> beam_decode_full(const LogitMatrix &logits,
                                         int beam_width,
                                         const lm::BigramLm *lm, double alpha,
                                         double beta,
                                         const SymbolInventory &inventory =
                                             SymbolInventory::standard());

/// Deterministic stand-in for a neural acoustic backend. Emits, per text
/// symbol, one blank frame followed by frames_per_symbol-1 frames scoring
/// that symbol high, then perturbs every logit with seeded Gaussian noise
/// of amplitude 2*10^(noise_db/20) (negative infinity disables noise, and
/// then greedy_decode recovers `text` exactly).
LogitMatrix mock_acoustic(const NormText &text, int frames_per_symbol,
                          double noise_db, uint64_t seed);

/// Binary logit file: magic "CTCL", u32 frame count, u32 symbol count
/// (must be 29), f32 frame duration in ms, then row-major f32 logits,
/// all little-endian.
void save_logits(const std::string &path, const LogitMatrix &logits);
LogitMatrix load_logits(const std::string &path);

}  // namespace ctc
}  // namespace mixlang

#endif  // MIXLANG_CTC_HPP_
