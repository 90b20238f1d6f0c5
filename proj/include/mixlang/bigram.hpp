// include/mixlang/bigram.hpp

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

#ifndef MIXLANG_BIGRAM_HPP_
#define MIXLANG_BIGRAM_HPP_

#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "mixlang/error.hpp"
#include "mixlang/text.hpp"

namespace mixlang {
namespace lm {

inline const std::string kSentenceStart = "<s>";
inline const std::string kSentenceEnd = "</s>";
inline const std::string kUnknown = "<unk>";

class EmptyCorpus : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// Word-level bigram model with interpolated absolute discounting and a
/// unigram backoff that reserves one unit of probability mass for <unk>.
/// All probabilities are stored as log10 values; for every history the
/// conditional distribution over the full vocabulary (regular words,
/// </s> and <unk>) sums to one.
class BigramLm {
 public:
  /// Words in ARPA order: <s>, </s>, <unk>, then corpus words sorted.
  const std::vector<std::string> &vocabulary() const { return vocab_; }
  double discount() const { return discount_; }

  /// log10 P(word | history). Out-of-vocabulary tokens on either side are
  /// mapped to <unk>. `history` may be <s>; `word` may be </s>.
  double cond_logp(const std::string &history, const std::string &word) const;

  /// log10 probability of a sentence: <s> w1 ... wn </s>.
  double score(const std::vector<std::string> &words) const;
  double score(const NormText &text) const;

  /// log10 unigram probability (word, </s> or <unk>).
  double unigram_logp(const std::string &word) const;
  /// log10 backoff weight of a history present in the vocabulary.
  double backoff_logw(const std::string &history) const;
  /// Explicit (seen) bigrams as ((history, word) -> log10 p), ARPA order.
  const std::map<std::pair<int, int>, double> &bigram_logp() const {
    return bigrams_;
  }

  int word_index(const std::string &word) const;  // -1 if absent
  const std::string &word(int index) const { return vocab_[index]; }

  /// Tokens a conditional distribution ranges over (everything but <s>).
  std::vector<std::string> predicted_vocabulary() const;

 private:
  friend BigramLm train_bigram(const std::vector<NormText> &sentences,
                               double discount);
  friend class ArpaBuilder;

  BigramLm() = default;

  std::vector<std::string> vocab_;
  std::unordered_map<std::string, int> index_;
  std::vector<double> unigram_logp_;  // log10, -99 sentinel for <s>
  std::vector<double> backoff_logw_;  // log10
  std::map<std::pair<int, int>, double> bigrams_;
  double discount_ = 0.75;
};

/// Estimates a bigram model from normalized sentences. Empty sentences are
/// ignored; an effectively empty corpus raises EmptyCorpus. `discount` is
/// the absolute discount D in (0,1):
///   P(w|h) = max(c(h,w)-D, 0)/c(h) + D*N1+(h)/c(h) * Punigram(w)
/// with Punigram(w) = c(w)/(N+1) and Punigram(<unk>) = 1/(N+1).
BigramLm train_bigram(const std::vector<NormText> &sentences,
                      double discount = 0.75);

}  // namespace lm
}  // namespace mixlang

#endif  // MIXLANG_BIGRAM_HPP_
