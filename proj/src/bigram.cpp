// src/bigram.cpp

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

#include "mixlang/bigram.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace mixlang {
namespace lm {

namespace {
// ARPA convention for tokens that are contexts only, never predicted.
constexpr double kNeverPredictedLogp = -99.0;
}  // namespace

int BigramLm::word_index(const std::string &word) const {
  auto it = index_.find(word);
  return it == index_.end() ? -1 : it->second;
}

double BigramLm::unigram_logp(const std::string &word) const {
  int i = word_index(word);
  if (i < 0) i = word_index(kUnknown);
  return unigram_logp_[i];
}

double BigramLm::backoff_logw(const std::string &history) const {
  int i = word_index(history);
  if (i < 0) i = word_index(kUnknown);
  return backoff_logw_[i];
}

double BigramLm::cond_logp(const std::string &history,
                           const std::string &word) const {
  int h = word_index(history);
  if (h < 0) h = word_index(kUnknown);
  int w = word_index(word);
  if (w < 0) w = word_index(kUnknown);
  const auto it = bigrams_.find({h, w});
  if (it != bigrams_.end()) return it->second;
  return backoff_logw_[h] + unigram_logp_[w];
}

double BigramLm::score(const std::vector<std::string> &words) const {
  double total = 0.0;
  std::string history = kSentenceStart;
  for (const std::string &w : words) {
    total += cond_logp(history, w);
    history = word_index(w) < 0 ? kUnknown : w;
  }
  total += cond_logp(history, kSentenceEnd);
  return total;
}

double BigramLm::score(const NormText &text) const {
  return score(text.words());
}

std::vector<std::string> BigramLm::predicted_vocabulary() const {
  std::vector<std::string> out;
  out.reserve(vocab_.size() - 1);
  for (const std::string &w : vocab_) {
    if (w != kSentenceStart) out.push_back(w);
  }
  return out;
}

BigramLm train_bigram(const std::vector<NormText> &sentences,
                      double discount) {
  if (!(discount > 0.0 && discount < 1.0)) {
    throw ValidationError("discount must lie in (0,1), got " +
                          std::to_string(discount));
  }

  std::vector<std::vector<std::string>> tokenized;
  std::set<std::string> word_set;
  for (const NormText &s : sentences) {
    auto words = s.words();
    if (words.empty()) continue;
    word_set.insert(words.begin(), words.end());
    tokenized.push_back(std::move(words));
  }
  if (tokenized.empty()) {
    throw EmptyCorpus("no non-empty sentences in the corpus");
  }

  BigramLm lm;
  lm.discount_ = discount;
  lm.vocab_ = {kSentenceStart, kSentenceEnd, kUnknown};
  lm.vocab_.insert(lm.vocab_.end(), word_set.begin(), word_set.end());
  for (size_t i = 0; i < lm.vocab_.size(); ++i) {
    lm.index_[lm.vocab_[i]] = static_cast<int>(i);
  }
  const int num_words = static_cast<int>(lm.vocab_.size());
  const int start = lm.index_[kSentenceStart];
  const int end = lm.index_[kSentenceEnd];
  const int unk = lm.index_[kUnknown];

  // Token counts: every word occurrence plus one </s> per sentence.
  std::vector<int64_t> unigram_count(num_words, 0);
  std::map<std::pair<int, int>, int64_t> bigram_count;
  int64_t total_tokens = 0;
  for (const auto &words : tokenized) {
    int history = start;
    for (const std::string &w : words) {
      const int wi = lm.index_[w];
      ++unigram_count[wi];
      ++total_tokens;
      ++bigram_count[{history, wi}];
      history = wi;
    }
    ++unigram_count[end];
    ++total_tokens;
    ++bigram_count[{history, end}];
  }

  // Unigram distribution over predicted tokens (words, </s>, <unk>):
  // observed counts over N+1, reserving one unit of mass for <unk>.
  const double denom = static_cast<double>(total_tokens) + 1.0;
  lm.unigram_logp_.assign(num_words, 0.0);
  for (int i = 0; i < num_words; ++i) {
    if (i == start) {
      lm.unigram_logp_[i] = kNeverPredictedLogp;
    } else if (i == unk) {
      lm.unigram_logp_[i] = std::log10(1.0 / denom);
    } else {
      lm.unigram_logp_[i] =
          std::log10(static_cast<double>(unigram_count[i]) / denom);
    }
  }

  // Per-history totals and distinct-follower counts.
  std::vector<int64_t> history_total(num_words, 0);
  std::vector<int64_t> distinct_followers(num_words, 0);
  for (const auto &[pair, count] : bigram_count) {
    history_total[pair.first] += count;
    ++distinct_followers[pair.first];
  }

  // Backoff weight lambda(h) = D * N1+(h) / c(h); histories that never
  // occurred back off with full weight.
  lm.backoff_logw_.assign(num_words, 0.0);
  for (int h = 0; h < num_words; ++h) {
    if (history_total[h] > 0) {
      lm.backoff_logw_[h] =
          std::log10(discount * static_cast<double>(distinct_followers[h]) /
                     static_cast<double>(history_total[h]));
    }
  }

  // Interpolated absolute discounting for seen bigrams.
  for (const auto &[pair, count] : bigram_count) {
    const auto [h, w] = pair;
    const double n_h = static_cast<double>(history_total[h]);
    const double lambda = std::pow(10.0, lm.backoff_logw_[h]);
    const double p_uni = std::pow(10.0, lm.unigram_logp_[w]);
    const double p =
        (static_cast<double>(count) - discount) / n_h + lambda * p_uni;
    lm.bigrams_[pair] = std::log10(p);
  }

  return lm;
}

}  // namespace lm
}  // namespace mixlang
