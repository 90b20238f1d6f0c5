// src/metrics.cpp

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

#include "mixlang/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <json.hpp>

namespace mixlang {
namespace metrics {

namespace {

std::vector<std::string> char_tokens(const NormText &text) {
  std::vector<std::string> out;
  out.reserve(text.str().size());
  for (char c : text.str()) out.emplace_back(1, c);
  return out;
}

ErrorCounts counts_from(const EditAlignment &a) {
  return {a.substitutions, a.insertions, a.deletions, a.reference_length()};
}

}  // namespace

EditAlignment edit_align(const std::vector<std::string> &ref,
                         const std::vector<std::string> &hyp) {
  const size_t m = ref.size(), n = hyp.size();
  // Costs are small; (m+1)x(n+1) ints.
  std::vector<std::vector<int>> d(m + 1, std::vector<int>(n + 1, 0));
  for (size_t i = 1; i <= m; ++i) d[i][0] = static_cast<int>(i);
  for (size_t j = 1; j <= n; ++j) d[0][j] = static_cast<int>(j);
  for (size_t i = 1; i <= m; ++i) {
    for (size_t j = 1; j <= n; ++j) {
      const int match = d[i - 1][j - 1] + (ref[i - 1] == hyp[j - 1] ? 0 : 1);
      const int del = d[i - 1][j] + 1;
      const int ins = d[i][j - 1] + 1;
      d[i][j] = std::min({match, del, ins});
    }
  }

  EditAlignment out;
  std::vector<EditOp> rops;
  size_t i = m, j = n;
  while (i > 0 || j > 0) {
    if (i > 0 && j > 0 && ref[i - 1] == hyp[j - 1] &&
        d[i][j] == d[i - 1][j - 1]) {
      rops.push_back(EditOp::kHit);
      --i, --j;
    } else if (i > 0 && j > 0 && d[i][j] == d[i - 1][j - 1] + 1) {
      rops.push_back(EditOp::kSubstitution);
      --i, --j;
    } else if (i > 0 && d[i][j] == d[i - 1][j] + 1) {
      rops.push_back(EditOp::kDeletion);
      --i;
    } else {
      rops.push_back(EditOp::kInsertion);
      --j;
    }
  }
  std::reverse(rops.begin(), rops.end());
  for (EditOp op : rops) {
    switch (op) {
      case EditOp::kHit: ++out.hits; break;
      case EditOp::kSubstitution: ++out.substitutions; break;
      case EditOp::kDeletion: ++out.deletions; break;
      case EditOp::kInsertion: ++out.insertions; break;
    }
  }
  out.ops = std::move(rops);
  return out;
}

double ErrorCounts::rate() const {
  const int64_t errors = substitutions + insertions + deletions;
  if (reference_length == 0) {
    return errors == 0 ? 0.0 : std::numeric_limits<double>::infinity();
  }
  return static_cast<double>(errors) / static_cast<double>(reference_length);
}

ErrorCounts &ErrorCounts::operator+=(const ErrorCounts &other) {
  substitutions += other.substitutions;
  insertions += other.insertions;
  deletions += other.deletions;
  reference_length += other.reference_length;
  return *this;
}

ErrorCounts count_word_errors(const NormText &ref, const NormText &hyp) {
  return counts_from(edit_align(ref.words(), hyp.words()));
}

ErrorCounts count_char_errors(const NormText &ref, const NormText &hyp) {
  return counts_from(edit_align(char_tokens(ref), char_tokens(hyp)));
}

double wer(const NormText &ref, const NormText &hyp) {
  return count_word_errors(ref, hyp).rate();
}

double cer(const NormText &ref, const NormText &hyp) {
  return count_char_errors(ref, hyp).rate();
}

double f1(const std::vector<LanguageLabel> &golds,
          const std::vector<LanguageLabel> &preds,
          const LanguageLabel &positive) {
  if (golds.size() != preds.size()) {
    throw LengthMismatch("gold and prediction sequences differ in length: " +
                         std::to_string(golds.size()) + " vs " +
                         std::to_string(preds.size()));
  }
  int64_t tp = 0, fp = 0, fn = 0;
  for (size_t i = 0; i < golds.size(); ++i) {
    const bool gold_pos = golds[i] == positive;
    const bool pred_pos = preds[i] == positive;
    if (gold_pos && pred_pos) ++tp;
    if (!gold_pos && pred_pos) ++fp;
    if (gold_pos && !pred_pos) ++fn;
  }
  const int64_t denom = 2 * tp + fp + fn;
  if (denom == 0) return 0.0;
  return 2.0 * static_cast<double>(tp) / static_cast<double>(denom);
}

std::string report_json(const std::vector<ScoredUtterance> &utterances) {
  using json = nlohmann::json;
  auto block = [](const ErrorCounts &c) {
    json j;
    j["S"] = c.substitutions;
    j["I"] = c.insertions;
    j["D"] = c.deletions;
    j["n_ref_tokens"] = c.reference_length;
    const double rate = c.rate();
    if (std::isinf(rate)) {
      j["rate"] = "inf";  // empty reference, non-empty hypothesis
    } else {
      j["rate"] = rate;
    }
    return j;
  };

  json per_utterance = json::object();
  ErrorCounts pooled_words, pooled_chars;
  for (const ScoredUtterance &utt : utterances) {
    const ErrorCounts words = count_word_errors(utt.reference, utt.hypothesis);
    const ErrorCounts chars = count_char_errors(utt.reference, utt.hypothesis);
    json u = block(words);
    u["wer"] = u["rate"];
    u.erase("rate");
    u["cer"] = std::isinf(chars.rate()) ? json("inf") : json(chars.rate());
    per_utterance[utt.id] = std::move(u);
    pooled_words += words;
    pooled_chars += chars;
  }
  json out;
  out["utterances"] = std::move(per_utterance);
  out["pooled"] = {{"word", block(pooled_words)},
                   {"char", block(pooled_chars)}};
  return out.dump(2) + "\n";
}

SummaryStats summarize(const std::vector<double> &values) {
  if (values.empty()) throw EmptyInput("summarize requires at least one value");
  SummaryStats s;
  s.n = static_cast<int64_t>(values.size());
  s.min = *std::min_element(values.begin(), values.end());
  s.max = *std::max_element(values.begin(), values.end());
  double sum = 0.0;
  for (double v : values) sum += v;
  s.mean = sum / static_cast<double>(s.n);
  if (s.n > 1) {
    double ss = 0.0;
    for (double v : values) ss += (v - s.mean) * (v - s.mean);
    s.sd = std::sqrt(ss / static_cast<double>(s.n - 1));
  }
  return s;
}

}  // namespace metrics
}  // namespace mixlang
