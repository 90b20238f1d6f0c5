// include/mixlang/metrics.hpp

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

#ifndef MIXLANG_METRICS_HPP_
#define MIXLANG_METRICS_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "mixlang/error.hpp"
#include "mixlang/language.hpp"
#include "mixlang/text.hpp"

namespace mixlang {
namespace metrics {

class LengthMismatch : public ValidationError {
 public:
  using ValidationError::ValidationError;
};
class EmptyInput : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

enum class EditOp { kHit, kSubstitution, kDeletion, kInsertion };

/// Levenshtein-minimal alignment of a hypothesis against a reference.
/// hits + substitutions + deletions == reference length and
/// hits + substitutions + insertions == hypothesis length.
struct EditAlignment {
  int64_t hits = 0;
  int64_t substitutions = 0;
  int64_t insertions = 0;
  int64_t deletions = 0;
  std::vector<EditOp> ops;

  int64_t errors() const { return substitutions + insertions + deletions; }
  int64_t reference_length() const { return hits + substitutions + deletions; }
};

/// Minimal-cost alignment with backtrace ties broken in the order
/// hit > substitution > deletion > insertion.
EditAlignment edit_align(const std::vector<std::string> &ref,
                         const std::vector<std::string> &hyp);

/// Error counts pooled over a corpus; rate() = errors / reference length.
struct ErrorCounts {
  int64_t substitutions = 0;
  int64_t insertions = 0;
  int64_t deletions = 0;
  int64_t reference_length = 0;

  double rate() const;
  ErrorCounts &operator+=(const ErrorCounts &other);
};

ErrorCounts count_word_errors(const NormText &ref, const NormText &hyp);
ErrorCounts count_char_errors(const NormText &ref, const NormText &hyp);

/// (S+I+D) / reference length. Tokenization: wer on spaces, cer on
/// characters including spaces. An empty reference with a non-empty
/// hypothesis yields +infinity; empty against empty is 0.
double wer(const NormText &ref, const NormText &hyp);
double cer(const NormText &ref, const NormText &hyp);

/// Binary F1 = 2TP / (2TP + FP + FN), 0 when the denominator is 0.
/// Sequences must have equal length.
double f1(const std::vector<LanguageLabel> &golds,
          const std::vector<LanguageLabel> &preds,
          const LanguageLabel &positive);

struct SummaryStats {
  double mean = 0.0;
  double sd = 0.0;  // sample standard deviation (n-1); 0 when n == 1
  double min = 0.0;
  double max = 0.0;
  int64_t n = 0;
};

/// Mean, sample SD and range of a non-empty value sequence.
SummaryStats summarize(const std::vector<double> &values);

/// One scored utterance: id, reference, hypothesis.
struct ScoredUtterance {
  std::string id;
  NormText reference;
  NormText hypothesis;
};

/// JSON metric report with a {wer, cer, S, I, D, n_ref_tokens} object per
/// utterance plus corpus-pooled word and character blocks (pooled = summed
/// counts over summed reference lengths).
std::string report_json(const std::vector<ScoredUtterance> &utterances);

}  // namespace metrics
}  // namespace mixlang

#endif  // MIXLANG_METRICS_HPP_
