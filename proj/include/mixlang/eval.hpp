// include/mixlang/eval.hpp

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

#ifndef MIXLANG_EVAL_HPP_
#define MIXLANG_EVAL_HPP_

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mixlang/bigram.hpp"
#include "mixlang/ctc.hpp"
#include "mixlang/embedding.hpp"
#include "mixlang/error.hpp"
#include "mixlang/metrics.hpp"
#include "mixlang/text.hpp"

namespace mixlang {
namespace eval {

class InsufficientData : public ValidationError {
 public:
  using ValidationError::ValidationError;
};
class EmptyDataset : public ValidationError {
 public:
  using ValidationError::ValidationError;
};
class BackendFailure : public Error {
 public:
  using Error::Error;
};

/// Percentile (2.5/97.5) interval over bootstrap iterations.
struct ConfidenceInterval {
  double mean = 0.0;
  double low = 0.0;
  double high = 0.0;

  double width() const { return high - low; }
};

/// Per-language training subset size; nullopt means the whole 80% pool.
using SubsetSize = std::optional<int>;

std::string subset_size_name(SubsetSize size);  // "All" or the number

/// Few-shot SLI study: F1 per training size plus paired All-vs-k
/// differences, each with a 95% percentile bootstrap interval.
struct SliBootstrapReport {
  std::vector<std::pair<SubsetSize, ConfidenceInterval>> per_size;
  std::vector<std::pair<std::string, ConfidenceInterval>> per_comparison;
  // Per-iteration F1 values, one row per size (same order as per_size),
  // kept for CSV export and external plotting.
  std::vector<std::vector<double>> f1_by_size;
  int iterations = 0;
  uint64_t seed = 0;

  const ConfidenceInterval &size_ci(SubsetSize size) const;
  std::string to_json() const;
  std::string to_csv() const;
};

/// One bootstrap study: every iteration shuffles the data, holds out 20%
/// as a shared test set, nest-samples per-language subsets of each size
/// from the remaining 80%, trains one classifier per size and scores F1
/// against the metalanguage as positive class. Differences are paired per
/// iteration (F1_All - F1_k). Iterations draw independent per-iteration
/// seeds from `seed`, so results do not depend on execution order.
SliBootstrapReport sli_bootstrap(const std::vector<sli::EmbeddingVector> &data,
                                 const std::vector<int> &sizes, int iterations,
                                 uint64_t seed, double lambda = 0.1,
                                 const LanguagePair &languages = {});

struct SplitSpec {
  double train_fraction = 0.8;
  std::vector<double> subset_fractions;
  int folds = 10;
  uint64_t seed = 0;

  void validate() const;
};

/// One cross-validation fold: index lists into the caller's utterance
/// vector. subsets[i] is the prefix sample for subset_fractions[i];
/// smaller fractions are subsets of larger ones within the fold.
struct Split {
  std::vector<int> train;
  std::vector<int> test;
  std::vector<std::vector<int>> subsets;
};

std::vector<Split> make_splits(int num_utterances, const SplitSpec &spec);

/// An acoustic backend renders logits for one utterance; failures are
/// reported as BackendFailure tagged with the utterance id.
struct Utterance {
  std::string id;
  NormText text;
};

using AcousticBackend = std::function<ctc::LogitMatrix(const Utterance &)>;

struct FusionParams {
  double alpha = 0.5;
  double beta = 1.0;
  int beam_width = 25;
};

struct FoldResult {
  int train_size = 0;
  int test_size = 0;
  std::vector<int> subset_sizes;
  metrics::ErrorCounts greedy_word;
  metrics::ErrorCounts greedy_char;
  std::optional<metrics::ErrorCounts> fused_word;
  std::optional<metrics::ErrorCounts> fused_char;
};

struct AsrReport {
  std::vector<FoldResult> folds;
  metrics::SummaryStats greedy_wer;
  metrics::SummaryStats greedy_cer;
  std::optional<metrics::SummaryStats> fused_wer;
  std::optional<metrics::SummaryStats> fused_cer;

  std::string to_json() const;
  std::string to_csv() const;
};

/// Decodes every test utterance of every fold with the greedy decoder
/// and, when `lm` is given, again with beam search + shallow fusion.
/// WER/CER are pooled per fold (summed counts over summed reference
/// lengths) and summarized across folds.
AsrReport asr_experiment(const AcousticBackend &backend,
                         const std::vector<Utterance> &utterances,
                         const std::vector<Split> &splits,
                         const lm::BigramLm *lm = nullptr,
                         const FusionParams &fusion = {});

}  // namespace eval
}  // namespace mixlang

#endif  // MIXLANG_EVAL_HPP_
