// src/eval.cpp

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

#include "mixlang/eval.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "mixlang/rng.hpp"
#include "mixlang/sli.hpp"

namespace mixlang {
namespace eval {

namespace {

using json = nlohmann::json;

double quantile(const std::vector<double> &sorted_values, double q) {
  const auto n = sorted_values.size();
  const double pos = q * static_cast<double>(n - 1);
  const size_t lo = static_cast<size_t>(pos);
  const size_t hi = std::min(lo + 1, n - 1);
  const double frac = pos - static_cast<double>(lo);
  return sorted_values[lo] * (1.0 - frac) + sorted_values[hi] * frac;
}

ConfidenceInterval percentile_ci(const std::vector<double> &values) {
  std::vector<double> sorted = values;
  std::sort(sorted.begin(), sorted.end());
  ConfidenceInterval ci;
  ci.mean = std::accumulate(values.begin(), values.end(), 0.0) /
            static_cast<double>(values.size());
  ci.low = quantile(sorted, 0.025);
  ci.high = quantile(sorted, 0.975);
  return ci;
}

json stats_to_json(const metrics::SummaryStats &s) {
  return {{"mean", s.mean}, {"sd", s.sd},   {"min", s.min},
          {"max", s.max},   {"n", s.n}};
}

json counts_to_json(const metrics::ErrorCounts &c) {
  return {{"S", c.substitutions},
          {"I", c.insertions},
          {"D", c.deletions},
          {"n_ref_tokens", c.reference_length},
          {"rate", c.rate()}};
}

}  // namespace

std::string subset_size_name(SubsetSize size) {
  return size ? std::to_string(*size) : std::string("All");
}

const ConfidenceInterval &SliBootstrapReport::size_ci(SubsetSize size) const {
  for (const auto &[s, ci] : per_size) {
    if (s == size) return ci;
  }
  throw ValidationError("no such subset size in report: " +
                        subset_size_name(size));
}

SliBootstrapReport sli_bootstrap(const std::vector<sli::EmbeddingVector> &data,
                                 const std::vector<int> &sizes, int iterations,
                                 uint64_t seed, double lambda,
                                 const LanguagePair &languages) {
  if (iterations < 1) throw ValidationError("iterations must be >= 1");
  std::vector<int> ordered_sizes = sizes;
  std::sort(ordered_sizes.begin(), ordered_sizes.end());
  for (int k : ordered_sizes) {
    if (k < 1) throw ValidationError("subset sizes must be >= 1");
  }

  const int n = static_cast<int>(data.size());
  int64_t per_language[2] = {0, 0};
  for (const sli::EmbeddingVector &v : data) {
    if (!v.label) throw ValidationError("embedding " + v.id + " is unlabelled");
    ++per_language[v.label->is_metalanguage() ? 0 : 1];
  }
  const int test_count = static_cast<int>(std::llround(0.2 * n));
  const int largest = ordered_sizes.empty() ? 1 : ordered_sizes.back();
  // Worst case, the 20% holdout eats into the rarer language entirely.
  if (std::min(per_language[0], per_language[1]) - test_count < largest) {
    throw InsufficientData(
        "need at least " + std::to_string(largest) +
        " training examples per language after the 20% holdout");
  }

  // Subset sizes to evaluate, the full pool last.
  std::vector<SubsetSize> all_sizes;
  for (int k : ordered_sizes) all_sizes.emplace_back(k);
  all_sizes.emplace_back(std::nullopt);

  std::vector<std::vector<double>> f1_by_size(all_sizes.size());
  const LanguageLabel positive = languages.metalanguage();

  for (int it = 0; it < iterations; ++it) {
    const uint64_t iter_seed = derive_seed(seed, static_cast<uint64_t>(it));
    auto rng = make_rng(iter_seed);
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);

    std::vector<int> test(order.begin(), order.begin() + test_count);
    std::vector<LanguageLabel> golds;
    golds.reserve(test.size());
    for (int i : test) golds.push_back(*data[i].label);

    // Per-language pools keep the shuffled order, so prefixes nest:
    // the size-k sample is contained in every larger sample.
    std::vector<int> pool_meta, pool_target;
    for (auto idx = order.begin() + test_count; idx != order.end(); ++idx) {
      (data[*idx].label->is_metalanguage() ? pool_meta : pool_target)
          .push_back(*idx);
    }
    if (static_cast<int>(pool_meta.size()) < largest ||
        static_cast<int>(pool_target.size()) < largest) {
      throw InsufficientData("iteration " + std::to_string(it) +
                             " leaves fewer than " + std::to_string(largest) +
                             " examples in a language pool");
    }

    for (size_t si = 0; si < all_sizes.size(); ++si) {
      std::vector<sli::EmbeddingVector> train;
      if (all_sizes[si]) {
        const int k = *all_sizes[si];
        for (int i = 0; i < k; ++i) train.push_back(data[pool_meta[i]]);
        for (int i = 0; i < k; ++i) train.push_back(data[pool_target[i]]);
      } else {
        for (auto idx = order.begin() + test_count; idx != order.end();
             ++idx) {
          train.push_back(data[*idx]);
        }
      }
      const sli::SliModel model =
          sli::train_classifier(train, lambda, iter_seed, languages);
      std::vector<LanguageLabel> preds;
      preds.reserve(test.size());
      for (int i : test) preds.push_back(sli::predict(model, data[i]).first);
      f1_by_size[si].push_back(metrics::f1(golds, preds, positive));
    }
  }

  SliBootstrapReport report;
  report.iterations = iterations;
  report.seed = seed;
  report.f1_by_size = f1_by_size;
  for (size_t si = 0; si < all_sizes.size(); ++si) {
    report.per_size.emplace_back(all_sizes[si], percentile_ci(f1_by_size[si]));
  }
  const auto &f1_all = f1_by_size.back();
  for (size_t si = 0; si + 1 < all_sizes.size(); ++si) {
    std::vector<double> diffs(f1_all.size());
    for (size_t it = 0; it < f1_all.size(); ++it) {
      diffs[it] = f1_all[it] - f1_by_size[si][it];
    }
    report.per_comparison.emplace_back(
        "All vs " + subset_size_name(all_sizes[si]), percentile_ci(diffs));
  }
  return report;
}

std::string SliBootstrapReport::to_json() const {
  json j;
  j["iterations"] = iterations;
  j["seed"] = seed;
  json sizes = json::object();
  for (const auto &[size, ci] : per_size) {
    sizes[subset_size_name(size)] = {{"mean_f1", ci.mean},
                                     {"ci_low", ci.low},
                                     {"ci_high", ci.high},
                                     {"ci_width", ci.width()}};
  }
  j["per_size"] = sizes;
  json comparisons = json::object();
  for (const auto &[name, ci] : per_comparison) {
    comparisons[name] = {{"mean_diff", ci.mean},
                         {"ci_low", ci.low},
                         {"ci_high", ci.high},
                         {"ci_width", ci.width()}};
  }
  j["per_comparison"] = comparisons;
  return j.dump(2) + "\n";
}

std::string SliBootstrapReport::to_csv() const {
  std::ostringstream out;
  out << "iteration";
  for (const auto &[size, ci] : per_size) {
    out << ",f1_" << subset_size_name(size);
  }
  out << "\n";
  for (int it = 0; it < iterations; ++it) {
    out << it;
    for (const auto &column : f1_by_size) {
      out << "," << column[static_cast<size_t>(it)];
    }
    out << "\n";
  }
  return out.str();
}

void SplitSpec::validate() const {
  if (!(train_fraction > 0.0 && train_fraction <= 1.0)) {
    throw ValidationError("train_fraction must lie in (0,1]");
  }
  for (double f : subset_fractions) {
    if (!(f > 0.0 && f <= 1.0)) {
      throw ValidationError("subset_fractions must lie in (0,1]");
    }
  }
  if (folds < 1) throw ValidationError("folds must be >= 1");
}

std::vector<Split> make_splits(int num_utterances, const SplitSpec &spec) {
  spec.validate();
  if (num_utterances < 1) throw EmptyDataset("no utterances to split");

  std::vector<Split> out;
  out.reserve(static_cast<size_t>(spec.folds));
  for (int fold = 0; fold < spec.folds; ++fold) {
    auto rng = make_rng(derive_seed(spec.seed, static_cast<uint64_t>(fold)));
    std::vector<int> order(num_utterances);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);

    const int train_count = std::clamp<int>(
        static_cast<int>(std::llround(spec.train_fraction * num_utterances)),
        1, num_utterances);
    Split split;
    split.train.assign(order.begin(), order.begin() + train_count);
    split.test.assign(order.begin() + train_count, order.end());
    for (double fraction : spec.subset_fractions) {
      const int k = std::clamp<int>(
          static_cast<int>(std::llround(fraction * train_count)), 1,
          train_count);
      split.subsets.emplace_back(split.train.begin(),
                                 split.train.begin() + k);
    }
    out.push_back(std::move(split));
  }
  return out;
}

AsrReport asr_experiment(const AcousticBackend &backend,
                         const std::vector<Utterance> &utterances,
                         const std::vector<Split> &splits,
                         const lm::BigramLm *lm, const FusionParams &fusion) {
  AsrReport report;
  std::vector<double> greedy_wers, greedy_cers, fused_wers, fused_cers;
  for (const Split &split : splits) {
    FoldResult fold;
    fold.train_size = static_cast<int>(split.train.size());
    fold.test_size = static_cast<int>(split.test.size());
    for (const auto &subset : split.subsets) {
      fold.subset_sizes.push_back(static_cast<int>(subset.size()));
    }
    if (lm != nullptr) {
      fold.fused_word.emplace();
      fold.fused_char.emplace();
    }
    for (int index : split.test) {
      const Utterance &utt = utterances[static_cast<size_t>(index)];
      ctc::LogitMatrix logits;
      try {
        logits = backend(utt);
      } catch (const std::exception &e) {
        throw BackendFailure("utterance " + utt.id + ": " + e.what());
      }
      const NormText greedy = ctc::greedy_decode(logits);
      fold.greedy_word += metrics::count_word_errors(utt.text, greedy);
      fold.greedy_char += metrics::count_char_errors(utt.text, greedy);
      if (lm != nullptr) {
        const NormText fused =
            ctc::beam_decode(logits, fusion.beam_width, lm, fusion.alpha,
                             fusion.beta);
        *fold.fused_word += metrics::count_word_errors(utt.text, fused);
        *fold.fused_char += metrics::count_char_errors(utt.text, fused);
      }
    }
    greedy_wers.push_back(fold.greedy_word.rate());
    greedy_cers.push_back(fold.greedy_char.rate());
    if (lm != nullptr) {
      fused_wers.push_back(fold.fused_word->rate());
      fused_cers.push_back(fold.fused_char->rate());
    }
    report.folds.push_back(std::move(fold));
  }
  report.greedy_wer = metrics::summarize(greedy_wers);
  report.greedy_cer = metrics::summarize(greedy_cers);
  if (lm != nullptr) {
    report.fused_wer = metrics::summarize(fused_wers);
    report.fused_cer = metrics::summarize(fused_cers);
  }
  return report;
}

std::string AsrReport::to_json() const {
  json j;
  json folds_json = json::array();
  for (const FoldResult &fold : folds) {
    json f;
    f["train_size"] = fold.train_size;
    f["test_size"] = fold.test_size;
    if (!fold.subset_sizes.empty()) f["subset_sizes"] = fold.subset_sizes;
    f["greedy"] = {{"word", counts_to_json(fold.greedy_word)},
                   {"char", counts_to_json(fold.greedy_char)}};
    if (fold.fused_word) {
      f["fused"] = {{"word", counts_to_json(*fold.fused_word)},
                    {"char", counts_to_json(*fold.fused_char)}};
    }
    folds_json.push_back(std::move(f));
  }
  j["folds"] = std::move(folds_json);
  j["greedy_wer"] = stats_to_json(greedy_wer);
  j["greedy_cer"] = stats_to_json(greedy_cer);
  if (fused_wer) {
    j["fused_wer"] = stats_to_json(*fused_wer);
    j["fused_cer"] = stats_to_json(*fused_cer);
  }
  return j.dump(2) + "\n";
}

std::string AsrReport::to_csv() const {
  std::ostringstream out;
  out << "fold,greedy_wer,greedy_cer";
  const bool fused = !folds.empty() && folds.front().fused_word.has_value();
  if (fused) out << ",fused_wer,fused_cer";
  out << "\n";
  for (size_t i = 0; i < folds.size(); ++i) {
    out << i << "," << folds[i].greedy_word.rate() << ","
        << folds[i].greedy_char.rate();
    if (fused) {
      out << "," << folds[i].fused_word->rate() << ","
          << folds[i].fused_char->rate();
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace eval
}  // namespace mixlang
