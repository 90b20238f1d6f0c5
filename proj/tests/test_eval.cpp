// tests/test_eval.cpp

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

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "mixlang/eval.hpp"

using namespace mixlang;
using namespace mixlang::eval;

namespace {

const LanguagePair kLangs;

std::vector<sli::EmbeddingVector> gaussian_embeddings(int per_class, int dim,
                                                      double offset,
                                                      uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> noise(0.0, 1.0);
  std::vector<sli::EmbeddingVector> out;
  for (int c = 0; c < 2; ++c) {
    for (int i = 0; i < per_class; ++i) {
      sli::EmbeddingVector v;
      v.id = "e" + std::to_string(c) + "_" + std::to_string(i);
      v.values.resize(dim);
      for (int k = 0; k < dim; ++k) v.values[k] = noise(rng);
      v.values[0] += c == 0 ? offset : -offset;
      v.values.normalize();
      v.label = c == 0 ? kLangs.metalanguage() : kLangs.target();
      out.push_back(std::move(v));
    }
  }
  return out;
}

}  // namespace

TEST_CASE("sli_bootstrap confidence intervals") {
  const auto data = gaussian_embeddings(40, 8, 2.0, 3);

  SUBCASE("a single iteration collapses the interval onto the mean") {
    const auto report = sli_bootstrap(data, {1, 5}, 1, 7);
    for (const auto &[size, ci] : report.per_size) {
      CHECK(ci.low == ci.mean);
      CHECK(ci.high == ci.mean);
    }
  }
  SUBCASE("intervals bracket the mean and the median") {
    const auto report = sli_bootstrap(data, {1, 5}, 40, 7);
    for (size_t si = 0; si < report.per_size.size(); ++si) {
      const auto &ci = report.per_size[si].second;
      CHECK(ci.low <= ci.mean + 1e-12);
      CHECK(ci.mean <= ci.high + 1e-12);
      std::vector<double> values = report.f1_by_size[si];
      std::sort(values.begin(), values.end());
      const double median = values[values.size() / 2];
      CHECK(ci.low <= median + 1e-12);
      CHECK(median <= ci.high + 1e-12);
      CHECK(ci.width() == doctest::Approx(ci.high - ci.low));
    }
  }
  SUBCASE("differences are paired against the full pool") {
    const auto report = sli_bootstrap(data, {1}, 10, 7);
    REQUIRE(report.per_comparison.size() == 1);
    CHECK(report.per_comparison[0].first == "All vs 1");
    double mean_diff = 0.0;
    for (int it = 0; it < 10; ++it) {
      mean_diff += report.f1_by_size[1][it] - report.f1_by_size[0][it];
    }
    mean_diff /= 10.0;
    CHECK(report.per_comparison[0].second.mean == doctest::Approx(mean_diff));
  }
  SUBCASE("identical seeds give identical reports") {
    const auto a = sli_bootstrap(data, {1, 5}, 15, 99);
    const auto b = sli_bootstrap(data, {1, 5}, 15, 99);
    CHECK(a.to_json() == b.to_json());
    CHECK(a.to_csv() == b.to_csv());
    const auto c = sli_bootstrap(data, {1, 5}, 15, 100);
    CHECK(a.to_json() != c.to_json());
  }
  SUBCASE("insufficient data is rejected up front") {
    const auto small = gaussian_embeddings(10, 4, 2.0, 5);
    CHECK_THROWS_AS(sli_bootstrap(small, {50}, 5, 0), InsufficientData);
  }
  SUBCASE("at least one iteration is required") {
    CHECK_THROWS_AS(sli_bootstrap(data, {1}, 0, 0), ValidationError);
  }
}

TEST_CASE("make_splits produces deterministic nested splits") {
  SplitSpec spec;
  spec.train_fraction = 0.8;
  spec.subset_fractions = {0.01, 0.2, 1.0};
  spec.folds = 5;
  spec.seed = 13;

  SUBCASE("sizes follow the fractions") {
    const auto splits = make_splits(100, spec);
    REQUIRE(splits.size() == 5);
    for (const auto &split : splits) {
      CHECK(split.train.size() == 80);
      CHECK(split.test.size() == 20);
      REQUIRE(split.subsets.size() == 3);
      CHECK(split.subsets[0].size() == 1);   // 1% of 80 rounds up to 1
      CHECK(split.subsets[1].size() == 16);  // 20% of 80
      CHECK(split.subsets[2].size() == 80);  // the identity fraction
      CHECK(split.subsets[2] == split.train);
    }
  }
  SUBCASE("the same seed reproduces the same splits") {
    const auto a = make_splits(100, spec);
    const auto b = make_splits(100, spec);
    for (size_t f = 0; f < a.size(); ++f) {
      CHECK(a[f].train == b[f].train);
      CHECK(a[f].test == b[f].test);
    }
    SplitSpec other = spec;
    other.seed = 14;
    CHECK(make_splits(100, other)[0].train != a[0].train);
  }
  SUBCASE("subsets nest and train/test partition the data") {
    const auto splits = make_splits(53, spec);
    for (const auto &split : splits) {
      for (size_t i = 0; i + 1 < split.subsets.size(); ++i) {
        const auto &small = split.subsets[i];
        const auto &large = split.subsets[i + 1];
        CHECK(std::equal(small.begin(), small.end(), large.begin()));
      }
      std::set<int> all(split.train.begin(), split.train.end());
      all.insert(split.test.begin(), split.test.end());
      CHECK(all.size() == 53);
    }
  }
  SUBCASE("degenerate inputs are rejected") {
    CHECK_THROWS_AS(make_splits(0, spec), EmptyDataset);
    SplitSpec bad = spec;
    bad.subset_fractions = {0.0};
    CHECK_THROWS_AS(make_splits(10, bad), ValidationError);
    bad = spec;
    bad.folds = 0;
    CHECK_THROWS_AS(make_splits(10, bad), ValidationError);
  }
}

TEST_CASE("asr_experiment decodes folds and summarizes") {
  std::vector<Utterance> utterances;
  const std::vector<std::string> sentences = {
      "THE SPEAR FLEW", "A KANGAROO", "SOFT WORDS", "THE RIVER BANK",
      "BIRDS SING",     "DRY CREEK",  "OLD TAPES",  "CLEAR SPEECH"};
  for (size_t i = 0; i < sentences.size(); ++i) {
    utterances.push_back(
        {"u" + std::to_string(i), NormText::from_normalized(sentences[i])});
  }
  SplitSpec spec;
  spec.folds = 3;
  spec.seed = 4;
  const auto splits = make_splits(static_cast<int>(utterances.size()), spec);

  SUBCASE("a noiseless backend yields zero WER on every fold") {
    const auto backend = [](const Utterance &utt) {
      return ctc::mock_acoustic(utt.text, 3, -INFINITY, 0);
    };
    const auto report = asr_experiment(backend, utterances, splits);
    for (const auto &fold : report.folds) {
      CHECK(fold.greedy_word.rate() == 0.0);
      CHECK(fold.greedy_char.rate() == 0.0);
    }
    CHECK(report.greedy_wer.mean == 0.0);
    CHECK_FALSE(report.fused_wer.has_value());
  }
  SUBCASE("backend failures carry the utterance id") {
    const auto backend = [](const Utterance &utt) -> ctc::LogitMatrix {
      throw std::runtime_error("backend exploded on " + utt.id);
    };
    try {
      asr_experiment(backend, utterances, splits);
      FAIL("expected BackendFailure");
    } catch (const BackendFailure &e) {
      CHECK(std::string(e.what()).find("utterance u") != std::string::npos);
    }
  }
  SUBCASE("fused decoding is reported when an LM is supplied") {
    std::vector<NormText> corpus;
    for (const auto &s : sentences) corpus.push_back(NormText::from_normalized(s));
    const lm::BigramLm model = lm::train_bigram(corpus, 0.75);
    const auto backend = [](const Utterance &utt) {
      return ctc::mock_acoustic(utt.text, 3, -INFINITY, 0);
    };
    const auto report =
        asr_experiment(backend, utterances, splits, &model, {0.5, 1.0, 8});
    REQUIRE(report.fused_wer.has_value());
    CHECK(report.fused_wer->mean == 0.0);
    CHECK(report.to_json().find("fused_wer") != std::string::npos);
    CHECK(report.to_csv().find("fused_wer") != std::string::npos);
  }
}
