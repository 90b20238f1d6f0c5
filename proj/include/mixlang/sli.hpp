// include/mixlang/sli.hpp

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

#ifndef MIXLANG_SLI_HPP_
#define MIXLANG_SLI_HPP_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "mixlang/embedding.hpp"
#include "mixlang/error.hpp"
#include "mixlang/language.hpp"
#include "mixlang/types.hpp"

namespace mixlang {
namespace sli {

class SingleClassData : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

struct TrainMeta {
  int64_t n_metalanguage = 0;
  int64_t n_target = 0;
  uint64_t seed = 0;
  double lambda = 0.1;
  int iterations_run = 0;
};

/// L2-regularized binary logistic regression over embedding vectors.
/// The metalanguage is the positive class; the decision probability is
/// sigmoid(weights . v + bias).
struct SliModel {
  Vec weights;
  double bias = 0.0;
  LanguagePair languages;
  TrainMeta train_meta;

  Eigen::Index dim() const { return weights.size(); }
};

/// Minimizes mean logistic loss + (lambda/2)*||weights||^2 by full-batch
/// gradient descent with backtracking line search (at most `max_iterations`
/// steps, stopping when the gradient infinity-norm falls below `tolerance`).
/// Deterministic given the data order; `seed` is recorded in train_meta.
/// Every example must carry a label and both labels must occur.
SliModel train_classifier(const std::vector<EmbeddingVector> &data,
                          double lambda, uint64_t seed,
                          const LanguagePair &languages = {},
                          int max_iterations = 5000,
                          double tolerance = 1e-8);

/// Mean logistic loss plus ridge penalty of a model on labelled data.
double training_loss(const SliModel &model,
                     const std::vector<EmbeddingVector> &data, double lambda);

/// Probability that `v` is metalanguage, with the label decided at the
/// 0.5 boundary (ties go to the metalanguage).
std::pair<LanguageLabel, double> predict(const SliModel &model,
                                         const EmbeddingVector &v);

/// JSON (de)serialization: weights, bias, language codes, train_meta.
std::string model_to_json(const SliModel &model);
SliModel model_from_json(const std::string &json_text);
void save_model(const std::string &path, const SliModel &model);
SliModel load_model(const std::string &path);

}  // namespace sli
}  // namespace mixlang

#endif  // MIXLANG_SLI_HPP_
