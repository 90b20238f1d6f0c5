// src/sli.cpp

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

#include "mixlang/sli.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace mixlang {
namespace sli {

namespace {

using json = nlohmann::json;

// log(1 + exp(x)) without overflow.
double softplus(double x) {
  return x > 0.0 ? x + std::log1p(std::exp(-x)) : std::log1p(std::exp(x));
}

double sigmoid(double x) {
  return x >= 0.0 ? 1.0 / (1.0 + std::exp(-x))
                  : std::exp(x) / (1.0 + std::exp(x));
}

struct Dataset {
  Mat features;  // n x d
  Vec targets;   // +1 metalanguage, -1 target language
};

Dataset build_dataset(const std::vector<EmbeddingVector> &data,
                      const LanguagePair &languages) {
  if (data.empty()) throw SingleClassData("training data is empty");
  const Eigen::Index d = data.front().values.size();
  Dataset ds;
  ds.features.resize(static_cast<Eigen::Index>(data.size()), d);
  ds.targets.resize(static_cast<Eigen::Index>(data.size()));
  int64_t positives = 0, negatives = 0;
  for (size_t i = 0; i < data.size(); ++i) {
    const EmbeddingVector &v = data[i];
    if (v.values.size() != d) {
      throw DimensionMismatch("embedding " + v.id + " has dimension " +
                              std::to_string(v.values.size()) +
                              ", expected " + std::to_string(d));
    }
    if (!v.label) {
      throw ValidationError("embedding " + v.id + " is unlabelled");
    }
    const bool positive = v.label->is_metalanguage();
    ds.features.row(static_cast<Eigen::Index>(i)) = v.values.transpose();
    ds.targets[static_cast<Eigen::Index>(i)] = positive ? 1.0 : -1.0;
    (positive ? positives : negatives) += 1;
  }
  if (positives == 0 || negatives == 0) {
    throw SingleClassData("training data covers only " +
                          (positives == 0 ? languages.target_code()
                                          : languages.metalanguage_code()));
  }
  return ds;
}

double objective(const Dataset &ds, const Vec &w, double b, double lambda) {
  const Vec z = ds.features * w + Vec::Constant(ds.targets.size(), b);
  double loss = 0.0;
  for (Eigen::Index i = 0; i < z.size(); ++i) {
    loss += softplus(-ds.targets[i] * z[i]);
  }
  loss /= static_cast<double>(z.size());
  return loss + 0.5 * lambda * w.squaredNorm();
}

}  // namespace

SliModel train_classifier(const std::vector<EmbeddingVector> &data,
                          double lambda, uint64_t seed,
                          const LanguagePair &languages, int max_iterations,
                          double tolerance) {
  if (lambda < 0.0) throw ValidationError("lambda must be non-negative");
  const Dataset ds = build_dataset(data, languages);
  const Eigen::Index n = ds.targets.size();
  const Eigen::Index d = ds.features.cols();

  Vec w = Vec::Zero(d);
  double b = 0.0;
  double loss = objective(ds, w, b, lambda);
  int iterations = 0;
  double step = 1.0;

  for (; iterations < max_iterations; ++iterations) {
    const Vec z = ds.features * w + Vec::Constant(n, b);
    // dL/dz_i = -y_i * sigmoid(-y_i z_i) / n
    Vec dz(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      dz[i] = -ds.targets[i] * sigmoid(-ds.targets[i] * z[i]) /
              static_cast<double>(n);
    }
    const Vec grad_w = ds.features.transpose() * dz + lambda * w;
    const double grad_b = dz.sum();

    const double grad_inf =
        std::max(grad_w.cwiseAbs().maxCoeff(), std::abs(grad_b));
    if (grad_inf < tolerance) break;

    // Backtracking line search (Armijo, c = 1e-4).
    const double grad_sq = grad_w.squaredNorm() + grad_b * grad_b;
    double t = std::min(step * 2.0, 1e4);
    double new_loss = loss;
    Vec new_w = w;
    double new_b = b;
    while (t > 1e-20) {
      new_w = w - t * grad_w;
      new_b = b - t * grad_b;
      new_loss = objective(ds, new_w, new_b, lambda);
      if (new_loss <= loss - 1e-4 * t * grad_sq) break;
      t *= 0.5;
    }
    if (new_loss >= loss) break;  // step search exhausted
    w = std::move(new_w);
    b = new_b;
    loss = new_loss;
    step = t;
  }

  SliModel model;
  model.weights = std::move(w);
  model.bias = b;
  model.languages = languages;
  model.train_meta.seed = seed;
  model.train_meta.lambda = lambda;
  model.train_meta.iterations_run = iterations;
  for (const EmbeddingVector &v : data) {
    (v.label->is_metalanguage() ? model.train_meta.n_metalanguage
                                : model.train_meta.n_target) += 1;
  }
  return model;
}

double training_loss(const SliModel &model,
                     const std::vector<EmbeddingVector> &data, double lambda) {
  const Dataset ds = build_dataset(data, model.languages);
  return objective(ds, model.weights, model.bias, lambda);
}

std::pair<LanguageLabel, double> predict(const SliModel &model,
                                         const EmbeddingVector &v) {
  if (v.values.size() != model.dim()) {
    throw DimensionMismatch("embedding " + v.id + " has dimension " +
                            std::to_string(v.values.size()) + ", model has " +
                            std::to_string(model.dim()));
  }
  const double p = sigmoid(model.weights.dot(v.values) + model.bias);
  // Ties at exactly 0.5 resolve to the metalanguage: a misrouted target
  // utterance only costs a discarded transcript, the reverse loses one.
  const LanguageLabel label = p >= 0.5 ? model.languages.metalanguage()
                                       : model.languages.target();
  return {label, p};
}

std::string model_to_json(const SliModel &model) {
  json j;
  j["weights"] = std::vector<double>(
      model.weights.begin(), model.weights.begin() + model.weights.size());
  j["bias"] = model.bias;
  j["languages"] = {{"metalanguage", model.languages.metalanguage_code()},
                    {"target", model.languages.target_code()}};
  j["positive_label"] = model.languages.metalanguage_code();
  j["train_meta"] = {{"n_metalanguage", model.train_meta.n_metalanguage},
                     {"n_target", model.train_meta.n_target},
                     {"seed", model.train_meta.seed},
                     {"lambda", model.train_meta.lambda},
                     {"iterations_run", model.train_meta.iterations_run}};
  return j.dump(2) + "\n";
}

SliModel model_from_json(const std::string &json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error &e) {
    throw FormatError(std::string("invalid model JSON: ") + e.what());
  }
  try {
    SliModel model;
    const auto weights = j.at("weights").get<std::vector<double>>();
    model.weights.resize(static_cast<Eigen::Index>(weights.size()));
    for (size_t i = 0; i < weights.size(); ++i) {
      model.weights[static_cast<Eigen::Index>(i)] = weights[i];
    }
    model.bias = j.at("bias").get<double>();
    model.languages =
        LanguagePair(j.at("languages").at("metalanguage").get<std::string>(),
                     j.at("languages").at("target").get<std::string>());
    if (j.contains("train_meta")) {
      const auto &m = j["train_meta"];
      model.train_meta.n_metalanguage = m.value("n_metalanguage", int64_t{0});
      model.train_meta.n_target = m.value("n_target", int64_t{0});
      model.train_meta.seed = m.value("seed", uint64_t{0});
      model.train_meta.lambda = m.value("lambda", 0.1);
      model.train_meta.iterations_run = m.value("iterations_run", 0);
    }
    return model;
  } catch (const json::exception &e) {
    throw FormatError(std::string("invalid model JSON: ") + e.what());
  }
}

void save_model(const std::string &path, const SliModel &model) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw IoError("cannot write " + path);
  out << model_to_json(model);
  if (!out) throw IoError("write failed: " + path);
}

SliModel load_model(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return model_from_json(ss.str());
}

}  // namespace sli
}  // namespace mixlang
