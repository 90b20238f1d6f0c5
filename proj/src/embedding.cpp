// src/embedding.cpp

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

#include "mixlang/embedding.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace mixlang {
namespace sli {

namespace {

std::vector<std::string> split_tabs(const std::string &line) {
  std::vector<std::string> out;
  size_t begin = 0;
  while (true) {
    const size_t tab = line.find('\t', begin);
    if (tab == std::string::npos) {
      out.push_back(line.substr(begin));
      return out;
    }
    out.push_back(line.substr(begin, tab - begin));
    begin = tab + 1;
  }
}

}  // namespace

std::vector<EmbeddingVector> ingest_embeddings(std::istream &in,
                                               const LanguagePair &languages,
                                               const std::string &source) {
  std::vector<EmbeddingVector> out;
  Eigen::Index dim = -1;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto at = [&] { return source + ":" + std::to_string(lineno); };

    const auto cols = split_tabs(line);
    if (cols.size() < 3) {
      throw FormatError(at() + ": expected id, label and at least one value");
    }
    EmbeddingVector v;
    v.id = cols[0];
    if (!cols[1].empty()) {
      v.label = languages.from_code(cols[1]);
      if (!v.label) {
        throw FormatError(at() + ": unknown language code \"" + cols[1] +
                          "\"");
      }
    }

    const Eigen::Index d = static_cast<Eigen::Index>(cols.size()) - 2;
    if (dim < 0) {
      dim = d;
    } else if (d != dim) {
      throw DimensionMismatch(at() + ": row has " + std::to_string(d) +
                              " values, expected " + std::to_string(dim));
    }
    v.values.resize(d);
    for (Eigen::Index i = 0; i < d; ++i) {
      const std::string &tok = cols[i + 2];
      try {
        size_t used = 0;
        v.values[i] = std::stod(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception &) {
        throw FormatError(at() + ": cannot parse value \"" + tok + "\"");
      }
    }
    if (!v.values.allFinite()) {
      throw NonFiniteValue(at() + ": embedding contains a non-finite value");
    }
    const double norm = v.values.norm();
    if (norm == 0.0) {
      throw NonFiniteValue(at() + ": zero embedding cannot be normalized");
    }
    v.values /= norm;
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<EmbeddingVector> ingest_embeddings(const std::string &path,
                                               const LanguagePair &languages) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  return ingest_embeddings(in, languages, path);
}

}  // namespace sli
}  // namespace mixlang
