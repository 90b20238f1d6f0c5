// include/mixlang/embedding.hpp

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

#ifndef MIXLANG_EMBEDDING_HPP_
#define MIXLANG_EMBEDDING_HPP_

#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "mixlang/error.hpp"
#include "mixlang/language.hpp"
#include "mixlang/types.hpp"

namespace mixlang {
namespace sli {

/// One utterance-level speech representation, L2-normalized at ingestion
/// so dot products behave like cosine similarities.
struct EmbeddingVector {
  std::string id;
  Vec values;
  std::optional<LanguageLabel> label;
};

class DimensionMismatch : public ValidationError {
 public:
  using ValidationError::ValidationError;
};
class NonFiniteValue : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// Reads embeddings from a TSV of rows `id<TAB>label<TAB>v1<TAB>...<TAB>vd`.
/// The label column may be empty (unlabelled utterance) or one of the two
/// configured display codes. All rows must share the same dimension.
/// Vectors are validated (finite, nonzero) and L2-normalized.
std::vector<EmbeddingVector> ingest_embeddings(
    const std::string &path, const LanguagePair &languages = {});

/// Stream variant of ingest_embeddings; `source` names the stream in errors.
std::vector<EmbeddingVector> ingest_embeddings(
    std::istream &in, const LanguagePair &languages,
    const std::string &source);

}  // namespace sli
}  // namespace mixlang

#endif  // MIXLANG_EMBEDDING_HPP_
