// include/mixlang/arpa.hpp

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

#ifndef MIXLANG_ARPA_HPP_
#define MIXLANG_ARPA_HPP_

#include <string>

#include "mixlang/bigram.hpp"
#include "mixlang/error.hpp"

namespace mixlang {
namespace lm {

class ArpaParseError : public FormatError {
 public:
  using FormatError::FormatError;
};
class UnsupportedOrder : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// Serializes the model in ARPA text format: \data\ section with ngram
/// counts, \1-grams: as `logp<TAB>word<TAB>backoff`, \2-grams: as
/// `logp<TAB>w1 w2`, closed by \end\. log10 probabilities throughout.
std::string write_arpa(const BigramLm &lm);
void save_arpa(const std::string &path, const BigramLm &lm);

/// Parses an order-1/2 ARPA file. Orders above 2 raise UnsupportedOrder;
/// structural problems raise ArpaParseError with a line number.
/// read_arpa(write_arpa(lm)) scores every word sequence identically to
/// `lm` within 1e-6 log10.
BigramLm read_arpa(const std::string &text);
BigramLm load_arpa(const std::string &path);

}  // namespace lm
}  // namespace mixlang

#endif  // MIXLANG_ARPA_HPP_
