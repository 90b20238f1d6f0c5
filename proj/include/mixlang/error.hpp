// include/mixlang/error.hpp

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

#ifndef MIXLANG_ERROR_HPP_
#define MIXLANG_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace mixlang {

/// Base class of everything thrown by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string &msg) : std::runtime_error(msg) {}
};

/// Invalid arguments, broken preconditions, inconsistent data.
/// CLI maps these to exit code 1.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Malformed input files (bad headers, unparsable lines, truncation).
/// CLI maps these to exit code 1.
class FormatError : public Error {
 public:
  using Error::Error;
};

/// Filesystem-level failures (missing file, unreadable, write failure).
/// CLI maps these to exit code 2.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace mixlang

#endif  // MIXLANG_ERROR_HPP_
