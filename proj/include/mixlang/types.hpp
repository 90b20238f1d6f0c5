// include/mixlang/types.hpp

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

#ifndef MIXLANG_TYPES_HPP_
#define MIXLANG_TYPES_HPP_

#include <Eigen/Core>

namespace mixlang {

using Scalar = double;

// Dynamic vectors and matrices. Eigen is the only math dependency.
using Vec = Eigen::VectorX<Scalar>;
using Mat = Eigen::MatrixX<Scalar>;
using VecF = Eigen::VectorXf;
// Logit frames are stored row-per-frame, matching the on-disk layout.
using MatF = Eigen::Matrix<float, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

using VecRef = Eigen::Ref<Vec>;
using ConstVecRef = Eigen::Ref<const Vec>;
using ConstMatRef = Eigen::Ref<const Mat>;

}  // namespace mixlang

#endif  // MIXLANG_TYPES_HPP_
