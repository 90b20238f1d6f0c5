// include/mixlang/rng.hpp

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

#ifndef MIXLANG_RNG_HPP_
#define MIXLANG_RNG_HPP_

#include <cstdint>
#include <random>

namespace mixlang {

/// splitmix64 step; the standard finalizer with good avalanche behaviour.
inline uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Independent per-task seed derived from a master seed and a task index.
/// Tasks seeded this way can run in any order or in parallel and still
/// reproduce the same streams.
inline uint64_t derive_seed(uint64_t master, uint64_t index) {
  return splitmix64(splitmix64(master) ^ splitmix64(index + 1));
}

inline std::mt19937_64 make_rng(uint64_t seed) {
  return std::mt19937_64(splitmix64(seed));
}

}  // namespace mixlang

#endif  // MIXLANG_RNG_HPP_
