// Copyright 2026 The mulmap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Transvection words for SL(n) and GL(n), and seeded random group elements.

#ifndef MULMAP_SLWORD_HPP_
#define MULMAP_SLWORD_HPP_

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "mulmap/matrix.hpp"

namespace mulmap {

using TransvectionWord = std::vector<ElementaryGen>;

struct GlFactorization {
  FieldElem det_scalar;
  TransvectionWord word;
};

// Left-to-right product of the generators (any kind) in dimension n.
Matrix word_product(std::span<const ElementaryGen> word, std::size_t n, FieldDescriptor fd);

// Row-reduces A to I with transvections only. Throws kNotSpecialLinear unless
// det(A) = 1, kDimensionMismatch for n < 2. Length <= n^2 + n - 2.
TransvectionWord decompose_sl(const Matrix& a);

// A = D_1(det A) * product(word). Throws kSingularMatrix.
GlFactorization decompose_gl(const Matrix& a);

// Thin wrapper over mt19937_64; draws are reduced with `%` so a seed gives
// the same stream on every standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::size_t index(std::size_t bound) { return static_cast<std::size_t>(engine_() % bound); }
  std::uint64_t next() { return engine_(); }

  template <typename T>
  const T& pick(std::span<const T> items) {
    return items[index(items.size())];
  }

 private:
  std::mt19937_64 engine_;
};

Matrix random_transvection(std::size_t n, std::span<const FieldElem> pool, Rng& rng);
Matrix random_sl(std::size_t n, std::size_t length, std::span<const FieldElem> pool, Rng& rng);
// D_i(k) * random_sl(...) * D_j(k').
Matrix random_gl(std::size_t n, std::size_t length, std::span<const FieldElem> pool, Rng& rng);
// Unit diagonal, entries above it drawn from pool ∪ {0}.
Matrix random_unitriangular(std::size_t n, std::span<const FieldElem> pool, Rng& rng);
// random_gl * rank_idempotent(r) * random_gl with r uniform in 0..n-1.
Matrix random_singular(std::size_t n, std::size_t length, std::span<const FieldElem> pool, Rng& rng);

Matrix random_sl(std::size_t n, std::size_t length, std::span<const FieldElem> pool, std::uint64_t seed);
Matrix random_gl(std::size_t n, std::size_t length, std::span<const FieldElem> pool, std::uint64_t seed);
Matrix random_unitriangular(std::size_t n, std::span<const FieldElem> pool, std::uint64_t seed);

}  // namespace mulmap

#endif  // MULMAP_SLWORD_HPP_
