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

#include "mulmap/slword.hpp"

#include <optional>

#include "mulmap/error.hpp"

namespace mulmap {

Matrix word_product(std::span<const ElementaryGen> word, std::size_t n, FieldDescriptor fd) {
  Matrix m = Matrix::Identity(n, fd);
  for (const auto& g : word) m = m * elementary(g, n);
  return m;
}

namespace {

// Applies row_target += k * row_source to m and records the inverse
// transvection, so that the recorded word multiplies back to the input.
class RowReducer {
 public:
  explicit RowReducer(Matrix m) : m_(std::move(m)) {}

  void AddRow(std::size_t target, std::size_t source, const FieldElem& k) {
    if (k.is_zero()) return;
    for (std::size_t j = 0; j < m_.n(); ++j) m_(target, j) += k * m_(source, j);
    inverse_ops_.push_back(ElementaryGen::P(target + 1, source + 1, -k));
  }

  const Matrix& m() const { return m_; }

  // E_t ... E_1 A = I  =>  A = E_1^{-1} ... E_t^{-1}.
  TransvectionWord Word() const { return inverse_ops_; }

 private:
  Matrix m_;
  TransvectionWord inverse_ops_;
};

}  // namespace

TransvectionWord decompose_sl(const Matrix& a) {
  const std::size_t n = a.n();
  if (n < 2) throw Error(ErrorCode::kDimensionMismatch, "decompose_sl requires n >= 2");
  if (!det(a).is_one()) throw Error(ErrorCode::kNotSpecialLinear, "det(A) != 1");
  const FieldDescriptor fd = a.field();
  const FieldElem one = FieldElem::FromInt(fd, 1);
  RowReducer red(a);

  for (std::size_t j = 0; j + 1 < n; ++j) {
    // Make the pivot exactly 1 using the lowest-index row below with a
    // nonzero entry in this column.
    if (!red.m()(j, j).is_one()) {
      std::optional<std::size_t> src;
      for (std::size_t r = j + 1; r < n; ++r) {
        if (!red.m()(r, j).is_zero()) {
          src = r;
          break;
        }
      }
      if (src) {
        red.AddRow(j, *src, (one - red.m()(j, j)) / red.m()(*src, j));
      } else {
        // Column is zero below the pivot, so the pivot itself is nonzero.
        const FieldElem p = red.m()(j, j);
        red.AddRow(j + 1, j, (one - red.m()(j + 1, j)) / p);
        red.AddRow(j, j + 1, one - p);
      }
    }
    for (std::size_t r = j + 1; r < n; ++r) red.AddRow(r, j, -red.m()(r, j));
  }
  // Upper unitriangular now (the last pivot is det = 1); clear above.
  for (std::size_t j = n; j-- > 1;) {
    for (std::size_t r = 0; r < j; ++r) red.AddRow(r, j, -red.m()(r, j));
  }
  return red.Word();
}

GlFactorization decompose_gl(const Matrix& a) {
  FieldElem k = det(a);
  if (k.is_zero()) throw Error(ErrorCode::kSingularMatrix, "decompose_gl of a singular matrix");
  Matrix a0 = diag_unit(a.n(), 1, k.inv()) * a;
  return {k, decompose_sl(a0)};
}

// ---------------------------------------------------------------------------

Matrix random_transvection(std::size_t n, std::span<const FieldElem> pool, Rng& rng) {
  std::size_t i = rng.index(n);
  std::size_t j = rng.index(n - 1);
  if (j >= i) ++j;
  return transvection(n, i + 1, j + 1, rng.pick(pool));
}

Matrix random_sl(std::size_t n, std::size_t length, std::span<const FieldElem> pool, Rng& rng) {
  if (pool.empty()) throw Error(ErrorCode::kInvalidArgument, "empty scalar pool");
  const FieldDescriptor fd = pool.front().field();
  Matrix m = Matrix::Identity(n, fd);
  if (n < 2) return m;
  for (std::size_t t = 0; t < length; ++t) m = m * random_transvection(n, pool, rng);
  return m;
}

Matrix random_gl(std::size_t n, std::size_t length, std::span<const FieldElem> pool, Rng& rng) {
  Matrix left = diag_unit(n, rng.index(n) + 1, rng.pick(pool));
  Matrix mid = random_sl(n, length, pool, rng);
  Matrix right = diag_unit(n, rng.index(n) + 1, rng.pick(pool));
  return left * mid * right;
}

Matrix random_unitriangular(std::size_t n, std::span<const FieldElem> pool, Rng& rng) {
  if (pool.empty()) throw Error(ErrorCode::kInvalidArgument, "empty scalar pool");
  const FieldDescriptor fd = pool.front().field();
  Matrix m = Matrix::Identity(n, fd);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      std::size_t pick = rng.index(pool.size() + 1);
      if (pick < pool.size()) m(i, j) = pool[pick];
    }
  return m;
}

Matrix random_singular(std::size_t n, std::size_t length, std::span<const FieldElem> pool, Rng& rng) {
  const FieldDescriptor fd = pool.front().field();
  std::size_t r = rng.index(n);
  Matrix left = random_gl(n, length, pool, rng);
  Matrix right = random_gl(n, length, pool, rng);
  return left * rank_idempotent(n, r, fd) * right;
}

Matrix random_sl(std::size_t n, std::size_t length, std::span<const FieldElem> pool, std::uint64_t seed) {
  Rng rng(seed);
  return random_sl(n, length, pool, rng);
}

Matrix random_gl(std::size_t n, std::size_t length, std::span<const FieldElem> pool, std::uint64_t seed) {
  Rng rng(seed);
  return random_gl(n, length, pool, rng);
}

Matrix random_unitriangular(std::size_t n, std::span<const FieldElem> pool, std::uint64_t seed) {
  Rng rng(seed);
  return random_unitriangular(n, pool, rng);
}

}  // namespace mulmap
