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


#include "mulmap/verify.hpp"

#include "mulmap/error.hpp"
#include "mulmap/slword.hpp"

namespace mulmap {

namespace {

bool Holds(const MatrixMap& f, const Matrix& a, const Matrix& b) {
  return f(a * b) == f(a) * f(b);
}

// Zeroes entries of a one at a time while the failure persists.
void Shrink(Matrix& a, const std::function<bool(const Matrix&)>& fails) {
  for (std::size_t i = 0; i < a.n(); ++i)
    for (std::size_t j = 0; j < a.n(); ++j) {
      if (a(i, j).is_zero()) continue;
      Matrix trial = a;
      trial(i, j) = FieldElem(a.field());
      if (fails(trial)) a = std::move(trial);
    }
}

Matrix Sample(std::size_t n, std::size_t i, std::span<const FieldElem> pool, Rng& rng) {
  return i % 4 == 3 ? random_singular(n, n + 2, pool, rng) : random_gl(n, n + 2, pool, rng);
}

}  // namespace

Verdict check_multiplicative(std::size_t n, FieldDescriptor fd, const MatrixMap& f,
                             const VerifyOptions& opts) {
  Rng rng(opts.seed);
  const std::vector<FieldElem> pool = default_scalar_pool(fd);
  Verdict v{true, std::nullopt, 0, opts.seed};
  for (std::size_t i = 0; i < opts.samples; ++i) {
    Matrix a = Sample(n, i, pool, rng);
    Matrix b = Sample(n, i + 1 + rng.index(3), pool, rng);
    ++v.samples;
    if (Holds(f, a, b)) continue;
    Shrink(a, [&](const Matrix& t) { return !Holds(f, t, b); });
    Shrink(b, [&](const Matrix& t) { return !Holds(f, a, t); });
    v.pass = false;
    v.counterexample = Counterexample{a, b};
    return v;
  }
  return v;
}

Verdict check_equal(std::size_t n, FieldDescriptor fd, const MatrixMap& f, const MatrixMap& g,
                    const VerifyOptions& opts) {
  Rng rng(opts.seed);
  const std::vector<FieldElem> pool = default_scalar_pool(fd);
  Verdict v{true, std::nullopt, 0, opts.seed};
  for (std::size_t i = 0; i < opts.samples; ++i) {
    Matrix a = Sample(n, i, pool, rng);
    ++v.samples;
    if (f(a) == g(a)) continue;
    Shrink(a, [&](const Matrix& t) { return !(f(t) == g(t)); });
    v.pass = false;
    v.counterexample = Counterexample{a, std::nullopt};
    return v;
  }
  return v;
}

Matrix group_commutator(const Matrix& x, const Matrix& y) {
  return x * y * inverse(x) * inverse(y);
}

bool superdiagonals_vanish(const Matrix& a, std::size_t depth) {
  for (std::size_t d = 1; d <= depth && d < a.n(); ++d)
    for (std::size_t i = 0; i + d < a.n(); ++i) {
      if (!a(i, i + d).is_zero()) return false;
    }
  return true;
}

Verdict lcs_depth_check(std::size_t n, std::size_t depth, FieldDescriptor fd,
                        const VerifyOptions& opts) {
  if (n < 1) throw Error(ErrorCode::kDimensionMismatch, "lcs_depth_check needs n >= 1");
  Rng rng(opts.seed);
  const std::vector<FieldElem> pool = default_scalar_pool(fd);
  Verdict v{true, std::nullopt, 0, opts.seed};
  for (std::size_t s = 0; s < opts.samples; ++s) {
    Matrix c = random_unitriangular(n, pool, rng);
    for (std::size_t d = 0; d < depth; ++d) c = group_commutator(c, random_unitriangular(n, pool, rng));
    ++v.samples;
    bool ok = superdiagonals_vanish(c, depth);
    if (depth + 1 >= n) ok = ok && c.is_identity();
    if (!ok) {
      v.pass = false;
      v.counterexample = Counterexample{c, std::nullopt};
      return v;
    }
  }
  return v;
}

}  // namespace mulmap
