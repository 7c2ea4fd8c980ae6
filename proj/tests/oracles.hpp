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

// Independent reference computations shared by the test binaries.

#ifndef MULMAP_TESTS_ORACLES_HPP_
#define MULMAP_TESTS_ORACLES_HPP_

#include <algorithm>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "mulmap/error.hpp"
#include "mulmap/matrix.hpp"

namespace oracle {

using mulmap::FieldDescriptor;
using mulmap::FieldElem;
using mulmap::Matrix;

inline FieldDescriptor Q() { return FieldDescriptor::Rational(); }

inline FieldElem S(const FieldDescriptor& fd, const std::string& text) { return mulmap::parse_scalar(text, fd); }

// Row-major matrix from scalar strings.
inline Matrix M(const FieldDescriptor& fd, std::size_t n, std::initializer_list<const char*> entries) {
  std::vector<FieldElem> v;
  for (const char* e : entries) v.push_back(mulmap::parse_scalar(e, fd));
  return Matrix(n, fd, std::move(v));
}

// Permutation expansion of the determinant.
inline FieldElem LeibnizDet(const Matrix& a) {
  const std::size_t n = a.n();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  FieldElem total(a.field());
  do {
    long inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    FieldElem term = FieldElem::FromInt(a.field(), inversions % 2 ? -1 : 1);
    for (std::size_t i = 0; i < n; ++i) term *= a(i, perm[i]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// (-1)^{i+j} times the Leibniz determinant of the (i, j) minor.
inline Matrix BruteCofactor(const Matrix& a) {
  const std::size_t n = a.n();
  Matrix out(n, a.field());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Matrix minor(n - 1, a.field());
      for (std::size_t r = 0, rr = 0; r < n; ++r) {
        if (r == i) continue;
        for (std::size_t c = 0, cc = 0; c < n; ++c) {
          if (c == j) continue;
          minor(rr, cc++) = a(r, c);
        }
        ++rr;
      }
      FieldElem d = n == 1 ? FieldElem::FromInt(a.field(), 1) : LeibnizDet(minor);
      out(i, j) = (i + j) % 2 ? -d : d;
    }
  return out;
}

inline Matrix NaiveProduct(const Matrix& a, const Matrix& b) {
  Matrix out(a.n(), a.field());
  for (std::size_t i = 0; i < a.n(); ++i)
    for (std::size_t j = 0; j < a.n(); ++j)
      for (std::size_t k = 0; k < a.n(); ++k) out(i, j) += a(i, k) * b(k, j);
  return out;
}

// Error code raised by f, or nullopt if it returns normally.
inline std::optional<mulmap::ErrorCode> CodeOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const mulmap::Error& e) {
    return e.code();
  }
  return std::nullopt;
}

}  // namespace oracle

#endif  // MULMAP_TESTS_ORACLES_HPP_
