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

// Randomized checks of multiplicativity and equality, and the lower central
// series test for unitriangular matrices.

#ifndef MULMAP_VERIFY_HPP_
#define MULMAP_VERIFY_HPP_

#include <cstdint>
#include <functional>
#include <optional>

#include "mulmap/matrix.hpp"

namespace mulmap {

using MatrixMap = std::function<Matrix(const Matrix&)>;

struct VerifyOptions {
  std::uint64_t seed = 0;
  std::size_t samples = 50;
};

struct Counterexample {
  Matrix a;
  // Second factor for multiplicativity failures.
  std::optional<Matrix> b;
};

struct Verdict {
  bool pass = true;
  std::optional<Counterexample> counterexample;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
};

// f(AB) = f(A) f(B) on `samples` pairs drawn from GL(n) and the singular
// matrices. A failing pair is shrunk greedily by zeroing entries.
Verdict check_multiplicative(std::size_t n, FieldDescriptor fd, const MatrixMap& f,
                             const VerifyOptions& opts = {});

// f(A) = g(A) on `samples` matrices, every fourth one singular.
Verdict check_equal(std::size_t n, FieldDescriptor fd, const MatrixMap& f, const MatrixMap& g,
                    const VerifyOptions& opts = {});

// Draws `samples` nested commutators [..[[u_0, u_1], u_2].., u_depth] of
// random unitriangular matrices and checks that the first `depth`
// superdiagonals vanish. The counterexample holds the offending commutator.
Verdict lcs_depth_check(std::size_t n, std::size_t depth, FieldDescriptor fd,
                        const VerifyOptions& opts = {});

// x y x^{-1} y^{-1}.
Matrix group_commutator(const Matrix& x, const Matrix& y);

// True iff a(i, i + d) = 0 for every 1 <= d <= depth.
bool superdiagonals_vanish(const Matrix& a, std::size_t depth);

}  // namespace mulmap

#endif  // MULMAP_VERIFY_HPP_
