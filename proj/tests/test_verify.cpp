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


#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "mulmap/mapexpr.hpp"
#include "mulmap/verify.hpp"
#include "oracles.hpp"

using namespace mulmap;
using oracle::M;

TEST_CASE("multiplicative maps pass") {
  const auto q = FieldDescriptor::Rational();
  for (std::size_t n = 2; n <= 4; ++n) {
    Verdict v = check_multiplicative(n, q, [](const Matrix& a) { return cofactor(a); }, {3, 40});
    CHECK(v.pass);
    CHECK(v.samples == 40);
    CHECK(v.seed == 3);
  }
}

TEST_CASE("adjugate is caught at n = 2") {
  const auto q = FieldDescriptor::Rational();
  Verdict v = check_multiplicative(2, q, [](const Matrix& a) { return adjugate(a); }, {0, 50});
  REQUIRE_FALSE(v.pass);
  REQUIRE(v.counterexample.has_value());
  const Matrix& a = v.counterexample->a;
  const Matrix& b = *v.counterexample->b;
  CHECK_FALSE(adjugate(a * b) == adjugate(a) * adjugate(b));
  // adj(AB) = adj(B) adj(A) holds for the shrunk pair as well.
  CHECK(adjugate(a * b) == adjugate(b) * adjugate(a));
}

TEST_CASE("counterexamples are shrunk") {
  const auto q = FieldDescriptor::Rational();
  // f(A) = A + I fails exactly when A + B != 0, so shrinking ends at A = 0 and
  // a B with a single nonzero entry.
  Verdict v = check_multiplicative(3, q, [&](const Matrix& a) { return a + Matrix::Identity(3, q); });
  REQUIRE_FALSE(v.pass);
  CHECK(v.counterexample->a.is_zero());
  std::size_t nonzero = 0;
  for (const auto& x : v.counterexample->b->entries()) nonzero += !x.is_zero();
  CHECK(nonzero == 1);
}

TEST_CASE("equality checks") {
  const auto q = FieldDescriptor::Rational();
  MatrixMap cof = [](const Matrix& a) { return cofactor(a); };
  MatrixMap viaj = [&](const Matrix& a) {
    Matrix j = M(q, 2, {"0", "1", "-1", "0"});
    return j * a * inverse(j);
  };
  CHECK(check_equal(2, q, cof, viaj).pass);
  Verdict v = check_equal(3, q, cof, [](const Matrix& a) { return adjugate(a); });
  CHECK_FALSE(v.pass);
  CHECK_FALSE(v.counterexample->b.has_value());
}

TEST_CASE("lower central series of unitriangular matrices") {
  const auto q = FieldDescriptor::Rational();
  const Matrix u = M(q, 3, {"1", "1", "0", "0", "1", "1", "0", "0", "1"});
  const Matrix w = M(q, 3, {"1", "0", "2", "0", "1", "3", "0", "0", "1"});
  // [u, w] only has a (1, 3) entry: 1*3 - 0*2 = 3.
  CHECK(group_commutator(u, w) == M(q, 3, {"1", "0", "3", "0", "1", "0", "0", "0", "1"}));
  CHECK(superdiagonals_vanish(group_commutator(u, w), 1));
  CHECK_FALSE(superdiagonals_vanish(u, 1));

  for (std::size_t n = 3; n <= 4; ++n)
    for (std::size_t depth = 0; depth <= n; ++depth) {
      Verdict v = lcs_depth_check(n, depth, q, {depth, 30});
      CHECK(v.pass);
      CHECK(v.samples == 30);
    }
}
