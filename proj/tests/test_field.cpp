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
#include "mulmap/field.hpp"
#include "mulmap/slword.hpp"
#include "oracles.hpp"

using namespace mulmap;
using oracle::CodeOf;
using oracle::S;

TEST_CASE("field descriptors") {
  CHECK(FieldDescriptor::FromString("rational") == FieldDescriptor::Rational());
  CHECK(FieldDescriptor::FromString("quadratic:-3") == FieldDescriptor::Quadratic(-3));
  CHECK(FieldDescriptor::Quadratic(5).ToString() == "quadratic:5");
  CHECK(CodeOf([] { FieldDescriptor::Quadratic(8); }) == ErrorCode::kInvalidArgument);
  CHECK(CodeOf([] { FieldDescriptor::Quadratic(1); }) == ErrorCode::kInvalidArgument);
  CHECK(CodeOf([] { FieldDescriptor::FromString("reals"); }).has_value());
}

TEST_CASE("scalar parsing and formatting") {
  const auto q = FieldDescriptor::Rational();
  const auto k = FieldDescriptor::Quadratic(2);
  CHECK(format_scalar(parse_scalar("6/4", q)) == "3/2");
  CHECK(format_scalar(parse_scalar("-0", q)) == "0");
  CHECK(format_scalar(parse_scalar("1/2-3/5*s", k)) == "1/2-3/5*s");
  CHECK(parse_scalar("0+1*s", k) == FieldElem::Sqrt(k));

  try {
    parse_scalar("1/0", q);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 2);
  }
  CHECK(CodeOf([&] { parse_scalar("1+2*s", q); }) == ErrorCode::kParseError);
  CHECK(CodeOf([&] { parse_scalar("1.5", q); }) == ErrorCode::kParseError);
  CHECK(CodeOf([&] { parse_scalar("", q); }) == ErrorCode::kParseError);
}

TEST_CASE("quadratic arithmetic oracles") {
  const auto k = FieldDescriptor::Quadratic(2);
  // (2 + s)(2 - s) = 4 - 2, so 1/(2 + s) = (2 - s)/2.
  CHECK((S(k, "2+1*s").inv() == S(k, "1-1/2*s")));
  CHECK(S(k, "0+1*s") * S(k, "0+1*s") == S(k, "2"));
  CHECK(S(k, "3+1*s").norm() == 7);
  CHECK(S(k, "1+1*s").conjugate() == S(k, "1-1*s"));
  // (1 + s)^2 = 3 + 2s, so (1 + s)^{-2} = (3 - 2s)/(9 - 8).
  CHECK(S(k, "1+1*s").pow(-2) == S(k, "3-2*s"));
  CHECK(CodeOf([&] { FieldElem(k).inv(); }) == ErrorCode::kDivisionByZero);
  CHECK(CodeOf([&] { (void)(S(k, "1") == FieldElem::FromInt(FieldDescriptor::Rational(), 1)); }) ==
        ErrorCode::kFieldMismatch);

  const auto gauss = FieldDescriptor::Quadratic(-1);
  CHECK(FieldElem::Sqrt(gauss).pow(2) == S(gauss, "-1"));
  CHECK(FieldElem::Sqrt(gauss).pow(4).is_one());
}

TEST_CASE("field axioms on random elements") {
  for (long d : {2L, -1L, 5L}) {
    const auto k = FieldDescriptor::Quadratic(d);
    Rng rng(static_cast<std::uint64_t>(d + 100));
    auto draw = [&] {
      long a = static_cast<long>(rng.index(19)) - 9, b = static_cast<long>(rng.index(19)) - 9;
      long c = static_cast<long>(rng.index(5)) + 1;
      return FieldElem(k, mpq_class(a, c), mpq_class(b, c + 1));
    };
    for (int t = 0; t < 200; ++t) {
      FieldElem x = draw(), y = draw(), z = draw();
      CHECK(x * (y + z) == x * y + x * z);
      CHECK((x * y) * z == x * (y * z));
      CHECK((x * y).conjugate() == x.conjugate() * y.conjugate());
      CHECK((x * y).norm() == x.norm() * y.norm());
      if (!x.is_zero()) CHECK((x * x.inv()).is_one());
      CHECK(parse_scalar(format_scalar(x), k) == x);
    }
  }
}

TEST_CASE("hom_check") {
  const auto q = FieldDescriptor::Rational();
  const auto k = FieldDescriptor::Quadratic(3);
  auto pairs = [](const std::vector<FieldElem>& pool) {
    std::vector<std::pair<FieldElem, FieldElem>> out;
    for (const auto& x : pool)
      for (const auto& y : pool) out.emplace_back(x, y);
    return out;
  };
  CHECK(hom_check(RingHom::Identity(), pairs(default_scalar_pool(q))));
  CHECK(hom_check(RingHom::QuadConjugation(), pairs(default_scalar_pool(k))));

  // h(2 + 2) = h(2) + h(2) = 6 != 9.
  RingHom bad = RingHom::Sampled({{S(q, "2"), S(q, "3")}, {S(q, "4"), S(q, "9")}});
  CHECK_FALSE(hom_check_table(bad));
  RingHom good = RingHom::Sampled({{S(q, "2"), S(q, "2")}, {S(q, "4"), S(q, "4")}});
  CHECK(hom_check_table(good));

  CHECK(hom_apply(good, S(q, "1")).is_one());
  CHECK(CodeOf([&] { hom_apply(good, S(q, "7")); }) == ErrorCode::kProbeMiss);
  CHECK(CodeOf([&] { hom_apply(RingHom::QuadConjugation(), S(q, "7")); }) == ErrorCode::kFieldMismatch);
}

TEST_CASE("registered hom recognition") {
  const auto k = FieldDescriptor::Quadratic(-3);
  RingHom::Table conj_table;
  for (const auto& x : default_scalar_pool(k)) conj_table.emplace_back(x, x.conjugate());
  auto m = match_registered_hom(k, conj_table);
  REQUIRE(m.has_value());
  CHECK(m->kind() == HomKind::kQuadConjugation);
  CHECK(compose_homs(RingHom::QuadConjugation(), RingHom::QuadConjugation()) == RingHom::Identity());
  CHECK(CodeOf([] { compose_homs(RingHom::Sampled({}), RingHom::Identity()); }) == ErrorCode::kUnregisteredHom);
  CHECK(registered_homs(FieldDescriptor::Rational()).size() == 1);
  CHECK(hom_kind_from_name("conj") == HomKind::kQuadConjugation);
}
