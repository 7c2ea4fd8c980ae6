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
#include "mulmap/json_io.hpp"
#include "oracles.hpp"

using namespace mulmap;
using oracle::CodeOf;
using oracle::M;

TEST_CASE("matrix documents") {
  const auto k = FieldDescriptor::Quadratic(-2);
  Matrix a = M(k, 2, {"1", "1/2-1*s", "0", "-3"});
  Json j = matrix_to_json(a);
  CHECK(j.dump() == R"({"entries":[["1","1/2-1*s"],["0","-3"]],"field":{"d":-2,"kind":"quadratic"},"n":2})");
  CHECK(matrix_from_json(j) == a);
  CHECK(matrix_from_json(parse_json(R"({"n":2,"entries":[[1,2],["3","4"]]})")) ==
        M(FieldDescriptor::Rational(), 2, {"1", "2", "3", "4"}));
  CHECK(CodeOf([] { matrix_from_json(parse_json(R"({"n":2,"entries":[[1,2]]})")); }) == ErrorCode::kParseError);
  CHECK(CodeOf([] { matrix_from_json(parse_json(R"({"n":1,"entries":[["1+1*s"]]})")); }) == ErrorCode::kParseError);
  try {
    parse_json("{\"n\": ");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() >= 5);
  }
}

TEST_CASE("word documents") {
  const auto q = FieldDescriptor::Rational();
  TransvectionWord w{ElementaryGen::P(1, 2, FieldElem::FromInt(q, 3)), ElementaryGen::D(2, FieldElem::FromInt(q, -1)),
                     ElementaryGen::S(1, 2, q)};
  Json j = word_to_json(w);
  CHECK(j["gens"][0] == Json{{"type", "P"}, {"i", 1}, {"j", 2}, {"k", "3"}});
  TransvectionWord back = word_from_json(j, q);
  CHECK(word_product(back, 2, q) == word_product(w, 2, q));
}

TEST_CASE("expression documents round-trip") {
  Rng rng(12);
  for (long d : {0L, 3L}) {
    const auto fd = d ? FieldDescriptor::Quadratic(d) : FieldDescriptor::Rational();
    for (int t = 0; t < 20; ++t) {
      MapExpr e = t % 4 == 0 ? random_trivial_expr(3, fd, false, rng) : random_map_expr(3, fd, {}, rng);
      Json j = expr_to_json(e);
      CHECK(j["order"] == "apply-last-first");
      MapExpr back = expr_from_json(parse_json(j.dump()));
      CHECK(expr_to_json(back) == j);
      Matrix a = random_gl(3, 5, default_scalar_pool(fd), rng);
      CHECK(eval(back, a) == eval(e, a));
    }
  }
  CHECK(CodeOf([] { expr_from_json(parse_json(R"({"n":2,"field":"rational","atoms":[{"atom":"twist"}]})")); }) ==
        ErrorCode::kParseError);
  CHECK(CodeOf([] {
          expr_from_json(parse_json(R"({"n":2,"field":"rational","atoms":[{"atom":"hom","phi":"conj"}]})"));
        }) == ErrorCode::kFieldMismatch);
}

TEST_CASE("report and verdict documents") {
  const auto q = FieldDescriptor::Rational();
  MapExpr e{3, q, {CofAtom{}}};
  ClassifyReport r = classify(oracle_from_expr(e), {});
  Json j = report_to_json(r);
  for (const char* key : {"s", "l", "preConjugator", "class", "phi", "lambda", "eps", "R", "probeLog"}) {
    CHECK(j.contains(key));
  }
  CHECK(j["class"] == "nondegenerate");
  CHECK(j["eps"] == "cofactor");
  CHECK(j["phi"] == "id");
  CHECK(j["probeLog"].size() == r.probe_log.size());

  MapExpr t{3, q, {TrivialDetAtom{{ScalarCharacter::Power(2)}, 1, 1}}};
  Json jt = report_to_json(classify(oracle_from_expr(t), {}));
  CHECK(jt["class"] == "trivial");
  CHECK(jt["R"].is_null());
  CHECK(jt["chars"] == Json::array({Json::array({Json{{"phi", "id"}, {"pow", 2}}})}));
  CHECK(jt["zeroPad"] == 1);
  CHECK(jt["onePad"] == 1);

  Verdict v{false, Counterexample{Matrix::Identity(2, q), Matrix::Zero(2, q)}, 7, 9};
  Json jv = verdict_to_json(v);
  CHECK(jv["pass"] == false);
  CHECK(jv["counterexample"]["B"]["entries"][0][0] == "0");
  CHECK(verdict_to_json(Verdict{})["counterexample"].is_null());
}
