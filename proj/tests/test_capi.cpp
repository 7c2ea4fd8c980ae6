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


// Exercises the shared library through its C header only.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "mulmap/mulmap.h"

using nlohmann::json;

namespace {

struct Ctx {
  mm_context* c = mm_context_create();
  ~Ctx() { mm_context_destroy(c); }
};

std::string Take(char* s) {
  std::string out = s;
  mm_string_free(s);
  return out;
}

// 2 x 2 cofactor [[d, -c], [-b, a]] written entry by entry.
int Cofactor2(void*, const mm_matrix* in, mm_matrix* out) {
  mm_context* ctx = mm_context_create();
  char* e[4];
  for (int i = 0; i < 4; ++i) mm_matrix_get(ctx, in, i / 2, i % 2, &e[i]);
  auto neg = [](const std::string& s) { return s[0] == '-' ? s.substr(1) : s == "0" ? s : "-" + s; };
  mm_matrix_set(ctx, out, 0, 0, e[3]);
  mm_matrix_set(ctx, out, 0, 1, neg(e[2]).c_str());
  mm_matrix_set(ctx, out, 1, 0, neg(e[1]).c_str());
  mm_matrix_set(ctx, out, 1, 1, e[0]);
  for (char* s : e) mm_string_free(s);
  mm_context_destroy(ctx);
  return 0;
}

}  // namespace

TEST_CASE("matrices and evaluation") {
  Ctx ctx;
  mm_matrix* a = nullptr;
  REQUIRE(mm_matrix_from_json(ctx.c, R"({"n":2,"entries":[["1","2"],["3","4"]]})", &a) == MM_OK);
  CHECK(mm_matrix_dim(a) == 2);
  char* s = nullptr;
  REQUIRE(mm_matrix_get(ctx.c, a, 1, 0, &s) == MM_OK);
  CHECK(Take(s) == "3");
  CHECK(mm_matrix_get(ctx.c, a, 2, 0, &s) == MM_ERR_OTHER);
  CHECK(std::string(mm_last_error_code(ctx.c)) == "IndexOutOfRange");

  mm_expr* e = nullptr;
  REQUIRE(mm_expr_from_json(ctx.c, R"({"n":2,"field":{"kind":"rational"},"atoms":[{"atom":"cof"}]})", &e) == MM_OK);
  mm_matrix* r = nullptr;
  REQUIRE(mm_eval(ctx.c, e, a, &r) == MM_OK);
  REQUIRE(mm_matrix_to_json(ctx.c, r, &s) == MM_OK);
  CHECK(json::parse(Take(s))["entries"] == json::parse(R"([["4","-3"],["-2","1"]])"));
  REQUIRE(mm_simplify(ctx.c, e, &s) == MM_OK);
  CHECK(json::parse(Take(s))["class"] == "nondegenerate");
  mm_matrix_free(r);
  mm_matrix_free(a);
  mm_expr_free(e);
}

TEST_CASE("status codes") {
  Ctx ctx;
  mm_matrix* a = nullptr;
  CHECK(mm_matrix_from_json(ctx.c, "{\"n\":", &a) == MM_ERR_PARSE);
  CHECK(std::string(mm_last_error(ctx.c)).find("position") != std::string::npos);
  CHECK(mm_context_set_field(ctx.c, "quadratic:4") == MM_ERR_OTHER);
  char* s = nullptr;
  CHECK(mm_classify_builtin(ctx.c, "adjugate", 3, &s) == MM_ERR_NOT_MULTIPLICATIVE);
  CHECK(mm_classify_builtin(ctx.c, "identity", 1, &s) == MM_ERR_UNSUPPORTED);
  mm_expr* e = nullptr;
  CHECK(mm_expr_from_json(ctx.c, R"({"n":2,"field":"rational","atoms":[{"atom":"hom","phi":"conj"}]})", &e) ==
        MM_ERR_DIMENSION);
  CHECK(mm_classify_builtin(ctx.c, "nope", 3, &s) == MM_ERR_OTHER);
}

TEST_CASE("classification entry points") {
  Ctx ctx;
  mm_context_set_seed(ctx.c, 5);
  char* s = nullptr;
  REQUIRE(mm_classify_builtin(ctx.c, "det-cubed", 3, &s) == MM_OK);
  json r = json::parse(Take(s));
  CHECK(r["class"] == "trivial");
  CHECK(r["chars"] == json::parse(R"([[{"phi":"id","pow":3}],[{"phi":"id","pow":3}]])"));

  REQUIRE(mm_classify_callback(ctx.c, 2, 2, Cofactor2, nullptr, &s) == MM_OK);
  r = json::parse(Take(s));
  CHECK(r["class"] == "nondegenerate");
  CHECK(r["eps"] == "plain");
  CHECK(r["R"]["entries"] == json::parse(R"([["0","1"],["-1","0"]])"));
}

TEST_CASE("decompose, verify, generate") {
  Ctx ctx;
  mm_context_set_seed(ctx.c, 2);
  mm_context_set_samples(ctx.c, 30);
  mm_matrix* a = nullptr;
  REQUIRE(mm_matrix_from_json(ctx.c, R"({"n":2,"entries":[["0","1"],["-1","0"]]})", &a) == MM_OK);
  char* s = nullptr;
  REQUIRE(mm_decompose(ctx.c, a, &s) == MM_OK);
  CHECK(json::parse(Take(s))["gens"].size() <= 3);
  mm_matrix_free(a);

  REQUIRE(mm_verify_builtin(ctx.c, "adjugate", 2, &s) == MM_OK);
  json v = json::parse(Take(s));
  CHECK(v["pass"] == false);
  CHECK(v["seed"] == 2);
  REQUIRE(mm_verify_builtin(ctx.c, "cofactor", 3, &s) == MM_OK);
  CHECK(json::parse(Take(s))["pass"] == true);

  REQUIRE(mm_context_set_field(ctx.c, "quadratic:2") == MM_OK);
  REQUIRE(mm_generate(ctx.c, "expr", 3, &s) == MM_OK);
  std::string doc = Take(s);
  mm_expr* e = nullptr;
  REQUIRE(mm_expr_from_json(ctx.c, doc.c_str(), &e) == MM_OK);
  REQUIRE(mm_verify(ctx.c, e, nullptr, &s) == MM_OK);
  CHECK(json::parse(Take(s))["pass"] == true);
  REQUIRE(mm_verify(ctx.c, e, e, &s) == MM_OK);
  CHECK(json::parse(Take(s))["pass"] == true);
  mm_expr_free(e);

  REQUIRE(mm_generate(ctx.c, "sl", 3, &s) == MM_OK);
  std::string first = Take(s);
  REQUIRE(mm_generate(ctx.c, "sl", 3, &s) == MM_OK);
  CHECK(Take(s) == first);
  CHECK(mm_generate(ctx.c, "bogus", 3, &s) == MM_ERR_OTHER);
}
