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


#include "mulmap/mulmap.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "mulmap/error.hpp"
#include "mulmap/json_io.hpp"

struct mm_context {
  std::uint64_t seed = 0;
  std::size_t samples = 50;
  mulmap::FieldDescriptor field = mulmap::FieldDescriptor::Rational();
  std::string error;
  std::string code;
  std::string detail;
};

struct mm_matrix {
  mulmap::Matrix m;
};

struct mm_expr {
  mulmap::MapExpr e;
};

namespace {

using namespace mulmap;

mm_status StatusFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParseError:
      return MM_ERR_PARSE;
    case ErrorCode::kDimensionMismatch:
    case ErrorCode::kFieldMismatch:
      return MM_ERR_DIMENSION;
    case ErrorCode::kNotMultiplicative:
    case ErrorCode::kRankLadderViolation:
    case ErrorCode::kNonDiagonalizableTrivial:
      return MM_ERR_NOT_MULTIPLICATIVE;
    case ErrorCode::kVerificationFailed:
      return MM_ERR_VERIFICATION;
    case ErrorCode::kUnsupportedDimension:
      return MM_ERR_UNSUPPORTED;
    default:
      return MM_ERR_OTHER;
  }
}

template <typename F>
mm_status Guard(mm_context* ctx, F&& body) {
  ctx->error.clear();
  ctx->code.clear();
  ctx->detail.clear();
  try {
    body();
    return MM_OK;
  } catch (const Error& e) {
    ctx->error = e.what();
    ctx->code = ErrorCodeName(e.code());
    ctx->detail = e.detail();
    return StatusFor(e.code());
  } catch (const std::exception& e) {
    ctx->error = e.what();
    ctx->code = "Internal";
    return MM_ERR_OTHER;
  }
}

char* Dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

char* Dump(const Json& j) { return Dup(j.dump()); }

void Require(const void* p, const char* what) {
  if (p == nullptr) throw Error(ErrorCode::kInvalidArgument, std::string(what) + " is null");
}

struct Builtin {
  std::size_t k;
  MatrixMap f;
};

Builtin MakeBuiltin(const std::string& name, std::size_t n, const FieldDescriptor& fd) {
  if (name == "identity") return {n, [](const Matrix& a) { return a; }};
  if (name == "cofactor") return {n, [](const Matrix& a) { return cofactor(a); }};
  if (name == "adjugate") return {n, [](const Matrix& a) { return adjugate(a); }};
  if (name == "shift") return {n, [n, fd](const Matrix& a) { return a + Matrix::Identity(n, fd); }};
  if (name == "det-cubed") {
    if (n < 2) throw Error(ErrorCode::kUnsupportedDimension, "det-cubed needs n >= 2");
    return {n - 1, [n, fd](const Matrix& a) { return Matrix::Scalar(n - 1, det(a).pow(3)); }};
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown builtin map \"" + name + "\"");
}

ClassifyOptions Options(const mm_context* ctx) {
  ClassifyOptions opts;
  opts.seed = ctx->seed;
  opts.invertible_samples = ctx->samples;
  return opts;
}

}  // namespace

extern "C" {

mm_context* mm_context_create(void) { return new mm_context(); }
void mm_context_destroy(mm_context* ctx) { delete ctx; }
void mm_context_set_seed(mm_context* ctx, uint64_t seed) { ctx->seed = seed; }
void mm_context_set_samples(mm_context* ctx, size_t samples) { ctx->samples = samples; }

mm_status mm_context_set_field(mm_context* ctx, const char* field) {
  return Guard(ctx, [&] {
    Require(field, "field");
    ctx->field = FieldDescriptor::FromString(field);
  });
}

const char* mm_last_error(const mm_context* ctx) { return ctx->error.c_str(); }
const char* mm_last_error_code(const mm_context* ctx) { return ctx->code.c_str(); }
const char* mm_last_error_detail(const mm_context* ctx) { return ctx->detail.c_str(); }

mm_status mm_matrix_from_json(mm_context* ctx, const char* json, mm_matrix** out) {
  return Guard(ctx, [&] {
    Require(json, "json");
    *out = new mm_matrix{matrix_from_json(parse_json(json))};
  });
}

mm_status mm_matrix_to_json(mm_context* ctx, const mm_matrix* m, char** out) {
  return Guard(ctx, [&] {
    Require(m, "matrix");
    *out = Dump(matrix_to_json(m->m));
  });
}

mm_status mm_matrix_zero(mm_context* ctx, size_t n, mm_matrix** out) {
  return Guard(ctx, [&] { *out = new mm_matrix{Matrix::Zero(n, ctx->field)}; });
}

size_t mm_matrix_dim(const mm_matrix* m) { return m == nullptr ? 0 : m->m.n(); }

mm_status mm_matrix_get(mm_context* ctx, const mm_matrix* m, size_t i, size_t j, char** out) {
  return Guard(ctx, [&] {
    Require(m, "matrix");
    if (i >= m->m.n() || j >= m->m.n()) throw Error(ErrorCode::kIndexOutOfRange, "entry index out of range");
    *out = Dup(format_scalar(m->m(i, j)));
  });
}

mm_status mm_matrix_set(mm_context* ctx, mm_matrix* m, size_t i, size_t j, const char* value) {
  return Guard(ctx, [&] {
    Require(m, "matrix");
    Require(value, "value");
    if (i >= m->m.n() || j >= m->m.n()) throw Error(ErrorCode::kIndexOutOfRange, "entry index out of range");
    m->m(i, j) = parse_scalar(value, m->m.field());
  });
}

void mm_matrix_free(mm_matrix* m) { delete m; }

mm_status mm_expr_from_json(mm_context* ctx, const char* json, mm_expr** out) {
  return Guard(ctx, [&] {
    Require(json, "json");
    *out = new mm_expr{expr_from_json(parse_json(json))};
  });
}

void mm_expr_free(mm_expr* e) { delete e; }

mm_status mm_eval(mm_context* ctx, const mm_expr* e, const mm_matrix* a, mm_matrix** out) {
  return Guard(ctx, [&] {
    Require(e, "expression");
    Require(a, "matrix");
    *out = new mm_matrix{eval(e->e, a->m)};
  });
}

mm_status mm_simplify(mm_context* ctx, const mm_expr* e, char** out) {
  return Guard(ctx, [&] {
    Require(e, "expression");
    *out = Dump(form_to_json(simplify(e->e)));
  });
}

mm_status mm_classify(mm_context* ctx, const mm_expr* e, char** out) {
  return Guard(ctx, [&] {
    Require(e, "expression");
    *out = Dump(report_to_json(classify(oracle_from_expr(e->e), Options(ctx))));
  });
}

mm_status mm_classify_builtin(mm_context* ctx, const char* name, size_t n, char** out) {
  return Guard(ctx, [&] {
    Require(name, "name");
    Builtin b = MakeBuiltin(name, n, ctx->field);
    MapOracle o{n, b.k, ctx->field, b.f};
    *out = Dump(report_to_json(classify(o, Options(ctx))));
  });
}

mm_status mm_classify_callback(mm_context* ctx, size_t n, size_t k, mm_oracle_fn fn, void* user, char** out) {
  return Guard(ctx, [&] {
    Require(reinterpret_cast<const void*>(fn), "callback");
    const FieldDescriptor fd = ctx->field;
    MapOracle o{n, k, fd, [fn, user, k, fd](const Matrix& a) {
                  mm_matrix in{a};
                  mm_matrix result{Matrix::Zero(k, fd)};
                  if (fn(user, &in, &result) != 0) throw Error(ErrorCode::kInvalidArgument, "oracle callback failed");
                  return result.m;
                }};
    *out = Dump(report_to_json(classify(o, Options(ctx))));
  });
}

mm_status mm_decompose(mm_context* ctx, const mm_matrix* a, char** out) {
  return Guard(ctx, [&] {
    Require(a, "matrix");
    if (det(a->m).is_one()) {
      *out = Dump(word_to_json(decompose_sl(a->m)));
      return;
    }
    GlFactorization g = decompose_gl(a->m);
    Json j = word_to_json(g.word);
    j["detScalar"] = format_scalar(g.det_scalar);
    *out = Dump(j);
  });
}

mm_status mm_verify(mm_context* ctx, const mm_expr* f, const mm_expr* g, char** out) {
  return Guard(ctx, [&] {
    Require(f, "expression");
    VerifyOptions opts{ctx->seed, ctx->samples};
    MatrixMap ff = [e = f->e](const Matrix& a) { return eval(e, a); };
    Verdict v;
    if (g == nullptr) {
      v = check_multiplicative(f->e.n, f->e.field, ff, opts);
    } else {
      if (g->e.n != f->e.n || g->e.k() != f->e.k()) throw Error(ErrorCode::kDimensionMismatch, "maps have different shapes");
      if (!(g->e.field == f->e.field)) throw Error(ErrorCode::kFieldMismatch, "maps are over different fields");
      MatrixMap gg = [e = g->e](const Matrix& a) { return eval(e, a); };
      v = check_equal(f->e.n, f->e.field, ff, gg, opts);
    }
    *out = Dump(verdict_to_json(v));
  });
}

mm_status mm_verify_builtin(mm_context* ctx, const char* name, size_t n, char** out) {
  return Guard(ctx, [&] {
    Require(name, "name");
    Builtin b = MakeBuiltin(name, n, ctx->field);
    *out = Dump(verdict_to_json(check_multiplicative(n, ctx->field, b.f, {ctx->seed, ctx->samples})));
  });
}

mm_status mm_generate(mm_context* ctx, const char* kind, size_t n, char** out) {
  return Guard(ctx, [&] {
    Require(kind, "kind");
    const std::string k = kind;
    Rng rng(ctx->seed);
    const std::vector<FieldElem> pool = default_scalar_pool(ctx->field);
    if (k == "expr") {
      *out = Dump(expr_to_json(random_map_expr(n, ctx->field, {}, rng)));
      return;
    }
    Matrix m = [&] {
      if (k == "sl") return random_sl(n, 25, pool, rng);
      if (k == "gl") return random_gl(n, 25, pool, rng);
      if (k == "unitriangular") return random_unitriangular(n, pool, rng);
      if (k == "singular") return random_singular(n, n + 2, pool, rng);
      throw Error(ErrorCode::kInvalidArgument, "unknown sample kind \"" + k + "\"");
    }();
    *out = Dump(matrix_to_json(m));
  });
}

void mm_string_free(char* s) { std::free(s); }

}  // extern "C"
