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


// Command-line front end over the C interface.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "mulmap/mulmap.h"

namespace {

// Inline JSON (starting with '{'), '-' for stdin, or a file path.
std::string ReadDocument(const std::string& arg) {
  if (!arg.empty() && arg.front() == '{') return arg;
  std::ostringstream buf;
  if (arg == "-") {
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(arg);
  if (!in) throw CLI::ValidationError("cannot read " + arg);
  buf << in.rdbuf();
  return buf.str();
}

class Session {
 public:
  Session() : ctx_(mm_context_create()) {}
  ~Session() { mm_context_destroy(ctx_); }
  mm_context* ctx() { return ctx_; }

  // Prints the owned string on success, the error otherwise.
  int Finish(mm_status st, char** out) {
    if (st == MM_OK) {
      std::cout << *out << "\n";
      mm_string_free(*out);
      return 0;
    }
    return Fail(st);
  }

  int Fail(mm_status st) {
    std::cerr << "error[" << mm_last_error_code(ctx_) << "]: " << mm_last_error(ctx_) << "\n";
    std::string detail = mm_last_error_detail(ctx_);
    if (!detail.empty()) std::cerr << detail << "\n";
    return static_cast<int>(st);
  }

 private:
  mm_context* ctx_;
};

struct ExprHandle {
  mm_expr* e = nullptr;
  ~ExprHandle() { mm_expr_free(e); }
};

struct MatrixHandle {
  mm_matrix* m = nullptr;
  ~MatrixHandle() { mm_matrix_free(m); }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact toolkit for multiplicative matrix maps"};
  app.require_subcommand(1);
  app.fallthrough();

  std::uint64_t seed = 0;
  std::size_t samples = 50;
  std::string field = "rational";
  app.add_option("--seed", seed, "Random seed");
  app.add_option("--samples", samples, "Random samples for checks");
  app.add_option("--field", field, "rational or quadratic:<d>");

  std::string expr_arg, expr2_arg, matrix_arg, builtin, kind;
  std::size_t n = 3;

  auto* eval_cmd = app.add_subcommand("eval", "Evaluate an expression on a matrix");
  eval_cmd->add_option("expr", expr_arg, "Expression document")->required();
  eval_cmd->add_option("matrix", matrix_arg, "Matrix document")->required();

  auto* simplify_cmd = app.add_subcommand("simplify", "Print the canonical form of an expression");
  simplify_cmd->add_option("expr", expr_arg, "Expression document")->required();

  auto* classify_cmd = app.add_subcommand("classify", "Classify a map from oracle access");
  classify_cmd->add_option("expr", expr_arg, "Expression document");
  classify_cmd->add_option("--builtin", builtin, "identity, cofactor, adjugate, shift, det-cubed");
  classify_cmd->add_option("-n", n, "Dimension for builtins");

  auto* decompose_cmd = app.add_subcommand("decompose", "Factor a matrix into elementary generators");
  decompose_cmd->add_option("matrix", matrix_arg, "Matrix document")->required();

  auto* verify_cmd = app.add_subcommand("verify", "Check multiplicativity, or equality of two maps");
  verify_cmd->add_option("expr", expr_arg, "Expression document");
  verify_cmd->add_option("other", expr2_arg, "Second expression document");
  verify_cmd->add_option("--builtin", builtin, "identity, cofactor, adjugate, shift, det-cubed");
  verify_cmd->add_option("-n", n, "Dimension for builtins");

  auto* gen_cmd = app.add_subcommand("gen", "Print a seeded random sample");
  gen_cmd->add_option("kind", kind, "sl, gl, unitriangular, singular or expr")->required();
  gen_cmd->add_option("-n", n, "Dimension");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  Session s;
  mm_context_set_seed(s.ctx(), seed);
  mm_context_set_samples(s.ctx(), samples);
  if (mm_status st = mm_context_set_field(s.ctx(), field.c_str()); st != MM_OK) return s.Fail(st);

  try {
    char* out = nullptr;
    if (*eval_cmd || *simplify_cmd || (*classify_cmd && builtin.empty()) ||
        (*verify_cmd && builtin.empty())) {
      if (expr_arg.empty()) {
        std::cerr << "error: an expression document or --builtin is required\n";
        return 2;
      }
      ExprHandle e;
      if (mm_status st = mm_expr_from_json(s.ctx(), ReadDocument(expr_arg).c_str(), &e.e); st != MM_OK) {
        return s.Fail(st);
      }
      if (*eval_cmd) {
        MatrixHandle a, r;
        if (mm_status st = mm_matrix_from_json(s.ctx(), ReadDocument(matrix_arg).c_str(), &a.m); st != MM_OK) {
          return s.Fail(st);
        }
        if (mm_status st = mm_eval(s.ctx(), e.e, a.m, &r.m); st != MM_OK) return s.Fail(st);
        return s.Finish(mm_matrix_to_json(s.ctx(), r.m, &out), &out);
      }
      if (*simplify_cmd) return s.Finish(mm_simplify(s.ctx(), e.e, &out), &out);
      if (*classify_cmd) return s.Finish(mm_classify(s.ctx(), e.e, &out), &out);
      ExprHandle g;
      if (!expr2_arg.empty()) {
        if (mm_status st = mm_expr_from_json(s.ctx(), ReadDocument(expr2_arg).c_str(), &g.e); st != MM_OK) {
          return s.Fail(st);
        }
      }
      return s.Finish(mm_verify(s.ctx(), e.e, g.e, &out), &out);
    }
    if (*classify_cmd) return s.Finish(mm_classify_builtin(s.ctx(), builtin.c_str(), n, &out), &out);
    if (*verify_cmd) return s.Finish(mm_verify_builtin(s.ctx(), builtin.c_str(), n, &out), &out);
    if (*decompose_cmd) {
      MatrixHandle a;
      if (mm_status st = mm_matrix_from_json(s.ctx(), ReadDocument(matrix_arg).c_str(), &a.m); st != MM_OK) {
        return s.Fail(st);
      }
      return s.Finish(mm_decompose(s.ctx(), a.m, &out), &out);
    }
    return s.Finish(mm_generate(s.ctx(), kind.c_str(), n, &out), &out);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
