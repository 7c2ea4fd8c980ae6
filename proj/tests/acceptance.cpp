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


// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <cstdio>
#include <functional>
#include <string>

#include "mulmap/classify.hpp"
#include "mulmap/error.hpp"
#include "mulmap/verify.hpp"

using namespace mulmap;

namespace {

struct Outcome {
  bool pass = true;
  std::string note;
  void Fail(const std::string& why) {
    if (pass) note = why;
    pass = false;
  }
};

int failures = 0;

void Run(int id, const char* title, const std::function<Outcome()>& body) {
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out.Fail(std::string("exception: ") + e.what());
  }
  std::printf("%s [%2d] %s%s%s\n", out.pass ? "PASS" : "FAIL", id, title, out.note.empty() ? "" : " -- ",
              out.note.c_str());
  if (!out.pass) ++failures;
}

const FieldDescriptor kQ = FieldDescriptor::Rational();

Outcome CofactorMultiplicative(bool adjoint_identity) {
  Outcome out;
  auto pool = default_scalar_pool(kQ);
  std::size_t checked = 0;
  for (std::size_t n = 2; n <= 5; ++n) {
    Rng rng(1000 + n);
    for (int t = 0; t < 200; ++t) {
      Matrix a = t % 4 == 1 ? random_singular(n, n + 2, pool, rng) : random_gl(n, n + 2, pool, rng);
      Matrix b = t % 5 == 2 ? random_singular(n, n + 2, pool, rng) : random_gl(n, n + 2, pool, rng);
      if (adjoint_identity) {
        for (const Matrix* m : {&a, &b}) {
          if (!(*m * transpose(cofactor(*m)) == Matrix::Scalar(n, det(*m)))) out.Fail("n = " + std::to_string(n));
        }
      } else if (!(cofactor(a * b) == cofactor(a) * cofactor(b))) {
        out.Fail("n = " + std::to_string(n));
      }
      ++checked;
    }
  }
  if (out.pass) out.note = std::to_string(checked) + " pairs";
  return out;
}

Outcome DoubleCofactor() {
  Outcome out;
  auto pool = default_scalar_pool(kQ);
  for (std::size_t n = 2; n <= 4; ++n) {
    Rng rng(2000 + n);
    for (int t = 0; t < 100; ++t) {
      Matrix a = random_gl(n, n + 2, pool, rng);
      if (!(cofactor(cofactor(a)) == scalar_mul(det(a).pow(static_cast<long>(n) - 2), a))) {
        out.Fail("n = " + std::to_string(n));
      }
    }
  }
  return out;
}

Outcome SlDecomposition() {
  Outcome out;
  auto pool = default_scalar_pool(kQ);
  Rng rng(3000);
  std::size_t longest = 0;
  for (int t = 0; t < 100; ++t) {
    Matrix a = random_sl(4, 25, pool, rng);
    TransvectionWord w = decompose_sl(a);
    longest = std::max(longest, w.size());
    for (const auto& g : w) {
      if (g.kind != GenKind::kTransvection) out.Fail("non-transvection generator");
    }
    if (!(word_product(w, 4, kQ) == a)) out.Fail("product differs");
    if (w.size() > 32) out.Fail("word length " + std::to_string(w.size()));
  }
  if (out.pass) out.note = "longest word " + std::to_string(longest);
  return out;
}

Outcome UnitConjugator() {
  Outcome out;
  auto pool = default_scalar_pool(kQ);
  Rng rng(4000);
  for (int t = 0; t < 100; ++t) {
    Matrix s = random_gl(3, 8, pool, rng);
    Matrix s_inv = inverse(s);
    auto family = [&](std::size_t i, std::size_t j) { return s_inv * unit_matrix(3, i, j, kQ) * s; };
    Matrix r = conjugator_from_units(3, family);
    Matrix r_inv = inverse(r);
    for (std::size_t i = 1; i <= 3; ++i)
      for (std::size_t j = 1; j <= 3; ++j) {
        if (!(r * family(i, j) * r_inv == unit_matrix(3, i, j, kQ))) out.Fail("R F_ij R^-1 != E_ij");
      }
    if (!(r * s_inv).is_scalar()) out.Fail("R S^-1 not scalar");
  }
  return out;
}

Outcome ExpressionRoundTrip() {
  Outcome out;
  const auto k = FieldDescriptor::Quadratic(2);
  auto pool = default_scalar_pool(k);
  Rng rng(5000);
  for (int t = 0; t < 100; ++t) {
    MapExpr e = random_map_expr(3, k, {}, rng);
    MapOracle o = oracle_from_expr(e);
    ClassifyReport r = classify(o, {rng.next(), 50, 10});
    if (!canonical_eq(r.form, simplify(e))) out.Fail("form differs at sample " + std::to_string(t));
    for (int i = 0; i < 60; ++i) {
      Matrix a = i < 50 ? random_gl(3, 5, pool, rng) : random_singular(3, 5, pool, rng);
      if (!(eval_report(r, a) == o.evaluate(a))) out.Fail("reconstruction differs at sample " + std::to_string(t));
    }
  }
  return out;
}

Outcome TrivialBelowN() {
  Outcome out;
  MapOracle cubed{3, 2, kQ, [](const Matrix& a) { return Matrix::Scalar(2, det(a).pow(3)); }};
  ClassifyReport r = classify(cubed, {});
  if (r.form.cls != MapClass::kTrivial) out.Fail("det^3 not trivial");
  if (r.form.chars != std::vector<ScalarCharacter>{ScalarCharacter::Power(3), ScalarCharacter::Power(3)}) {
    out.Fail("det^3 characters");
  }
  std::size_t corpus = 0;
  for (long d : {0L, 2L}) {
    const auto fd = d ? FieldDescriptor::Quadratic(d) : kQ;
    Rng rng(6000 + d);
    for (std::size_t n = 2; n <= 4; ++n) {
      for (int t = 0; t < 20; ++t) {
        MapExpr e = random_trivial_expr(n, fd, true, rng);
        ClassifyReport rt = classify(oracle_from_expr(e), {rng.next(), 20, 5});
        if (rt.form.cls != MapClass::kTrivial) out.Fail("k < n classified " + std::string(map_class_name(rt.form.cls)));
        ++corpus;
      }
    }
  }
  if (out.pass) out.note = std::to_string(corpus) + " k<n oracles";
  return out;
}

Outcome HomRecovery() {
  Outcome out;
  Rng rng(7000);
  for (std::size_t n = 2; n <= 4; ++n) {
    for (int t = 0; t < 30; ++t) {
      MapExpr e = random_map_expr(n, kQ, {}, rng);
      ClassifyReport r = classify(oracle_from_expr(e), {rng.next(), 20, 5});
      if (r.form.cls != MapClass::kTrivial && !(r.form.phi == RingHom::Identity())) out.Fail("phi not identity");
    }
  }
  RingHom bad = RingHom::Sampled({{FieldElem::FromInt(kQ, 2), FieldElem::FromInt(kQ, 3)},
                                  {FieldElem::FromInt(kQ, 4), FieldElem::FromInt(kQ, 9)}});
  if (hom_check_table(bad)) out.Fail("corrupted table accepted");
  return out;
}

Outcome LowerCentralSeries() {
  Outcome out;
  for (std::size_t n = 3; n <= 4; ++n)
    for (std::size_t depth = 1; depth <= n; ++depth) {
      Verdict v = lcs_depth_check(n, depth, kQ, {8000 + 10 * n + depth, 100});
      if (!v.pass || v.samples != 100) out.Fail("n = " + std::to_string(n) + ", depth " + std::to_string(depth));
    }
  return out;
}

Outcome AdjugateRejected() {
  Outcome out;
  Verdict v = check_multiplicative(2, kQ, [](const Matrix& a) { return adjugate(a); }, {9000, 50});
  if (v.pass) out.Fail("adjugate passed");
  if (out.pass) out.note = "counterexample after " + std::to_string(v.samples) + " samples";
  return out;
}

Outcome SynthesizedPadding() {
  Outcome out;
  const auto k = FieldDescriptor::Quadratic(3);
  auto pool = default_scalar_pool(k);
  Rng rng(10000);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 3;
    const std::size_t dim = 1 + rng.index(n);
    TrivialDetAtom bar;
    const std::size_t l = rng.index(dim + 1);
    for (std::size_t i = 0; i < l; ++i) {
      bar.chars.push_back(ScalarCharacter::Power(static_cast<long>(rng.index(7)) - 3) *
                          ScalarCharacter::Power(static_cast<long>(rng.index(5)) - 2, HomKind::kQuadConjugation));
    }
    bar.zero_pad = rng.index(dim - l + 1);
    bar.one_pad = dim - l - bar.zero_pad;
    Matrix s0 = random_gl(dim, dim + 3, pool, rng);
    Matrix s0_inv = inverse(s0);
    MapExpr inner{n, k, {bar}};
    MapOracle o{n, dim, k, [=](const Matrix& a) { return s0_inv * eval(inner, a) * s0; }};
    IdempotentNormalization norm = normalize_idempotents(o);
    if (norm.rank0 != bar.one_pad || norm.l != l) out.Fail("(s, l) not recovered at sample " + std::to_string(t));
    ClassifyReport r = classify(o, {rng.next(), 20, 5});
    for (int i = 0; i < 12; ++i) {
      Matrix a = i % 4 == 3 ? random_singular(n, 5, pool, rng) : random_gl(n, 5, pool, rng);
      if (!(eval_report(r, a) == o.evaluate(a))) out.Fail("reconstruction differs at sample " + std::to_string(t));
    }
  }
  return out;
}

}  // namespace

int main() {
  Run(1, "cofactor(AB) = cofactor(A) cofactor(B), n = 2..5, singular included", [] { return CofactorMultiplicative(false); });
  Run(2, "A transpose(cofactor(A)) = det(A) I on the same samples", [] { return CofactorMultiplicative(true); });
  Run(3, "cofactor(cofactor(A)) = det(A)^(n-2) A, n = 2..4", DoubleCofactor);
  Run(4, "decompose_sl reproduces 100 random SL(4, Q) elements, length <= 32", SlDecomposition);
  Run(5, "conjugator_from_units recovers S up to scalars, n = 3", UnitConjugator);
  Run(6, "classify(expr) matches simplify(expr) and the oracle, n = 3 over Q(sqrt 2)", ExpressionRoundTrip);
  Run(7, "det^3 into M_2 is trivial with chars [x^3, x^3]; k < n always trivial", TrivialBelowN);
  Run(8, "hom recovery over Q is the identity; corrupted table rejected", HomRecovery);
  Run(9, "nested unitriangular commutators vanish on the first d superdiagonals", LowerCentralSeries);
  Run(10, "adjugate fails check_multiplicative at n = 2 within 50 samples", AdjugateRejected);
  Run(11, "padded trivial oracles: (s, l) recovered and reconstruction matches", SynthesizedPadding);
  std::printf("%d of 11 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
