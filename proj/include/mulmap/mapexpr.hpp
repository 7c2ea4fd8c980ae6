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

// Multiplicative maps M_n(F) -> M_k(F) as compositions of five atoms, and
// their normal forms
//
//   trivial:        A |-> blockdiag(diag(l_1(det A), ..., l_m(det A)), 0_z, I_o)
//   degenerate:     A |-> lambda(det A) R^{-1} E(phi(A)) R,  0 on singular A
//   non-degenerate: A |-> R^{-1} E(phi(A)) R
//
// where E is either the identity or the cofactor matrix map.

#ifndef MULMAP_MAPEXPR_HPP_
#define MULMAP_MAPEXPR_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "mulmap/matrix.hpp"
#include "mulmap/slword.hpp"

namespace mulmap {

// x |-> prod_i hom_i(x)^{p_i} over registered homs. The empty product is the
// constant 1.
class ScalarCharacter {
 public:
  ScalarCharacter() = default;
  static ScalarCharacter Power(long exponent, HomKind hom = HomKind::kIdentity);

  bool empty() const noexcept { return factors_.empty(); }
  const std::map<HomKind, long>& factors() const noexcept { return factors_; }
  long power(HomKind hom) const;
  long max_abs_power() const;

  // x must be nonzero.
  FieldElem operator()(const FieldElem& x) const;

  ScalarCharacter operator*(const ScalarCharacter& rhs) const;
  ScalarCharacter pow(long exponent) const;
  // phi o this.
  ScalarCharacter after_hom(HomKind phi) const;
  // x |-> this(inner(x)).
  ScalarCharacter compose(const ScalarCharacter& inner) const;

  bool operator==(const ScalarCharacter&) const = default;
  bool operator<(const ScalarCharacter& rhs) const { return factors_ < rhs.factors_; }

 private:
  void Add(HomKind hom, long exponent);
  std::map<HomKind, long> factors_;
};

HomKind compose_hom_kinds(HomKind outer, HomKind inner);

struct ConjAtom {
  Matrix r;  // A |-> R^{-1} A R
};
struct CofAtom {};
struct HomAtom {
  RingHom phi;
};
struct DetScaleAtom {
  ScalarCharacter lambda;  // A |-> lambda(det A) A, 0 if det A = 0
};
struct TrivialDetAtom {
  std::vector<ScalarCharacter> chars;
  std::size_t zero_pad = 0;
  std::size_t one_pad = 0;
  std::size_t k() const { return chars.size() + zero_pad + one_pad; }
};

using MapAtom = std::variant<ConjAtom, CofAtom, HomAtom, DetScaleAtom, TrivialDetAtom>;

// atoms[0] is applied last: eval(A) = atoms[0](atoms[1](...atoms.back()(A))).
// A TrivialDet atom may only appear in position 0; it sets the codomain
// dimension k. Every other atom works in dimension n.
struct MapExpr {
  std::size_t n;
  FieldDescriptor field;
  std::vector<MapAtom> atoms;

  std::size_t k() const;
  // Throws kMalformedExpr, kSingularConjugator, kDimensionMismatch or
  // kFieldMismatch.
  void validate() const;
};

MapExpr identity_expr(std::size_t n, FieldDescriptor fd);
MapExpr atom_expr(std::size_t n, FieldDescriptor fd, MapAtom atom);

Matrix eval_atom(const MapAtom& atom, const Matrix& a);
Matrix eval(const MapExpr& e, const Matrix& a);

// compose(f, g)(A) = f(g(A)).
MapExpr compose(const MapExpr& f, const MapExpr& g);

// ---------------------------------------------------------------------------

enum class MapClass { kTrivial, kDegenerate, kNonDegenerate };
enum class Eps { kPlain, kCofactor };

std::string_view map_class_name(MapClass c);

struct CanonicalForm {
  MapClass cls = MapClass::kNonDegenerate;
  std::size_t n = 0;
  std::size_t k = 0;
  FieldDescriptor field = FieldDescriptor::Rational();

  // Degenerate / non-degenerate.
  ScalarCharacter lambda;
  // Set instead of `lambda` when no character in the search range fits.
  std::optional<RingHom::Table> lambda_table;
  RingHom phi = RingHom::Identity();
  std::optional<Matrix> r;
  Eps eps = Eps::kPlain;

  // Trivial.
  std::vector<ScalarCharacter> chars;
  std::size_t zero_pad = 0;
  std::size_t one_pad = 0;
  // Raw images of D_1(x) on the working block when the characters could not
  // be fitted.
  std::optional<std::vector<std::pair<FieldElem, Matrix>>> trivial_table;

  bool sampled() const {
    return lambda_table.has_value() || !phi.is_registered() || trivial_table.has_value();
  }
};

// Normalizes R projectively and rewrites the n = 2 cofactor map as a
// conjugation (C(M) = J M J^{-1}). Trivial characters keep their order;
// canonical_eq compares them as multisets.
CanonicalForm canonicalize(CanonicalForm form);

// Throws kProbeMiss if a sampled component is queried off its table.
Matrix eval_form(const CanonicalForm& form, const Matrix& a);

// Rewrites a composition into its canonical form. Throws kUnregisteredHom
// when a sampled hom takes part in a composition.
CanonicalForm simplify(const MapExpr& e);

bool canonical_eq(const CanonicalForm& a, const CanonicalForm& b);

// ---------------------------------------------------------------------------

struct RandomExprOptions {
  std::size_t max_depth = 5;
  // Upper bound on |power| in the simplified lambda.
  long max_power = 6;
  // Conjugator length in transvections.
  std::size_t conj_length = 3;
};

// Seed-deterministic random expression whose simplified form stays inside
// the character search range.
MapExpr random_map_expr(std::size_t n, FieldDescriptor fd, const RandomExprOptions& opts, Rng& rng);

// TrivialDet(random chars, pads) o random inner expression, with k < n when
// k_below_n is set.
MapExpr random_trivial_expr(std::size_t n, FieldDescriptor fd, bool k_below_n, Rng& rng);

}  // namespace mulmap

#endif  // MULMAP_MAPEXPR_HPP_
