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

#include "mulmap/mapexpr.hpp"

#include <algorithm>
#include <cstdlib>

#include "mulmap/error.hpp"

namespace mulmap {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

// ---------------------------------------------------------------------------
// ScalarCharacter

ScalarCharacter ScalarCharacter::Power(long exponent, HomKind hom) {
  ScalarCharacter c;
  c.Add(hom, exponent);
  return c;
}

void ScalarCharacter::Add(HomKind hom, long exponent) {
  if (hom == HomKind::kSampled) {
    throw Error(ErrorCode::kUnregisteredHom, "characters are built from registered homs only");
  }
  if (exponent == 0) return;
  long& p = factors_[hom];
  p += exponent;
  if (p == 0) factors_.erase(hom);
}

long ScalarCharacter::power(HomKind hom) const {
  auto it = factors_.find(hom);
  return it == factors_.end() ? 0 : it->second;
}

long ScalarCharacter::max_abs_power() const {
  long m = 0;
  for (const auto& [h, p] : factors_) m = std::max(m, std::labs(p));
  return m;
}

FieldElem ScalarCharacter::operator()(const FieldElem& x) const {
  FieldElem out = FieldElem::FromInt(x.field(), 1);
  for (const auto& [h, p] : factors_) {
    FieldElem base = h == HomKind::kQuadConjugation ? x.conjugate() : x;
    out *= base.pow(p);
  }
  return out;
}

ScalarCharacter ScalarCharacter::operator*(const ScalarCharacter& rhs) const {
  ScalarCharacter out = *this;
  for (const auto& [h, p] : rhs.factors_) out.Add(h, p);
  return out;
}

ScalarCharacter ScalarCharacter::pow(long exponent) const {
  ScalarCharacter out;
  for (const auto& [h, p] : factors_) out.Add(h, p * exponent);
  return out;
}

HomKind compose_hom_kinds(HomKind outer, HomKind inner) {
  if (outer == HomKind::kSampled || inner == HomKind::kSampled) {
    throw Error(ErrorCode::kUnregisteredHom, "composition with a sampled hom is not representable");
  }
  return outer == inner ? HomKind::kIdentity : HomKind::kQuadConjugation;
}

ScalarCharacter ScalarCharacter::after_hom(HomKind phi) const {
  ScalarCharacter out;
  for (const auto& [h, p] : factors_) out.Add(compose_hom_kinds(phi, h), p);
  return out;
}

ScalarCharacter ScalarCharacter::compose(const ScalarCharacter& inner) const {
  // h_i(prod_j g_j(x)^{q_j})^{p_i} = prod_j (h_i o g_j)(x)^{p_i q_j}
  ScalarCharacter out;
  for (const auto& [h, p] : factors_) {
    for (const auto& [g, q] : inner.factors_) out.Add(compose_hom_kinds(h, g), p * q);
  }
  return out;
}

// ---------------------------------------------------------------------------
// MapExpr

std::size_t MapExpr::k() const {
  if (!atoms.empty()) {
    if (const auto* t = std::get_if<TrivialDetAtom>(&atoms.front())) return t->k();
  }
  return n;
}

void MapExpr::validate() const {
  if (n < 1) throw Error(ErrorCode::kMalformedExpr, "expression dimension must be >= 1");
  for (std::size_t idx = 0; idx < atoms.size(); ++idx) {
    std::visit(
        Overloaded{
            [&](const ConjAtom& a) {
              if (a.r.n() != n) throw Error(ErrorCode::kDimensionMismatch, "conjugator dimension differs from n");
              if (!(a.r.field() == field)) throw Error(ErrorCode::kFieldMismatch, "conjugator from another field");
              if (det(a.r).is_zero()) throw Error(ErrorCode::kSingularConjugator, "conjugator is singular");
            },
            [&](const CofAtom&) {
              if (n < 2) throw Error(ErrorCode::kMalformedExpr, "cofactor atom requires n >= 2");
            },
            [&](const HomAtom& a) {
              if (a.phi.kind() == HomKind::kQuadConjugation && !field.is_quadratic()) {
                throw Error(ErrorCode::kFieldMismatch, "conjugation hom over a rational field");
              }
            },
            [&](const DetScaleAtom& a) {
              if (a.lambda.power(HomKind::kQuadConjugation) != 0 && !field.is_quadratic()) {
                throw Error(ErrorCode::kFieldMismatch, "conjugation character over a rational field");
              }
            },
            [&](const TrivialDetAtom& a) {
              if (idx != 0) {
                throw Error(ErrorCode::kMalformedExpr, "trivialdet must be the last-applied atom");
              }
              if (a.k() < 1) throw Error(ErrorCode::kMalformedExpr, "trivialdet codomain is empty");
              if (a.k() > n) throw Error(ErrorCode::kMalformedExpr, "trivialdet codomain exceeds n");
              for (const auto& c : a.chars) {
                if (c.power(HomKind::kQuadConjugation) != 0 && !field.is_quadratic()) {
                  throw Error(ErrorCode::kFieldMismatch, "conjugation character over a rational field");
                }
              }
            },
        },
        atoms[idx]);
  }
}

MapExpr identity_expr(std::size_t n, FieldDescriptor fd) { return MapExpr{n, fd, {}}; }

MapExpr atom_expr(std::size_t n, FieldDescriptor fd, MapAtom atom) {
  MapExpr e{n, fd, {std::move(atom)}};
  e.validate();
  return e;
}

namespace {

Matrix TrivialImage(const TrivialDetAtom& t, const FieldElem& d) {
  const FieldDescriptor fd = d.field();
  Matrix out(t.k(), fd);
  const bool singular = d.is_zero();
  for (std::size_t i = 0; i < t.chars.size(); ++i) {
    if (!singular) out(i, i) = t.chars[i](d);
  }
  for (std::size_t i = 0; i < t.one_pad; ++i) {
    std::size_t p = t.chars.size() + t.zero_pad + i;
    out(p, p) = FieldElem::FromInt(fd, 1);
  }
  return out;
}

}  // namespace

Matrix eval_atom(const MapAtom& atom, const Matrix& a) {
  return std::visit(
      Overloaded{
          [&](const ConjAtom& c) -> Matrix { return inverse(c.r) * a * c.r; },
          [&](const CofAtom&) -> Matrix { return cofactor(a); },
          [&](const HomAtom& h) -> Matrix { return apply_hom(h.phi, a); },
          [&](const DetScaleAtom& s) -> Matrix {
            FieldElem d = det(a);
            if (d.is_zero()) return Matrix::Zero(a.n(), a.field());
            return scalar_mul(s.lambda(d), a);
          },
          [&](const TrivialDetAtom& t) -> Matrix { return TrivialImage(t, det(a)); },
      },
      atom);
}

Matrix eval(const MapExpr& e, const Matrix& a) {
  if (a.n() != e.n) {
    throw Error(ErrorCode::kDimensionMismatch, "expression expects n = " + std::to_string(e.n) +
                                                   ", got " + std::to_string(a.n()));
  }
  if (!(a.field() == e.field)) throw Error(ErrorCode::kFieldMismatch, "matrix field differs from expression field");
  Matrix m = a;
  for (auto it = e.atoms.rbegin(); it != e.atoms.rend(); ++it) {
    if (const auto* c = std::get_if<ConjAtom>(&*it); c && det(c->r).is_zero()) {
      throw Error(ErrorCode::kSingularConjugator, "conjugator is singular");
    }
    m = eval_atom(*it, m);
  }
  return m;
}

MapExpr compose(const MapExpr& f, const MapExpr& g) {
  if (g.k() != f.n) {
    throw Error(ErrorCode::kDimensionMismatch, "cannot compose: inner codomain " + std::to_string(g.k()) +
                                                   " != outer domain " + std::to_string(f.n));
  }
  if (!(f.field == g.field)) throw Error(ErrorCode::kFieldMismatch, "cannot compose maps over different fields");
  if (!f.atoms.empty() && !g.atoms.empty() && std::holds_alternative<TrivialDetAtom>(g.atoms.front())) {
    throw Error(ErrorCode::kMalformedExpr, "trivialdet must be the last-applied atom");
  }
  MapExpr out{g.n, f.field, f.atoms};
  out.atoms.insert(out.atoms.end(), g.atoms.begin(), g.atoms.end());
  return out;
}

// ---------------------------------------------------------------------------
// Canonical forms

std::string_view map_class_name(MapClass c) {
  switch (c) {
    case MapClass::kTrivial: return "trivial";
    case MapClass::kDegenerate: return "degenerate";
    case MapClass::kNonDegenerate: return "nondegenerate";
  }
  return "nondegenerate";
}

CanonicalForm canonicalize(CanonicalForm form) {
  if (form.cls == MapClass::kTrivial) return form;
  if (form.n == 2 && form.eps == Eps::kCofactor && form.r) {
    // C(M) = J M J^{-1} for 2x2 M, so R^{-1} C(M) R = (J^{-1} R)^{-1} M (J^{-1} R).
    const FieldDescriptor fd = form.field;
    Matrix j_inv(2, fd);
    j_inv(0, 1) = FieldElem::FromInt(fd, -1);
    j_inv(1, 0) = FieldElem::FromInt(fd, 1);
    form.r = j_inv * *form.r;
    form.eps = Eps::kPlain;
  }
  if (form.r) form.r = normalize_projective(*form.r);
  return form;
}

Matrix eval_form(const CanonicalForm& form, const Matrix& a) {
  if (a.n() != form.n) throw Error(ErrorCode::kDimensionMismatch, "form expects n = " + std::to_string(form.n));
  const FieldDescriptor fd = form.field;
  if (form.cls == MapClass::kTrivial) {
    FieldElem d = det(a);
    if (form.trivial_table) {
      const std::size_t l = form.k - form.zero_pad - form.one_pad;
      Matrix block(l, fd);
      if (!d.is_zero()) {
        bool found = false;
        for (const auto& [x, img] : *form.trivial_table) {
          if (x == d) {
            block = img;
            found = true;
            break;
          }
        }
        if (!found && !d.is_one()) throw Error(ErrorCode::kProbeMiss, "trivial table has no entry for det");
        if (!found) block = Matrix::Identity(l, fd);
      }
      std::vector<Matrix> blocks{block, Matrix::Zero(form.zero_pad, fd), Matrix::Identity(form.one_pad, fd)};
      return block_diag(blocks, fd);
    }
    TrivialDetAtom t{form.chars, form.zero_pad, form.one_pad};
    return TrivialImage(t, d);
  }
  FieldElem d = det(a);
  if (form.cls == MapClass::kDegenerate && d.is_zero()) return Matrix::Zero(form.n, fd);
  Matrix m = apply_hom(form.phi, a);
  if (form.eps == Eps::kCofactor) m = cofactor(m);
  if (form.r) m = inverse(*form.r) * m * *form.r;
  if (form.cls == MapClass::kDegenerate) {
    FieldElem scale = FieldElem::FromInt(fd, 1);
    if (form.lambda_table) {
      bool found = d.is_one();
      for (const auto& [x, y] : *form.lambda_table) {
        if (x == d) {
          scale = y;
          found = true;
          break;
        }
      }
      if (!found) throw Error(ErrorCode::kProbeMiss, "lambda table has no entry for det");
    } else {
      scale = form.lambda(d);
    }
    m = scalar_mul(scale, m);
  }
  return m;
}

namespace {

// Running normal form while folding atoms from the innermost outwards:
//   A |-> [zero_on_singular and det A = 0] ? 0 : lambda(det A) R^{-1} E(phi(A)) R
struct FoldState {
  bool degenerate = false;
  ScalarCharacter lambda;
  HomKind phi = HomKind::kIdentity;
  Matrix r;
  bool cof = false;

  // det of the current image as a character of det A.
  ScalarCharacter DetCharacter(std::size_t n) const {
    long e = cof ? static_cast<long>(n) - 1 : 1;
    return lambda.pow(static_cast<long>(n)) * ScalarCharacter::Power(e, phi);
  }
};

HomKind RegisteredKind(const RingHom& h) {
  if (!h.is_registered()) {
    throw Error(ErrorCode::kUnregisteredHom, "sampled hom inside an expression cannot be rewritten");
  }
  return h.kind();
}

}  // namespace

CanonicalForm simplify(const MapExpr& e) {
  e.validate();
  const std::size_t n = e.n;
  const FieldDescriptor fd = e.field;
  FoldState st{false, {}, HomKind::kIdentity, Matrix::Identity(n, fd), false};

  for (auto it = e.atoms.rbegin(); it != e.atoms.rend(); ++it) {
    const MapAtom& atom = *it;
    if (const auto* t = std::get_if<TrivialDetAtom>(&atom)) {
      // Depends only on det of the inner image, which is a character of det A.
      ScalarCharacter c = st.DetCharacter(n);
      CanonicalForm form;
      form.cls = MapClass::kTrivial;
      form.n = n;
      form.k = t->k();
      form.field = fd;
      for (const auto& ch : t->chars) form.chars.push_back(ch.compose(c));
      form.zero_pad = t->zero_pad;
      form.one_pad = t->one_pad;
      return canonicalize(std::move(form));
    }
    std::visit(
        Overloaded{
            // Conj(S) o Conj(R) -> Conj(RS).
            [&](const ConjAtom& a) { st.r = st.r * a.r; },
            [&](const CofAtom&) {
              // C(l R^{-1} M R) = l^{n-1} C(R)^{-1} C(M) C(R), and
              // C(C(M)) = det(M)^{n-2} M.
              st.r = cofactor(st.r);
              st.lambda = st.lambda.pow(static_cast<long>(n) - 1);
              if (st.cof) {
                st.lambda = st.lambda * ScalarCharacter::Power(static_cast<long>(n) - 2, st.phi);
                if (n >= 3) st.degenerate = true;
              }
              st.cof = !st.cof;
            },
            [&](const HomAtom& a) {
              HomKind psi = RegisteredKind(a.phi);
              st.lambda = st.lambda.after_hom(psi);
              st.phi = compose_hom_kinds(psi, st.phi);
              st.r = apply_hom(a.phi, st.r);
            },
            [&](const DetScaleAtom& a) {
              st.lambda = st.lambda * a.lambda.compose(st.DetCharacter(n));
              st.degenerate = true;
            },
            [&](const TrivialDetAtom&) {},
        },
        atom);
  }

  CanonicalForm form;
  form.cls = st.degenerate ? MapClass::kDegenerate : MapClass::kNonDegenerate;
  form.n = n;
  form.k = n;
  form.field = fd;
  form.lambda = st.lambda;
  form.phi = st.phi == HomKind::kIdentity ? RingHom::Identity() : RingHom::QuadConjugation();
  form.r = st.r;
  form.eps = st.cof ? Eps::kCofactor : Eps::kPlain;
  return canonicalize(std::move(form));
}

bool canonical_eq(const CanonicalForm& a, const CanonicalForm& b) {
  if (a.cls != b.cls || a.n != b.n || a.k != b.k || !(a.field == b.field)) return false;
  if (a.cls == MapClass::kTrivial) {
    if (a.zero_pad != b.zero_pad || a.one_pad != b.one_pad) return false;
    if (a.trivial_table || b.trivial_table) return false;
    std::vector<ScalarCharacter> ca = a.chars, cb = b.chars;
    std::sort(ca.begin(), ca.end());
    std::sort(cb.begin(), cb.end());
    return ca == cb;
  }
  CanonicalForm na = canonicalize(a), nb = canonicalize(b);
  if (na.eps != nb.eps || !(na.phi == nb.phi)) return false;
  if (na.lambda_table.has_value() != nb.lambda_table.has_value()) return false;
  if (na.lambda_table) {
    if (na.lambda_table->size() != nb.lambda_table->size()) return false;
    for (std::size_t i = 0; i < na.lambda_table->size(); ++i) {
      if (!((*na.lambda_table)[i].first == (*nb.lambda_table)[i].first) ||
          !((*na.lambda_table)[i].second == (*nb.lambda_table)[i].second)) {
        return false;
      }
    }
  } else if (!(na.lambda == nb.lambda)) {
    return false;
  }
  const Matrix id = Matrix::Identity(a.n, a.field);
  return projectively_equal(na.r.value_or(id), nb.r.value_or(id));
}

// ---------------------------------------------------------------------------
// Random expressions

namespace {

ScalarCharacter RandomCharacter(const FieldDescriptor& fd, Rng& rng) {
  static constexpr long kPowers[] = {-1, 1, 1, 2};
  ScalarCharacter c = ScalarCharacter::Power(kPowers[rng.index(4)]);
  if (fd.is_quadratic() && rng.index(3) == 0) {
    c = c * ScalarCharacter::Power(kPowers[rng.index(4)], HomKind::kQuadConjugation);
  }
  return c;
}

MapAtom RandomAtom(std::size_t n, const FieldDescriptor& fd, const RandomExprOptions& opts,
                   std::span<const FieldElem> pool, Rng& rng) {
  for (;;) {
    switch (rng.index(4)) {
      case 0:
        return ConjAtom{random_gl(n, opts.conj_length, pool, rng)};
      case 1:
        if (n >= 2) return CofAtom{};
        break;
      case 2:
        return HomAtom{fd.is_quadratic() && rng.index(2) == 0 ? RingHom::QuadConjugation()
                                                              : RingHom::Identity()};
      default:
        return DetScaleAtom{RandomCharacter(fd, rng)};
    }
  }
}

bool WithinPowerBound(const CanonicalForm& f, long bound) {
  if (f.lambda.max_abs_power() > bound) return false;
  for (const auto& c : f.chars) {
    if (c.max_abs_power() > bound) return false;
  }
  return true;
}

}  // namespace

MapExpr random_map_expr(std::size_t n, FieldDescriptor fd, const RandomExprOptions& opts, Rng& rng) {
  const std::vector<FieldElem> pool = default_scalar_pool(fd);
  for (;;) {
    std::size_t depth = 1 + rng.index(std::max<std::size_t>(opts.max_depth, 1));
    MapExpr e{n, fd, {}};
    for (std::size_t i = 0; i < depth; ++i) e.atoms.push_back(RandomAtom(n, fd, opts, pool, rng));
    if (WithinPowerBound(simplify(e), opts.max_power)) return e;
  }
}

MapExpr random_trivial_expr(std::size_t n, FieldDescriptor fd, bool k_below_n, Rng& rng) {
  RandomExprOptions inner_opts;
  inner_opts.max_depth = 2;
  for (;;) {
    const std::size_t k_max = k_below_n ? n - 1 : n;
    if (k_max < 1) throw Error(ErrorCode::kInvalidArgument, "no codomain dimension available");
    const std::size_t k = 1 + rng.index(k_max);
    TrivialDetAtom t;
    std::size_t l = rng.index(k + 1);
    for (std::size_t i = 0; i < l; ++i) t.chars.push_back(RandomCharacter(fd, rng));
    t.zero_pad = rng.index(k - l + 1);
    t.one_pad = k - l - t.zero_pad;
    MapExpr e = rng.index(2) == 0 ? random_map_expr(n, fd, inner_opts, rng) : identity_expr(n, fd);
    e.atoms.insert(e.atoms.begin(), std::move(t));
    if (WithinPowerBound(simplify(e), 6)) return e;
  }
}

}  // namespace mulmap
