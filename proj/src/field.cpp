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

#include "mulmap/field.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>

#include "mulmap/error.hpp"

namespace mulmap {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDivisionByZero: return "DivisionByZero";
    case ErrorCode::kFieldMismatch: return "FieldMismatch";
    case ErrorCode::kProbeMiss: return "ProbeMiss";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kSingularMatrix: return "SingularMatrix";
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kNotMatrixUnits: return "NotMatrixUnits";
    case ErrorCode::kSingularRecovery: return "SingularRecovery";
    case ErrorCode::kNotCommutingIdempotents: return "NotCommutingIdempotents";
    case ErrorCode::kNotSpecialLinear: return "NotSpecialLinear";
    case ErrorCode::kSingularConjugator: return "SingularConjugator";
    case ErrorCode::kUnregisteredHom: return "UnregisteredHom";
    case ErrorCode::kMalformedExpr: return "MalformedExpr";
    case ErrorCode::kNotMultiplicative: return "NotMultiplicative";
    case ErrorCode::kUnrecognizedHom: return "UnrecognizedHom";
    case ErrorCode::kNonDiagonalizableTrivial: return "NonDiagonalizableTrivial";
    case ErrorCode::kRankLadderViolation: return "RankLadderViolation";
    case ErrorCode::kVerificationFailed: return "VerificationFailed";
    case ErrorCode::kUnsupportedDimension: return "UnsupportedDimension";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

namespace {

bool IsSquarefree(std::int64_t d) {
  std::uint64_t m = d < 0 ? static_cast<std::uint64_t>(-d) : static_cast<std::uint64_t>(d);
  for (std::uint64_t p = 2; p * p <= m; ++p) {
    if (m % (p * p) == 0) return false;
    while (m % p == 0) m /= p;
  }
  return true;
}

}  // namespace

FieldDescriptor FieldDescriptor::Quadratic(std::int64_t d) {
  if (d == 0 || d == 1 || !IsSquarefree(d)) {
    throw Error(ErrorCode::kInvalidArgument,
                "quadratic field radicand must be squarefree and not 0 or 1, got " +
                    std::to_string(d));
  }
  FieldDescriptor fd;
  fd.kind_ = FieldKind::kQuadratic;
  fd.d_ = d;
  return fd;
}

FieldDescriptor FieldDescriptor::FromString(std::string_view text) {
  if (text == "rational" || text == "Q") return Rational();
  constexpr std::string_view kPrefix = "quadratic:";
  if (text.substr(0, kPrefix.size()) == kPrefix) {
    std::string_view rest = text.substr(kPrefix.size());
    std::int64_t d = 0;
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), d);
    if (ec == std::errc() && ptr == rest.data() + rest.size()) return Quadratic(d);
  }
  throw Error(ErrorCode::kInvalidArgument,
              "field must be 'rational' or 'quadratic:<d>', got '" + std::string(text) + "'");
}

std::string FieldDescriptor::ToString() const {
  return is_quadratic() ? "quadratic:" + std::to_string(d_) : "rational";
}

FieldElem::FieldElem(FieldDescriptor fd, mpq_class a) : fd_(fd), a_(std::move(a)) {
  a_.canonicalize();
}

FieldElem::FieldElem(FieldDescriptor fd, mpq_class a, mpq_class b)
    : fd_(fd), a_(std::move(a)), b_(std::move(b)) {
  a_.canonicalize();
  b_.canonicalize();
  if (!fd_.is_quadratic() && sgn(b_) != 0) {
    throw Error(ErrorCode::kFieldMismatch, "sqrt component in a rational field element");
  }
}

FieldElem FieldElem::FromInt(FieldDescriptor fd, long value) {
  return FieldElem(fd, mpq_class(value));
}

FieldElem FieldElem::FromFraction(FieldDescriptor fd, long num, long den) {
  if (den == 0) throw Error(ErrorCode::kDivisionByZero, "zero denominator");
  return FieldElem(fd, mpq_class(num, den));
}

FieldElem FieldElem::Sqrt(FieldDescriptor fd) {
  if (!fd.is_quadratic()) throw Error(ErrorCode::kFieldMismatch, "sqrt(d) requires a quadratic field");
  return FieldElem(fd, mpq_class(0), mpq_class(1));
}

void FieldElem::CheckSameField(const FieldElem& rhs) const {
  if (!(fd_ == rhs.fd_)) {
    throw Error(ErrorCode::kFieldMismatch,
                "mixed fields: " + fd_.ToString() + " vs " + rhs.fd_.ToString());
  }
}

FieldElem FieldElem::operator-() const {
  FieldElem r = *this;
  r.a_ = -a_;
  r.b_ = -b_;
  return r;
}

FieldElem& FieldElem::operator+=(const FieldElem& rhs) {
  CheckSameField(rhs);
  a_ += rhs.a_;
  b_ += rhs.b_;
  return *this;
}

FieldElem& FieldElem::operator-=(const FieldElem& rhs) {
  CheckSameField(rhs);
  a_ -= rhs.a_;
  b_ -= rhs.b_;
  return *this;
}

FieldElem& FieldElem::operator*=(const FieldElem& rhs) {
  CheckSameField(rhs);
  if (sgn(b_) == 0 && sgn(rhs.b_) == 0) {
    a_ *= rhs.a_;
    return *this;
  }
  // (a + b s)(c + e s) = (ac + d be) + (ae + bc) s
  mpq_class a = a_ * rhs.a_ + mpq_class(fd_.d()) * b_ * rhs.b_;
  mpq_class b = a_ * rhs.b_ + b_ * rhs.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

FieldElem& FieldElem::operator/=(const FieldElem& rhs) {
  CheckSameField(rhs);
  return *this *= rhs.inv();
}

bool FieldElem::operator==(const FieldElem& rhs) const {
  CheckSameField(rhs);
  return a_ == rhs.a_ && b_ == rhs.b_;
}

FieldElem FieldElem::inv() const {
  if (is_zero()) throw Error(ErrorCode::kDivisionByZero, "inverse of zero");
  if (sgn(b_) == 0) return FieldElem(fd_, 1 / a_);
  // 1/(a + b s) = (a - b s) / (a^2 - d b^2)
  mpq_class n = norm();
  return FieldElem(fd_, a_ / n, -b_ / n);
}

FieldElem FieldElem::conjugate() const {
  FieldElem r = *this;
  r.b_ = -b_;
  return r;
}

mpq_class FieldElem::norm() const {
  return a_ * a_ - mpq_class(fd_.d()) * b_ * b_;
}

FieldElem FieldElem::pow(long exponent) const {
  FieldElem base = exponent < 0 ? inv() : *this;
  unsigned long e = exponent < 0 ? static_cast<unsigned long>(-exponent)
                                 : static_cast<unsigned long>(exponent);
  FieldElem result = FromInt(fd_, 1);
  while (e != 0) {
    if (e & 1UL) result *= base;
    e >>= 1;
    if (e != 0) base *= base;
  }
  return result;
}

std::strong_ordering FieldElem::repr_order(const FieldElem& rhs) const {
  int c = cmp(a_, rhs.a_);
  if (c == 0) c = cmp(b_, rhs.b_);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

FieldElem add(const FieldElem& x, const FieldElem& y) { return x + y; }
FieldElem mul(const FieldElem& x, const FieldElem& y) { return x * y; }
FieldElem neg(const FieldElem& x) { return -x; }
FieldElem inv(const FieldElem& x) { return x.inv(); }
bool eq(const FieldElem& x, const FieldElem& y) { return x == y; }
bool is_zero(const FieldElem& x) { return x.is_zero(); }

// ---------------------------------------------------------------------------
// Scalar text format.

namespace {

class ScalarParser {
 public:
  explicit ScalarParser(std::string_view text) : text_(text) {}

  mpq_class Rational() {
    bool negative = Accept('-');
    std::string num = Digits("numerator");
    std::string den = "1";
    if (Accept('/')) {
      std::size_t den_pos = pos_;
      den = Digits("denominator");
      if (den.find_first_not_of('0') == std::string::npos) {
        throw ParseError("zero denominator", den_pos);
      }
    }
    mpq_class q{mpz_class(num), mpz_class(den)};
    q.canonicalize();
    return negative ? mpq_class(-q) : q;
  }

  bool Accept(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void Expect(char c) {
    if (!Accept(c)) throw ParseError(std::string("expected '") + c + "'", pos_);
  }

  bool AtEnd() const { return pos_ == text_.size(); }
  std::size_t pos() const { return pos_; }

 private:
  std::string Digits(const char* what) {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) throw ParseError(std::string("expected digits in ") + what, start);
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

FieldElem parse_scalar(std::string_view text, const FieldDescriptor& fd) {
  ScalarParser p(text);
  mpq_class a = p.Rational();
  if (p.AtEnd()) return FieldElem(fd, a);
  std::size_t sign_pos = p.pos();
  bool minus = false;
  if (p.Accept('-')) {
    minus = true;
  } else if (!p.Accept('+')) {
    throw ParseError("unexpected character", sign_pos);
  }
  if (!fd.is_quadratic()) throw ParseError("sqrt term in a rational field", sign_pos);
  mpq_class b = p.Rational();
  p.Expect('*');
  p.Expect('s');
  if (!p.AtEnd()) throw ParseError("trailing characters", p.pos());
  if (minus) b = -b;
  return FieldElem(fd, a, b);
}

std::string format_scalar(const FieldElem& x) {
  std::string out = x.a().get_str();
  if (sgn(x.b()) == 0) return out;
  out += sgn(x.b()) > 0 ? "+" : "-";
  out += mpq_class(abs(x.b())).get_str();
  out += "*s";
  return out;
}

// ---------------------------------------------------------------------------
// Ring homomorphisms.

bool RingHom::operator==(const RingHom& rhs) const {
  if (kind_ != rhs.kind_) return false;
  if (kind_ != HomKind::kSampled) return true;
  if (table_.size() != rhs.table_.size()) return false;
  for (std::size_t i = 0; i < table_.size(); ++i) {
    if (!(table_[i].first == rhs.table_[i].first) || !(table_[i].second == rhs.table_[i].second)) {
      return false;
    }
  }
  return true;
}

namespace {

std::optional<FieldElem> TryApply(const RingHom& h, const FieldElem& x) {
  switch (h.kind()) {
    case HomKind::kIdentity:
      return x;
    case HomKind::kQuadConjugation:
      if (!x.field().is_quadratic()) {
        throw Error(ErrorCode::kFieldMismatch, "Galois conjugation requires a quadratic field");
      }
      return x.conjugate();
    case HomKind::kSampled:
      for (const auto& [in, out] : h.table()) {
        if (in == x) return out;
      }
      if (x.is_zero() || x.is_one()) return x;
      return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace

FieldElem hom_apply(const RingHom& h, const FieldElem& x) {
  auto y = TryApply(h, x);
  if (!y) throw Error(ErrorCode::kProbeMiss, "sampled hom has no entry for " + format_scalar(x));
  return *y;
}

bool hom_check(const RingHom& h,
               std::span<const std::pair<FieldElem, FieldElem>> samples) {
  for (const auto& [x, y] : samples) {
    auto one = FieldElem::FromInt(x.field(), 1);
    auto h1 = TryApply(h, one);
    if (h1 && !h1->is_one()) return false;
    auto hx = TryApply(h, x);
    auto hy = TryApply(h, y);
    if (!hx || !hy) continue;
    if (auto hs = TryApply(h, x + y); hs && !(*hs == *hx + *hy)) return false;
    if (auto hp = TryApply(h, x * y); hp && !(*hp == *hx * *hy)) return false;
  }
  return true;
}

bool hom_check_table(const RingHom& h) {
  std::vector<std::pair<FieldElem, FieldElem>> pairs;
  for (const auto& [x, hx] : h.table()) {
    for (const auto& [y, hy] : h.table()) pairs.emplace_back(x, y);
  }
  return hom_check(h, pairs);
}

RingHom compose_homs(const RingHom& phi, const RingHom& psi) {
  if (!phi.is_registered() || !psi.is_registered()) {
    throw Error(ErrorCode::kUnregisteredHom, "composition with a sampled hom is not representable");
  }
  bool flip = (phi.kind() == HomKind::kQuadConjugation) != (psi.kind() == HomKind::kQuadConjugation);
  return flip ? RingHom::QuadConjugation() : RingHom::Identity();
}

std::string_view hom_name(HomKind kind) {
  switch (kind) {
    case HomKind::kIdentity: return "id";
    case HomKind::kQuadConjugation: return "conj";
    case HomKind::kSampled: return "sampled";
  }
  return "sampled";
}

HomKind hom_kind_from_name(std::string_view name) {
  if (name == "id") return HomKind::kIdentity;
  if (name == "conj") return HomKind::kQuadConjugation;
  throw Error(ErrorCode::kInvalidArgument, "unknown hom '" + std::string(name) + "'");
}

std::vector<RingHom> registered_homs(const FieldDescriptor& fd) {
  std::vector<RingHom> homs{RingHom::Identity()};
  if (fd.is_quadratic()) homs.push_back(RingHom::QuadConjugation());
  return homs;
}

std::optional<RingHom> match_registered_hom(
    const FieldDescriptor& fd,
    std::span<const std::pair<FieldElem, FieldElem>> table) {
  for (const RingHom& h : registered_homs(fd)) {
    bool ok = true;
    for (const auto& [x, y] : table) {
      if (!(hom_apply(h, x) == y)) {
        ok = false;
        break;
      }
    }
    if (ok) return h;
  }
  return std::nullopt;
}

std::vector<FieldElem> default_scalar_pool(const FieldDescriptor& fd) {
  std::vector<FieldElem> pool{
      FieldElem::FromInt(fd, 1),         FieldElem::FromInt(fd, -1),
      FieldElem::FromInt(fd, 2),         FieldElem::FromInt(fd, -2),
      FieldElem::FromFraction(fd, 1, 2), FieldElem::FromFraction(fd, -1, 2),
      FieldElem::FromInt(fd, 3),
  };
  if (fd.is_quadratic()) {
    FieldElem s = FieldElem::Sqrt(fd);
    pool.push_back(s);
    pool.push_back(FieldElem::FromInt(fd, 1) + s);
  }
  return pool;
}

}  // namespace mulmap
