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

// Exact scalars over Q and Q(sqrt d), plus the ring homomorphisms of these
// fields that the rest of the library can name.

#ifndef MULMAP_FIELD_HPP_
#define MULMAP_FIELD_HPP_

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mulmap {

enum class FieldKind { kRational, kQuadratic };

class FieldDescriptor {
 public:
  static FieldDescriptor Rational() { return FieldDescriptor(); }
  // Throws kInvalidArgument unless d is squarefree and not in {0, 1}.
  static FieldDescriptor Quadratic(std::int64_t d);
  // "rational" or "quadratic:<d>".
  static FieldDescriptor FromString(std::string_view text);

  FieldKind kind() const noexcept { return kind_; }
  bool is_quadratic() const noexcept { return kind_ == FieldKind::kQuadratic; }
  // Radicand; 0 for Q.
  std::int64_t d() const noexcept { return d_; }

  std::string ToString() const;

  bool operator==(const FieldDescriptor&) const = default;

 private:
  FieldDescriptor() = default;
  FieldKind kind_ = FieldKind::kRational;
  std::int64_t d_ = 0;
};

// a + b*sqrt(d). For Q the b component is always zero. Both components are
// canonical mpq values, so equality is componentwise.
class FieldElem {
 public:
  explicit FieldElem(FieldDescriptor fd) : fd_(fd) {}
  FieldElem(FieldDescriptor fd, mpq_class a);
  FieldElem(FieldDescriptor fd, mpq_class a, mpq_class b);

  static FieldElem FromInt(FieldDescriptor fd, long value);
  static FieldElem FromFraction(FieldDescriptor fd, long num, long den);
  // sqrt(d) itself; kFieldMismatch over Q.
  static FieldElem Sqrt(FieldDescriptor fd);

  const FieldDescriptor& field() const noexcept { return fd_; }
  const mpq_class& a() const noexcept { return a_; }
  const mpq_class& b() const noexcept { return b_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_one() const { return a_ == 1 && sgn(b_) == 0; }
  bool is_rational() const { return sgn(b_) == 0; }

  FieldElem operator-() const;
  FieldElem& operator+=(const FieldElem& rhs);
  FieldElem& operator-=(const FieldElem& rhs);
  FieldElem& operator*=(const FieldElem& rhs);
  FieldElem& operator/=(const FieldElem& rhs);

  friend FieldElem operator+(FieldElem lhs, const FieldElem& rhs) { return lhs += rhs; }
  friend FieldElem operator-(FieldElem lhs, const FieldElem& rhs) { return lhs -= rhs; }
  friend FieldElem operator*(FieldElem lhs, const FieldElem& rhs) { return lhs *= rhs; }
  friend FieldElem operator/(FieldElem lhs, const FieldElem& rhs) { return lhs /= rhs; }

  // Throws kFieldMismatch when the descriptors differ.
  bool operator==(const FieldElem& rhs) const;

  // Multiplicative inverse; throws kDivisionByZero on zero.
  FieldElem inv() const;
  // Galois conjugate a - b*sqrt(d); identity on Q.
  FieldElem conjugate() const;
  // Field norm a^2 - d*b^2.
  mpq_class norm() const;
  // Integer power; negative exponents invert (zero base throws).
  FieldElem pow(long exponent) const;

  // Total order on the representation, used only for deterministic sorting.
  std::strong_ordering repr_order(const FieldElem& rhs) const;

 private:
  void CheckSameField(const FieldElem& rhs) const;

  FieldDescriptor fd_;
  mpq_class a_ = 0;
  mpq_class b_ = 0;
};

FieldElem add(const FieldElem& x, const FieldElem& y);
FieldElem mul(const FieldElem& x, const FieldElem& y);
FieldElem neg(const FieldElem& x);
FieldElem inv(const FieldElem& x);
bool eq(const FieldElem& x, const FieldElem& y);
bool is_zero(const FieldElem& x);

// Grammar (no whitespace):
//   rational  := '-'? digits ('/' nonzero-digits)?
//   quadratic := rational (('+'|'-') rational '*s')?
FieldElem parse_scalar(std::string_view text, const FieldDescriptor& fd);
std::string format_scalar(const FieldElem& x);

// ---------------------------------------------------------------------------
// Ring homomorphisms F -> F.

enum class HomKind { kIdentity, kQuadConjugation, kSampled };

class RingHom {
 public:
  using Table = std::vector<std::pair<FieldElem, FieldElem>>;

  static RingHom Identity() { return RingHom(HomKind::kIdentity, {}); }
  static RingHom QuadConjugation() { return RingHom(HomKind::kQuadConjugation, {}); }
  static RingHom Sampled(Table table) { return RingHom(HomKind::kSampled, std::move(table)); }

  HomKind kind() const noexcept { return kind_; }
  bool is_registered() const noexcept { return kind_ != HomKind::kSampled; }
  const Table& table() const noexcept { return table_; }

  // Registered homs compare by tag; sampled homs by table contents.
  bool operator==(const RingHom& rhs) const;

 private:
  RingHom(HomKind kind, Table table) : kind_(kind), table_(std::move(table)) {}
  HomKind kind_;
  Table table_;
};

// Throws kFieldMismatch for QuadConjugation over Q and kProbeMiss for a
// sampled hom queried off its table (0 and 1 are always answered).
FieldElem hom_apply(const RingHom& h, const FieldElem& x);

// True iff h(x+y) = h(x)+h(y), h(xy) = h(x)h(y) on every sample pair and
// h(1) = 1. For sampled homs, a check whose operands are off-table is skipped.
bool hom_check(const RingHom& h,
               std::span<const std::pair<FieldElem, FieldElem>> samples);

// hom_check over all ordered pairs of a sampled table's inputs.
bool hom_check_table(const RingHom& h);

// phi o psi for registered homs; kUnregisteredHom otherwise.
RingHom compose_homs(const RingHom& phi, const RingHom& psi);

std::string_view hom_name(HomKind kind);  // "id" / "conj" / "sampled"
HomKind hom_kind_from_name(std::string_view name);

// Registered homs valid for the field, identity first.
std::vector<RingHom> registered_homs(const FieldDescriptor& fd);

// Returns the registered hom agreeing with every (x, y) pair, if any.
std::optional<RingHom> match_registered_hom(
    const FieldDescriptor& fd,
    std::span<const std::pair<FieldElem, FieldElem>> table);

// Default scalar pools.
std::vector<FieldElem> default_scalar_pool(const FieldDescriptor& fd);

}  // namespace mulmap

#endif  // MULMAP_FIELD_HPP_
