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

#include "mulmap/matrix.hpp"

#include <optional>
#include <string>

#include "mulmap/error.hpp"

namespace mulmap {

namespace {

void CheckCompatible(const Matrix& a, const Matrix& b, const char* op) {
  if (a.n() != b.n()) {
    throw Error(ErrorCode::kDimensionMismatch, std::string(op) + ": dimensions " +
                                                   std::to_string(a.n()) + " and " +
                                                   std::to_string(b.n()));
  }
  if (!(a.field() == b.field())) {
    throw Error(ErrorCode::kFieldMismatch, std::string(op) + ": mixed fields");
  }
}

void CheckIndex(std::size_t n, std::size_t i) {
  if (i < 1 || i > n) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "index " + std::to_string(i) + " outside 1.." + std::to_string(n));
  }
}

// Reduced row echelon form of a copy of `a`. Records pivot columns and the
// determinant factor accumulated by row swaps and pivot scaling.
struct Echelon {
  Matrix r;
  std::vector<std::size_t> pivots;
  FieldElem det;
};

Echelon Reduce(const Matrix& a) {
  const std::size_t n = a.n();
  Echelon e{a, {}, FieldElem::FromInt(a.field(), 1)};
  Matrix& m = e.r;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < n; ++col) {
    std::optional<std::size_t> pivot;
    for (std::size_t i = row; i < n; ++i) {
      if (!m(i, col).is_zero()) {
        pivot = i;
        break;
      }
    }
    if (!pivot) continue;
    if (*pivot != row) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(row, j), m(*pivot, j));
      e.det = -e.det;
    }
    FieldElem p = m(row, col);
    e.det *= p;
    FieldElem pinv = p.inv();
    for (std::size_t j = col; j < n; ++j) m(row, j) *= pinv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == row || m(i, col).is_zero()) continue;
      FieldElem f = m(i, col);
      for (std::size_t j = col; j < n; ++j) m(i, j) -= f * m(row, j);
    }
    e.pivots.push_back(col);
    ++row;
  }
  if (e.pivots.size() < n) e.det = FieldElem(a.field());
  return e;
}

}  // namespace

Matrix::Matrix(std::size_t n, FieldDescriptor fd)
    : n_(n), fd_(fd), data_(n * n, FieldElem(fd)) {}

Matrix::Matrix(std::size_t n, FieldDescriptor fd, std::vector<FieldElem> entries)
    : n_(n), fd_(fd), data_(std::move(entries)) {
  if (data_.size() != n * n) {
    throw Error(ErrorCode::kDimensionMismatch,
                "expected " + std::to_string(n * n) + " entries, got " + std::to_string(data_.size()));
  }
  for (const auto& x : data_) {
    if (!(x.field() == fd_)) throw Error(ErrorCode::kFieldMismatch, "matrix entry from another field");
  }
}

Matrix Matrix::Identity(std::size_t n, FieldDescriptor fd) {
  Matrix m(n, fd);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = FieldElem::FromInt(fd, 1);
  return m;
}

Matrix Matrix::Scalar(std::size_t n, const FieldElem& c) {
  Matrix m(n, c.field());
  for (std::size_t i = 0; i < n; ++i) m(i, i) = c;
  return m;
}

Matrix Matrix::FromColumns(std::span<const Vector> cols, FieldDescriptor fd) {
  const std::size_t n = cols.size();
  Matrix m(n, fd);
  for (std::size_t j = 0; j < n; ++j) {
    if (cols[j].size() != n) throw Error(ErrorCode::kDimensionMismatch, "column length mismatch");
    for (std::size_t i = 0; i < n; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

Matrix Matrix::Diagonal(std::span<const FieldElem> diag, FieldDescriptor fd) {
  Matrix m(diag.size(), fd);
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

Vector Matrix::column(std::size_t j) const {
  Vector v;
  v.reserve(n_);
  for (std::size_t i = 0; i < n_; ++i) v.push_back((*this)(i, j));
  return v;
}

bool Matrix::operator==(const Matrix& rhs) const {
  CheckCompatible(*this, rhs, "compare");
  for (std::size_t i = 0; i < data_.size(); ++i) {
    if (!(data_[i] == rhs.data_[i])) return false;
  }
  return true;
}

Matrix operator*(const Matrix& lhs, const Matrix& rhs) {
  CheckCompatible(lhs, rhs, "multiply");
  const std::size_t n = lhs.n();
  Matrix out(n, lhs.field());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const FieldElem& a = lhs(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (rhs(k, j).is_zero()) continue;
        out(i, j) += a * rhs(k, j);
      }
    }
  }
  return out;
}

Matrix operator+(const Matrix& lhs, const Matrix& rhs) {
  CheckCompatible(lhs, rhs, "add");
  Matrix out = lhs;
  for (std::size_t i = 0; i < lhs.n(); ++i)
    for (std::size_t j = 0; j < lhs.n(); ++j) out(i, j) += rhs(i, j);
  return out;
}

Matrix operator-(const Matrix& lhs, const Matrix& rhs) {
  CheckCompatible(lhs, rhs, "subtract");
  Matrix out = lhs;
  for (std::size_t i = 0; i < lhs.n(); ++i)
    for (std::size_t j = 0; j < lhs.n(); ++j) out(i, j) -= rhs(i, j);
  return out;
}

Vector Matrix::operator*(const Vector& v) const {
  if (v.size() != n_) throw Error(ErrorCode::kDimensionMismatch, "vector length mismatch");
  Vector out(n_, FieldElem(fd_));
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) out[i] += (*this)(i, j) * v[j];
  return out;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

bool Matrix::is_identity() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) {
      const FieldElem& x = (*this)(i, j);
      if (i == j ? !x.is_one() : !x.is_zero()) return false;
    }
  return true;
}

bool Matrix::is_diagonal() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if (i != j && !(*this)(i, j).is_zero()) return false;
  return true;
}

bool Matrix::is_scalar() const {
  if (!is_diagonal()) return false;
  for (std::size_t i = 1; i < n_; ++i)
    if (!((*this)(i, i) == (*this)(0, 0))) return false;
  return true;
}

Matrix Matrix::principal_block(std::size_t offset, std::size_t size) const {
  if (offset + size > n_) throw Error(ErrorCode::kIndexOutOfRange, "block outside matrix");
  Matrix out(size, fd_);
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j) out(i, j) = (*this)(offset + i, offset + j);
  return out;
}

Matrix Matrix::minor_matrix(std::size_t i, std::size_t j) const {
  Matrix out(n_ - 1, fd_);
  for (std::size_t r = 0, rr = 0; r < n_; ++r) {
    if (r == i) continue;
    for (std::size_t c = 0, cc = 0; c < n_; ++c) {
      if (c == j) continue;
      out(rr, cc++) = (*this)(r, c);
    }
    ++rr;
  }
  return out;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) { return a * b; }
bool mat_eq(const Matrix& a, const Matrix& b) { return a == b; }
Matrix identity(std::size_t n, FieldDescriptor fd) { return Matrix::Identity(n, fd); }
Matrix zero(std::size_t n, FieldDescriptor fd) { return Matrix::Zero(n, fd); }

Matrix scalar_mul(const FieldElem& c, const Matrix& a) {
  Matrix out = a;
  for (std::size_t i = 0; i < a.n(); ++i)
    for (std::size_t j = 0; j < a.n(); ++j) out(i, j) *= c;
  return out;
}

Matrix transpose(const Matrix& a) {
  Matrix out(a.n(), a.field());
  for (std::size_t i = 0; i < a.n(); ++i)
    for (std::size_t j = 0; j < a.n(); ++j) out(j, i) = a(i, j);
  return out;
}

Matrix mat_pow(const Matrix& a, unsigned exponent) {
  Matrix result = Matrix::Identity(a.n(), a.field());
  Matrix base = a;
  while (exponent != 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1;
    if (exponent != 0) base = base * base;
  }
  return result;
}

Matrix apply_hom(const RingHom& h, const Matrix& a) {
  Matrix out = a;
  for (std::size_t i = 0; i < a.n(); ++i)
    for (std::size_t j = 0; j < a.n(); ++j) out(i, j) = hom_apply(h, a(i, j));
  return out;
}

Matrix block_diag(std::span<const Matrix> blocks, FieldDescriptor fd) {
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.n();
  Matrix out(n, fd);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.n(); ++i)
      for (std::size_t j = 0; j < b.n(); ++j) out(off + i, off + j) = b(i, j);
    off += b.n();
  }
  return out;
}

FieldElem det(const Matrix& a) {
  if (a.n() == 0) return FieldElem::FromInt(a.field(), 1);
  return Reduce(a).det;
}

Matrix inverse(const Matrix& a) {
  const std::size_t n = a.n();
  // Gauss-Jordan on [A | I].
  Matrix m = a;
  Matrix inv = Matrix::Identity(n, a.field());
  for (std::size_t col = 0; col < n; ++col) {
    std::optional<std::size_t> pivot;
    for (std::size_t i = col; i < n; ++i) {
      if (!m(i, col).is_zero()) {
        pivot = i;
        break;
      }
    }
    if (!pivot) throw Error(ErrorCode::kSingularMatrix, "inverse of a singular matrix");
    if (*pivot != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(m(col, j), m(*pivot, j));
        std::swap(inv(col, j), inv(*pivot, j));
      }
    }
    FieldElem pinv = m(col, col).inv();
    for (std::size_t j = 0; j < n; ++j) {
      m(col, j) *= pinv;
      inv(col, j) *= pinv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || m(i, col).is_zero()) continue;
      FieldElem f = m(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        m(i, j) -= f * m(col, j);
        inv(i, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

std::size_t rank(const Matrix& a) { return Reduce(a).pivots.size(); }

std::vector<Vector> kernel_basis(const Matrix& a) {
  const std::size_t n = a.n();
  Echelon e = Reduce(a);
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vector v(n, FieldElem(a.field()));
    v[f] = FieldElem::FromInt(a.field(), 1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.r(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Vector> image_basis(const Matrix& a) {
  std::vector<Vector> basis;
  for (std::size_t p : Reduce(a).pivots) basis.push_back(a.column(p));
  return basis;
}

Matrix cofactor(const Matrix& a) {
  const std::size_t n = a.n();
  if (n < 2) throw Error(ErrorCode::kDimensionMismatch, "cofactor requires n >= 2");
  Matrix out(n, a.field());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      FieldElem m = det(a.minor_matrix(i, j));
      out(i, j) = ((i + j) % 2 == 0) ? m : -m;
    }
  return out;
}

Matrix adjugate(const Matrix& a) { return transpose(cofactor(a)); }

// ---------------------------------------------------------------------------

Matrix elementary(const ElementaryGen& g, std::size_t n) {
  switch (g.kind) {
    case GenKind::kDiagUnit:
      return diag_unit(n, g.i, g.k);
    case GenKind::kSwap:
      return swap_matrix(n, g.i, g.j, g.k.field());
    case GenKind::kTransvection:
      return transvection(n, g.i, g.j, g.k);
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown generator");
}

Matrix diag_unit(std::size_t n, std::size_t i, const FieldElem& k) {
  CheckIndex(n, i);
  if (k.is_zero()) throw Error(ErrorCode::kInvalidArgument, "D_i(k) requires k != 0");
  Matrix m = Matrix::Identity(n, k.field());
  m(i - 1, i - 1) = k;
  return m;
}

Matrix swap_matrix(std::size_t n, std::size_t i, std::size_t j, FieldDescriptor fd) {
  CheckIndex(n, i);
  CheckIndex(n, j);
  if (i == j) throw Error(ErrorCode::kInvalidArgument, "S_ij requires i != j");
  Matrix m = Matrix::Identity(n, fd);
  m(i - 1, i - 1) = FieldElem(fd);
  m(j - 1, j - 1) = FieldElem(fd);
  m(i - 1, j - 1) = FieldElem::FromInt(fd, 1);
  m(j - 1, i - 1) = FieldElem::FromInt(fd, 1);
  return m;
}

Matrix transvection(std::size_t n, std::size_t i, std::size_t j, const FieldElem& k) {
  CheckIndex(n, i);
  CheckIndex(n, j);
  if (i == j) throw Error(ErrorCode::kInvalidArgument, "P_ij requires i != j");
  Matrix m = Matrix::Identity(n, k.field());
  m(i - 1, j - 1) = k;
  return m;
}

Matrix unit_matrix(std::size_t n, std::size_t i, std::size_t j, FieldDescriptor fd) {
  CheckIndex(n, i);
  CheckIndex(n, j);
  Matrix m(n, fd);
  m(i - 1, j - 1) = FieldElem::FromInt(fd, 1);
  return m;
}

Matrix rank_idempotent(std::size_t n, std::size_t r, FieldDescriptor fd) {
  if (r > n) throw Error(ErrorCode::kIndexOutOfRange, "rank exceeds dimension");
  Matrix m(n, fd);
  for (std::size_t i = 0; i < r; ++i) m(i, i) = FieldElem::FromInt(fd, 1);
  return m;
}

Matrix coidempotent(std::size_t n, std::size_t j, FieldDescriptor fd) {
  CheckIndex(n, j);
  Matrix m = Matrix::Identity(n, fd);
  m(j - 1, j - 1) = FieldElem(fd);
  return m;
}

// ---------------------------------------------------------------------------

Matrix normalize_projective(const Matrix& a) {
  for (const auto& x : a.entries()) {
    if (!x.is_zero()) return scalar_mul(x.inv(), a);
  }
  return a;
}

bool projectively_equal(const Matrix& a, const Matrix& b) {
  if (a.n() != b.n() || !(a.field() == b.field())) return false;
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return normalize_projective(a) == normalize_projective(b);
}

Matrix conjugator_from_units(
    std::size_t n, const std::function<Matrix(std::size_t, std::size_t)>& family) {
  std::vector<Matrix> f;
  f.reserve(n * n);
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j) f.push_back(family(i, j));
  auto at = [&](std::size_t i, std::size_t j) -> const Matrix& { return f[(i - 1) * n + (j - 1)]; };
  if (at(1, 1).is_zero()) throw Error(ErrorCode::kNotMatrixUnits, "F_11 = 0");
  const FieldDescriptor fd = at(1, 1).field();
  const Matrix zero_k = Matrix::Zero(at(1, 1).n(), fd);
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j)
      for (std::size_t k = 1; k <= n; ++k)
        for (std::size_t l = 1; l <= n; ++l) {
          const Matrix& expected = (j == k) ? at(i, l) : zero_k;
          if (!(at(i, j) * at(k, l) == expected)) {
            throw Error(ErrorCode::kNotMatrixUnits,
                        "unit relations F_ij F_kl = delta_jk F_il violated at (" +
                            std::to_string(i) + "," + std::to_string(j) + "," +
                            std::to_string(k) + "," + std::to_string(l) + ")");
          }
        }
  const Matrix& f11 = at(1, 1);
  Vector v;
  for (std::size_t c = 0; c < f11.n(); ++c) {
    Vector col = f11.column(c);
    bool nonzero = false;
    for (const auto& x : col) nonzero = nonzero || !x.is_zero();
    if (nonzero) {
      v = std::move(col);
      break;
    }
  }
  std::vector<Vector> cols;
  for (std::size_t j = 1; j <= n; ++j) cols.push_back(at(j, 1) * v);
  Matrix r_inv = Matrix::FromColumns(cols, fd);
  if (det(r_inv).is_zero()) throw Error(ErrorCode::kSingularRecovery, "assembled conjugator is singular");
  return normalize_projective(inverse(r_inv));
}

bool is_idempotent(const Matrix& a) { return a * a == a; }

bool is_unipotent(const Matrix& a) {
  Matrix nil = a - Matrix::Identity(a.n(), a.field());
  return mat_pow(nil, static_cast<unsigned>(a.n())).is_zero();
}

IdempotentSplit split_idempotent_pair(const Matrix& p0, const Matrix& p1) {
  CheckCompatible(p0, p1, "split");
  if (!is_idempotent(p0) || !is_idempotent(p1) || !(p0 * p1 == p0) || !(p1 * p0 == p0)) {
    throw Error(ErrorCode::kNotCommutingIdempotents,
                "expected idempotents with P0 P1 = P1 P0 = P0");
  }
  std::vector<Vector> cols = image_basis(p1 - p0);
  const std::size_t l = cols.size();
  for (auto& v : kernel_basis(p1)) cols.push_back(std::move(v));
  std::vector<Vector> img0 = image_basis(p0);
  const std::size_t s = img0.size();
  for (auto& v : img0) cols.push_back(std::move(v));
  Matrix sm = Matrix::FromColumns(cols, p0.field());
  return {std::move(sm), s, l};
}

}  // namespace mulmap
