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

// Dense square matrices over an exact field.

#ifndef MULMAP_MATRIX_HPP_
#define MULMAP_MATRIX_HPP_

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "mulmap/field.hpp"

namespace mulmap {

using Vector = std::vector<FieldElem>;

class Matrix {
 public:
  // n x n zero matrix.
  Matrix(std::size_t n, FieldDescriptor fd);
  // Row-major entries; throws kDimensionMismatch unless entries.size() == n*n.
  Matrix(std::size_t n, FieldDescriptor fd, std::vector<FieldElem> entries);

  static Matrix Identity(std::size_t n, FieldDescriptor fd);
  static Matrix Zero(std::size_t n, FieldDescriptor fd) { return Matrix(n, fd); }
  static Matrix Scalar(std::size_t n, const FieldElem& c);
  // Columns become the matrix columns; all must have length cols.size().
  static Matrix FromColumns(std::span<const Vector> cols, FieldDescriptor fd);
  static Matrix Diagonal(std::span<const FieldElem> diag, FieldDescriptor fd);

  std::size_t n() const noexcept { return n_; }
  const FieldDescriptor& field() const noexcept { return fd_; }

  // 0-based access.
  const FieldElem& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  FieldElem& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const std::vector<FieldElem>& entries() const noexcept { return data_; }

  Vector column(std::size_t j) const;

  bool operator==(const Matrix& rhs) const;

  friend Matrix operator*(const Matrix& lhs, const Matrix& rhs);
  friend Matrix operator+(const Matrix& lhs, const Matrix& rhs);
  friend Matrix operator-(const Matrix& lhs, const Matrix& rhs);
  Vector operator*(const Vector& v) const;

  bool is_zero() const;
  bool is_identity() const;
  // c * I for some c (zero included).
  bool is_scalar() const;
  bool is_diagonal() const;

  // Square block of size `size` starting at (offset, offset).
  Matrix principal_block(std::size_t offset, std::size_t size) const;
  // Deletes row i and column j.
  Matrix minor_matrix(std::size_t i, std::size_t j) const;

 private:
  std::size_t n_;
  FieldDescriptor fd_;
  std::vector<FieldElem> data_;
};

Matrix mat_mul(const Matrix& a, const Matrix& b);
bool mat_eq(const Matrix& a, const Matrix& b);
Matrix identity(std::size_t n, FieldDescriptor fd);
Matrix zero(std::size_t n, FieldDescriptor fd);
Matrix scalar_mul(const FieldElem& c, const Matrix& a);
Matrix transpose(const Matrix& a);
Matrix mat_pow(const Matrix& a, unsigned exponent);
// Entrywise application of a ring homomorphism.
Matrix apply_hom(const RingHom& h, const Matrix& a);
Matrix block_diag(std::span<const Matrix> blocks, FieldDescriptor fd);

FieldElem det(const Matrix& a);
// Throws kSingularMatrix.
Matrix inverse(const Matrix& a);
std::size_t rank(const Matrix& a);
std::vector<Vector> kernel_basis(const Matrix& a);
// Pivot columns of a (a subset of its columns).
std::vector<Vector> image_basis(const Matrix& a);

// C(A)_{ij} = (-1)^{i+j} det(A with row i and column j deleted). This is the
// multiplicative convention: C(AB) = C(A) C(B) on all of M_n. n >= 2.
Matrix cofactor(const Matrix& a);
// transpose(cofactor(a)); anti-multiplicative.
Matrix adjugate(const Matrix& a);

// ---------------------------------------------------------------------------
// Elementary generators. Indices are 1-based.

enum class GenKind { kDiagUnit, kSwap, kTransvection };

struct ElementaryGen {
  GenKind kind;
  std::size_t i;
  std::size_t j;  // unused for kDiagUnit
  FieldElem k;    // diagonal value (D) or off-diagonal value (P); unused for S

  static ElementaryGen D(std::size_t i, FieldElem k) { return {GenKind::kDiagUnit, i, 0, std::move(k)}; }
  static ElementaryGen S(std::size_t i, std::size_t j, FieldDescriptor fd) {
    return {GenKind::kSwap, i, j, FieldElem(fd)};
  }
  static ElementaryGen P(std::size_t i, std::size_t j, FieldElem k) {
    return {GenKind::kTransvection, i, j, std::move(k)};
  }
};

// D_i(k), S_ij, or P_ij(k) in dimension n.
Matrix elementary(const ElementaryGen& g, std::size_t n);
// Convenience forms of the three generator types.
Matrix diag_unit(std::size_t n, std::size_t i, const FieldElem& k);
Matrix swap_matrix(std::size_t n, std::size_t i, std::size_t j, FieldDescriptor fd);
Matrix transvection(std::size_t n, std::size_t i, std::size_t j, const FieldElem& k);
// Matrix unit E_ij (1-based).
Matrix unit_matrix(std::size_t n, std::size_t i, std::size_t j, FieldDescriptor fd);
// diag(I_r, 0).
Matrix rank_idempotent(std::size_t n, std::size_t r, FieldDescriptor fd);
// F_j = I - E_jj.
Matrix coidempotent(std::size_t n, std::size_t j, FieldDescriptor fd);

// ---------------------------------------------------------------------------
// Structure recovery.

// Scales a nonzero matrix so its first nonzero entry in row-major order is 1.
Matrix normalize_projective(const Matrix& a);
// True iff a = c * b for some nonzero scalar c.
bool projectively_equal(const Matrix& a, const Matrix& b);

// Given a family F(i, j), 1-based, satisfying F_ij F_kl = delta_jk F_il with
// F_11 != 0, returns the normalized R with R F_ij R^{-1} = E_ij.
// Throws kNotMatrixUnits or kSingularRecovery.
Matrix conjugator_from_units(
    std::size_t n, const std::function<Matrix(std::size_t, std::size_t)>& family);

bool is_idempotent(const Matrix& a);
// (A - I)^n = 0.
bool is_unipotent(const Matrix& a);

struct IdempotentSplit {
  Matrix s;
  std::size_t rank0;  // rank(P0)
  std::size_t l;      // rank(P1) - rank(P0)
};

// For idempotents with P0 P1 = P1 P0 = P0, returns S with
//   S^{-1} P0 S = diag(0_l, 0_{k-l-s}, I_s),  S^{-1} P1 S = diag(I_l, 0_{k-l-s}, I_s).
// Throws kNotCommutingIdempotents.
IdempotentSplit split_idempotent_pair(const Matrix& p0, const Matrix& p1);

}  // namespace mulmap

#endif  // MULMAP_MATRIX_HPP_
