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

#include "mulmap/classify.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "mulmap/error.hpp"
#include "mulmap/json_io.hpp"

namespace mulmap {

namespace {

[[noreturn]] void NotMultiplicative(const std::string& what) {
  throw Error(ErrorCode::kNotMultiplicative, "oracle is not multiplicative: " + what);
}

std::string MatrixKey(const Matrix& a) {
  std::string key;
  for (const auto& x : a.entries()) {
    key += format_scalar(x);
    key += ',';
  }
  return key;
}

// Basis of the common kernel of a family of square matrices of size m.
std::vector<Vector> JointKernel(std::span<const Matrix> ms, std::size_t m, const FieldDescriptor& fd) {
  std::vector<Vector> basis;
  for (std::size_t i = 0; i < m; ++i) {
    Vector e(m, FieldElem(fd));
    e[i] = FieldElem::FromInt(fd, 1);
    basis.push_back(std::move(e));
  }
  for (const Matrix& a : ms) {
    if (basis.empty()) break;
    // Solve sum_j c_j (a v_j) = 0 for c; the columns a v_j form an m x |basis|
    // system, padded to a square matrix of size max(m, |basis|).
    const std::size_t cols = basis.size();
    const std::size_t size = std::max(m, cols);
    Matrix sys(size, fd);
    for (std::size_t j = 0; j < cols; ++j) {
      Vector w = a * basis[j];
      for (std::size_t i = 0; i < m; ++i) sys(i, j) = w[i];
    }
    std::vector<Vector> next;
    for (const Vector& c : kernel_basis(sys)) {
      bool in_range = true;
      for (std::size_t j = cols; j < size; ++j) in_range = in_range && c[j].is_zero();
      if (!in_range) continue;
      Vector v(m, FieldElem(fd));
      for (std::size_t j = 0; j < cols; ++j) {
        if (c[j].is_zero()) continue;
        for (std::size_t i = 0; i < m; ++i) v[i] += c[j] * basis[j][i];
      }
      next.push_back(std::move(v));
    }
    basis = std::move(next);
  }
  return basis;
}

using Poly = std::vector<FieldElem>;  // coefficients, constant term first

void Trim(Poly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

// Remainder of a modulo b (b nonzero, trimmed).
Poly Remainder(Poly a, const Poly& b) {
  Trim(a);
  while (a.size() >= b.size()) {
    const FieldElem c = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    a.pop_back();
    Trim(a);
  }
  return a;
}

// Monic minimal polynomial through the first linear dependence among
// I, B, B^2, ....
Poly MinimalPolynomial(const Matrix& b) {
  const std::size_t m = b.n();
  const FieldDescriptor fd = b.field();
  std::vector<Matrix> powers{Matrix::Identity(m, fd)};
  for (std::size_t deg = 1; deg <= m; ++deg) {
    powers.push_back(powers.back() * b);
    const std::size_t rows = m * m;
    const std::size_t size = std::max(rows, powers.size());
    Matrix sys(size, fd);
    for (std::size_t j = 0; j < powers.size(); ++j)
      for (std::size_t i = 0; i < rows; ++i) sys(i, j) = powers[j].entries()[i];
    for (const Vector& c : kernel_basis(sys)) {
      bool in_range = true;
      for (std::size_t j = powers.size(); j < size; ++j) in_range = in_range && c[j].is_zero();
      if (!in_range || c[deg].is_zero()) continue;
      Poly p(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(deg) + 1);
      const FieldElem lead = p.back();
      for (FieldElem& x : p) x /= lead;
      return p;
    }
  }
  throw Error(ErrorCode::kInvalidArgument, "no minimal polynomial found");
}

// Over a perfect field, a matrix is semisimple iff gcd(p, p') = 1.
bool SquarefreeMinimalPolynomial(const Matrix& b) {
  Poly p = MinimalPolynomial(b);
  Poly dp;
  for (std::size_t i = 1; i < p.size(); ++i) dp.push_back(p[i] * FieldElem::FromInt(b.field(), static_cast<long>(i)));
  Trim(dp);
  Poly a = p, r = dp;
  while (!r.empty()) {
    Poly next = Remainder(a, r);
    a = std::move(r);
    r = std::move(next);
  }
  return a.size() == 1;
}

// Characters in the search range, in a fixed order (small powers first).
std::vector<ScalarCharacter> CandidateCharacters(const FieldDescriptor& fd, long max_power) {
  std::vector<long> powers{0};
  for (long p = 1; p <= max_power; ++p) {
    powers.push_back(p);
    powers.push_back(-p);
  }
  std::vector<ScalarCharacter> out;
  for (long p : powers) {
    if (!fd.is_quadratic()) {
      out.push_back(ScalarCharacter::Power(p));
      continue;
    }
    for (long q : powers) {
      out.push_back(ScalarCharacter::Power(p) * ScalarCharacter::Power(q, HomKind::kQuadConjugation));
    }
  }
  return out;
}

class Prober {
 public:
  explicit Prober(const MapOracle& o) : o_(o), budget_(oracle_budget(o.n)) {}

  Matrix operator()(const Matrix& a) {
    std::string key = MatrixKey(a);
    if (auto it = memo_.find(key); it != memo_.end()) return log_[it->second].output;
    if (calls_ >= budget_) {
      throw Error(ErrorCode::kBudgetExceeded,
                  "oracle call budget of " + std::to_string(budget_) + " exhausted");
    }
    ++calls_;
    Matrix out = o_.evaluate(a);
    if (out.n() != o_.k) {
      throw Error(ErrorCode::kDimensionMismatch, "oracle returned a " + std::to_string(out.n()) +
                                                     "x" + std::to_string(out.n()) + " matrix, expected k = " +
                                                     std::to_string(o_.k));
    }
    if (!(out.field() == o_.field)) throw Error(ErrorCode::kFieldMismatch, "oracle output from another field");
    log_.push_back({a, std::move(out)});
    memo_.emplace(std::move(key), log_.size() - 1);
    return log_.back().output;
  }

  // Unlogged evaluation for the verification stage.
  Matrix Fresh(const Matrix& a) {
    if (calls_ >= budget_) {
      throw Error(ErrorCode::kBudgetExceeded,
                  "oracle call budget of " + std::to_string(budget_) + " exhausted");
    }
    ++calls_;
    return o_.evaluate(a);
  }

  const std::vector<ProbeRecord>& log() const { return log_; }

 private:
  const MapOracle& o_;
  std::size_t budget_;
  std::size_t calls_ = 0;
  std::vector<ProbeRecord> log_;
  std::map<std::string, std::size_t> memo_;
};

class Classifier {
 public:
  Classifier(const MapOracle& o, const ClassifyOptions& opts)
      : o_(o),
        opts_(opts),
        fd_(o.field),
        n_(o.n),
        probe_(o),
        s_(Matrix::Identity(o.k, o.field)),
        s_inv_(Matrix::Identity(o.k, o.field)) {}

  // --- idempotent normalization -------------------------------------------

  void Normalize() {
    if (normalized_) return;
    const Matrix p0 = probe_(Matrix::Zero(n_, fd_));
    const Matrix p1 = probe_(Matrix::Identity(n_, fd_));
    IdempotentSplit split = [&] {
      try {
        return split_idempotent_pair(p0, p1);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kNotCommutingIdempotents) throw;
        NotMultiplicative("Phi(0), Phi(I) must be idempotents with Phi(0)Phi(I) = Phi(I)Phi(0) = Phi(0)");
      }
    }();
    s_ = split.s;
    s_inv_ = inverse(s_);
    rank0_ = split.rank0;
    l_ = split.l;
    normalized_ = true;
  }

  IdempotentNormalization Normalization() {
    Normalize();
    return {s_, rank0_, l_};
  }

  // Phi restricted to the l x l working block.
  Matrix Work(const Matrix& a) {
    Normalize();
    return (s_inv_ * probe_(a) * s_).principal_block(0, l_);
  }

  // --- trivial maps -------------------------------------------------------

  bool IsTrivial() {
    Normalize();
    if (l_ == 0) return true;
    const bool forced = l_ < n_;
    auto fail = [&](const std::string& what) {
      if (forced) {
        NotMultiplicative("a map into M_" + std::to_string(l_) + " with n = " + std::to_string(n_) +
                          " must send SL(n) to I, but " + what);
      }
      return false;
    };
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 1; i < n_; ++i) {
      pairs.emplace_back(i, i + 1);
      pairs.emplace_back(i + 1, i);
    }
    if (n_ >= 3) pairs.emplace_back(1, 3);
    for (const auto& [i, j] : pairs) {
      for (const FieldElem& x : phi_probe_pool(fd_)) {
        if (!Work(transvection(n_, i, j, x)).is_identity()) {
          return fail("Phi(P_" + std::to_string(i) + std::to_string(j) + "(" + format_scalar(x) + ")) != I");
        }
      }
    }
    // S_12 = P_12(1) P_21(-1) P_12(1) D_1(-1), so Phi(S_12) = Phi(D_1(-1)).
    if (!(Work(swap_matrix(n_, 1, 2, fd_)) == Work(diag_unit(n_, 1, FieldElem::FromInt(fd_, -1))))) {
      return fail("Phi(S_12) != Phi(D_1(-1))");
    }
    return true;
  }

  CanonicalForm ClassifyTrivial() {
    Normalize();
    CanonicalForm form;
    form.cls = MapClass::kTrivial;
    form.n = n_;
    form.k = o_.k;
    form.field = fd_;
    form.zero_pad = o_.k - l_ - rank0_;
    form.one_pad = rank0_;
    if (l_ == 0) return form;

    std::vector<std::pair<FieldElem, Matrix>> images;
    for (const FieldElem& x : lambda_probe_pool(fd_)) {
      Matrix b = Work(diag_unit(n_, 1, x));
      if (det(b).is_zero()) NotMultiplicative("Phi_bar(" + format_scalar(x) + ") is singular");
      images.emplace_back(x, std::move(b));
    }
    auto raw = [&] {
      nlohmann::json data = nlohmann::json::array();
      for (const auto& [x, b] : images) data.push_back({{"x", format_scalar(x)}, {"image", entries_to_json(b)}});
      return data.dump();
    };
    for (std::size_t i = 0; i < images.size(); ++i)
      for (std::size_t j = i + 1; j < images.size(); ++j) {
        if (!(images[i].second * images[j].second == images[j].second * images[i].second)) {
          throw Error(ErrorCode::kNonDiagonalizableTrivial,
                      "images of D_1(x) on the working block do not commute", raw());
        }
      }
    for (const auto& [x, b] : images) {
      if (!SquarefreeMinimalPolynomial(b)) {
        throw Error(ErrorCode::kNonDiagonalizableTrivial,
                    "image of D_1(" + format_scalar(x) + ") on the working block is not diagonalizable", raw());
      }
    }

    std::vector<Vector> basis;
    std::vector<ScalarCharacter> chars;
    for (const ScalarCharacter& c : CandidateCharacters(fd_, opts_.max_power)) {
      std::vector<Matrix> shifted;
      for (const auto& [x, b] : images) shifted.push_back(b - Matrix::Scalar(l_, c(x)));
      for (Vector& v : JointKernel(shifted, l_, fd_)) {
        basis.push_back(std::move(v));
        chars.push_back(c);
      }
      if (basis.size() >= l_) break;
    }
    if (basis.size() != l_) {
      form.trivial_table = std::move(images);
      flagged_ = true;
      return form;
    }
    // Order the eigenbasis by character so the form is canonical.
    std::vector<std::size_t> order(l_);
    for (std::size_t i = 0; i < l_; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return chars[a] < chars[b]; });
    std::vector<Vector> cols;
    for (std::size_t i : order) {
      cols.push_back(basis[i]);
      form.chars.push_back(chars[i]);
    }
    Matrix y = Matrix::FromColumns(cols, fd_);
    std::vector<Matrix> blocks{y, Matrix::Identity(o_.k - l_, fd_)};
    s_ = s_ * block_diag(blocks, fd_);
    s_inv_ = inverse(s_);
    return form;
  }

  // --- degenerate pipeline ------------------------------------------------

  CanonicalForm ClassifyGl() {
    Normalize();
    if (l_ != n_ || o_.k != n_) {
      throw Error(ErrorCode::kUnsupportedDimension, "the GL(n) pipeline needs k = n with Phi(0) = 0, Phi(I) = I");
    }
    const FieldElem one = FieldElem::FromInt(fd_, 1);
    const FieldElem minus_one = FieldElem::FromInt(fd_, -1);

    // Step 1: bring Phi(D_i(-1)) to D_i(-1).
    Matrix m1 = Work(diag_unit(n_, 1, minus_one));
    if (!(m1 * m1).is_identity()) NotMultiplicative("Phi(D_1(-1))^2 != I");
    const std::size_t m = kernel_basis(m1 + Matrix::Identity(n_, fd_)).size();
    if (m == n_ - 1 && n_ >= 3) {
      twist_ = true;  // multiply Phi by det(A)
    } else if (m != 1) {
      NotMultiplicative("the -1 eigenspace of Phi(D_1(-1)) has dimension " + std::to_string(m) +
                        ", expected 1 or n-1");
    }
    std::vector<Vector> eig;
    std::vector<Matrix> involutions;
    for (std::size_t i = 1; i <= n_; ++i) {
      Matrix mi = Twisted(diag_unit(n_, i, minus_one));
      if (!(mi * mi).is_identity()) NotMultiplicative("Phi(D_" + std::to_string(i) + "(-1)) is not an involution");
      auto ker = kernel_basis(mi + Matrix::Identity(n_, fd_));
      if (ker.size() != 1) NotMultiplicative("Phi(D_i(-1)) eigenspaces differ across i");
      eig.push_back(ker.front());
      involutions.push_back(std::move(mi));
    }
    Matrix p = Matrix::FromColumns(eig, fd_);
    if (det(p).is_zero()) NotMultiplicative("the images of D_i(-1) do not diagonalize simultaneously");
    q_ = inverse(p);
    q_inv_ = p;
    for (std::size_t i = 1; i <= n_; ++i) {
      if (!(q_ * involutions[i - 1] * q_inv_ == diag_unit(n_, i, minus_one))) {
        NotMultiplicative("the images of D_i(-1) do not commute");
      }
    }

    // Step 2: Phi(S_{i,i+1}) = diag(.., [[0, b_i], [1/b_i, 0]], ..); conjugate by
    // T = diag(1, b_1, b_1 b_2, ...).
    std::vector<FieldElem> t_diag{one};
    for (std::size_t i = 0; i + 1 < n_; ++i) {
      Matrix w = Normalized(swap_matrix(n_, i + 1, i + 2, fd_));
      for (std::size_t r = 0; r < n_; ++r)
        for (std::size_t c = 0; c < n_; ++c) {
          bool in_block = (r == i || r == i + 1) && (c == i || c == i + 1);
          if (in_block) continue;
          if (r == c ? !w(r, c).is_one() : !w(r, c).is_zero()) {
            NotMultiplicative("Phi(S_" + std::to_string(i + 1) + std::to_string(i + 2) +
                              ") is not block diagonal with unit entries");
          }
        }
      const FieldElem& b = w(i, i + 1);
      if (!w(i, i).is_zero() || !w(i + 1, i + 1).is_zero() || !(b * w(i + 1, i)).is_one()) {
        NotMultiplicative("Phi(S_{i,i+1}) block is not [[0, b], [1/b, 0]]");
      }
      t_diag.push_back(t_diag.back() * b);
    }
    Matrix t = Matrix::Diagonal(t_diag, fd_);
    q_ = t * q_;
    q_inv_ = q_inv_ * inverse(t);
    for (std::size_t i = 1; i < n_; ++i) {
      if (!(Normalized(swap_matrix(n_, i, i + 1, fd_)) == swap_matrix(n_, i, i + 1, fd_))) {
        NotMultiplicative("Phi(S_{i,i+1}) cannot be normalized to S_{i,i+1}");
      }
    }

    // Step 3: Phi(P_12(x)) is upper (plain) or lower (cofactor) unipotent;
    // its off-diagonal entry gives phi(x).
    Matrix u = Normalized(transvection(n_, 1, 2, one));
    const bool upper = !u(0, 1).is_zero() && u(1, 0).is_zero();
    const bool lower = u(0, 1).is_zero() && !u(1, 0).is_zero();
    if (!upper && !lower) NotMultiplicative("Phi(P_12(1)) is neither upper nor lower unipotent");
    eps_ = upper ? Eps::kPlain : Eps::kCofactor;

    hom_table_.clear();
    for (const FieldElem& x : phi_probe_pool(fd_)) {
      Matrix w = Normalized(transvection(n_, 1, 2, x));
      FieldElem y = eps_ == Eps::kPlain ? w(0, 1) : -w(1, 0);
      if (!(w == Shape(transvection(n_, 1, 2, y)))) {
        NotMultiplicative("Phi(P_12(" + format_scalar(x) + ")) is not a transvection of the same type");
      }
      hom_table_.emplace_back(x, y);
    }
    if (!ReadPhi(hom_table_)(one).is_one()) NotMultiplicative("phi(1) != 1");
    // phi(kl) = phi(k) phi(l) through P_13(kl) = [P_12(k)^{-1}, P_23(l)^{-1}].
    const auto pool = phi_probe_pool(fd_);
    for (std::size_t a = 0; a < pool.size(); ++a) {
      const std::size_t b = (a + 1) % pool.size();
      FieldElem kl = pool[a] * pool[b];
      FieldElem expected = hom_table_[a].second * hom_table_[b].second;
      Matrix probe = n_ >= 3 ? transvection(n_, 1, 3, kl) : transvection(n_, 1, 2, kl);
      Matrix want = n_ >= 3 ? transvection(n_, 1, 3, expected) : transvection(n_, 1, 2, expected);
      if (!(Normalized(probe) == Shape(want))) {
        NotMultiplicative("phi(kl) != phi(k) phi(l) for k = " + format_scalar(pool[a]) +
                          ", l = " + format_scalar(pool[b]));
      }
    }
    RingHom phi = ResolvePhi();

    // Step 4: Phi(D_1(x)) = s diag(t, 1, ..., 1); confirm t through the SL
    // element diag(x, 1/x, 1, ...) and read lambda(x) off s.
    lambda_table_.clear();
    for (const FieldElem& x : lambda_probe_pool(fd_)) {
      Matrix dd = diag_unit(n_, 1, x) * diag_unit(n_, 2, x.inv());
      Matrix wd = Normalized(dd);
      FieldElem phi_x = phi.is_registered() ? hom_apply(phi, x)
                                            : (eps_ == Eps::kPlain ? wd(0, 0) : wd(1, 1));
      if (phi_x.is_zero()) NotMultiplicative("phi(" + format_scalar(x) + ") = 0");
      Matrix want = diag_unit(n_, 1, phi_x) * diag_unit(n_, 2, phi_x.inv());
      if (!(wd == Shape(want))) NotMultiplicative("Phi(D_1(k) D_2(1/k)) disagrees with phi");
      if (!phi.is_registered()) hom_table_.emplace_back(x, phi_x);

      Matrix w = Normalized(diag_unit(n_, 1, x));
      if (!w.is_diagonal()) NotMultiplicative("Phi(D_1(x)) is not diagonal");
      const FieldElem s = w(1, 1);
      for (std::size_t i = 2; i < n_; ++i) {
        if (!(w(i, i) == s)) NotMultiplicative("Phi(D_1(x)) is not s diag(t, 1, ..., 1)");
      }
      if (s.is_zero()) NotMultiplicative("Phi(D_1(x)) is singular");
      const FieldElem t = w(0, 0) / s;
      const FieldElem t_want = eps_ == Eps::kPlain ? phi_x : phi_x.inv();
      if (!(t == t_want)) NotMultiplicative("Phi(D_1(x)) = s diag(t, 1, ...) with t != phi(x)");
      FieldElem lam = eps_ == Eps::kPlain ? s : s / phi_x;
      if (twist_) lam /= x;
      lambda_table_.emplace_back(x, lam);
    }
    if (!phi.is_registered()) phi = RingHom::Sampled(hom_table_);

    CanonicalForm form;
    form.cls = MapClass::kDegenerate;
    form.n = n_;
    form.k = n_;
    form.field = fd_;
    form.phi = phi;
    form.r = q_;
    form.eps = eps_;
    if (auto fit = fit_character(fd_, lambda_table_, opts_.max_power)) {
      form.lambda = *fit;
    } else {
      form.lambda_table = lambda_table_;
      flagged_ = true;
    }
    return canonicalize(std::move(form));
  }

  // --- non-degenerate maps ------------------------------------------------

  CanonicalForm RecoverNondegenerate() {
    Normalize();
    if (l_ != n_ || o_.k != n_) {
      throw Error(ErrorCode::kUnsupportedDimension, "non-degenerate recovery needs k = n");
    }
    std::size_t nonzero_units = 0;
    for (std::size_t i = 1; i <= n_; ++i)
      for (std::size_t j = 1; j <= n_; ++j) {
        if (!Work(unit_matrix(n_, i, j, fd_)).is_zero()) ++nonzero_units;
      }
    if (nonzero_units == n_ * n_) return FromMatrixUnits();
    if (nonzero_units != 0) {
      throw Error(ErrorCode::kRankLadderViolation,
                  "Phi vanishes on some rank-1 matrix units but not on others");
    }
    return FromRankLadder();
  }

  const RingHom::Table& hom_table() const { return hom_table_; }
  const RingHom::Table& lambda_table() const { return lambda_table_; }
  const Matrix& pre_conjugator() const { return s_; }
  std::size_t rank0() const { return rank0_; }
  std::size_t l() const { return l_; }
  bool flagged() const { return flagged_; }
  Prober& prober() { return probe_; }
  const ClassifyOptions& options() const { return opts_; }

 private:
  CanonicalForm FromMatrixUnits() {
    Matrix r = [&] {
      try {
        return conjugator_from_units(n_, [&](std::size_t i, std::size_t j) {
          return Work(unit_matrix(n_, i, j, fd_));
        });
      } catch (const Error& e) {
        if (e.code() == ErrorCode::kNotMatrixUnits || e.code() == ErrorCode::kSingularRecovery) {
          NotMultiplicative(std::string("unit relations F_ij F_kl = delta_jk F_il violated: ") + e.what());
        }
        throw;
      }
    }();
    const Matrix r_inv = inverse(r);
    hom_table_.clear();
    for (const FieldElem& b : phi_probe_pool(fd_)) {
      Matrix w = r * Work(scalar_mul(b, unit_matrix(n_, 1, 2, fd_))) * r_inv;
      FieldElem y = w(0, 1);
      if (!(w == scalar_mul(y, unit_matrix(n_, 1, 2, fd_)))) {
        NotMultiplicative("Phi(b E_12) is not a multiple of E_12");
      }
      hom_table_.emplace_back(b, y);
    }
    CanonicalForm form;
    form.cls = MapClass::kNonDegenerate;
    form.n = n_;
    form.k = n_;
    form.field = fd_;
    form.phi = ResolvePhi();
    form.r = r;
    form.eps = Eps::kPlain;
    return canonicalize(std::move(form));
  }

  CanonicalForm FromRankLadder() {
    for (std::size_t r = 1; r + 1 < n_; ++r) {
      if (!Work(rank_idempotent(n_, r, fd_)).is_zero()) {
        throw Error(ErrorCode::kRankLadderViolation,
                    "Phi vanishes on rank 1 but not on the rank " + std::to_string(r) + " idempotent");
      }
    }
    std::vector<Matrix> images;
    for (std::size_t j = 1; j <= n_; ++j) {
      Matrix img = Work(coidempotent(n_, j, fd_));
      if (rank(img) != 1) {
        throw Error(ErrorCode::kRankLadderViolation,
                    "Phi(F_" + std::to_string(j) + ") has rank " + std::to_string(rank(img)) + ", expected 1");
      }
      images.push_back(std::move(img));
    }
    CanonicalForm form = ClassifyGl();
    if (form.eps != Eps::kCofactor || !form.lambda.empty() || form.lambda_table) {
      NotMultiplicative("a non-degenerate map vanishing on rank 1 must be of cofactor type with trivial lambda");
    }
    form.cls = MapClass::kNonDegenerate;
    for (std::size_t j = 1; j <= n_; ++j) {
      try {
        if (!(eval_form(form, coidempotent(n_, j, fd_)) == images[j - 1])) {
          NotMultiplicative("cofactor form disagrees with Phi(F_" + std::to_string(j) + ")");
        }
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kProbeMiss) throw;
      }
    }
    return form;
  }

  // W(A) = tw(det A) Q Phi(A) Q^{-1}, tw(d) = d when twisted, else 1.
  Matrix Twisted(const Matrix& a) {
    Matrix w = Work(a);
    return twist_ ? scalar_mul(det(a), w) : w;
  }
  Matrix Normalized(const Matrix& a) { return q_ * Twisted(a) * q_inv_; }

  // The image expected for an SL element g under the normalized map.
  Matrix Shape(const Matrix& g) const { return eps_ == Eps::kPlain ? g : cofactor(g); }

  std::function<FieldElem(const FieldElem&)> ReadPhi(const RingHom::Table& table) const {
    return [&table](const FieldElem& x) {
      for (const auto& [in, out] : table) {
        if (in == x) return out;
      }
      throw Error(ErrorCode::kProbeMiss, "phi not probed at " + format_scalar(x));
    };
  }

  RingHom ResolvePhi() {
    RingHom sampled = RingHom::Sampled(hom_table_);
    if (!hom_check_table(sampled)) NotMultiplicative("probed phi is not additive and multiplicative");
    if (auto h = match_registered_hom(fd_, hom_table_)) return *h;
    flagged_ = true;
    return sampled;
  }

  const MapOracle& o_;
  ClassifyOptions opts_;
  FieldDescriptor fd_;
  std::size_t n_;
  Prober probe_;

  bool normalized_ = false;
  Matrix s_;
  Matrix s_inv_;
  std::size_t rank0_ = 0;
  std::size_t l_ = 0;

  bool twist_ = false;
  Matrix q_ = Matrix::Identity(n_, fd_);
  Matrix q_inv_ = Matrix::Identity(n_, fd_);
  Eps eps_ = Eps::kPlain;
  RingHom::Table hom_table_;
  RingHom::Table lambda_table_;
  bool flagged_ = false;
};

void CheckDimensions(const MapOracle& o) {
  if (o.n < 2) throw Error(ErrorCode::kUnsupportedDimension, "classification requires n >= 2");
  if (o.k > o.n) throw Error(ErrorCode::kUnsupportedDimension, "codomain dimension k > n is not supported");
  if (o.k < 1) throw Error(ErrorCode::kUnsupportedDimension, "codomain dimension must be >= 1");
}

}  // namespace

// ---------------------------------------------------------------------------

MapOracle oracle_from_expr(const MapExpr& e) {
  e.validate();
  return MapOracle{e.n, e.k(), e.field, [e](const Matrix& a) { return eval(e, a); }};
}

std::size_t oracle_budget(std::size_t n) { return 10 * n * n + 200; }

std::vector<FieldElem> phi_probe_pool(const FieldDescriptor& fd) {
  std::vector<FieldElem> pool{
      FieldElem::FromInt(fd, 1),         FieldElem::FromInt(fd, 2), FieldElem::FromInt(fd, 3),
      FieldElem::FromFraction(fd, 1, 2), FieldElem::FromInt(fd, -1),
  };
  if (fd.is_quadratic()) {
    FieldElem s = FieldElem::Sqrt(fd);
    pool.push_back(s);
    pool.push_back(FieldElem::FromInt(fd, 1) + s);
  }
  return pool;
}

std::vector<FieldElem> lambda_probe_pool(const FieldDescriptor& fd) {
  std::vector<FieldElem> pool{
      FieldElem::FromInt(fd, 2),  FieldElem::FromInt(fd, 3),         FieldElem::FromInt(fd, 5),
      FieldElem::FromInt(fd, -1), FieldElem::FromFraction(fd, 1, 2),
  };
  if (fd.is_quadratic()) {
    // Values with b != 0 separate x^p from conj(x)^p.
    FieldElem s = FieldElem::Sqrt(fd);
    pool.push_back(s);
    pool.push_back(FieldElem::FromInt(fd, 1) + s);
    pool.push_back(FieldElem::FromInt(fd, 2) + s);
  }
  return pool;
}

std::optional<ScalarCharacter> fit_character(const FieldDescriptor& fd,
                                             std::span<const std::pair<FieldElem, FieldElem>> table,
                                             long max_power) {
  for (const ScalarCharacter& c : CandidateCharacters(fd, max_power)) {
    bool ok = true;
    for (const auto& [x, y] : table) {
      if (!(c(x) == y)) {
        ok = false;
        break;
      }
    }
    if (ok) return c;
  }
  return std::nullopt;
}

IdempotentNormalization normalize_idempotents(const MapOracle& o) {
  CheckDimensions(o);
  Classifier c(o, {});
  return c.Normalization();
}

bool is_trivial(const MapOracle& o) {
  CheckDimensions(o);
  Classifier c(o, {});
  return c.IsTrivial();
}

CanonicalForm classify_trivial(const MapOracle& o, const ClassifyOptions& opts) {
  CheckDimensions(o);
  Classifier c(o, opts);
  if (!c.IsTrivial()) throw Error(ErrorCode::kInvalidArgument, "classify_trivial on a nontrivial map");
  return c.ClassifyTrivial();
}

CanonicalForm classify_gl(const MapOracle& o, const ClassifyOptions& opts) {
  CheckDimensions(o);
  Classifier c(o, opts);
  return c.ClassifyGl();
}

CanonicalForm recover_nondegenerate(const MapOracle& o, const ClassifyOptions& opts) {
  CheckDimensions(o);
  Classifier c(o, opts);
  return c.RecoverNondegenerate();
}

Matrix eval_report(const ClassifyReport& report, const Matrix& a) {
  return report.pre_conjugator * eval_form(report.form, a) * inverse(report.pre_conjugator);
}

ClassifyReport classify(const MapOracle& o, const ClassifyOptions& opts) {
  CheckDimensions(o);
  Classifier c(o, opts);
  IdempotentNormalization norm = c.Normalization();

  CanonicalForm form;
  if (c.IsTrivial()) {
    form = c.ClassifyTrivial();
  } else {
    bool vanishes = true;
    for (std::size_t j = 1; j <= o.n && vanishes; ++j) {
      vanishes = c.Work(coidempotent(o.n, j, o.field)).is_zero();
    }
    form = vanishes ? c.ClassifyGl() : c.RecoverNondegenerate();
  }

  ClassifyReport report{c.pre_conjugator(), norm.rank0, norm.l, form, c.hom_table(), c.lambda_table(),
                        {}, 0, c.flagged()};

  // Final check: every logged probe, then fresh invertible and singular samples.
  auto check = [&](const Matrix& in, const Matrix& out) {
    Matrix got = [&]() -> Matrix {
      try {
        return eval_report(report, in);
      } catch (const Error& e) {
        if (e.code() == ErrorCode::kProbeMiss) return out;
        throw;
      }
    }();
    if (!(got == out)) {
      nlohmann::json cx{{"A", matrix_to_json(in)}, {"expected", matrix_to_json(out)}, {"got", matrix_to_json(got)}};
      throw Error(ErrorCode::kVerificationFailed,
                  "recovered " + std::string(map_class_name(form.cls)) + " form disagrees with the oracle",
                  cx.dump());
    }
  };
  for (const ProbeRecord& p : c.prober().log()) check(p.input, p.output);

  Rng rng(opts.seed ^ 0x9e3779b97f4a7c15ULL);
  const std::vector<FieldElem> pool = default_scalar_pool(o.field);
  const std::size_t total = opts.invertible_samples + opts.singular_samples;
  for (std::size_t i = 0; i < total; ++i) {
    Matrix a = i < opts.invertible_samples ? random_gl(o.n, o.n + 2, pool, rng)
                                           : random_singular(o.n, o.n + 2, pool, rng);
    Matrix out = c.prober().Fresh(a);
    try {
      Matrix got = eval_report(report, a);
      if (!(got == out)) check(a, out);
      ++report.verified_samples;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kProbeMiss) throw;
    }
  }
  report.probe_log = c.prober().log();
  return report;
}

}  // namespace mulmap
