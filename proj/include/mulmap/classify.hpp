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

// Black-box classification of multiplicative maps.
//
// The classifier only ever calls MapOracle::evaluate. It first splits off the
// constant part (Phi(0) and Phi(I) are commuting idempotents), then decides
// between the three classes:
//
//   * trivial      - SL(n) maps to the identity; Phi factors through det.
//                    Forced whenever the working block is smaller than n.
//   * degenerate   - Phi vanishes on singular matrices. Recovered by
//                    normalizing the images of D_i(-1), S_{i,i+1}, P_12(x)
//                    and D_1(x) in turn.
//   * nondegenerate - recovered from the images of the matrix units E_ij, or,
//                    when those vanish, through the rank n-1 idempotents
//                    and the degenerate pipeline.
//
// Every result is re-checked against the oracle on fresh random matrices.

#ifndef MULMAP_CLASSIFY_HPP_
#define MULMAP_CLASSIFY_HPP_

#include <cstdint>
#include <functional>
#include <vector>

#include "mulmap/mapexpr.hpp"

namespace mulmap {

struct MapOracle {
  std::size_t n;
  std::size_t k;
  FieldDescriptor field;
  std::function<Matrix(const Matrix&)> evaluate;
};

MapOracle oracle_from_expr(const MapExpr& e);

struct ProbeRecord {
  Matrix input;
  Matrix output;
};

struct ClassifyOptions {
  std::uint64_t seed = 0;
  std::size_t invertible_samples = 50;
  std::size_t singular_samples = 10;
  // Character search range |power| <= max_power.
  long max_power = 6;
};

struct ClassifyReport {
  // S with S^{-1} Phi(A) S = blockdiag(Phi_bar(A), 0, I_s).
  Matrix pre_conjugator;
  std::size_t s = 0;
  std::size_t l = 0;
  CanonicalForm form;
  RingHom::Table hom_table;
  RingHom::Table lambda_table;
  std::vector<ProbeRecord> probe_log;
  // Fresh samples the final check could evaluate (sampled forms skip
  // matrices whose determinant is off-table).
  std::size_t verified_samples = 0;
  // Set when a hom or character fell outside the registered family.
  bool flagged = false;
};

// Oracle calls allowed per classification.
std::size_t oracle_budget(std::size_t n);

// Probe pools.
std::vector<FieldElem> phi_probe_pool(const FieldDescriptor& fd);
std::vector<FieldElem> lambda_probe_pool(const FieldDescriptor& fd);

// All characters with |power| <= max_power matching every (x, y) pair.
std::optional<ScalarCharacter> fit_character(const FieldDescriptor& fd,
                                             std::span<const std::pair<FieldElem, FieldElem>> table,
                                             long max_power);

struct IdempotentNormalization {
  Matrix s;
  std::size_t rank0;
  std::size_t l;
};

// Throws kNotMultiplicative if Phi(0), Phi(I) fail the idempotent and
// absorption relations.
IdempotentNormalization normalize_idempotents(const MapOracle& o);

// True iff the working block sends the probe transvections to I. Throws
// kNotMultiplicative when the block is smaller than n and a probe image is
// not the identity.
bool is_trivial(const MapOracle& o);

CanonicalForm classify_trivial(const MapOracle& o, const ClassifyOptions& opts = {});
CanonicalForm classify_gl(const MapOracle& o, const ClassifyOptions& opts = {});
CanonicalForm recover_nondegenerate(const MapOracle& o, const ClassifyOptions& opts = {});

// Full pipeline with final verification. Throws kUnsupportedDimension for
// n < 2 or k > n, kNotMultiplicative / kRankLadderViolation /
// kNonDiagonalizableTrivial for inconsistent oracles and kVerificationFailed
// (detail = counterexample) when the recovered form disagrees with the oracle.
ClassifyReport classify(const MapOracle& o, const ClassifyOptions& opts = {});

// Phi(A) rebuilt from a report.
Matrix eval_report(const ClassifyReport& report, const Matrix& a);

}  // namespace mulmap

#endif  // MULMAP_CLASSIFY_HPP_
