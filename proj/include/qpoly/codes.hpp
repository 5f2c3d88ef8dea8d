// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QPOLY_CODES_HPP_
#define QPOLY_CODES_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "qpoly/gfq.hpp"
#include "qpoly/lattice.hpp"
#include "qpoly/qpm.hpp"
#include "qpoly/rational.hpp"

namespace qpoly {

inline constexpr std::uint64_t kDefaultScanCap = std::uint64_t{1} << 20;

// F_q-linear space of n x m matrices, given by an independent basis.
class MatrixCode {
 public:
  // Errors: InvalidCode (dependent generators or wrong shapes), TooLarge
  // (n or m above max_dim).
  MatrixCode(FieldPtr field, int n, int m, std::vector<FqMatrix> basis,
             int max_dim = kDefaultMaxMatrixDim);

  const Field& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }
  int q() const { return field_->q(); }
  int n() const { return n_; }
  int m() const { return m_; }
  int k() const { return static_cast<int>(basis_.size()); }
  const std::vector<FqMatrix>& basis() const { return basis_; }

  // k x nm matrix of row-major flattened generators.
  FqMatrix flattened() const;

 private:
  FieldPtr field_;
  int n_ = 0;
  int m_ = 0;
  std::vector<FqMatrix> basis_;
};

// Basis of {M : Tr(M N^T) = 0 for all N in C}.
MatrixCode dual_code(const MatrixCode& c);

// Minimum rank over nonzero codewords. Errors: ZeroCode, TooLarge.
int min_rank_distance(const MatrixCode& c,
                      std::uint64_t scan_cap = kDefaultScanCap);

struct CodeMetrics {
  int k = 0;
  int d = 0;
  std::optional<int> d_perp;  // empty when the dual is zero
  bool is_mrd = false;
};

// Errors: ZeroCode, TooLarge.
CodeMetrics code_metrics(const MatrixCode& c,
                         std::uint64_t scan_cap = kDefaultScanCap);

// max(n, m) * (min(n, m) - d + 1)
long singleton_bound(int n, int m, int d);

// dim {M in C : colsp(M) <= U^perp} for U a subspace of F_q^n.
int shortening_dim(const MatrixCode& c, const SubspaceLattice& lattice, int u);

// rho(U) = (k - dim C(U)) / m. Errors: LatticeMismatch.
RankPoint induced_polymatroid(const MatrixCode& c, const LatticePtr& lattice);

// m >= n: uniform of rank n - d + 1; m = n - 1: dim U up to n - d, then
// n (n - d) / (n - 1). Errors: UnsupportedShape, OutOfRange.
RankPoint mrd_closed_form(const LatticePtr& lattice, int m, int d);

struct MrdComboReport {
  RankPoint point;
  Integer mu;
  bool all_independent = false;
};

// (1 - lambda) rho_{d1} + lambda rho_{d2} for m = n - 1, checked against the
// brute-force independence oracle. Errors: HypothesisFail.
MrdComboReport mrd_combo_independence(const LatticePtr& lattice, int d1,
                                      int d2, const Rational& lambda);

// Subspace of F_{q^m}^n given by generator rows over the extension field.
struct VectorCode {
  int q = 0;
  int m = 0;
  int n = 0;
  FqMatrix generators;  // k x n over F_{q^m}
};

// rho(W) = k - dim C(W), an integer-valued rank function. Errors:
// UnsupportedOrder (q not prime or q^m unsupported), InvalidCode.
RankPoint vector_code_qmatroid(const VectorCode& v, const LatticePtr& lattice);

// Matrix code over F_q spanned by the F_q-multiples of the F_{q^m}-span.
// Column layout: codeword coordinate j becomes column j of an m x n matrix.
MatrixCode expand_columns(const VectorCode& v);
// Row layout: coordinate i becomes row i of an n x m matrix.
MatrixCode expand_rows(const VectorCode& v);

}  // namespace qpoly

#endif  // QPOLY_CODES_HPP_
