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

#include "qpoly/codes.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "qpoly/constructions.hpp"
#include "qpoly/error.hpp"

namespace qpoly {
namespace {

constexpr int kMaxExtensionOrder = 64;

int int_pow(int b, int e) {
  int r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

// Coefficients of an extension-field element in the basis 1, t, t^2, ...
std::vector<Elem> expand_element(Elem x, int q, int m) {
  std::vector<Elem> out(m);
  int v = x;
  for (int l = 0; l < m; ++l) {
    out[l] = static_cast<Elem>(v % q);
    v /= q;
  }
  return out;
}

// Prime base field and its degree-m extension.
std::pair<FieldPtr, FieldPtr> code_fields(const VectorCode& v) {
  FieldPtr base = make_field(v.q, std::max(v.q, kDefaultMaxFieldOrder));
  if (base->e() != 1) {
    throw Error(ErrorCode::kUnsupportedOrder,
                "vector codes need a prime base field");
  }
  if (v.m < 1) throw Error(ErrorCode::kInvalidCode, "extension degree < 1");
  const long order = static_cast<long>(int_pow(v.q, std::min(v.m, 8)));
  if (v.m > 8 || order > kMaxExtensionOrder) {
    throw Error(ErrorCode::kUnsupportedOrder, "extension field too large");
  }
  FieldPtr ext = make_field(static_cast<int>(order), kMaxExtensionOrder);
  if (v.generators.field().q() != ext->q() || v.generators.cols() != v.n) {
    throw Error(ErrorCode::kInvalidCode,
                "generators must be length-n rows over F_{q^m}");
  }
  if (rank(v.generators) != v.generators.rows()) {
    throw Error(ErrorCode::kInvalidCode, "generators are dependent");
  }
  return {base, ext};
}

MatrixCode expand(const VectorCode& v, bool by_rows) {
  auto [base, ext] = code_fields(v);
  const Field& f = *ext;
  std::vector<FqMatrix> basis;
  for (int r = 0; r < v.generators.rows(); ++r) {
    Elem scale = 1;
    for (int l = 0; l < v.m; ++l) {
      const int rows = by_rows ? v.n : v.m;
      const int cols = by_rows ? v.m : v.n;
      FqMatrix mat(base, rows, cols);
      for (int j = 0; j < v.n; ++j) {
        const Elem x = f.mul(scale, v.generators.at(r, j));
        const std::vector<Elem> digits = expand_element(x, v.q, v.m);
        for (int c = 0; c < v.m; ++c) {
          if (by_rows) {
            mat.set(j, c, digits[c]);
          } else {
            mat.set(c, j, digits[c]);
          }
        }
      }
      basis.push_back(std::move(mat));
      if (l + 1 < v.m) scale = f.mul(scale, static_cast<Elem>(v.q));  // times t
    }
  }
  if (by_rows) return MatrixCode(base, v.n, v.m, std::move(basis));
  return MatrixCode(base, v.m, v.n, std::move(basis));
}

}  // namespace

MatrixCode::MatrixCode(FieldPtr field, int n, int m,
                       std::vector<FqMatrix> basis, int max_dim)
    : field_(std::move(field)), n_(n), m_(m), basis_(std::move(basis)) {
  if (n < 1 || m < 1) throw Error(ErrorCode::kInvalidCode, "empty shape");
  if (n > max_dim || m > max_dim) {
    throw Error(ErrorCode::kTooLarge, "matrix dimensions above cap");
  }
  for (const FqMatrix& g : basis_) {
    if (g.rows() != n || g.cols() != m || g.field().q() != field_->q()) {
      throw Error(ErrorCode::kInvalidCode,
                  "generator shape or field does not match the code");
    }
  }
  if (rank(flattened()) != k()) {
    throw Error(ErrorCode::kInvalidCode, "generators are linearly dependent");
  }
}

FqMatrix MatrixCode::flattened() const {
  FqMatrix flat(field_, k(), n_ * m_);
  for (int i = 0; i < k(); ++i) {
    const std::vector<Elem>& e = basis_[i].entries();
    for (int c = 0; c < n_ * m_; ++c) flat.set(i, c, e[c]);
  }
  return flat;
}

MatrixCode dual_code(const MatrixCode& c) {
  FqMatrix ns =
      c.k() == 0 ? FqMatrix::identity(c.field_ptr(), c.n() * c.m())
                 : nullspace(c.flattened());
  std::vector<FqMatrix> basis;
  for (int r = 0; r < ns.rows(); ++r) {
    basis.emplace_back(c.field_ptr(), c.n(), c.m(), ns.row(r));
  }
  return MatrixCode(c.field_ptr(), c.n(), c.m(), std::move(basis));
}

int min_rank_distance(const MatrixCode& c, std::uint64_t scan_cap) {
  if (c.k() == 0) throw Error(ErrorCode::kZeroCode, "zero code has no distance");
  const Field& f = c.field();
  const int q = f.q();
  std::uint64_t total = 1;
  for (int i = 0; i < c.k(); ++i) {
    total *= q;
    if (total > scan_cap) {
      throw Error(ErrorCode::kTooLarge,
                  "codeword scan exceeds cap " + std::to_string(scan_cap));
    }
  }
  const int len = c.n() * c.m();
  std::vector<int> coeff(c.k(), 0);
  int best = std::min(c.n(), c.m());
  while (true) {
    int i = 0;
    while (i < c.k() && ++coeff[i] == q) coeff[i++] = 0;
    if (i == c.k()) break;
    std::vector<Elem> e(len, 0);
    for (int g = 0; g < c.k(); ++g) {
      if (coeff[g] == 0) continue;
      const std::vector<Elem>& ge = c.basis()[g].entries();
      for (int t = 0; t < len; ++t) {
        e[t] = f.add(e[t], f.mul(static_cast<Elem>(coeff[g]), ge[t]));
      }
    }
    best = std::min(best, rank(FqMatrix(c.field_ptr(), c.n(), c.m(), e)));
    if (best == 1) break;
  }
  return best;
}

long singleton_bound(int n, int m, int d) {
  return static_cast<long>(std::max(n, m)) * (std::min(n, m) - d + 1);
}

CodeMetrics code_metrics(const MatrixCode& c, std::uint64_t scan_cap) {
  CodeMetrics out;
  out.k = c.k();
  out.d = min_rank_distance(c, scan_cap);
  const MatrixCode dual = dual_code(c);
  if (dual.k() > 0) out.d_perp = min_rank_distance(dual, scan_cap);
  out.is_mrd = out.k == singleton_bound(c.n(), c.m(), out.d);
  return out;
}

int shortening_dim(const MatrixCode& c, const SubspaceLattice& lattice,
                   int u) {
  if (lattice.q() != c.q() || lattice.n() != c.n()) {
    throw Error(ErrorCode::kLatticeMismatch, "lattice does not match code");
  }
  const Subspace& s = lattice.subspace(u);
  if (s.dim == 0 || c.k() == 0) return c.k();
  const int rows = s.dim * c.m();
  FqMatrix system(c.field_ptr(), rows, c.k());
  for (int i = 0; i < c.k(); ++i) {
    const FqMatrix prod = multiply(s.basis, c.basis()[i]);
    for (int r = 0; r < rows; ++r) system.set(r, i, prod.entries()[r]);
  }
  return c.k() - rank(system);
}

RankPoint induced_polymatroid(const MatrixCode& c, const LatticePtr& lattice) {
  std::vector<Rational> values(lattice->size());
  for (int u = 0; u < lattice->size(); ++u) {
    values[u] = Rational(c.k() - shortening_dim(c, *lattice, u), c.m());
    values[u].canonicalize();
  }
  return RankPoint(lattice, std::move(values));
}

RankPoint mrd_closed_form(const LatticePtr& lattice, int m, int d) {
  const int n = lattice->n();
  if (m < 1 || d < 1 || d > std::min(n, m)) {
    throw Error(ErrorCode::kOutOfRange, "need 1 <= d <= min(n, m)");
  }
  if (m >= n) return uniform(lattice, n - d + 1);
  if (m != n - 1) {
    throw Error(ErrorCode::kUnsupportedShape,
                "closed form only for m >= n or m = n - 1");
  }
  std::vector<Rational> values(lattice->size());
  Rational top(n * (n - d), n - 1);
  top.canonicalize();
  for (int x = 0; x < lattice->size(); ++x) {
    const int dim = lattice->dim(x);
    values[x] = dim <= n - d ? Rational(dim) : top;
  }
  return RankPoint(lattice, std::move(values));
}

MrdComboReport mrd_combo_independence(const LatticePtr& lattice, int d1,
                                      int d2, const Rational& lambda_in) {
  const Rational lambda = canonical(lambda_in);
  const int n = lattice->n();
  const int k1 = n * (n - d1);
  const int k2 = n * (n - d2);
  if (!(1 < k1 && k1 < k2)) {
    throw Error(ErrorCode::kHypothesisFail, "need 1 < k1 < k2");
  }
  if (k1 + k2 < n) throw Error(ErrorCode::kHypothesisFail, "need k1 + k2 >= n");
  if (sgn(lambda) <= 0 || lambda >= 1) {
    throw Error(ErrorCode::kHypothesisFail, "lambda must lie in (0, 1)");
  }
  ComboSpec spec;
  spec.terms.push_back({1 - lambda, mrd_closed_form(lattice, n - 1, d1)});
  spec.terms.push_back({lambda, mrd_closed_form(lattice, n - 1, d2)});
  MrdComboReport r{convex_combination(spec),
                   Integer(lambda.get_den()) * (n - 1), false};
  const IndependenceReport rep = independence_report(r.point, r.mu);
  r.all_independent =
      static_cast<int>(rep.independent.size()) == lattice->size();
  return r;
}

RankPoint vector_code_qmatroid(const VectorCode& v, const LatticePtr& lattice) {
  auto [base, ext] = code_fields(v);
  if (lattice->q() != v.q || lattice->n() != v.n) {
    throw Error(ErrorCode::kLatticeMismatch, "lattice does not match code");
  }
  std::vector<Rational> values(lattice->size());
  for (int w = 0; w < lattice->size(); ++w) {
    const Subspace& s = lattice->subspace(w);
    if (s.dim == 0 || v.generators.rows() == 0) {
      values[w] = 0;
      continue;
    }
    FqMatrix bt(ext, v.n, s.dim);
    for (int r = 0; r < s.dim; ++r) {
      for (int j = 0; j < v.n; ++j) bt.set(j, r, s.basis.at(r, j));
    }
    values[w] = rank(multiply(v.generators, bt));
  }
  return RankPoint(lattice, std::move(values));
}

MatrixCode expand_columns(const VectorCode& v) { return expand(v, false); }

MatrixCode expand_rows(const VectorCode& v) { return expand(v, true); }

}  // namespace qpoly
