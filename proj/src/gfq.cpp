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

#include "qpoly/gfq.hpp"

#include <map>
#include <string>
#include <utility>

#include "qpoly/error.hpp"

namespace qpoly {
namespace {

bool is_prime(int x) {
  if (x < 2) return false;
  for (int d = 2; d * d <= x; ++d) {
    if (x % d == 0) return false;
  }
  return true;
}

// Monic irreducible moduli, constant term first.
const std::map<int, std::vector<int>>& builtin_moduli() {
  static const auto* table = new std::map<int, std::vector<int>>{
      {4, {1, 1, 1}},
      {8, {1, 1, 0, 1}},
      {16, {1, 1, 0, 0, 1}},
      {32, {1, 0, 1, 0, 0, 1}},
      {64, {1, 1, 0, 0, 0, 0, 1}},
      {9, {1, 0, 1}},
      {27, {1, 2, 0, 1}},
      {25, {2, 0, 1}},
      {49, {1, 0, 1}},
  };
  return *table;
}

std::vector<int> to_digits(int x, int p, int e) {
  std::vector<int> d(e, 0);
  for (int i = 0; i < e; ++i) {
    d[i] = x % p;
    x /= p;
  }
  return d;
}

int from_digits(const std::vector<int>& d, int p) {
  int x = 0;
  for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i) x = x * p + d[i];
  return x;
}

int poly_mul(int a, int b, int p, int e, const std::vector<int>& modulus) {
  std::vector<int> da = to_digits(a, p, e);
  std::vector<int> db = to_digits(b, p, e);
  std::vector<int> prod(2 * e, 0);
  for (int i = 0; i < e; ++i) {
    for (int j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
  }
  for (int deg = 2 * e - 2; deg >= e; --deg) {
    const int c = prod[deg];
    if (c == 0) continue;
    for (int k = 0; k <= e; ++k) {
      int& slot = prod[deg - e + k];
      slot = ((slot - c * modulus[k]) % p + p) % p;
    }
  }
  prod.resize(e);
  return from_digits(prod, p);
}

}  // namespace

FieldPtr make_field(int q, int max_order) {
  if (q < 2) {
    throw Error(ErrorCode::kNotAPrimePower,
                std::to_string(q) + " is not a prime power");
  }
  int p = 0;
  for (int d = 2; d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  int e = 0;
  int rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++e;
  }
  if (rest != 1 || !is_prime(p)) {
    throw Error(ErrorCode::kNotAPrimePower,
                std::to_string(q) + " is not a prime power");
  }
  if (q > max_order || q > 255) {
    throw Error(ErrorCode::kUnsupportedOrder,
                "field order " + std::to_string(q) + " exceeds cap " +
                    std::to_string(max_order));
  }
  std::vector<int> modulus = {0, 1};
  if (e > 1) {
    auto it = builtin_moduli().find(q);
    if (it == builtin_moduli().end()) {
      throw Error(ErrorCode::kUnsupportedOrder,
                  "no built-in modulus for order " + std::to_string(q));
    }
    modulus = it->second;
  }

  auto f = std::shared_ptr<Field>(new Field());
  f->q_ = q;
  f->p_ = p;
  f->e_ = e;
  f->modulus_ = modulus;
  f->add_.assign(q * q, 0);
  f->mul_.assign(q * q, 0);
  f->neg_.assign(q, 0);
  f->inv_.assign(q, 0);
  for (int a = 0; a < q; ++a) {
    const std::vector<int> da = to_digits(a, p, e);
    std::vector<int> dn(e);
    for (int i = 0; i < e; ++i) dn[i] = (p - da[i]) % p;
    f->neg_[a] = static_cast<Elem>(from_digits(dn, p));
    for (int b = 0; b < q; ++b) {
      const std::vector<int> db = to_digits(b, p, e);
      std::vector<int> ds(e);
      for (int i = 0; i < e; ++i) ds[i] = (da[i] + db[i]) % p;
      f->add_[a * q + b] = static_cast<Elem>(from_digits(ds, p));
      const int prod = e == 1 ? (a * b) % p : poly_mul(a, b, p, e, modulus);
      f->mul_[a * q + b] = static_cast<Elem>(prod);
    }
  }
  for (int a = 1; a < q; ++a) {
    for (int b = 1; b < q; ++b) {
      if (f->mul_[a * q + b] == 1) {
        f->inv_[a] = static_cast<Elem>(b);
        break;
      }
    }
  }
  return f;
}

FqMatrix::FqMatrix(FieldPtr field, int rows, int cols)
    : field_(std::move(field)), rows_(rows), cols_(cols),
      entries_(static_cast<size_t>(rows) * cols, 0) {}

FqMatrix::FqMatrix(FieldPtr field, int rows, int cols,
                   std::vector<Elem> entries)
    : field_(std::move(field)), rows_(rows), cols_(cols),
      entries_(std::move(entries)) {
  if (entries_.size() != static_cast<size_t>(rows) * cols) {
    throw Error(ErrorCode::kDimensionMismatch,
                "entry count does not match matrix shape");
  }
  for (Elem v : entries_) {
    if (v >= field_->q()) {
      throw Error(ErrorCode::kOutOfRange, "matrix entry exceeds field order");
    }
  }
}

FqMatrix FqMatrix::from_rows(FieldPtr field,
                             const std::vector<std::vector<int>>& rows,
                             int cols) {
  if (cols < 0) cols = rows.empty() ? 0 : static_cast<int>(rows[0].size());
  std::vector<Elem> entries;
  entries.reserve(rows.size() * cols);
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != cols) {
      throw Error(ErrorCode::kDimensionMismatch, "ragged matrix rows");
    }
    for (int v : r) {
      if (v < 0 || v >= field->q()) {
        throw Error(ErrorCode::kOutOfRange,
                    "entry " + std::to_string(v) + " not a field element");
      }
      entries.push_back(static_cast<Elem>(v));
    }
  }
  return FqMatrix(std::move(field), static_cast<int>(rows.size()), cols,
                  std::move(entries));
}

FqMatrix FqMatrix::identity(FieldPtr field, int n) {
  FqMatrix m(std::move(field), n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

std::vector<Elem> FqMatrix::row(int r) const {
  return std::vector<Elem>(entries_.begin() + r * cols_,
                           entries_.begin() + (r + 1) * cols_);
}

std::vector<std::vector<int>> FqMatrix::to_rows() const {
  std::vector<std::vector<int>> out(rows_, std::vector<int>(cols_));
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) out[r][c] = at(r, c);
  }
  return out;
}

FqMatrix FqMatrix::transpose() const {
  FqMatrix t(field_, cols_, rows_);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) t.set(c, r, at(r, c));
  }
  return t;
}

FqMatrix FqMatrix::stacked(const FqMatrix& below) const {
  if (below.cols_ != cols_) {
    throw Error(ErrorCode::kDimensionMismatch, "column counts differ");
  }
  std::vector<Elem> e = entries_;
  e.insert(e.end(), below.entries_.begin(), below.entries_.end());
  return FqMatrix(field_, rows_ + below.rows_, cols_, std::move(e));
}

FqMatrix FqMatrix::top(int k) const {
  std::vector<Elem> e(entries_.begin(), entries_.begin() + k * cols_);
  return FqMatrix(field_, k, cols_, std::move(e));
}

bool FqMatrix::operator==(const FqMatrix& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ &&
         field_->q() == other.field_->q() && entries_ == other.entries_;
}

FqMatrix multiply(const FqMatrix& a, const FqMatrix& b) {
  if (a.cols() != b.rows()) {
    throw Error(ErrorCode::kDimensionMismatch, "inner dimensions differ");
  }
  const Field& f = a.field();
  FqMatrix out(a.field_ptr(), a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int k = 0; k < a.cols(); ++k) {
      const Elem x = a.at(i, k);
      if (x == 0) continue;
      for (int j = 0; j < b.cols(); ++j) {
        out.set(i, j, f.add(out.at(i, j), f.mul(x, b.at(k, j))));
      }
    }
  }
  return out;
}

RrefResult rref(const FqMatrix& m) {
  const Field& f = m.field();
  RrefResult res;
  res.reduced = m;
  FqMatrix& r = res.reduced;
  int lead = 0;
  for (int c = 0; c < m.cols() && lead < m.rows(); ++c) {
    int piv = -1;
    for (int i = lead; i < m.rows(); ++i) {
      if (r.at(i, c) != 0) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    if (piv != lead) {
      for (int j = 0; j < m.cols(); ++j) {
        const Elem t = r.at(piv, j);
        r.set(piv, j, r.at(lead, j));
        r.set(lead, j, t);
      }
    }
    const Elem s = f.inv(r.at(lead, c));
    for (int j = 0; j < m.cols(); ++j) r.set(lead, j, f.mul(s, r.at(lead, j)));
    for (int i = 0; i < m.rows(); ++i) {
      if (i == lead) continue;
      const Elem factor = r.at(i, c);
      if (factor == 0) continue;
      for (int j = 0; j < m.cols(); ++j) {
        r.set(i, j, f.sub(r.at(i, j), f.mul(factor, r.at(lead, j))));
      }
    }
    res.pivots.push_back(c);
    ++lead;
  }
  res.rank = lead;
  return res;
}

int rank(const FqMatrix& m) { return rref(m).rank; }

FqMatrix nullspace(const FqMatrix& m) {
  const Field& f = m.field();
  const RrefResult rr = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : rr.pivots) is_pivot[c] = true;
  const int nullity = m.cols() - rr.rank;
  FqMatrix basis(m.field_ptr(), nullity, m.cols());
  int row = 0;
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    basis.set(row, free, 1);
    for (int i = 0; i < rr.rank; ++i) {
      basis.set(row, rr.pivots[i], f.neg(rr.reduced.at(i, free)));
    }
    ++row;
  }
  return rref(basis).reduced;
}

}  // namespace qpoly
