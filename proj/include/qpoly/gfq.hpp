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

#ifndef QPOLY_GFQ_HPP_
#define QPOLY_GFQ_HPP_

#include <cstdint>
#include <memory>
#include <vector>

namespace qpoly {

// An element of GF(q) encoded as the integer whose base-p digits are the
// coefficients of its polynomial representative (constant term first).
using Elem = std::uint8_t;

inline constexpr int kDefaultMaxFieldOrder = 9;
inline constexpr int kDefaultMaxMatrixDim = 16;

// Finite field with precomputed tables. Extension fields are built modulo a
// fixed irreducible polynomial:
//   4: t^2+t+1    8: t^3+t+1    16: t^4+t+1    32: t^5+t^2+1   64: t^6+t+1
//   9: t^2+1     27: t^3+2t+1   25: t^2+2      49: t^2+1
class Field {
 public:
  int q() const { return q_; }
  int p() const { return p_; }
  int e() const { return e_; }

  Elem add(Elem a, Elem b) const { return add_[a * q_ + b]; }
  Elem sub(Elem a, Elem b) const { return add_[a * q_ + neg_[b]]; }
  Elem mul(Elem a, Elem b) const { return mul_[a * q_ + b]; }
  Elem neg(Elem a) const { return neg_[a]; }
  // Requires a != 0.
  Elem inv(Elem a) const { return inv_[a]; }
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  // Modulus coefficients, constant term first, monic; {0, 1} for prime q.
  const std::vector<int>& modulus() const { return modulus_; }

 private:
  friend std::shared_ptr<const Field> make_field(int q, int max_order);
  Field() = default;

  int q_ = 0;
  int p_ = 0;
  int e_ = 0;
  std::vector<int> modulus_;
  std::vector<Elem> add_;
  std::vector<Elem> mul_;
  std::vector<Elem> neg_;
  std::vector<Elem> inv_;
};

using FieldPtr = std::shared_ptr<const Field>;

// Errors: NotAPrimePower, UnsupportedOrder (q above max_order or no built-in
// modulus for that order).
FieldPtr make_field(int q, int max_order = kDefaultMaxFieldOrder);

// Dense row-major matrix over a finite field.
class FqMatrix {
 public:
  FqMatrix() = default;
  FqMatrix(FieldPtr field, int rows, int cols);
  FqMatrix(FieldPtr field, int rows, int cols, std::vector<Elem> entries);

  static FqMatrix from_rows(FieldPtr field,
                            const std::vector<std::vector<int>>& rows,
                            int cols = -1);
  static FqMatrix identity(FieldPtr field, int n);

  const Field& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Elem at(int r, int c) const { return entries_[r * cols_ + c]; }
  void set(int r, int c, Elem v) { entries_[r * cols_ + c] = v; }
  const std::vector<Elem>& entries() const { return entries_; }
  std::vector<Elem> row(int r) const;
  std::vector<std::vector<int>> to_rows() const;

  FqMatrix transpose() const;
  // Vertical concatenation; column counts must agree.
  FqMatrix stacked(const FqMatrix& below) const;
  // First k rows.
  FqMatrix top(int k) const;

  bool operator==(const FqMatrix& other) const;
  bool operator!=(const FqMatrix& other) const { return !(*this == other); }

 private:
  FieldPtr field_;
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Elem> entries_;
};

FqMatrix multiply(const FqMatrix& a, const FqMatrix& b);

struct RrefResult {
  FqMatrix reduced;  // same shape as the input, zero rows last
  int rank = 0;
  std::vector<int> pivots;
};

RrefResult rref(const FqMatrix& m);
int rank(const FqMatrix& m);

// Rows form a basis of {x : m * x^T = 0}; returned in reduced echelon form.
FqMatrix nullspace(const FqMatrix& m);

}  // namespace qpoly

#endif  // QPOLY_GFQ_HPP_
