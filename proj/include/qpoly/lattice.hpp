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

#ifndef QPOLY_LATTICE_HPP_
#define QPOLY_LATTICE_HPP_

#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qpoly/gfq.hpp"

namespace qpoly {

struct Subspace {
  FqMatrix basis;  // dim x n, reduced row echelon form
  int dim = 0;
};

struct LatticeOptions {
  long max_size = 1000;
  long memo_threshold = 200;
  int max_field_order = kDefaultMaxFieldOrder;
};

// Number of l-dimensional subspaces of F_q^n. Errors: OutOfRange.
std::uint64_t gaussian_binomial(int n, int l, int q);

// Small dynamic bitset used for atom and down-set membership.
class Bits {
 public:
  Bits() = default;
  explicit Bits(int size) : size_(size), words_((size + 63) / 64, 0) {}
  int size() const { return size_; }
  void set(int i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
  bool subset_of(const Bits& other) const;
  int count() const;
  bool operator==(const Bits& o) const { return words_ == o.words_; }

 private:
  int size_ = 0;
  std::vector<std::uint64_t> words_;
};

// The subspace lattice of F_q^n with its fixed linear order: by dimension,
// then lexicographically on the flattened reduced echelon entries.
class SubspaceLattice {
 public:
  int q() const { return q_; }
  int n() const { return n_; }
  int size() const { return static_cast<int>(subspaces_.size()); }
  const Field& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }

  const Subspace& subspace(int i) const { return subspaces_[i]; }
  int dim(int i) const { return subspaces_[i].dim; }
  int zero() const { return 0; }
  int top() const { return size() - 1; }

  // Indices of dimension d occupy [grade_begin(d), grade_begin(d + 1)).
  int grade_begin(int d) const { return grade_offsets_[d]; }
  int grade_end(int d) const { return grade_offsets_[d + 1]; }

  // Canonical index of the row space of m (any spanning set, n columns).
  int index_of(const FqMatrix& m) const;
  // Canonical index of the span of the given vectors.
  int index_of_span(const std::vector<std::vector<int>>& vectors) const;

  bool leq(int i, int j) const { return down_[j].test(i); }
  bool comparable(int i, int j) const { return leq(i, j) || leq(j, i); }

  int meet(int i, int j) const;
  int join(int i, int j) const;
  std::pair<int, int> meet_join(int i, int j) const {
    return {meet(i, j), join(i, j)};
  }
  int orthogonal_complement(int i) const { return complement_[i]; }

  // X covered by Y: X < Y and dim Y = dim X + 1.
  const std::vector<int>& lower_covers(int i) const { return lower_[i]; }
  const std::vector<int>& upper_covers(int i) const { return upper_[i]; }
  // Codimension-one subspaces of X; equal to lower_covers.
  const std::vector<int>& hyperplanes(int i) const { return lower_[i]; }
  // One-dimensional subspaces of X.
  const std::vector<int>& atoms(int i) const { return atoms_[i]; }
  // All subspaces of X, in lattice order.
  std::vector<int> down_set(int i) const;
  const Bits& atom_bits(int i) const { return atom_bits_[i]; }

  bool memoized() const { return !meet_table_.empty(); }

  // Compact JSON dump of q, n and the ordered subspace list.
  std::string dump() const;
  // Lowercase hex SHA-256 of dump().
  const std::string& order_digest() const { return digest_; }

 private:
  friend std::shared_ptr<const SubspaceLattice> build_lattice(
      int q, int n, const LatticeOptions& options);
  SubspaceLattice() = default;

  int join_direct(int i, int j) const;

  int q_ = 0;
  int n_ = 0;
  FieldPtr field_;
  std::vector<Subspace> subspaces_;
  std::vector<int> grade_offsets_;
  std::unordered_map<std::string, int> index_;
  std::vector<Bits> atom_bits_;
  std::vector<Bits> down_;
  std::vector<std::vector<int>> atoms_;
  std::vector<std::vector<int>> lower_;
  std::vector<std::vector<int>> upper_;
  std::vector<int> complement_;
  std::vector<int> meet_table_;
  std::vector<int> join_table_;
  std::string digest_;
};

using LatticePtr = std::shared_ptr<const SubspaceLattice>;

// Errors: TooLarge (size above options.max_size), OutOfRange (n < 1), plus
// field errors.
LatticePtr build_lattice(int q, int n, const LatticeOptions& options = {});

// Total lattice size T without building it.
std::uint64_t lattice_size(int q, int n);

}  // namespace qpoly

#endif  // QPOLY_LATTICE_HPP_
