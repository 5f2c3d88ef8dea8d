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

#include "qpoly/lattice.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <bit>
#include <cstdio>
#include <limits>

#include "json.hpp"
#include "qpoly/error.hpp"

namespace qpoly {
namespace {

std::string key_of(const FqMatrix& basis) {
  return std::string(basis.entries().begin(), basis.entries().end());
}

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr);
  std::string hex;
  hex.reserve(2 * len);
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof(buf), "%02x", digest[i]);
    hex += buf;
  }
  return hex;
}

// All d x n matrices in reduced row echelon form with full row rank.
std::vector<FqMatrix> rref_matrices(const FieldPtr& field, int n, int d) {
  std::vector<FqMatrix> out;
  const int q = field->q();
  std::vector<int> pivots(d);
  for (int i = 0; i < d; ++i) pivots[i] = i;
  while (true) {
    std::vector<bool> is_pivot(n, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::pair<int, int>> free_slots;
    for (int r = 0; r < d; ++r) {
      for (int c = pivots[r] + 1; c < n; ++c) {
        if (!is_pivot[c]) free_slots.emplace_back(r, c);
      }
    }
    std::vector<int> digits(free_slots.size(), 0);
    while (true) {
      FqMatrix m(field, d, n);
      for (int r = 0; r < d; ++r) m.set(r, pivots[r], 1);
      for (size_t s = 0; s < free_slots.size(); ++s) {
        m.set(free_slots[s].first, free_slots[s].second,
              static_cast<Elem>(digits[s]));
      }
      out.push_back(std::move(m));
      size_t s = 0;
      while (s < digits.size() && ++digits[s] == q) digits[s++] = 0;
      if (s == digits.size()) break;
    }
    int i = d - 1;
    while (i >= 0 && pivots[i] == n - d + i) --i;
    if (i < 0) break;
    ++pivots[i];
    for (int j = i + 1; j < d; ++j) pivots[j] = pivots[j - 1] + 1;
  }
  return out;
}

}  // namespace

bool Bits::subset_of(const Bits& other) const {
  for (size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] & ~other.words_[w]) return false;
  }
  return true;
}

int Bits::count() const {
  int c = 0;
  for (std::uint64_t w : words_) c += std::popcount(w);
  return c;
}

std::uint64_t gaussian_binomial(int n, int l, int q) {
  if (n < 0 || l < 0 || l > n) {
    throw Error(ErrorCode::kOutOfRange, "gaussian_binomial needs 0 <= l <= n");
  }
  if (q < 2) throw Error(ErrorCode::kOutOfRange, "q must be at least 2");
  using u128 = unsigned __int128;
  const u128 limit = std::numeric_limits<std::uint64_t>::max();
  u128 result = 1;
  for (int i = 0; i < l; ++i) {
    u128 num = 1;
    for (int k = 0; k < n - i; ++k) {
      num *= q;
      if (num > limit) throw Error(ErrorCode::kTooLarge, "q-power overflow");
    }
    u128 den = 1;
    for (int k = 0; k < i + 1; ++k) den *= q;
    result = result * (num - 1);
    if (result / (num - 1) > limit) {
      throw Error(ErrorCode::kTooLarge, "gaussian binomial overflow");
    }
    result /= (den - 1);
    if (result > limit) {
      throw Error(ErrorCode::kTooLarge, "gaussian binomial overflow");
    }
  }
  return static_cast<std::uint64_t>(result);
}

std::uint64_t lattice_size(int q, int n) {
  std::uint64_t total = 0;
  for (int l = 0; l <= n; ++l) {
    const std::uint64_t g = gaussian_binomial(n, l, q);
    if (total > std::numeric_limits<std::uint64_t>::max() - g) {
      throw Error(ErrorCode::kTooLarge, "lattice size overflow");
    }
    total += g;
  }
  return total;
}

int SubspaceLattice::index_of(const FqMatrix& m) const {
  if (m.cols() != n_) {
    throw Error(ErrorCode::kDimensionMismatch,
                "vectors must have length " + std::to_string(n_));
  }
  const RrefResult rr = rref(m);
  const FqMatrix basis = rr.reduced.top(rr.rank);
  auto it = index_.find(key_of(basis));
  if (it == index_.end()) {
    throw Error(ErrorCode::kInvalidArgument, "subspace not in lattice");
  }
  return it->second;
}

int SubspaceLattice::index_of_span(
    const std::vector<std::vector<int>>& vectors) const {
  if (vectors.empty()) return 0;
  return index_of(FqMatrix::from_rows(field_, vectors, n_));
}

int SubspaceLattice::join_direct(int i, int j) const {
  return index_of(subspaces_[i].basis.stacked(subspaces_[j].basis));
}

int SubspaceLattice::join(int i, int j) const {
  if (!join_table_.empty()) return join_table_[i * size() + j];
  if (leq(i, j)) return j;
  if (leq(j, i)) return i;
  return join_direct(i, j);
}

int SubspaceLattice::meet(int i, int j) const {
  if (!meet_table_.empty()) return meet_table_[i * size() + j];
  if (leq(i, j)) return i;
  if (leq(j, i)) return j;
  return complement_[join(complement_[i], complement_[j])];
}

std::vector<int> SubspaceLattice::down_set(int i) const {
  std::vector<int> out;
  for (int j = 0; j <= i; ++j) {
    if (down_[i].test(j)) out.push_back(j);
  }
  return out;
}

std::string SubspaceLattice::dump() const {
  nlohmann::json subs = nlohmann::json::array();
  for (const Subspace& s : subspaces_) subs.push_back(s.basis.to_rows());
  nlohmann::json j;
  j["q"] = q_;
  j["n"] = n_;
  j["subspaces"] = std::move(subs);
  return j.dump();
}

LatticePtr build_lattice(int q, int n, const LatticeOptions& options) {
  if (n < 1) throw Error(ErrorCode::kOutOfRange, "n must be at least 1");
  FieldPtr field = make_field(q, options.max_field_order);
  const std::uint64_t total = lattice_size(q, n);
  if (total > static_cast<std::uint64_t>(options.max_size)) {
    throw Error(ErrorCode::kTooLarge,
                "lattice size " + std::to_string(total) + " exceeds cap " +
                    std::to_string(options.max_size));
  }

  auto lat = std::shared_ptr<SubspaceLattice>(new SubspaceLattice());
  lat->q_ = q;
  lat->n_ = n;
  lat->field_ = field;
  lat->grade_offsets_.push_back(0);
  for (int d = 0; d <= n; ++d) {
    std::vector<FqMatrix> grade = rref_matrices(field, n, d);
    std::sort(grade.begin(), grade.end(),
              [](const FqMatrix& a, const FqMatrix& b) {
                return a.entries() < b.entries();
              });
    for (FqMatrix& m : grade) {
      lat->index_.emplace(key_of(m), static_cast<int>(lat->subspaces_.size()));
      lat->subspaces_.push_back(Subspace{std::move(m), d});
    }
    lat->grade_offsets_.push_back(static_cast<int>(lat->subspaces_.size()));
  }
  const int t = lat->size();

  const int a0 = lat->grade_begin(1);
  const int a1 = lat->grade_end(1);
  lat->atom_bits_.assign(t, Bits(a1 - a0));
  lat->atoms_.assign(t, {});
  for (int i = 0; i < t; ++i) {
    const Subspace& s = lat->subspaces_[i];
    for (int a = a0; a < a1; ++a) {
      const FqMatrix stacked = s.basis.stacked(lat->subspaces_[a].basis);
      if (rank(stacked) == s.dim) {
        lat->atom_bits_[i].set(a - a0);
        lat->atoms_[i].push_back(a);
      }
    }
  }

  lat->down_.assign(t, Bits(t));
  for (int j = 0; j < t; ++j) {
    for (int i = 0; i < t; ++i) {
      if (lat->dim(i) <= lat->dim(j) &&
          lat->atom_bits_[i].subset_of(lat->atom_bits_[j])) {
        lat->down_[j].set(i);
      }
    }
  }

  lat->lower_.assign(t, {});
  lat->upper_.assign(t, {});
  for (int j = 0; j < t; ++j) {
    const int d = lat->dim(j);
    if (d == 0) continue;
    for (int i = lat->grade_begin(d - 1); i < lat->grade_end(d - 1); ++i) {
      if (lat->leq(i, j)) {
        lat->lower_[j].push_back(i);
        lat->upper_[i].push_back(j);
      }
    }
  }

  lat->complement_.assign(t, 0);
  for (int i = 0; i < t; ++i) {
    const Subspace& s = lat->subspaces_[i];
    const FqMatrix basis =
        s.dim == 0 ? FqMatrix(field, 0, n) : s.basis;
    lat->complement_[i] = lat->index_of(nullspace(basis));
  }

  if (total <= static_cast<std::uint64_t>(options.memo_threshold)) {
    lat->join_table_.assign(static_cast<size_t>(t) * t, 0);
    for (int i = 0; i < t; ++i) {
      for (int j = i; j < t; ++j) {
        int v;
        if (lat->leq(i, j)) {
          v = j;
        } else if (lat->leq(j, i)) {
          v = i;
        } else {
          v = lat->join_direct(i, j);
        }
        lat->join_table_[i * t + j] = v;
        lat->join_table_[j * t + i] = v;
      }
    }
    std::vector<int> meets(static_cast<size_t>(t) * t, 0);
    for (int i = 0; i < t; ++i) {
      for (int j = 0; j < t; ++j) {
        meets[i * t + j] = lat->complement_[lat->join_table_
                               [lat->complement_[i] * t + lat->complement_[j]]];
      }
    }
    lat->meet_table_ = std::move(meets);
  }

  lat->digest_ = sha256_hex(lat->dump());
  return lat;
}

}  // namespace qpoly
