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

#include <gtest/gtest.h>

#include <map>
#include <set>

#include "bridge.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

namespace qpoly {
namespace {

using oracle::Mask;

TEST(GaussianBinomial, MatchesSubspaceCounts) {
  for (auto [q, n] : std::vector<std::pair<int, int>>{
           {2, 2}, {2, 3}, {2, 4}, {2, 5}, {3, 2}, {3, 3}, {4, 2}, {5, 2},
           {7, 2}, {8, 2}}) {
    const oracle::Lattice ol = bridge::lattice_for(q, n);
    std::uint64_t total = 0;
    for (int l = 0; l <= n; ++l) {
      const std::uint64_t g = gaussian_binomial(n, l, q);
      EXPECT_EQ(g, ol.of_dim(l).size()) << q << " " << n << " " << l;
      total += g;
    }
    EXPECT_EQ(lattice_size(q, n), total);
  }
}

TEST(GaussianBinomial, Errors) {
  EXPECT_EQ(code_of([] { gaussian_binomial(3, 4, 2); }), ErrorCode::kOutOfRange);
  EXPECT_EQ(code_of([] { gaussian_binomial(3, -1, 2); }), ErrorCode::kOutOfRange);
  EXPECT_EQ(code_of([] { gaussian_binomial(80, 40, 7); }), ErrorCode::kTooLarge);
  EXPECT_EQ(gaussian_binomial(5, 0, 2), 1u);
  EXPECT_EQ(gaussian_binomial(5, 5, 2), 1u);
}

TEST(BuildLattice, CapsAndArguments) {
  EXPECT_EQ(code_of([] { build_lattice(2, 5, {.max_size = 100}); }),
            ErrorCode::kTooLarge);
  EXPECT_EQ(code_of([] { build_lattice(2, 0); }), ErrorCode::kOutOfRange);
  EXPECT_EQ(code_of([] { build_lattice(6, 2); }), ErrorCode::kNotAPrimePower);
  EXPECT_EQ(build_lattice(2, 5)->size(), 374);
}

TEST(BuildLattice, OrderOfTheSmallestLattice) {
  LatticePtr lat = build_lattice(2, 2);
  ASSERT_EQ(lat->size(), 5);
  EXPECT_EQ(lat->subspace(1).basis.to_rows(),
            (std::vector<std::vector<int>>{{0, 1}}));
  EXPECT_EQ(lat->subspace(2).basis.to_rows(),
            (std::vector<std::vector<int>>{{1, 0}}));
  EXPECT_EQ(lat->subspace(3).basis.to_rows(),
            (std::vector<std::vector<int>>{{1, 1}}));
  EXPECT_EQ(lat->dim(0), 0);
  EXPECT_EQ(lat->dim(4), 2);
  EXPECT_EQ(lat->grade_begin(1), 1);
  EXPECT_EQ(lat->grade_end(1), 4);
}

class LatticeShapes
    : public ::testing::TestWithParam<std::pair<int, int>> {};

TEST_P(LatticeShapes, AgreesWithOracle) {
  const auto [q, n] = GetParam();
  for (long memo : {0L, 1000L}) {
    LatticePtr lat = build_lattice(q, n, {.max_size = 1000, .memo_threshold = memo});
    EXPECT_EQ(lat->memoized(), memo > 0);
    const oracle::Lattice ol = bridge::lattice_for(q, n);
    const std::vector<Mask> m = bridge::masks(*lat, ol);
    ASSERT_EQ(m.size(), ol.subspaces().size());
    EXPECT_EQ(std::set<Mask>(m.begin(), m.end()).size(), m.size());

    for (int i = 0; i < lat->size(); ++i) {
      EXPECT_EQ(lat->dim(i), ol.dim(m[i]));
      if (i > 0) {
        EXPECT_LE(lat->dim(i - 1), lat->dim(i));
        if (lat->dim(i - 1) == lat->dim(i)) {
          EXPECT_LT(lat->subspace(i - 1).basis.entries(),
                    lat->subspace(i).basis.entries());
        }
      }
      EXPECT_EQ(m[lat->orthogonal_complement(i)], ol.perp(m[i]));
      EXPECT_EQ(lat->index_of(lat->subspace(i).basis), i);
      std::set<Mask> atoms;
      for (int a : lat->atoms(i)) atoms.insert(m[a]);
      std::set<Mask> expect_atoms;
      for (Mask a : ol.of_dim(1)) {
        if (oracle::Lattice::leq(a, m[i])) expect_atoms.insert(a);
      }
      EXPECT_EQ(atoms, expect_atoms);
      EXPECT_EQ(lat->atom_bits(i).count(), static_cast<int>(atoms.size()));

      std::set<Mask> down;
      for (int d : lat->down_set(i)) down.insert(m[d]);
      const std::vector<Mask> below = ol.below(m[i]);
      EXPECT_EQ(down, std::set<Mask>(below.begin(), below.end()));

      for (int j = 0; j < lat->size(); ++j) {
        EXPECT_EQ(lat->leq(i, j), oracle::Lattice::leq(m[i], m[j]));
        const auto [mt, jn] = lat->meet_join(i, j);
        EXPECT_EQ(m[mt], oracle::Lattice::meet(m[i], m[j]));
        EXPECT_EQ(m[jn], ol.join(m[i], m[j]));
        const bool cover = oracle::Lattice::leq(m[i], m[j]) &&
                           ol.dim(m[j]) == ol.dim(m[i]) + 1;
        const auto& lc = lat->lower_covers(j);
        const auto& uc = lat->upper_covers(i);
        EXPECT_EQ(std::count(lc.begin(), lc.end(), i), cover ? 1 : 0);
        EXPECT_EQ(std::count(uc.begin(), uc.end(), j), cover ? 1 : 0);
      }
      EXPECT_EQ(lat->hyperplanes(i), lat->lower_covers(i));
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Small, LatticeShapes,
                         ::testing::Values(std::pair{2, 1}, std::pair{2, 2},
                                           std::pair{2, 3}, std::pair{2, 4},
                                           std::pair{3, 2}, std::pair{3, 3},
                                           std::pair{4, 2}, std::pair{5, 2}));

TEST(BuildLattice, IndexOfSpanningSets) {
  LatticePtr lat = build_lattice(3, 3);
  const int a = lat->index_of_span({{1, 2, 0}, {2, 1, 0}});
  EXPECT_EQ(lat->dim(a), 1);
  EXPECT_EQ(lat->subspace(a).basis.to_rows(),
            (std::vector<std::vector<int>>{{1, 2, 0}}));
  EXPECT_EQ(lat->index_of_span({}), 0);
  EXPECT_EQ(lat->index_of_span({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), lat->top());
  EXPECT_EQ(code_of([&] { lat->index_of_span({{1, 0}}); }),
            ErrorCode::kDimensionMismatch);
}

TEST(BuildLattice, DigestIsDeterministicAndDistinguishesShapes) {
  LatticePtr a = build_lattice(2, 3);
  LatticePtr b = build_lattice(2, 3);
  LatticePtr c = build_lattice(3, 2);
  EXPECT_EQ(a->order_digest(), b->order_digest());
  EXPECT_NE(a->order_digest(), c->order_digest());
  EXPECT_EQ(a->order_digest().size(), 64u);
  EXPECT_EQ(a->dump(), b->dump());
  EXPECT_EQ(a->dump().substr(0, 5), "{\"n\":");
}

}  // namespace
}  // namespace qpoly
