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

#include "qpoly/qpm.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "bridge.hpp"
#include "oracles.hpp"
#include "qpoly/constructions.hpp"
#include "qpoly/polytope.hpp"
#include "test_util.hpp"

namespace qpoly {
namespace {

using oracle::Mask;

// Random convex combinations of two or three integer points.
std::vector<RankPoint> sample_points(const LatticePtr& lat, int count,
                                     std::uint64_t seed) {
  const std::vector<RankPoint> pts = lattice_points(lat);
  std::mt19937_64 rng(seed);
  std::vector<RankPoint> out(pts.begin(), pts.end());
  for (int i = 0; i < count; ++i) {
    const int terms = 2 + static_cast<int>(rng() % 2);
    std::vector<Integer> w(terms);
    Integer total = 0;
    for (auto& x : w) {
      x = 1 + static_cast<long>(rng() % 4);
      total += x;
    }
    ComboSpec spec;
    for (int t = 0; t < terms; ++t) {
      spec.terms.push_back({canonical(Rational(w[t], total)), pts[rng() % pts.size()]});
    }
    out.push_back(convex_combination(spec));
  }
  return out;
}

class Structures : public ::testing::TestWithParam<std::pair<int, int>> {};

TEST_P(Structures, AgreeWithOracle) {
  const auto [q, n] = GetParam();
  LatticePtr lat = build_lattice(q, n);
  const oracle::Lattice ol = bridge::lattice_for(q, n);
  const std::vector<Mask> m = bridge::masks(*lat, ol);
  for (const RankPoint& p : sample_points(lat, 40, 7 * q + n)) {
    const oracle::Rank rho = bridge::to_rank(p, m);
    EXPECT_TRUE(check_axioms(p).ok);
    EXPECT_EQ(bridge::to_masks(flats(p), m), oracle::flats(ol, rho));
    EXPECT_EQ(bridge::to_masks(cyclic_spaces(p), m),
              oracle::cyclic_spaces(ol, rho));
    std::set<Mask> zf;
    for (Mask x : oracle::flats(ol, rho)) {
      if (oracle::cyclic_spaces(ol, rho).count(x)) zf.insert(x);
    }
    EXPECT_EQ(bridge::to_masks(cyclic_flats(p), m), zf);

    const Integer mu = principal_denominator(p);
    Integer expect_mu = 1;
    for (const Rational& v : p.values()) expect_mu = lcm(expect_mu, v.get_den());
    EXPECT_EQ(mu, expect_mu);
    for (Integer nu : {mu, Integer(2 * mu)}) {
      const IndependenceReport r = independence_report(p, nu);
      EXPECT_EQ(bridge::to_masks(r.independent, m),
                oracle::independent_spaces(ol, rho, nu));
      EXPECT_EQ(bridge::to_masks(r.circuits, m), oracle::circuits(ol, rho, nu));
      std::set<Mask> loops;
      for (Mask c : oracle::circuits(ol, rho, nu)) {
        if (ol.dim(c) == 1) loops.insert(c);
      }
      EXPECT_EQ(bridge::to_masks(r.loops, m), loops);
    }

    const int v = lat->top();
    std::set<Mask> bases;
    for (Mask j : ol.subspaces()) {
      if (!oracle::independent(ol, rho, mu, j)) continue;
      bool maximal = true;
      for (Mask k : ol.subspaces()) {
        if (k != j && oracle::Lattice::leq(j, k) &&
            oracle::independent(ol, rho, mu, k)) {
          maximal = false;
        }
      }
      if (maximal) bases.insert(j);
    }
    const IndexSet b = mu_bases(p, mu, v);
    EXPECT_EQ(bridge::to_masks(b, m), bases);
    for (int x : b) EXPECT_EQ(p[x], p[v]);

    for (int a = 0; a < lat->size(); a += 3) {
      const Closure c = closure(p, a);
      Mask expect = 1;
      std::set<Mask> atoms;
      for (Mask x : ol.of_dim(1)) {
        if (rho.at(ol.join(m[a], x)) == rho.at(m[a])) {
          atoms.insert(x);
          expect = ol.join(expect, x);
        }
      }
      EXPECT_EQ(bridge::to_masks(c.cl_set, m), atoms);
      EXPECT_EQ(m[c.cl], expect);
    }
  }
}

TEST_P(Structures, AxiomCheckAgreesOnPerturbedPoints) {
  const auto [q, n] = GetParam();
  LatticePtr lat = build_lattice(q, n);
  const oracle::Lattice ol = bridge::lattice_for(q, n);
  const std::vector<Mask> m = bridge::masks(*lat, ol);
  std::mt19937_64 rng(99 + q * n);
  int failures = 0;
  for (const RankPoint& base : sample_points(lat, 30, 3 * q + n)) {
    std::vector<Rational> v = base.values();
    const int x = static_cast<int>(rng() % v.size());
    v[x] += canonical(Rational(static_cast<long>(rng() % 5) - 2, 2));
    const RankPoint p(lat, v);
    const AxiomReport r = check_axioms(p);
    const bool expect = oracle::axioms_hold(ol, bridge::to_rank(p, m));
    EXPECT_EQ(r.ok, expect);
    EXPECT_EQ(r.ok, r.violations.empty());
    for (const AxiomViolation& viol : r.violations) EXPECT_LT(viol.slack, 0);
    if (!expect) ++failures;
  }
  EXPECT_GT(failures, 0);
}

INSTANTIATE_TEST_SUITE_P(Small, Structures,
                         ::testing::Values(std::pair{2, 2}, std::pair{2, 3},
                                           std::pair{3, 2}));

TEST(RankPoint, ConstructionAndEquality) {
  LatticePtr lat = build_lattice(2, 2);
  EXPECT_EQ(code_of([&] { RankPoint(lat, {0, 1}); }),
            ErrorCode::kDimensionMismatch);
  RankPoint a(lat, {0, Rational(2, 4), 1, 1, 1});
  EXPECT_EQ(a[1], Rational(1, 2));
  RankPoint b(build_lattice(2, 2), a.values());
  EXPECT_TRUE(a.same_lattice(b));
  EXPECT_EQ(a, b);
  RankPoint c(build_lattice(3, 1), {0, 1});
  EXPECT_FALSE(a.same_lattice(c));
}

TEST(Denominators, Basics) {
  LatticePtr lat = build_lattice(2, 2);
  RankPoint p(lat, {0, Rational(1, 2), Rational(2, 3), 1, Rational(3, 2)});
  EXPECT_EQ(principal_denominator(p), 6);
  EXPECT_TRUE(is_denominator(p, 12));
  EXPECT_FALSE(is_denominator(p, 4));
  EXPECT_FALSE(is_denominator(p, 0));
  EXPECT_EQ(code_of([&] { independence_report(p, 4); }),
            ErrorCode::kNotADenominator);
  EXPECT_EQ(code_of([&] { classify(p, 5); }), ErrorCode::kNotADenominator);
}

TEST(Classify, UniformAndLoops) {
  LatticePtr lat = build_lattice(2, 3);
  const Classification u = classify(uniform(lat, 2), 1);
  EXPECT_TRUE(u.is_qmatroid);
  EXPECT_EQ(u.loop_space, 0);
  ASSERT_TRUE(u.is_paving.has_value());
  EXPECT_TRUE(*u.is_paving);
  EXPECT_TRUE(u.is_mu_paving);

  // Rank one on everything outside <001>, which is a loop.
  std::vector<Rational> v(lat->size());
  const int loop = lat->index_of_span({{0, 0, 1}});
  for (int x = 0; x < lat->size(); ++x) {
    v[x] = (x == 0 || x == loop) ? 0 : 1;
  }
  const RankPoint p(lat, v);
  ASSERT_TRUE(check_axioms(p).ok);
  const Classification c = classify(p, 1);
  EXPECT_EQ(c.loop_space, loop);
  EXPECT_FALSE(c.is_full);
  ASSERT_TRUE(c.is_paving.has_value());
  EXPECT_TRUE(*c.is_paving);
  EXPECT_TRUE(is_strong_independent(p, lat->index_of_span({{1, 0, 0}})));
  EXPECT_FALSE(is_strong_independent(p, lat->top()));

  const RankPoint half(lat, std::vector<Rational>(lat->size(), 0));
  EXPECT_FALSE(classify(half, 1).is_full);
  RankPoint frac = convex_combination(
      {{{Rational(1, 2), uniform(lat, 1)}, {Rational(1, 2), uniform(lat, 2)}}});
  const Classification f = classify(frac, 2);
  EXPECT_FALSE(f.is_qmatroid);
  EXPECT_FALSE(f.is_paving.has_value());
}

}  // namespace
}  // namespace qpoly
