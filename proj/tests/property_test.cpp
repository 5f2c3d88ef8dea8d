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

#include <gtest/gtest.h>

#include <random>

#include "properties.hpp"
#include "qpoly/lattice.hpp"

namespace qpoly {
namespace {

class PavingComboProperty : public ::testing::TestWithParam<int> {};

TEST_P(PavingComboProperty, ClosedFormsMatchOracle) {
  std::mt19937_64 rng(1000 + GetParam());
  const std::vector<LatticePtr> lats = {build_lattice(2, 3), build_lattice(2, 4)};
  for (int i = 0; i < 10; ++i) {
    const props::Instance inst = props::random_instance(lats, rng);
    SCOPED_TRACE("n=" + std::to_string(inst.s1.lattice->n()) +
                 " k=" + std::to_string(inst.s1.k) +
                 " lambda=" + to_string(inst.lambda));
    EXPECT_TRUE(props::check_instance(inst).empty());
    EXPECT_TRUE(props::independents_survive(inst));
    const PavingComboReport r = paving_combo_report(inst.s1, inst.s2, inst.lambda);
    EXPECT_TRUE(props::global_invariants(r.point).empty());
    EXPECT_TRUE(classify(r.point, r.mu).is_mu_paving);
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, PavingComboProperty, ::testing::Range(0, 4));

TEST(PavingComboProperty, ThreeSpacesOverF3) {
  std::mt19937_64 rng(77);
  const std::vector<LatticePtr> lats = {build_lattice(3, 3)};
  for (int i = 0; i < 5; ++i) {
    const props::Instance inst = props::random_instance(lats, rng);
    EXPECT_TRUE(props::check_instance(inst).empty());
  }
}

}  // namespace
}  // namespace qpoly
