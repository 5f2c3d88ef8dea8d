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

#ifndef QPOLY_CONSTRUCTIONS_HPP_
#define QPOLY_CONSTRUCTIONS_HPP_

#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "qpoly/lattice.hpp"
#include "qpoly/qpm.hpp"
#include "qpoly/rational.hpp"

namespace qpoly {

// rho(X) = min(k, dim X). Errors: OutOfRange.
RankPoint uniform(const LatticePtr& lattice, int k);

struct PavingSpec {
  LatticePtr lattice;
  int k = 1;
  IndexSet s;  // k-dimensional subspaces pairwise meeting in dim <= k - 2
};

// Errors: InvalidCollection, OutOfRange.
void validate_paving(const PavingSpec& spec);

// rho(X) = k - 1 on S, min(dim X, k) elsewhere. Errors as validate_paving.
RankPoint paving(const PavingSpec& spec);

// Greedy random admissible collection of k-spaces, at most max_size members.
IndexSet random_paving_collection(const LatticePtr& lattice, int k,
                                  int max_size, std::mt19937_64& rng);

struct ComboTerm {
  Rational lambda;
  RankPoint point;
};

struct ComboSpec {
  std::vector<ComboTerm> terms;

  // lcm of the reduced denominators of the coefficients.
  Integer mu() const;
};

// Sum of lambda_i * rho_i. Errors: CoefficientSum, LatticeMismatch,
// OutOfRange (a coefficient <= 0), InvalidArgument (no terms).
RankPoint convex_combination(const ComboSpec& spec);

struct PavingComboReport {
  RankPoint point;
  Integer mu;
  std::optional<int> s0;  // empty when every dimension stays independent
  IndexSet predicted_independent;
  IndexSet predicted_circuits;
  IndexSet predicted_flats;
  IndexSet predicted_cyclic;
  IndexSet predicted_cyclic_flats;
};

// lambda * M_{S1} + (1 - lambda) * M_{S2}. Errors: Overlap, RankMismatch,
// LatticeMismatch, OutOfRange (lambda outside (0, 1)), InvalidCollection.
PavingComboReport paving_combo_report(const PavingSpec& s1,
                                      const PavingSpec& s2,
                                      const Rational& lambda);

// A rank function depending only on dimension: values[d] = rho(X) for
// dim X = d.
struct GradedRank {
  int q = 0;
  int n = 0;
  std::vector<Rational> values;
};

// Materializes a graded rank function on a lattice with matching (q, n).
RankPoint materialize(const GradedRank& g, const LatticePtr& lattice);

struct TwoUniformReport {
  GradedRank profile;  // (1 - lambda) U_{k1,n} + lambda U_{k2,n}
  Integer mu;
  // Sufficient condition only: mu >= ceil(n / k1) or k1 + k2 >= n.
  bool predicts_all_independent = false;
  // Dimensions of predicted cyclic flats: 0, n and k1 < d < k2.
  std::vector<int> cyclic_flat_dims;
};

// Errors: OutOfRange.
TwoUniformReport two_uniform_combo_report(int k1, int k2, int n, int q,
                                          const Rational& lambda);

struct FlagReport {
  GradedRank profile;  // sum_i lambda_i U_{i+1,n}
  Integer mu;          // lcm of the coefficient denominators
  int independent_up_to = 0;  // dims <= this are predicted independent
  bool predicts_all_independent = false;  // mu >= ceil(n / 2)
};

// Errors: OutOfRange, CoefficientSum.
FlagReport flag_uniform_combo(int n, int q,
                              const std::vector<Rational>& lambdas);

}  // namespace qpoly

#endif  // QPOLY_CONSTRUCTIONS_HPP_
