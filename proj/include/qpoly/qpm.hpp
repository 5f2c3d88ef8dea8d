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

#ifndef QPOLY_QPM_HPP_
#define QPOLY_QPM_HPP_

#include <optional>
#include <string>
#include <vector>

#include "qpoly/lattice.hpp"
#include "qpoly/rational.hpp"

namespace qpoly {

// Sorted list of lattice indices.
using IndexSet = std::vector<int>;

// A rational value per lattice index; read both as a candidate rank function
// and as a point of the polytope.
class RankPoint {
 public:
  RankPoint(LatticePtr lattice, std::vector<Rational> values);

  const SubspaceLattice& lattice() const { return *lattice_; }
  const LatticePtr& lattice_ptr() const { return lattice_; }
  const std::vector<Rational>& values() const { return values_; }
  const Rational& operator[](int i) const { return values_[i]; }
  int size() const { return static_cast<int>(values_.size()); }

  bool same_lattice(const RankPoint& other) const;
  bool operator==(const RankPoint& other) const;
  bool operator!=(const RankPoint& other) const { return !(*this == other); }

 private:
  LatticePtr lattice_;
  std::vector<Rational> values_;
};

struct AxiomViolation {
  std::string axiom;         // "R1", "R2" or "R3"
  std::vector<int> witness;  // lattice indices involved
  Rational slack;            // rhs - lhs of the violated inequality, negative
};

struct AxiomReport {
  bool ok = true;
  std::vector<AxiomViolation> violations;
};

AxiomReport check_axioms(const RankPoint& p);

Integer principal_denominator(const RankPoint& p);

// True iff mu >= 1 and mu * v_X is integral for every X.
bool is_denominator(const RankPoint& p, const Integer& mu);

struct IndependenceReport {
  IndexSet independent;
  IndexSet circuits;
  IndexSet loops;
};

// Errors: NotADenominator.
IndependenceReport independence_report(const RankPoint& p, const Integer& mu);

// Inclusion-maximal mu-independent subspaces of v. Errors: NotADenominator.
IndexSet mu_bases(const RankPoint& p, const Integer& mu, int v);

struct Closure {
  IndexSet cl_set;  // atoms x with rho(A + x) = rho(A)
  int cl = 0;       // their sum
};

Closure closure(const RankPoint& p, int a);

IndexSet flats(const RankPoint& p);
IndexSet cyclic_spaces(const RankPoint& p);
IndexSet cyclic_flats(const RankPoint& p);

// rho(X) = dim X.
bool is_strong_independent(const RankPoint& p, int x);

struct Classification {
  bool is_qmatroid = false;
  int loop_space = 0;
  bool is_full = false;
  std::optional<bool> is_paving;  // only for integral points
  bool is_mu_paving = false;
};

// Errors: NotADenominator.
Classification classify(const RankPoint& p, const Integer& mu);

}  // namespace qpoly

#endif  // QPOLY_QPM_HPP_
