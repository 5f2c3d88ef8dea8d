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

#ifndef QPOLY_INVARIANTS_HPP_
#define QPOLY_INVARIANTS_HPP_

#include <map>
#include <string>
#include <utility>

#include "qpoly/qpm.hpp"
#include "qpoly/rational.hpp"

namespace qpoly {

// Finite sum of c * t^e with rational exponents and integer coefficients.
class TruncatedPuiseux {
 public:
  TruncatedPuiseux() = default;

  void add_term(const Rational& exponent, const Integer& coeff);
  TruncatedPuiseux& operator+=(const TruncatedPuiseux& other);
  TruncatedPuiseux operator+(const TruncatedPuiseux& other) const;
  TruncatedPuiseux operator*(const Integer& scalar) const;

  // Zero coefficients are never stored.
  const std::map<Rational, Integer>& terms() const { return terms_; }
  Integer coefficient(const Rational& exponent) const;
  bool empty() const { return terms_.empty(); }

  bool operator==(const TruncatedPuiseux& o) const { return terms_ == o.terms_; }
  bool operator!=(const TruncatedPuiseux& o) const { return !(*this == o); }

  // Integer exponents first, then fractional ones, each descending, e.g.
  // "t^2 - 7t + 4 + 2t^(1/2)".
  std::string to_string() const;

 private:
  std::map<Rational, Integer> terms_;
};

// c * t^e as a one-term polynomial.
TruncatedPuiseux monomial(const Rational& exponent, const Integer& coeff);

// Moebius value of an interval of rank dim in a subspace lattice over F_q:
// (-1)^dim q^(dim choose 2).
Integer moebius(int dim, int q);

// sum over X of mu(0, X) t^(rho(E) - rho(X)).
TruncatedPuiseux char_puiseux(const RankPoint& p);

enum class ChiBase { kFirst, kSecond };

// Characteristic polynomial of lambda M_{S1} + (1 - lambda) M_{S2} from the
// polynomial of M_{S1} (kFirst) or M_{S2} (kSecond).
TruncatedPuiseux paving_combo_char(const TruncatedPuiseux& chi, int size1,
                                   int size2, int k, int q,
                                   const Rational& lambda, ChiBase base);

Integer eval_at_one(const TruncatedPuiseux& f);

}  // namespace qpoly

#endif  // QPOLY_INVARIANTS_HPP_
