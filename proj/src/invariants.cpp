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

#include "qpoly/invariants.hpp"

#include <utility>
#include <vector>

#include "qpoly/error.hpp"

namespace qpoly {

void TruncatedPuiseux::add_term(const Rational& exponent,
                                const Integer& coeff) {
  if (coeff == 0) return;
  Rational e = exponent;
  e.canonicalize();
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, coeff);
    return;
  }
  it->second += coeff;
  if (it->second == 0) terms_.erase(it);
}

TruncatedPuiseux& TruncatedPuiseux::operator+=(const TruncatedPuiseux& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

TruncatedPuiseux TruncatedPuiseux::operator+(
    const TruncatedPuiseux& other) const {
  TruncatedPuiseux out = *this;
  out += other;
  return out;
}

TruncatedPuiseux TruncatedPuiseux::operator*(const Integer& scalar) const {
  TruncatedPuiseux out;
  for (const auto& [e, c] : terms_) out.add_term(e, c * scalar);
  return out;
}

Integer TruncatedPuiseux::coefficient(const Rational& exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Integer(0) : it->second;
}

std::string TruncatedPuiseux::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Rational, Integer>> order;
  for (bool integral : {true, false}) {
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      if (is_integral(it->first) == integral) order.push_back(*it);
    }
  }
  std::string out;
  bool first = true;
  for (const auto& [e, c] : order) {
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    const Integer mag = abs(c);
    if (sgn(e) == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str();
    out += "t";
    if (e == 1) continue;
    if (is_integral(e)) {
      out += "^" + e.get_num().get_str();
    } else {
      out += "^(" + qpoly::to_string(e) + ")";
    }
  }
  return out;
}

TruncatedPuiseux monomial(const Rational& exponent, const Integer& coeff) {
  TruncatedPuiseux f;
  f.add_term(exponent, coeff);
  return f;
}

Integer moebius(int dim, int q) {
  if (dim < 0) throw Error(ErrorCode::kOutOfRange, "dimension must be >= 0");
  Integer v;
  const long exponent = static_cast<long>(dim) * (dim - 1) / 2;
  mpz_ui_pow_ui(v.get_mpz_t(), static_cast<unsigned long>(q),
                static_cast<unsigned long>(exponent));
  return dim % 2 == 0 ? v : Integer(-v);
}

TruncatedPuiseux char_puiseux(const RankPoint& p) {
  const SubspaceLattice& lat = p.lattice();
  const Rational& top = p[lat.top()];
  TruncatedPuiseux chi;
  for (int x = 0; x < lat.size(); ++x) {
    chi.add_term(top - p[x], moebius(lat.dim(x), lat.q()));
  }
  return chi;
}

TruncatedPuiseux paving_combo_char(const TruncatedPuiseux& chi, int size1,
                                   int size2, int k, int q,
                                   const Rational& lambda_in, ChiBase base) {
  const Rational lambda = canonical(lambda_in);
  const Integer w = moebius(k, q);
  const Rational one_minus = 1 - lambda;
  TruncatedPuiseux delta;
  if (base == ChiBase::kFirst) {
    delta.add_term(lambda, size1);
    delta.add_term(Rational(1), -size1);
    delta.add_term(one_minus, size2);
    delta.add_term(Rational(0), -size2);
  } else {
    delta.add_term(lambda, size1);
    delta.add_term(Rational(0), -size1);
    delta.add_term(one_minus, size2);
    delta.add_term(Rational(1), -size2);
  }
  return chi + delta * w;
}

Integer eval_at_one(const TruncatedPuiseux& f) {
  Integer s = 0;
  for (const auto& [e, c] : f.terms()) s += c;
  return s;
}

}  // namespace qpoly
