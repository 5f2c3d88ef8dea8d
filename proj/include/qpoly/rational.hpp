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

#ifndef QPOLY_RATIONAL_HPP_
#define QPOLY_RATIONAL_HPP_

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace qpoly {

using Integer = mpz_class;
using Rational = mpq_class;

// Accepts "p", "-p" or "p/q"; the result is canonicalized.
Rational parse_rational(std::string_view text);

// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

// Copy in lowest terms with a positive denominator.
Rational canonical(Rational r);

bool is_integral(const Rational& r);

Integer lcm(const Integer& a, const Integer& b);

// Least common multiple of all reduced denominators; 1 for an empty list.
Integer denominator_lcm(const std::vector<Rational>& values);

// Exact rank over Q; the input is not modified.
int rational_rank(std::vector<std::vector<Rational>> rows);

}  // namespace qpoly

#endif  // QPOLY_RATIONAL_HPP_
