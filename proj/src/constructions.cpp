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

#include "qpoly/constructions.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "qpoly/error.hpp"

namespace qpoly {
namespace {

IndexSet sorted_unique(IndexSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

Integer ceil_div(int a, int b) { return Integer((a + b - 1) / b); }

}  // namespace

RankPoint uniform(const LatticePtr& lattice, int k) {
  if (k < 0 || k > lattice->n()) {
    throw Error(ErrorCode::kOutOfRange,
                "uniform rank must lie in [0, " + std::to_string(lattice->n()) +
                    "]");
  }
  std::vector<Rational> values(lattice->size());
  for (int x = 0; x < lattice->size(); ++x) {
    values[x] = std::min(k, lattice->dim(x));
  }
  return RankPoint(lattice, std::move(values));
}

void validate_paving(const PavingSpec& spec) {
  const SubspaceLattice& lat = *spec.lattice;
  if (spec.k < 1 || spec.k > lat.n() - 1) {
    throw Error(ErrorCode::kOutOfRange, "paving rank must lie in [1, n-1]");
  }
  const IndexSet s = sorted_unique(spec.s);
  if (s.size() != spec.s.size()) {
    throw Error(ErrorCode::kInvalidCollection, "repeated member");
  }
  for (int v : s) {
    if (v < 0 || v >= lat.size() || lat.dim(v) != spec.k) {
      throw Error(ErrorCode::kInvalidCollection,
                  "member is not a " + std::to_string(spec.k) + "-space");
    }
  }
  for (size_t a = 0; a < s.size(); ++a) {
    for (size_t b = a + 1; b < s.size(); ++b) {
      if (lat.dim(lat.meet(s[a], s[b])) > spec.k - 2) {
        throw Error(ErrorCode::kInvalidCollection,
                    "members " + std::to_string(s[a]) + " and " +
                        std::to_string(s[b]) + " meet in dimension > k-2");
      }
    }
  }
}

RankPoint paving(const PavingSpec& spec) {
  validate_paving(spec);
  const SubspaceLattice& lat = *spec.lattice;
  std::vector<Rational> values(lat.size());
  for (int x = 0; x < lat.size(); ++x) {
    values[x] = std::min(spec.k, lat.dim(x));
  }
  for (int v : spec.s) values[v] = spec.k - 1;
  return RankPoint(spec.lattice, std::move(values));
}

IndexSet random_paving_collection(const LatticePtr& lattice, int k,
                                  int max_size, std::mt19937_64& rng) {
  const SubspaceLattice& lat = *lattice;
  std::vector<int> pool;
  for (int x = lat.grade_begin(k); x < lat.grade_end(k); ++x) pool.push_back(x);
  std::shuffle(pool.begin(), pool.end(), rng);
  IndexSet chosen;
  for (int v : pool) {
    if (static_cast<int>(chosen.size()) >= max_size) break;
    bool ok = true;
    for (int w : chosen) {
      if (lat.dim(lat.meet(v, w)) > k - 2) {
        ok = false;
        break;
      }
    }
    if (ok) chosen.push_back(v);
  }
  return sorted_unique(chosen);
}

Integer ComboSpec::mu() const {
  Integer out = 1;
  for (const ComboTerm& t : terms) out = lcm(out, canonical(t.lambda).get_den());
  return out;
}

RankPoint convex_combination(const ComboSpec& spec) {
  if (spec.terms.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "combination has no terms");
  }
  Rational total = 0;
  std::vector<Rational> lambdas;
  for (const ComboTerm& t : spec.terms) {
    lambdas.push_back(canonical(t.lambda));
    if (sgn(lambdas.back()) <= 0) {
      throw Error(ErrorCode::kOutOfRange, "coefficients must be positive");
    }
    if (!t.point.same_lattice(spec.terms[0].point)) {
      throw Error(ErrorCode::kLatticeMismatch,
                  "terms live on different lattices");
    }
    total += lambdas.back();
  }
  if (total != 1) {
    throw Error(ErrorCode::kCoefficientSum,
                "coefficients sum to " + to_string(total));
  }
  const RankPoint& first = spec.terms[0].point;
  std::vector<Rational> values(first.size(), Rational(0));
  for (size_t i = 0; i < spec.terms.size(); ++i) {
    const RankPoint& p = spec.terms[i].point;
    for (int x = 0; x < first.size(); ++x) values[x] += lambdas[i] * p[x];
  }
  return RankPoint(first.lattice_ptr(), std::move(values));
}

PavingComboReport paving_combo_report(const PavingSpec& s1,
                                      const PavingSpec& s2,
                                      const Rational& lambda_in) {
  const Rational lambda = canonical(lambda_in);
  if (s1.lattice->order_digest() != s2.lattice->order_digest()) {
    throw Error(ErrorCode::kLatticeMismatch, "collections on different lattices");
  }
  if (s1.k != s2.k) {
    throw Error(ErrorCode::kRankMismatch, "paving ranks differ");
  }
  if (sgn(lambda) <= 0 || lambda >= 1) {
    throw Error(ErrorCode::kOutOfRange, "lambda must lie in (0, 1)");
  }
  const IndexSet a = sorted_unique(s1.s);
  const IndexSet b = sorted_unique(s2.s);
  IndexSet both;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(both));
  if (!both.empty()) {
    throw Error(ErrorCode::kOverlap, "collections are not disjoint");
  }

  ComboSpec combo;
  combo.terms.push_back({lambda, paving(s1)});
  combo.terms.push_back({1 - lambda, paving(s2)});
  PavingComboReport r{convex_combination(combo), combo.mu(), std::nullopt,
                      {}, {}, {}, {}, {}};

  const SubspaceLattice& lat = *s1.lattice;
  const int k = s1.k;
  const int n = lat.n();
  for (int s = k + 1; s <= n; ++s) {
    if (Rational(k) * r.mu < s) {
      r.s0 = s;
      break;
    }
  }
  IndexSet s12 = a;
  s12.insert(s12.end(), b.begin(), b.end());
  s12 = sorted_unique(s12);

  for (int x = 0; x < lat.size(); ++x) {
    const int d = lat.dim(x);
    if (!r.s0 || d <= *r.s0 - 1) r.predicted_independent.push_back(x);
    if (r.s0 && d == *r.s0) r.predicted_circuits.push_back(x);
  }

  IndexSet f = s12, o = s12, z = s12;
  f.push_back(lat.top());
  o.push_back(lat.zero());
  z.push_back(lat.zero());
  z.push_back(lat.top());
  for (int x = 0; x < lat.size(); ++x) {
    if (lat.dim(x) <= k - 1) f.push_back(x);
    if (lat.dim(x) >= k + 1) o.push_back(x);
  }
  r.predicted_flats = sorted_unique(f);
  r.predicted_cyclic = sorted_unique(o);
  r.predicted_cyclic_flats = sorted_unique(z);
  return r;
}

RankPoint materialize(const GradedRank& g, const LatticePtr& lattice) {
  if (g.q != lattice->q() || g.n != lattice->n()) {
    throw Error(ErrorCode::kLatticeMismatch,
                "profile and lattice parameters differ");
  }
  std::vector<Rational> values(lattice->size());
  for (int x = 0; x < lattice->size(); ++x) values[x] = g.values[lattice->dim(x)];
  return RankPoint(lattice, std::move(values));
}

TwoUniformReport two_uniform_combo_report(int k1, int k2, int n, int q,
                                          const Rational& lambda_in) {
  const Rational lambda = canonical(lambda_in);
  if (!(1 < k1 && k1 < k2 && k2 < n)) {
    throw Error(ErrorCode::kOutOfRange, "need 1 < k1 < k2 < n");
  }
  if (sgn(lambda) <= 0 || lambda >= 1) {
    throw Error(ErrorCode::kOutOfRange, "lambda must lie in (0, 1)");
  }
  TwoUniformReport r;
  r.profile.q = q;
  r.profile.n = n;
  for (int d = 0; d <= n; ++d) {
    if (d <= k1) {
      r.profile.values.emplace_back(d);
    } else if (d <= k2) {
      r.profile.values.push_back(k1 + lambda * (d - k1));
    } else {
      r.profile.values.push_back(k1 + lambda * (k2 - k1));
    }
  }
  r.mu = lambda.get_den();
  r.predicts_all_independent = r.mu >= ceil_div(n, k1) || k1 + k2 >= n;
  r.cyclic_flat_dims.push_back(0);
  for (int d = k1 + 1; d < k2; ++d) r.cyclic_flat_dims.push_back(d);
  r.cyclic_flat_dims.push_back(n);
  return r;
}

FlagReport flag_uniform_combo(int n, int q,
                              const std::vector<Rational>& lambdas_in) {
  std::vector<Rational> lambdas;
  for (const Rational& l : lambdas_in) lambdas.push_back(canonical(l));
  if (n < 5) throw Error(ErrorCode::kOutOfRange, "flag combination needs n >= 5");
  if (static_cast<int>(lambdas.size()) != n - 2) {
    throw Error(ErrorCode::kOutOfRange, "need exactly n-2 coefficients");
  }
  Rational total = 0;
  for (const Rational& l : lambdas) {
    if (sgn(l) <= 0) {
      throw Error(ErrorCode::kOutOfRange, "coefficients must be positive");
    }
    total += l;
  }
  if (total != 1) {
    throw Error(ErrorCode::kCoefficientSum,
                "coefficients sum to " + to_string(total));
  }
  FlagReport r;
  r.profile.q = q;
  r.profile.n = n;
  for (int d = 0; d <= n; ++d) {
    if (d <= 2) {
      r.profile.values.emplace_back(d);
      continue;
    }
    Rational v = 0;
    for (int i = 1; i <= std::min(d - 2, n - 2); ++i) v += (i + 1) * lambdas[i - 1];
    for (int i = d - 1; i <= n - 2; ++i) v += d * lambdas[i - 1];
    r.profile.values.push_back(v);
  }
  r.mu = 1;
  for (const Rational& l : lambdas) r.mu = lcm(r.mu, l.get_den());
  r.independent_up_to = n - 1;
  r.predicts_all_independent = r.mu >= ceil_div(n, 2);
  return r;
}

}  // namespace qpoly
