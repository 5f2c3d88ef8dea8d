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

#include <algorithm>
#include <utility>

#include "qpoly/error.hpp"

namespace qpoly {
namespace {

void require_denominator(const RankPoint& p, const Integer& mu) {
  if (!is_denominator(p, mu)) {
    throw Error(ErrorCode::kNotADenominator,
                mu.get_str() + " is not a denominator of the point");
  }
}

// ok[J] iff mu * rho(J) >= dim J.
std::vector<bool> locally_independent(const RankPoint& p, const Integer& mu) {
  const SubspaceLattice& lat = p.lattice();
  std::vector<bool> ok(lat.size());
  for (int j = 0; j < lat.size(); ++j) {
    ok[j] = Rational(mu) * p[j] >= lat.dim(j);
  }
  return ok;
}

std::vector<bool> independent_flags(const RankPoint& p, const Integer& mu) {
  const SubspaceLattice& lat = p.lattice();
  const std::vector<bool> ok = locally_independent(p, mu);
  std::vector<bool> indep(lat.size(), true);
  for (int i = 0; i < lat.size(); ++i) {
    for (int j : lat.down_set(i)) {
      if (!ok[j]) {
        indep[i] = false;
        break;
      }
    }
  }
  return indep;
}

}  // namespace

RankPoint::RankPoint(LatticePtr lattice, std::vector<Rational> values)
    : lattice_(std::move(lattice)), values_(std::move(values)) {
  if (static_cast<int>(values_.size()) != lattice_->size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "point has " + std::to_string(values_.size()) +
                    " coordinates, lattice has " +
                    std::to_string(lattice_->size()));
  }
  for (Rational& v : values_) v.canonicalize();
}

bool RankPoint::same_lattice(const RankPoint& other) const {
  if (lattice_ == other.lattice_) return true;
  return lattice_->q() == other.lattice_->q() &&
         lattice_->n() == other.lattice_->n() &&
         lattice_->order_digest() == other.lattice_->order_digest();
}

bool RankPoint::operator==(const RankPoint& other) const {
  return same_lattice(other) && values_ == other.values_;
}

AxiomReport check_axioms(const RankPoint& p) {
  const SubspaceLattice& lat = p.lattice();
  AxiomReport report;
  for (int x = 0; x < lat.size(); ++x) {
    if (sgn(p[x]) < 0) {
      report.violations.push_back({"R1", {x}, p[x]});
    }
    const Rational upper = Rational(lat.dim(x)) - p[x];
    if (sgn(upper) < 0) report.violations.push_back({"R1", {x}, upper});
  }
  for (int y = 0; y < lat.size(); ++y) {
    for (int x : lat.lower_covers(y)) {
      const Rational slack = p[y] - p[x];
      if (sgn(slack) < 0) report.violations.push_back({"R2", {x, y}, slack});
    }
  }
  for (int x = 0; x < lat.size(); ++x) {
    for (int y = x + 1; y < lat.size(); ++y) {
      if (lat.comparable(x, y)) continue;
      const auto [m, j] = lat.meet_join(x, y);
      const Rational slack = p[x] + p[y] - p[m] - p[j];
      if (sgn(slack) < 0) {
        report.violations.push_back({"R3", {x, y, m, j}, slack});
      }
    }
  }
  report.ok = report.violations.empty();
  return report;
}

Integer principal_denominator(const RankPoint& p) {
  return denominator_lcm(p.values());
}

bool is_denominator(const RankPoint& p, const Integer& mu) {
  if (mu < 1) return false;
  for (const Rational& v : p.values()) {
    if (!is_integral(Rational(mu) * v)) return false;
  }
  return true;
}

IndependenceReport independence_report(const RankPoint& p, const Integer& mu) {
  require_denominator(p, mu);
  const SubspaceLattice& lat = p.lattice();
  const std::vector<bool> indep = independent_flags(p, mu);
  IndependenceReport report;
  for (int i = 0; i < lat.size(); ++i) {
    if (indep[i]) {
      report.independent.push_back(i);
      continue;
    }
    bool minimal = true;
    for (int h : lat.hyperplanes(i)) {
      if (!indep[h]) {
        minimal = false;
        break;
      }
    }
    if (minimal) report.circuits.push_back(i);
    if (lat.dim(i) == 1) report.loops.push_back(i);
  }
  return report;
}

IndexSet mu_bases(const RankPoint& p, const Integer& mu, int v) {
  require_denominator(p, mu);
  const SubspaceLattice& lat = p.lattice();
  const std::vector<bool> indep = independent_flags(p, mu);
  IndexSet out;
  for (int j : lat.down_set(v)) {
    if (!indep[j]) continue;
    bool maximal = true;
    for (int k : lat.upper_covers(j)) {
      if (lat.leq(k, v) && indep[k]) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(j);
  }
  return out;
}

Closure closure(const RankPoint& p, int a) {
  const SubspaceLattice& lat = p.lattice();
  Closure c;
  c.cl = lat.zero();
  for (int x = lat.grade_begin(1); x < lat.grade_end(1); ++x) {
    if (p[lat.join(a, x)] == p[a]) {
      c.cl_set.push_back(x);
      c.cl = lat.join(c.cl, x);
    }
  }
  return c;
}

IndexSet flats(const RankPoint& p) {
  const SubspaceLattice& lat = p.lattice();
  IndexSet out;
  for (int x = 0; x < lat.size(); ++x) {
    bool flat = true;
    for (int v = lat.grade_begin(1); v < lat.grade_end(1) && flat; ++v) {
      if (lat.leq(v, x)) continue;
      if (!(p[x] < p[lat.join(x, v)])) flat = false;
    }
    if (flat) out.push_back(x);
  }
  return out;
}

IndexSet cyclic_spaces(const RankPoint& p) {
  const SubspaceLattice& lat = p.lattice();
  IndexSet out;
  for (int x = 0; x < lat.size(); ++x) {
    bool cyclic = true;
    for (int h : lat.hyperplanes(x)) {
      const Rational drop = p[x] - p[h];
      if (sgn(drop) == 0) continue;
      bool witness = false;
      if (sgn(drop) > 0) {
        for (int a : lat.atoms(x)) {
          if (!lat.leq(a, h) && drop < p[a]) {
            witness = true;
            break;
          }
        }
      }
      if (!witness) {
        cyclic = false;
        break;
      }
    }
    if (cyclic) out.push_back(x);
  }
  return out;
}

IndexSet cyclic_flats(const RankPoint& p) {
  const IndexSet f = flats(p);
  const IndexSet o = cyclic_spaces(p);
  IndexSet out;
  std::set_intersection(f.begin(), f.end(), o.begin(), o.end(),
                        std::back_inserter(out));
  return out;
}

bool is_strong_independent(const RankPoint& p, int x) {
  return p[x] == p.lattice().dim(x);
}

Classification classify(const RankPoint& p, const Integer& mu) {
  require_denominator(p, mu);
  const SubspaceLattice& lat = p.lattice();
  Classification c;
  c.is_qmatroid = principal_denominator(p) == 1;

  const IndependenceReport rep = independence_report(p, mu);
  c.loop_space = lat.zero();
  for (int l : rep.loops) c.loop_space = lat.join(c.loop_space, l);

  const IndexSet f = flats(p);
  const IndexSet o = cyclic_spaces(p);
  c.is_full = std::binary_search(f.begin(), f.end(), lat.zero()) &&
              std::binary_search(o.begin(), o.end(), lat.top());

  int max_indep = 0;
  for (int i : rep.independent) max_indep = std::max(max_indep, lat.dim(i));
  c.is_mu_paving = true;
  for (int circ : rep.circuits) {
    if (lat.dim(circ) < max_indep) c.is_mu_paving = false;
  }

  if (c.is_qmatroid) {
    const IndependenceReport classical = independence_report(p, Integer(1));
    bool paving = true;
    for (int circ : classical.circuits) {
      if (lat.dim(circ) < p[lat.top()]) paving = false;
    }
    c.is_paving = paving;
  }
  return c;
}

}  // namespace qpoly
