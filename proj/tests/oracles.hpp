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

// Brute-force reference implementations used to cross-check the library.
// Subspaces are bitmasks over the q^n vectors of F_q^n (so q^n <= 64), and
// field arithmetic is plain polynomial arithmetic modulo a fixed modulus.

#ifndef QPOLY_TESTS_ORACLES_HPP_
#define QPOLY_TESTS_ORACLES_HPP_

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

namespace oracle {

using Rational = mpq_class;
using Integer = mpz_class;
using Mask = std::uint64_t;

inline int popcount(Mask m) { return __builtin_popcountll(m); }

// GF(p^e) with elements encoded by base-p coefficient digits.
class Field {
 public:
  // modulus: monic, constant term first; {0, 1} for a prime field.
  Field(int p, std::vector<int> modulus) : p_(p), mod_(std::move(modulus)) {
    e_ = static_cast<int>(mod_.size()) - 1;
    q_ = 1;
    for (int i = 0; i < e_; ++i) q_ *= p_;
  }

  int q() const { return q_; }
  int p() const { return p_; }

  std::vector<int> digits(int a) const {
    std::vector<int> d(e_);
    for (int i = 0; i < e_; ++i) {
      d[i] = a % p_;
      a /= p_;
    }
    return d;
  }

  int encode(const std::vector<int>& d) const {
    int a = 0;
    for (int i = e_ - 1; i >= 0; --i) a = a * p_ + d[i];
    return a;
  }

  int add(int a, int b) const {
    std::vector<int> x = digits(a), y = digits(b);
    for (int i = 0; i < e_; ++i) x[i] = (x[i] + y[i]) % p_;
    return encode(x);
  }

  int neg(int a) const {
    std::vector<int> x = digits(a);
    for (int i = 0; i < e_; ++i) x[i] = (p_ - x[i]) % p_;
    return encode(x);
  }

  int mul(int a, int b) const {
    std::vector<int> x = digits(a), y = digits(b);
    std::vector<int> prod(2 * e_, 0);
    for (int i = 0; i < e_; ++i) {
      for (int j = 0; j < e_; ++j) {
        prod[i + j] = (prod[i + j] + x[i] * y[j]) % p_;
      }
    }
    for (int deg = 2 * e_ - 1; deg >= e_; --deg) {
      const int c = prod[deg];
      if (c == 0) continue;
      for (int i = 0; i <= e_; ++i) {
        int& slot = prod[deg - e_ + i];
        slot = ((slot - c * mod_[i]) % p_ + p_) % p_;
      }
    }
    prod.resize(e_);
    return encode(prod);
  }

  int inv(int a) const {
    for (int b = 1; b < q_; ++b) {
      if (mul(a, b) == 1) return b;
    }
    throw std::logic_error("zero has no inverse");
  }

 private:
  int p_;
  int e_;
  int q_;
  std::vector<int> mod_;
};

inline Field prime_field(int p) { return Field(p, {0, 1}); }

// Rank of a matrix over a field, by plain elimination.
inline int rank(const Field& f, std::vector<std::vector<int>> m) {
  int r = 0;
  const int cols = m.empty() ? 0 : static_cast<int>(m[0].size());
  for (int c = 0; c < cols && r < static_cast<int>(m.size()); ++c) {
    int piv = -1;
    for (int i = r; i < static_cast<int>(m.size()); ++i) {
      if (m[i][c] != 0) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    std::swap(m[r], m[piv]);
    const int iv = f.inv(m[r][c]);
    for (int i = 0; i < static_cast<int>(m.size()); ++i) {
      if (i == r || m[i][c] == 0) continue;
      const int factor = f.neg(f.mul(m[i][c], iv));
      for (int j = 0; j < cols; ++j) {
        m[i][j] = f.add(m[i][j], f.mul(factor, m[r][j]));
      }
    }
    ++r;
  }
  return r;
}

// Rank over Q.
inline int rational_rank(std::vector<std::vector<Rational>> m) {
  int r = 0;
  const int cols = m.empty() ? 0 : static_cast<int>(m[0].size());
  for (int c = 0; c < cols && r < static_cast<int>(m.size()); ++c) {
    int piv = -1;
    for (int i = r; i < static_cast<int>(m.size()); ++i) {
      if (m[i][c] != 0) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    std::swap(m[r], m[piv]);
    for (int i = r + 1; i < static_cast<int>(m.size()); ++i) {
      if (m[i][c] == 0) continue;
      const Rational factor = m[i][c] / m[r][c];
      for (int j = c; j < cols; ++j) m[i][j] -= factor * m[r][j];
    }
    ++r;
  }
  return r;
}

inline int affine_rank(const std::vector<std::vector<Rational>>& pts) {
  if (pts.empty()) return -1;
  std::vector<std::vector<Rational>> diffs;
  for (size_t i = 1; i < pts.size(); ++i) {
    std::vector<Rational> d(pts[i].size());
    for (size_t j = 0; j < d.size(); ++j) d[j] = pts[i][j] - pts[0][j];
    diffs.push_back(std::move(d));
  }
  return rational_rank(diffs);
}

// All subspaces of F_q^n as vector bitmasks. Vector v has coordinates
// (v / q^j) % q.
class Lattice {
 public:
  Lattice(Field f, int n) : f_(std::move(f)), n_(n) {
    size_ = 1;
    for (int i = 0; i < n_; ++i) size_ *= f_.q();
    if (size_ > 64) throw std::logic_error("oracle lattice too large");
    std::set<Mask> seen = {Mask{1}};
    std::vector<Mask> frontier = {Mask{1}};
    while (!frontier.empty()) {
      std::vector<Mask> next;
      for (Mask s : frontier) {
        for (int v = 1; v < size_; ++v) {
          if (s >> v & 1) continue;
          const Mask t = span(s | (Mask{1} << v));
          if (seen.insert(t).second) next.push_back(t);
        }
      }
      frontier = std::move(next);
    }
    subspaces_.assign(seen.begin(), seen.end());
  }

  const Field& field() const { return f_; }
  int q() const { return f_.q(); }
  int n() const { return n_; }
  const std::vector<Mask>& subspaces() const { return subspaces_; }

  int dim(Mask s) const {
    int c = popcount(s);
    int d = 0;
    while (c > 1) {
      c /= q();
      ++d;
    }
    return d;
  }

  int encode(const std::vector<int>& coords) const {
    int v = 0;
    for (int j = n_ - 1; j >= 0; --j) v = v * q() + coords[j];
    return v;
  }

  std::vector<int> coords(int v) const {
    std::vector<int> c(n_);
    for (int j = 0; j < n_; ++j) {
      c[j] = v % q();
      v /= q();
    }
    return c;
  }

  int vadd(int a, int b) const {
    std::vector<int> x = coords(a), y = coords(b);
    for (int j = 0; j < n_; ++j) x[j] = f_.add(x[j], y[j]);
    return encode(x);
  }

  int vscale(int c, int a) const {
    std::vector<int> x = coords(a);
    for (int j = 0; j < n_; ++j) x[j] = f_.mul(c, x[j]);
    return encode(x);
  }

  int dot(int a, int b) const {
    std::vector<int> x = coords(a), y = coords(b);
    int s = 0;
    for (int j = 0; j < n_; ++j) s = f_.add(s, f_.mul(x[j], y[j]));
    return s;
  }

  Mask span(Mask gens) const {
    Mask s = 1;
    for (int v = 1; v < size_; ++v) {
      if (!(gens >> v & 1) || (s >> v & 1)) continue;
      Mask t = s;
      for (int w = 0; w < size_; ++w) {
        if (!(s >> w & 1)) continue;
        for (int c = 1; c < q(); ++c) t |= Mask{1} << vadd(w, vscale(c, v));
      }
      s = t;
    }
    return s;
  }

  Mask span_rows(const std::vector<std::vector<int>>& rows) const {
    Mask g = 0;
    for (const auto& r : rows) g |= Mask{1} << encode(r);
    return span(g);
  }

  Mask join(Mask a, Mask b) const { return span(a | b); }
  static Mask meet(Mask a, Mask b) { return a & b; }
  static bool leq(Mask a, Mask b) { return (a & ~b) == 0; }

  Mask perp(Mask s) const {
    Mask out = 0;
    for (int v = 0; v < size_; ++v) {
      bool ok = true;
      for (int w = 0; w < size_ && ok; ++w) {
        if ((s >> w & 1) && dot(v, w) != 0) ok = false;
      }
      if (ok) out |= Mask{1} << v;
    }
    return out;
  }

  Mask top() const { return size_ == 64 ? ~Mask{0} : (Mask{1} << size_) - 1; }

  std::vector<Mask> of_dim(int d) const {
    std::vector<Mask> out;
    for (Mask s : subspaces_) {
      if (dim(s) == d) out.push_back(s);
    }
    return out;
  }

  std::vector<Mask> below(Mask x) const {
    std::vector<Mask> out;
    for (Mask s : subspaces_) {
      if (leq(s, x)) out.push_back(s);
    }
    return out;
  }

 private:
  Field f_;
  int n_;
  int size_;
  std::vector<Mask> subspaces_;
};

using Rank = std::map<Mask, Rational>;

inline bool axioms_hold(const Lattice& l, const Rank& rho) {
  for (Mask x : l.subspaces()) {
    const Rational& r = rho.at(x);
    if (r < 0 || r > l.dim(x)) return false;
    for (Mask y : l.subspaces()) {
      if (Lattice::leq(x, y) && r > rho.at(y)) return false;
      if (rho.at(l.join(x, y)) + rho.at(Lattice::meet(x, y)) > r + rho.at(y)) {
        return false;
      }
    }
  }
  return true;
}

inline bool independent(const Lattice& l, const Rank& rho, const Integer& mu,
                        Mask i) {
  for (Mask j : l.below(i)) {
    if (mu * rho.at(j) < l.dim(j)) return false;
  }
  return true;
}

inline std::set<Mask> independent_spaces(const Lattice& l, const Rank& rho,
                                         const Integer& mu) {
  std::set<Mask> out;
  for (Mask x : l.subspaces()) {
    if (independent(l, rho, mu, x)) out.insert(x);
  }
  return out;
}

inline std::set<Mask> circuits(const Lattice& l, const Rank& rho,
                               const Integer& mu) {
  std::set<Mask> out;
  for (Mask x : l.subspaces()) {
    if (independent(l, rho, mu, x)) continue;
    bool minimal = true;
    for (Mask j : l.below(x)) {
      if (j != x && !independent(l, rho, mu, j)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.insert(x);
  }
  return out;
}

inline std::set<Mask> flats(const Lattice& l, const Rank& rho) {
  std::set<Mask> out;
  for (Mask x : l.subspaces()) {
    bool flat = true;
    for (Mask a : l.of_dim(1)) {
      if (Lattice::leq(a, x)) continue;
      if (rho.at(l.join(x, a)) <= rho.at(x)) {
        flat = false;
        break;
      }
    }
    if (flat) out.insert(x);
  }
  return out;
}

inline std::set<Mask> cyclic_spaces(const Lattice& l, const Rank& rho) {
  std::set<Mask> out;
  for (Mask x : l.subspaces()) {
    bool cyclic = true;
    const int d = l.dim(x);
    for (Mask h : l.below(x)) {
      if (l.dim(h) != d - 1) continue;
      const Rational gap = rho.at(x) - rho.at(h);
      if (gap == 0) continue;
      bool witness = false;
      for (Mask a : l.of_dim(1)) {
        if (Lattice::leq(a, x) && !Lattice::leq(a, h) && gap < rho.at(a)) {
          witness = true;
          break;
        }
      }
      if (!(gap > 0 && witness)) {
        cyclic = false;
        break;
      }
    }
    if (cyclic) out.insert(x);
  }
  return out;
}

// Moebius function from the defining recursion.
inline std::map<Mask, Integer> moebius_from_zero(const Lattice& l) {
  std::map<Mask, Integer> mu;
  std::vector<Mask> order = l.subspaces();
  std::sort(order.begin(), order.end(), [&](Mask a, Mask b) {
    return l.dim(a) < l.dim(b) || (l.dim(a) == l.dim(b) && a < b);
  });
  for (Mask x : order) {
    if (x == 1) {
      mu[x] = 1;
      continue;
    }
    Integer s = 0;
    for (Mask y : l.below(x)) {
      if (y != x) s += mu.at(y);
    }
    mu[x] = -s;
  }
  return mu;
}

inline std::map<Rational, Integer> char_poly(const Lattice& l,
                                             const Rank& rho) {
  std::map<Rational, Integer> out;
  const std::map<Mask, Integer> mu = moebius_from_zero(l);
  const Rational& top = rho.at(l.top());
  for (Mask x : l.subspaces()) {
    out[top - rho.at(x)] += mu.at(x);
  }
  for (auto it = out.begin(); it != out.end();) {
    it = it->second == 0 ? out.erase(it) : std::next(it);
  }
  return out;
}

// Integer points of the polytope, as maps subspace -> value.
inline std::vector<Rank> integer_points(const Lattice& l) {
  std::vector<Mask> order = l.subspaces();
  std::sort(order.begin(), order.end(), [&](Mask a, Mask b) {
    return l.dim(a) < l.dim(b) || (l.dim(a) == l.dim(b) && a < b);
  });
  std::vector<Rank> out;
  Rank cur;
  std::vector<int> vals(order.size(), 0);
  // Depth-first with monotonicity pruning, full axiom check at the leaves.
  std::vector<size_t> stack;
  auto rec = [&](auto&& self, size_t i) -> void {
    if (i == order.size()) {
      if (axioms_hold(l, cur)) out.push_back(cur);
      return;
    }
    const Mask x = order[i];
    for (int v = 0; v <= l.dim(x); ++v) {
      bool ok = true;
      for (size_t j = 0; j < i && ok; ++j) {
        if (Lattice::leq(order[j], x) && cur.at(order[j]) > v) ok = false;
      }
      if (!ok) continue;
      cur[x] = v;
      self(self, i + 1);
    }
    cur.erase(x);
  };
  rec(rec, 0);
  return out;
}

// Linear inequalities a . v <= b over the nonzero subspaces, written
// straight from the axioms (all pairs, nothing filtered).
struct Inequality {
  std::vector<Rational> a;
  Rational b;
};

inline std::vector<Inequality> axiom_inequalities(
    const Lattice& l, const std::vector<Mask>& coords) {
  std::map<Mask, int> pos;
  for (size_t i = 0; i < coords.size(); ++i) pos[coords[i]] = static_cast<int>(i);
  const size_t d = coords.size();
  auto add = [&](std::vector<Rational>& a, Mask x, int c) {
    auto it = pos.find(x);
    if (it != pos.end()) a[it->second] += c;
  };
  std::vector<Inequality> out;
  for (Mask x : coords) {
    std::vector<Rational> a(d);
    add(a, x, 1);
    out.push_back({a, l.dim(x)});
    std::vector<Rational> b(d);
    add(b, x, -1);
    out.push_back({b, 0});
  }
  for (Mask x : coords) {
    for (Mask y : coords) {
      if (x != y && Lattice::leq(x, y)) {
        std::vector<Rational> a(d);
        add(a, x, 1);
        add(a, y, -1);
        out.push_back({a, 0});
      }
    }
  }
  for (size_t i = 0; i < d; ++i) {
    for (size_t j = i + 1; j < d; ++j) {
      const Mask x = coords[i], y = coords[j];
      std::vector<Rational> a(d);
      add(a, l.join(x, y), 1);
      add(a, Lattice::meet(x, y), 1);
      add(a, x, -1);
      add(a, y, -1);
      out.push_back({a, 0});
    }
  }
  return out;
}

inline Rational dot(const std::vector<Rational>& a,
                    const std::vector<Rational>& v) {
  Rational s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * v[i];
  return s;
}

// Solves the square system m x = rhs; false if singular.
inline bool solve(std::vector<std::vector<Rational>> m, std::vector<Rational> rhs,
                  std::vector<Rational>* x) {
  const size_t d = m.size();
  for (size_t c = 0; c < d; ++c) {
    size_t piv = c;
    while (piv < d && m[piv][c] == 0) ++piv;
    if (piv == d) return false;
    std::swap(m[c], m[piv]);
    std::swap(rhs[c], rhs[piv]);
    for (size_t i = 0; i < d; ++i) {
      if (i == c || m[i][c] == 0) continue;
      const Rational f = m[i][c] / m[c][c];
      for (size_t j = c; j < d; ++j) m[i][j] -= f * m[c][j];
      rhs[i] -= f * rhs[c];
    }
  }
  x->assign(d, 0);
  for (size_t i = 0; i < d; ++i) (*x)[i] = rhs[i] / m[i][i];
  return true;
}

// Vertices by trying every d-subset of inequalities as a basis.
inline std::set<std::vector<Rational>> vertices(
    const std::vector<Inequality>& rows, size_t d) {
  std::set<std::vector<Rational>> out;
  std::vector<size_t> pick(d);
  for (size_t i = 0; i < d; ++i) pick[i] = i;
  const size_t r = rows.size();
  if (r < d) return out;
  while (true) {
    std::vector<std::vector<Rational>> m;
    std::vector<Rational> rhs;
    for (size_t i : pick) {
      m.push_back(rows[i].a);
      rhs.push_back(rows[i].b);
    }
    std::vector<Rational> x;
    if (solve(m, rhs, &x)) {
      bool feasible = true;
      for (const Inequality& row : rows) {
        if (dot(row.a, x) > row.b) {
          feasible = false;
          break;
        }
      }
      if (feasible) out.insert(x);
    }
    int i = static_cast<int>(d) - 1;
    while (i >= 0 && pick[i] == r - d + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (size_t j = i + 1; j < d; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

// Face counts by dimension, from Galois-closed vertex subsets.
inline std::vector<long> f_vector(const std::vector<Inequality>& rows,
                                  const std::vector<std::vector<Rational>>& verts) {
  const size_t nv = verts.size();
  if (nv > 20) throw std::logic_error("too many vertices for the face oracle");
  std::vector<Mask> tight_verts(rows.size(), 0);
  for (size_t r = 0; r < rows.size(); ++r) {
    for (size_t v = 0; v < nv; ++v) {
      if (dot(rows[r].a, verts[v]) == rows[r].b) tight_verts[r] |= Mask{1} << v;
    }
  }
  const Mask all = (Mask{1} << nv) - 1;
  const int dim = affine_rank(verts);
  std::vector<long> f(dim, 0);
  for (Mask s = 1; s < all; ++s) {
    Mask closure = all;
    for (size_t r = 0; r < rows.size(); ++r) {
      if ((s & tight_verts[r]) == s) closure &= tight_verts[r];
    }
    if (closure != s) continue;
    std::vector<std::vector<Rational>> pts;
    for (size_t v = 0; v < nv; ++v) {
      if (s >> v & 1) pts.push_back(verts[v]);
    }
    ++f[affine_rank(pts)];
  }
  return f;
}

// Rank of an n x m matrix given as rows, over a field.
inline int matrix_rank(const Field& f, const std::vector<std::vector<int>>& m) {
  return rank(f, m);
}

}  // namespace oracle

#endif  // QPOLY_TESTS_ORACLES_HPP_
