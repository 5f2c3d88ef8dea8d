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

// Double description for {x : A x <= b}. The polytope is homogenized to the
// cone {(y0, x) : y0 >= 0, b y0 - A x >= 0}; extreme rays with y0 > 0 are the
// vertices. Integer arithmetic runs in int64 first and restarts with GMP
// integers on overflow.

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "qpoly/error.hpp"
#include "qpoly/polytope.hpp"

namespace qpoly {
namespace {

struct Overflow {};

struct I64 {
  using T = std::int64_t;
  static T from(const Integer& z) {
    if (!z.fits_slong_p()) throw Overflow{};
    return z.get_si();
  }
  static T mul(T a, T b) {
    T r;
    if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
    return r;
  }
  static T add(T a, T b) {
    T r;
    if (__builtin_add_overflow(a, b, &r)) throw Overflow{};
    return r;
  }
  static T sub(T a, T b) {
    T r;
    if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
    return r;
  }
  static T gcd(T a, T b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
      T t = a % b;
      a = b;
      b = t;
    }
    return a;
  }
  static T div(T a, T b) { return a / b; }
  static int sign(T a) { return (a > 0) - (a < 0); }
  static Integer to_integer(T a) { return Integer(static_cast<long>(a)); }
};

struct Big {
  using T = Integer;
  static T from(const Integer& z) { return z; }
  static T mul(const T& a, const T& b) { return a * b; }
  static T add(const T& a, const T& b) { return a + b; }
  static T sub(const T& a, const T& b) { return a - b; }
  static T gcd(const T& a, const T& b) {
    T r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
  }
  static T div(const T& a, const T& b) { return a / b; }
  static int sign(const T& a) { return sgn(a); }
  static Integer to_integer(const T& a) { return a; }
};

using Words = std::vector<std::uint64_t>;

int popcount_and(const Words& a, const Words& b) {
  int c = 0;
  for (size_t w = 0; w < a.size(); ++w) c += __builtin_popcountll(a[w] & b[w]);
  return c;
}

template <class N>
void normalize(std::vector<typename N::T>& v) {
  typename N::T g = 0;
  for (const auto& x : v) g = N::gcd(g, x);
  if (N::sign(g) == 0) return;
  for (auto& x : v) x = N::div(x, g);
}

template <class N>
typename N::T dot(const std::vector<typename N::T>& a,
                  const std::vector<typename N::T>& b) {
  typename N::T s = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    if (N::sign(a[i]) == 0 || N::sign(b[i]) == 0) continue;
    s = N::add(s, N::mul(a[i], b[i]));
  }
  return s;
}

// Rank of the selected rows, stopping once it reaches target.
template <class N>
int rank_at_least(const std::vector<std::vector<typename N::T>>& rows,
                  const std::vector<int>& which, int target) {
  using T = typename N::T;
  std::vector<std::vector<T>> basis;
  std::vector<int> pivot_col;
  for (int r : which) {
    std::vector<T> v = rows[r];
    for (size_t b = 0; b < basis.size(); ++b) {
      const int c = pivot_col[b];
      if (N::sign(v[c]) == 0) continue;
      const T pv = basis[b][c];
      const T f = v[c];
      for (size_t k = 0; k < v.size(); ++k) {
        v[k] = N::sub(N::mul(pv, v[k]), N::mul(f, basis[b][k]));
      }
      normalize<N>(v);
    }
    int c = -1;
    for (size_t k = 0; k < v.size(); ++k) {
      if (N::sign(v[k]) != 0) {
        c = static_cast<int>(k);
        break;
      }
    }
    if (c < 0) continue;
    basis.push_back(std::move(v));
    pivot_col.push_back(c);
    if (static_cast<int>(basis.size()) >= target) break;
  }
  return static_cast<int>(basis.size());
}

struct IntSystem {
  int d = 0;                               // cone dimension (dim + 1)
  std::vector<std::vector<Integer>> rows;  // g . (y0, x) >= 0
};

IntSystem homogenize(const HRepresentation& h) {
  IntSystem s;
  s.d = h.dim + 1;
  std::vector<Integer> y0(s.d, 0);
  y0[0] = 1;
  s.rows.push_back(std::move(y0));
  for (const HRow& row : h.rows) {
    std::vector<Rational> g(s.d);
    g[0] = row.rhs;
    for (int k = 0; k < h.dim; ++k) g[k + 1] = -row.normal[k];
    Integer den = 1;
    for (const Rational& x : g) den = lcm(den, x.get_den());
    std::vector<Integer> gi(s.d);
    Integer gg = 0;
    for (int k = 0; k < s.d; ++k) {
      Rational scaled = g[k] * den;
      gi[k] = scaled.get_num();
      mpz_gcd(gg.get_mpz_t(), gg.get_mpz_t(), gi[k].get_mpz_t());
    }
    if (gg == 0) continue;
    for (auto& x : gi) x /= gg;
    s.rows.push_back(std::move(gi));
  }
  return s;
}

template <class N>
std::vector<std::vector<Rational>> run_dd(const IntSystem& sys) {
  using T = typename N::T;
  const int d = sys.d;
  const int m = static_cast<int>(sys.rows.size());
  const int words = (m + 63) / 64;

  std::vector<std::vector<T>> g(m, std::vector<T>(d));
  for (int r = 0; r < m; ++r) {
    for (int k = 0; k < d; ++k) g[r][k] = N::from(sys.rows[r][k]);
  }

  // Initial simplicial cone from the first independent rows in order.
  std::vector<int> init;
  for (int r = 0; r < m && static_cast<int>(init.size()) < d; ++r) {
    std::vector<int> trial = init;
    trial.push_back(r);
    if (rank_at_least<N>(g, trial, d) == static_cast<int>(trial.size())) {
      init = std::move(trial);
    }
  }
  if (static_cast<int>(init.size()) < d) {
    throw Error(ErrorCode::kNotFeasible,
                "system does not describe a bounded polyhedron");
  }

  // Columns of the inverse of the initial matrix, via rational elimination.
  std::vector<std::vector<Rational>> aug(d, std::vector<Rational>(2 * d));
  for (int i = 0; i < d; ++i) {
    for (int k = 0; k < d; ++k) aug[i][k] = sys.rows[init[i]][k];
    aug[i][d + i] = 1;
  }
  for (int c = 0; c < d; ++c) {
    int piv = c;
    while (sgn(aug[piv][c]) == 0) ++piv;
    std::swap(aug[piv], aug[c]);
    const Rational inv = 1 / aug[c][c];
    for (auto& x : aug[c]) x *= inv;
    for (int i = 0; i < d; ++i) {
      if (i == c || sgn(aug[i][c]) == 0) continue;
      const Rational f = aug[i][c];
      for (int k = 0; k < 2 * d; ++k) aug[i][k] -= f * aug[c][k];
    }
  }

  struct Ray {
    std::vector<T> v;
    Words z;
  };
  std::vector<bool> processed(m, false);
  for (int r : init) processed[r] = true;

  std::vector<Ray> rays;
  for (int j = 0; j < d; ++j) {
    std::vector<Rational> col(d);
    Integer den = 1;
    for (int i = 0; i < d; ++i) {
      col[i] = aug[i][d + j];
      den = lcm(den, col[i].get_den());
    }
    Ray ray;
    ray.v.resize(d);
    for (int i = 0; i < d; ++i) {
      Rational s = col[i] * den;
      ray.v[i] = N::from(s.get_num());
    }
    normalize<N>(ray.v);
    ray.z.assign(words, 0);
    for (int i = 0; i < d; ++i) {
      if (i != j) ray.z[init[i] >> 6] |= std::uint64_t{1} << (init[i] & 63);
    }
    rays.push_back(std::move(ray));
  }

  std::vector<int> common;
  for (int r = 0; r < m; ++r) {
    if (processed[r]) continue;
    std::vector<T> s(rays.size());
    std::vector<int> pos, neg;
    std::vector<Ray> next;
    for (size_t i = 0; i < rays.size(); ++i) {
      s[i] = dot<N>(g[r], rays[i].v);
      const int sg = N::sign(s[i]);
      if (sg > 0) pos.push_back(static_cast<int>(i));
      if (sg < 0) neg.push_back(static_cast<int>(i));
    }
    for (size_t i = 0; i < rays.size(); ++i) {
      const int sg = N::sign(s[i]);
      if (sg < 0) continue;
      Ray ray = rays[i];
      if (sg == 0) ray.z[r >> 6] |= std::uint64_t{1} << (r & 63);
      next.push_back(std::move(ray));
    }
    for (int p : pos) {
      for (int n : neg) {
        if (popcount_and(rays[p].z, rays[n].z) < d - 2) continue;
        common.clear();
        for (int w = 0; w < words; ++w) {
          std::uint64_t bits = rays[p].z[w] & rays[n].z[w];
          while (bits) {
            const int b = __builtin_ctzll(bits);
            common.push_back(w * 64 + b);
            bits &= bits - 1;
          }
        }
        if (rank_at_least<N>(g, common, d - 2) < d - 2) continue;
        Ray ray;
        ray.v.resize(d);
        for (int k = 0; k < d; ++k) {
          ray.v[k] = N::sub(N::mul(s[p], rays[n].v[k]),
                            N::mul(s[n], rays[p].v[k]));
        }
        normalize<N>(ray.v);
        ray.z.resize(words);
        for (int w = 0; w < words; ++w) ray.z[w] = rays[p].z[w] & rays[n].z[w];
        ray.z[r >> 6] |= std::uint64_t{1} << (r & 63);
        next.push_back(std::move(ray));
      }
    }
    rays = std::move(next);
    processed[r] = true;
  }

  std::vector<std::vector<Rational>> vertices;
  for (const Ray& ray : rays) {
    const int s0 = N::sign(ray.v[0]);
    if (s0 == 0) {
      throw Error(ErrorCode::kNotFeasible, "polyhedron is unbounded");
    }
    std::vector<Rational> x(d - 1);
    const Integer y0 = N::to_integer(ray.v[0]);
    for (int k = 1; k < d; ++k) {
      x[k - 1] = Rational(N::to_integer(ray.v[k]), y0);
      x[k - 1].canonicalize();
    }
    vertices.push_back(std::move(x));
  }
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  return vertices;
}

}  // namespace

std::vector<std::vector<Rational>> enumerate_vertices(
    const HRepresentation& h, const VertexOptions& options) {
  if (h.dim > options.max_dim) {
    throw Error(ErrorCode::kTooLarge,
                "vertex enumeration limited to ambient dimension " +
                    std::to_string(options.max_dim));
  }
  const IntSystem sys = homogenize(h);
  try {
    return run_dd<I64>(sys);
  } catch (const Overflow&) {
    return run_dd<Big>(sys);
  }
}

}  // namespace qpoly
