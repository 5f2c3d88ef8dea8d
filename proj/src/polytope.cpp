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

#include "qpoly/polytope.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <set>
#include <sstream>
#include <utility>

#include "qpoly/error.hpp"

namespace qpoly {
namespace {

class RowBuilder {
 public:
  RowBuilder(const HRepresentation& h) : h_(h) {}

  // Adds c * v_X, silently dropping v_0 in the reduced variant.
  void add(HRow& row, int x, int c) const {
    if (h_.reduced) {
      if (x == 0) return;
      row.normal[x - 1] += c;
    } else {
      row.normal[x] += c;
    }
  }

  HRow blank(RowKind kind, int x = -1, int y = -1) const {
    HRow row;
    row.normal.assign(h_.dim, Rational(0));
    row.rhs = 0;
    row.kind = kind;
    row.x = x;
    row.y = y;
    return row;
  }

 private:
  const HRepresentation& h_;
};

bool is_zero_vector(const std::vector<Rational>& v) {
  for (const Rational& x : v) {
    if (sgn(x) != 0) return false;
  }
  return true;
}

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Rational s = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) != 0) s += a[i] * b[i];
  }
  return s;
}

void check_dim(const HRepresentation& h, const std::vector<Rational>& coords) {
  if (static_cast<int>(coords.size()) != h.dim) {
    throw Error(ErrorCode::kDimensionMismatch,
                "point has " + std::to_string(coords.size()) +
                    " coordinates, polytope ambient dimension is " +
                    std::to_string(h.dim));
  }
}

}  // namespace

const char* row_kind_name(RowKind kind) {
  switch (kind) {
    case RowKind::kZeroEq: return "zero-eq";
    case RowKind::kType1: return "type1";
    case RowKind::kNonNeg: return "nonneg";
    case RowKind::kType2: return "type2";
    case RowKind::kType3: return "type3";
    case RowKind::kGeneric: return "generic";
  }
  return "generic";
}

const char* location_name(Location loc) {
  switch (loc) {
    case Location::kInterior: return "interior";
    case Location::kBoundary: return "boundary";
    case Location::kOutside: return "outside";
  }
  return "outside";
}

HRepresentation build_hrep(const LatticePtr& lattice, bool reduced,
                           bool unfiltered) {
  const SubspaceLattice& lat = *lattice;
  const int t = lat.size();
  HRepresentation h;
  h.lattice = lattice;
  h.reduced = reduced;
  h.dim = reduced ? t - 1 : t;
  RowBuilder rb(h);

  if (!reduced) {
    HRow up = rb.blank(RowKind::kZeroEq, 0);
    rb.add(up, 0, 1);
    h.rows.push_back(std::move(up));
    HRow down = rb.blank(RowKind::kZeroEq, 0);
    rb.add(down, 0, -1);
    h.rows.push_back(std::move(down));
  }
  for (int x = 1; x < t; ++x) {
    HRow row = rb.blank(RowKind::kType1, x);
    rb.add(row, x, 1);
    row.rhs = lat.dim(x);
    h.rows.push_back(std::move(row));
  }
  if (reduced) {
    for (int x = lat.grade_begin(1); x < lat.grade_end(1); ++x) {
      HRow row = rb.blank(RowKind::kNonNeg, x);
      rb.add(row, x, -1);
      h.rows.push_back(std::move(row));
    }
  }
  for (int x = unfiltered ? 0 : 1; x < t; ++x) {
    std::vector<int> above;
    if (unfiltered) {
      for (int y = x + 1; y < t; ++y) {
        if (lat.leq(x, y)) above.push_back(y);
      }
    } else {
      above = lat.upper_covers(x);
    }
    for (int y : above) {
      HRow row = rb.blank(RowKind::kType2, x, y);
      rb.add(row, x, 1);
      rb.add(row, y, -1);
      if (!is_zero_vector(row.normal)) h.rows.push_back(std::move(row));
    }
  }
  for (int x = 0; x < t; ++x) {
    for (int y = x + 1; y < t; ++y) {
      if (!unfiltered && lat.comparable(x, y)) continue;
      const auto [m, j] = lat.meet_join(x, y);
      HRow row = rb.blank(RowKind::kType3, x, y);
      rb.add(row, j, 1);
      if (unfiltered || m != 0) rb.add(row, m, 1);
      rb.add(row, x, -1);
      rb.add(row, y, -1);
      if (!is_zero_vector(row.normal)) h.rows.push_back(std::move(row));
    }
  }
  return h;
}

HRepresentation build_hrep(int q, int n, bool reduced,
                           const BuildOptions& options) {
  return build_hrep(build_lattice(q, n, options.lattice), reduced,
                    options.unfiltered);
}

std::vector<Rational> coordinates(const HRepresentation& h,
                                  const RankPoint& p) {
  if (!h.lattice) {
    throw Error(ErrorCode::kLatticeMismatch, "system has no lattice");
  }
  if (h.lattice->order_digest() != p.lattice().order_digest()) {
    throw Error(ErrorCode::kLatticeMismatch, "point uses another lattice");
  }
  if (!h.reduced) return p.values();
  if (sgn(p[0]) != 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "reduced coordinates require v_0 = 0");
  }
  return std::vector<Rational>(p.values().begin() + 1, p.values().end());
}

RankPoint point_from_coordinates(const HRepresentation& h,
                                 const std::vector<Rational>& coords) {
  if (!h.lattice) {
    throw Error(ErrorCode::kLatticeMismatch, "system has no lattice");
  }
  check_dim(h, coords);
  std::vector<Rational> values;
  if (h.reduced) values.push_back(Rational(0));
  values.insert(values.end(), coords.begin(), coords.end());
  return RankPoint(h.lattice, std::move(values));
}

Membership membership(const HRepresentation& h,
                      const std::vector<Rational>& coords) {
  check_dim(h, coords);
  Membership m;
  bool strict = true;
  for (size_t r = 0; r < h.rows.size(); ++r) {
    const HRow& row = h.rows[r];
    const int c = cmp(dot(row.normal, coords), row.rhs);
    if (c > 0) {
      m.violated_rows.push_back(static_cast<int>(r));
    } else if (c == 0) {
      m.tight_rows.push_back(static_cast<int>(r));
      if (row.kind != RowKind::kZeroEq) strict = false;
    }
  }
  if (!m.violated_rows.empty()) {
    m.status = Location::kOutside;
  } else if (strict) {
    m.status = Location::kInterior;
  } else {
    m.status = Location::kBoundary;
  }
  return m;
}

Membership membership(const HRepresentation& h, const RankPoint& p) {
  return membership(h, coordinates(h, p));
}

VertexCertificate is_vertex(const HRepresentation& h,
                            const std::vector<Rational>& coords) {
  const Membership m = membership(h, coords);
  if (m.status == Location::kOutside) {
    throw Error(ErrorCode::kNotFeasible, "point violates the system");
  }
  VertexCertificate cert;
  cert.point = coords;
  cert.tight_rows = m.tight_rows;
  std::vector<std::vector<Rational>> normals;
  for (int r : m.tight_rows) normals.push_back(h.rows[r].normal);
  cert.normal_rank = rational_rank(std::move(normals));
  cert.is_vertex = cert.normal_rank == h.dim;
  return cert;
}

VertexCertificate is_vertex(const HRepresentation& h, const RankPoint& p) {
  return is_vertex(h, coordinates(h, p));
}

std::vector<RankPoint> lattice_points(const LatticePtr& lattice) {
  const SubspaceLattice& lat = *lattice;
  const int t = lat.size();
  // Submodularity checks keyed by the largest index involved (the join).
  std::vector<std::vector<std::pair<int, int>>> checks(t);
  for (int x = 1; x < t; ++x) {
    for (int y = x + 1; y < t; ++y) {
      if (lat.comparable(x, y)) continue;
      const int j = lat.join(x, y);
      checks[j].emplace_back(x, y);
    }
  }
  std::vector<RankPoint> out;
  std::vector<int> v(t, 0);

  auto feasible_at = [&](int i) {
    for (const auto& [x, y] : checks[i]) {
      if (v[i] + v[lat.meet(x, y)] > v[x] + v[y]) return false;
    }
    return true;
  };

  auto emit = [&]() {
    std::vector<Rational> values(v.begin(), v.end());
    out.emplace_back(lattice, std::move(values));
  };

  if (t == 1) {
    emit();
    return out;
  }
  std::vector<int> hi(t, 0);
  int i = 1;
  bool descending = false;
  while (i >= 1) {
    if (!descending) {
      int lo = 0;
      int up = lat.dim(i);
      for (int c : lat.lower_covers(i)) {
        lo = std::max(lo, v[c]);
        up = std::min(up, v[c] + 1);
      }
      v[i] = lo;
      hi[i] = up;
    } else {
      ++v[i];
    }
    while (v[i] <= hi[i] && !feasible_at(i)) ++v[i];
    if (v[i] > hi[i]) {
      --i;
      descending = true;
      continue;
    }
    if (i == t - 1) {
      emit();
      descending = true;
      continue;
    }
    ++i;
    descending = false;
  }
  return out;
}

std::vector<RankPoint> lattice_points(int q, int n,
                                      const LatticeOptions& options) {
  return lattice_points(build_lattice(q, n, options));
}

RankPoint interior_witness(const LatticePtr& lattice) {
  std::vector<Rational> values;
  values.reserve(lattice->size());
  for (int x = 0; x < lattice->size(); ++x) {
    const int d = lattice->dim(x);
    values.emplace_back(d, d + 1);
  }
  return RankPoint(lattice, std::move(values));
}

RankPoint interior_witness(int q, int n, const LatticeOptions& options) {
  return interior_witness(build_lattice(q, n, options));
}

int affine_rank(const std::vector<std::vector<Rational>>& points) {
  if (points.empty()) return -1;
  std::vector<std::vector<Rational>> diffs;
  for (size_t i = 1; i < points.size(); ++i) {
    std::vector<Rational> d(points[i].size());
    for (size_t k = 0; k < d.size(); ++k) d[k] = points[i][k] - points[0][k];
    diffs.push_back(std::move(d));
  }
  return rational_rank(std::move(diffs));
}

int affine_dimension(const HRepresentation& h) {
  if (h.lattice) {
    const RankPoint w = interior_witness(h.lattice);
    const Membership m = membership(h, coordinates(h, w));
    if (m.status == Location::kInterior) {
      std::vector<std::vector<Rational>> eqs;
      for (const HRow& row : h.rows) {
        if (row.kind == RowKind::kZeroEq) eqs.push_back(row.normal);
      }
      return h.dim - rational_rank(std::move(eqs));
    }
  }
  VertexOptions vo;
  vo.max_dim = std::max(vo.max_dim, h.dim);
  return affine_rank(enumerate_vertices(h, vo));
}

std::vector<long> f_vector_from_vertices(
    const HRepresentation& h,
    const std::vector<std::vector<Rational>>& vertices) {
  const int nv = static_cast<int>(vertices.size());
  const int words = (nv + 63) / 64;
  using Set = std::vector<std::uint64_t>;
  auto count = [](const Set& s) {
    int c = 0;
    for (std::uint64_t w : s) c += __builtin_popcountll(w);
    return c;
  };

  std::set<Set> generators;
  for (const HRow& row : h.rows) {
    Set s(words, 0);
    for (int v = 0; v < nv; ++v) {
      if (dot(row.normal, vertices[v]) == row.rhs) {
        s[v >> 6] |= std::uint64_t{1} << (v & 63);
      }
    }
    const int c = count(s);
    if (c > 0 && c < nv) generators.insert(std::move(s));
  }

  std::set<Set> faces(generators.begin(), generators.end());
  std::deque<Set> queue(generators.begin(), generators.end());
  while (!queue.empty()) {
    Set f = std::move(queue.front());
    queue.pop_front();
    for (const Set& g : generators) {
      Set meet(words);
      for (int w = 0; w < words; ++w) meet[w] = f[w] & g[w];
      if (count(meet) == 0) continue;
      if (faces.insert(meet).second) queue.push_back(std::move(meet));
    }
  }

  const int d = affine_rank(vertices);
  std::vector<long> fv(std::max(d, 0), 0);
  for (const Set& f : faces) {
    std::vector<std::vector<Rational>> pts;
    for (int v = 0; v < nv; ++v) {
      if ((f[v >> 6] >> (v & 63)) & 1) pts.push_back(vertices[v]);
    }
    const int k = affine_rank(pts);
    if (k >= 0 && k < d) ++fv[k];
  }
  return fv;
}

std::vector<long> f_vector(const HRepresentation& h,
                           const FVectorOptions& options) {
  if (h.dim > options.max_dim) {
    throw Error(ErrorCode::kTooLarge,
                "f-vector limited to ambient dimension " +
                    std::to_string(options.max_dim));
  }
  VertexOptions vo;
  vo.max_dim = std::max(vo.max_dim, h.dim);
  return f_vector_from_vertices(h, enumerate_vertices(h, vo));
}

std::string hrep_to_text(const HRepresentation& h) {
  std::ostringstream os;
  os << "HREP " << h.rows.size() << " " << h.dim << "\n";
  for (const HRow& row : h.rows) {
    for (const Rational& a : row.normal) os << to_string(a) << " ";
    os << to_string(row.rhs) << "\n";
  }
  return os.str();
}

HRepresentation hrep_from_text(const std::string& text) {
  std::istringstream is(text);
  std::string magic;
  long rows = -1;
  int dim = -1;
  if (!(is >> magic >> rows >> dim) || magic != "HREP" || rows < 0 ||
      dim < 0) {
    throw Error(ErrorCode::kParseError, "expected 'HREP <rows> <dim>' header");
  }
  HRepresentation h;
  h.reduced = true;
  h.dim = dim;
  for (long r = 0; r < rows; ++r) {
    HRow row;
    row.kind = RowKind::kGeneric;
    for (int k = 0; k <= dim; ++k) {
      std::string tok;
      if (!(is >> tok)) {
        throw Error(ErrorCode::kParseError, "truncated HREP row");
      }
      Rational v = parse_rational(tok);
      if (k < dim) {
        row.normal.push_back(v);
      } else {
        row.rhs = v;
      }
    }
    h.rows.push_back(std::move(row));
  }
  return h;
}

std::string points_to_text(const std::vector<std::vector<Rational>>& points) {
  std::ostringstream os;
  for (const auto& p : points) {
    for (size_t k = 0; k < p.size(); ++k) {
      if (k) os << " ";
      os << to_string(p[k]);
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace qpoly
