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

#ifndef QPOLY_POLYTOPE_HPP_
#define QPOLY_POLYTOPE_HPP_

#include <string>
#include <vector>

#include "qpoly/lattice.hpp"
#include "qpoly/qpm.hpp"
#include "qpoly/rational.hpp"

namespace qpoly {

enum class RowKind {
  kZeroEq,  // +-v_0 <= 0, unreduced only
  kType1,   // v_X <= dim X
  kNonNeg,  // -v_x <= 0 for atoms, reduced only
  kType2,   // v_X - v_Y <= 0 for covers X < Y, X != 0
  kType3,   // v_{X+Y} + v_{X^Y} - v_X - v_Y <= 0, incomparable X, Y
  kGeneric,
};

const char* row_kind_name(RowKind kind);

// normal . v <= rhs
struct HRow {
  std::vector<Rational> normal;
  Rational rhs;
  RowKind kind = RowKind::kGeneric;
  int x = -1;  // lattice indices the row was built from
  int y = -1;
};

// A . v <= b. When built from a lattice the coordinates are the lattice
// indices, with index 0 dropped in the reduced variant.
struct HRepresentation {
  LatticePtr lattice;  // null for hand-built systems
  bool reduced = true;
  int dim = 0;
  std::vector<HRow> rows;
};

struct BuildOptions {
  LatticeOptions lattice;
  // Keep type-2 rows for every comparable pair and type-3 rows for every
  // pair, comparable or not; used to cross-check the filtered system.
  bool unfiltered = false;
};

// Errors: TooLarge.
HRepresentation build_hrep(int q, int n, bool reduced,
                           const BuildOptions& options = {});
HRepresentation build_hrep(const LatticePtr& lattice, bool reduced,
                           bool unfiltered = false);

// Coordinates of p in the ambient space of h. Errors: DimensionMismatch,
// LatticeMismatch, InvalidArgument (reduced system and v_0 != 0).
std::vector<Rational> coordinates(const HRepresentation& h, const RankPoint& p);
// Inverse of coordinates(); requires h.lattice.
RankPoint point_from_coordinates(const HRepresentation& h,
                                 const std::vector<Rational>& coords);

enum class Location { kInterior, kBoundary, kOutside };

const char* location_name(Location loc);

struct Membership {
  Location status = Location::kOutside;
  std::vector<int> tight_rows;
  std::vector<int> violated_rows;
};

Membership membership(const HRepresentation& h,
                      const std::vector<Rational>& coords);
Membership membership(const HRepresentation& h, const RankPoint& p);

struct VertexCertificate {
  std::vector<Rational> point;
  std::vector<int> tight_rows;
  int normal_rank = 0;
  bool is_vertex = false;
};

// Errors: NotFeasible, DimensionMismatch.
VertexCertificate is_vertex(const HRepresentation& h,
                            const std::vector<Rational>& coords);
VertexCertificate is_vertex(const HRepresentation& h, const RankPoint& p);

// All integer points of the unreduced polytope, in lexicographic order of
// their value vectors. Errors: TooLarge.
std::vector<RankPoint> lattice_points(const LatticePtr& lattice);
std::vector<RankPoint> lattice_points(int q, int n,
                                      const LatticeOptions& options = {});

// v_X = dim X / (dim X + 1).
RankPoint interior_witness(const LatticePtr& lattice);
RankPoint interior_witness(int q, int n, const LatticeOptions& options = {});

int affine_dimension(const HRepresentation& h);

struct VertexOptions {
  int max_dim = 15;
};

// Exact double description; vertices sorted lexicographically. Errors:
// TooLarge, NotFeasible (unbounded system).
std::vector<std::vector<Rational>> enumerate_vertices(
    const HRepresentation& h, const VertexOptions& options = {});

struct FVectorOptions {
  int max_dim = 6;
};

// f_0, ..., f_{d-1} for a polytope of affine dimension d. Errors: TooLarge.
std::vector<long> f_vector(const HRepresentation& h,
                           const FVectorOptions& options = {});
// Same, from an already computed vertex list.
std::vector<long> f_vector_from_vertices(
    const HRepresentation& h,
    const std::vector<std::vector<Rational>>& vertices);

// Dimension of the affine hull of a point set; -1 when empty.
int affine_rank(const std::vector<std::vector<Rational>>& points);

// Plain-text export: "HREP <rows> <dim>" then "a_1 ... a_dim b" per row.
std::string hrep_to_text(const HRepresentation& h);
HRepresentation hrep_from_text(const std::string& text);
// One point per line, space separated.
std::string points_to_text(const std::vector<std::vector<Rational>>& points);

}  // namespace qpoly

#endif  // QPOLY_POLYTOPE_HPP_
