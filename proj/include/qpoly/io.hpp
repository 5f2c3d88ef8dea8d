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

// JSON formats shared by the CLI and the tests.
//
//   lattice  {"q", "n", "subspaces": [[row, ...], ...]}
//   point    {"q", "n", "order_digest", "values": ["p/q", ...]}
//   matrix   {"q", "rows": [[...], ...]}
//   code     {"q", "n", "m", "generators": [[[...], ...], ...]}
//   vcode    {"q", "m", "n", "generators": [[...], ...]}  (entries in F_{q^m})
//   puiseux  [["exp", coeff], ...] sorted by exponent
//   spec     {"kind": "uniform" | "paving" | "combo" | "flag", ...}

#ifndef QPOLY_IO_HPP_
#define QPOLY_IO_HPP_

#include <random>
#include <string>

#include "json.hpp"
#include "qpoly/codes.hpp"
#include "qpoly/constructions.hpp"
#include "qpoly/invariants.hpp"
#include "qpoly/lattice.hpp"
#include "qpoly/qpm.hpp"

namespace qpoly {

using Json = nlohmann::json;

// Errors: ParseError (unreadable file or malformed JSON).
std::string read_file(const std::string& path);
Json read_json_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

Json lattice_to_json(const SubspaceLattice& lattice);
// Rebuilds the lattice and checks the listed order. Errors: LatticeMismatch.
LatticePtr lattice_from_json(const Json& j, const LatticeOptions& options = {});

Json point_to_json(const RankPoint& p);
// Errors: LatticeMismatch when order_digest disagrees, ParseError.
RankPoint point_from_json(const Json& j, const LatticeOptions& options = {});
RankPoint point_from_json(const Json& j, const LatticePtr& lattice);

Json matrix_to_json(const FqMatrix& m);
FqMatrix matrix_from_json(const Json& j,
                          int max_field_order = kDefaultMaxFieldOrder);

Json code_to_json(const MatrixCode& c);
MatrixCode code_from_json(const Json& j,
                          int max_field_order = kDefaultMaxFieldOrder);
VectorCode vector_code_from_json(const Json& j);

Json puiseux_to_json(const TruncatedPuiseux& f);
TruncatedPuiseux puiseux_from_json(const Json& j);

// {"indices": [...], "subspaces": [basis, ...]}
Json index_set_to_json(const SubspaceLattice& lattice, const IndexSet& s);

// Rational from a JSON string "p/q" or an integer.
Rational rational_from_json(const Json& j);

// Subspace index from a spanning list of vectors.
int subspace_from_json(const SubspaceLattice& lattice, const Json& j);

// Builds the point described by a construction spec.
RankPoint compile_spec(const Json& spec, const LatticeOptions& options = {});
RankPoint compile_spec(const Json& spec, const LatticePtr& lattice);

// Paving collection (k and S) read from a paving or uniform spec.
PavingSpec paving_spec_from_json(const Json& spec, const LatticePtr& lattice);

}  // namespace qpoly

#endif  // QPOLY_IO_HPP_
