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

#include "qpoly/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <utility>

#include "qpoly/error.hpp"

namespace qpoly {
namespace {

[[noreturn]] void parse_fail(const std::string& what) {
  throw Error(ErrorCode::kParseError, what);
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    parse_fail(std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

int int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) {
    parse_fail(std::string("field '") + key + "' must be an integer");
  }
  return v.get<int>();
}

std::vector<std::vector<int>> int_rows(const Json& j) {
  if (!j.is_array()) parse_fail("expected an array of rows");
  std::vector<std::vector<int>> rows;
  for (const Json& r : j) {
    if (!r.is_array()) parse_fail("expected a row array");
    std::vector<int> row;
    for (const Json& x : r) {
      if (!x.is_number_integer()) parse_fail("matrix entries must be integers");
      row.push_back(x.get<int>());
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Json integer_to_json(const Integer& z) {
  if (z.fits_slong_p()) return Json(z.get_si());
  return Json(z.get_str());
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) {
    const Rational r = parse_rational(j.get<std::string>());
    if (!is_integral(r)) parse_fail("expected an integer");
    return r.get_num();
  }
  parse_fail("expected an integer");
}

// q and n of a spec, looking inside combo terms when absent at the top.
std::pair<int, int> spec_shape(const Json& spec) {
  if (spec.is_object() && spec.contains("q") && spec.contains("n")) {
    return {int_field(spec, "q"), int_field(spec, "n")};
  }
  const Json& terms = field(spec, "terms");
  if (!terms.is_array() || terms.empty()) parse_fail("combo needs terms");
  return spec_shape(field(terms.front(), "spec"));
}

void check_shape(const Json& spec, const SubspaceLattice& lattice) {
  if (spec.contains("q") && spec.contains("n") &&
      (int_field(spec, "q") != lattice.q() ||
       int_field(spec, "n") != lattice.n())) {
    throw Error(ErrorCode::kLatticeMismatch,
                "spec parameters do not match the lattice");
  }
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) parse_fail("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json read_json_file(const std::string& path) {
  try {
    return Json::parse(read_file(path));
  } catch (const Json::exception& e) {
    parse_fail("malformed JSON in '" + path + "': " + e.what());
  }
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) parse_fail("cannot write '" + path + "'");
  out << contents;
}

Json lattice_to_json(const SubspaceLattice& lattice) {
  return Json::parse(lattice.dump());
}

LatticePtr lattice_from_json(const Json& j, const LatticeOptions& options) {
  LatticePtr lat = build_lattice(int_field(j, "q"), int_field(j, "n"), options);
  if (j.contains("subspaces") && lattice_to_json(*lat) != j) {
    throw Error(ErrorCode::kLatticeMismatch,
                "subspace order differs from the canonical order");
  }
  return lat;
}

Json point_to_json(const RankPoint& p) {
  Json values = Json::array();
  for (const Rational& v : p.values()) values.push_back(to_string(v));
  Json j;
  j["q"] = p.lattice().q();
  j["n"] = p.lattice().n();
  j["order_digest"] = p.lattice().order_digest();
  j["values"] = std::move(values);
  return j;
}

RankPoint point_from_json(const Json& j, const LatticeOptions& options) {
  return point_from_json(
      j, build_lattice(int_field(j, "q"), int_field(j, "n"), options));
}

RankPoint point_from_json(const Json& j, const LatticePtr& lattice) {
  if (int_field(j, "q") != lattice->q() || int_field(j, "n") != lattice->n()) {
    throw Error(ErrorCode::kLatticeMismatch, "point is for another lattice");
  }
  if (j.contains("order_digest") &&
      field(j, "order_digest") != lattice->order_digest()) {
    throw Error(ErrorCode::kLatticeMismatch, "order digest mismatch");
  }
  const Json& vals = field(j, "values");
  if (!vals.is_array()) parse_fail("values must be an array");
  std::vector<Rational> values;
  for (const Json& v : vals) values.push_back(rational_from_json(v));
  return RankPoint(lattice, std::move(values));
}

Json matrix_to_json(const FqMatrix& m) {
  Json j;
  j["q"] = m.field().q();
  j["rows"] = m.to_rows();
  return j;
}

FqMatrix matrix_from_json(const Json& j, int max_field_order) {
  FieldPtr f = make_field(int_field(j, "q"), max_field_order);
  return FqMatrix::from_rows(f, int_rows(field(j, "rows")));
}

Json code_to_json(const MatrixCode& c) {
  Json gens = Json::array();
  for (const FqMatrix& g : c.basis()) gens.push_back(g.to_rows());
  Json j;
  j["q"] = c.q();
  j["n"] = c.n();
  j["m"] = c.m();
  j["generators"] = std::move(gens);
  return j;
}

MatrixCode code_from_json(const Json& j, int max_field_order) {
  FieldPtr f = make_field(int_field(j, "q"), max_field_order);
  const int n = int_field(j, "n");
  const int m = int_field(j, "m");
  const Json& gens = field(j, "generators");
  if (!gens.is_array()) parse_fail("generators must be an array");
  std::vector<FqMatrix> basis;
  for (const Json& g : gens) {
    std::vector<std::vector<int>> rows = int_rows(g);
    if (static_cast<int>(rows.size()) != n) {
      throw Error(ErrorCode::kInvalidCode, "generator must have n rows");
    }
    basis.push_back(FqMatrix::from_rows(f, rows, m));
  }
  return MatrixCode(f, n, m, std::move(basis));
}

VectorCode vector_code_from_json(const Json& j) {
  VectorCode v;
  v.q = int_field(j, "q");
  v.m = int_field(j, "m");
  v.n = int_field(j, "n");
  if (v.m < 1 || v.m > 8) {
    throw Error(ErrorCode::kUnsupportedOrder, "extension degree out of range");
  }
  long order = 1;
  for (int i = 0; i < v.m; ++i) order *= v.q;
  if (order > 64) {
    throw Error(ErrorCode::kUnsupportedOrder, "extension field too large");
  }
  FieldPtr ext = make_field(static_cast<int>(order), 64);
  v.generators = FqMatrix::from_rows(ext, int_rows(field(j, "generators")), v.n);
  return v;
}

Json puiseux_to_json(const TruncatedPuiseux& f) {
  Json out = Json::array();
  for (const auto& [e, c] : f.terms()) {
    out.push_back(Json::array({to_string(e), integer_to_json(c)}));
  }
  return out;
}

TruncatedPuiseux puiseux_from_json(const Json& j) {
  if (!j.is_array()) parse_fail("polynomial must be an array of pairs");
  TruncatedPuiseux f;
  for (const Json& term : j) {
    if (!term.is_array() || term.size() != 2) parse_fail("expected [exp, coeff]");
    f.add_term(rational_from_json(term[0]), integer_from_json(term[1]));
  }
  return f;
}

Json index_set_to_json(const SubspaceLattice& lattice, const IndexSet& s) {
  Json subs = Json::array();
  for (int i : s) subs.push_back(lattice.subspace(i).basis.to_rows());
  Json j;
  j["indices"] = s;
  j["subspaces"] = std::move(subs);
  return j;
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  parse_fail("expected a rational string or an integer");
}

int subspace_from_json(const SubspaceLattice& lattice, const Json& j) {
  return lattice.index_of_span(int_rows(j));
}

PavingSpec paving_spec_from_json(const Json& spec, const LatticePtr& lattice) {
  check_shape(spec, *lattice);
  PavingSpec p;
  p.lattice = lattice;
  p.k = int_field(spec, "k");
  const std::string kind = field(spec, "kind").get<std::string>();
  if (kind == "paving") {
    const Json& s = field(spec, "S");
    if (!s.is_array()) parse_fail("S must be an array of subspaces");
    for (const Json& sub : s) p.s.push_back(subspace_from_json(*lattice, sub));
    std::sort(p.s.begin(), p.s.end());
  } else if (kind != "uniform") {
    parse_fail("expected a uniform or paving spec");
  }
  return p;
}

RankPoint compile_spec(const Json& spec, const LatticeOptions& options) {
  const auto [q, n] = spec_shape(spec);
  return compile_spec(spec, build_lattice(q, n, options));
}

RankPoint compile_spec(const Json& spec, const LatticePtr& lattice) {
  const Json& kind_json = field(spec, "kind");
  if (!kind_json.is_string()) parse_fail("kind must be a string");
  const std::string kind = kind_json.get<std::string>();
  check_shape(spec, *lattice);
  if (kind == "uniform") return uniform(lattice, int_field(spec, "k"));
  if (kind == "paving") return paving(paving_spec_from_json(spec, lattice));
  if (kind == "combo") {
    ComboSpec combo;
    const Json& terms = field(spec, "terms");
    if (!terms.is_array()) parse_fail("terms must be an array");
    for (const Json& t : terms) {
      combo.terms.push_back({rational_from_json(field(t, "lambda")),
                             compile_spec(field(t, "spec"), lattice)});
    }
    return convex_combination(combo);
  }
  if (kind == "flag") {
    const Json& ls = field(spec, "lambdas");
    if (!ls.is_array()) parse_fail("lambdas must be an array");
    std::vector<Rational> lambdas;
    for (const Json& l : ls) lambdas.push_back(rational_from_json(l));
    return materialize(
        flag_uniform_combo(lattice->n(), lattice->q(), lambdas).profile,
        lattice);
  }
  parse_fail("unknown spec kind '" + kind + "'");
}

}  // namespace qpoly
