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

#include "qpoly/cli.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <utility>

#include "CLI11.hpp"
#include "qpoly/codes.hpp"
#include "qpoly/constructions.hpp"
#include "qpoly/error.hpp"
#include "qpoly/invariants.hpp"
#include "qpoly/io.hpp"
#include "qpoly/lattice.hpp"
#include "qpoly/polytope.hpp"
#include "qpoly/qpm.hpp"

namespace qpoly {
namespace {

struct Result {
  std::string text;
  int code = kExitOk;
};

std::string json_text(const Json& j) { return j.dump(2) + "\n"; }

LatticeOptions lattice_options(const RunConfig& c) {
  LatticeOptions o;
  o.max_size = c.max_t;
  o.max_field_order = c.max_q;
  return o;
}

LatticePtr config_lattice(const RunConfig& c) {
  return build_lattice(c.q, c.n, lattice_options(c));
}

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::kInvalidArgument, what);
}

// Point from --point, else from --spec.
RankPoint input_point(const RunConfig& c) {
  if (!c.point_path.empty()) {
    return point_from_json(read_json_file(c.point_path), lattice_options(c));
  }
  require(!c.spec_path.empty(), "--point or --spec is required");
  return compile_spec(read_json_file(c.spec_path), lattice_options(c));
}

Integer input_mu(const RunConfig& c, const RankPoint& p) {
  if (c.mu.empty()) return principal_denominator(p);
  const Rational mu = parse_rational(c.mu);
  if (!is_integral(mu)) throw Error(ErrorCode::kNotADenominator, "mu must be an integer");
  return mu.get_num();
}

Json index_list(const IndexSet& s) { return Json(s); }

Result lattice_build(const RunConfig& c) {
  return {json_text(lattice_to_json(*config_lattice(c)))};
}

HRepresentation config_hrep(const RunConfig& c) {
  return build_hrep(config_lattice(c), !c.unreduced);
}

Result polytope_hrep(const RunConfig& c) {
  return {hrep_to_text(config_hrep(c))};
}

Result polytope_points(const RunConfig& c) {
  std::vector<std::vector<Rational>> pts;
  for (const RankPoint& p : lattice_points(config_lattice(c))) {
    pts.push_back(p.values());
  }
  return {points_to_text(pts)};
}

Result polytope_vertices(const RunConfig& c) {
  VertexOptions o;
  o.max_dim = c.max_dim;
  return {points_to_text(enumerate_vertices(config_hrep(c), o))};
}

Result polytope_fvector(const RunConfig& c) {
  FVectorOptions o;
  o.max_dim = std::min(c.max_dim, 15);
  Json j;
  j["q"] = c.q;
  j["n"] = c.n;
  j["f_vector"] = f_vector(config_hrep(c), o);
  return {json_text(j)};
}

Result polytope_dim(const RunConfig& c) {
  const HRepresentation h = config_hrep(c);
  Json j;
  j["q"] = c.q;
  j["n"] = c.n;
  j["reduced"] = h.reduced;
  j["affine_dimension"] = affine_dimension(h);
  return {json_text(j)};
}

Result polytope_witness(const RunConfig& c) {
  const LatticePtr lat = config_lattice(c);
  const RankPoint w = interior_witness(lat);
  Json j = point_to_json(w);
  j["location"] = location_name(membership(build_hrep(lat, false), w).status);
  return {json_text(j)};
}

Result polytope_vertex(const RunConfig& c) {
  const RankPoint p = input_point(c);
  const HRepresentation h = build_hrep(p.lattice_ptr(), c.unreduced ? false : sgn(p[0]) == 0);
  const VertexCertificate cert = is_vertex(h, p);
  Json j;
  j["is_vertex"] = cert.is_vertex;
  j["normal_rank"] = cert.normal_rank;
  j["dim"] = h.dim;
  j["tight_rows"] = cert.tight_rows;
  return {json_text(j)};
}

Result pm_check(const RunConfig& c) {
  const AxiomReport r = check_axioms(input_point(c));
  Json vs = Json::array();
  for (const AxiomViolation& v : r.violations) {
    vs.push_back({{"axiom", v.axiom},
                  {"witness", v.witness},
                  {"slack", to_string(v.slack)}});
  }
  Json j;
  j["ok"] = r.ok;
  j["violations"] = std::move(vs);
  return {json_text(j), r.ok ? kExitOk : kExitInvalid};
}

Result pm_sets(const RunConfig& c, IndexSet (*fn)(const RankPoint&)) {
  const RankPoint p = input_point(c);
  return {json_text(index_set_to_json(p.lattice(), fn(p)))};
}

Result pm_indep(const RunConfig& c) {
  const RankPoint p = input_point(c);
  const Integer mu = input_mu(c, p);
  const IndependenceReport r = independence_report(p, mu);
  Json j;
  j["mu"] = to_string(mu);
  j["independent"] = index_list(r.independent);
  j["circuits"] = index_list(r.circuits);
  j["loops"] = index_list(r.loops);
  return {json_text(j)};
}

Result pm_classify(const RunConfig& c) {
  const RankPoint p = input_point(c);
  const Integer mu = input_mu(c, p);
  const Classification r = classify(p, mu);
  Json j;
  j["mu"] = to_string(mu);
  j["is_qmatroid"] = r.is_qmatroid;
  j["loop_space"] = r.loop_space;
  j["is_full"] = r.is_full;
  j["is_paving"] = r.is_paving ? Json(*r.is_paving) : Json(nullptr);
  j["is_mu_paving"] = r.is_mu_paving;
  return {json_text(j)};
}

Json spec_file_of_kind(const RunConfig& c, const std::string& kind) {
  Json spec = read_json_file(c.spec_path);
  if (!spec.contains("kind") || spec["kind"] != kind) {
    throw Error(ErrorCode::kParseError, "spec kind must be '" + kind + "'");
  }
  return spec;
}

Result make_uniform(const RunConfig& c) {
  if (!c.spec_path.empty()) {
    return {json_text(point_to_json(
        compile_spec(spec_file_of_kind(c, "uniform"), lattice_options(c))))};
  }
  return {json_text(point_to_json(uniform(config_lattice(c), c.k)))};
}

Result make_paving(const RunConfig& c) {
  if (!c.random) {
    require(!c.spec_path.empty(), "--spec or --random is required");
    return {json_text(point_to_json(
        compile_spec(spec_file_of_kind(c, "paving"), lattice_options(c))))};
  }
  const LatticePtr lat = config_lattice(c);
  std::mt19937_64 rng(c.seed);
  PavingSpec s{lat, c.k, random_paving_collection(lat, c.k, lat->size(), rng)};
  Json subs = Json::array();
  for (int i : s.s) subs.push_back(lat->subspace(i).basis.to_rows());
  Json j = point_to_json(paving(s));
  j["spec"] = {{"kind", "paving"}, {"q", c.q}, {"n", c.n}, {"k", c.k},
               {"S", std::move(subs)}};
  return {json_text(j)};
}

Result make_combo(const RunConfig& c) {
  return {json_text(point_to_json(
      compile_spec(spec_file_of_kind(c, "combo"), lattice_options(c))))};
}

Result make_flag(const RunConfig& c) {
  if (!c.spec_path.empty()) {
    return {json_text(point_to_json(
        compile_spec(spec_file_of_kind(c, "flag"), lattice_options(c))))};
  }
  std::vector<Rational> lambdas;
  for (const std::string& s : c.lambdas) lambdas.push_back(parse_rational(s));
  const FlagReport r = flag_uniform_combo(c.n, c.q, lambdas);
  return {json_text(point_to_json(materialize(r.profile, config_lattice(c))))};
}

Result invariant_chi(const RunConfig& c) {
  const TruncatedPuiseux chi = char_puiseux(input_point(c));
  if (c.pretty) return {chi.to_string() + "\n"};
  return {json_text(puiseux_to_json(chi))};
}

// Two-term paving combo: direct polynomial against both closed forms.
Result invariant_chi_combo(const RunConfig& c) {
  const Json spec = spec_file_of_kind(c, "combo");
  const Json& terms = spec.at("terms");
  require(terms.is_array() && terms.size() == 2,
          "chi-combo needs exactly two terms");
  const RankPoint combo = compile_spec(spec, lattice_options(c));
  const LatticePtr lat = combo.lattice_ptr();
  const Rational lambda = rational_from_json(terms[0].at("lambda"));
  const PavingSpec s1 = paving_spec_from_json(terms[0].at("spec"), lat);
  const PavingSpec s2 = paving_spec_from_json(terms[1].at("spec"), lat);
  if (s1.k != s2.k) throw Error(ErrorCode::kRankMismatch, "ranks differ");
  const int size1 = static_cast<int>(s1.s.size());
  const int size2 = static_cast<int>(s2.s.size());
  const TruncatedPuiseux direct = char_puiseux(combo);
  const TruncatedPuiseux via1 =
      paving_combo_char(char_puiseux(paving(s1)), size1, size2, s1.k, lat->q(),
                        lambda, ChiBase::kFirst);
  const TruncatedPuiseux via2 =
      paving_combo_char(char_puiseux(paving(s2)), size1, size2, s1.k, lat->q(),
                        lambda, ChiBase::kSecond);
  const bool agree = direct == via1 && direct == via2;
  Json j;
  j["direct"] = puiseux_to_json(direct);
  j["via_first"] = puiseux_to_json(via1);
  j["via_second"] = puiseux_to_json(via2);
  j["text"] = direct.to_string();
  j["agree"] = agree;
  return {json_text(j), agree ? kExitOk : kExitInvalid};
}

Result code_metrics_cmd(const RunConfig& c) {
  const MatrixCode code = code_from_json(read_json_file(c.code_path), c.max_q);
  const CodeMetrics m = code_metrics(code, c.scan_cap);
  Json j;
  j["q"] = code.q();
  j["n"] = code.n();
  j["m"] = code.m();
  j["k"] = m.k;
  j["d"] = m.d;
  j["d_perp"] = m.d_perp ? Json(*m.d_perp) : Json(nullptr);
  j["is_mrd"] = m.is_mrd;
  return {json_text(j)};
}

Result code_rho(const RunConfig& c) {
  const Json j = read_json_file(c.code_path);
  LatticeOptions o = lattice_options(c);
  if (c.vector_code) {
    const VectorCode v = vector_code_from_json(j);
    const LatticePtr lat = build_lattice(v.q, v.n, o);
    return {json_text(point_to_json(vector_code_qmatroid(v, lat)))};
  }
  const MatrixCode code = code_from_json(j, c.max_q);
  const LatticePtr lat = build_lattice(code.q(), code.n(), o);
  return {json_text(point_to_json(induced_polymatroid(code, lat)))};
}

Result code_mrd(const RunConfig& c) {
  const LatticePtr lat = config_lattice(c);
  if (c.d2 < 0) {
    require(c.m > 0, "--m is required");
    return {json_text(point_to_json(mrd_closed_form(lat, c.m, c.d)))};
  }
  require(!c.lambda.empty(), "--lambda is required with --d2");
  const MrdComboReport r =
      mrd_combo_independence(lat, c.d, c.d2, parse_rational(c.lambda));
  Json j;
  j["point"] = point_to_json(r.point);
  j["mu"] = to_string(r.mu);
  j["all_independent"] = r.all_independent;
  return {json_text(j)};
}

using Handler = std::function<Result(const RunConfig&)>;

void add_common(CLI::App* cmd, RunConfig& c) {
  cmd->add_option("--q", c.q, "field order");
  cmd->add_option("--n", c.n, "ambient dimension");
  cmd->add_option("--k", c.k, "rank");
  cmd->add_option("--m", c.m, "matrix columns");
  cmd->add_option("--d", c.d, "rank distance");
  cmd->add_option("--d2", c.d2, "second rank distance");
  cmd->add_option("--point", c.point_path, "rank point JSON file");
  cmd->add_option("--spec", c.spec_path, "construction spec JSON file");
  cmd->add_option("--code", c.code_path, "code JSON file");
  cmd->add_option("--out", c.out_path, "output file");
  cmd->add_option("--mu", c.mu, "denominator");
  cmd->add_option("--lambda", c.lambda, "combination coefficient");
  cmd->add_option("--lambdas", c.lambdas, "flag coefficients")->delimiter(',');
  cmd->add_flag("--unreduced", c.unreduced, "keep the v_0 coordinate");
  cmd->add_flag("--json-errors", c.json_errors, "JSON errors on stderr");
  cmd->add_flag("--random", c.random, "random paving collection");
  cmd->add_flag("--pretty", c.pretty, "human-readable polynomial");
  cmd->add_flag("--vector", c.vector_code, "code file holds a vector code");
  cmd->add_option("--seed", c.seed, "random seed");
  cmd->add_option("--max-t", c.max_t, "lattice size cap")->check(CLI::PositiveNumber);
  cmd->add_option("--max-dim", c.max_dim, "vertex enumeration dimension cap")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--max-q", c.max_q, "field order cap")->check(CLI::PositiveNumber);
  cmd->add_option("--scan-cap", c.scan_cap, "codeword scan cap")
      ->check(CLI::PositiveNumber);
}

void report_error(const RunConfig& c, std::ostream& err, const std::string& name,
                  const std::string& message) {
  if (c.json_errors) {
    err << Json{{"error", name}, {"message", message}}.dump() << "\n";
  } else {
    err << "error: " << name << ": " << message << "\n";
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  RunConfig c;
  c.json_errors =
      std::find(args.begin(), args.end(), "--json-errors") != args.end();

  const std::vector<std::pair<std::string, std::vector<std::pair<std::string, Handler>>>>
      groups = {
          {"lattice", {{"build", lattice_build}}},
          {"polytope",
           {{"hrep", polytope_hrep},
            {"points", polytope_points},
            {"vertices", polytope_vertices},
            {"fvector", polytope_fvector},
            {"dim", polytope_dim},
            {"witness", polytope_witness},
            {"vertex", polytope_vertex}}},
          {"pm",
           {{"check", pm_check},
            {"flats", [](const RunConfig& r) { return pm_sets(r, flats); }},
            {"cyclic", [](const RunConfig& r) { return pm_sets(r, cyclic_spaces); }},
            {"zflats", [](const RunConfig& r) { return pm_sets(r, cyclic_flats); }},
            {"indep", pm_indep},
            {"classify", pm_classify}}},
          {"make",
           {{"uniform", make_uniform},
            {"paving", make_paving},
            {"combo", make_combo},
            {"flag", make_flag}}},
          {"invariant", {{"chi", invariant_chi}, {"chi-combo", invariant_chi_combo}}},
          {"code",
           {{"metrics", code_metrics_cmd}, {"rho", code_rho}, {"mrd", code_mrd}}},
      };

  CLI::App app{"q-polymatroid polytope toolkit", "qpoly"};
  app.require_subcommand(1);
  std::vector<std::pair<CLI::App*, Handler>> leaves;
  for (const auto& [group, cmds] : groups) {
    CLI::App* g = app.add_subcommand(group);
    g->require_subcommand(1);
    for (const auto& [name, handler] : cmds) {
      CLI::App* leaf = g->add_subcommand(name);
      add_common(leaf, c);
      leaves.emplace_back(leaf, handler);
    }
  }

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    report_error(c, err, "UsageError", e.what());
    return kExitInvalid;
  }

  try {
    for (const auto& [leaf, handler] : leaves) {
      if (!leaf->parsed()) continue;
      const Result r = handler(c);
      if (c.out_path.empty()) {
        out << r.text;
      } else {
        write_file(c.out_path, r.text);
      }
      return r.code;
    }
  } catch (const Error& e) {
    report_error(c, err, error_code_name(e.code()), e.what());
    return e.code() == ErrorCode::kTooLarge ? kExitTooLarge : kExitInvalid;
  } catch (const Json::exception& e) {
    report_error(c, err, "ParseError", e.what());
    return kExitInvalid;
  }
  report_error(c, err, "UsageError", "no command given");
  return kExitInvalid;
}

}  // namespace qpoly
