// Copyright 2026 The entrate Authors.
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

#include "entrate/commands.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <sstream>

#include "entrate/adiabatic.hpp"
#include "entrate/error.hpp"
#include "entrate/parallel.hpp"
#include "entrate/rate_engine.hpp"
#include "entrate/report.hpp"
#include "entrate/search.hpp"

namespace entrate {

namespace {

template <typename T>
T get_or(const Json& config, const char* key, T fallback) {
  if (!config.contains(key)) return fallback;
  try {
    return config.at(key).get<T>();
  } catch (const Json::exception&) {
    fail(ErrorCode::invalid_argument, std::string("config: field '") + key + "' has the wrong type");
  }
}

template <typename T>
T get_required(const Json& config, const char* key) {
  const Json& f = require_field(config, key, "config");
  try {
    return f.get<T>();
  } catch (const Json::exception&) {
    fail(ErrorCode::invalid_argument, std::string("config: field '") + key + "' has the wrong type");
  }
}

std::uint64_t seed_of(const Json& config) { return get_or<std::uint64_t>(config, "seed", 0); }

class Csv {
 public:
  explicit Csv(std::initializer_list<const char*> header) {
    bool first = true;
    for (const char* h : header) {
      if (!first) out_ << ',';
      out_ << h;
      first = false;
    }
    out_ << '\n';
  }
  Csv& cell(double x) { return raw(format_double(x)); }
  Csv& cell(long long x) { return raw(std::to_string(x)); }
  Csv& cell(int x) { return raw(std::to_string(x)); }
  Csv& raw(const std::string& s) {
    if (!row_start_) out_ << ',';
    out_ << s;
    row_start_ = false;
    return *this;
  }
  void end_row() {
    out_ << '\n';
    row_start_ = true;
  }
  std::string str() const { return out_.str(); }

 private:
  std::ostringstream out_;
  bool row_start_ = true;
};

CommandResult json_result(Json body, const Json& config, const Json& tolerances) {
  CommandResult r;
  r.format = OutputFormat::json;
  r.meta = make_meta(config, seed_of(config), tolerances);
  body["meta"] = r.meta;
  r.text = body.dump(2) + "\n";
  return r;
}

CommandResult csv_result(const Csv& csv, const Json& config, const Json& tolerances) {
  CommandResult r;
  r.format = OutputFormat::csv;
  r.meta = make_meta(config, seed_of(config), tolerances);
  r.text = csv.str();
  return r;
}

// ---- rate -----------------------------------------------------------------

CommandResult cmd_rate(const Json& config, int) {
  const BipartiteState state = state_from_json(require_field(config, "state", "config"));
  const HermitianOperator h = operator_from_json(require_field(config, "H", "config"));
  const double gamma = entanglement_rate(state, h);
  const FactorDims& d = state.dims();
  const double hn = operator_norm(h);
  Json body{{"gamma", gamma},
            {"h_norm", hn},
            {"dims", {d.a, d.A, d.B, d.b}},
            {"sie_rate_bound", sie_rate_bound(std::min(d.A, d.B), hn)}};
  return json_result(std::move(body), config, Json{{"norm", 1e-12}, {"imag_residue", kImagResidueTol}});
}

// ---- lambda-max -------------------------------------------------------------

CommandResult cmd_lambda_max(const Json& config, int) {
  Json body;
  AdmissiblePair pair = [&] {
    if (config.contains("pair")) return pair_from_json(config.at("pair"));
    const int dim = get_required<int>(config, "dim");
    const double p = get_required<double>(config, "p");
    AdmissiblePair sampled = sample_admissible_pair(dim, p, seed_of(config));
    body["pair"] = to_json(sampled);
    return sampled;
  }();
  const HamiltonianOptimum opt = maximize_over_hamiltonian(pair);
  body["value"] = opt.lambda_max;
  body["optimal_H"] = to_json(opt.h_opt);
  body["sim_bound"] = pair.p() < 1.0 ? sim_bound(pair.p()) : std::numeric_limits<double>::quiet_NaN();
  if (pair.p() <= kProofRegimeMax) body["sie_lambda_bound"] = sie_lambda_bound(pair.p());
  CommandResult r = json_result(std::move(body), config, Json{{"hermiticity", kHermiticityTol}, {"psd", kPsdTol}});
  if (pair.p() <= kProofRegimeMax && opt.lambda_max > sie_lambda_bound(pair.p()) * (1.0 + kProvedViolationRelTol)) {
    r.exit_code = kExitProvedViolation;
    r.bundle = Json{{"kind", "sie_violation"}, {"pair", to_json(pair)}, {"value", opt.lambda_max}}.dump(2);
  }
  return r;
}

// ---- proof-audit --------------------------------------------------------------

Json audit_tolerances() {
  return Json{{"identity", kIdentityTol}, {"bound_rel", 1e-9}, {"support_rel", kSupportRelTol}};
}

CommandResult cmd_proof_audit(const Json& config, int workers) {
  if (config.contains("pair")) {
    const AdmissiblePair pair = pair_from_json(config.at("pair"));
    const DecompositionReport rep = proof_decomposition(pair, optimal_projector(pair));
    CommandResult r = json_result(Json{{"report", to_json(rep)}}, config, audit_tolerances());
    if (!rep.all_bounds_hold()) {
      r.exit_code = kExitProvedViolation;
      r.bundle = Json{{"kind", "audit_violation"}, {"pair", to_json(pair)}, {"report", to_json(rep)}}.dump(2);
    }
    return r;
  }
  const int dim = get_required<int>(config, "dim");
  const double p = get_required<double>(config, "p");
  const int trials = get_or<int>(config, "trials", 100);
  if (trials < 0) fail(ErrorCode::invalid_argument, "config: 'trials' must be >= 0");
  if (!(p > 0.0 && p <= kProofRegimeMax)) {
    fail(ErrorCode::domain, "config: proof-audit needs 0 < p <= 1/e^2");
  }
  const std::uint64_t seed = seed_of(config);
  struct Row {
    double lambda;
    DecompositionReport rep;
    Json pair;
  };
  std::vector<Row> rows(trials);
  parallel_for(rows.size(), workers, [&](std::size_t t) {
    const AdmissiblePair pair = sample_admissible_pair(dim, p, derive_seed(seed, t));
    rows[t].lambda = max_lambda_value(pair);
    rows[t].rep = proof_decomposition(pair, optimal_projector(pair));
    if (!rows[t].rep.all_bounds_hold()) rows[t].pair = to_json(pair);
  });
  Csv csv{"trial",      "lambda",       "direct",          "total",       "identity_error",
          "line1_total", "line1_bound", "line3_aggregate", "line3_bound", "separated",
          "separated_bound", "lambda_bound", "min_margin", "violations"};
  Json violating = Json::array();
  for (int t = 0; t < trials; ++t) {
    const DecompositionReport& rep = rows[t].rep;
    double min_margin = std::numeric_limits<double>::infinity();
    for (double m : rep.margins) min_margin = std::min(min_margin, m);
    csv.cell(t).cell(rows[t].lambda).cell(rep.direct).cell(rep.total).cell(std::abs(rep.total - rep.direct));
    csv.cell(rep.line1_total.value).cell(rep.line1_total.bound);
    csv.cell(rep.line3_aggregate.value).cell(rep.line3_aggregate.bound);
    csv.cell(rep.separated.value).cell(rep.separated.bound);
    csv.cell(rep.lambda_bound).cell(min_margin).cell(static_cast<int>(rep.violations.size()));
    csv.end_row();
    if (!rep.all_bounds_hold()) {
      violating.push_back(Json{{"trial", t}, {"pair", rows[t].pair}, {"report", to_json(rep)}});
    }
  }
  CommandResult r = csv_result(csv, config, audit_tolerances());
  if (!violating.empty()) {
    r.exit_code = kExitProvedViolation;
    r.bundle = Json{{"kind", "audit_violation"}, {"instances", violating}}.dump(2);
    r.message = std::to_string(violating.size()) + " audited instance(s) violated a proof-step bound";
  }
  return r;
}

// ---- sim-scan -------------------------------------------------------------------

TrialBudget budget_of(const Json& config, TrialBudget fallback) {
  TrialBudget b = fallback;
  b.restarts = get_or<int>(config, "restarts", b.restarts);
  b.iters = get_or<int>(config, "iters", b.iters);
  b.max_coords = get_or<int>(config, "max_coords", b.max_coords);
  return b;
}

CommandResult cmd_sim_scan(const Json& config, int workers) {
  const auto dims = get_or<std::vector<int>>(config, "dims", {2, 4, 8});
  const auto p_grid = get_or<std::vector<double>>(config, "p_grid", {0.02, 0.05, 0.1, 0.2, 0.3, 0.4, 0.5});
  const TrialBudget budget = budget_of(config, TrialBudget{8, 100, 0});
  const Json tol{{"sim_violation", kSimViolationTol}, {"proved_violation_rel", kProvedViolationRelTol}};
  ScanResult scan;
  try {
    scan = conjecture_scan(dims, p_grid, budget, seed_of(config), workers);
  } catch (const BoundViolation& v) {
    CommandResult r = csv_result(Csv{"dim", "p"}, config, tol);
    r.exit_code = kExitProvedViolation;
    r.bundle = v.bundle();
    r.message = v.what();
    return r;
  }
  Csv csv{"dim",   "p",    "best",   "sim_bound",  "sie_bound",  "ratio_sim",
          "ratio_sie", "seed", "trials", "rejections", "evaluations"};
  for (std::size_t i = 0; i < scan.records.size(); ++i) {
    const SearchRecord& rec = scan.records[i];
    const double sie = scan.sie_bounds[i];
    const double ratio_sie = std::isnan(sie) ? sie : rec.best_value / sie;
    csv.cell(rec.dim).cell(rec.p).cell(rec.best_value).cell(scan.sim_bounds[i]).cell(sie);
    csv.cell(rec.ratio).cell(ratio_sie).raw(std::to_string(rec.seed));
    csv.cell(rec.trials).cell(rec.rejections).cell(rec.evaluations);
    csv.end_row();
  }
  CommandResult r = csv_result(csv, config, tol);
  if (!scan.events.empty()) {
    Json events = Json::array();
    for (const ScanEvent& e : scan.events) {
      events.push_back(Json{{"kind", e.kind}, {"dim", e.dim}, {"p", e.p}, {"ratio", e.ratio}, {"record", e.bundle}});
    }
    r.exit_code = kExitConjectureViolation;
    r.bundle = Json{{"kind", "sim_violation"}, {"events", events}}.dump(2);
    r.message = std::to_string(scan.events.size()) + " cell(s) exceeded the conjectured bound";
  }
  return r;
}

// ---- beta-search ------------------------------------------------------------------

HermitianOperator zz_interaction() {
  Matrix m = Matrix::Zero(4, 4);
  m.diagonal() << 1.0, -1.0, -1.0, 1.0;
  return HermitianOperator(m);
}

CommandResult cmd_beta_search(const Json& config, int workers) {
  const auto d = get_or<std::vector<int>>(config, "dims", {1, 2, 2, 1});
  if (d.size() != 4) fail(ErrorCode::invalid_argument, "config: 'dims' must list [d_a, d_A, d_B, d_b]");
  const FactorDims dims{d[0], d[1], d[2], d[3]};
  const HermitianOperator h = config.contains("H") ? operator_from_json(config.at("H")) : zz_interaction();
  const TrialBudget budget = budget_of(config, TrialBudget{16, 200, 0});
  const SearchRecord rec = maximize_rate_over_states(dims, h, budget, seed_of(config), workers);
  Json body{{"record", to_json(rec)},
            {"best_value_nats", rec.best_value},
            {"best_value_bits", rec.best_value / std::log(2.0)},
            {"beta_bits", BoundConstants::beta_bits},
            {"h_norm", operator_norm(h)}};
  return json_result(std::move(body), config, Json{{"fd_step", 1e-6}, {"stall_gradient", 1e-10}});
}

// ---- adiabatic / locality ----------------------------------------------------------

Json path_tolerances() {
  return Json{{"gap_floor", kGapFloor}, {"transport", kTransportTol}, {"rate_abs", 1e-4}, {"rate_rel", 1e-2}};
}

CommandResult cmd_adiabatic(const Json& config, int workers) {
  const ChainPathSpec spec = chain_spec_from_json(config);
  const GeneratorKind kind = generator_kind_from_string(get_or<std::string>(config, "generator", "filtered"));
  const bool check = get_or<bool>(config, "check_rates", true);
  const std::vector<PathPoint> pts = entropy_along_path(spec, kind, workers, check);
  Csv csv{"s", "E0", "gap", "S_L", "dS_ds_comm", "dS_ds_fd", "K_norm"};
  for (const PathPoint& pt : pts) {
    csv.cell(pt.s).cell(pt.energy).cell(pt.gap).cell(pt.entropy).cell(pt.rate_commutator).cell(pt.rate_fd);
    csv.cell(pt.k_norm);
    csv.end_row();
  }
  CommandResult r = csv_result(csv, config, path_tolerances());
  if (get_or<bool>(config, "transport", false) && !spec.s_grid.empty()) {
    std::vector<double> residuals(spec.s_grid.size());
    parallel_for(residuals.size(), workers,
                 [&](std::size_t i) { residuals[i] = transport_residual(spec, spec.s_grid[i], kind); });
    double worst = 0.0;
    for (double x : residuals) worst = std::max(worst, x);
    const double step = get_or<double>(config, "transport_step", 1e-3);
    r.meta["transport"] = Json{{"max_residual", worst},
                               {"fidelity", transport_fidelity(spec, spec.s_grid.front(), spec.s_grid.back(), step, kind)},
                               {"step", step}};
  }
  return r;
}

CommandResult cmd_locality(const Json& config, int) {
  Json path = config;
  if (!path.contains("s_grid")) path["s_grid"] = Json::array();
  const ChainPathSpec spec = chain_spec_from_json(path);
  const double s = get_or<double>(config, "s", 0.5);
  const int center = get_or<int>(config, "center", spec.n_sites / 2);
  const std::string term = get_or<std::string>(config, "term", "local");
  const GeneratorKind kind = generator_kind_from_string(get_or<std::string>(config, "generator", "filtered"));
  HermitianOperator h_prime = chain_hamiltonian_derivative(spec, s);
  if (term == "local") {
    h_prime = local_term_derivative(spec, s, center);
  } else if (term != "full") {
    fail(ErrorCode::invalid_argument, "config: 'term' must be 'local' or 'full'");
  }
  const HermitianOperator k = adiabatic_generator(build_chain_hamiltonian(spec, s), h_prime, kind);
  const LocalityProfile prof = locality_profile(k, spec, center);
  Csv csv{"r", "strength"};
  for (std::size_t i = 0; i < prof.radii.size(); ++i) {
    csv.cell(prof.radii[i]).cell(prof.strengths[i]);
    csv.end_row();
  }
  CommandResult r = csv_result(csv, config, Json{{"reconstruction", 1e-9}});
  r.meta["profile"] = Json{{"trace_part", prof.trace_part}, {"reconstruction_error", prof.reconstruction_error}};
  return r;
}

// ---- bounds -------------------------------------------------------------------------

CommandResult cmd_bounds(const Json& config, int) {
  Csv csv{"quantity", "value"};
  if (config.contains("d") || config.contains("hnorm")) {
    csv.raw("sie_rate_bound").cell(sie_rate_bound(get_or<int>(config, "d", 2), get_or<double>(config, "hnorm", 1.0)));
    csv.end_row();
  }
  if (config.contains("p")) {
    const double p = get_required<double>(config, "p");
    csv.raw("sim_bound").cell(sim_bound(p));
    csv.end_row();
    if (p <= kProofRegimeMax) {
      csv.raw("sie_lambda_bound").cell(sie_lambda_bound(p));
      csv.end_row();
    }
  }
  if (config.contains("area_law")) {
    const AreaLawBound b = area_law_bound(area_law_params_from_json(config.at("area_law")));
    csv.raw("xi").cell(b.xi);
    csv.end_row();
    csv.raw("area_sum_bound").cell(b.sum_bound);
    csv.end_row();
    csv.raw("area_rate_bound").cell(b.rate_bound);
    csv.end_row();
  }
  return csv_result(csv, config, Json::object());
}

using Handler = std::function<CommandResult(const Json&, int)>;

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> table{
      {"rate", cmd_rate},           {"lambda-max", cmd_lambda_max}, {"proof-audit", cmd_proof_audit},
      {"sim-scan", cmd_sim_scan},   {"beta-search", cmd_beta_search}, {"adiabatic", cmd_adiabatic},
      {"locality", cmd_locality},   {"bounds", cmd_bounds}};
  return table;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"rate",        "lambda-max", "proof-audit", "sim-scan",
                                              "beta-search", "adiabatic",  "locality",    "bounds"};
  return names;
}

CommandResult run_command(const std::string& name, const Json& config, int workers) {
  const auto it = handlers().find(name);
  if (it == handlers().end()) fail(ErrorCode::invalid_argument, "unknown command '" + name + "'");
  if (!config.is_object()) fail(ErrorCode::invalid_argument, "config: expected a JSON object");
  return it->second(config, workers < 1 ? 1 : workers);
}

}  // namespace entrate
