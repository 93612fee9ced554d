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

// Transverse-field Ising chains along a gapped path H(s), s in [0, 1]:
// ground-state transport by the adiabatic generator K(s), its shell
// locality profile, the entanglement entropy of a cut along the path, and
// the area-law bound evaluators.
//
// Sites are numbered 0..n-1 with site 0 the most significant tensor factor.

#ifndef ENTRATE_ADIABATIC_HPP
#define ENTRATE_ADIABATIC_HPP

#include <vector>

#include "entrate/operator_core.hpp"
#include "entrate/serialization.hpp"

namespace entrate {

inline constexpr int kMaxChainSites = 12;
inline constexpr double kGapFloor = 1e-8;
inline constexpr double kTransportTol = 1e-4;
inline constexpr double kScheduleFdStep = 1e-5;

// A coupling as a function of s: polynomial coefficients (constant first) or
// a table of (s, value) knots interpolated linearly.
class Schedule {
 public:
  Schedule() = default;
  static Schedule constant(double c);
  static Schedule polynomial(std::vector<double> coeffs);
  static Schedule tabulated(std::vector<double> knots, std::vector<double> values);

  bool is_polynomial() const noexcept { return knots_.empty(); }
  double value(double s) const;
  // Exact for polynomials, central difference with kScheduleFdStep otherwise.
  double derivative(double s) const;

 private:
  std::vector<double> coeffs_;
  std::vector<double> knots_;
  std::vector<double> values_;
};

// JSON: a number, an array of polynomial coefficients, or
// { "s": [...], "values": [...] }.
Schedule schedule_from_json(const Json& j, const char* name);

struct ChainPathSpec {
  int n_sites = 8;
  int local_dim = 2;
  int cut = 4;  // sites [0, cut) form L
  Schedule J = Schedule::constant(1.0);
  Schedule g = Schedule::constant(1.0);
  std::vector<double> s_grid;

  void validate() const;
  int dim() const noexcept { return 1 << n_sites; }
};

// { "n_sites", "cut", "J", "g", "s_grid" }; the grid may also be given as
// { "points": N } for N uniform points on [0, 1].
ChainPathSpec chain_spec_from_json(const Json& j);

// H(s) = -J(s) sum Z_i Z_{i+1} - g(s) sum X_i, open boundary.
HermitianOperator build_chain_hamiltonian(const ChainPathSpec& spec, double s);
HermitianOperator chain_hamiltonian_derivative(const ChainPathSpec& spec, double s);
// d/ds of the local term h_i = -J Z_i Z_{i+1} - g X_i (the bond is absent on
// the last site).
HermitianOperator local_term_derivative(const ChainPathSpec& spec, double s, int site);

struct GroundState {
  double energy;
  Vector psi;
  double gap;
};

// Lowest eigenpair with the first nonzero amplitude made real positive.
// A gap below kGapFloor is ErrorCode::not_gapped.
GroundState ground_state(const HermitianOperator& h);
GroundState ground_state(const Spectrum& spectrum);

enum class GeneratorKind {
  // Rank-two: K = i (A^dagger - A), A = sum_{n != 0} |n><n|H'|0><0| / (E_0 - E_n).
  ground_state,
  // K_mn = i H'_mn b(|E_m - E_n| / gap) / (E_m - E_n) in H's eigenbasis, b a
  // smooth step equal to 1 above the gap. Same action on the ground state;
  // applied to a local term it stays quasi-local.
  filtered,
};

const char* generator_kind_name(GeneratorKind k) noexcept;
GeneratorKind generator_kind_from_string(const std::string& name);

HermitianOperator adiabatic_generator(const HermitianOperator& h, const HermitianOperator& h_prime,
                                      GeneratorKind kind = GeneratorKind::filtered);
HermitianOperator adiabatic_generator(const Spectrum& spectrum, const HermitianOperator& h_prime,
                                      GeneratorKind kind = GeneratorKind::filtered);

// || i K |Psi(s)> - d|Psi>/ds || with a phase-aligned finite-difference
// derivative of step ds (second-order one-sided stencils at the ends).
double transport_residual(const ChainPathSpec& spec, double s, GeneratorKind kind, double ds = 1e-4);

// Integrates d psi/ds = i K(s) psi with RK4 from s0 to s1 starting at the
// ground state of H(s0); returns |<Psi(s1)|psi(s1)>|^2.
double transport_fidelity(const ChainPathSpec& spec, double s0, double s1, double step = 1e-3,
                          GeneratorKind kind = GeneratorKind::filtered);

struct LocalityProfile {
  int center = 0;
  std::vector<int> radii;
  std::vector<double> strengths;  // operator norms of the shells
  double trace_part = 0.0;        // |Tr K| / dim
  double reconstruction_error = 0.0;  // || sum shells + trace part - Pi_rmax(K) ||
};

// Normalized partial-trace compression onto sites [lo, hi] (identity
// elsewhere).
Matrix compress_to_sites(const Matrix& k, int n_sites, int lo, int hi);

LocalityProfile locality_profile(const HermitianOperator& k, const ChainPathSpec& spec, int center);

struct PathPoint {
  double s;
  double energy;
  double gap;
  Vector psi;
  double entropy;
  double rate_commutator;
  double rate_fd;
  double k_norm;
};

// -i Tr(K [|psi><psi|, log rho_L (x) I]) for a pure state on left_dim x rest.
double pure_state_entropy_rate(const Vector& psi, int left_dim, const Matrix& k);

// Throws ErrorCode::numerical when the two rate estimates disagree by more
// than max(1e-4, 1e-2 |rate|) at a grid point and check_rates is set.
std::vector<PathPoint> entropy_along_path(const ChainPathSpec& spec,
                                          GeneratorKind kind = GeneratorKind::filtered,
                                          int workers = 1, bool check_rates = true);

struct AreaLawParams {
  int D = 1;
  double A = 1.0;
  double h_norm = 1.0;
  double hprime_norm = 1.0;
  double gamma = 1.0;
  double kappa = 1.0;
  double v = 1.0;
  int n_filter = 4;
  int local_dim = 2;

  double v_lr() const { return kappa / v; }
  double xi() const { return v_lr() / gamma; }
  void validate() const;
};

AreaLawParams area_law_params_from_json(const Json& j);

struct AreaLawBound {
  double sum_bound;   // (h'/gamma) xi^(D+2)
  double rate_bound;  // A sum_bound ln d_l
  double xi;
  double v_lr;
};

// Order-one prefactors are set to 1.
AreaLawBound area_law_bound(const AreaLawParams& params);

}  // namespace entrate

#endif  // ENTRATE_ADIABATIC_HPP
