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

#include "entrate/adiabatic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "entrate/error.hpp"
#include "entrate/parallel.hpp"
#include "entrate/rate_engine.hpp"

namespace entrate {

Schedule Schedule::constant(double c) { return polynomial({c}); }

Schedule Schedule::polynomial(std::vector<double> coeffs) {
  if (coeffs.empty()) fail(ErrorCode::invalid_argument, "schedule: empty coefficient list");
  for (double c : coeffs) {
    if (!std::isfinite(c)) fail(ErrorCode::invalid_argument, "schedule: non-finite coefficient");
  }
  Schedule out;
  out.coeffs_ = std::move(coeffs);
  return out;
}

Schedule Schedule::tabulated(std::vector<double> knots, std::vector<double> values) {
  if (knots.size() < 2 || knots.size() != values.size()) {
    fail(ErrorCode::invalid_argument, "schedule: table needs >= 2 knots and matching values");
  }
  for (std::size_t i = 1; i < knots.size(); ++i) {
    if (!(knots[i] > knots[i - 1])) fail(ErrorCode::invalid_argument, "schedule: knots must increase strictly");
  }
  if (knots.front() > 0.0 || knots.back() < 1.0) {
    fail(ErrorCode::invalid_argument, "schedule: table must cover [0, 1]");
  }
  Schedule out;
  out.knots_ = std::move(knots);
  out.values_ = std::move(values);
  return out;
}

double Schedule::value(double s) const {
  if (is_polynomial()) {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * s + *it;
    return acc;
  }
  auto hi = std::upper_bound(knots_.begin(), knots_.end(), s);
  if (hi == knots_.begin()) ++hi;
  if (hi == knots_.end()) --hi;
  const std::size_t j = static_cast<std::size_t>(hi - knots_.begin());
  const double t = (s - knots_[j - 1]) / (knots_[j] - knots_[j - 1]);
  return (1.0 - t) * values_[j - 1] + t * values_[j];
}

double Schedule::derivative(double s) const {
  if (is_polynomial()) {
    double acc = 0.0;
    for (std::size_t k = coeffs_.size(); k-- > 1;) acc = acc * s + static_cast<double>(k) * coeffs_[k];
    return acc;
  }
  return (value(s + kScheduleFdStep) - value(s - kScheduleFdStep)) / (2.0 * kScheduleFdStep);
}

Schedule schedule_from_json(const Json& j, const char* name) {
  const std::string origin = std::string("schedule '") + name + "'";
  try {
    if (j.is_number()) return Schedule::constant(j.get<double>());
    if (j.is_array()) return Schedule::polynomial(j.get<std::vector<double>>());
    if (j.is_object()) {
      return Schedule::tabulated(require_field(j, "s", origin).get<std::vector<double>>(),
                                 require_field(j, "values", origin).get<std::vector<double>>());
    }
  } catch (const Json::exception&) {
    fail(ErrorCode::invalid_argument, origin + ": expected numbers");
  }
  fail(ErrorCode::invalid_argument, origin + ": expected a number, coefficient array or table");
}

void ChainPathSpec::validate() const {
  if (n_sites < 2) fail(ErrorCode::invalid_argument, "chain: n_sites must be >= 2");
  if (n_sites > kMaxChainSites) {
    fail(ErrorCode::resource, "chain: n_sites " + std::to_string(n_sites) + " beyond the dense ceiling of " +
                                  std::to_string(kMaxChainSites));
  }
  if (local_dim != 2) fail(ErrorCode::invalid_argument, "chain: only local_dim 2 is supported");
  if (cut < 1 || cut >= n_sites) fail(ErrorCode::invalid_argument, "chain: cut must satisfy 1 <= cut < n_sites");
  for (std::size_t i = 0; i < s_grid.size(); ++i) {
    if (!(s_grid[i] >= 0.0 && s_grid[i] <= 1.0)) fail(ErrorCode::domain, "chain: s_grid outside [0, 1]");
    if (i > 0 && !(s_grid[i] > s_grid[i - 1])) {
      fail(ErrorCode::invalid_argument, "chain: s_grid must increase strictly");
    }
  }
}

ChainPathSpec chain_spec_from_json(const Json& j) {
  const std::string origin = "path spec";
  ChainPathSpec spec;
  try {
    spec.n_sites = require_field(j, "n_sites", origin).get<int>();
    spec.cut = j.contains("cut") ? j.at("cut").get<int>() : spec.n_sites / 2;
    if (j.contains("local_dim")) spec.local_dim = j.at("local_dim").get<int>();
    if (j.contains("J")) spec.J = schedule_from_json(j.at("J"), "J");
    if (j.contains("g")) spec.g = schedule_from_json(j.at("g"), "g");
    const Json& grid = require_field(j, "s_grid", origin);
    if (grid.is_object()) {
      const int points = require_field(grid, "points", "s_grid").get<int>();
      if (points < 1) fail(ErrorCode::invalid_argument, "s_grid: 'points' must be >= 1");
      for (int i = 0; i < points; ++i) spec.s_grid.push_back(points == 1 ? 0.0 : double(i) / (points - 1));
    } else {
      spec.s_grid = grid.get<std::vector<double>>();
    }
  } catch (const Json::exception& e) {
    fail(ErrorCode::invalid_argument, origin + ": " + e.what());
  }
  spec.validate();
  return spec;
}

namespace {

// Site i occupies bit (n - 1 - i) of the basis index.
inline int site_bit(int n, int site) { return n - 1 - site; }

Matrix ising_terms(int n, double zz_coeff, double x_coeff, int only_site) {
  const int dim = 1 << n;
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
  for (int b = 0; b < dim; ++b) {
    for (int i = 0; i < n; ++i) {
      if (only_site >= 0 && i != only_site) continue;
      const int bi = (b >> site_bit(n, i)) & 1;
      if (i + 1 < n) {
        const int bj = (b >> site_bit(n, i + 1)) & 1;
        h(b, b) += zz_coeff * (bi == bj ? 1.0 : -1.0);
      }
      h(b ^ (1 << site_bit(n, i)), b) += x_coeff;
    }
  }
  return h.cast<Complex>();
}

void check_s(double s, const char* who) {
  if (!(s >= 0.0 && s <= 1.0)) fail(ErrorCode::domain, std::string(who) + ": s outside [0, 1]");
}

}  // namespace

HermitianOperator build_chain_hamiltonian(const ChainPathSpec& spec, double s) {
  spec.validate();
  check_s(s, "build_chain_hamiltonian");
  return HermitianOperator(ising_terms(spec.n_sites, -spec.J.value(s), -spec.g.value(s), -1));
}

HermitianOperator chain_hamiltonian_derivative(const ChainPathSpec& spec, double s) {
  spec.validate();
  check_s(s, "chain_hamiltonian_derivative");
  return HermitianOperator(ising_terms(spec.n_sites, -spec.J.derivative(s), -spec.g.derivative(s), -1));
}

HermitianOperator local_term_derivative(const ChainPathSpec& spec, double s, int site) {
  spec.validate();
  check_s(s, "local_term_derivative");
  if (site < 0 || site >= spec.n_sites) fail(ErrorCode::invalid_argument, "local_term_derivative: site out of range");
  return HermitianOperator(ising_terms(spec.n_sites, -spec.J.derivative(s), -spec.g.derivative(s), site));
}

GroundState ground_state(const Spectrum& spectrum) {
  const int n = spectrum.dim();
  if (n < 2) fail(ErrorCode::invalid_argument, "ground_state: need dim >= 2 for a gap");
  GroundState gs;
  gs.energy = spectrum.eigenvalues(n - 1);
  gs.gap = spectrum.eigenvalues(n - 2) - gs.energy;
  if (!(gs.gap >= kGapFloor)) {
    std::ostringstream msg;
    msg << "ground_state: gap " << gs.gap << " below floor " << kGapFloor << " (degenerate ground state)";
    fail(ErrorCode::not_gapped, msg.str());
  }
  gs.psi = spectrum.eigenvectors.col(n - 1);
  const double top = gs.psi.cwiseAbs().maxCoeff();
  for (int i = 0; i < n; ++i) {
    const double a = std::abs(gs.psi(i));
    if (a > 1e-12 * top) {
      gs.psi *= std::conj(gs.psi(i)) / a;
      gs.psi(i) = Complex(gs.psi(i).real(), 0.0);
      break;
    }
  }
  return gs;
}

GroundState ground_state(const HermitianOperator& h) { return ground_state(hermitian_spectrum(h)); }

const char* generator_kind_name(GeneratorKind k) noexcept {
  return k == GeneratorKind::ground_state ? "ground_state" : "filtered";
}

GeneratorKind generator_kind_from_string(const std::string& name) {
  if (name == "ground_state") return GeneratorKind::ground_state;
  if (name == "filtered") return GeneratorKind::filtered;
  fail(ErrorCode::invalid_argument, "unknown generator kind '" + name + "' (ground_state | filtered)");
}

namespace {

// C-infinity step: 0 at x <= 0, 1 at x >= 1.
double smooth_step(double x) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  const double a = std::exp(-1.0 / x);
  const double b = std::exp(-1.0 / (1.0 - x));
  return a / (a + b);
}

// Generator in H's eigenbasis (columns ordered as in `spectrum`).
Matrix generator_eigenbasis(const Spectrum& spectrum, const Matrix& hp_eig, GeneratorKind kind, double gap) {
  const int n = spectrum.dim();
  const RealVector& e = spectrum.eigenvalues;
  Matrix k = Matrix::Zero(n, n);
  const Complex i_unit(0.0, 1.0);
  if (kind == GeneratorKind::ground_state) {
    const int g = n - 1;
    for (int m = 0; m < n - 1; ++m) {
      // A_{m,g} = H'_{m,g} / (E_0 - E_m); K = i (A^dagger - A).
      const Complex a = hp_eig(m, g) / (e(g) - e(m));
      k(m, g) = -i_unit * a;
      k(g, m) = i_unit * std::conj(a);
    }
    return k;
  }
  for (int c = 0; c < n; ++c) {
    for (int r = 0; r < n; ++r) {
      const double w = e(r) - e(c);
      if (w == 0.0) continue;
      k(r, c) = i_unit * hp_eig(r, c) * (smooth_step(std::abs(w) / gap) / w);
    }
  }
  return k;
}

}  // namespace

HermitianOperator adiabatic_generator(const Spectrum& spectrum, const HermitianOperator& h_prime,
                                      GeneratorKind kind) {
  if (h_prime.dim() != spectrum.dim()) fail(ErrorCode::dimension_mismatch, "adiabatic_generator: H' dim != H dim");
  const GroundState gs = ground_state(spectrum);
  const Matrix& v = spectrum.eigenvectors;
  const Matrix hp_eig = v.adjoint() * h_prime.matrix() * v;
  const Matrix k = v * generator_eigenbasis(spectrum, hp_eig, kind, gs.gap) * v.adjoint();
  return HermitianOperator::hermitized(k);
}

HermitianOperator adiabatic_generator(const HermitianOperator& h, const HermitianOperator& h_prime,
                                      GeneratorKind kind) {
  if (h.dim() != h_prime.dim()) fail(ErrorCode::dimension_mismatch, "adiabatic_generator: H' dim != H dim");
  return adiabatic_generator(hermitian_spectrum(h), h_prime, kind);
}

namespace {

Vector aligned_ground_state(const ChainPathSpec& spec, double s, const Vector& ref) {
  Vector psi = ground_state(build_chain_hamiltonian(spec, s)).psi;
  const Complex ov = ref.dot(psi);  // <ref|psi>
  if (std::abs(ov) > 0.0) psi *= std::conj(ov) / std::abs(ov);
  return psi;
}

}  // namespace

double transport_residual(const ChainPathSpec& spec, double s, GeneratorKind kind, double ds) {
  spec.validate();
  check_s(s, "transport_residual");
  if (!(ds > 0.0 && ds < 0.25)) fail(ErrorCode::invalid_argument, "transport_residual: ds outside (0, 0.25)");
  const Spectrum sp = hermitian_spectrum(build_chain_hamiltonian(spec, s));
  const Vector psi = ground_state(sp).psi;
  const HermitianOperator k = adiabatic_generator(sp, chain_hamiltonian_derivative(spec, s), kind);
  Vector dpsi;
  if (s - ds >= 0.0 && s + ds <= 1.0) {
    dpsi = (aligned_ground_state(spec, s + ds, psi) - aligned_ground_state(spec, s - ds, psi)) / (2.0 * ds);
  } else {
    const double dir = s + 2.0 * ds <= 1.0 ? 1.0 : -1.0;
    const Vector p1 = aligned_ground_state(spec, s + dir * ds, psi);
    const Vector p2 = aligned_ground_state(spec, s + dir * 2.0 * ds, psi);
    dpsi = dir * (-3.0 * psi + 4.0 * p1 - p2) / (2.0 * ds);
  }
  return (Complex(0.0, 1.0) * (k.matrix() * psi) - dpsi).norm();
}

namespace {

// Real-arithmetic generator data for a chain point (chain Hamiltonians are
// real symmetric): i K = -V G V^T with G real antisymmetric.
struct RealGenerator {
  Eigen::MatrixXd v;
  Eigen::MatrixXd g;
  Eigen::VectorXd ground;
  double gap;
};

RealGenerator real_generator(const ChainPathSpec& spec, double s, GeneratorKind kind) {
  const Eigen::MatrixXd h = build_chain_hamiltonian(spec, s).matrix().real();
  const Eigen::MatrixXd hp = chain_hamiltonian_derivative(spec, s).matrix().real();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
  if (es.info() != Eigen::Success) fail(ErrorCode::numerical, "transport: eigensolver did not converge");
  const Eigen::VectorXd& e = es.eigenvalues();  // ascending
  const int n = static_cast<int>(e.size());
  RealGenerator out;
  out.gap = e(1) - e(0);
  if (!(out.gap >= kGapFloor)) fail(ErrorCode::not_gapped, "transport: path not gapped");
  out.v = es.eigenvectors();
  out.ground = out.v.col(0);
  const Eigen::MatrixXd hp_eig = out.v.transpose() * hp * out.v;
  out.g = Eigen::MatrixXd::Zero(n, n);
  if (kind == GeneratorKind::ground_state) {
    for (int m = 1; m < n; ++m) {
      const double a = hp_eig(m, 0) / (e(0) - e(m));
      out.g(m, 0) = -a;
      out.g(0, m) = a;
    }
  } else {
    for (int c = 0; c < n; ++c) {
      for (int r = 0; r < n; ++r) {
        const double w = e(r) - e(c);
        if (w != 0.0) out.g(r, c) = hp_eig(r, c) * (smooth_step(std::abs(w) / out.gap) / w);
      }
    }
  }
  return out;
}

}  // namespace

double transport_fidelity(const ChainPathSpec& spec, double s0, double s1, double step, GeneratorKind kind) {
  spec.validate();
  check_s(s0, "transport_fidelity");
  check_s(s1, "transport_fidelity");
  if (!(step > 0.0)) fail(ErrorCode::invalid_argument, "transport_fidelity: step must be > 0");
  const int steps = std::max(1, static_cast<int>(std::ceil(std::abs(s1 - s0) / step - 1e-9)));
  const double h = (s1 - s0) / steps;
  // Stage points repeat (s + h/2 twice, s + h as the next start); keep the
  // most recent generators.
  std::vector<std::pair<double, RealGenerator>> cache;
  const auto generator_at = [&](double s) -> const RealGenerator& {
    for (const auto& entry : cache) {
      if (entry.first == s) return entry.second;
    }
    if (cache.size() >= 3) cache.erase(cache.begin());
    cache.emplace_back(s, real_generator(spec, s, kind));
    return cache.back().second;
  };
  const auto rhs = [&](double s, const Eigen::MatrixXd& psi) -> Eigen::MatrixXd {
    const RealGenerator& gen = generator_at(s);
    return -(gen.v * (gen.g * (gen.v.transpose() * psi)));
  };
  // psi as two real columns (real, imaginary part).
  Eigen::MatrixXd psi = Eigen::MatrixXd::Zero(spec.dim(), 2);
  psi.col(0) = generator_at(s0).ground;
  for (int i = 0; i < steps; ++i) {
    const double s = s0 + i * h;
    const double s_next = i + 1 == steps ? s1 : s0 + (i + 1) * h;
    const double s_mid = s + 0.5 * h;
    const Eigen::MatrixXd k1 = rhs(s, psi);
    const Eigen::MatrixXd k2 = rhs(s_mid, psi + 0.5 * h * k1);
    const Eigen::MatrixXd k3 = rhs(s_mid, psi + 0.5 * h * k2);
    const Eigen::MatrixXd k4 = rhs(s_next, psi + h * k3);
    psi += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  const Eigen::VectorXd target = generator_at(s1).ground;
  const double re = target.dot(psi.col(0)), im = target.dot(psi.col(1));
  return std::min(1.0, (re * re + im * im) / psi.squaredNorm());
}

Matrix compress_to_sites(const Matrix& k, int n_sites, int lo, int hi) {
  const int dim = 1 << n_sites;
  if (k.rows() != dim || k.cols() != dim) fail(ErrorCode::dimension_mismatch, "compress_to_sites: operator dim != 2^n");
  if (lo < 0 || hi >= n_sites || lo > hi) fail(ErrorCode::invalid_argument, "compress_to_sites: bad site range");
  const int m = hi - lo + 1;
  const int right = n_sites - 1 - hi;
  const int d_ball = 1 << m;
  const int d_out = dim / d_ball;
  const auto index = [&](int a, int o) {
    const int left_bits = o >> right;
    const int right_bits = o & ((1 << right) - 1);
    return (left_bits << (m + right)) | (a << right) | right_bits;
  };
  Matrix red = Matrix::Zero(d_ball, d_ball);
  for (int o = 0; o < d_out; ++o) {
    for (int b = 0; b < d_ball; ++b) {
      const int col = index(b, o);
      for (int a = 0; a < d_ball; ++a) red(a, b) += k(index(a, o), col);
    }
  }
  red /= static_cast<double>(d_out);
  Matrix out = Matrix::Zero(dim, dim);
  for (int o = 0; o < d_out; ++o) {
    for (int b = 0; b < d_ball; ++b) {
      const int col = index(b, o);
      for (int a = 0; a < d_ball; ++a) out(index(a, o), col) = red(a, b);
    }
  }
  return out;
}

LocalityProfile locality_profile(const HermitianOperator& k, const ChainPathSpec& spec, int center) {
  spec.validate();
  const int n = spec.n_sites;
  if (center < 0 || center >= n) fail(ErrorCode::invalid_argument, "locality_profile: center out of range");
  if (k.dim() != spec.dim()) fail(ErrorCode::dimension_mismatch, "locality_profile: K dim != 2^n_sites");
  LocalityProfile prof;
  prof.center = center;
  const int dim = k.dim();
  const Matrix base = (k.matrix().trace() / static_cast<double>(dim)) * Matrix::Identity(dim, dim);
  prof.trace_part = std::abs(k.matrix().trace()) / dim;
  Matrix prev = base;
  Matrix sum = base;
  const int r_max = std::max(center, n - 1 - center);
  for (int r = 0; r <= r_max; ++r) {
    const Matrix pi = compress_to_sites(k.matrix(), n, std::max(0, center - r), std::min(n - 1, center + r));
    const Matrix shell = pi - prev;
    prof.radii.push_back(r);
    prof.strengths.push_back(operator_norm(HermitianOperator::hermitized(shell)));
    sum += shell;
    prev = pi;
  }
  prof.reconstruction_error = operator_norm(HermitianOperator::hermitized(sum - k.matrix()));
  return prof;
}

double pure_state_entropy_rate(const Vector& psi, int left_dim, const Matrix& k) {
  const int dim = static_cast<int>(psi.size());
  if (left_dim < 1 || dim % left_dim != 0) fail(ErrorCode::dimension_mismatch, "pure_state_entropy_rate: bad left_dim");
  if (k.rows() != dim || k.cols() != dim) fail(ErrorCode::dimension_mismatch, "pure_state_entropy_rate: K dim");
  const int right_dim = dim / left_dim;
  const DensityMatrix rho_l = reduced_from_pure(psi, left_dim);
  const Matrix log_l = matrix_log_on_support(rho_l.op()).matrix();
  // psi as a left_dim x right_dim matrix: M(l, r) = psi(l * right_dim + r).
  const Eigen::Map<const Matrix> mt(psi.data(), right_dim, left_dim);
  const Matrix lm = log_l * mt.transpose();
  Vector lpsi(dim);
  Eigen::Map<Matrix>(lpsi.data(), right_dim, left_dim) = lm.transpose();
  return 2.0 * lpsi.dot(k * psi).imag();
}

std::vector<PathPoint> entropy_along_path(const ChainPathSpec& spec, GeneratorKind kind, int workers,
                                          bool check_rates) {
  spec.validate();
  const std::vector<double>& grid = spec.s_grid;
  const int left_dim = 1 << spec.cut;
  std::vector<PathPoint> pts(grid.size());
  parallel_for(grid.size(), workers, [&](std::size_t i) {
    const double s = grid[i];
    const Spectrum sp = hermitian_spectrum(build_chain_hamiltonian(spec, s));
    GroundState gs;
    try {
      gs = ground_state(sp);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::not_gapped) throw;
      std::ostringstream msg;
      msg << "entropy_along_path: path not gapped at s = " << s << ": " << e.what();
      fail(ErrorCode::not_gapped, msg.str());
    }
    const HermitianOperator k = adiabatic_generator(sp, chain_hamiltonian_derivative(spec, s), kind);
    PathPoint& pt = pts[i];
    pt.s = s;
    pt.energy = gs.energy;
    pt.gap = gs.gap;
    pt.entropy = von_neumann_entropy(reduced_from_pure(gs.psi, left_dim));
    pt.rate_commutator = pure_state_entropy_rate(gs.psi, left_dim, k.matrix());
    pt.k_norm = operator_norm(k);
    pt.psi = gs.psi;
  });

  // Finite differences of S_L over the (possibly nonuniform) grid.
  const std::size_t n = pts.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (n == 1) {
      pts[i].rate_fd = std::numeric_limits<double>::quiet_NaN();
      continue;
    }
    if (n == 2) {
      pts[i].rate_fd = (pts[1].entropy - pts[0].entropy) / (grid[1] - grid[0]);
      continue;
    }
    const std::size_t c = std::clamp<std::size_t>(i, 1, n - 2);
    const double h1 = grid[c] - grid[c - 1], h2 = grid[c + 1] - grid[c];
    const double f0 = pts[c - 1].entropy, f1 = pts[c].entropy, f2 = pts[c + 1].entropy;
    if (i == c) {
      pts[i].rate_fd = -h2 / (h1 * (h1 + h2)) * f0 + (h2 - h1) / (h1 * h2) * f1 + h1 / (h2 * (h1 + h2)) * f2;
    } else if (i < c) {
      pts[i].rate_fd =
          -(2.0 * h1 + h2) / (h1 * (h1 + h2)) * f0 + (h1 + h2) / (h1 * h2) * f1 - h1 / (h2 * (h1 + h2)) * f2;
    } else {
      pts[i].rate_fd =
          h2 / (h1 * (h1 + h2)) * f0 - (h1 + h2) / (h1 * h2) * f1 + (2.0 * h2 + h1) / (h2 * (h1 + h2)) * f2;
    }
  }
  if (check_rates) {
    for (const PathPoint& pt : pts) {
      if (std::isnan(pt.rate_fd)) continue;
      const double tol = std::max(1e-4, 1e-2 * std::abs(pt.rate_commutator));
      if (std::abs(pt.rate_commutator - pt.rate_fd) > tol) {
        std::ostringstream msg;
        msg << "entropy_along_path: commutator rate " << pt.rate_commutator << " and finite-difference rate "
            << pt.rate_fd << " disagree at s = " << pt.s << " (tolerance " << tol << ")";
        fail(ErrorCode::numerical, msg.str());
      }
    }
  }
  return pts;
}

void AreaLawParams::validate() const {
  if (D < 1) fail(ErrorCode::invalid_argument, "area law: D must be >= 1");
  if (local_dim < 2) fail(ErrorCode::invalid_argument, "area law: local_dim must be >= 2");
  const double positives[] = {A, h_norm, hprime_norm, gamma, kappa, v};
  for (double x : positives) {
    if (!(x > 0.0) || !std::isfinite(x)) fail(ErrorCode::invalid_argument, "area law: parameters must be positive");
  }
  if (n_filter <= D + 2) {
    fail(ErrorCode::domain, "area law: filter decay power n_filter <= D + 2 makes the shell sum diverge");
  }
  if (gamma > h_norm) fail(ErrorCode::domain, "area law: requires gamma <= h_norm");
}

AreaLawParams area_law_params_from_json(const Json& j) {
  if (!j.is_object()) fail(ErrorCode::invalid_argument, "area law: expected a JSON object");
  AreaLawParams p;
  try {
    p.D = j.value("D", p.D);
    p.A = j.value("A", p.A);
    p.h_norm = j.value("h_norm", p.h_norm);
    p.hprime_norm = j.value("hprime_norm", p.hprime_norm);
    p.gamma = j.value("gamma", p.gamma);
    p.kappa = j.value("kappa", p.kappa);
    p.v = j.value("v", p.v);
    p.n_filter = j.value("n_filter", p.n_filter);
    p.local_dim = j.value("local_dim", p.local_dim);
  } catch (const Json::exception& e) {
    fail(ErrorCode::invalid_argument, std::string("area law: ") + e.what());
  }
  p.validate();
  return p;
}

AreaLawBound area_law_bound(const AreaLawParams& params) {
  params.validate();
  AreaLawBound b;
  b.v_lr = params.v_lr();
  b.xi = params.xi();
  b.sum_bound = params.hprime_norm / params.gamma * std::pow(b.xi, params.D + 2);
  b.rate_bound = params.A * b.sum_bound * std::log(static_cast<double>(params.local_dim));
  return b;
}

}  // namespace entrate
