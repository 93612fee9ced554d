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

#include "entrate/search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "entrate/error.hpp"
#include "entrate/parallel.hpp"

namespace entrate {

const char* method_name(SearchMethod m) noexcept {
  switch (m) {
    case SearchMethod::random: return "random";
    case SearchMethod::projected_gradient: return "projected_gradient";
    case SearchMethod::hybrid: return "hybrid";
  }
  return "unknown";
}

Json to_json(const SearchRecord& r) {
  return Json{{"dim", r.dim},
              {"p", r.p},
              {"best_value", r.best_value},
              {"bound_value", r.bound_value},
              {"ratio", r.ratio},
              {"argmax", r.argmax},
              {"seed", r.seed},
              {"trials", r.trials},
              {"method", method_name(r.method)},
              {"rejections", r.rejections},
              {"stalled_restarts", r.stalled_restarts},
              {"evaluations", r.evaluations},
              {"history", r.history}};
}

namespace {

constexpr double kFdStep = 1e-6;
constexpr double kStepStart = 0.1;
constexpr double kStepFloor = 1e-8;
constexpr int kSamplerTries = 64;

// Adds `h` along the k-th real coordinate of a Hermitian matrix: the first
// d coordinates are the diagonal, then (re, im) of each i < j.
void perturb_hermitian(Matrix& m, int k, double h) {
  const int d = static_cast<int>(m.rows());
  if (k < d) {
    m(k, k) += h;
    return;
  }
  int q = k - d;
  const bool imag = q % 2 == 1;
  q /= 2;
  int i = 0;
  while (q >= d - 1 - i) {
    q -= d - 1 - i;
    ++i;
  }
  const int j = i + 1 + q;
  const Complex delta = imag ? Complex(0.0, h) : Complex(h, 0.0);
  m(i, j) += delta;
  m(j, i) += std::conj(delta);
}

// Eigen-decomposition of a matrix known to be Hermitian up to rounding.
struct Eig {
  RealVector values;  // ascending
  Matrix vectors;
};

Eig eig_hermitian(const Matrix& m) {
  const Matrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  if (es.info() != Eigen::Success) fail(ErrorCode::numerical, "search: eigensolver did not converge");
  return {es.eigenvalues(), es.eigenvectors()};
}

// An admissible (Y, Z) point together with its objective value.
struct PairPoint {
  Matrix y;
  Matrix z;
  double value = -std::numeric_limits<double>::infinity();
};

// Projects raw Hermitian (Y, Z) onto the admissible set: Y to the unit-trace
// PSD cone, Z to [0, I] by eigenvalue clipping, then Tr(Y Z) = p by scaling Z
// down or lifting it toward I. Evaluates max_H Lambda on the result.
PairPoint project_and_evaluate(const Matrix& y_raw, const Matrix& z_raw, double p) {
  PairPoint out;
  const Eig ey = eig_hermitian(y_raw);
  RealVector yv = ey.values.cwiseMax(0.0);
  const double tr = yv.sum();
  if (!(tr > 0.0)) return out;
  yv /= tr;
  const Matrix& v = ey.vectors;
  const Eig ez = eig_hermitian(z_raw);
  const RealVector zc = ez.values.cwiseMax(0.0).cwiseMin(1.0);
  Matrix zhat = v.adjoint() * ez.vectors * zc.cast<Complex>().asDiagonal() * ez.vectors.adjoint() * v;
  double t = 0.0;
  for (int i = 0; i < yv.size(); ++i) t += yv(i) * zhat(i, i).real();
  const int d = static_cast<int>(yv.size());
  if (t >= p) {
    zhat *= p / t;
  } else {
    const double alpha = (p - t) / (1.0 - t);
    zhat = (1.0 - alpha) * zhat + alpha * Matrix::Identity(d, d);
  }
  const double top = yv.maxCoeff();
  RealVector logy(d), sq(d);
  for (int i = 0; i < d; ++i) {
    logy(i) = yv(i) > kSupportRelTol * top ? std::log(yv(i)) : 0.0;
    sq(i) = std::sqrt(yv(i));
  }
  Matrix m(d, d);
  for (int j = 0; j < d; ++j) {
    for (int i = 0; i < d; ++i) {
      // -i X_ij (l_j - l_i) with X = Y^{1/2} Z Y^{1/2} in Y's eigenbasis
      m(i, j) = Complex(0.0, -1.0) * sq(i) * sq(j) * zhat(i, j) * (logy(j) - logy(i));
    }
  }
  out.value = eig_hermitian(m).values.cwiseAbs().sum();
  out.y = v * yv.cast<Complex>().asDiagonal() * v.adjoint();
  out.z = v * zhat * v.adjoint();
  return out;
}

std::vector<int> choose_coords(int total, int max_coords, Rng& rng) {
  std::vector<int> coords(total);
  std::iota(coords.begin(), coords.end(), 0);
  if (max_coords <= 0 || max_coords >= total) return coords;
  // Partial Fisher-Yates with an explicit index draw (portable across
  // standard libraries, unlike std::shuffle).
  for (int i = 0; i < max_coords; ++i) {
    const std::uint64_t r = rng();
    const int j = i + static_cast<int>(r % static_cast<std::uint64_t>(total - i));
    std::swap(coords[i], coords[j]);
  }
  coords.resize(max_coords);
  std::sort(coords.begin(), coords.end());
  return coords;
}

struct RestartResult {
  PairPoint best;
  std::vector<double> history;
  long long evaluations = 0;
  int rejections = 0;
  bool valid = false;
};

RestartResult ascend_pair(int dim, double p, const TrialBudget& budget, std::uint64_t seed) {
  RestartResult res;
  Matrix y0, z0;
  try {
    SampledPair s = sample_admissible_pair_detailed(dim, p, seed, SampleOptions{kSamplerTries});
    res.rejections = s.rejections;
    y0 = s.pair.y().matrix();
    z0 = s.z.matrix();
  } catch (const Error& e) {
    if (e.code() != ErrorCode::resource) throw;
    // Rejection sampling cannot reach large p at large dim; start from a raw
    // draw lifted into admissibility instead.
    res.rejections = kSamplerTries;
    Rng rng(derive_seed(seed, 0x6c696674ULL));
    y0 = random_density_matrix(dim, rng).matrix();
    z0 = random_contraction(dim, rng).matrix();
  }
  PairPoint cur = project_and_evaluate(y0, z0, p);
  ++res.evaluations;
  if (!std::isfinite(cur.value)) return res;
  res.valid = true;

  Rng coord_rng(derive_seed(seed, 0x636f6f7264ULL));
  const int per_block = dim * dim;
  const int total = 2 * per_block;
  for (int it = 0; it < budget.iters; ++it) {
    const std::vector<int> coords = choose_coords(total, budget.max_coords, coord_rng);
    std::vector<double> grad(coords.size());
    double gnorm2 = 0.0;
    for (std::size_t c = 0; c < coords.size(); ++c) {
      const int k = coords[c];
      Matrix yp = cur.y, ym = cur.y, zp = cur.z, zm = cur.z;
      if (k < per_block) {
        perturb_hermitian(yp, k, kFdStep);
        perturb_hermitian(ym, k, -kFdStep);
      } else {
        perturb_hermitian(zp, k - per_block, kFdStep);
        perturb_hermitian(zm, k - per_block, -kFdStep);
      }
      const double fp = project_and_evaluate(yp, zp, p).value;
      const double fm = project_and_evaluate(ym, zm, p).value;
      res.evaluations += 2;
      grad[c] = std::isfinite(fp) && std::isfinite(fm) ? (fp - fm) / (2.0 * kFdStep) : 0.0;
      gnorm2 += grad[c] * grad[c];
    }
    const double gnorm = std::sqrt(gnorm2);
    if (!(gnorm > 1e-12)) {
      res.history.push_back(cur.value);
      break;
    }
    bool accepted = false;
    for (double step = kStepStart; step >= kStepFloor; step *= 0.5) {
      Matrix yc = cur.y, zc = cur.z;
      for (std::size_t c = 0; c < coords.size(); ++c) {
        const int k = coords[c];
        const double delta = step * grad[c] / gnorm;
        if (k < per_block) {
          perturb_hermitian(yc, k, delta);
        } else {
          perturb_hermitian(zc, k - per_block, delta);
        }
      }
      PairPoint cand = project_and_evaluate(yc, zc, p);
      ++res.evaluations;
      if (cand.value > cur.value) {
        cur = std::move(cand);
        accepted = true;
        break;
      }
    }
    res.history.push_back(cur.value);
    if (!accepted && budget.max_coords <= 0) break;
  }
  res.best = std::move(cur);
  return res;
}

}  // namespace

SearchRecord maximize_lambda_over_pairs(int dim, double p, const TrialBudget& budget,
                                        std::uint64_t seed, int workers) {
  if (dim < 2) fail(ErrorCode::invalid_argument, "maximize_lambda_over_pairs: dim must be >= 2");
  if (!(p > 0.0 && p < 1.0)) fail(ErrorCode::domain, "maximize_lambda_over_pairs: p outside (0, 1)");
  if (budget.restarts < 1 || budget.iters < 0) {
    fail(ErrorCode::invalid_argument, "maximize_lambda_over_pairs: budget needs restarts >= 1, iters >= 0");
  }
  std::vector<RestartResult> results(budget.restarts);
  parallel_for(results.size(), workers, [&](std::size_t r) {
    results[r] = ascend_pair(dim, p, budget, derive_seed(seed, r));
  });

  SearchRecord rec;
  rec.dim = dim;
  rec.p = p;
  rec.seed = seed;
  rec.method = SearchMethod::hybrid;
  int best = -1;
  for (int r = 0; r < budget.restarts; ++r) {
    rec.evaluations += results[r].evaluations;
    rec.rejections += results[r].rejections;
    if (!results[r].valid) continue;
    ++rec.trials;
    if (best < 0 || results[r].best.value > results[best].best.value) best = r;
  }
  if (best < 0) fail(ErrorCode::resource, "maximize_lambda_over_pairs: no valid samples in budget");

  const AdmissiblePair pair(HermitianOperator::hermitized(
                                [&] {
                                  const Eig ey = eig_hermitian(results[best].best.y);
                                  RealVector sq = ey.values.cwiseMax(0.0).cwiseSqrt();
                                  const Matrix s = ey.vectors * sq.cast<Complex>().asDiagonal() *
                                                   ey.vectors.adjoint();
                                  return Matrix(s * results[best].best.z * s);
                                }()),
                            HermitianOperator::hermitized(results[best].best.y), p);
  rec.best_value = max_lambda_value(pair);
  rec.bound_value = sim_bound(p);
  rec.ratio = rec.best_value / rec.bound_value;
  rec.argmax = to_json(pair);
  rec.history = results[best].history;

  if (p <= kProofRegimeMax) {
    const double sie = sie_lambda_bound(p);
    if (rec.best_value > sie * (1.0 + kProvedViolationRelTol)) {
      std::ostringstream msg;
      msg << "maximize_lambda_over_pairs: Lambda = " << rec.best_value << " exceeds 9 p ln(1/p) = " << sie
          << " at dim " << dim << ", p " << p;
      throw BoundViolation(msg.str(), to_json(rec).dump());
    }
  }
  return rec;
}

namespace {

struct StateResult {
  Vector best;
  double value = -std::numeric_limits<double>::infinity();
  std::vector<double> history;
  long long evaluations = 0;
  bool stalled = false;
};

StateResult ascend_state(const FactorDims& dims, const HermitianOperator& h, const TrialBudget& budget,
                         Vector start) {
  StateResult res;
  const auto eval = [&](const Vector& psi) {
    ++res.evaluations;
    return entanglement_rate(BipartiteState(dims, psi / psi.norm()), h);
  };
  Vector cur = start / start.norm();
  double fcur = eval(cur);
  const int n = static_cast<int>(cur.size());
  for (int it = 0; it < budget.iters; ++it) {
    Vector g(n);
    for (int k = 0; k < n; ++k) {
      double parts[2];
      for (int c = 0; c < 2; ++c) {
        const Complex e = c == 0 ? Complex(kFdStep, 0.0) : Complex(0.0, kFdStep);
        Vector vp = cur, vm = cur;
        vp(k) += e;
        vm(k) -= e;
        parts[c] = (eval(vp) - eval(vm)) / (2.0 * kFdStep);
      }
      g(k) = Complex(parts[0], parts[1]);
    }
    // Tangent projection: drop the radial component (real overlap with psi).
    g -= cur * (cur.adjoint() * g)(0).real();
    const double gnorm = g.norm();
    if (!(gnorm > 1e-10)) {
      if (it == 0) res.stalled = true;
      break;
    }
    bool accepted = false;
    for (double step = kStepStart; step >= kStepFloor; step *= 0.5) {
      Vector cand = cur + (step / gnorm) * g;
      cand /= cand.norm();
      const double fc = eval(cand);
      if (fc > fcur) {
        cur = std::move(cand);
        fcur = fc;
        accepted = true;
        break;
      }
    }
    res.history.push_back(fcur);
    if (!accepted) break;
  }
  res.best = cur;
  res.value = fcur;
  return res;
}

}  // namespace

SearchRecord maximize_rate_over_states(FactorDims dims, const HermitianOperator& h_ab,
                                       const TrialBudget& budget, std::uint64_t seed, int workers,
                                       std::span<const Vector> initial_states) {
  if (h_ab.dim() != dims.A * dims.B) {
    fail(ErrorCode::dimension_mismatch, "maximize_rate_over_states: H_AB dim != d_A * d_B");
  }
  if (budget.restarts < 1 || budget.iters < 0) {
    fail(ErrorCode::invalid_argument, "maximize_rate_over_states: budget needs restarts >= 1, iters >= 0");
  }
  for (const Vector& v : initial_states) {
    if (v.size() != dims.total()) fail(ErrorCode::dimension_mismatch, "initial state has the wrong dim");
  }
  const int restarts = std::max<int>(budget.restarts, static_cast<int>(initial_states.size()));
  std::vector<StateResult> results(restarts);
  parallel_for(results.size(), workers, [&](std::size_t r) {
    Vector start;
    if (r < initial_states.size()) {
      start = initial_states[r];
    } else {
      Rng rng(derive_seed(seed, r));
      start = haar_state(dims.total(), rng);
    }
    results[r] = ascend_state(dims, h_ab, budget, std::move(start));
  });

  SearchRecord rec;
  rec.dim = dims.total();
  rec.p = 1.0 / (static_cast<double>(dims.B) * dims.B);
  rec.seed = seed;
  rec.method = SearchMethod::hybrid;
  int best = 0;
  for (int r = 0; r < restarts; ++r) {
    rec.evaluations += results[r].evaluations;
    rec.stalled_restarts += results[r].stalled ? 1 : 0;
    ++rec.trials;
    if (results[r].value > results[best].value) best = r;
  }
  const BipartiteState state(dims, results[best].best);
  rec.best_value = entanglement_rate(state, h_ab);
  const double hn = operator_norm(h_ab);
  if (dims == FactorDims{1, 2, 2, 1}) {
    rec.bound_value = BoundConstants::beta_nats() * hn;
  } else {
    rec.bound_value = sie_rate_bound(std::min(dims.A, dims.B), hn);
  }
  rec.ratio = rec.bound_value > 0.0 ? rec.best_value / rec.bound_value : 0.0;
  rec.argmax = to_json(state);
  rec.history = results[best].history;
  return rec;
}

ScanResult conjecture_scan(std::span<const int> dims, std::span<const double> p_grid,
                           const TrialBudget& budget, std::uint64_t seed, int workers) {
  ScanResult out;
  std::uint64_t cell = 0;
  for (int dim : dims) {
    for (double p : p_grid) {
      const std::uint64_t cell_seed = derive_seed(seed, cell++);
      SearchRecord rec = maximize_lambda_over_pairs(dim, p, budget, cell_seed, workers);
      const double sie = p <= kProofRegimeMax ? sie_lambda_bound(p) : std::numeric_limits<double>::quiet_NaN();
      if (rec.ratio > 1.0 + kSimViolationTol) {
        out.events.push_back(ScanEvent{"sim_violation", dim, p, rec.ratio, to_json(rec)});
      }
      out.sim_bounds.push_back(rec.bound_value);
      out.sie_bounds.push_back(sie);
      out.records.push_back(std::move(rec));
    }
  }
  return out;
}

}  // namespace entrate
