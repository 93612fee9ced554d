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

#include "entrate/rate_engine.hpp"

#include <cmath>
#include <sstream>

#include "entrate/error.hpp"

namespace entrate {

double BoundConstants::beta_nats() { return beta_bits * std::log(2.0); }

AdmissiblePair::AdmissiblePair(HermitianOperator x, HermitianOperator y, double p)
    : x_(std::move(x)), y_(std::move(y)), p_(p) {
  if (x_.dim() != y_.dim()) fail(ErrorCode::dimension_mismatch, "admissible pair: X and Y dims differ");
  if (!(p_ > 0.0 && p_ <= 1.0)) {
    std::ostringstream msg;
    msg << "admissible pair: p = " << p_ << " outside (0, 1]";
    fail(ErrorCode::domain, msg.str());
  }
  std::ostringstream msg;
  if (std::abs(x_.trace() - p_) > kTraceTol) {
    msg << "admissible pair: Tr X = " << x_.trace() << " != p = " << p_;
    fail(ErrorCode::admissibility, msg.str());
  }
  if (std::abs(y_.trace() - 1.0) > kTraceTol) {
    msg << "admissible pair: Tr Y = " << y_.trace() << " != 1";
    fail(ErrorCode::admissibility, msg.str());
  }
  const double x_lo = min_eigenvalue(x_);
  if (x_lo < -kPsdTol) {
    msg << "admissible pair: X has eigenvalue " << x_lo << " < 0";
    fail(ErrorCode::admissibility, msg.str());
  }
  const double gap_lo = min_eigenvalue(y_ - x_);
  if (gap_lo < -kPsdTol) {
    msg << "admissible pair: Y - X has eigenvalue " << gap_lo << " < 0";
    fail(ErrorCode::admissibility, msg.str());
  }
}

BipartiteState::BipartiteState(FactorDims dims, Vector amplitudes)
    : dims_(dims), amp_(std::move(amplitudes)) {
  if (dims_.a < 1 || dims_.A < 1 || dims_.B < 1 || dims_.b < 1) {
    fail(ErrorCode::dimension_mismatch, "bipartite state: factor dims must be positive");
  }
  if (amp_.size() != dims_.total()) {
    std::ostringstream msg;
    msg << "bipartite state: " << amp_.size() << " amplitudes for total dim " << dims_.total();
    fail(ErrorCode::dimension_mismatch, msg.str());
  }
  const double n = amp_.norm();
  if (std::abs(n - 1.0) > 1e-12) {
    std::ostringstream msg;
    msg << "bipartite state: norm " << n << " != 1";
    fail(ErrorCode::invalid_argument, msg.str());
  }
}

namespace {

// Real part of -i * t, after checking the imaginary residue.
double real_of_minus_i(Complex t, const char* what) {
  // -i (a + i b) = b - i a
  if (std::abs(t.real()) > kImagResidueTol) {
    std::ostringstream msg;
    msg << what << ": imaginary residue " << t.real() << " exceeds " << kImagResidueTol;
    fail(ErrorCode::numerical, msg.str());
  }
  return t.imag();
}

Complex trace_of_product(const Matrix& a, const Matrix& b) {
  return a.transpose().cwiseProduct(b).sum();
}

}  // namespace

double entropy_rate(const HermitianOperator& rho, int left_dim, const HermitianOperator& k) {
  if (k.dim() != rho.dim()) fail(ErrorCode::dimension_mismatch, "entropy_rate: generator and state dims differ");
  if (left_dim < 1 || rho.dim() % left_dim != 0) {
    fail(ErrorCode::dimension_mismatch, "entropy_rate: left_dim does not divide the state dim");
  }
  const int right_dim = rho.dim() / left_dim;
  const std::array<int, 2> dims{left_dim, right_dim};
  const std::array<int, 1> keep{0};
  const Matrix rho_l = partial_trace(rho.matrix(), dims, keep);
  const HermitianOperator log_l = matrix_log_on_support(HermitianOperator::hermitized(rho_l));
  const Matrix log_full = embed_with_identity(log_l.matrix(), dims, keep);
  const Matrix comm = rho.matrix() * log_full - log_full * rho.matrix();
  return real_of_minus_i(trace_of_product(k.matrix(), comm), "entropy_rate");
}

double entanglement_rate(const BipartiteState& state, const HermitianOperator& h_ab) {
  const FactorDims& d = state.dims();
  if (h_ab.dim() != d.A * d.B) {
    std::ostringstream msg;
    msg << "entanglement_rate: H_AB dim " << h_ab.dim() << " != d_A * d_B = " << d.A * d.B;
    fail(ErrorCode::dimension_mismatch, msg.str());
  }
  const DensityMatrix rho = reduced_from_pure(state.amplitudes(), d.a * d.A * d.B);
  const HermitianOperator h_full =
      d.a == 1 ? h_ab : HermitianOperator::hermitized(kron(Matrix::Identity(d.a, d.a), h_ab.matrix()));
  return entropy_rate(rho.op(), d.a * d.A, h_full);
}

AdmissiblePair admissible_from_state(const DensityMatrix& rho_ab, int dim_a, int dim_b) {
  if (dim_a < 1 || dim_b < 1 || rho_ab.dim() != dim_a * dim_b) {
    fail(ErrorCode::dimension_mismatch, "admissible_from_state: rho dim != d_A * d_B");
  }
  const std::array<int, 2> dims{dim_a, dim_b};
  const std::array<int, 1> keep{0};
  const Matrix rho_a = partial_trace(rho_ab.op().matrix(), dims, keep);
  const double db = dim_b;
  Matrix x = rho_ab.op().matrix() / (db * db);
  Matrix y = kron(rho_a, Matrix::Identity(dim_b, dim_b)) / db;
  try {
    return AdmissiblePair(HermitianOperator::hermitized(x), HermitianOperator::hermitized(y),
                          1.0 / (db * db));
  } catch (const Error& e) {
    fail(ErrorCode::internal,
         std::string("admissible_from_state: identification violated admissibility: ") + e.what());
  }
}

HermitianOperator rate_operator(const AdmissiblePair& pair) {
  const Matrix log_y = matrix_log_on_support(pair.y()).matrix();
  const Matrix& x = pair.x().matrix();
  const Matrix comm = x * log_y - log_y * x;
  return HermitianOperator::hermitized(Complex(0.0, -1.0) * comm);
}

double lambda_functional(const HermitianOperator& h, const AdmissiblePair& pair) {
  if (h.dim() != pair.dim()) fail(ErrorCode::dimension_mismatch, "lambda_functional: H and pair dims differ");
  const double hn = operator_norm(h);
  if (hn > 1.0 + 1e-10) {
    std::ostringstream msg;
    msg << "lambda_functional: ||H|| = " << hn << " exceeds 1";
    fail(ErrorCode::invalid_argument, msg.str());
  }
  const Matrix log_y = matrix_log_on_support(pair.y()).matrix();
  const Matrix& x = pair.x().matrix();
  const Matrix comm = x * log_y - log_y * x;
  return real_of_minus_i(trace_of_product(h.matrix(), comm), "lambda_functional");
}

namespace {

void check_contraction_range(const HermitianOperator& p, const char* what) {
  const Spectrum sp = hermitian_spectrum(p);
  const double hi = sp.eigenvalues(0);
  const double lo = sp.eigenvalues(sp.dim() - 1);
  if (lo < -kPsdTol || hi > 1.0 + kPsdTol) {
    std::ostringstream msg;
    msg << what << ": operator must satisfy 0 <= P <= I, eigenvalues span [" << lo << ", " << hi << "]";
    fail(ErrorCode::invalid_argument, msg.str());
  }
}

}  // namespace

double lambda_eigenbasis(const HermitianOperator& projector, const AdmissiblePair& pair) {
  if (projector.dim() != pair.dim()) fail(ErrorCode::dimension_mismatch, "lambda_eigenbasis: dims differ");
  check_contraction_range(projector, "lambda_eigenbasis");
  const Spectrum sy = hermitian_spectrum(pair.y());
  const double tol = default_support_tol(sy);
  int n = 0;
  while (n < sy.dim() && sy.eigenvalues(n) > tol) ++n;
  const Matrix& v = sy.eigenvectors;
  const Matrix xh = v.adjoint() * pair.x().matrix() * v;
  const Matrix ph = v.adjoint() * projector.matrix() * v;
  Complex sum{0.0, 0.0};
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double w = std::log(sy.eigenvalues(i) / sy.eigenvalues(j));
      sum += w * (xh(i, j) * ph(j, i) - xh(j, i) * ph(i, j));
    }
  }
  return 2.0 * std::abs(sum);
}

namespace {
constexpr double kVanishingCommutator = 1e-13;
}

double max_lambda_value(const AdmissiblePair& pair) {
  const double v = trace_norm(rate_operator(pair));
  return v <= kVanishingCommutator ? 0.0 : v;
}

HamiltonianOptimum maximize_over_hamiltonian(const AdmissiblePair& pair) {
  const Spectrum sp = hermitian_spectrum(rate_operator(pair));
  const double value = sp.eigenvalues.cwiseAbs().sum();
  if (value <= kVanishingCommutator) {
    return {0.0, HermitianOperator::identity(pair.dim())};
  }
  return {value, apply_function(sp, [](double x) { return x < 0.0 ? -1.0 : 1.0; })};
}

HermitianOperator optimal_projector(const AdmissiblePair& pair) {
  const Spectrum sp = hermitian_spectrum(rate_operator(pair));
  return apply_function(sp, [](double x) { return x > 0.0 ? 1.0 : 0.0; });
}

HermitianOperator extract_contraction(const AdmissiblePair& pair) {
  const Spectrum sy = hermitian_spectrum(pair.y());
  const double tol = default_support_tol(sy);
  const int dim = sy.dim();
  int n = 0;
  while (n < dim && sy.eigenvalues(n) > tol) ++n;
  const Matrix& v = sy.eigenvectors;
  const Matrix xh = v.adjoint() * pair.x().matrix() * v;
  double off_support = 0.0;
  for (int j = 0; j < dim; ++j) {
    for (int i = 0; i < dim; ++i) {
      if (i >= n || j >= n) off_support = std::max(off_support, std::abs(xh(i, j)));
    }
  }
  if (off_support > 1e-9) {
    std::ostringstream msg;
    msg << "extract_contraction: X has weight " << off_support << " off the support of Y";
    fail(ErrorCode::admissibility, msg.str());
  }
  Matrix zh = Matrix::Zero(dim, dim);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      zh(i, j) = xh(i, j) / std::sqrt(sy.eigenvalues(i) * sy.eigenvalues(j));
    }
  }
  return HermitianOperator::hermitized(v * zh * v.adjoint());
}

}  // namespace entrate
