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

#include "entrate/operator_core.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "entrate/error.hpp"

namespace entrate {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::invalid_argument: return "invalid_argument";
    case ErrorCode::dimension_mismatch: return "dimension_mismatch";
    case ErrorCode::not_hermitian: return "not_hermitian";
    case ErrorCode::not_psd: return "not_psd";
    case ErrorCode::domain: return "domain";
    case ErrorCode::numerical: return "numerical";
    case ErrorCode::not_gapped: return "not_gapped";
    case ErrorCode::resource: return "resource";
    case ErrorCode::admissibility: return "admissibility";
    case ErrorCode::internal: return "internal";
    case ErrorCode::io: return "io";
    case ErrorCode::proved_bound_violation: return "proved_bound_violation";
    case ErrorCode::conjecture_violation: return "conjecture_violation";
  }
  return "unknown";
}

double hermiticity_deviation(const Matrix& m) {
  double worst = 0.0;
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    for (Eigen::Index i = 0; i <= j; ++i) {
      worst = std::max(worst, std::abs(m(i, j) - std::conj(m(j, i))));
    }
  }
  return worst;
}

HermitianOperator::HermitianOperator(Matrix entries) : m_(std::move(entries)) {
  if (m_.rows() < 1 || m_.rows() != m_.cols()) {
    std::ostringstream msg;
    msg << "operator must be square with dim >= 1, got " << m_.rows() << "x"
        << m_.cols();
    fail(ErrorCode::dimension_mismatch, msg.str());
  }
  if (!m_.allFinite()) fail(ErrorCode::invalid_argument, "operator has non-finite entries");
  const double dev = hermiticity_deviation(m_);
  if (dev > kHermiticityTol) {
    std::ostringstream msg;
    msg << "operator is not Hermitian: max |M_ij - conj(M_ji)| = " << dev;
    fail(ErrorCode::not_hermitian, msg.str());
  }
}

HermitianOperator HermitianOperator::hermitized(const Matrix& m) {
  if (m.rows() < 1 || m.rows() != m.cols()) {
    fail(ErrorCode::dimension_mismatch, "hermitized: operator must be square");
  }
  Matrix h = 0.5 * (m + m.adjoint());
  return HermitianOperator(std::move(h), Unchecked{});
}

HermitianOperator HermitianOperator::identity(int dim) {
  return HermitianOperator(Matrix::Identity(dim, dim));
}

HermitianOperator HermitianOperator::zero(int dim) {
  return HermitianOperator(Matrix::Zero(dim, dim));
}

HermitianOperator HermitianOperator::diagonal(const RealVector& d) {
  return HermitianOperator(d.cast<Complex>().asDiagonal().toDenseMatrix());
}

HermitianOperator HermitianOperator::operator+(const HermitianOperator& o) const {
  if (o.dim() != dim()) fail(ErrorCode::dimension_mismatch, "operator sum: dims differ");
  return HermitianOperator(m_ + o.m_, Unchecked{});
}

HermitianOperator HermitianOperator::operator-(const HermitianOperator& o) const {
  if (o.dim() != dim()) fail(ErrorCode::dimension_mismatch, "operator difference: dims differ");
  return HermitianOperator(m_ - o.m_, Unchecked{});
}

HermitianOperator HermitianOperator::operator*(double s) const {
  return HermitianOperator(m_ * s, Unchecked{});
}

DensityMatrix::DensityMatrix(HermitianOperator op) : op_(std::move(op)) {
  const double tr = op_.trace();
  if (std::abs(tr - 1.0) > kTraceTol) {
    std::ostringstream msg;
    msg << "density matrix trace is " << tr << ", expected 1";
    fail(ErrorCode::invalid_argument, msg.str());
  }
  const double lo = min_eigenvalue(op_);
  if (lo < -kPsdTol) {
    std::ostringstream msg;
    msg << "density matrix has negative eigenvalue " << lo;
    fail(ErrorCode::not_psd, msg.str());
  }
}

DensityMatrix DensityMatrix::from_pure(const Vector& psi) {
  return DensityMatrix(HermitianOperator::hermitized(psi * psi.adjoint()));
}

double Spectrum::max_abs() const {
  return eigenvalues.size() == 0 ? 0.0 : eigenvalues.cwiseAbs().maxCoeff();
}

Spectrum hermitian_spectrum(const HermitianOperator& m) {
  const Matrix& a = m.matrix();
  const int n = m.dim();
  Spectrum out;
  out.eigenvalues.resize(n);
  out.eigenvectors.resize(n, n);
  // Real symmetric input (spin chains, diagonal operators) takes the real
  // solver, which is several times faster at chain sizes.
  if (a.imag().cwiseAbs().maxCoeff() == 0.0) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a.real());
    if (es.info() != Eigen::Success) fail(ErrorCode::numerical, "eigensolver did not converge");
    for (int i = 0; i < n; ++i) {
      out.eigenvalues(i) = es.eigenvalues()(n - 1 - i);
      out.eigenvectors.col(i) = es.eigenvectors().col(n - 1 - i).cast<Complex>();
    }
  } else {
    Eigen::SelfAdjointEigenSolver<Matrix> es(a);
    if (es.info() != Eigen::Success) fail(ErrorCode::numerical, "eigensolver did not converge");
    for (int i = 0; i < n; ++i) {
      out.eigenvalues(i) = es.eigenvalues()(n - 1 - i);
      out.eigenvectors.col(i) = es.eigenvectors().col(n - 1 - i);
    }
  }
  return out;
}

HermitianOperator apply_function(const Spectrum& spectrum,
                                 const std::function<double(double)>& f) {
  RealVector fv(spectrum.dim());
  for (int i = 0; i < spectrum.dim(); ++i) fv(i) = f(spectrum.eigenvalues(i));
  const Matrix& v = spectrum.eigenvectors;
  return HermitianOperator::hermitized(v * fv.cast<Complex>().asDiagonal() * v.adjoint());
}

double default_support_tol(const Spectrum& spectrum) {
  const double top = spectrum.eigenvalues.size() ? spectrum.eigenvalues(0) : 0.0;
  return kSupportRelTol * std::max(top, 0.0);
}

HermitianOperator matrix_log_on_support(const Spectrum& spectrum,
                                        std::optional<double> support_tol) {
  const double lo = spectrum.eigenvalues(spectrum.dim() - 1);
  if (lo < -kPsdTol) {
    std::ostringstream msg;
    msg << "matrix_log_on_support: negative eigenvalue " << lo;
    fail(ErrorCode::not_psd, msg.str());
  }
  const double tol = support_tol.value_or(default_support_tol(spectrum));
  if (!(tol > 0.0) && !support_tol) {
    // All eigenvalues are zero: the log on an empty support is 0.
    return HermitianOperator::zero(spectrum.dim());
  }
  if (!(tol > 0.0)) fail(ErrorCode::invalid_argument, "support_tol must be positive");
  return apply_function(spectrum, [tol](double x) { return x > tol ? std::log(x) : 0.0; });
}

HermitianOperator matrix_log_on_support(const HermitianOperator& y,
                                        std::optional<double> support_tol) {
  return matrix_log_on_support(hermitian_spectrum(y), support_tol);
}

namespace {

struct FactorSplit {
  std::vector<Eigen::Index> kept_offsets;
  std::vector<Eigen::Index> traced_offsets;
};

// Offsets of every kept / traced multi-index inside the full row index, so
// that full = kept_offsets[k] + traced_offsets[t].
FactorSplit split_factors(std::span<const int> dims, std::span<const int> keep,
                          Eigen::Index expected_dim) {
  const int nf = static_cast<int>(dims.size());
  if (nf == 0) fail(ErrorCode::dimension_mismatch, "partial trace: empty dims");
  std::vector<bool> kept(nf, false);
  for (int k : keep) {
    if (k < 0 || k >= nf) fail(ErrorCode::dimension_mismatch, "partial trace: keep index out of range");
    if (kept[k]) fail(ErrorCode::invalid_argument, "partial trace: duplicate keep index");
    kept[k] = true;
  }
  Eigen::Index total = 1;
  for (int d : dims) {
    if (d < 1) fail(ErrorCode::dimension_mismatch, "partial trace: factor dims must be positive");
    total *= d;
  }
  if (total != expected_dim) {
    std::ostringstream msg;
    msg << "partial trace: product of dims " << total << " != operator dim " << expected_dim;
    fail(ErrorCode::dimension_mismatch, msg.str());
  }
  std::vector<Eigen::Index> stride(nf);
  Eigen::Index s = 1;
  for (int f = nf - 1; f >= 0; --f) {
    stride[f] = s;
    s *= dims[f];
  }
  auto offsets = [&](bool want_kept) {
    std::vector<Eigen::Index> out{0};
    for (int f = 0; f < nf; ++f) {
      if (kept[f] != want_kept) continue;
      std::vector<Eigen::Index> next;
      next.reserve(out.size() * dims[f]);
      for (Eigen::Index base : out) {
        for (int x = 0; x < dims[f]; ++x) next.push_back(base + x * stride[f]);
      }
      out = std::move(next);
    }
    return out;
  };
  return FactorSplit{offsets(true), offsets(false)};
}

}  // namespace

Matrix partial_trace(const Matrix& m, std::span<const int> dims,
                     std::span<const int> keep) {
  if (keep.empty()) fail(ErrorCode::invalid_argument, "partial trace: keep must be nonempty");
  const FactorSplit fs = split_factors(dims, keep, m.rows());
  const auto nk = static_cast<Eigen::Index>(fs.kept_offsets.size());
  Matrix out = Matrix::Zero(nk, nk);
  for (Eigen::Index j = 0; j < nk; ++j) {
    for (Eigen::Index i = 0; i < nk; ++i) {
      Complex acc{0.0, 0.0};
      for (Eigen::Index t : fs.traced_offsets) {
        acc += m(fs.kept_offsets[i] + t, fs.kept_offsets[j] + t);
      }
      out(i, j) = acc;
    }
  }
  return out;
}

Matrix embed_with_identity(const Matrix& kept, std::span<const int> dims,
                           std::span<const int> keep) {
  Eigen::Index total = 1;
  for (int d : dims) total *= d;
  const FactorSplit fs = split_factors(dims, keep, total);
  const auto nk = static_cast<Eigen::Index>(fs.kept_offsets.size());
  if (kept.rows() != nk || kept.cols() != nk) {
    fail(ErrorCode::dimension_mismatch, "embed_with_identity: kept operator has wrong dim");
  }
  Matrix out = Matrix::Zero(total, total);
  for (Eigen::Index t : fs.traced_offsets) {
    for (Eigen::Index j = 0; j < nk; ++j) {
      for (Eigen::Index i = 0; i < nk; ++i) {
        out(fs.kept_offsets[i] + t, fs.kept_offsets[j] + t) = kept(i, j);
      }
    }
  }
  return out;
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> dims,
                            std::span<const int> keep) {
  if (keep.size() >= dims.size()) {
    fail(ErrorCode::invalid_argument, "partial trace: keep must be a strict subset of the factors");
  }
  return DensityMatrix(HermitianOperator::hermitized(partial_trace(rho.op().matrix(), dims, keep)));
}

DensityMatrix reduced_from_pure(const Vector& psi, int left_dim) {
  if (left_dim < 1 || psi.size() % left_dim != 0) {
    fail(ErrorCode::dimension_mismatch, "reduced_from_pure: left_dim does not divide state size");
  }
  const Eigen::Index right = psi.size() / left_dim;
  Eigen::Map<const Matrix> mt(psi.data(), right, left_dim);  // mt(r, l) = psi[l * right + r]
  Matrix rho = mt.transpose() * mt.conjugate();
  return DensityMatrix(HermitianOperator::hermitized(rho));
}

double trace_norm(const HermitianOperator& m) {
  return hermitian_spectrum(m).eigenvalues.cwiseAbs().sum();
}

double operator_norm(const HermitianOperator& m) {
  return hermitian_spectrum(m).max_abs();
}

double entropy_of_spectrum(const RealVector& eigenvalues) {
  double top = 0.0;
  for (double x : eigenvalues) top = std::max(top, x);
  const double tol = kSupportRelTol * top;
  double s = 0.0;
  for (double x : eigenvalues) {
    if (x > tol) s -= x * std::log(x);
  }
  return s;
}

double von_neumann_entropy(const DensityMatrix& rho) {
  return entropy_of_spectrum(hermitian_spectrum(rho.op()).eigenvalues);
}

double min_eigenvalue(const HermitianOperator& m) {
  const Spectrum sp = hermitian_spectrum(m);
  return sp.eigenvalues(sp.dim() - 1);
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

}  // namespace entrate
