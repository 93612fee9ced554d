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

// Dense Hermitian linear algebra shared by every other module.
//
// All logarithms are natural; entropies are in nats. Functions of an operator
// are evaluated through its eigendecomposition, and the logarithm is taken on
// the support only (eigenvalues at or below the support cutoff map to 0).

#ifndef ENTRATE_OPERATOR_CORE_HPP
#define ENTRATE_OPERATOR_CORE_HPP

#include <complex>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace entrate {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

inline constexpr double kHermiticityTol = 1e-12;
inline constexpr double kPsdTol = 1e-10;
inline constexpr double kTraceTol = 1e-10;
inline constexpr double kSupportRelTol = 1e-12;

class HermitianOperator {
 public:
  // Validates squareness, dim >= 1 and max |M_ij - conj(M_ji)| <= 1e-12.
  explicit HermitianOperator(Matrix entries);

  // (M + M^dagger) / 2 for operators that are Hermitian in exact arithmetic
  // but carry rounding noise (products, commutators times i, ...).
  static HermitianOperator hermitized(const Matrix& m);
  static HermitianOperator identity(int dim);
  static HermitianOperator zero(int dim);
  static HermitianOperator diagonal(const RealVector& d);

  int dim() const noexcept { return static_cast<int>(m_.rows()); }
  const Matrix& matrix() const noexcept { return m_; }
  double trace() const { return m_.trace().real(); }

  HermitianOperator operator+(const HermitianOperator& o) const;
  HermitianOperator operator-(const HermitianOperator& o) const;
  HermitianOperator operator*(double s) const;

 private:
  struct Unchecked {};
  HermitianOperator(Matrix m, Unchecked) : m_(std::move(m)) {}

  Matrix m_;
};

double hermiticity_deviation(const Matrix& m);

class DensityMatrix {
 public:
  // Validates eigenvalues >= -1e-10 and unit trace within 1e-10.
  explicit DensityMatrix(HermitianOperator op);
  static DensityMatrix from_pure(const Vector& psi);

  const HermitianOperator& op() const noexcept { return op_; }
  int dim() const noexcept { return op_.dim(); }

 private:
  HermitianOperator op_;
};

struct Spectrum {
  RealVector eigenvalues;  // descending
  Matrix eigenvectors;     // columns, matching eigenvalues

  int dim() const noexcept { return static_cast<int>(eigenvalues.size()); }
  double max_abs() const;
};

Spectrum hermitian_spectrum(const HermitianOperator& m);

// V f(lambda) V^dagger.
HermitianOperator apply_function(const Spectrum& spectrum,
                                 const std::function<double(double)>& f);

// Default cutoff: 1e-12 times the largest eigenvalue.
double default_support_tol(const Spectrum& spectrum);

HermitianOperator matrix_log_on_support(const HermitianOperator& y,
                                        std::optional<double> support_tol = {});
HermitianOperator matrix_log_on_support(const Spectrum& spectrum,
                                        std::optional<double> support_tol = {});

// Factors are ordered as in kron(dims[0], dims[1], ...); `keep` lists factor
// indices (any order, result follows ascending factor order).
DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> dims,
                            std::span<const int> keep);
Matrix partial_trace(const Matrix& m, std::span<const int> dims,
                     std::span<const int> keep);
// Inverse shape of partial_trace: kept-factor operator tensored with identity
// on the remaining factors, in the original factor order.
Matrix embed_with_identity(const Matrix& kept, std::span<const int> dims,
                           std::span<const int> keep);
// Reduced state of the leading `left_dim` factor of a pure state.
DensityMatrix reduced_from_pure(const Vector& psi, int left_dim);

double trace_norm(const HermitianOperator& m);
double operator_norm(const HermitianOperator& m);
double von_neumann_entropy(const DensityMatrix& rho);
double entropy_of_spectrum(const RealVector& eigenvalues);
double min_eigenvalue(const HermitianOperator& m);

Matrix kron(const Matrix& a, const Matrix& b);

}  // namespace entrate

#endif  // ENTRATE_OPERATOR_CORE_HPP
