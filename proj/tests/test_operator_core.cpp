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

#include <array>
#include <functional>
#include <cmath>
#include <random>

#include <unsupported/Eigen/MatrixFunctions>

#include "doctest.h"
#include "entrate/error.hpp"
#include "entrate/operator_core.hpp"
#include "test_support.hpp"

using namespace entrate;
namespace ts = testing_support;

namespace {

HermitianOperator diag2(double a, double b) {
  RealVector d(2);
  d << a, b;
  return HermitianOperator::diagonal(d);
}

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::internal;
}

}  // namespace

TEST_CASE("non-Hermitian input is rejected with its deviation") {
  Matrix m = Matrix::Identity(2, 2);
  m(0, 1) = 1e-6;
  CHECK(code_of([&] { HermitianOperator h(m); }) == ErrorCode::not_hermitian);
  try {
    HermitianOperator h(m);
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("1e-06") != std::string::npos);
  }
  m(0, 1) = 1e-13;
  CHECK_NOTHROW(HermitianOperator{m});
  CHECK(code_of([] { HermitianOperator h(Matrix(2, 3)); }) == ErrorCode::dimension_mismatch);
}

TEST_CASE("spectrum of diagonal and identity inputs") {
  const Spectrum s = hermitian_spectrum(diag2(0.2, 0.8));
  CHECK(s.eigenvalues(0) == doctest::Approx(0.8).epsilon(1e-15));
  CHECK(s.eigenvalues(1) == doctest::Approx(0.2).epsilon(1e-15));
  const Spectrum id = hermitian_spectrum(HermitianOperator::identity(5));
  for (int i = 0; i < 5; ++i) CHECK(std::abs(id.eigenvalues(i) - 1.0) < 1e-14);
}

TEST_CASE("spectrum reconstructs random Hermitian matrices") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const HermitianOperator m = HermitianOperator::hermitized(ts::random_hermitian(6, rng));
    const Spectrum s = hermitian_spectrum(m);
    for (int i = 1; i < 6; ++i) CHECK(s.eigenvalues(i - 1) >= s.eigenvalues(i));
    const Matrix rec = s.eigenvectors * s.eigenvalues.cast<Complex>().asDiagonal() * s.eigenvectors.adjoint();
    CHECK((rec - m.matrix()).norm() <= 1e-10 * ts::largest_singular_value(m.matrix()));
    CHECK((s.eigenvectors.adjoint() * s.eigenvectors - Matrix::Identity(6, 6)).norm() < 1e-12);
  }
}

TEST_CASE("matrix log on the support") {
  const HermitianOperator l = matrix_log_on_support(diag2(0.8, 0.2));
  CHECK(std::abs(l.matrix()(0, 0).real() - std::log(0.8)) < 1e-15);
  CHECK(std::abs(l.matrix()(1, 1).real() - std::log(0.2)) < 1e-15);
  CHECK(std::abs(l.matrix()(0, 1)) < 1e-15);

  std::mt19937_64 rng(5);
  const ts::Vec v = ts::random_unit(3, rng);
  const HermitianOperator proj = HermitianOperator::hermitized(v * v.adjoint());
  CHECK(matrix_log_on_support(proj).matrix().norm() < 1e-12);

  for (int trial = 0; trial < 20; ++trial) {
    const Matrix y = ts::random_density(5, rng);
    const Matrix lg = matrix_log_on_support(HermitianOperator::hermitized(y)).matrix();
    const Matrix back = lg.exp();
    CHECK((back - y).norm() < 1e-9);
    CHECK((lg - ts::log_on_support(y)).norm() < 1e-9);
  }
  // Rank-deficient: exp of the log reproduces Y on its support.
  const Matrix y = ts::random_density(5, rng, 2);
  const Spectrum sy = hermitian_spectrum(HermitianOperator::hermitized(y));
  const Matrix lg = matrix_log_on_support(sy).matrix();
  Matrix support = Matrix::Zero(5, 5);
  for (int i = 0; i < 2; ++i) support += sy.eigenvectors.col(i) * sy.eigenvectors.col(i).adjoint();
  CHECK((support * lg.exp() * support - y).norm() < 1e-9);

  CHECK(code_of([] { matrix_log_on_support(diag2(0.5, -1e-6)); }) == ErrorCode::not_psd);
}

TEST_CASE("partial trace: Bell state, product state, Schmidt spectra") {
  Vector bell = Vector::Zero(4);
  bell(0) = bell(3) = 1.0 / std::sqrt(2.0);
  const std::array<int, 2> dims{2, 2};
  const std::array<int, 1> keep0{0};
  const DensityMatrix r = partial_trace(DensityMatrix::from_pure(bell), dims, keep0);
  CHECK((r.op().matrix() - 0.5 * Matrix::Identity(2, 2)).norm() < 1e-15);

  std::mt19937_64 rng(3);
  const Matrix rho = ts::random_density(2, rng), sigma = ts::random_density(3, rng);
  const std::array<int, 2> d23{2, 3};
  const Matrix prod = ts::kron(rho, sigma);
  CHECK((partial_trace(prod, d23, keep0) - rho).norm() < 1e-14);
  const std::array<int, 1> keep1{1};
  CHECK((partial_trace(prod, d23, keep1) - sigma).norm() < 1e-14);

  for (int trial = 0; trial < 20; ++trial) {
    const Vector psi = ts::random_unit(6, rng);
    const DensityMatrix full = DensityMatrix::from_pure(psi);
    const Matrix ra = partial_trace(full, d23, keep0).op().matrix();
    const Matrix rb = partial_trace(full, d23, keep1).op().matrix();
    CHECK((ra - ts::reduce_left(psi, 2, 3)).norm() < 1e-14);
    CHECK((rb - ts::reduce_right(psi, 2, 3)).norm() < 1e-14);
    const Spectrum sa = hermitian_spectrum(HermitianOperator::hermitized(ra));
    const Spectrum sb = hermitian_spectrum(HermitianOperator::hermitized(rb));
    for (int i = 0; i < 2; ++i) CHECK(std::abs(sa.eigenvalues(i) - sb.eigenvalues(i)) < 1e-10);
    CHECK(std::abs(sb.eigenvalues(2)) < 1e-10);
    CHECK((reduced_from_pure(psi, 2).op().matrix() - ra).norm() < 1e-14);
  }
}

TEST_CASE("partial trace preserves trace and positivity; three factors") {
  std::mt19937_64 rng(8);
  const std::array<int, 3> dims{2, 3, 2};
  for (int trial = 0; trial < 50; ++trial) {
    const DensityMatrix rho(HermitianOperator::hermitized(ts::random_density(12, rng, 3)));
    const std::array<int, 2> keep{0, 2};
    const DensityMatrix red = partial_trace(rho, dims, keep);
    CHECK(std::abs(red.op().trace() - 1.0) < 1e-12);
    CHECK(ts::min_eig(red.op().matrix()) >= -kPsdTol);
    // Oracle: explicit sum over the middle index.
    Matrix oracle = Matrix::Zero(4, 4);
    for (int a = 0; a < 2; ++a)
      for (int c = 0; c < 2; ++c)
        for (int a2 = 0; a2 < 2; ++a2)
          for (int c2 = 0; c2 < 2; ++c2)
            for (int b = 0; b < 3; ++b)
              oracle(a * 2 + c, a2 * 2 + c2) += rho.op().matrix()(a * 6 + b * 2 + c, a2 * 6 + b * 2 + c2);
    CHECK((red.op().matrix() - oracle).norm() < 1e-14);
  }
  const std::array<int, 2> bad{2, 2};
  const std::array<int, 1> keep0{0};
  CHECK(code_of([&] { partial_trace(Matrix(Matrix::Identity(6, 6)), bad, keep0); }) == ErrorCode::dimension_mismatch);
}

TEST_CASE("embed_with_identity matches kron") {
  std::mt19937_64 rng(4);
  const Matrix a = ts::random_hermitian(3, rng);
  const std::array<int, 2> dims{3, 2};
  const std::array<int, 1> keep0{0};
  CHECK((embed_with_identity(a, dims, keep0) - ts::kron(a, Matrix::Identity(2, 2))).norm() < 1e-15);
  const std::array<int, 2> dims2{2, 3};
  const std::array<int, 1> keep1{1};
  CHECK((embed_with_identity(a, dims2, keep1) - ts::kron(Matrix::Identity(2, 2), a)).norm() < 1e-15);
  CHECK((kron(a, Matrix::Identity(2, 2)) - ts::kron(a, Matrix::Identity(2, 2))).norm() == 0.0);
}

TEST_CASE("trace norm and operator norm") {
  CHECK(trace_norm(diag2(1.0, -2.0)) == doctest::Approx(3.0));
  CHECK(trace_norm(HermitianOperator::zero(4)) == 0.0);
  CHECK(operator_norm(diag2(1.0, -2.0)) == doctest::Approx(2.0));
  CHECK(operator_norm(HermitianOperator::identity(7)) == doctest::Approx(1.0));
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    const HermitianOperator m = HermitianOperator::hermitized(ts::random_hermitian(7, rng));
    CHECK(std::abs(trace_norm(m) - ts::singular_value_sum(m.matrix())) < 1e-10);
    // Power iteration on M^2 for the largest |eigenvalue|.
    const Matrix m2 = m.matrix() * m.matrix();
    Vector v = ts::random_unit(7, rng);
    double est = 0.0;
    for (int it = 0; it < 5000; ++it) {
      Vector w = m2 * v;
      est = std::sqrt(w.norm());
      v = w / w.norm();
    }
    CHECK(std::abs(operator_norm(m) - est) < 1e-8);
  }
}

TEST_CASE("von Neumann entropy") {
  std::mt19937_64 rng(2);
  CHECK(std::abs(von_neumann_entropy(DensityMatrix::from_pure(ts::random_unit(4, rng)))) < 1e-12);
  const DensityMatrix mixed(HermitianOperator::identity(5) * 0.2);
  CHECK(von_neumann_entropy(mixed) == doctest::Approx(std::log(5.0)).epsilon(1e-14));
  const double expect = -0.8 * std::log(0.8) - 0.2 * std::log(0.2);
  CHECK(von_neumann_entropy(DensityMatrix(diag2(0.8, 0.2))) == doctest::Approx(expect).epsilon(1e-14));
  CHECK(expect == doctest::Approx(0.500402).epsilon(1e-6));
  for (int trial = 0; trial < 10; ++trial) {
    const Matrix r = ts::random_density(6, rng);
    CHECK(std::abs(von_neumann_entropy(DensityMatrix(HermitianOperator::hermitized(r))) - ts::entropy(r)) < 1e-12);
  }
}

TEST_CASE("density matrix validation") {
  CHECK(code_of([] { DensityMatrix d(diag2(0.6, 0.6)); }) == ErrorCode::invalid_argument);
  CHECK(code_of([] { DensityMatrix d(diag2(1.2, -0.2)); }) == ErrorCode::not_psd);
}

TEST_CASE("Loewner order: B >= A >= 0 implies B - A PSD") {
  std::mt19937_64 rng(17);
  for (int n = 2; n <= 16; ++n) {
    for (int trial = 0; trial < 20; ++trial) {
      const Matrix a = ts::random_psd(n, rng);
      const Matrix b = a + ts::random_psd(n, rng, 1 + trial % n);
      CHECK(min_eigenvalue(HermitianOperator::hermitized(b - a)) >= -kPsdTol);
    }
  }
}

TEST_CASE("Kittaneh commutator bound for PSD operators") {
  std::mt19937_64 rng(23);
  for (int n = 2; n <= 16; ++n) {
    for (int trial = 0; trial < 50; ++trial) {
      const Matrix x = ts::random_psd(n, rng, 1 + trial % n);
      const Matrix l = ts::random_psd(n, rng);
      const Matrix comm = x * l - l * x;
      const double lhs = trace_norm(HermitianOperator::hermitized(Complex(0, 1) * comm));
      const double rhs = operator_norm(HermitianOperator::hermitized(l)) * x.trace().real();
      CHECK(lhs <= rhs * (1.0 + 1e-12));
      CHECK(std::abs(lhs - ts::singular_value_sum(comm)) < 1e-9 * (1.0 + lhs));
    }
  }
}
