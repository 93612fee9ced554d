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

#include <cmath>
#include <functional>
#include <random>

#include <unsupported/Eigen/MatrixFunctions>

#include "doctest.h"
#include "entrate/error.hpp"
#include "entrate/rate_engine.hpp"
#include "entrate/serialization.hpp"
#include "test_support.hpp"

using namespace entrate;
namespace ts = testing_support;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::internal;
}

HermitianOperator herm(const Matrix& m) { return HermitianOperator::hermitized(m); }

AdmissiblePair random_admissible(int n, double p, std::mt19937_64& rng) {
  Matrix x, y;
  while (!ts::random_pair(n, p, rng, x, y)) {
  }
  return AdmissiblePair(herm(x), herm(y), p);
}

// Two-level pair: Y = diag(0.8, 0.2), X = [[0.1, 0.05], [0.05, 0.1]].
AdmissiblePair example_pair() {
  Matrix x(2, 2), y = Matrix::Zero(2, 2);
  x << 0.1, 0.05, 0.05, 0.1;
  y(0, 0) = 0.8;
  y(1, 1) = 0.2;
  return AdmissiblePair(HermitianOperator(x), HermitianOperator(y), 0.2);
}

// Lambda(H) = -i sum_ij H_ji X_ij (l_j - l_i) for diagonal Y = diag(exp l).
double lambda_diag_oracle(const Matrix& h, const Matrix& x, const Eigen::VectorXd& logy) {
  Complex acc(0.0, 0.0);
  for (int i = 0; i < x.rows(); ++i)
    for (int j = 0; j < x.cols(); ++j) acc += h(j, i) * x(i, j) * (logy(j) - logy(i));
  return (Complex(0.0, -1.0) * acc).real();
}

// Entropy of aA at time t under exp(i H~ t), H~ = I_a (x) H_AB (x) I_b.
double entropy_at(const FactorDims& d, const Vector& psi, const Matrix& h_ab, double t) {
  const Matrix full = ts::kron(ts::kron(Matrix::Identity(d.a, d.a), h_ab), Matrix::Identity(d.b, d.b));
  const Matrix u = (Complex(0.0, t) * full).exp();
  const Vector pt = u * psi;
  return ts::entropy(ts::reduce_left(pt, d.a * d.A, d.B * d.b));
}

}  // namespace

TEST_CASE("admissible pair validation") {
  Matrix y = Matrix::Identity(2, 2) * 0.5;
  CHECK_NOTHROW(AdmissiblePair(herm(y * 0.2), herm(y), 0.2));
  CHECK(code_of([&] { AdmissiblePair(herm(y * 0.2), herm(y), 0.3); }) == ErrorCode::admissibility);
  CHECK(code_of([&] { AdmissiblePair(herm(y * 0.2), herm(y * 1.1), 0.2); }) == ErrorCode::admissibility);
  Matrix x = Matrix::Zero(2, 2);
  x(0, 0) = 0.6;
  x(1, 1) = -0.1;
  CHECK(code_of([&] { AdmissiblePair(herm(x), herm(y), 0.5); }) == ErrorCode::admissibility);
  // X <= Y fails although both are PSD with the right traces.
  Matrix x2 = Matrix::Zero(2, 2);
  x2(0, 0) = 0.55;
  CHECK(code_of([&] { AdmissiblePair(herm(x2), herm(y), 0.55); }) == ErrorCode::admissibility);
  CHECK(code_of([&] { AdmissiblePair(herm(y * 0.0), herm(y), 0.0); }) == ErrorCode::domain);
}

TEST_CASE("entanglement rate vanishes on product and maximally entangled states") {
  std::mt19937_64 rng(1);
  const FactorDims d{2, 2, 2, 2};
  const Vector prod = ts::kron(ts::kron(ts::random_unit(2, rng), ts::random_unit(2, rng)),
                               ts::kron(ts::random_unit(2, rng), ts::random_unit(2, rng)));
  const HermitianOperator h = herm(ts::random_hermitian(4, rng));
  CHECK(std::abs(entanglement_rate(BipartiteState(d, prod), h)) < 1e-12);
  // Maximally entangled between aA and Bb: sum_i |i>_{aA} |i>_{Bb} / 2.
  Vector me = Vector::Zero(16);
  for (int i = 0; i < 4; ++i) me(i * 4 + i) = 0.5;
  CHECK(std::abs(entanglement_rate(BipartiteState(d, me), h)) < 1e-12);
}

TEST_CASE("entanglement rate matches the finite-difference entropy derivative") {
  std::mt19937_64 rng(7);
  const FactorDims cases[] = {{1, 2, 2, 1}, {1, 2, 3, 1}, {2, 2, 2, 1}, {2, 2, 2, 2}, {1, 3, 2, 2}};
  for (const FactorDims& d : cases) {
    for (int trial = 0; trial < 4; ++trial) {
      const Vector psi = ts::random_unit(d.total(), rng);
      const Matrix h = ts::random_hermitian(d.A * d.B, rng);
      const double rate = entanglement_rate(BipartiteState(d, psi), herm(h));
      const double dt = 1e-5;
      const double fd = (entropy_at(d, psi, h, dt) - entropy_at(d, psi, h, -dt)) / (2.0 * dt);
      CHECK(std::abs(rate - fd) < 1e-5);
    }
  }
}

TEST_CASE("entanglement rate is linear in H") {
  std::mt19937_64 rng(9);
  const FactorDims d{2, 2, 3, 2};
  const BipartiteState st(d, ts::random_unit(d.total(), rng));
  const HermitianOperator h1 = herm(ts::random_hermitian(6, rng)), h2 = herm(ts::random_hermitian(6, rng));
  const double a = 0.7, b = -1.3;
  const double lhs = entanglement_rate(st, h1 * a + h2 * b);
  CHECK(std::abs(lhs - (a * entanglement_rate(st, h1) + b * entanglement_rate(st, h2))) < 1e-9);
  CHECK(code_of([&] { entanglement_rate(st, herm(ts::random_hermitian(5, rng))); }) == ErrorCode::dimension_mismatch);
}

TEST_CASE("bipartite state validation") {
  CHECK(code_of([] { BipartiteState(FactorDims{1, 2, 2, 1}, Vector::Ones(4)); }) == ErrorCode::invalid_argument);
  CHECK(code_of([] { BipartiteState(FactorDims{1, 2, 2, 1}, Vector::Ones(3)); }) == ErrorCode::dimension_mismatch);
}

TEST_CASE("admissible_from_state") {
  Vector bell = Vector::Zero(4);
  bell(0) = bell(3) = 1.0 / std::sqrt(2.0);
  const AdmissiblePair pb = admissible_from_state(DensityMatrix::from_pure(bell), 2, 2);
  CHECK(pb.p() == doctest::Approx(0.25));
  CHECK((pb.x().matrix() - bell * bell.adjoint() / 4.0).norm() < 1e-15);
  CHECK((pb.y().matrix() - Matrix::Identity(4, 4) / 4.0).norm() < 1e-15);

  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 50; ++trial) {
    const Matrix ra = ts::random_density(3, rng), rb = ts::random_density(2, rng);
    const AdmissiblePair pr = admissible_from_state(DensityMatrix(herm(ts::kron(ra, rb))), 3, 2);
    CHECK((pr.x().matrix() - ts::kron(ra, rb) / 4.0).norm() < 1e-14);
    CHECK((pr.y().matrix() - ts::kron(ra, Matrix::Identity(2, 2)) / 2.0).norm() < 1e-14);
    CHECK(ts::min_eig(pr.y().matrix() - pr.x().matrix()) >= -kPsdTol);
  }
  for (int trial = 0; trial < 2000; ++trial) {
    const int da = 2 + trial % 3, db = 2 + (trial / 3) % 3;
    const Matrix rho = ts::random_density(da * db, rng, 1 + trial % (da * db));
    const AdmissiblePair pr = admissible_from_state(DensityMatrix(herm(rho)), da, db);
    CHECK(pr.p() == doctest::Approx(1.0 / (db * db)));
  }
}

TEST_CASE("lambda functional: trivial zeros and the eigenbasis formula") {
  std::mt19937_64 rng(31);
  const Matrix y = ts::random_density(4, rng);
  const AdmissiblePair prop(herm(0.3 * y), herm(y), 0.3);
  const HermitianOperator h = herm(ts::random_hermitian(4, rng) * 0.1);
  CHECK(std::abs(lambda_functional(h, prop)) < 1e-14);

  const Matrix xm = Matrix::Identity(4, 4) * 0.05;
  Matrix xo = xm;
  xo(0, 1) = xo(1, 0) = 0.02;
  const AdmissiblePair maxmix(herm(xo), herm(Matrix::Identity(4, 4) / 4.0), 0.2);
  CHECK(std::abs(lambda_functional(h, maxmix)) < 1e-14);

  const AdmissiblePair ex = example_pair();
  Eigen::VectorXd logy(2);
  logy << std::log(0.8), std::log(0.2);
  const double value = lambda_functional(HermitianOperator(ts::pauli_y()), ex);
  CHECK(std::abs(value - lambda_diag_oracle(ts::pauli_y(), ex.x().matrix(), logy)) < 1e-14);
  CHECK(std::abs(std::abs(value) - 2.0 * 0.05 * std::log(4.0)) < 1e-14);

  CHECK(code_of([&] { lambda_functional(HermitianOperator::identity(2) * 1.01, ex); }) == ErrorCode::invalid_argument);
  CHECK(code_of([&] { lambda_functional(HermitianOperator::identity(3), ex); }) == ErrorCode::dimension_mismatch);
}

TEST_CASE("lambda is unchanged by rescaling Y inside the log") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 10; ++trial) {
    const AdmissiblePair pr = random_admissible(5, 0.1, rng);
    Matrix h = ts::random_hermitian(5, rng);
    h /= ts::largest_singular_value(h);
    const double base = lambda_functional(herm(h), pr);
    for (double alpha : {0.5, 2.0}) {
      const Matrix lg = ts::log_on_support(alpha * pr.y().matrix());
      const Matrix comm = pr.x().matrix() * lg - lg * pr.x().matrix();
      const double scaled = (Complex(0.0, -1.0) * (h * comm).trace()).real();
      CHECK(std::abs(scaled - base) < 1e-12);
    }
  }
}

TEST_CASE("lambda_eigenbasis agrees with 2 |Tr(P [X, log Y])|") {
  std::mt19937_64 rng(43);
  const AdmissiblePair pr = random_admissible(4, 0.1, rng);
  CHECK(std::abs(lambda_eigenbasis(HermitianOperator::zero(4), pr)) < 1e-14);
  CHECK(std::abs(lambda_eigenbasis(HermitianOperator::identity(4), pr)) < 1e-14);

  // X diagonal in Y's eigenbasis.
  const Matrix y = ts::random_density(4, rng);
  Eigen::SelfAdjointEigenSolver<Matrix> es(y);
  const Matrix v = es.eigenvectors();
  Eigen::VectorXd xd = es.eigenvalues() * 0.3;
  const AdmissiblePair diag_pair(herm(v * xd.cast<Complex>().asDiagonal() * v.adjoint() * 1.0), herm(y), 0.3);
  for (int trial = 0; trial < 5; ++trial) {
    const ts::Vec u = ts::random_unit(4, rng);
    CHECK(std::abs(lambda_eigenbasis(herm(u * u.adjoint()), diag_pair)) < 1e-13);
  }

  for (int n = 2; n <= 10; ++n) {
    for (int trial = 0; trial < 10; ++trial) {
      const AdmissiblePair q = random_admissible(n, 0.05, rng);
      const Matrix w = ts::unitary_from_qr(n, rng);
      Eigen::VectorXd ev(n);
      for (int i = 0; i < n; ++i) ev(i) = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
      const Matrix p = w * ev.cast<Complex>().asDiagonal() * w.adjoint();
      const Matrix lg = ts::log_on_support(q.y().matrix());
      const Matrix comm = q.x().matrix() * lg - lg * q.x().matrix();
      const double oracle = 2.0 * std::abs((p * comm).trace());
      CHECK(std::abs(lambda_eigenbasis(herm(p), q) - oracle) < 1e-10);
    }
  }
  CHECK(code_of([&] { lambda_eigenbasis(HermitianOperator::identity(4) * 1.5, pr); }) == ErrorCode::invalid_argument);
}

TEST_CASE("closed-form maximization over H") {
  std::mt19937_64 rng(47);
  const Matrix y = ts::random_density(3, rng);
  const HamiltonianOptimum zero = maximize_over_hamiltonian(AdmissiblePair(herm(0.4 * y), herm(y), 0.4));
  CHECK(zero.lambda_max == 0.0);
  CHECK((zero.h_opt.matrix() - Matrix::Identity(3, 3)).norm() == 0.0);

  const HamiltonianOptimum ex = maximize_over_hamiltonian(example_pair());
  CHECK(std::abs(ex.lambda_max - 2.0 * 0.05 * std::log(4.0)) < 1e-14);
  CHECK(ex.lambda_max == doctest::Approx(0.138629).epsilon(1e-5));

  for (int n = 2; n <= 12; n += 2) {
    for (int trial = 0; trial < 5; ++trial) {
      const AdmissiblePair q = random_admissible(n, 0.1, rng);
      const HamiltonianOptimum opt = maximize_over_hamiltonian(q);
      CHECK(std::abs(lambda_functional(opt.h_opt, q) - opt.lambda_max) < 1e-10);
      CHECK(std::abs(operator_norm(opt.h_opt) - 1.0) < 1e-12);
      CHECK(max_lambda_value(q) == opt.lambda_max);
      const Matrix lg = ts::log_on_support(q.y().matrix());
      const Matrix comm = q.x().matrix() * lg - lg * q.x().matrix();
      CHECK(std::abs(opt.lambda_max - ts::singular_value_sum(comm)) < 1e-12 * (1.0 + opt.lambda_max) + 1e-13);
      for (int probe = 0; probe < 200; ++probe) {
        Matrix h = ts::random_hermitian(n, rng);
        h /= ts::largest_singular_value(h);
        CHECK(lambda_functional(herm(h), q) <= opt.lambda_max + 1e-10);
      }
      // |Tr(P [X, log Y])| maximized by the positive-eigenspace projector.
      const HermitianOperator proj = optimal_projector(q);
      CHECK(std::abs(lambda_eigenbasis(proj, q) - opt.lambda_max) < 1e-10);
    }
  }
}

TEST_CASE("extract_contraction") {
  std::mt19937_64 rng(53);
  const Matrix y = ts::random_density(4, rng);
  const Matrix zp = extract_contraction(AdmissiblePair(herm(0.3 * y), herm(y), 0.3)).matrix();
  CHECK((zp - 0.3 * Matrix::Identity(4, 4)).norm() < 1e-9);
  const Matrix zi = extract_contraction(AdmissiblePair(herm(y), herm(y), 1.0)).matrix();
  CHECK((zi - Matrix::Identity(4, 4)).norm() < 1e-9);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + trial % 8;
    const AdmissiblePair q = random_admissible(n, 0.2, rng);
    const Matrix z = extract_contraction(q).matrix();
    Eigen::SelfAdjointEigenSolver<Matrix> ey(q.y().matrix());
    const Matrix s = ey.eigenvectors() * ey.eigenvalues().cwiseMax(0.0).cwiseSqrt().cast<Complex>().asDiagonal() *
                     ey.eigenvectors().adjoint();
    CHECK((s * z * s - q.x().matrix()).norm() <= 1e-9);
    CHECK(ts::min_eig(z) >= -kPsdTol);
    CHECK(ts::min_eig(Matrix::Identity(n, n) - z) >= -kPsdTol);
  }
  // Rank-deficient Y: Z vanishes off the support.
  const Matrix yr = ts::random_density(4, rng, 2);
  const Matrix zr = extract_contraction(AdmissiblePair(herm(0.5 * yr), herm(yr), 0.5)).matrix();
  Eigen::SelfAdjointEigenSolver<Matrix> er(yr);
  const Matrix kernel = er.eigenvectors().leftCols(2);
  CHECK((kernel.adjoint() * zr).norm() < 1e-9);
}

TEST_CASE("eigenvalue buckets") {
  RealVector ev(3);
  ev << 0.5, 0.3, 0.2;
  const HermitianOperator y = HermitianOperator::diagonal(ev);
  const IntervalBuckets b = bucket_eigenvalues(hermitian_spectrum(y), y * 0.25, 0.25);
  REQUIRE(b.count() == 2);
  CHECK(b.buckets[0].k == 1);
  CHECK(b.buckets[0].size() == 2);
  CHECK(b.buckets[1].k == 2);
  CHECK(b.buckets[1].size() == 1);
  CHECK(b.buckets[1].begin == 2);

  const IntervalBuckets one = bucket_eigenvalues(hermitian_spectrum(y), y * 0.1, 0.1);
  CHECK(one.count() == 1);

  // Ties: y = p^k exactly goes to interval k.
  RealVector tie(3);
  tie << 0.5, 0.25, 0.25;
  const HermitianOperator yt = HermitianOperator::diagonal(tie);
  const IntervalBuckets bt = bucket_eigenvalues(hermitian_spectrum(yt), yt * 0.5, 0.5);
  REQUIRE(bt.count() == 2);
  CHECK(bt.buckets[0].size() == 1);
  CHECK(bt.buckets[1].size() == 2);

  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 3 + trial % 10;
    const AdmissiblePair q = random_admissible(n, 0.05, rng);
    const IntervalBuckets r = bucket_eigenvalues(hermitian_spectrum(q.y()), q.x(), q.p());
    CHECK(std::abs(r.total_weight() - q.x().trace()) < 1e-10);
    const Spectrum sy = hermitian_spectrum(q.y());
    for (const Bucket& bk : r.buckets) {
      for (int i = bk.begin; i < bk.end; ++i) {
        CHECK(sy.eigenvalues(i) >= std::pow(q.p(), bk.k) * (1.0 - 1e-15));
        if (bk.k > 1) CHECK(sy.eigenvalues(i) < std::pow(q.p(), bk.k - 1));
      }
    }
  }
  CHECK(code_of([&] { bucket_eigenvalues(hermitian_spectrum(y), y * 0.6, 0.6); }) == ErrorCode::domain);
}

TEST_CASE("proof decomposition: trivial cases") {
  RealVector ev(3);
  ev << 0.5, 0.3, 0.2;
  const HermitianOperator y = HermitianOperator::diagonal(ev);
  Matrix x = y.matrix() * 0.1;
  x(0, 1) = x(1, 0) = 0.01;
  // All eigenvalues >= p: a single interval.
  const AdmissiblePair one(herm(x), y, 0.1);
  const DecompositionReport r1 = proof_decomposition(one, optimal_projector(one));
  CHECK(r1.separated.value == 0.0);
  CHECK(r1.line1.size() == 1);
  CHECK(std::abs(r1.total - r1.direct) < 1e-12);

  std::mt19937_64 rng(61);
  const Matrix yy = ts::random_density(6, rng);
  const AdmissiblePair prop(herm(0.1 * yy), herm(yy), 0.1);
  const DecompositionReport r2 = proof_decomposition(prop, optimal_projector(prop));
  CHECK(std::abs(r2.direct) < 1e-14);
  CHECK(std::abs(r2.total) < 1e-14);
  for (const BracketTerm& t : r2.line1) CHECK(t.value < 1e-14);
  for (const BracketTerm& t : r2.line3) CHECK(t.value < 1e-14);
  CHECK(r2.all_bounds_hold());
  CHECK(code_of([&] {
          const AdmissiblePair big(herm(0.2 * yy), herm(yy), 0.2);
          proof_decomposition(big, optimal_projector(big));
        }) == ErrorCode::domain);
}

TEST_CASE("proof decomposition on random pairs") {
  std::mt19937_64 rng(67);
  const double ps[] = {0.01, 0.03, 0.08, 0.13};
  for (int n = 3; n <= 10; ++n) {
    for (int trial = 0; trial < 15; ++trial) {
      const double p = ps[trial % 4];
      const AdmissiblePair q = random_admissible(n, p, rng);
      const HermitianOperator proj = optimal_projector(q);
      const DecompositionReport r = proof_decomposition(q, proj);
      CHECK(std::abs(r.total - r.direct) <= 1e-9);
      // Direct value independently: Lambda(2P - I).
      const double via_lambda = lambda_functional(herm(2.0 * proj.matrix() - Matrix::Identity(n, n)), q);
      CHECK(std::abs(r.direct - via_lambda) < 1e-10);
      CHECK(std::abs(std::abs(r.direct) - max_lambda_value(q)) < 1e-10);
      CHECK(r.all_bounds_hold());
      for (const BracketTerm& t : r.line1) CHECK(t.value <= t.bound * (1 + 1e-9));
      CHECK(r.separated.value <= r.separated.bound * (1 + 1e-9));
      CHECK(r.line3_aggregate.value <= r.line3_aggregate.bound * (1 + 1e-9));
      CHECK(r.lambda_bound == doctest::Approx(9.0 * p * std::log(1.0 / p)));
      // Chains are non-decreasing towards the bound.
      for (const BracketTerm& t : r.line1) {
        for (std::size_t i = 1; i < t.chain.size(); ++i) CHECK(t.chain[i - 1] <= t.chain[i] * (1 + 1e-9) + 1e-15);
      }
    }
  }
}

TEST_CASE("decomposition report JSON field names") {
  std::mt19937_64 rng(71);
  const AdmissiblePair q = random_admissible(6, 0.05, rng);
  const Json j = to_json(proof_decomposition(q, optimal_projector(q)));
  for (const char* key : {"brackets_line1", "brackets_line3", "separated", "total", "direct", "margins", "p", "dim"}) {
    CHECK(j.contains(key));
  }
  CHECK(j["dim"] == 6);
}

TEST_CASE("bound formulas") {
  const double e2 = std::exp(-2.0);
  CHECK(sie_lambda_bound(e2) == doctest::Approx(18.0 * e2).epsilon(1e-14));
  CHECK(sie_lambda_bound(e2) == doctest::Approx(2.436035).epsilon(1e-6));
  CHECK(sie_lambda_bound(0.01) == doctest::Approx(0.414465).epsilon(1e-6));
  CHECK(sie_lambda_bound(1e-12) < 1e-9);
  CHECK(code_of([] { sie_lambda_bound(0.2); }) == ErrorCode::domain);
  CHECK(code_of([] { sie_lambda_bound(0.0); }) == ErrorCode::domain);

  CHECK(sie_rate_bound(1, 5.0) == 0.0);
  CHECK(sie_rate_bound(3, 1.0) == doctest::Approx(19.7750).epsilon(1e-5));
  CHECK(sie_rate_bound(1000, 2.0) == doctest::Approx(248.68).epsilon(1e-4));
  CHECK(code_of([] { sie_rate_bound(0, 1.0); }) == ErrorCode::domain);

  CHECK(sim_bound(0.5) == doctest::Approx(std::log(2.0)).epsilon(1e-15));
  CHECK(sim_bound(0.25) == doctest::Approx(0.562335).epsilon(1e-6));
  CHECK(sim_bound(1e-15) < 1e-12);
  CHECK(sim_bound(1.0 - 1e-12) < 1e-9);
  CHECK(code_of([] { sim_bound(1.0); }) == ErrorCode::domain);
  for (double p = 1e-4; p <= e2; p *= 1.3) CHECK(sim_bound(p) <= sie_lambda_bound(p));
  CHECK(BoundConstants::beta_nats() == doctest::Approx(1.9123 * std::log(2.0)));
}

TEST_CASE("pair serialization round trip is exact") {
  std::mt19937_64 rng(73);
  const AdmissiblePair q = random_admissible(5, 0.07, rng);
  const Json j = to_json(q);
  const AdmissiblePair back = pair_from_json(Json::parse(j.dump()));
  CHECK((back.x().matrix() - q.x().matrix()).norm() == 0.0);
  CHECK((back.y().matrix() - q.y().matrix()).norm() == 0.0);
  CHECK(max_lambda_value(back) == max_lambda_value(q));
}
