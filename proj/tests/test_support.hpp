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

// Instance generators and reference computations for the tests. Everything
// here is written independently of the library's own routines so that it
// can serve as an oracle.

#ifndef ENTRATE_TEST_SUPPORT_HPP
#define ENTRATE_TEST_SUPPORT_HPP

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

namespace testing_support {

using Complex = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

inline Mat gaussian(int rows, int cols, std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  Mat m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      const double re = n(rng);
      m(i, j) = Complex(re, n(rng));
    }
  }
  return m;
}

inline Mat random_hermitian(int n, std::mt19937_64& rng) {
  const Mat g = gaussian(n, n, rng);
  return 0.5 * (g + g.adjoint());
}

inline Mat random_psd(int n, std::mt19937_64& rng, int rank = -1) {
  const Mat g = gaussian(n, rank < 0 ? n : rank, rng);
  return g * g.adjoint();
}

inline Mat random_density(int n, std::mt19937_64& rng, int rank = -1) {
  Mat r = random_psd(n, rng, rank);
  return r / r.trace().real();
}

inline Vec random_unit(int n, std::mt19937_64& rng) {
  Vec v = gaussian(n, 1, rng).col(0);
  return v / v.norm();
}

inline Mat unitary_from_qr(int n, std::mt19937_64& rng) {
  Eigen::HouseholderQR<Mat> qr(gaussian(n, n, rng));
  return qr.householderQ();
}

// Random admissible (X, Y): Y a density matrix, X = Y^{1/2} Z Y^{1/2} with
// Z = c Z0, c chosen so Tr X = p; returns false when c Z0 would exceed I.
inline bool random_pair(int n, double p, std::mt19937_64& rng, Mat& x, Mat& y) {
  y = random_density(n, rng);
  Eigen::SelfAdjointEigenSolver<Mat> ey(y);
  const Mat s = ey.eigenvectors() * ey.eigenvalues().cwiseMax(0.0).cwiseSqrt().cast<Complex>().asDiagonal() *
                ey.eigenvectors().adjoint();
  std::uniform_real_distribution<double> u(0.0, 1.0);
  Eigen::VectorXd ev(n);
  for (int i = 0; i < n; ++i) ev(i) = u(rng);
  const Mat w = unitary_from_qr(n, rng);
  Mat z = w * ev.cast<Complex>().asDiagonal() * w.adjoint();
  const double t = (s * z * s).trace().real();
  const double c = p / t;
  if (c * ev.maxCoeff() > 1.0) return false;
  z *= c;
  x = s * z * s;
  x = 0.5 * (x + x.adjoint());
  return true;
}

// Natural-log von Neumann entropy from eigenvalues.
inline double entropy(const Mat& rho) {
  Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (rho + rho.adjoint()));
  double s = 0.0;
  for (int i = 0; i < es.eigenvalues().size(); ++i) {
    const double l = es.eigenvalues()(i);
    if (l > 1e-15) s -= l * std::log(l);
  }
  return s;
}

// Reduced state of a pure vector on (left x right), by explicit index sums.
inline Mat reduce_left(const Vec& psi, int left, int right) {
  Mat r = Mat::Zero(left, left);
  for (int i = 0; i < left; ++i) {
    for (int j = 0; j < left; ++j) {
      Complex acc(0.0, 0.0);
      for (int k = 0; k < right; ++k) acc += psi(i * right + k) * std::conj(psi(j * right + k));
      r(i, j) = acc;
    }
  }
  return r;
}

inline Mat reduce_right(const Vec& psi, int left, int right) {
  Mat r = Mat::Zero(right, right);
  for (int i = 0; i < right; ++i) {
    for (int j = 0; j < right; ++j) {
      Complex acc(0.0, 0.0);
      for (int k = 0; k < left; ++k) acc += psi(k * right + i) * std::conj(psi(k * right + j));
      r(i, j) = acc;
    }
  }
  return r;
}

// Trace over the right factor of an operator on (left x right).
inline Mat trace_right(const Mat& m, int left, int right) {
  Mat r = Mat::Zero(left, left);
  for (int i = 0; i < left; ++i) {
    for (int j = 0; j < left; ++j) {
      for (int k = 0; k < right; ++k) r(i, j) += m(i * right + k, j * right + k);
    }
  }
  return r;
}

inline Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  }
  return out;
}

inline double singular_value_sum(const Mat& m) {
  Eigen::JacobiSVD<Mat> svd(m);
  return svd.singularValues().sum();
}

inline double largest_singular_value(const Mat& m) {
  Eigen::JacobiSVD<Mat> svd(m);
  return svd.singularValues()(0);
}

// Log on the support via a general (non-Hermitian) eigensolver.
inline Mat log_on_support(const Mat& y, double rel_tol = 1e-12) {
  Eigen::ComplexEigenSolver<Mat> es(y);
  const Eigen::VectorXcd& l = es.eigenvalues();
  double top = 0.0;
  for (int i = 0; i < l.size(); ++i) top = std::max(top, l(i).real());
  Eigen::VectorXcd f(l.size());
  for (int i = 0; i < l.size(); ++i) f(i) = l(i).real() > rel_tol * top ? std::log(l(i).real()) : 0.0;
  const Mat& v = es.eigenvectors();
  return v * f.asDiagonal() * v.inverse();
}

inline double min_eig(const Mat& m) {
  Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (m + m.adjoint()));
  return es.eigenvalues()(0);
}

inline Mat pauli_x() {
  Mat m = Mat::Zero(2, 2);
  m(0, 1) = m(1, 0) = 1.0;
  return m;
}
inline Mat pauli_y() {
  Mat m = Mat::Zero(2, 2);
  m(0, 1) = Complex(0, -1);
  m(1, 0) = Complex(0, 1);
  return m;
}
inline Mat pauli_z() {
  Mat m = Mat::Zero(2, 2);
  m(0, 0) = 1.0;
  m(1, 1) = -1.0;
  return m;
}

// Product of single-site operators on an n-site chain, site 0 leftmost.
inline Mat pauli_string(int n, const std::vector<std::pair<int, Mat>>& factors) {
  Mat out = Mat::Identity(1, 1);
  for (int i = 0; i < n; ++i) {
    Mat f = Mat::Identity(2, 2);
    for (const auto& pr : factors) {
      if (pr.first == i) f = pr.second;
    }
    out = kron(out, f);
  }
  return out;
}

inline Mat tfim(int n, double j, double g) {
  const int dim = 1 << n;
  Mat h = Mat::Zero(dim, dim);
  for (int i = 0; i + 1 < n; ++i) h -= j * pauli_string(n, {{i, pauli_z()}, {i + 1, pauli_z()}});
  for (int i = 0; i < n; ++i) h -= g * pauli_string(n, {{i, pauli_x()}});
  return h;
}

}  // namespace testing_support

#endif  // ENTRATE_TEST_SUPPORT_HPP
