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
#include <sstream>

#include "entrate/error.hpp"
#include "entrate/search.hpp"

namespace entrate {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Matrix ginibre(int rows, int cols, Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix g(rows, cols);
  // Column-major fill order is part of the determinism contract.
  for (int j = 0; j < cols; ++j) {
    for (int i = 0; i < rows; ++i) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      g(i, j) = Complex(re, im);
    }
  }
  return g;
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b) {
  return splitmix64(splitmix64(splitmix64(base) ^ a) ^ (b * 0xd6e8feb86659fd93ULL));
}

Matrix haar_unitary(int dim, Rng& rng) {
  const Matrix g = ginibre(dim, dim, rng);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix the column phases so the distribution is exactly Haar.
  for (int i = 0; i < dim; ++i) {
    const double mag = std::abs(r(i, i));
    if (mag > 0.0) q.col(i) *= r(i, i) / mag;
  }
  return q;
}

Vector haar_state(int dim, Rng& rng) {
  Vector v = ginibre(dim, 1, rng).col(0);
  v /= v.norm();
  return v;
}

HermitianOperator random_density_matrix(int dim, Rng& rng) {
  const Matrix g = ginibre(dim, dim, rng);
  Matrix y = g * g.adjoint();
  y /= y.trace().real();
  return HermitianOperator::hermitized(y);
}

HermitianOperator random_contraction(int dim, Rng& rng) {
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  RealVector ev(dim);
  for (int i = 0; i < dim; ++i) ev(i) = unif(rng);
  const Matrix u = haar_unitary(dim, rng);
  return HermitianOperator::hermitized(u * ev.cast<Complex>().asDiagonal() * u.adjoint());
}

namespace {

Matrix sqrt_psd(const HermitianOperator& y) {
  return apply_function(hermitian_spectrum(y), [](double x) { return x > 0.0 ? std::sqrt(x) : 0.0; })
      .matrix();
}

}  // namespace

AdmissiblePair pair_from_contraction(const HermitianOperator& y, const HermitianOperator& z, double p) {
  if (y.dim() != z.dim()) fail(ErrorCode::dimension_mismatch, "pair_from_contraction: dims differ");
  const Matrix s = sqrt_psd(y);
  return AdmissiblePair(HermitianOperator::hermitized(s * z.matrix() * s), y, p);
}

SampledPair sample_admissible_pair_detailed(int dim, double p, std::uint64_t seed,
                                            const SampleOptions& options) {
  if (dim < 2) fail(ErrorCode::invalid_argument, "sample_admissible_pair: dim must be >= 2");
  if (!(p > 0.0 && p <= 1.0)) fail(ErrorCode::domain, "sample_admissible_pair: p outside (0, 1]");
  Rng rng(seed);
  int rejections = 0;
  for (int attempt = 0; attempt < options.max_tries; ++attempt) {
    const HermitianOperator y = random_density_matrix(dim, rng);
    const HermitianOperator z = random_contraction(dim, rng);
    const Matrix s = sqrt_psd(y);
    const Matrix x0 = s * z.matrix() * s;
    const double t = x0.trace().real();
    const double scale = p / t;
    const double z_top = hermitian_spectrum(z).eigenvalues(0);
    if (!(t > 0.0) || scale * z_top > 1.0) {
      ++rejections;
      continue;
    }
    HermitianOperator x = HermitianOperator::hermitized(scale * x0);
    return SampledPair{AdmissiblePair(std::move(x), y, p), z * scale, rejections};
  }
  std::ostringstream msg;
  msg << "sample_admissible_pair: all " << options.max_tries << " draws rejected (dim " << dim
      << ", p " << p << ")";
  fail(ErrorCode::resource, msg.str());
}

AdmissiblePair sample_admissible_pair(int dim, double p, std::uint64_t seed) {
  return sample_admissible_pair_detailed(dim, p, seed).pair;
}

BipartiteState sample_bipartite_state(FactorDims dims, std::uint64_t seed) {
  Rng rng(seed);
  return BipartiteState(dims, haar_state(dims.total(), rng));
}

}  // namespace entrate
