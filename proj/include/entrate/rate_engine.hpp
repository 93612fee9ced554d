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

// Entanglement rates, the commutator functional Lambda = -i Tr(H [X, log Y])
// over admissible pairs, its closed-form maximum over unit-norm H, the
// interval bucketing of Y's spectrum and the per-bracket audit of the bound
// Lambda <= 9 p ln(1/p).

#ifndef ENTRATE_RATE_ENGINE_HPP
#define ENTRATE_RATE_ENGINE_HPP

#include <array>
#include <string>
#include <vector>

#include "entrate/operator_core.hpp"

namespace entrate {

struct BoundConstants {
  static constexpr double c_sie = 18.0;
  static constexpr double c_sim = 1.0;
  // Two-qubit saturation constant. Quoted in bits (log base 2); the rate
  // engine works in nats, so compare against beta_nats().
  static constexpr double beta_bits = 1.9123;
  static double beta_nats();
};

// 0 <= X <= Y, Tr X = p, Tr Y = 1, p in (0, 1].
class AdmissiblePair {
 public:
  AdmissiblePair(HermitianOperator x, HermitianOperator y, double p);

  const HermitianOperator& x() const noexcept { return x_; }
  const HermitianOperator& y() const noexcept { return y_; }
  double p() const noexcept { return p_; }
  int dim() const noexcept { return x_.dim(); }

 private:
  HermitianOperator x_;
  HermitianOperator y_;
  double p_;
};

// Factor dimensions of a pure state on a (x) A (x) B (x) b.
struct FactorDims {
  int a = 1;
  int A = 1;
  int B = 1;
  int b = 1;

  int total() const noexcept { return a * A * B * b; }
  std::array<int, 4> as_array() const noexcept { return {a, A, B, b}; }
  bool operator==(const FactorDims&) const = default;
};

class BipartiteState {
 public:
  BipartiteState(FactorDims dims, Vector amplitudes);

  const FactorDims& dims() const noexcept { return dims_; }
  const Vector& amplitudes() const noexcept { return amp_; }

 private:
  FactorDims dims_;
  Vector amp_;
};

inline constexpr double kImagResidueTol = 1e-8;

// Gamma = -i Tr((I_a (x) H_AB) [rho_{aA,B}, log rho_aA (x) I_B]) after tracing
// out b; the derivative of S_aA at t = 0 under U(t) = exp(i H t).
double entanglement_rate(const BipartiteState& state, const HermitianOperator& h_ab);

// Same functional for a general state rho on L (x) R and generator K:
// -i Tr(K [rho, log rho_L (x) I_R]).
double entropy_rate(const HermitianOperator& rho, int left_dim, const HermitianOperator& k);

AdmissiblePair admissible_from_state(const DensityMatrix& rho_ab, int dim_a, int dim_b);

// -i [X, log Y], Hermitian. Lambda(H) = Tr(H * rate_operator(pair)).
HermitianOperator rate_operator(const AdmissiblePair& pair);

double lambda_functional(const HermitianOperator& h, const AdmissiblePair& pair);

// 2 |sum_{i<j} log(y_i/y_j) (X_ij P_ji - X_ji P_ij)| in Y's eigenbasis.
double lambda_eigenbasis(const HermitianOperator& projector, const AdmissiblePair& pair);

struct HamiltonianOptimum {
  double lambda_max;
  HermitianOperator h_opt;
};

HamiltonianOptimum maximize_over_hamiltonian(const AdmissiblePair& pair);
// Value only (skips building H_opt).
double max_lambda_value(const AdmissiblePair& pair);
// Projector onto the strictly positive eigenspace of rate_operator(pair);
// the maximizer of |Tr(P [X, log Y])|.
HermitianOperator optimal_projector(const AdmissiblePair& pair);

// Z on the support of Y with Y^{1/2} Z Y^{1/2} = X; zero off the support.
HermitianOperator extract_contraction(const AdmissiblePair& pair);

struct Bucket {
  int k;      // 1-based interval index
  int begin;  // first eigen-index (0-based) in the bucket
  int end;    // one past the last
  double weight;  // p_k = sum of X_ii over the bucket, in Y's eigenbasis
  int size() const noexcept { return end - begin; }
};

struct IntervalBuckets {
  double p = 0.0;
  std::vector<Bucket> buckets;  // k = 1..k*, consecutive, possibly empty
  int support_size = 0;
  int count() const noexcept { return static_cast<int>(buckets.size()); }
  double total_weight() const;
};

// Interval k holds p^{k-1} > y >= p^k (first interval also admits y = 1).
// Only eigenvalues on the support are bucketed.
IntervalBuckets bucket_eigenvalues(const Spectrum& y_spectrum, const HermitianOperator& x, double p);

struct BracketTerm {
  int k_lo;
  int k_hi;
  double signed_value;  // contribution to Lambda(2P - I)
  double value;         // |signed_value|
  double bound;
  // Intermediate inequality chain value <= ... <= bound, when audited.
  std::vector<double> chain;
};

struct DecompositionReport {
  int dim = 0;
  double p = 0.0;
  IntervalBuckets buckets;
  std::vector<BracketTerm> line1;  // consecutive-interval brackets
  std::vector<BracketTerm> line3;  // single-interval corrections k = 2..k*-1
  BracketTerm line1_total;         // sum of line-one values vs 4 p ln(1/p)
  BracketTerm line3_aggregate;     // sum of line-three values vs p ln(1/p)
  BracketTerm separated;           // pairs at least one interval apart
  double total = 0.0;              // reassembled signed value
  double direct = 0.0;             // -2i Tr(P [X, log Y]) by matrix products
  double lambda_bound = 0.0;       // 9 p ln(1/p)
  std::vector<double> margins;     // bound - value, fixed order (see to_json)
  std::vector<std::string> violations;

  bool all_bounds_hold() const noexcept { return violations.empty(); }
};

inline constexpr double kIdentityTol = 1e-9;

DecompositionReport proof_decomposition(const AdmissiblePair& pair, const HermitianOperator& projector);

double sie_lambda_bound(double p);
double sie_rate_bound(int d, double h_norm);
double sim_bound(double p);

inline constexpr double kProofRegimeMax = 0.1353352832366127;  // 1/e^2

}  // namespace entrate

#endif  // ENTRATE_RATE_ENGINE_HPP
