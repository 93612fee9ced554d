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

// Seeded instance generators and stochastic maximizers for Lambda over
// admissible pairs and for the entanglement rate over pure states.
//
// Every work item (restart, scan cell) owns a generator seeded from
// derive_seed(base, cell, restart), and reductions run in index order, so a
// record depends only on (config, seed) and never on the worker count.

#ifndef ENTRATE_SEARCH_HPP
#define ENTRATE_SEARCH_HPP

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "entrate/rate_engine.hpp"
#include "entrate/serialization.hpp"

namespace entrate {

using Rng = std::mt19937_64;

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b = 0);

Matrix haar_unitary(int dim, Rng& rng);
Vector haar_state(int dim, Rng& rng);
// G G^dagger / Tr, G complex Ginibre.
HermitianOperator random_density_matrix(int dim, Rng& rng);
// Haar basis, eigenvalues uniform in [0, 1].
HermitianOperator random_contraction(int dim, Rng& rng);

// X = Y^{1/2} Z Y^{1/2}; the pair is validated.
AdmissiblePair pair_from_contraction(const HermitianOperator& y, const HermitianOperator& z, double p);

struct SampleOptions {
  int max_tries = 256;
};

struct SampledPair {
  AdmissiblePair pair;
  HermitianOperator z;  // contraction actually used (after rescaling)
  int rejections;
};

// Y = G G^dagger / Tr; Z with uniform eigenvalues in a Haar basis;
// X = (p / Tr(Y^{1/2} Z Y^{1/2})) Y^{1/2} Z Y^{1/2}. A draw whose rescaled Z
// would exceed I is rejected; exhausting max_tries is ErrorCode::resource.
SampledPair sample_admissible_pair_detailed(int dim, double p, std::uint64_t seed,
                                            const SampleOptions& options = {});
AdmissiblePair sample_admissible_pair(int dim, double p, std::uint64_t seed);

BipartiteState sample_bipartite_state(FactorDims dims, std::uint64_t seed);

struct TrialBudget {
  int restarts = 8;
  int iters = 100;
  // Coordinates differenced per gradient; 0 = all. Large dims use a random
  // coordinate block per iteration.
  int max_coords = 0;
};

enum class SearchMethod { random, projected_gradient, hybrid };
const char* method_name(SearchMethod m) noexcept;

struct SearchRecord {
  int dim = 0;
  double p = 0.0;
  double best_value = 0.0;
  double bound_value = 0.0;
  double ratio = 0.0;
  Json argmax;
  std::uint64_t seed = 0;
  int trials = 0;  // restarts run
  SearchMethod method = SearchMethod::hybrid;
  int rejections = 0;       // sampler rejections summed over restarts
  int stalled_restarts = 0;  // restarts whose start had a vanishing gradient
  long long evaluations = 0;
  std::vector<double> history;  // best-so-far per iteration, winning restart
};

Json to_json(const SearchRecord& r);

inline constexpr double kSimViolationTol = 1e-6;
inline constexpr double kProvedViolationRelTol = 1e-9;

// Random restarts from sample_admissible_pair, each refined by projected
// gradient ascent over (Y, Z) with the H-maximization in closed form. Throws
// BoundViolation if the result exceeds 9 p ln(1/p) (p <= 1/e^2).
SearchRecord maximize_lambda_over_pairs(int dim, double p, const TrialBudget& budget,
                                        std::uint64_t seed, int workers = 1);

// Gradient ascent on the unit sphere with random restarts. Starting states in
// `initial_states` are used for the first restarts, Haar draws for the rest.
SearchRecord maximize_rate_over_states(FactorDims dims, const HermitianOperator& h_ab,
                                       const TrialBudget& budget, std::uint64_t seed,
                                       int workers = 1,
                                       std::span<const Vector> initial_states = {});

struct ScanEvent {
  std::string kind;  // "sim_violation"
  int dim;
  double p;
  double ratio;
  Json bundle;
};

struct ScanResult {
  std::vector<SearchRecord> records;   // dims-major, p-grid minor
  std::vector<double> sim_bounds;
  std::vector<double> sie_bounds;      // NaN outside p <= 1/e^2
  std::vector<ScanEvent> events;
};

ScanResult conjecture_scan(std::span<const int> dims, std::span<const double> p_grid,
                           const TrialBudget& budget, std::uint64_t seed, int workers = 1);

}  // namespace entrate

#endif  // ENTRATE_SEARCH_HPP
