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
#include "entrate/rate_engine.hpp"

namespace entrate {

double sie_lambda_bound(double p) {
  if (!(p > 0.0 && p <= kProofRegimeMax)) {
    std::ostringstream msg;
    msg << "sie_lambda_bound: p = " << p << " outside (0, 1/e^2]";
    fail(ErrorCode::domain, msg.str());
  }
  return 9.0 * p * std::log(1.0 / p);
}

double sie_rate_bound(int d, double h_norm) {
  if (d < 1) fail(ErrorCode::domain, "sie_rate_bound: d must be >= 1");
  if (!(h_norm >= 0.0)) fail(ErrorCode::domain, "sie_rate_bound: ||H|| must be >= 0");
  return BoundConstants::c_sie * h_norm * std::log(static_cast<double>(d));
}

double sim_bound(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    std::ostringstream msg;
    msg << "sim_bound: p = " << p << " outside (0, 1)";
    fail(ErrorCode::domain, msg.str());
  }
  return BoundConstants::c_sim * (-p * std::log(p) - (1.0 - p) * std::log1p(-p));
}

}  // namespace entrate
