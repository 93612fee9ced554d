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

#ifndef ENTRATE_ERROR_HPP
#define ENTRATE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace entrate {

// Numeric values are mirrored by er_status in entrate.h.
enum class ErrorCode : int {
  invalid_argument = 1,
  dimension_mismatch = 2,
  not_hermitian = 3,
  not_psd = 4,
  domain = 5,
  numerical = 6,
  not_gapped = 7,
  resource = 8,
  admissibility = 9,
  internal = 10,
  io = 11,
  proved_bound_violation = 12,
  conjecture_violation = 13,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Raised when a proved bound is exceeded. Carries a serialized reproduction
// bundle (JSON text) so the instance can be replayed.
class BoundViolation : public Error {
 public:
  BoundViolation(const std::string& what, std::string bundle)
      : Error(ErrorCode::proved_bound_violation, what),
        bundle_(std::move(bundle)) {}

  const std::string& bundle() const noexcept { return bundle_; }

 private:
  std::string bundle_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace entrate

#endif  // ENTRATE_ERROR_HPP
