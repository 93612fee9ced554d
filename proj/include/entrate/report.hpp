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

// Report plumbing: full-precision number formatting, config hashing and the
// metadata block embedded in every command output.

#ifndef ENTRATE_REPORT_HPP
#define ENTRATE_REPORT_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include "entrate/serialization.hpp"

namespace entrate {

const char* artifact_version() noexcept;

// 17 significant digits, '.' decimal separator regardless of locale.
std::string format_double(double x);

std::uint64_t fnv1a64(std::string_view bytes);
std::string hex64(std::uint64_t v);

// Hash of the canonical (sorted-key, compact) dump of `config`.
std::string config_hash(const Json& config);

// { "artifact_version", "config_hash", "seed", "tolerances" }
Json make_meta(const Json& config, std::uint64_t seed, const Json& tolerances);

}  // namespace entrate

#endif  // ENTRATE_REPORT_HPP
