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

// Subcommand implementations shared by the C API and the command-line tool.
// A command takes a JSON config (flags already merged in) and produces its
// primary output text, a metadata block and an exit classification.

#ifndef ENTRATE_COMMANDS_HPP
#define ENTRATE_COMMANDS_HPP

#include <string>
#include <vector>

#include "entrate/serialization.hpp"

namespace entrate {

enum class OutputFormat { csv, json };

enum ExitCode : int {
  kExitOk = 0,
  kExitInputError = 1,
  kExitProvedViolation = 2,
  kExitConjectureViolation = 3,
};

struct CommandResult {
  int exit_code = kExitOk;
  OutputFormat format = OutputFormat::json;
  std::string text;    // CSV table or JSON document (JSON embeds "meta")
  Json meta;
  std::string bundle;  // reproduction bundle when a bound was exceeded
  std::string message;
};

const std::vector<std::string>& command_names();

// Errors in the config surface as entrate::Error; bound violations are
// reported through exit_code and bundle instead of throwing. Output bytes
// depend only on the config, never on `workers`.
CommandResult run_command(const std::string& name, const Json& config, int workers);

}  // namespace entrate

#endif  // ENTRATE_COMMANDS_HPP
