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

// entrate command-line tool. Flags are merged over the --config file and the
// result is handed to the library through the C interface.

#include <cstdio>
#include <functional>
#include <memory>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "entrate/entrate.h"

namespace {

using Json = nlohmann::json;

constexpr int kExitInput = 1;
constexpr int kExitProved = 2;
constexpr int kExitConjecture = 3;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Json parse_file(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw InputError(path + ":" + std::to_string(line) + ":" + std::to_string(col) + ": malformed JSON");
  }
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
  if (!out) throw InputError("write to '" + path + "' failed");
}

// Options common to every subcommand.
struct Common {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::string out;
  int workers = 0;
};

// A flag that, when given, overrides one config field.
struct Override {
  std::function<void(Json&)> apply;
};

class Command {
 public:
  Command(CLI::App& app, const std::string& name, const std::string& help) : name_(name) {
    sub_ = app.add_subcommand(name, help);
    sub_->add_option("--config", common_.config_path, "JSON config file")->check(CLI::ExistingFile);
    sub_->add_option("--seed", common_.seed, "base seed (default 0)");
    sub_->add_option("--out", common_.out, "output path (default stdout)");
    sub_->add_option("--workers", common_.workers, "worker threads (default: available parallelism)")
        ->check(CLI::NonNegativeNumber);
  }

  template <typename T>
  CLI::Option* value(const std::string& flag, const std::string& key, const std::string& help) {
    auto holder = std::make_shared<T>();
    CLI::Option* opt = sub_->add_option(flag, *holder, help);
    overrides_.push_back({[opt, holder, key](Json& c) {
      if (opt->count() > 0) c[key] = *holder;
    }});
    return opt;
  }

  void file(const std::string& flag, const std::string& key, const std::string& help) {
    auto holder = std::make_shared<std::string>();
    CLI::Option* opt = sub_->add_option(flag, *holder, help)->check(CLI::ExistingFile);
    overrides_.push_back({[opt, holder, key](Json& c) {
      if (opt->count() > 0) c[key] = parse_file(*holder);
    }});
  }

  // A file whose top-level fields are merged into the config.
  void merged_file(const std::string& flag, const std::string& help) {
    auto holder = std::make_shared<std::string>();
    CLI::Option* opt = sub_->add_option(flag, *holder, help)->check(CLI::ExistingFile);
    overrides_.push_back({[opt, holder](Json& c) {
      if (opt->count() == 0) return;
      const Json j = parse_file(*holder);
      if (!j.is_object()) throw InputError(*holder + ": expected a JSON object");
      for (auto it = j.begin(); it != j.end(); ++it) c[it.key()] = it.value();
    }});
  }

  void flag(const std::string& flag, const std::string& key, const std::string& help) {
    auto holder = std::make_shared<bool>(false);
    CLI::Option* opt = sub_->add_flag(flag, *holder, help);
    overrides_.push_back({[opt, key](Json& c) {
      if (opt->count() > 0) c[key] = true;
    }});
  }

  bool parsed() const { return sub_->parsed(); }
  const std::string& name() const { return name_; }
  const Common& common() const { return common_; }

  Json build_config() const {
    Json config = Json::object();
    if (!common_.config_path.empty()) {
      config = parse_file(common_.config_path);
      if (!config.is_object()) throw InputError(common_.config_path + ": expected a JSON object");
    }
    for (const Override& o : overrides_) o.apply(config);
    if (common_.seed) config["seed"] = *common_.seed;
    return config;
  }

 private:
  std::string name_;
  CLI::App* sub_ = nullptr;
  Common common_;
  std::vector<Override> overrides_;
};

int exit_for_status(er_status st) {
  if (st == ER_PROVED_BOUND_VIOLATION) return kExitProved;
  if (st == ER_CONJECTURE_VIOLATION) return kExitConjecture;
  return kExitInput;
}

int execute(const Command& cmd) {
  const Json config = cmd.build_config();
  int workers = cmd.common().workers;
  if (workers <= 0) {
    const unsigned hw = std::thread::hardware_concurrency();
    workers = hw == 0 ? 1 : static_cast<int>(hw);
  }
  er_result* result = nullptr;
  const er_status st = er_run(cmd.name().c_str(), config.dump().c_str(), workers, &result);
  if (st != ER_OK) {
    std::cerr << "entrate " << cmd.name() << ": " << er_status_name(st) << ": " << er_last_error() << "\n";
    return exit_for_status(st);
  }
  const std::string text = er_result_text(result);
  const std::string meta = er_result_meta(result);
  const std::string bundle = er_result_bundle(result);
  const std::string message = er_result_message(result);
  const int code = er_result_exit_code(result);
  const bool csv = er_result_is_csv(result) != 0;
  er_result_free(result);

  const std::string& out = cmd.common().out;
  if (out.empty()) {
    std::cout << text;
  } else {
    write_file(out, text);
    if (csv) write_file(out + ".meta.json", meta);
  }
  if (!bundle.empty()) {
    const std::string bundle_path = (out.empty() ? std::string("entrate") : out) + ".bundle.json";
    write_file(bundle_path, bundle + "\n");
    std::cerr << "entrate " << cmd.name() << ": " << (message.empty() ? "bound exceeded" : message)
              << "; reproduction bundle written to " << bundle_path << "\n";
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"entrate: entanglement-rate bounds laboratory"};
  app.set_version_flag("--version", std::string(er_version()));
  app.require_subcommand(1);

  std::vector<std::unique_ptr<Command>> cmds;
  auto add = [&](const char* name, const char* help) -> Command& {
    cmds.push_back(std::make_unique<Command>(app, name, help));
    return *cmds.back();
  };

  Command& rate = add("rate", "entanglement rate of a pure state under H_AB");
  rate.file("--state", "state", "state JSON file");
  rate.file("--hamiltonian", "H", "interaction Hamiltonian JSON file");

  Command& lmax = add("lambda-max", "closed-form maximum of Lambda over ||H|| <= 1");
  lmax.file("--pair", "pair", "admissible pair JSON file");
  lmax.value<int>("--dim", "dim", "dimension of a sampled pair");
  lmax.value<double>("--p", "p", "Tr X of a sampled pair");

  Command& audit = add("proof-audit", "per-step audit of the proof decomposition");
  audit.file("--pair", "pair", "audit a single pair from a JSON file");
  audit.value<int>("--dim", "dim", "dimension of sampled pairs");
  audit.value<double>("--p", "p", "Tr X of sampled pairs (<= 1/e^2)");
  audit.value<int>("--trials", "trials", "number of sampled pairs");

  Command& scan = add("sim-scan", "stochastic search for the maximum of Lambda vs h(p)");
  scan.value<std::vector<int>>("--dims", "dims", "matrix dimensions")->delimiter(',');
  scan.value<std::vector<double>>("--p-grid", "p_grid", "values of p")->delimiter(',');
  scan.value<int>("--restarts", "restarts", "random restarts per cell");
  scan.value<int>("--iters", "iters", "gradient iterations per restart");
  scan.value<int>("--max-coords", "max_coords", "coordinates per gradient (0 = all)");

  Command& beta = add("beta-search", "maximize the entanglement rate over pure states");
  beta.value<std::vector<int>>("--dims", "dims", "factor dims d_a d_A d_B d_b")->expected(4)->delimiter(',');
  beta.file("--hamiltonian", "H", "interaction Hamiltonian JSON file (default Z x Z)");
  beta.value<int>("--restarts", "restarts", "random restarts");
  beta.value<int>("--iters", "iters", "gradient iterations per restart");

  Command& adia = add("adiabatic", "entanglement entropy and its rate along a gapped chain path");
  adia.merged_file("--path", "path spec JSON file");
  adia.value<int>("--n-sites", "n_sites", "number of sites");
  adia.value<int>("--cut", "cut", "sites in the left block");
  adia.value<std::string>("--generator", "generator", "filtered | ground_state");
  adia.flag("--transport", "transport", "also report transport residuals and RK4 fidelity");

  Command& loc = add("locality", "shell profile of the adiabatic generator");
  loc.merged_file("--path", "path spec JSON file");
  loc.value<int>("--n-sites", "n_sites", "number of sites");
  loc.value<double>("--s", "s", "path parameter");
  loc.value<int>("--center", "center", "center site");
  loc.value<std::string>("--term", "term", "local | full");
  loc.value<std::string>("--generator", "generator", "filtered | ground_state");

  Command& bounds = add("bounds", "evaluate the bound formulas");
  bounds.value<int>("--d", "d", "smaller interacting dimension");
  bounds.value<double>("--hnorm", "hnorm", "||H||");
  bounds.value<double>("--p", "p", "p for h(p) and 9 p ln(1/p)");
  bounds.file("--area-law", "area_law", "area-law parameter JSON file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitInput;
  }

  try {
    for (const auto& c : cmds) {
      if (c->parsed()) return execute(*c);
    }
  } catch (const std::exception& e) {
    std::cerr << "entrate: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
