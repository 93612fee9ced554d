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

#include "entrate/entrate.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "entrate/commands.hpp"
#include "entrate/error.hpp"
#include "entrate/rate_engine.hpp"
#include "entrate/search.hpp"
#include "entrate/serialization.hpp"

struct er_operator {
  entrate::HermitianOperator op;
};
struct er_pair {
  entrate::AdmissiblePair pair;
};
struct er_state {
  entrate::BipartiteState state;
};
struct er_result {
  entrate::CommandResult result;
  std::string meta;
};

namespace {

thread_local std::string g_last_error;

template <typename Fn>
er_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return ER_OK;
  } catch (const entrate::Error& e) {
    g_last_error = e.what();
    return static_cast<er_status>(static_cast<int>(e.code()));
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return ER_RESOURCE;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return ER_UNKNOWN;
  } catch (...) {
    g_last_error = "unknown error";
    return ER_UNKNOWN;
  }
}

void require(const void* p, const char* what) {
  if (p == nullptr) entrate::fail(entrate::ErrorCode::invalid_argument, std::string(what) + " is NULL");
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

extern "C" {

const char* er_version(void) { return ENTRATE_VERSION; }

const char* er_last_error(void) { return g_last_error.c_str(); }

const char* er_status_name(er_status status) {
  if (status == ER_OK) return "ok";
  if (status == ER_UNKNOWN) return "unknown";
  return entrate::error_code_name(static_cast<entrate::ErrorCode>(status));
}

void er_string_free(char* s) { std::free(s); }

er_status er_operator_create(int dim, const double* re, const double* im, er_operator** out) {
  return guarded([&] {
    require(re, "re");
    require(out, "out");
    if (dim < 1) entrate::fail(entrate::ErrorCode::invalid_argument, "er_operator_create: dim must be >= 1");
    entrate::Matrix m(dim, dim);
    for (int i = 0; i < dim; ++i) {
      for (int j = 0; j < dim; ++j) {
        m(i, j) = entrate::Complex(re[i * dim + j], im ? im[i * dim + j] : 0.0);
      }
    }
    *out = new er_operator{entrate::HermitianOperator(std::move(m))};
  });
}

er_status er_operator_from_json(const char* json, er_operator** out) {
  return guarded([&] {
    require(json, "json");
    require(out, "out");
    *out = new er_operator{entrate::operator_from_json(entrate::parse_json(json, "operator"))};
  });
}

er_status er_operator_to_json(const er_operator* op, char** out) {
  return guarded([&] {
    require(op, "op");
    require(out, "out");
    *out = dup_string(entrate::to_json(op->op).dump());
  });
}

int er_operator_dim(const er_operator* op) { return op ? op->op.dim() : 0; }

void er_operator_free(er_operator* op) { delete op; }

er_status er_pair_from_json(const char* json, er_pair** out) {
  return guarded([&] {
    require(json, "json");
    require(out, "out");
    *out = new er_pair{entrate::pair_from_json(entrate::parse_json(json, "pair"))};
  });
}

er_status er_pair_sample(int dim, double p, uint64_t seed, er_pair** out) {
  return guarded([&] {
    require(out, "out");
    *out = new er_pair{entrate::sample_admissible_pair(dim, p, seed)};
  });
}

er_status er_pair_to_json(const er_pair* pair, char** out) {
  return guarded([&] {
    require(pair, "pair");
    require(out, "out");
    *out = dup_string(entrate::to_json(pair->pair).dump());
  });
}

void er_pair_free(er_pair* pair) { delete pair; }

er_status er_state_from_json(const char* json, er_state** out) {
  return guarded([&] {
    require(json, "json");
    require(out, "out");
    *out = new er_state{entrate::state_from_json(entrate::parse_json(json, "state"))};
  });
}

void er_state_free(er_state* state) { delete state; }

er_status er_entanglement_rate(const er_state* state, const er_operator* h, double* out) {
  return guarded([&] {
    require(state, "state");
    require(h, "h");
    require(out, "out");
    *out = entrate::entanglement_rate(state->state, h->op);
  });
}

er_status er_lambda(const er_operator* h, const er_pair* pair, double* out) {
  return guarded([&] {
    require(h, "h");
    require(pair, "pair");
    require(out, "out");
    *out = entrate::lambda_functional(h->op, pair->pair);
  });
}

er_status er_max_lambda(const er_pair* pair, double* value, er_operator** h_opt) {
  return guarded([&] {
    require(pair, "pair");
    require(value, "value");
    entrate::HamiltonianOptimum opt = entrate::maximize_over_hamiltonian(pair->pair);
    *value = opt.lambda_max;
    if (h_opt != nullptr) *h_opt = new er_operator{std::move(opt.h_opt)};
  });
}

er_status er_proof_audit(const er_pair* pair, char** report_json, int* bounds_hold) {
  return guarded([&] {
    require(pair, "pair");
    const entrate::DecompositionReport rep =
        entrate::proof_decomposition(pair->pair, entrate::optimal_projector(pair->pair));
    if (bounds_hold != nullptr) *bounds_hold = rep.all_bounds_hold() ? 1 : 0;
    if (report_json != nullptr) *report_json = dup_string(entrate::to_json(rep).dump());
  });
}

er_status er_sie_lambda_bound(double p, double* out) {
  return guarded([&] {
    require(out, "out");
    *out = entrate::sie_lambda_bound(p);
  });
}

er_status er_sie_rate_bound(int d, double h_norm, double* out) {
  return guarded([&] {
    require(out, "out");
    *out = entrate::sie_rate_bound(d, h_norm);
  });
}

er_status er_sim_bound(double p, double* out) {
  return guarded([&] {
    require(out, "out");
    *out = entrate::sim_bound(p);
  });
}

er_status er_run(const char* command, const char* config_json, int workers, er_result** out) {
  return guarded([&] {
    require(command, "command");
    require(config_json, "config_json");
    require(out, "out");
    const entrate::Json config = entrate::parse_json(config_json, "config");
    auto* r = new er_result{entrate::run_command(command, config, workers), {}};
    r->meta = r->result.meta.dump(2) + "\n";
    *out = r;
  });
}

int er_result_exit_code(const er_result* r) { return r ? r->result.exit_code : entrate::kExitInputError; }

int er_result_is_csv(const er_result* r) { return r && r->result.format == entrate::OutputFormat::csv ? 1 : 0; }

const char* er_result_text(const er_result* r) { return r ? r->result.text.c_str() : ""; }

const char* er_result_meta(const er_result* r) { return r ? r->meta.c_str() : ""; }

const char* er_result_bundle(const er_result* r) { return r ? r->result.bundle.c_str() : ""; }

const char* er_result_message(const er_result* r) { return r ? r->result.message.c_str() : ""; }

void er_result_free(er_result* r) { delete r; }

}  // extern "C"
