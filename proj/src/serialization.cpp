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

#include "entrate/serialization.hpp"

#include <fstream>
#include <sstream>

#include "entrate/error.hpp"

namespace entrate {

const Json& require_field(const Json& j, const char* name, const std::string& origin) {
  if (!j.is_object()) fail(ErrorCode::invalid_argument, origin + ": expected a JSON object");
  auto it = j.find(name);
  if (it == j.end()) fail(ErrorCode::invalid_argument, origin + ": missing field '" + name + "'");
  return *it;
}

Json parse_json(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    // Translate the byte offset into line/column for the diagnostic.
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::ostringstream msg;
    msg << origin << ":" << line << ":" << col << ": malformed JSON (" << e.what() << ")";
    fail(ErrorCode::invalid_argument, msg.str());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::io, "cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str(), path);
}

namespace {

template <typename T>
T field_as(const Json& j, const char* name, const std::string& origin) {
  const Json& f = require_field(j, name, origin);
  try {
    return f.get<T>();
  } catch (const Json::exception&) {
    fail(ErrorCode::invalid_argument, origin + ": field '" + name + "' has the wrong type");
  }
}

}  // namespace

Json to_json(const HermitianOperator& op) {
  const Matrix& m = op.matrix();
  Json re = Json::array(), im = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json rr = Json::array(), ir = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      rr.push_back(m(i, j).real());
      ir.push_back(m(i, j).imag());
    }
    re.push_back(std::move(rr));
    im.push_back(std::move(ir));
  }
  return Json{{"dim", op.dim()}, {"re", std::move(re)}, {"im", std::move(im)}};
}

HermitianOperator operator_from_json(const Json& j) {
  const std::string origin = "operator";
  const int dim = field_as<int>(j, "dim", origin);
  if (dim < 1) fail(ErrorCode::invalid_argument, "operator: 'dim' must be >= 1");
  const auto re = field_as<std::vector<std::vector<double>>>(j, "re", origin);
  std::vector<std::vector<double>> im;
  if (j.contains("im")) {
    im = field_as<std::vector<std::vector<double>>>(j, "im", origin);
  } else {
    im.assign(dim, std::vector<double>(dim, 0.0));
  }
  if (static_cast<int>(re.size()) != dim || static_cast<int>(im.size()) != dim) {
    fail(ErrorCode::dimension_mismatch, "operator: 're'/'im' must have 'dim' rows");
  }
  Matrix m(dim, dim);
  for (int i = 0; i < dim; ++i) {
    if (static_cast<int>(re[i].size()) != dim || static_cast<int>(im[i].size()) != dim) {
      fail(ErrorCode::dimension_mismatch, "operator: row " + std::to_string(i) + " has the wrong length");
    }
    for (int k = 0; k < dim; ++k) m(i, k) = Complex(re[i][k], im[i][k]);
  }
  return HermitianOperator(std::move(m));
}

Json to_json(const AdmissiblePair& pair) {
  return Json{{"p", pair.p()}, {"X", to_json(pair.x())}, {"Y", to_json(pair.y())}};
}

AdmissiblePair pair_from_json(const Json& j) {
  const std::string origin = "pair";
  return AdmissiblePair(operator_from_json(require_field(j, "X", origin)),
                        operator_from_json(require_field(j, "Y", origin)),
                        field_as<double>(j, "p", origin));
}

Json to_json(const BipartiteState& state) {
  Json re = Json::array(), im = Json::array();
  for (Eigen::Index i = 0; i < state.amplitudes().size(); ++i) {
    re.push_back(state.amplitudes()(i).real());
    im.push_back(state.amplitudes()(i).imag());
  }
  const FactorDims& d = state.dims();
  return Json{{"dims", {d.a, d.A, d.B, d.b}}, {"re", std::move(re)}, {"im", std::move(im)}};
}

BipartiteState state_from_json(const Json& j) {
  const std::string origin = "state";
  const auto dims = field_as<std::vector<int>>(j, "dims", origin);
  if (dims.size() != 4) fail(ErrorCode::invalid_argument, "state: 'dims' must list [d_a, d_A, d_B, d_b]");
  const auto re = field_as<std::vector<double>>(j, "re", origin);
  std::vector<double> im(re.size(), 0.0);
  if (j.contains("im")) im = field_as<std::vector<double>>(j, "im", origin);
  if (im.size() != re.size()) fail(ErrorCode::dimension_mismatch, "state: 're' and 'im' lengths differ");
  Vector amp(static_cast<Eigen::Index>(re.size()));
  for (std::size_t i = 0; i < re.size(); ++i) amp(static_cast<Eigen::Index>(i)) = Complex(re[i], im[i]);
  return BipartiteState(FactorDims{dims[0], dims[1], dims[2], dims[3]}, std::move(amp));
}

namespace {

Json bracket_json(const BracketTerm& t) {
  Json j{{"k_lo", t.k_lo}, {"k_hi", t.k_hi}, {"signed", t.signed_value},
         {"value", t.value},  {"bound", t.bound}};
  if (!t.chain.empty()) j["chain"] = t.chain;
  return j;
}

}  // namespace

Json to_json(const DecompositionReport& r) {
  Json line1 = Json::array(), line3 = Json::array(), buckets = Json::array();
  for (const BracketTerm& t : r.line1) line1.push_back(bracket_json(t));
  for (const BracketTerm& t : r.line3) line3.push_back(bracket_json(t));
  for (const Bucket& b : r.buckets.buckets) {
    buckets.push_back(Json{{"k", b.k}, {"begin", b.begin}, {"end", b.end}, {"weight", b.weight}});
  }
  // margins: line-one brackets, line-three brackets, line-one total,
  // line-three aggregate, separated sum, overall 9 p ln(1/p).
  return Json{{"dim", r.dim},
              {"p", r.p},
              {"buckets", std::move(buckets)},
              {"brackets_line1", std::move(line1)},
              {"brackets_line3", std::move(line3)},
              {"line1_total", bracket_json(r.line1_total)},
              {"line3_aggregate", bracket_json(r.line3_aggregate)},
              {"separated", bracket_json(r.separated)},
              {"total", r.total},
              {"direct", r.direct},
              {"lambda_bound", r.lambda_bound},
              {"margins", r.margins},
              {"violations", r.violations}};
}

}  // namespace entrate
