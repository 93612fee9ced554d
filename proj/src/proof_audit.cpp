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

// Interval bucketing of Y's spectrum and the bracket-by-bracket audit.
//
// The pair sum over i < j in Y's eigenbasis is regrouped as
//   sum_k B_k  -  sum_{k=2}^{k*-1} W_k  +  S
// where B_k covers pairs inside intervals k and k+1, W_k pairs inside a single
// interval and S pairs at least one interval apart. B_k and W_k are evaluated
// as compressed matrix expressions on their eigen-subspace, S as an explicit
// pair sum, and the regrouped total is compared against the full matrix
// product -2i Tr(P [X, log Y]).

#include <algorithm>
#include <cmath>
#include <sstream>

#include "entrate/error.hpp"
#include "entrate/rate_engine.hpp"

namespace entrate {

double IntervalBuckets::total_weight() const {
  double s = 0.0;
  for (const Bucket& b : buckets) s += b.weight;
  return s;
}

namespace {

int support_size(const Spectrum& s) {
  const double tol = default_support_tol(s);
  int n = 0;
  while (n < s.dim() && s.eigenvalues(n) > tol) ++n;
  return n;
}

int interval_of(double y, double p) {
  int k = 1;
  while (y < std::pow(p, k)) {
    ++k;
    if (k > 100000) fail(ErrorCode::numerical, "bucket_eigenvalues: eigenvalue too small to bucket");
  }
  return k;
}

}  // namespace

IntervalBuckets bucket_eigenvalues(const Spectrum& y_spectrum, const HermitianOperator& x, double p) {
  if (!(p > 0.0 && p <= 0.5)) {
    std::ostringstream msg;
    msg << "bucket_eigenvalues: p = " << p << " outside (0, 1/2]";
    fail(ErrorCode::domain, msg.str());
  }
  if (x.dim() != y_spectrum.dim()) fail(ErrorCode::dimension_mismatch, "bucket_eigenvalues: dims differ");
  IntervalBuckets out;
  out.p = p;
  out.support_size = support_size(y_spectrum);
  const int n = out.support_size;
  if (n == 0) return out;
  const Matrix& v = y_spectrum.eigenvectors;
  const Matrix xh = v.adjoint() * x.matrix() * v;
  const int k_last = interval_of(y_spectrum.eigenvalues(n - 1), p);
  out.buckets.reserve(k_last);
  int i = 0;
  for (int k = 1; k <= k_last; ++k) {
    Bucket b{k, i, i, 0.0};
    while (i < n && interval_of(y_spectrum.eigenvalues(i), p) == k) {
      b.weight += xh(i, i).real();
      ++i;
    }
    b.end = i;
    out.buckets.push_back(b);
  }
  return out;
}

namespace {

struct EigenFrame {
  RealVector y;     // support eigenvalues, descending
  RealVector logy;  // ln y on the support
  Matrix x;         // X in Y's eigenbasis, support block
  Matrix proj;      // P in Y's eigenbasis, support block
};

// -2i Tr(P~ [X~, L~]) on the index block [begin, end).
double block_value(const EigenFrame& f, int begin, int end) {
  const int m = end - begin;
  if (m < 2) return 0.0;
  const Matrix xs = f.x.block(begin, begin, m, m);
  const Matrix ps = f.proj.block(begin, begin, m, m);
  const Matrix ls = f.logy.segment(begin, m).cast<Complex>().asDiagonal();
  const Matrix comm = xs * ls - ls * xs;
  const Complex t = ps.transpose().cwiseProduct(comm).sum();
  return 2.0 * t.imag();  // -2i t, real part
}

// ||[X~, L~]||_1 on the block.
double block_commutator_trace_norm(const EigenFrame& f, int begin, int end) {
  const int m = end - begin;
  if (m < 2) return 0.0;
  const Matrix xs = f.x.block(begin, begin, m, m);
  const Matrix ls = f.logy.segment(begin, m).cast<Complex>().asDiagonal();
  const Matrix comm = xs * ls - ls * xs;
  return trace_norm(HermitianOperator::hermitized(Complex(0.0, -1.0) * comm));
}

double block_log_ratio(const EigenFrame& f, int begin, int end) {
  if (end - begin < 1) return 0.0;
  return f.logy(begin) - f.logy(end - 1);
}

constexpr double kBoundSlack = 1e-9;

bool exceeds(double value, double bound) {
  return value > bound * (1.0 + kBoundSlack) + 1e-15;
}

}  // namespace

DecompositionReport proof_decomposition(const AdmissiblePair& pair, const HermitianOperator& projector) {
  const double p = pair.p();
  if (p > kProofRegimeMax) {
    std::ostringstream msg;
    msg << "proof_decomposition: p = " << p << " outside the bound regime p <= 1/e^2";
    fail(ErrorCode::domain, msg.str());
  }
  if (projector.dim() != pair.dim()) fail(ErrorCode::dimension_mismatch, "proof_decomposition: dims differ");
  {
    const Spectrum ps = hermitian_spectrum(projector);
    if (ps.eigenvalues(ps.dim() - 1) < -kPsdTol || ps.eigenvalues(0) > 1.0 + kPsdTol) {
      fail(ErrorCode::invalid_argument, "proof_decomposition: P must satisfy 0 <= P <= I");
    }
  }

  const Spectrum sy = hermitian_spectrum(pair.y());
  DecompositionReport rep;
  rep.dim = pair.dim();
  rep.p = p;
  rep.buckets = bucket_eigenvalues(sy, pair.x(), p);
  const int n = rep.buckets.support_size;
  const double log_inv_p = std::log(1.0 / p);
  rep.lambda_bound = sie_lambda_bound(p);

  EigenFrame f;
  const Matrix v = sy.eigenvectors.leftCols(n);
  f.y = sy.eigenvalues.head(n);
  f.logy = f.y.array().log().matrix();
  f.x = v.adjoint() * pair.x().matrix() * v;
  f.proj = v.adjoint() * projector.matrix() * v;

  // A single occupied interval is audited as the bracket (1, 2) with an
  // empty second interval.
  std::vector<Bucket> buckets = rep.buckets.buckets;
  if (buckets.size() == 1) buckets.push_back(Bucket{2, n, n, 0.0});
  const int kstar = static_cast<int>(buckets.size());

  auto check = [&rep](const BracketTerm& t, const std::string& name) {
    if (exceeds(t.value, t.bound)) {
      std::ostringstream msg;
      msg << name << ": value " << t.value << " exceeds bound " << t.bound;
      rep.violations.push_back(msg.str());
    }
  };
  auto check_chain = [&rep](const std::vector<double>& chain, const std::string& name) {
    for (std::size_t s = 1; s < chain.size(); ++s) {
      if (exceeds(chain[s - 1], chain[s])) {
        std::ostringstream msg;
        msg << name << ": chain step " << s << " decreases (" << chain[s - 1] << " > " << chain[s] << ")";
        rep.violations.push_back(msg.str());
      }
    }
  };

  double reassembled = 0.0;
  double line1_sum = 0.0;
  for (int k = 0; k + 1 < kstar; ++k) {
    const Bucket& lo = buckets[k];
    const Bucket& hi = buckets[k + 1];
    BracketTerm t{lo.k, hi.k, block_value(f, lo.begin, hi.end), 0.0, 0.0, {}};
    t.value = std::abs(t.signed_value);
    t.bound = 2.0 * (lo.weight + hi.weight) * log_inv_p;
    const std::vector<double> chain{
        t.value, block_commutator_trace_norm(f, lo.begin, hi.end),
        block_log_ratio(f, lo.begin, hi.end) * (lo.weight + hi.weight), t.bound};
    check(t, "line1 bracket " + std::to_string(lo.k));
    check_chain(chain, "line1 bracket " + std::to_string(lo.k));
    t.chain = chain;
    reassembled += t.signed_value;
    line1_sum += t.value;
    rep.line1.push_back(t);
  }

  double line3_sum = 0.0;
  for (int k = 1; k + 1 < kstar; ++k) {
    const Bucket& b = buckets[k];
    BracketTerm t{b.k, b.k, block_value(f, b.begin, b.end), 0.0, 0.0, {}};
    t.value = std::abs(t.signed_value);
    t.bound = b.weight * log_inv_p;
    const std::vector<double> chain{t.value, block_commutator_trace_norm(f, b.begin, b.end),
                                    block_log_ratio(f, b.begin, b.end) * b.weight, t.bound};
    check(t, "line3 bracket " + std::to_string(b.k));
    check_chain(chain, "line3 bracket " + std::to_string(b.k));
    t.chain = chain;
    reassembled -= t.signed_value;
    line3_sum += t.value;
    rep.line3.push_back(t);
  }

  // Pairs separated by at least one full interval, with the Cauchy-Schwarz
  // chain evaluated on the contraction Z = Y^{-1/2} X Y^{-1/2}.
  std::vector<int> bucket_of(n);
  for (const Bucket& b : buckets) {
    for (int i = b.begin; i < b.end; ++i) bucket_of[i] = b.k;
  }
  double sep = 0.0;
  double cs_z = 0.0, cs_p = 0.0, w_z = 0.0, w_p = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (bucket_of[j] - bucket_of[i] < 2) continue;
      const double w = f.logy(i) - f.logy(j);
      sep += 4.0 * w * (f.proj(i, j) * f.x(j, i)).imag();
      const double geo = std::sqrt(f.y(i) * f.y(j));
      const double z2 = std::norm(f.x(i, j)) / (f.y(i) * f.y(j));
      const double p2 = std::norm(f.proj(i, j));
      cs_z += w * geo * z2;
      cs_p += w * geo * p2;
      w_z += f.y(i) * z2;
      w_p += f.y(i) * p2;
    }
  }
  double full_z = 0.0, full_p = 0.0, diag_z = 0.0, diag_p = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      full_z += f.y(i) * std::norm(f.x(i, j)) / (f.y(i) * f.y(j));
      full_p += f.y(i) * std::norm(f.proj(i, j));
    }
    diag_z += f.x(i, i).real();  // y_i Z_ii = X_ii
    diag_p += f.y(i) * f.proj(i, i).real();
  }
  const double pre = 4.0 * std::sqrt(p) * log_inv_p;
  rep.separated = BracketTerm{1, kstar, sep, std::abs(sep), 4.0 * p * log_inv_p, {}};
  const std::vector<double> sep_chain{rep.separated.value,
                                      4.0 * std::sqrt(cs_z) * std::sqrt(cs_p),
                                      pre * std::sqrt(w_z) * std::sqrt(w_p),
                                      pre * std::sqrt(full_z) * std::sqrt(full_p),
                                      pre * std::sqrt(diag_z) * std::sqrt(diag_p),
                                      rep.separated.bound};
  check(rep.separated, "separated sum");
  check_chain(sep_chain, "separated sum");
  rep.separated.chain = sep_chain;
  reassembled += sep;

  rep.line1_total = BracketTerm{1, kstar, line1_sum, line1_sum, 4.0 * p * log_inv_p, {}};
  rep.line3_aggregate = BracketTerm{2, kstar - 1, line3_sum, line3_sum, p * log_inv_p, {}};
  check(rep.line1_total, "line1 total");
  check(rep.line3_aggregate, "line3 aggregate");

  // Direct value from full matrix products in the original basis.
  const Matrix log_y = matrix_log_on_support(sy).matrix();
  const Matrix& x = pair.x().matrix();
  const Matrix comm = x * log_y - log_y * x;
  const Complex tr = projector.matrix().transpose().cwiseProduct(comm).sum();
  rep.direct = 2.0 * tr.imag();
  rep.total = reassembled;

  const double id_err = std::abs(rep.total - rep.direct);
  if (id_err > kIdentityTol) {
    std::ostringstream msg;
    msg << "proof_decomposition: regrouped total " << rep.total << " differs from direct value "
        << rep.direct << " by " << id_err;
    fail(ErrorCode::internal, msg.str());
  }
  if (exceeds(std::abs(rep.direct), rep.lambda_bound)) {
    std::ostringstream msg;
    msg << "total: |Lambda| " << std::abs(rep.direct) << " exceeds 9 p ln(1/p) = " << rep.lambda_bound;
    rep.violations.push_back(msg.str());
  }

  for (const BracketTerm& t : rep.line1) rep.margins.push_back(t.bound - t.value);
  for (const BracketTerm& t : rep.line3) rep.margins.push_back(t.bound - t.value);
  rep.margins.push_back(rep.line1_total.bound - rep.line1_total.value);
  rep.margins.push_back(rep.line3_aggregate.bound - rep.line3_aggregate.value);
  rep.margins.push_back(rep.separated.bound - rep.separated.value);
  rep.margins.push_back(rep.lambda_bound - std::abs(rep.direct));
  return rep;
}

}  // namespace entrate
