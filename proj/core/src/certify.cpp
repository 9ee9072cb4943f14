// Copyright 2026 The combforge developers
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

#include "combforge/certify.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <numbers>

namespace combforge {

namespace {

LabeledOperator link_with_moment(const Comb& r, int d, int n, const LabeledOperator& moment) {
  const CombReport report = is_comb(r);
  if (!report.valid(1e-7))
    throw std::invalid_argument("timereversal_score: input failed the comb causality check");
  if (static_cast<int>(r.teeth.size()) != n + 1)
    throw std::invalid_argument("timereversal_score: comb must have n+1 teeth");
  LabeledOperator linked = link_product(r.op, moment);
  if (linked.label_count() != 2 || linked.labels()[0].id != 0 ||
      linked.labels()[1].id != 2 * n + 2)
    throw std::logic_error("timereversal_score: link did not close onto (H_0, H_{2n+2})");
  (void)d;
  return linked;
}

double identity_overlap(const LabeledOperator& closed, int d, int n) {
  const UnitaryMatrix ident(Eigen::MatrixXcd::Identity(d, d));
  const LabeledOperator k =
      choi_of_unitary(ident, 2 * n + 2, 0).reordered({0, 2 * n + 2});
  const Complex value = (k.matrix() * closed.matrix()).trace();
  if (std::abs(value.imag()) > 1e-9 * (1.0 + std::abs(value.real())))
    throw std::logic_error("timereversal_score: score has a non-real residual");
  return value.real();
}

}  // namespace

double timereversal_score(const Comb& r, int d, int n, const LabeledOperator& moment) {
  return identity_overlap(link_with_moment(r, d, n, moment), d, n);
}

double timereversal_score(const Comb& r, int d, int n) {
  return timereversal_score(r, d, n, haar_moment_rep(d, n));
}

int implied_query_bound(int d, double eps, Metric metric) {
  if (eps < 0.0 || eps > 1.0) throw std::invalid_argument("implied_query_bound: eps in [0,1]");
  const double value = metric == Metric::kAverage
                           ? d * (d + 1.0) * (1.0 - eps) - (d + 1.0)
                           : static_cast<double>(d) * d * (1.0 - eps) - 1.0;
  const double bound = std::ceil(value - 1e-9);
  return bound < 0.0 ? 0 : static_cast<int>(bound);
}

Thm36Report check_thm36(const Comb& r, int d, int n, const LabeledOperator& moment) {
  const LabeledOperator closed = link_with_moment(r, d, n, moment);
  Thm36Report report;
  report.max_eig = max_eigenvalue(closed.matrix());
  report.eig_bound = static_cast<double>(n + 1) / d;
  report.score = identity_overlap(closed, d, n);
  report.score_bound = n + 1.0;
  return report;
}

Certificate certify_comb(const Comb& r, int d, int n, const LabeledOperator& moment,
                         double tol, const std::string& protocol_id,
                         const std::string& input_sha256) {
  const auto start = std::chrono::steady_clock::now();
  Certificate cert;
  cert.d = d;
  cert.n = n;
  cert.protocol_id = protocol_id;
  cert.input_sha256 = input_sha256;
  cert.tol = tol;

  const Thm36Report thm = check_thm36(r, d, n, moment);
  cert.score = thm.score;
  cert.thm36_max_eig = thm.max_eig;
  cert.avg_fidelity = cert.score / (static_cast<double>(d) * d);
  cert.implied_avg_error = (static_cast<double>(d) * d - cert.score) / (d * (d + 1.0));
  cert.bound_average = implied_query_bound(d, cert.implied_avg_error, Metric::kAverage);
  cert.bound_diamond = implied_query_bound(d, cert.implied_avg_error, Metric::kDiamond);
  // The proof chain requires score <= n+1 and n at least the implied bound.
  cert.pass = thm.passed(tol) && cert.score <= d * d + tol && n >= cert.bound_average;

  cert.runtime_ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start)
                        .count();
  return cert;
}

DirichletResult dirichlet_approx(double t, int big_n) {
  if (big_n < 1) throw std::invalid_argument("dirichlet_approx: N must be >= 1");
  DirichletResult best;
  best.error = std::numeric_limits<double>::infinity();
  for (int b = 1; b <= big_n; ++b) {
    const long long a = std::llround(b * t);
    const double err = std::abs(b * t - static_cast<double>(a));
    if (err < 1.0 / big_n) return {a, b, err};
    if (err < best.error) best = {a, b, err};
  }
  return best;  // unreachable for exact reals; guards rounding edge cases
}

GeneralizedBudget generalized_budget(double t, double eps) {
  if (t < 0.1) throw std::invalid_argument("generalized_budget: requires t >= 0.1");
  if (eps > 1e-5 || eps < 0.0)
    throw std::invalid_argument("generalized_budget: requires 0 <= eps <= 1e-5");
  GeneralizedBudget out;
  const DirichletResult dr = dirichlet_approx(t, 1000);
  out.a_prime = dr.a;
  out.b_prime = dr.b;
  out.a = 10 * dr.a;
  out.b = 10 * dr.b;
  out.approx_error = std::abs(out.b * t - static_cast<double>(out.a));
  out.composite_error = out.b * eps + 0.02 * std::numbers::pi;
  out.extra_queries = out.a - 1;
  out.within_budget = out.composite_error < 0.2 && out.a >= 1;
  return out;
}

}  // namespace combforge
