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

#pragma once

#include <string>

#include "combforge/comb.hpp"
#include "combforge/haar_moment.hpp"

namespace combforge {

enum class Metric { kAverage, kDiamond };

/// Identity-channel overlap of an n-query protocol comb R on H_0..H_{2n+1}:
///   tr(|I>><<I|_(H_{2n+2},H_0) * (R * E_U[C_U])).
/// A score of d^2 means perfect time reversal on Haar average; the theorem
/// caps it at n+1.  `moment` must be haar_moment_rep(d, n).
double timereversal_score(const Comb& r, int d, int n, const LabeledOperator& moment);
double timereversal_score(const Comb& r, int d, int n);

/// Query lower bound implied by error eps:
///   average-case: ceil(d(d+1)(1-eps) - (d+1));  diamond: ceil(d^2(1-eps) - 1);
/// clamped at 0.
int implied_query_bound(int d, double eps, Metric metric);

struct Thm36Report {
  double max_eig = 0.0;
  double eig_bound = 0.0;  // (n+1)/d
  double score = 0.0;
  double score_bound = 0.0;  // n+1
  bool passed(double tol) const {
    return max_eig <= eig_bound + tol && score <= score_bound + tol;
  }
};

/// Max-eigenvalue and trace checks of R * E_U[C_U] <= (n+1)/d I (x) I.
Thm36Report check_thm36(const Comb& r, int d, int n, const LabeledOperator& moment);

/// Score, implied error and bounds for one protocol comb.  The reported
/// implied_avg_error is the Haar-averaged error (a lower bound on the
/// worst-case epsilon of the protocol), so the implied query bound is valid
/// a fortiori.
struct Certificate {
  int d = 0;
  int n = 0;
  std::string protocol_id;
  std::string input_sha256;
  double score = 0.0;
  double avg_fidelity = 0.0;       // score / d^2
  double implied_avg_error = 0.0;  // (d^2 - score) / (d(d+1))
  double thm36_max_eig = 0.0;
  int bound_average = 0;
  int bound_diamond = 0;
  bool pass = false;
  double tol = 0.0;
  double runtime_ms = 0.0;
};

Certificate certify_comb(const Comb& r, int d, int n, const LabeledOperator& moment,
                         double tol, const std::string& protocol_id,
                         const std::string& input_sha256);

struct DirichletResult {
  long long a = 0;
  long long b = 1;
  double error = 0.0;  // |b t - a|
};

/// Smallest b in 1..N with |b t - round(b t)| < 1/N (brute force).
DirichletResult dirichlet_approx(double t, int big_n);

/// Constant-budget arithmetic for the generalized reversal reduction:
/// (a', b') with b' <= 1000 and |b' t - a'| < 1e-3, then a = 10 a',
/// b = 10 b'; composite diamond error b*eps + 0.02*pi must stay below 0.2.
struct GeneralizedBudget {
  long long a_prime = 0, b_prime = 1;
  long long a = 0, b = 10;
  double approx_error = 0.0;     // |b t - a| <= 0.01
  double composite_error = 0.0;  // b*eps + 0.02*pi
  long long extra_queries = 0;   // a - 1
  bool within_budget = false;    // composite_error < 0.2 and a >= 1
};
GeneralizedBudget generalized_budget(double t, double eps);

}  // namespace combforge
