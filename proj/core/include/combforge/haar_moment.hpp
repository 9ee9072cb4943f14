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

#include <cstdint>
#include <map>

#include "combforge/schurweyl.hpp"

namespace combforge {

/// Weingarten function values for moment order k and dimension d, indexed
/// by conjugacy class (cycle type).  Restricted to partitions with at most
/// d rows (pseudo-inverse convention); the plain inverse when d >= k.
struct WeingartenTable {
  int k = 0;
  int d = 0;
  std::map<YoungDiagram, double> values;

  static WeingartenTable build(int k, int d);
  double operator()(const YoungDiagram& cycle_type) const;
  double operator()(const Permutation& sigma) const { return (*this)(sigma.cycle_type()); }
};

/// Wg(sigma_class, d) = (1/k!^2) sum_{lambda: l(lambda)<=d}
///   dimP_lambda^2 chi_lambda(sigma) / dimQ_lambda(d).
double weingarten(const YoungDiagram& sigma_class, int d);

/// E_U[C_U] for n queries (moment order n+1) on labels H_1..H_{2n+2},
/// assembled blockwise from Prop-style Schur data:
///   sum_lambda (1/dimQ_lambda) I_Q (x) I_Q (x) |I_P>><<I_P|.
/// `basis` must be a SchurBasis on n+1 factors of dimension d; it is used
/// for both the even (output) and odd (input) registers with the canonical
/// tableau pairing.
LabeledOperator haar_moment_rep(int d, int n, const SchurBasis& basis);
LabeledOperator haar_moment_rep(int d, int n);

/// Same moment (order k = number of Choi factors) from the Weingarten
/// expansion sum_{sigma,tau} Wg(sigma tau^-1) P_even(sigma^-1) (x)
/// P_odd(tau^-1); labels H_1..H_{2k}.  Independent oracle.
LabeledOperator haar_moment_weingarten(int d, int k);

/// Monte-Carlo mean of |U>><<U|^(x)k over Haar samples; labels H_1..H_{2k}.
/// Per-sample seeds derive from the master seed by splitmix64, summed in
/// fixed shard order, so the result is identical for any thread count.
LabeledOperator haar_moment_mc(int d, int k, std::uint64_t samples, std::uint64_t seed,
                               int threads = 1);

}  // namespace combforge
