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

#include "combforge/comb.hpp"
#include "combforge/haar_moment.hpp"
#include "combforge/schurweyl.hpp"

namespace combforge {

/// Stair operator A_k on registers (H_2,...,H_2k, H_{2n+2}; H_1,...,H_{2k-1}):
///   sum_{lambda (k+1 boxes, <=d rows)} sum_{mu -> lambda}
///     dimP_lambda/(dimP_mu dimQ_lambda) I_Q (x) I_Q (x)
///     sum_{T,S in Tab(lambda,mu)} |T><S| (x) |Tdown><Sdown|.
/// basis_large must be on k+1 factors, basis_small on k factors.  Each block
/// is assembled as coeff * Z Z^dag, so the operator is PSD by construction.
LabeledOperator stair_embed(int d, int n, int k, const SchurBasis& basis_large,
                            const SchurBasis& basis_small);
LabeledOperator stair_embed(int d, int n, int k);

struct LoewnerReport {
  double min_eig = 0.0;  // of (upper bound - lower side)
  double scale = 1.0;
  bool passed(double tol) const { return min_eig >= -tol * scale; }
};

struct EqualityReport {
  double residual = 0.0;
  bool passed(double tol) const { return residual <= tol; }
};

struct Cor310Report {
  double max_eig = 0.0;
  double bound = 0.0;
  bool labels_ok = false;
  bool passed(double tol) const { return labels_ok && max_eig <= bound + tol; }
};

/// E_U[C_U] <= I_{H_{2n+1}} (x) A_n as a minimum-eigenvalue certificate.
LoewnerReport check_lemma38(int d, int n);

/// Contraction step: for k >= 2 the Loewner bound
///   tr_{H_2k}(A_k) <= (k+1)/k I_{H_{2k-1}} (x) A_{k-1};
/// for k == 1 the exact base identity tr_{H_2}(A_1) = (2/d) I (x) I,
/// reported as an equality residual in `equality`.
struct Lemma39Report {
  int k = 0;
  bool equality_case = false;
  LoewnerReport loewner;
  EqualityReport equality;
  bool passed(double loewner_tol, double equality_tol) const {
    return equality_case ? equality.passed(equality_tol) : loewner.passed(loewner_tol);
  }
};
Lemma39Report check_lemma39(int d, int n, int k);

/// X * (I_{H_{2k+1}} (x) A_k) <= (k+1)/d I on (H_{2n+2}, H_0) for a
/// (k+1)-comb X on H_0..H_{2k+1}.
Cor310Report check_cor310(const Comb& x, int d, int n, int k);
Cor310Report check_cor310(const Comb& x, int d, int n, int k, const LabeledOperator& a_k);

/// |Phi_mu^lambda> = sum_{T in Tab(lambda,mu)} |T>|T> in the tableau-pair
/// space of P_lambda (x) P_lambda, canonical tableau order on both factors.
Eigen::VectorXd phi_vector(const YoungDiagram& lambda, const YoungDiagram& mu);

/// Exact rational evaluation of the weighted Gram overlap
///   <sum Phi| (sum_mu (dimP_lambda/dimP_mu) Phi Phi^T)^+ |sum Phi>,
/// built from the explicit Phi vectors and an exact linear solve; equals 1.
Rational weighted_gram_overlap(const YoungDiagram& lambda);

}  // namespace combforge
