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
#include <vector>

#include "combforge/labeled_operator.hpp"
#include "combforge/rng.hpp"

namespace combforge {

/// Unitary matrix with validated U^dag U = I (tolerance 1e-12).
class UnitaryMatrix {
 public:
  explicit UnitaryMatrix(Eigen::MatrixXcd u);
  static UnitaryMatrix haar(int d, Rng& rng);
  const Eigen::MatrixXcd& matrix() const { return u_; }
  int d() const { return static_cast<int>(u_.rows()); }

 private:
  Eigen::MatrixXcd u_;
};

/// One input/output register pair of a comb, in causal order.
struct Tooth {
  int in_id = 0;
  int out_id = 0;
  friend bool operator==(const Tooth&, const Tooth&) = default;
};

/// Choi operator of a sequential network, together with its teeth.
struct Comb {
  LabeledOperator op;
  std::vector<Tooth> teeth;
};

struct CombReport {
  double herm_residual = 0.0;
  double min_eig = 0.0;
  double psd_scale = 1.0;
  std::vector<double> causality_residuals;  // per tooth, last tooth first
  double scalar_residual = 0.0;             // |X^(0) - 1|
  bool valid(double tol) const;
  double worst_residual() const;
};

/// Choi operator |U>><<U| of the unitary channel, labels (out, in).
LabeledOperator choi_of_unitary(const UnitaryMatrix& u, int out_id, int in_id);

/// Apply a channel through its Choi operator: tr_in(C^{T_in} (I (x) X)).
/// The Choi must carry exactly two labels (out, in).
Eigen::MatrixXcd apply_choi(const LabeledOperator& choi, int out_id, int in_id,
                            const Eigen::MatrixXcd& x);

/// Checks positivity and the recursive causality chain
/// tr_out_j X^(j) = I_in_j (x) X^(j-1), with X^(j-1) reconstructed by
/// trace-and-compare.  All failures are reported, nothing throws.
CombReport is_comb(const Comb& comb, double tol = 1e-8);

/// Choi of a sequential strategy of Haar-random isometries with ancilla
/// dimension `ancilla_dim`, final memory traced out.  Teeth are
/// (in,out) = (2i, 2i+1) on ids 0..2*n_teeth-1.  Deterministic per seed.
Comb random_comb(int d, int n_teeth, int ancilla_dim, std::uint64_t seed);

/// The n-query protocol comb that ignores its queries (feeds |0> into each
/// query input) and routes H_0 to H_{2n+1} identically.
Comb identity_through_comb(int d, int n);

/// C_U = |U>><<U|^(x)(n+1) on teeth (in,out) = (2i-1, 2i), i = 1..n+1.
Comb c_u(const UnitaryMatrix& u, int n);

/// Average-case distance of a channel (as a 1-comb Choi on (out,in)) to a
/// unitary channel: d/(d+1) * (1 - tr(|U>><<U| C)/d^2).
double avg_case_distance_to_unitary(const LabeledOperator& choi, const UnitaryMatrix& u);

/// (1/d) ||C(E1) - C(E2)||_1; lower bound on the diamond distance.
double choi_trace_distance(const LabeledOperator& choi1, const LabeledOperator& choi2);

/// Loewner test M >= |psi><psi| via <psi|M^+|psi> <= 1 + tol on the support.
bool loewner_dominates_rank_one(const Eigen::MatrixXcd& m, const Eigen::VectorXcd& psi,
                                double tol = 1e-8);

}  // namespace combforge
