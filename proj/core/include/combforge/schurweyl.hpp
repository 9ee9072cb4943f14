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

#include <map>
#include <vector>

#include <Eigen/Dense>

#include "combforge/labeled_operator.hpp"
#include "combforge/symrep.hpp"
#include "combforge/young.hpp"

namespace combforge {

/// Matrix of the tensor-factor permutation action P(pi) on n equal-dimension
/// factors: P(pi)|b_1...b_n> = |b_{pi^inv(1)}...b_{pi^inv(n)}>.  The order of
/// the factors determines the action, not their label ids.
Eigen::MatrixXcd perm_action_matrix(const Permutation& pi, int d);
LabeledOperator perm_action(const Permutation& pi, const std::vector<SystemLabel>& labels);

/// One isotypic block of the Schur basis of (C^d)^(x)n: an orthonormal frame
/// |lambda,q,T> for each standard tableau T, stored as d^n x dimQ column
/// matrices in canonical tableau order.
struct SchurBlock {
  YoungDiagram shape;
  std::vector<StandardTableau> tableaux;
  int dim_q = 0;
  std::vector<Eigen::MatrixXcd> frames;  // frames[t]: columns are |lambda,q,T_t>
};

/// Orthonormal change of basis realizing (C^d)^(x)n = sum_lambda Q_lambda (x)
/// P_lambda.  Built by chained isotypic projectors at a reference tableau and
/// transported to the other tableaux through Young's orthogonal form, so the
/// equivariance P(pi)|l,q,T> = sum_T' [P_lambda(pi)]_{T'T} |l,q,T'> holds with
/// the canonical irrep matrices.
class SchurBasis {
 public:
  SchurBasis(int d, int n);

  int d() const { return d_; }
  int n() const { return n_; }
  Eigen::Index space_dim() const { return dim_; }
  const std::vector<SchurBlock>& blocks() const { return blocks_; }
  const SchurBlock& block(const YoungDiagram& lambda) const;
  bool has_block(const YoungDiagram& lambda) const;

  /// Max deviation of the Gram matrix of all basis vectors from identity.
  double orthonormality_residual() const;

 private:
  int d_;
  int n_;
  Eigen::Index dim_;
  std::vector<SchurBlock> blocks_;
};

/// sum_q sum_{T,S} [tableau_op]_{T,S} |l,q,T><l,q,S| as a plain matrix on
/// (C^d)^(x)n.  Linear in tableau_op.
Eigen::MatrixXcd embed_block_matrix(const SchurBasis& basis, const YoungDiagram& lambda,
                                    const Eigen::MatrixXcd& tableau_op);

/// Same, attached to the given labels (ordered as the basis factors).
LabeledOperator embed_block(const SchurBasis& basis, const YoungDiagram& lambda,
                            const Eigen::MatrixXcd& tableau_op,
                            const std::vector<SystemLabel>& labels);

/// Adjoint of embed_block_matrix: recover the tableau_op of a block.
Eigen::MatrixXcd project_block(const SchurBasis& basis, const YoungDiagram& lambda,
                               const Eigen::MatrixXcd& full_op);

/// Operator-norm residual of the raising identity on (C^d)^(x)n:
///   I (x) embed_{n-1}(I_Qmu (x) |T><S|) = sum_{lambda: mu->lambda}
///   embed_n(I_Qlambda (x) |T^up><S^up|).
double verify_raising(const SchurBasis& basis_small, const SchurBasis& basis_large,
                      const YoungDiagram& mu, const StandardTableau& t,
                      const StandardTableau& s);

/// Operator-norm residual of the lowering identity:
///   tr_last embed_n(I_Qlambda (x) |T><S|) = [Sh(T-down)=Sh(S-down)] *
///   (dimQ_lambda/dimQ_down) * embed_{n-1}(I_Qdown (x) |T-down><S-down|).
double verify_lowering(const SchurBasis& basis_small, const SchurBasis& basis_large,
                       const YoungDiagram& lambda, const StandardTableau& t,
                       const StandardTableau& s);

}  // namespace combforge
