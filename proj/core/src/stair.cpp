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

#include "combforge/stair.hpp"

#include <algorithm>

namespace combforge {

namespace {

Eigen::MatrixXcd kron_matrix(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

int tableau_pos(const std::vector<StandardTableau>& tabs, const StandardTableau& t) {
  for (size_t i = 0; i < tabs.size(); ++i)
    if (tabs[i] == t) return static_cast<int>(i);
  throw std::logic_error("tableau_pos: tableau not found");
}

}  // namespace

LabeledOperator stair_embed(int d, int n, int k, const SchurBasis& basis_large,
                            const SchurBasis& basis_small) {
  if (k < 1 || k > n) throw std::invalid_argument("stair_embed: need 1 <= k <= n");
  if (basis_large.d() != d || basis_large.n() != k + 1 || basis_small.d() != d ||
      basis_small.n() != k)
    throw std::invalid_argument("stair_embed: bases must be on k+1 and k factors");
  const Eigen::Index da = basis_large.space_dim();
  const Eigen::Index db = basis_small.space_dim();
  check_budget(static_cast<std::uint64_t>(da) * static_cast<std::uint64_t>(db), "stair_embed");

  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(da * db, da * db);
  for (const SchurBlock& lb : basis_large.blocks()) {
    if (lb.dim_q == 0) continue;
    for (const YoungDiagram& mu : parents(lb.shape)) {
      const SchurBlock& mb = basis_small.block(mu);
      if (mb.dim_q == 0) continue;
      const double coeff = static_cast<double>(num_tableaux(lb.shape)) /
                           (static_cast<double>(num_tableaux(mu)) * static_cast<double>(lb.dim_q));
      Eigen::MatrixXcd z =
          Eigen::MatrixXcd::Zero(da * db, static_cast<Eigen::Index>(lb.dim_q) * mb.dim_q);
      for (size_t t = 0; t < lb.tableaux.size(); ++t) {
        const StandardTableau& tab = lb.tableaux[t];
        const StandardTableau down = tab.removed_last();
        if (!(down.shape() == mu)) continue;
        z += kron_matrix(lb.frames[t], mb.frames[static_cast<size_t>(tableau_pos(mb.tableaux, down))]);
      }
      m += coeff * (z * z.adjoint());
    }
  }

  std::vector<SystemLabel> labels;
  for (int i = 1; i <= k; ++i) labels.push_back({2 * i, d});
  labels.push_back({2 * n + 2, d});
  for (int i = 1; i <= k; ++i) labels.push_back({2 * i - 1, d});
  return LabeledOperator{std::move(labels), std::move(m)}.canonicalized();
}

LabeledOperator stair_embed(int d, int n, int k) {
  const SchurBasis basis_large(d, k + 1);
  const SchurBasis basis_small(d, k);
  return stair_embed(d, n, k, basis_large, basis_small);
}

LoewnerReport check_lemma38(int d, int n) {
  const SchurBasis basis_large(d, n + 1);
  const SchurBasis basis_small(d, n);
  const LabeledOperator moment = haar_moment_rep(d, n, basis_large);
  const LabeledOperator a_n = stair_embed(d, n, n, basis_large, basis_small);
  const LabeledOperator bound =
      LabeledOperator::kron(a_n, LabeledOperator::identity({{2 * n + 1, d}})).canonicalized();
  const LabeledOperator diff = bound - moment;
  LoewnerReport report;
  report.min_eig = min_eigenvalue(diff.matrix());
  report.scale = 1.0 + max_eigenvalue(bound.matrix());
  return report;
}

Lemma39Report check_lemma39(int d, int n, int k) {
  if (k < 1 || k > n) throw std::invalid_argument("check_lemma39: need 1 <= k <= n");
  Lemma39Report report;
  report.k = k;
  const LabeledOperator a_k = stair_embed(d, n, k);
  const LabeledOperator traced = a_k.partial_trace({2 * k});
  if (k == 1) {
    report.equality_case = true;
    const LabeledOperator expected =
        LabeledOperator::identity({{1, d}, {2 * n + 2, d}}).scaled(2.0 / d);
    report.equality.residual = operator_norm((traced - expected).matrix());
    return report;
  }
  const LabeledOperator a_prev = stair_embed(d, n, k - 1);
  const LabeledOperator bound =
      LabeledOperator::kron(a_prev, LabeledOperator::identity({{2 * k - 1, d}}))
          .canonicalized()
          .scaled(static_cast<double>(k + 1) / k);
  const LabeledOperator diff = bound - traced;
  report.loewner.min_eig = min_eigenvalue(diff.matrix());
  report.loewner.scale = 1.0 + max_eigenvalue(bound.matrix());
  return report;
}

Cor310Report check_cor310(const Comb& x, int d, int n, int k) {
  return check_cor310(x, d, n, k, stair_embed(d, n, k));
}

Cor310Report check_cor310(const Comb& x, int d, int n, int k, const LabeledOperator& a_k) {
  const LabeledOperator extended =
      LabeledOperator::kron(a_k, LabeledOperator::identity({{2 * k + 1, d}})).canonicalized();
  const LabeledOperator linked = link_product(x.op, extended);
  Cor310Report report;
  report.bound = static_cast<double>(k + 1) / d;
  report.max_eig = max_eigenvalue(linked.matrix());
  report.labels_ok = linked.label_count() == 2 && linked.labels()[0].id == 0 &&
                     linked.labels()[1].id == 2 * n + 2;
  return report;
}

Eigen::VectorXd phi_vector(const YoungDiagram& lambda, const YoungDiagram& mu) {
  const auto par = parents(lambda);
  if (std::find(par.begin(), par.end(), mu) == par.end())
    throw std::invalid_argument("phi_vector: mu must be a parent of lambda");
  const auto tabs = enumerate_tableaux(lambda);
  const Eigen::Index p = static_cast<Eigen::Index>(tabs.size());
  Eigen::VectorXd phi = Eigen::VectorXd::Zero(p * p);
  for (Eigen::Index t = 0; t < p; ++t)
    if (tabs[static_cast<size_t>(t)].removed_last().shape() == mu) phi(t * p + t) = 1.0;
  return phi;
}

Rational weighted_gram_overlap(const YoungDiagram& lambda) {
  const auto tabs = enumerate_tableaux(lambda);
  const int p = static_cast<int>(tabs.size());
  const auto par = parents(lambda);
  const int np = static_cast<int>(par.size());

  // Integer Phi vectors in the tableau-pair space.
  std::vector<std::vector<Int>> phis(static_cast<size_t>(np),
                                     std::vector<Int>(static_cast<size_t>(p) * p, 0));
  for (int m = 0; m < np; ++m)
    for (int t = 0; t < p; ++t)
      if (tabs[static_cast<size_t>(t)].removed_last().shape() == par[static_cast<size_t>(m)])
        phis[static_cast<size_t>(m)][static_cast<size_t>(t) * p + t] = 1;

  // Exact Gram matrix and weights c_mu = dimP_lambda / dimP_mu.
  std::vector<std::vector<Rational>> gram(static_cast<size_t>(np),
                                          std::vector<Rational>(static_cast<size_t>(np)));
  for (int a = 0; a < np; ++a)
    for (int b = 0; b < np; ++b) {
      Int dot = 0;
      for (size_t i = 0; i < phis[static_cast<size_t>(a)].size(); ++i)
        dot += phis[static_cast<size_t>(a)][i] * phis[static_cast<size_t>(b)][i];
      gram[static_cast<size_t>(a)][static_cast<size_t>(b)] = dot;
    }
  const Int dim_lambda = num_tableaux(lambda);
  std::vector<Rational> rhs(static_cast<size_t>(np));
  for (int m = 0; m < np; ++m)
    rhs[static_cast<size_t>(m)] =
        Rational(num_tableaux(par[static_cast<size_t>(m)]), dim_lambda);  // 1/c_mu

  // Solve G xi = rhs by exact Gaussian elimination.
  std::vector<std::vector<Rational>> aug = gram;
  for (int r = 0; r < np; ++r) aug[static_cast<size_t>(r)].push_back(rhs[static_cast<size_t>(r)]);
  for (int col = 0; col < np; ++col) {
    int pivot = -1;
    for (int r = col; r < np; ++r)
      if (aug[static_cast<size_t>(r)][static_cast<size_t>(col)] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) throw std::logic_error("weighted_gram_overlap: singular Gram matrix");
    std::swap(aug[static_cast<size_t>(col)], aug[static_cast<size_t>(pivot)]);
    const Rational pv = aug[static_cast<size_t>(col)][static_cast<size_t>(col)];
    for (int c = col; c <= np; ++c) aug[static_cast<size_t>(col)][static_cast<size_t>(c)] /= pv;
    for (int r = 0; r < np; ++r) {
      if (r == col) continue;
      const Rational f = aug[static_cast<size_t>(r)][static_cast<size_t>(col)];
      if (f == 0) continue;
      for (int c = col; c <= np; ++c)
        aug[static_cast<size_t>(r)][static_cast<size_t>(c)] -=
            f * aug[static_cast<size_t>(col)][static_cast<size_t>(c)];
    }
  }

  // Overlap <phi|x> with phi = sum_mu Phi_mu, x = sum_nu xi_nu Phi_nu.
  Rational overlap = 0;
  for (int a = 0; a < np; ++a)
    for (int b = 0; b < np; ++b)
      overlap += gram[static_cast<size_t>(a)][static_cast<size_t>(b)] *
                 aug[static_cast<size_t>(b)][static_cast<size_t>(np)];
  return overlap;
}

}  // namespace combforge
