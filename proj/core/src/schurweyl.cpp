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

#include "combforge/schurweyl.hpp"

#include <cmath>
#include <deque>

namespace combforge {

Eigen::MatrixXcd perm_action_matrix(const Permutation& pi, int d) {
  const int n = pi.degree();
  Eigen::Index dim = 1;
  for (int i = 0; i < n; ++i) dim *= d;
  const Permutation inv = pi.inverse();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  std::vector<int> digits(static_cast<size_t>(n));
  for (Eigen::Index c = 0; c < dim; ++c) {
    Eigen::Index rem = c;
    for (int k = n - 1; k >= 0; --k) {
      digits[static_cast<size_t>(k)] = static_cast<int>(rem % d);
      rem /= d;
    }
    Eigen::Index r = 0;
    for (int k = 1; k <= n; ++k) r = r * d + digits[static_cast<size_t>(inv(k) - 1)];
    m(r, c) = Complex(1, 0);
  }
  return m;
}

LabeledOperator perm_action(const Permutation& pi, const std::vector<SystemLabel>& labels) {
  if (static_cast<int>(labels.size()) != pi.degree())
    throw std::invalid_argument("perm_action: label count != permutation degree");
  const int d = labels.empty() ? 1 : labels[0].dim;
  for (const SystemLabel& l : labels)
    if (l.dim != d) throw std::invalid_argument("perm_action: factors must have equal dims");
  return {labels, perm_action_matrix(pi, d)};
}

namespace {

// e_mu acting on (C^d)^(x)n with S_k embedded on the first k factors.
Eigen::MatrixXcd level_projector(const YoungDiagram& mu, int n, int d) {
  const int k = mu.box_count();
  Eigen::Index dim = 1;
  for (int i = 0; i < n; ++i) dim *= d;
  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(dim, dim);
  Eigen::Index tail = 1;
  for (int i = k; i < n; ++i) tail *= d;
  for (const Permutation& pi : symmetric_group(k)) {
    const double chi = character(mu, pi);
    if (std::abs(chi) < 1e-14) continue;
    // P(pi) on the first k factors tensor identity on the rest.
    const Eigen::MatrixXcd head = perm_action_matrix(pi, d);
    for (Eigen::Index r = 0; r < head.rows(); ++r)
      for (Eigen::Index c = 0; c < head.cols(); ++c)
        if (head(r, c) != Complex(0, 0))
          for (Eigen::Index t = 0; t < tail; ++t) acc(r * tail + t, c * tail + t) += chi * head(r, c);
  }
  const double dim_p = static_cast<double>(num_tableaux(mu));
  return (dim_p / static_cast<double>(factorial(k))) * acc;
}

// Orthonormal basis of the range of a Hermitian projector, by deterministic
// Gram-Schmidt over its columns.
Eigen::MatrixXcd range_frame(const Eigen::MatrixXcd& proj, int expected_rank) {
  std::vector<Eigen::VectorXcd> frame;
  for (Eigen::Index c = 0; c < proj.cols() && static_cast<int>(frame.size()) < expected_rank; ++c) {
    Eigen::VectorXcd v = proj.col(c);
    for (const Eigen::VectorXcd& u : frame) v -= u.dot(v) * u;
    const double norm = v.norm();
    if (norm > 1e-6) frame.push_back(v / norm);
  }
  if (static_cast<int>(frame.size()) != expected_rank)
    throw std::logic_error("range_frame: projector rank != expected multiplicity");
  Eigen::MatrixXcd out(proj.rows(), expected_rank);
  for (int c = 0; c < expected_rank; ++c) out.col(c) = frame[static_cast<size_t>(c)];
  return out;
}

}  // namespace

SchurBasis::SchurBasis(int d, int n) : d_(d), n_(n) {
  if (d < 2) throw std::invalid_argument("SchurBasis: d must be >= 2");
  if (n < 1) throw std::invalid_argument("SchurBasis: n must be >= 1");
  dim_ = 1;
  for (int i = 0; i < n; ++i) dim_ *= d;
  check_budget(static_cast<std::uint64_t>(dim_), "SchurBasis");

  // Projector cache for this (d, n): one matrix per chain shape.
  std::map<YoungDiagram, Eigen::MatrixXcd> projectors;
  const auto projector = [&](const YoungDiagram& mu) -> const Eigen::MatrixXcd& {
    auto it = projectors.find(mu);
    if (it == projectors.end())
      it = projectors.emplace(mu, level_projector(mu, n, d)).first;
    return it->second;
  };

  Eigen::Index total = 0;
  for (const YoungDiagram& lambda : enumerate_partitions(n, d)) {
    SchurBlock block;
    block.shape = lambda;
    block.tableaux = enumerate_tableaux(lambda);
    block.dim_q = static_cast<int>(dimension_q(lambda, d));
    block.frames.resize(block.tableaux.size());

    // Reference tableau: chained isotypic projectors pin the (lambda, T0)
    // subspace; its orthonormal frame is the Q_lambda multiplicity frame.
    const StandardTableau& t0 = block.tableaux.front();
    Eigen::MatrixXcd chain_proj = Eigen::MatrixXcd::Identity(dim_, dim_);
    for (const YoungDiagram& step : t0.chain())
      if (step.box_count() >= 2) chain_proj = projector(step) * chain_proj;
    block.frames[0] = range_frame(chain_proj, block.dim_q);

    // Transport |l,q,T0> to every other tableau through Young's orthogonal
    // form: |s_i T> = (P(s_i) - 1/r) |T> / sqrt(1 - 1/r^2).
    std::vector<bool> visited(block.tableaux.size(), false);
    visited[0] = true;
    std::deque<int> queue{0};
    while (!queue.empty()) {
      const int t = queue.front();
      queue.pop_front();
      const StandardTableau& tab = block.tableaux[static_cast<size_t>(t)];
      for (int i = 1; i <= n - 1; ++i) {
        if (!swap_is_standard(tab, i)) continue;
        const StandardTableau swapped = swap_entries(tab, i);
        int t2 = -1;
        for (size_t j = 0; j < block.tableaux.size(); ++j)
          if (block.tableaux[j] == swapped) t2 = static_cast<int>(j);
        if (t2 < 0 || visited[static_cast<size_t>(t2)]) continue;
        const double r = static_cast<double>(axial_distance(tab, i));
        const double off = std::sqrt(1.0 - 1.0 / (r * r));
        const Eigen::MatrixXcd action =
            perm_action_matrix(Permutation::adjacent_transposition(n, i), d);
        block.frames[static_cast<size_t>(t2)] =
            (action * block.frames[static_cast<size_t>(t)] -
             (1.0 / r) * block.frames[static_cast<size_t>(t)]) /
            off;
        visited[static_cast<size_t>(t2)] = true;
        queue.push_back(t2);
      }
    }
    for (bool v : visited)
      if (!v) throw std::logic_error("SchurBasis: tableau transport graph not connected");

    total += static_cast<Eigen::Index>(block.dim_q) *
             static_cast<Eigen::Index>(block.tableaux.size());
    blocks_.push_back(std::move(block));
  }
  if (total != dim_) throw std::logic_error("SchurBasis: dimension count mismatch");
}

const SchurBlock& SchurBasis::block(const YoungDiagram& lambda) const {
  for (const SchurBlock& b : blocks_)
    if (b.shape == lambda) return b;
  throw std::invalid_argument("SchurBasis: no block for shape " + lambda.to_string());
}

bool SchurBasis::has_block(const YoungDiagram& lambda) const {
  for (const SchurBlock& b : blocks_)
    if (b.shape == lambda) return true;
  return false;
}

double SchurBasis::orthonormality_residual() const {
  Eigen::MatrixXcd v(dim_, dim_);
  Eigen::Index col = 0;
  for (const SchurBlock& b : blocks_)
    for (const Eigen::MatrixXcd& f : b.frames) {
      v.middleCols(col, f.cols()) = f;
      col += f.cols();
    }
  return (v.adjoint() * v - Eigen::MatrixXcd::Identity(dim_, dim_)).cwiseAbs().maxCoeff();
}

Eigen::MatrixXcd embed_block_matrix(const SchurBasis& basis, const YoungDiagram& lambda,
                                    const Eigen::MatrixXcd& tableau_op) {
  const SchurBlock& b = basis.block(lambda);
  const int p = static_cast<int>(b.tableaux.size());
  if (tableau_op.rows() != p || tableau_op.cols() != p)
    throw std::invalid_argument("embed_block: tableau_op must be |Tab(lambda)| square");
  if (b.dim_q == 0)
    throw std::invalid_argument("embed_block: block has zero multiplicity for this d");
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(basis.space_dim(), basis.space_dim());
  for (int t = 0; t < p; ++t)
    for (int s = 0; s < p; ++s)
      if (tableau_op(t, s) != Complex(0, 0))
        out += tableau_op(t, s) *
               (b.frames[static_cast<size_t>(t)] * b.frames[static_cast<size_t>(s)].adjoint());
  return out;
}

LabeledOperator embed_block(const SchurBasis& basis, const YoungDiagram& lambda,
                            const Eigen::MatrixXcd& tableau_op,
                            const std::vector<SystemLabel>& labels) {
  return {labels, embed_block_matrix(basis, lambda, tableau_op)};
}

Eigen::MatrixXcd project_block(const SchurBasis& basis, const YoungDiagram& lambda,
                               const Eigen::MatrixXcd& full_op) {
  const SchurBlock& b = basis.block(lambda);
  const int p = static_cast<int>(b.tableaux.size());
  Eigen::MatrixXcd out(p, p);
  for (int t = 0; t < p; ++t)
    for (int s = 0; s < p; ++s)
      out(t, s) = (b.frames[static_cast<size_t>(t)].adjoint() * full_op *
                   b.frames[static_cast<size_t>(s)])
                      .trace() /
                  static_cast<double>(b.dim_q);
  return out;
}

double verify_raising(const SchurBasis& basis_small, const SchurBasis& basis_large,
                      const YoungDiagram& mu, const StandardTableau& t,
                      const StandardTableau& s) {
  if (basis_large.n() != basis_small.n() + 1 || basis_large.d() != basis_small.d())
    throw std::invalid_argument("verify_raising: bases must differ by one factor");
  const int d = basis_small.d();
  const int p = static_cast<int>(basis_small.block(mu).tableaux.size());
  const auto& tabs = basis_small.block(mu).tableaux;
  Eigen::MatrixXcd e_ts = Eigen::MatrixXcd::Zero(p, p);
  int ti = -1, si = -1;
  for (int k = 0; k < p; ++k) {
    if (tabs[static_cast<size_t>(k)] == t) ti = k;
    if (tabs[static_cast<size_t>(k)] == s) si = k;
  }
  if (ti < 0 || si < 0) throw std::invalid_argument("verify_raising: tableaux not of shape mu");
  e_ts(ti, si) = 1.0;

  const Eigen::MatrixXcd small_embed = embed_block_matrix(basis_small, mu, e_ts);
  Eigen::MatrixXcd lhs = Eigen::MatrixXcd::Zero(basis_large.space_dim(), basis_large.space_dim());
  // I_{H_n} appended as the least significant factor.
  for (Eigen::Index r = 0; r < small_embed.rows(); ++r)
    for (Eigen::Index c = 0; c < small_embed.cols(); ++c)
      if (small_embed(r, c) != Complex(0, 0))
        for (int k = 0; k < d; ++k) lhs(r * d + k, c * d + k) = small_embed(r, c);

  Eigen::MatrixXcd rhs = Eigen::MatrixXcd::Zero(basis_large.space_dim(), basis_large.space_dim());
  for (const YoungDiagram& lambda : children(mu)) {
    if (!basis_large.has_block(lambda) || basis_large.block(lambda).dim_q == 0) continue;
    const auto& ltabs = basis_large.block(lambda).tableaux;
    const StandardTableau tu = t.appended(lambda);
    const StandardTableau su = s.appended(lambda);
    const int pl = static_cast<int>(ltabs.size());
    Eigen::MatrixXcd e = Eigen::MatrixXcd::Zero(pl, pl);
    int tiu = -1, siu = -1;
    for (int k = 0; k < pl; ++k) {
      if (ltabs[static_cast<size_t>(k)] == tu) tiu = k;
      if (ltabs[static_cast<size_t>(k)] == su) siu = k;
    }
    if (tiu < 0 || siu < 0) throw std::logic_error("verify_raising: raised tableau not found");
    e(tiu, siu) = 1.0;
    rhs += embed_block_matrix(basis_large, lambda, e);
  }
  return operator_norm(lhs - rhs);
}

double verify_lowering(const SchurBasis& basis_small, const SchurBasis& basis_large,
                       const YoungDiagram& lambda, const StandardTableau& t,
                       const StandardTableau& s) {
  if (basis_large.n() != basis_small.n() + 1 || basis_large.d() != basis_small.d())
    throw std::invalid_argument("verify_lowering: bases must differ by one factor");
  const int d = basis_small.d();
  const auto& ltabs = basis_large.block(lambda).tableaux;
  const int pl = static_cast<int>(ltabs.size());
  Eigen::MatrixXcd e = Eigen::MatrixXcd::Zero(pl, pl);
  int ti = -1, si = -1;
  for (int k = 0; k < pl; ++k) {
    if (ltabs[static_cast<size_t>(k)] == t) ti = k;
    if (ltabs[static_cast<size_t>(k)] == s) si = k;
  }
  if (ti < 0 || si < 0) throw std::invalid_argument("verify_lowering: tableaux not of shape lambda");
  e(ti, si) = 1.0;
  const Eigen::MatrixXcd big = embed_block_matrix(basis_large, lambda, e);

  // Partial trace over the last (least significant) factor.
  const Eigen::Index small_dim = basis_small.space_dim();
  Eigen::MatrixXcd traced = Eigen::MatrixXcd::Zero(small_dim, small_dim);
  for (Eigen::Index r = 0; r < small_dim; ++r)
    for (Eigen::Index c = 0; c < small_dim; ++c)
      for (int k = 0; k < d; ++k) traced(r, c) += big(r * d + k, c * d + k);

  const StandardTableau td = t.removed_last();
  const StandardTableau sd = s.removed_last();
  Eigen::MatrixXcd expected = Eigen::MatrixXcd::Zero(small_dim, small_dim);
  if (td.shape() == sd.shape()) {
    const SchurBlock& db = basis_small.block(td.shape());
    const int p = static_cast<int>(db.tableaux.size());
    Eigen::MatrixXcd ed = Eigen::MatrixXcd::Zero(p, p);
    int tdi = -1, sdi = -1;
    for (int k = 0; k < p; ++k) {
      if (db.tableaux[static_cast<size_t>(k)] == td) tdi = k;
      if (db.tableaux[static_cast<size_t>(k)] == sd) sdi = k;
    }
    ed(tdi, sdi) = static_cast<double>(dimension_q(lambda, d)) /
                   static_cast<double>(dimension_q(td.shape(), d));
    expected = embed_block_matrix(basis_small, td.shape(), ed);
  }
  return operator_norm(traced - expected);
}

}  // namespace combforge
