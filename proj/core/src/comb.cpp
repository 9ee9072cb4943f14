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

#include "combforge/comb.hpp"

#include <algorithm>
#include <cmath>

namespace combforge {

UnitaryMatrix::UnitaryMatrix(Eigen::MatrixXcd u) : u_(std::move(u)) {
  if (u_.rows() != u_.cols()) throw std::invalid_argument("UnitaryMatrix: must be square");
  const double res = (u_.adjoint() * u_ - Eigen::MatrixXcd::Identity(u_.rows(), u_.cols()))
                         .cwiseAbs()
                         .maxCoeff();
  if (res > 1e-12 * std::max(1.0, static_cast<double>(u_.rows())))
    throw std::invalid_argument("UnitaryMatrix: U^dag U != I (residual " + std::to_string(res) + ")");
}

UnitaryMatrix UnitaryMatrix::haar(int d, Rng& rng) { return UnitaryMatrix(haar_unitary(d, rng)); }

bool CombReport::valid(double tol) const {
  if (herm_residual > tol * 10 * psd_scale) return false;
  if (min_eig < -tol * psd_scale) return false;
  for (double r : causality_residuals)
    if (r > tol * psd_scale) return false;
  return scalar_residual <= tol * psd_scale;
}

double CombReport::worst_residual() const {
  double w = std::max({herm_residual, std::max(0.0, -min_eig), scalar_residual});
  for (double r : causality_residuals) w = std::max(w, r);
  return w;
}

LabeledOperator choi_of_unitary(const UnitaryMatrix& u, int out_id, int in_id) {
  const Eigen::VectorXcd v = vectorize(u.matrix());
  return {{{out_id, u.d()}, {in_id, u.d()}}, v * v.adjoint()};
}

Eigen::MatrixXcd apply_choi(const LabeledOperator& choi, int out_id, int in_id,
                            const Eigen::MatrixXcd& x) {
  const int din = choi.dim_of(in_id);
  const int dout = choi.dim_of(out_id);
  if (x.rows() != din || x.cols() != din)
    throw std::invalid_argument("apply_choi: state dimension mismatch");
  const LabeledOperator ix =
      LabeledOperator::kron(LabeledOperator::identity({{out_id, dout}}),
                            LabeledOperator{{{in_id, din}}, x})
          .reordered({choi.labels()[0].id, choi.labels()[1].id});
  const LabeledOperator prod{choi.labels(),
                             choi.partial_transpose({in_id}).matrix() * ix.matrix()};
  return prod.partial_trace({in_id}).matrix();
}

CombReport is_comb(const Comb& comb, double /*tol*/) {
  CombReport report;
  const PsdCheck psd = psd_check(comb.op.matrix());
  report.herm_residual = psd.herm_residual;
  report.min_eig = psd.min_eig;
  report.psd_scale = psd.scale;

  LabeledOperator cur = comb.op;
  for (auto it = comb.teeth.rbegin(); it != comb.teeth.rend(); ++it) {
    const LabeledOperator traced_out = cur.partial_trace({it->out_id});
    LabeledOperator next = traced_out.partial_trace({it->in_id});
    next.matrix() /= static_cast<double>(cur.dim_of(it->in_id));
    const LabeledOperator expected = LabeledOperator::kron(
        LabeledOperator::identity({{it->in_id, cur.dim_of(it->in_id)}}), next);
    report.causality_residuals.push_back(
        operator_norm((traced_out - expected).matrix()));
    cur = std::move(next);
  }
  report.scalar_residual = std::abs(cur.matrix()(0, 0) - Complex(1, 0));
  return report;
}

Comb random_comb(int d, int n_teeth, int ancilla_dim, std::uint64_t seed) {
  if (n_teeth < 1) throw std::invalid_argument("random_comb: need at least one tooth");
  if (ancilla_dim < 1) throw std::invalid_argument("random_comb: ancilla_dim must be >= 1");
  constexpr int kMemoryBase = 1'000'000;
  const int m = ancilla_dim;
  Rng rng(seed);

  // V_1: H_0 -> H_1 (x) M_1, then V_i: M_{i-1} (x) H_{2i-2} -> H_{2i-1} (x) M_i.
  Eigen::MatrixXcd v1 = haar_isometry(d * m, d, rng);
  Eigen::VectorXcd vec = vectorize(v1);
  LabeledOperator net{{{1, d}, {kMemoryBase + 1, m}, {0, d}}, vec * vec.adjoint()};
  for (int i = 2; i <= n_teeth; ++i) {
    const Eigen::MatrixXcd vi = haar_isometry(d * m, d * m, rng);
    const Eigen::VectorXcd vv = vectorize(vi);
    const LabeledOperator choi{{{2 * i - 1, d},
                                {kMemoryBase + i, m},
                                {kMemoryBase + i - 1, m},
                                {2 * i - 2, d}},
                               vv * vv.adjoint()};
    net = link_product(net, choi);
  }
  net = net.partial_trace({kMemoryBase + n_teeth}).canonicalized();

  Comb comb{std::move(net), {}};
  for (int i = 0; i < n_teeth; ++i) comb.teeth.push_back({2 * i, 2 * i + 1});
  return comb;
}

Comb identity_through_comb(int d, int n) {
  Eigen::MatrixXcd ident = Eigen::MatrixXcd::Identity(d, d);
  const Eigen::VectorXcd vec_i = vectorize(ident);
  LabeledOperator op{{{2 * n + 1, d}, {0, d}}, vec_i * vec_i.adjoint()};
  for (int i = 1; i <= n; ++i) {
    Eigen::MatrixXcd zero_state = Eigen::MatrixXcd::Zero(d, d);
    zero_state(0, 0) = 1.0;
    op = LabeledOperator::kron(op, LabeledOperator{{{2 * i - 1, d}}, zero_state});
    op = LabeledOperator::kron(op, LabeledOperator::identity({{2 * i, d}}));
  }
  Comb comb{op.canonicalized(), {}};
  for (int i = 0; i <= n; ++i) comb.teeth.push_back({2 * i, 2 * i + 1});
  return comb;
}

Comb c_u(const UnitaryMatrix& u, int n) {
  LabeledOperator op = choi_of_unitary(u, 2, 1);
  for (int i = 2; i <= n + 1; ++i)
    op = LabeledOperator::kron(op, choi_of_unitary(u, 2 * i, 2 * i - 1));
  Comb comb{op.canonicalized(), {}};
  for (int i = 1; i <= n + 1; ++i) comb.teeth.push_back({2 * i - 1, 2 * i});
  return comb;
}

double avg_case_distance_to_unitary(const LabeledOperator& choi, const UnitaryMatrix& u) {
  if (choi.label_count() != 2)
    throw std::invalid_argument("avg_case_distance_to_unitary: Choi must have two labels (out, in)");
  const int d = u.d();
  const LabeledOperator uu =
      choi_of_unitary(u, choi.labels()[0].id, choi.labels()[1].id);
  const double fid = (uu.matrix() * choi.matrix()).trace().real() / (d * d);
  return d / (d + 1.0) * (1.0 - fid);
}

double choi_trace_distance(const LabeledOperator& choi1, const LabeledOperator& choi2) {
  std::vector<int> order;
  for (const SystemLabel& l : choi1.labels()) order.push_back(l.id);
  const LabeledOperator aligned = choi2.reordered(order);
  const int d = choi1.labels().back().dim;
  return trace_norm(choi1.matrix() - aligned.matrix()) / d;
}

bool loewner_dominates_rank_one(const Eigen::MatrixXcd& m, const Eigen::VectorXcd& psi,
                                double tol) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(hermitized(m));
  const Eigen::VectorXd evals = es.eigenvalues();
  const double top = evals.cwiseAbs().maxCoeff();
  const double cutoff = std::max(top, 1.0) * 1e-12;

  // Pseudo-inverse quadratic form on the support; reject if psi leaks out.
  double quad = 0.0;
  double inside_sq = 0.0;
  for (Eigen::Index k = 0; k < evals.size(); ++k) {
    const Complex c = es.eigenvectors().col(k).dot(psi);
    if (evals(k) > cutoff) {
      quad += std::norm(c) / evals(k);
      inside_sq += std::norm(c);
    }
  }
  const double outside_sq = std::max(0.0, psi.squaredNorm() - inside_sq);
  if (outside_sq > tol * std::max(1.0, psi.squaredNorm())) return false;
  return quad <= 1.0 + tol;
}

}  // namespace combforge
