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

#include "combforge/numeric.hpp"

#include <atomic>

namespace combforge {

namespace {
std::atomic<std::uint64_t> g_budget_bytes{2ull << 30};
}

std::uint64_t memory_budget_bytes() { return g_budget_bytes.load(); }

void set_memory_budget_bytes(std::uint64_t bytes) { g_budget_bytes.store(bytes); }

void check_budget(std::uint64_t dim, const std::string& what) {
  // Headroom factor 4: operand, workspace, eigen/svd scratch.
  const std::uint64_t need = 4u * dim * dim * sizeof(Complex);
  if (need > memory_budget_bytes())
    throw BudgetError(what + ": dense dimension " + std::to_string(dim) + " needs ~" +
                      std::to_string(need) + " bytes, budget is " +
                      std::to_string(memory_budget_bytes()));
}

double operator_norm(const Eigen::MatrixXcd& m) {
  if (m.size() == 0) return 0.0;
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(m);
  return svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
}

double trace_norm(const Eigen::MatrixXcd& m) {
  if (m.size() == 0) return 0.0;
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(m);
  return svd.singularValues().sum();
}

double hermitian_residual(const Eigen::MatrixXcd& m) {
  return (m - m.adjoint()).norm();
}

Eigen::MatrixXcd hermitized(const Eigen::MatrixXcd& m) { return 0.5 * (m + m.adjoint()); }

double min_eigenvalue(const Eigen::MatrixXcd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(hermitized(m), Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

double max_eigenvalue(const Eigen::MatrixXcd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(hermitized(m), Eigen::EigenvaluesOnly);
  return es.eigenvalues().maxCoeff();
}

PsdCheck psd_check(const Eigen::MatrixXcd& m) {
  PsdCheck out;
  out.herm_residual = hermitian_residual(m);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(hermitized(m), Eigen::EigenvaluesOnly);
  out.min_eig = es.eigenvalues().minCoeff();
  out.scale = 1.0 + std::max(std::abs(es.eigenvalues().minCoeff()),
                             std::abs(es.eigenvalues().maxCoeff()));
  return out;
}

}  // namespace combforge
