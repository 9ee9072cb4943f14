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

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace combforge {

using Complex = std::complex<double>;

struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Global memory budget for dense-operator construction (default 2 GiB).
std::uint64_t memory_budget_bytes();
void set_memory_budget_bytes(std::uint64_t bytes);
/// Throws BudgetError if a dense complex matrix of the given dimension
/// (plus workspace headroom) would exceed the budget.
void check_budget(std::uint64_t dim, const std::string& what);

/// Largest singular value.
double operator_norm(const Eigen::MatrixXcd& m);
/// Schatten-1 norm via full SVD.
double trace_norm(const Eigen::MatrixXcd& m);
double hermitian_residual(const Eigen::MatrixXcd& m);
Eigen::MatrixXcd hermitized(const Eigen::MatrixXcd& m);

/// Extremal eigenvalues of a (nearly) Hermitian matrix; the input is
/// symmetrised first.
double min_eigenvalue(const Eigen::MatrixXcd& m);
double max_eigenvalue(const Eigen::MatrixXcd& m);

struct PsdCheck {
  double min_eig = 0.0;
  double scale = 0.0;          // 1 + operator norm
  double herm_residual = 0.0;
  bool passed(double tol) const { return min_eig >= -tol * scale; }
};
/// Hermiticity residual plus minimum eigenvalue against tol*(1 + ||m||).
PsdCheck psd_check(const Eigen::MatrixXcd& m);

}  // namespace combforge
