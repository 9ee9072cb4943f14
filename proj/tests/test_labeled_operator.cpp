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

#include <algorithm>

#include <catch2/catch_amalgamated.hpp>

#include "combforge/labeled_operator.hpp"
#include "combforge/rng.hpp"

using namespace combforge;

namespace {

LabeledOperator random_op(std::vector<SystemLabel> labels, Rng& rng) {
  Eigen::Index dim = 1;
  for (const SystemLabel& l : labels) dim *= l.dim;
  Eigen::MatrixXcd m(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r)
    for (Eigen::Index c = 0; c < dim; ++c) m(r, c) = rng.complex_gaussian();
  return {std::move(labels), std::move(m)};
}

}  // namespace

TEST_CASE("vectorize is the row-major flattening") {
  Eigen::MatrixXcd ident = Eigen::MatrixXcd::Identity(2, 2);
  const Eigen::VectorXcd v = vectorize(ident);
  CHECK(v(0) == Complex(1, 0));
  CHECK(v(1) == Complex(0, 0));
  CHECK(v(2) == Complex(0, 0));
  CHECK(v(3) == Complex(1, 0));

  Rng rng(3);
  // |psi><phi| flattens to psi (x) conj(phi).
  Eigen::VectorXcd psi(3), phi(3);
  for (int i = 0; i < 3; ++i) {
    psi(i) = rng.complex_gaussian();
    phi(i) = rng.complex_gaussian();
  }
  const Eigen::MatrixXcd ketbra = psi * phi.adjoint();
  Eigen::VectorXcd expected(9);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) expected(3 * i + j) = psi(i) * std::conj(phi(j));
  CHECK((vectorize(ketbra) - expected).cwiseAbs().maxCoeff() < 1e-14);

  // <<X|X>> = Frobenius norm squared.
  Eigen::MatrixXcd x(3, 3);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) x(r, c) = rng.complex_gaussian();
  CHECK(vectorize(x).squaredNorm() == Catch::Approx(x.squaredNorm()));

  // |XYZ>> = (X (x) Z^T)|Y>>.
  Eigen::MatrixXcd y(3, 3), z(3, 3);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) {
      y(r, c) = rng.complex_gaussian();
      z(r, c) = rng.complex_gaussian();
    }
  Eigen::MatrixXcd xz = Eigen::MatrixXcd::Zero(9, 9);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) xz.block(3 * a, 3 * b, 3, 3) = x(a, b) * z.transpose();
  CHECK((vectorize(x * y * z) - xz * vectorize(y)).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("partial trace") {
  Rng rng(5);
  const LabeledOperator a = random_op({{1, 2}}, rng);
  const LabeledOperator b = random_op({{2, 3}}, rng);
  const LabeledOperator ab = LabeledOperator::kron(a, b);

  // Tracing out the second factor of a product operator gives tr(B) * A.
  const LabeledOperator ta = ab.partial_trace({2});
  CHECK(ta.labels().size() == 1);
  CHECK(ta.labels()[0].id == 1);
  CHECK((ta.matrix() - b.trace() * a.matrix()).cwiseAbs().maxCoeff() < 1e-12);

  // Full trace equals matrix trace.
  const LabeledOperator t_all = ab.partial_trace({1, 2});
  CHECK(std::abs(t_all.matrix()(0, 0) - ab.trace()) < 1e-12);

  // Linearity.
  const LabeledOperator c = random_op({{1, 2}, {2, 3}}, rng);
  const LabeledOperator d = random_op({{1, 2}, {2, 3}}, rng);
  const LabeledOperator sum = c + d;
  CHECK(((c.partial_trace({1}) + d.partial_trace({1})) - sum.partial_trace({1}))
            .matrix()
            .cwiseAbs()
            .maxCoeff() < 1e-12);

  // tr_H(X^{T_H}) = tr_H(X).
  CHECK((c.partial_transpose({2}).partial_trace({2}) - c.partial_trace({2}))
            .matrix()
            .cwiseAbs()
            .maxCoeff() < 1e-12);
}

TEST_CASE("partial transpose") {
  Rng rng(6);
  const LabeledOperator x = random_op({{1, 2}, {2, 2}, {3, 3}}, rng);

  // Transposing all labels equals the full transpose.
  CHECK((x.partial_transpose({1, 2, 3}).matrix() - x.matrix().transpose())
            .cwiseAbs()
            .maxCoeff() < 1e-14);
  // Involution.
  CHECK((x.partial_transpose({2}).partial_transpose({2}) - x).matrix().cwiseAbs().maxCoeff() <
        1e-14);
  // Commutes on disjoint label sets.
  CHECK((x.partial_transpose({1}).partial_transpose({3}) -
         x.partial_transpose({3}).partial_transpose({1}))
            .matrix()
            .cwiseAbs()
            .maxCoeff() < 1e-14);

  // On |I>><<I| the one-sided transpose is the SWAP operator.
  Eigen::MatrixXcd ident = Eigen::MatrixXcd::Identity(2, 2);
  const Eigen::VectorXcd vec_i = vectorize(ident);
  const LabeledOperator maxent{{{10, 2}, {20, 2}}, vec_i * vec_i.adjoint()};
  Eigen::MatrixXcd swap = Eigen::MatrixXcd::Zero(4, 4);
  swap(0, 0) = swap(3, 3) = swap(1, 2) = swap(2, 1) = 1.0;
  CHECK((maxent.partial_transpose({20}).matrix() - swap).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("label reordering preserves spectrum and round-trips") {
  Rng rng(8);
  const LabeledOperator x = random_op({{1, 2}, {5, 3}, {9, 2}}, rng);
  const LabeledOperator y = x.reordered({9, 1, 5});
  CHECK(y.labels()[0].id == 9);
  CHECK(y.reordered({1, 5, 9}).matrix().isApprox(x.matrix(), 1e-13));

  const Eigen::VectorXcd ex =
      Eigen::ComplexEigenSolver<Eigen::MatrixXcd>(x.matrix()).eigenvalues();
  const Eigen::VectorXcd ey =
      Eigen::ComplexEigenSolver<Eigen::MatrixXcd>(y.matrix()).eigenvalues();
  std::vector<double> mx, my;
  for (Eigen::Index i = 0; i < ex.size(); ++i) {
    mx.push_back(std::abs(ex(i)));
    my.push_back(std::abs(ey(i)));
  }
  std::sort(mx.begin(), mx.end());
  std::sort(my.begin(), my.end());
  for (size_t i = 0; i < mx.size(); ++i) CHECK(mx[i] == Catch::Approx(my[i]).margin(1e-10));
}

TEST_CASE("link product basics") {
  Rng rng(9);
  // Disjoint labels: plain tensor product.
  const LabeledOperator a = random_op({{1, 2}}, rng);
  const LabeledOperator b = random_op({{2, 2}}, rng);
  const LabeledOperator linked = link_product(a, b);
  CHECK(linked.label_count() == 2);
  CHECK((linked - LabeledOperator::kron(a, b)).matrix().cwiseAbs().maxCoeff() < 1e-13);

  // Associativity on a nested-overlap triple.
  const LabeledOperator x = random_op({{1, 2}, {2, 2}}, rng);
  const LabeledOperator y = random_op({{2, 2}, {3, 2}}, rng);
  const LabeledOperator z = random_op({{3, 2}, {4, 2}}, rng);
  const LabeledOperator left = link_product(link_product(x, y), z);
  const LabeledOperator right = link_product(x, link_product(y, z));
  CHECK((left - right).matrix().cwiseAbs().maxCoeff() < 1e-11);

  // Commutativity up to canonical label order.
  CHECK((link_product(y, x) - link_product(x, y)).matrix().cwiseAbs().maxCoeff() < 1e-12);

  CHECK_THROWS_AS(link_product(random_op({{1, 2}}, rng), random_op({{1, 3}}, rng)),
                  std::invalid_argument);
}

TEST_CASE("budget guard refuses oversized operators") {
  const auto old = memory_budget_bytes();
  set_memory_budget_bytes(1024);
  Rng rng(10);
  const LabeledOperator a = random_op({{1, 4}, {2, 4}}, rng);
  const LabeledOperator b = random_op({{3, 4}, {4, 4}}, rng);
  CHECK_THROWS_AS(link_product(a, b), BudgetError);
  set_memory_budget_bytes(old);
}
