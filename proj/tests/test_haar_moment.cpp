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

#include <catch2/catch_amalgamated.hpp>

#include "combforge/haar_moment.hpp"
#include "combforge/rng.hpp"

using namespace combforge;

TEST_CASE("weingarten values at small order") {
  // k = 1: Wg(e) = 1/d.
  for (int d = 2; d <= 5; ++d)
    CHECK(weingarten(YoungDiagram({1}), d) == Catch::Approx(1.0 / d));

  // k = 2: solving the 2x2 Gram system [d^2 d; d d^2] Wg = (1, 0) gives
  // Wg(e) = 1/(d^2-1) and Wg(swap) = -1/(d(d^2-1)).
  for (int d = 2; d <= 4; ++d) {
    CHECK(weingarten(YoungDiagram({1, 1}), d) == Catch::Approx(1.0 / (d * d - 1.0)));
    CHECK(weingarten(YoungDiagram({2}), d) == Catch::Approx(-1.0 / (d * (d * d - 1.0))));
  }

  // Gram identity: sum_tau Wg(sigma tau^-1) d^{cycles(tau)} = [sigma = e].
  for (int k = 2; k <= 4; ++k)
    for (int d = k; d <= k + 1; ++d) {
      const WeingartenTable table = WeingartenTable::build(k, d);
      const auto group = symmetric_group(k);
      for (const Permutation& sigma : group) {
        double sum = 0;
        for (const Permutation& tau : group) {
          double dpow = 1;
          for (int i = 0; i < tau.cycle_type().row_count(); ++i) dpow *= d;
          sum += table(sigma * tau.inverse()) * dpow;
        }
        CHECK(sum == Catch::Approx(sigma.is_identity() ? 1.0 : 0.0).margin(1e-9));
      }
    }
}

TEST_CASE("moment constructions agree for k = 1") {
  for (int d = 2; d <= 3; ++d) {
    const LabeledOperator rep = haar_moment_rep(d, 0);
    CHECK(rep.label_count() == 2);
    CHECK((rep.matrix() - Eigen::MatrixXcd::Identity(d * d, d * d) / d)
              .cwiseAbs()
              .maxCoeff() < 1e-12);
    const LabeledOperator wg = haar_moment_weingarten(d, 1);
    CHECK(operator_norm((rep - wg).matrix()) < 1e-12);
  }
}

TEST_CASE("rep and weingarten constructions agree") {
  for (const auto& [d, k] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}}) {
    const LabeledOperator rep = haar_moment_rep(d, k - 1);
    const LabeledOperator wg = haar_moment_weingarten(d, k);
    CHECK(operator_norm((rep - wg).matrix()) < 1e-9);
  }
}

TEST_CASE("moment is PSD with unit partial trace and trace d^k") {
  for (const auto& [d, k] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}}) {
    const LabeledOperator rep = haar_moment_rep(d, k - 1);
    CHECK(psd_check(rep.matrix()).passed(1e-10));
    double expected = 1;
    for (int i = 0; i < k; ++i) expected *= d;
    CHECK(rep.trace().real() == Catch::Approx(expected));
    std::vector<int> evens;
    for (int i = 1; i <= k; ++i) evens.push_back(2 * i);
    const LabeledOperator traced = rep.partial_trace(evens);
    CHECK((traced.matrix() - Eigen::MatrixXcd::Identity(traced.dim(), traced.dim()))
              .cwiseAbs()
              .maxCoeff() < 1e-10);
  }
}

TEST_CASE("monte carlo estimate converges to the exact moment") {
  const LabeledOperator exact = haar_moment_rep(2, 0);
  const LabeledOperator mc = haar_moment_mc(2, 1, 20000, 5);
  CHECK(operator_norm((exact - mc).matrix()) < 3e-2);
  CHECK(hermitian_residual(mc.matrix()) < 1e-12);

  // Error shrinks with sample count (seeded, CLT scale).
  const LabeledOperator exact2 = haar_moment_rep(2, 1);
  const double err_small = operator_norm((exact2 - haar_moment_mc(2, 2, 2000, 5)).matrix());
  const double err_large = operator_norm((exact2 - haar_moment_mc(2, 2, 32000, 5)).matrix());
  CHECK(err_large < err_small);

  // Thread count does not change the result.
  const LabeledOperator seq = haar_moment_mc(2, 2, 5000, 11, 1);
  const LabeledOperator par = haar_moment_mc(2, 2, 5000, 11, 4);
  CHECK((seq - par).matrix().cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("moment commutes with bi-unitary and simultaneous permutations") {
  Rng rng(31);
  const int d = 2, k = 2;
  const LabeledOperator rep = haar_moment_rep(d, k - 1);

  for (int trial = 0; trial < 5; ++trial) {
    const Eigen::MatrixXcd v = haar_unitary(d, rng);
    const Eigen::MatrixXcd w = haar_unitary(d, rng);
    Eigen::MatrixXcd vw(d * d, d * d);
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b) vw.block(a * d, b * d, d, d) = v(a, b) * w;
    LabeledOperator factor{{{2, d}, {1, d}}, vw};
    LabeledOperator full = LabeledOperator::kron(factor, LabeledOperator{{{4, d}, {3, d}}, vw})
                               .canonicalized();
    CHECK(operator_norm(full.matrix() * rep.matrix() - rep.matrix() * full.matrix()) < 1e-8);
  }

  std::vector<SystemLabel> evens{{2, d}, {4, d}};
  std::vector<SystemLabel> odds{{1, d}, {3, d}};
  for (const Permutation& pi : symmetric_group(k)) {
    const LabeledOperator action =
        LabeledOperator::kron(perm_action(pi, evens), perm_action(pi, odds)).canonicalized();
    CHECK(operator_norm(action.matrix() * rep.matrix() * action.matrix().adjoint() -
                        rep.matrix()) < 1e-8);
  }
}
