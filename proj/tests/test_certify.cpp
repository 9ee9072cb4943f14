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

#include <numbers>

#include <catch2/catch_amalgamated.hpp>

#include "combforge/certify.hpp"
#include "combforge/stair.hpp"

using namespace combforge;

TEST_CASE("identity-through protocol scores exactly one") {
  for (const auto& [d, n] : std::vector<std::pair<int, int>>{{2, 1}, {2, 2}, {3, 1}}) {
    const Comb r = identity_through_comb(d, n);
    CHECK(timereversal_score(r, d, n) == Catch::Approx(1.0).margin(1e-9));
  }
}

TEST_CASE("identity-through score matches the Monte-Carlo oracle") {
  // E_U |tr U|^2 = 1: score the identity protocol against the sampled moment.
  const int d = 2, n = 1;
  const Comb r = identity_through_comb(d, n);
  const LabeledOperator mc = haar_moment_mc(d, n + 1, 20000, 17);
  const LabeledOperator linked = link_product(r.op, mc);
  const UnitaryMatrix ident(Eigen::MatrixXcd::Identity(d, d));
  const LabeledOperator k = choi_of_unitary(ident, 2 * n + 2, 0).reordered({0, 2 * n + 2});
  const double score = (k.matrix() * linked.matrix()).trace().real();
  CHECK(score == Catch::Approx(1.0).margin(5e-2));
}

TEST_CASE("random comb scores respect the theorem bound") {
  const int d = 2;
  for (int n = 1; n <= 3; ++n) {
    const LabeledOperator moment = haar_moment_rep(d, n);
    for (int i = 0; i < 10; ++i) {
      const Comb r = random_comb(d, n + 1, 2, derive_seed(55, static_cast<std::uint64_t>(10 * n + i)));
      const double score = timereversal_score(r, d, n, moment);
      CHECK(score <= n + 1 + 1e-8);
      CHECK(score >= -1e-9);
    }
  }
}

TEST_CASE("score is linear under comb mixtures") {
  const int d = 2, n = 1;
  const LabeledOperator moment = haar_moment_rep(d, n);
  const Comb a = random_comb(d, n + 1, 2, 61);
  const Comb b = random_comb(d, n + 1, 2, 62);
  const double sa = timereversal_score(a, d, n, moment);
  const double sb = timereversal_score(b, d, n, moment);
  for (double p : {0.3, 0.5, 0.9}) {
    const Comb mix{LabeledOperator{a.op.labels(),
                                   p * a.op.matrix() + (1 - p) * b.op.reordered([&] {
                                                                    std::vector<int> ids;
                                                                    for (const auto& l : a.op.labels())
                                                                      ids.push_back(l.id);
                                                                    return ids;
                                                                  }()).matrix()},
                   a.teeth};
    CHECK(timereversal_score(mix, d, n, moment) ==
          Catch::Approx(p * sa + (1 - p) * sb).margin(1e-9));
  }
}

TEST_CASE("thm36 check passes on combs and fails on the scaled non-comb control") {
  const int d = 2, n = 1;
  const LabeledOperator moment = haar_moment_rep(d, n);
  for (int i = 0; i < 10; ++i) {
    const Comb r = random_comb(d, n + 1, 2, derive_seed(70, i));
    const Thm36Report report = check_thm36(r, d, n, moment);
    CHECK(report.passed(1e-8));
    CHECK(report.max_eig <= report.eig_bound + 1e-8);
  }

  Rng rng(71);
  std::vector<SystemLabel> labels;
  for (int i = 0; i <= 2 * n + 1; ++i) labels.push_back({i, d});
  const LabeledOperator fake{labels, 50.0 * random_psd(16, d * d, rng)};
  const Comb fake_comb{fake, {{0, 1}, {2, 3}}};
  CHECK_FALSE(is_comb(fake_comb).valid(1e-8));
  const double max_eig = max_eigenvalue(link_product(fake_comb.op, moment).matrix());
  CHECK(max_eig > static_cast<double>(n + 1) / d + 1e-6);
}

TEST_CASE("implied query bounds reproduce the closed forms") {
  CHECK(implied_query_bound(2, 0.0, Metric::kAverage) == 3);
  CHECK(implied_query_bound(2, 0.0, Metric::kDiamond) == 3);
  CHECK(implied_query_bound(2, 1.0, Metric::kAverage) == 0);
  CHECK(implied_query_bound(2, 1.0, Metric::kDiamond) == 0);
  CHECK(implied_query_bound(5, 0.0, Metric::kAverage) == 24);  // d(d+1) - (d+1)
  CHECK(implied_query_bound(5, 0.0, Metric::kDiamond) == 24);  // d^2 - 1
  CHECK(implied_query_bound(3, 0.5, Metric::kAverage) == 2);   // ceil(6 - 4) = 2
  CHECK_THROWS_AS(implied_query_bound(2, -0.1, Metric::kAverage), std::invalid_argument);
}

TEST_CASE("certificates satisfy the consistency chain") {
  const int d = 2;
  for (int n = 1; n <= 2; ++n) {
    const LabeledOperator moment = haar_moment_rep(d, n);
    for (int i = 0; i < 20; ++i) {
      const Comb r = random_comb(d, n + 1, 2, derive_seed(80, static_cast<std::uint64_t>(20 * n + i)));
      const Certificate cert = certify_comb(r, d, n, moment, 1e-8, "random", "");
      // Algebraic inversion: score = d^2 - d(d+1) eps-bar.
      CHECK(cert.score ==
            Catch::Approx(d * d - d * (d + 1.0) * cert.implied_avg_error).margin(1e-10));
      CHECK(cert.avg_fidelity == Catch::Approx(cert.score / (d * d)).margin(1e-12));
      // The actual query count satisfies the implied bound.
      CHECK(n >= cert.bound_average);
      CHECK(cert.pass);
    }
  }
}

TEST_CASE("dirichlet approximation") {
  const DirichletResult half = dirichlet_approx(0.5, 2);
  CHECK(half.a == 1);
  CHECK(half.b == 2);
  CHECK(half.error == 0.0);

  const DirichletResult integer = dirichlet_approx(7.0, 5);
  CHECK(integer.b == 1);
  CHECK(integer.a == 7);
  CHECK(integer.error == 0.0);

  const DirichletResult pi10 = dirichlet_approx(std::numbers::pi, 10);
  CHECK(pi10.a == 22);
  CHECK(pi10.b == 7);
  CHECK(std::abs(7 * std::numbers::pi - 22) < 0.1);

  Rng rng(90);
  for (int trial = 0; trial < 10000; ++trial) {
    const double t = (rng.uniform() - 0.5) * 200.0;
    const int big_n = 1 + static_cast<int>(rng.next_u64() % 50);
    const DirichletResult r = dirichlet_approx(t, big_n);
    CHECK(r.b >= 1);
    CHECK(r.b <= big_n);
    CHECK(r.error < 1.0 / big_n);
  }
}

TEST_CASE("generalized time-reversal budget") {
  const GeneralizedBudget unit = generalized_budget(1.0, 1e-5);
  CHECK(unit.b == 10);
  CHECK(unit.a == 10);
  CHECK(unit.composite_error ==
        Catch::Approx(10 * 1e-5 + 0.02 * std::numbers::pi));
  CHECK(unit.composite_error < 0.2);
  CHECK(unit.within_budget);

  const GeneralizedBudget small = generalized_budget(0.1, 1e-5);
  CHECK(small.a >= 1);
  CHECK(small.within_budget);

  const GeneralizedBudget pi_budget = generalized_budget(std::numbers::pi, 1e-6);
  CHECK(pi_budget.within_budget);
  CHECK(pi_budget.approx_error <= 0.01 + 1e-12);
  CHECK(pi_budget.b % 10 == 0);
  CHECK(pi_budget.extra_queries == pi_budget.a - 1);

  CHECK_THROWS_AS(generalized_budget(0.05, 1e-6), std::invalid_argument);
  CHECK_THROWS_AS(generalized_budget(1.0, 1e-3), std::invalid_argument);
}
