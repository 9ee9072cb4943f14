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

#include "combforge/rng.hpp"
#include "combforge/young.hpp"

using namespace combforge;

namespace {

// Independent oracle: count standard fillings by backtracking over grid
// cells (place 1..n, each entry must exceed its left and upper neighbor).
// Deliberately not the growth-chain algorithm used by enumerate_tableaux.
long brute_force_tableau_count(const YoungDiagram& shape) {
  std::vector<std::vector<int>> grid(static_cast<size_t>(shape.row_count()));
  for (int r = 0; r < shape.row_count(); ++r)
    grid[static_cast<size_t>(r)].assign(static_cast<size_t>(shape.row(r)), 0);
  long count = 0;
  const int n = shape.box_count();
  const auto place = [&](auto&& self, int entry) -> void {
    if (entry > n) {
      ++count;
      return;
    }
    for (int r = 0; r < shape.row_count(); ++r)
      for (int c = 0; c < shape.row(r); ++c) {
        if (grid[static_cast<size_t>(r)][static_cast<size_t>(c)] != 0) continue;
        if (c > 0 && grid[static_cast<size_t>(r)][static_cast<size_t>(c - 1)] == 0) continue;
        if (r > 0 && grid[static_cast<size_t>(r - 1)][static_cast<size_t>(c)] == 0) continue;
        grid[static_cast<size_t>(r)][static_cast<size_t>(c)] = entry;
        self(self, entry + 1);
        grid[static_cast<size_t>(r)][static_cast<size_t>(c)] = 0;
      }
  };
  place(place, 1);
  return count;
}

}  // namespace

TEST_CASE("partition enumeration is reverse-lexicographic") {
  const auto p2 = enumerate_partitions(2);
  REQUIRE(p2.size() == 2);
  CHECK(p2[0] == YoungDiagram({2}));
  CHECK(p2[1] == YoungDiagram({1, 1}));

  const auto p4 = enumerate_partitions(4, 2);
  REQUIRE(p4.size() == 3);
  CHECK(p4[0] == YoungDiagram({4}));
  CHECK(p4[1] == YoungDiagram({3, 1}));
  CHECK(p4[2] == YoungDiagram({2, 2}));

  const auto p0 = enumerate_partitions(0);
  REQUIRE(p0.size() == 1);
  CHECK(p0[0].empty());

  // Known partition counts p(0..10).
  const int expected[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (int n = 0; n <= 10; ++n)
    CHECK(enumerate_partitions(n).size() == static_cast<size_t>(expected[n]));
}

TEST_CASE("hook length formula matches brute-force filling count") {
  CHECK(num_tableaux(YoungDiagram({2})) == 1);
  CHECK(num_tableaux(YoungDiagram({1, 1})) == 1);
  CHECK(num_tableaux(YoungDiagram({1, 1, 1, 1, 1})) == 1);
  CHECK(num_tableaux(YoungDiagram{}) == 1);

  for (int n = 1; n <= 7; ++n)
    for (const YoungDiagram& shape : enumerate_partitions(n))
      CHECK(num_tableaux(shape) == brute_force_tableau_count(shape));

  CHECK(num_tableaux(YoungDiagram({4, 3, 1})) ==
        brute_force_tableau_count(YoungDiagram({4, 3, 1})));
}

TEST_CASE("tableau enumeration is consistent and deterministic") {
  const auto one_col = enumerate_tableaux(YoungDiagram({1, 1}));
  REQUIRE(one_col.size() == 1);
  CHECK(one_col[0].row_of(1) == 0);
  CHECK(one_col[0].row_of(2) == 1);

  CHECK(enumerate_tableaux(YoungDiagram({2, 1})).size() == 2);
  CHECK(enumerate_tableaux(YoungDiagram({6})).size() == 1);

  for (int n = 1; n <= 8; ++n)
    for (const YoungDiagram& shape : enumerate_partitions(n)) {
      const auto tabs = enumerate_tableaux(shape);
      CHECK(Int(tabs.size()) == num_tableaux(shape));
      // Lexicographic by row sequence.
      for (size_t i = 1; i < tabs.size(); ++i)
        CHECK(tabs[i - 1].row_sequence() < tabs[i].row_sequence());
    }
}

TEST_CASE("tableau chain, removal, and append round trips") {
  const YoungDiagram shape({3, 2});
  for (const StandardTableau& t : enumerate_tableaux(shape)) {
    const auto chain = t.chain();
    REQUIRE(chain.size() == 5);
    CHECK(chain.back() == shape);
    const StandardTableau down = t.removed_last();
    CHECK(down.shape() == chain[3]);
    CHECK(down.appended(shape) == t);
  }
}

TEST_CASE("interlacing sequences") {
  const auto fig = interlacing(YoungDiagram({6, 5, 3, 3, 2, 1, 1, 1}));
  CHECK(fig.alphas == std::vector<int>{-8, -4, -2, 1, 4, 6});
  CHECK(fig.betas == std::vector<int>{-7, -3, -1, 3, 5});

  const auto empty = interlacing(YoungDiagram{});
  CHECK(empty.alphas == std::vector<int>{0});
  CHECK(empty.betas.empty());

  const auto one = interlacing(YoungDiagram({1}));
  CHECK(one.alphas == std::vector<int>{-1, 1});
  CHECK(one.betas == std::vector<int>{0});

  for (int n = 0; n <= 12; ++n)
    for (const YoungDiagram& shape : enumerate_partitions(n)) {
      const auto seq = interlacing(shape);
      REQUIRE(seq.alphas.size() == seq.betas.size() + 1);
      long sum = 0;
      for (size_t i = 0; i < seq.betas.size(); ++i) {
        CHECK(seq.alphas[i] < seq.betas[i]);
        CHECK(seq.betas[i] < seq.alphas[i + 1]);
        sum -= seq.betas[i];
      }
      for (int a : seq.alphas) sum += a;
      CHECK(sum == 0);
    }
}

TEST_CASE("kerov transition ratios equal hook-formula quotients") {
  CHECK(add_box_ratio(YoungDiagram({1}), 1) == 1);
  CHECK(add_box_ratio(YoungDiagram{}, 0) == 1);
  CHECK(remove_box_ratio(YoungDiagram({1}), 0) == 1);
  CHECK(remove_box_ratio(YoungDiagram({2}), 0) == 1);

  for (int n = 0; n <= 12; ++n)
    for (const YoungDiagram& mu : enumerate_partitions(n)) {
      const auto seq = interlacing(mu);
      for (int k = 0; k < static_cast<int>(seq.alphas.size()); ++k) {
        const YoungDiagram lambda = add_box_at(mu, k);
        CHECK(box_difference(lambda, mu).content() == seq.alphas[static_cast<size_t>(k)]);
        CHECK(add_box_ratio(mu, k) == Rational(num_tableaux(lambda), num_tableaux(mu)));
      }
      for (int k = 0; k + 1 < static_cast<int>(seq.alphas.size()); ++k) {
        const YoungDiagram smaller = remove_box_at(mu, k);
        CHECK(box_difference(mu, smaller).content() == seq.betas[static_cast<size_t>(k)]);
        CHECK(remove_box_ratio(mu, k) == Rational(num_tableaux(smaller), num_tableaux(mu)));
      }
    }

  CHECK_THROWS_AS(add_box_ratio(YoungDiagram({2, 1}), 5), std::out_of_range);
}

TEST_CASE("adjacent-pair dimension identity is exactly zero") {
  CHECK(check_hook_ratio_identity(YoungDiagram({2}), YoungDiagram({1, 1})) == 0);
  CHECK(check_hook_ratio_identity(YoungDiagram({3, 1}), YoungDiagram({2, 2})) == 0);
  CHECK_THROWS_AS(check_hook_ratio_identity(YoungDiagram({2, 1}), YoungDiagram({2, 1})),
                  std::invalid_argument);

  for (int n = 2; n <= 8; ++n) {
    const auto parts = enumerate_partitions(n);
    for (const YoungDiagram& mu : parts)
      for (const YoungDiagram& nu : parts)
        if (adjacent(mu, nu)) CHECK(check_hook_ratio_identity(mu, nu) == 0);
  }
}

TEST_CASE("two-parent zero-sum identity is exactly zero") {
  CHECK(check_zero_sum_identity(YoungDiagram({2, 1}), YoungDiagram({2}), YoungDiagram({1, 1})) ==
        0);
  CHECK(check_zero_sum_identity(YoungDiagram({3, 1}), YoungDiagram({3}), YoungDiagram({2, 1})) ==
        0);
  CHECK_THROWS_AS(
      check_zero_sum_identity(YoungDiagram({2}), YoungDiagram({1}), YoungDiagram({1})),
      std::invalid_argument);

  for (int n = 2; n <= 8; ++n)
    for (const YoungDiagram& nu : enumerate_partitions(n)) {
      const auto par = parents(nu);
      for (size_t a = 0; a < par.size(); ++a)
        for (size_t b = 0; b < par.size(); ++b)
          if (a != b) CHECK(check_zero_sum_identity(nu, par[a], par[b]) == 0);
    }
}

TEST_CASE("inverse-square sum identity is exactly zero") {
  CHECK(check_inverse_square_identity(YoungDiagram({1}), YoungDiagram{}) == 0);
  CHECK(check_inverse_square_identity(YoungDiagram({2, 1}), YoungDiagram({2})) == 0);
  CHECK(check_inverse_square_identity(YoungDiagram({2, 2}), YoungDiagram({2, 1})) == 0);

  for (int n = 1; n <= 8; ++n)
    for (const YoungDiagram& nu : enumerate_partitions(n))
      for (const YoungDiagram& tau : parents(nu))
        CHECK(check_inverse_square_identity(nu, tau) == 0);
}

TEST_CASE("lagrange-type identity on arbitrary distinct rationals") {
  CHECK(check_lagrange_identity({Rational(0), Rational(2)}, {Rational(1)}, 0) == 0);
  CHECK(check_lagrange_identity({Rational(-3), Rational(0), Rational(5)},
                                {Rational(-1), Rational(2)}, 1) == 0);
  CHECK_THROWS_AS(check_lagrange_identity({Rational(1), Rational(1)}, {Rational(0)}, 0),
                  std::invalid_argument);

  Rng rng(20260809);
  for (int trial = 0; trial < 200; ++trial) {
    const int big_l = 2 + static_cast<int>(rng.next_u64() % 5);
    std::vector<long long> used;
    const auto fresh = [&]() {
      while (true) {
        const long long v = static_cast<long long>(rng.next_u64() % 41) - 20;
        if (std::find(used.begin(), used.end(), v) == used.end()) {
          used.push_back(v);
          return v;
        }
      }
    };
    std::vector<Rational> alphas, betas;
    for (int i = 0; i < big_l; ++i) alphas.emplace_back(fresh());
    for (int i = 0; i + 1 < big_l; ++i) betas.emplace_back(fresh());
    const int m = static_cast<int>(rng.next_u64() % static_cast<std::uint64_t>(big_l - 1));
    CHECK(check_lagrange_identity(alphas, betas, m) == 0);
  }
}

TEST_CASE("symmetric group dimension identities") {
  for (int n = 0; n <= 10; ++n) {
    Int square_sum = 0;
    for (const YoungDiagram& lambda : enumerate_partitions(n)) {
      const Int dim = num_tableaux(lambda);
      square_sum += dim * dim;
      if (n >= 1) {
        Int branch = 0;
        for (const YoungDiagram& mu : parents(lambda)) branch += num_tableaux(mu);
        CHECK(branch == dim);
      }
    }
    CHECK(square_sum == factorial(n));
  }
}

TEST_CASE("unitary-group dimension polynomial") {
  for (int d = 2; d <= 6; ++d) {
    CHECK(dimension_q(YoungDiagram({2}), d) == Int(d) * (d + 1) / 2);
    CHECK(dimension_q(YoungDiagram({1, 1}), d) == Int(d) * (d - 1) / 2);
    CHECK(dimension_q(YoungDiagram({1}), d) == d);
  }
  CHECK(dimension_q(YoungDiagram({1, 1, 1}), 2) == 0);

  // Schur-Weyl dimension count: sum dimQ * dimP = d^n.
  for (int d = 2; d <= 3; ++d)
    for (int n = 1; n <= 6; ++n) {
      Int sum = 0;
      for (const YoungDiagram& lambda : enumerate_partitions(n, d))
        sum += dimension_q(lambda, d) * num_tableaux(lambda);
      Int expected = 1;
      for (int i = 0; i < n; ++i) expected *= d;
      CHECK(sum == expected);
    }
}

TEST_CASE("diagram validation rejects bad input") {
  CHECK_THROWS_AS(YoungDiagram({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(YoungDiagram({2, 0}), std::invalid_argument);
  CHECK(YoungDiagram({4, 3, 1}).conjugate() == YoungDiagram({3, 2, 2, 1}));
  for (int n = 0; n <= 8; ++n)
    for (const YoungDiagram& shape : enumerate_partitions(n))
      CHECK(shape.conjugate().conjugate() == shape);
}
