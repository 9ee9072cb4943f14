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

#include "combforge/rng.hpp"
#include "combforge/schurweyl.hpp"

using namespace combforge;

TEST_CASE("perm_action on tensor factors") {
  const std::vector<SystemLabel> two{{1, 2}, {2, 2}};
  CHECK(perm_action(Permutation::identity(2), two)
            .matrix()
            .isApprox(Eigen::MatrixXcd::Identity(4, 4)));

  Eigen::MatrixXcd swap = Eigen::MatrixXcd::Zero(4, 4);
  swap(0, 0) = swap(3, 3) = swap(1, 2) = swap(2, 1) = 1.0;
  CHECK(perm_action(Permutation::adjacent_transposition(2, 1), two).matrix().isApprox(swap));

  // Homomorphism on three qutrit factors.
  Rng rng(12);
  const auto group = symmetric_group(3);
  for (int trial = 0; trial < 10; ++trial) {
    const Permutation& a = group[rng.next_u64() % group.size()];
    const Permutation& b = group[rng.next_u64() % group.size()];
    CHECK((perm_action_matrix(a * b, 3) - perm_action_matrix(a, 3) * perm_action_matrix(b, 3))
              .cwiseAbs()
              .maxCoeff() < 1e-14);
  }
  CHECK_THROWS_AS(perm_action(Permutation::identity(2), {{1, 2}, {2, 3}}),
                  std::invalid_argument);
}

TEST_CASE("schur basis block structure for qubits") {
  const SchurBasis basis(2, 2);
  REQUIRE(basis.blocks().size() == 2);
  const SchurBlock& sym = basis.block(YoungDiagram({2}));
  const SchurBlock& anti = basis.block(YoungDiagram({1, 1}));
  CHECK(sym.dim_q == 3);
  CHECK(sym.tableaux.size() == 1);
  CHECK(anti.dim_q == 1);
  CHECK(anti.tableaux.size() == 1);
  // The antisymmetric vector is the singlet.
  const Eigen::VectorXcd singlet = anti.frames[0].col(0);
  Eigen::VectorXcd expected(4);
  expected << 0, 1 / std::sqrt(2), -1 / std::sqrt(2), 0;
  CHECK(std::abs(std::abs(singlet.dot(expected)) - 1.0) < 1e-12);

  const SchurBasis b23(2, 3);
  Eigen::Index total = 0;
  for (const SchurBlock& b : b23.blocks())
    total += static_cast<Eigen::Index>(b.dim_q) * static_cast<Eigen::Index>(b.tableaux.size());
  CHECK(total == 8);
  CHECK(b23.block(YoungDiagram({3})).dim_q == 4);
  CHECK(b23.block(YoungDiagram({2, 1})).dim_q == 2);

  const SchurBasis b32(3, 2);
  CHECK(b32.block(YoungDiagram({2})).dim_q == 6);
  CHECK(b32.block(YoungDiagram({1, 1})).dim_q == 3);
}

TEST_CASE("schur basis is orthonormal and equivariant") {
  for (const auto& [d, n] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}}) {
    const SchurBasis basis(d, n);
    CHECK(basis.orthonormality_residual() < 1e-10);

    // Equivariance against the canonical irrep matrices on generators.
    for (int i = 1; i < n; ++i) {
      const Eigen::MatrixXcd action =
          perm_action_matrix(Permutation::adjacent_transposition(n, i), d);
      for (const SchurBlock& block : basis.blocks()) {
        if (block.dim_q == 0) continue;
        const Eigen::MatrixXd irrep = transposition_action(block.shape, i);
        for (size_t t = 0; t < block.tableaux.size(); ++t) {
          Eigen::MatrixXcd expected = Eigen::MatrixXcd::Zero(basis.space_dim(), block.dim_q);
          for (size_t t2 = 0; t2 < block.tableaux.size(); ++t2)
            expected += irrep(static_cast<Eigen::Index>(t2), static_cast<Eigen::Index>(t)) *
                        block.frames[t2];
          CHECK((action * block.frames[t] - expected).cwiseAbs().maxCoeff() < 1e-9);
        }
      }
    }
  }
}

TEST_CASE("embed_block completeness and round trip") {
  const SchurBasis basis(2, 3);
  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(8, 8);
  for (const SchurBlock& block : basis.blocks()) {
    const int p = static_cast<int>(block.tableaux.size());
    acc += embed_block_matrix(basis, block.shape, Eigen::MatrixXcd::Identity(p, p));
  }
  CHECK((acc - Eigen::MatrixXcd::Identity(8, 8)).cwiseAbs().maxCoeff() < 1e-10);

  // Symmetric projector for lambda = (2) at d = 2.
  const SchurBasis b22(2, 2);
  const Eigen::MatrixXcd psym =
      embed_block_matrix(b22, YoungDiagram({2}), Eigen::MatrixXcd::Identity(1, 1));
  Eigen::MatrixXcd swap = Eigen::MatrixXcd::Zero(4, 4);
  swap(0, 0) = swap(3, 3) = swap(1, 2) = swap(2, 1) = 1.0;
  CHECK((psym - 0.5 * (Eigen::MatrixXcd::Identity(4, 4) + swap)).cwiseAbs().maxCoeff() < 1e-10);

  Rng rng(13);
  for (const SchurBlock& block : basis.blocks()) {
    const int p = static_cast<int>(block.tableaux.size());
    Eigen::MatrixXcd m(p, p);
    for (int r = 0; r < p; ++r)
      for (int c = 0; c < p; ++c) m(r, c) = rng.complex_gaussian();
    CHECK((project_block(basis, block.shape, embed_block_matrix(basis, block.shape, m)) - m)
              .cwiseAbs()
              .maxCoeff() < 1e-10);
  }
}

TEST_CASE("embedded blocks commute with tensor-power unitaries") {
  Rng rng(14);
  for (const auto& [d, n] : std::vector<std::pair<int, int>>{{2, 3}, {3, 2}}) {
    const SchurBasis basis(d, n);
    for (int trial = 0; trial < 5; ++trial) {
      const Eigen::MatrixXcd u = haar_unitary(d, rng);
      Eigen::MatrixXcd un = u;
      for (int i = 1; i < n; ++i) {
        Eigen::MatrixXcd next(un.rows() * d, un.cols() * d);
        for (Eigen::Index r = 0; r < un.rows(); ++r)
          for (Eigen::Index c = 0; c < un.cols(); ++c)
            next.block(r * d, c * d, d, d) = un(r, c) * u;
        un = next;
      }
      for (const SchurBlock& block : basis.blocks()) {
        if (block.dim_q == 0) continue;
        const int p = static_cast<int>(block.tableaux.size());
        const Eigen::MatrixXcd op =
            embed_block_matrix(basis, block.shape, Eigen::MatrixXcd::Identity(p, p));
        CHECK(operator_norm(op * un - un * op) < 1e-8);
      }
    }
  }
}

TEST_CASE("raising identity at the trivial base case") {
  // d=2, mu=(1): I_4 equals P_sym + P_antisym.
  const SchurBasis small(2, 1);
  const SchurBasis large(2, 2);
  const auto tabs = small.block(YoungDiagram({1})).tableaux;
  CHECK(verify_raising(small, large, YoungDiagram({1}), tabs[0], tabs[0]) < 1e-12);
}

TEST_CASE("raising and lowering identities across the ladder") {
  for (const auto& [d, n_max] : std::vector<std::pair<int, int>>{{2, 4}, {3, 3}}) {
    for (int n = 2; n <= n_max; ++n) {
      const SchurBasis small(d, n - 1);
      const SchurBasis large(d, n);
      for (const SchurBlock& block : small.blocks()) {
        if (block.dim_q == 0) continue;
        for (const StandardTableau& t : block.tableaux)
          for (const StandardTableau& s : block.tableaux)
            CHECK(verify_raising(small, large, block.shape, t, s) < 1e-8);
      }
      for (const SchurBlock& block : large.blocks()) {
        if (block.dim_q == 0) continue;
        for (const StandardTableau& t : block.tableaux)
          for (const StandardTableau& s : block.tableaux)
            CHECK(verify_lowering(small, large, block.shape, t, s) < 1e-8);
      }
    }
  }
}

TEST_CASE("lowering reproduces the known partial traces of qubit projectors") {
  const SchurBasis small(2, 1);
  const SchurBasis large(2, 2);

  // tr_2 P_sym = (d+1)/2 I, tr_2 P_antisym = (d-1)/2 I; both via the
  // dimension-ratio form of the lowering identity.
  const auto sym_tabs = large.block(YoungDiagram({2})).tableaux;
  CHECK(verify_lowering(small, large, YoungDiagram({2}), sym_tabs[0], sym_tabs[0]) < 1e-10);
  const Eigen::MatrixXcd psym =
      embed_block_matrix(large, YoungDiagram({2}), Eigen::MatrixXcd::Identity(1, 1));
  Eigen::MatrixXcd traced = Eigen::MatrixXcd::Zero(2, 2);
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c)
      for (int k = 0; k < 2; ++k) traced(r, c) += psym(2 * r + k, 2 * c + k);
  CHECK((traced - 1.5 * Eigen::MatrixXcd::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-10);

  // Different shapes of T-down give a vanishing partial trace: check through
  // a (2,1) pair at d = 2.
  const SchurBasis mid(2, 2);
  const SchurBasis big(2, 3);
  const auto& mixed = big.block(YoungDiagram({2, 1}));
  bool found_zero_case = false;
  for (const StandardTableau& t : mixed.tableaux)
    for (const StandardTableau& s : mixed.tableaux)
      if (!(t.removed_last().shape() == s.removed_last().shape())) {
        found_zero_case = true;
        CHECK(verify_lowering(mid, big, YoungDiagram({2, 1}), t, s) < 1e-10);
      }
  CHECK(found_zero_case);
}
