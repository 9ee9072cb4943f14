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

#include "combforge/haar_moment.hpp"

#include <atomic>
#include <thread>

#include "combforge/comb.hpp"

namespace combforge {

namespace {

Eigen::MatrixXcd kron_matrix(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

std::vector<SystemLabel> even_labels(int k, int d) {
  std::vector<SystemLabel> out;
  for (int i = 1; i <= k; ++i) out.push_back({2 * i, d});
  return out;
}

std::vector<SystemLabel> odd_labels(int k, int d) {
  std::vector<SystemLabel> out;
  for (int i = 1; i <= k; ++i) out.push_back({2 * i - 1, d});
  return out;
}

}  // namespace

WeingartenTable WeingartenTable::build(int k, int d) {
  WeingartenTable table;
  table.k = k;
  table.d = d;
  const double kfact = static_cast<double>(factorial(k));
  for (const YoungDiagram& cls : enumerate_partitions(k)) {
    double wg = 0.0;
    for (const YoungDiagram& lambda : enumerate_partitions(k, d)) {
      const Int dq = dimension_q(lambda, d);
      if (dq == 0) continue;
      const double dim_p = static_cast<double>(num_tableaux(lambda));
      wg += dim_p * dim_p * character_of_class(lambda, cls) / static_cast<double>(dq);
    }
    table.values[cls] = wg / (kfact * kfact);
  }
  return table;
}

double WeingartenTable::operator()(const YoungDiagram& cycle_type) const {
  const auto it = values.find(cycle_type);
  if (it == values.end())
    throw std::invalid_argument("WeingartenTable: not a cycle type of S_" + std::to_string(k));
  return it->second;
}

double weingarten(const YoungDiagram& sigma_class, int d) {
  return WeingartenTable::build(sigma_class.box_count(), d)(sigma_class);
}

LabeledOperator haar_moment_rep(int d, int n, const SchurBasis& basis) {
  const int k = n + 1;
  if (basis.d() != d || basis.n() != k)
    throw std::invalid_argument("haar_moment_rep: basis must be on n+1 factors of dim d");
  const Eigen::Index reg = basis.space_dim();
  check_budget(static_cast<std::uint64_t>(reg) * static_cast<std::uint64_t>(reg),
               "haar_moment_rep");

  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(reg * reg, reg * reg);
  for (const SchurBlock& block : basis.blocks()) {
    if (block.dim_q == 0) continue;
    const Eigen::Index q = block.dim_q;
    Eigen::MatrixXcd z = Eigen::MatrixXcd::Zero(reg * reg, q * q);
    for (const Eigen::MatrixXcd& frame : block.frames) z += kron_matrix(frame, frame);
    m += (1.0 / static_cast<double>(q)) * (z * z.adjoint());
  }

  std::vector<SystemLabel> labels = even_labels(k, d);
  const std::vector<SystemLabel> odds = odd_labels(k, d);
  labels.insert(labels.end(), odds.begin(), odds.end());
  return LabeledOperator{std::move(labels), std::move(m)}.canonicalized();
}

LabeledOperator haar_moment_rep(int d, int n) {
  const SchurBasis basis(d, n + 1);
  return haar_moment_rep(d, n, basis);
}

LabeledOperator haar_moment_weingarten(int d, int k) {
  if (k > 4) throw std::invalid_argument("haar_moment_weingarten: k > 4 not supported");
  Eigen::Index reg = 1;
  for (int i = 0; i < k; ++i) reg *= d;
  check_budget(static_cast<std::uint64_t>(reg) * static_cast<std::uint64_t>(reg),
               "haar_moment_weingarten");
  const WeingartenTable table = WeingartenTable::build(k, d);

  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(reg * reg, reg * reg);
  const auto group = symmetric_group(k);
  for (const Permutation& sigma : group) {
    const Eigen::MatrixXcd pe = perm_action_matrix(sigma.inverse(), d);
    for (const Permutation& tau : group) {
      const double wg = table(sigma * tau.inverse());
      if (wg == 0.0) continue;
      m += wg * kron_matrix(pe, perm_action_matrix(tau.inverse(), d));
    }
  }

  std::vector<SystemLabel> labels = even_labels(k, d);
  const std::vector<SystemLabel> odds = odd_labels(k, d);
  labels.insert(labels.end(), odds.begin(), odds.end());
  return LabeledOperator{std::move(labels), std::move(m)}.canonicalized();
}

LabeledOperator haar_moment_mc(int d, int k, std::uint64_t samples, std::uint64_t seed,
                               int threads) {
  if (samples < 1) throw std::invalid_argument("haar_moment_mc: need samples >= 1");
  Eigen::Index dim = 1;
  for (int i = 0; i < 2 * k; ++i) dim *= d;
  check_budget(static_cast<std::uint64_t>(dim), "haar_moment_mc");

  constexpr std::uint64_t kShard = 1024;
  const std::uint64_t n_shards = (samples + kShard - 1) / kShard;
  std::vector<Eigen::MatrixXcd> shard_sums(
      n_shards, Eigen::MatrixXcd::Zero(dim, dim));

  const auto run_shard = [&](std::uint64_t shard) {
    const std::uint64_t begin = shard * kShard;
    const std::uint64_t end = std::min(samples, begin + kShard);
    Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(dim, dim);
    for (std::uint64_t s = begin; s < end; ++s) {
      Rng rng(derive_seed(seed, s));
      const Eigen::MatrixXcd u = haar_unitary(d, rng);
      const Eigen::VectorXcd v = vectorize(u);
      Eigen::VectorXcd big = v;
      for (int i = 1; i < k; ++i) {
        Eigen::VectorXcd next(big.size() * v.size());
        for (Eigen::Index a = 0; a < big.size(); ++a)
          next.segment(a * v.size(), v.size()) = big(a) * v;
        big = std::move(next);
      }
      acc.noalias() += big * big.adjoint();
    }
    shard_sums[shard] = std::move(acc);
  };

  if (threads <= 1 || n_shards <= 1) {
    for (std::uint64_t s = 0; s < n_shards; ++s) run_shard(s);
  } else {
    std::vector<std::thread> pool;
    std::atomic<std::uint64_t> next{0};
    const int nt = std::min<std::uint64_t>(threads, n_shards);
    for (int t = 0; t < nt; ++t)
      pool.emplace_back([&] {
        for (std::uint64_t s = next.fetch_add(1); s < n_shards; s = next.fetch_add(1))
          run_shard(s);
      });
    for (auto& th : pool) th.join();
  }

  // Merge in shard-index order: result independent of thread scheduling.
  Eigen::MatrixXcd total = Eigen::MatrixXcd::Zero(dim, dim);
  for (const Eigen::MatrixXcd& s : shard_sums) total += s;
  total /= static_cast<double>(samples);

  // Per-tooth kron order is (out_i, in_i); relabel and sort ascending.
  std::vector<SystemLabel> labels;
  for (int i = 1; i <= k; ++i) {
    labels.push_back({2 * i, d});
    labels.push_back({2 * i - 1, d});
  }
  return LabeledOperator{std::move(labels), std::move(total)}.canonicalized();
}

}  // namespace combforge
