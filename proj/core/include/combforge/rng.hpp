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

#include <cstdint>
#include <random>

#include <Eigen/Dense>

#include "combforge/numeric.hpp"

namespace combforge {

/// One step of the splitmix64 sequence (advances the state).
std::uint64_t splitmix64(std::uint64_t& state);

/// Shard seed i of a master seed: state = master + (i+1)*golden-gamma, one
/// splitmix64 output.  Used to derive independent per-shard streams.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

/// Deterministic RNG: mt19937_64 core (seeded via splitmix64), explicit
/// 53-bit uniforms and Box-Muller gaussians so the stream is fully pinned
/// by the seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next_u64() { return gen_(); }
  /// Uniform in [0, 1) with 53 random bits.
  double uniform();
  double gaussian();
  Complex complex_gaussian();  // mean 0, E|z|^2 = 1

 private:
  std::mt19937_64 gen_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

/// Complex Ginibre matrix (iid standard complex gaussians).
Eigen::MatrixXcd ginibre(int rows, int cols, Rng& rng);

/// Haar-random unitary: Ginibre + QR with R-diagonal phase normalization.
Eigen::MatrixXcd haar_unitary(int d, Rng& rng);

/// Haar-random isometry (rows >= cols): first cols columns of a Haar frame.
Eigen::MatrixXcd haar_isometry(int rows, int cols, Rng& rng);

/// Random positive semidefinite matrix G G^dag, trace-normalized to `trace`.
Eigen::MatrixXcd random_psd(int d, double trace, Rng& rng);

/// Haar-random pure state.
Eigen::VectorXcd haar_state(int d, Rng& rng);

}  // namespace combforge
