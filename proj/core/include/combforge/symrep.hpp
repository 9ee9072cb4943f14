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

#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "combforge/young.hpp"

namespace combforge {

/// Permutation of {1,...,n}, stored as the image list pi(1),...,pi(n).
class Permutation {
 public:
  Permutation() = default;
  static Permutation identity(int n);
  /// images[i-1] = pi(i), 1-based values.
  explicit Permutation(std::vector<int> images);
  /// Adjacent transposition s_i in S_n (swaps i and i+1).
  static Permutation adjacent_transposition(int n, int i);
  /// Permutation from disjoint-cycle input, e.g. {{1,2,3}} in S_n.
  static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<size_t>(i - 1)]; }
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const;
  /// Composition acting as functions: (a*b)(x) = a(b(x)).
  friend Permutation operator*(const Permutation& a, const Permutation& b);

  /// Indices i such that pi = s_{i_1} * s_{i_2} * ... * s_{i_m}
  /// (left-to-right multiplication order).  Bubble-sort decomposition.
  std::vector<int> adjacent_factorization() const;

  /// Cycle type as a partition of n.
  YoungDiagram cycle_type() const;
  int sign() const;
  bool is_identity() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// All n! permutations of S_n in lexicographic image order.
std::vector<Permutation> symmetric_group(int n);

/// Axial distance r(T) = content(box of i+1) - content(box of i); never zero
/// in a standard tableau.
int axial_distance(const StandardTableau& t, int i);

/// Entry i and i+1 swapped; the result may fail to be standard.
StandardTableau swap_entries(const StandardTableau& t, int i);
bool swap_is_standard(const StandardTableau& t, int i);

/// Young's orthogonal form for the adjacent transposition s_i on the irrep
/// P_lambda: diagonal 1/r(T), off-diagonal sqrt(1-1/r(T)^2) between T and
/// s_i T whenever s_i T is standard.  Indexed by the canonical tableau
/// order of enumerate_tableaux.  Results are memoised; concurrent readers
/// are safe.
Eigen::MatrixXd transposition_action(const YoungDiagram& lambda, int i);

/// P_lambda(pi) as the product of transposition actions along an adjacent
/// factorization of pi.  Independent of the factorization choice.
Eigen::MatrixXd irrep_matrix(const YoungDiagram& lambda, const Permutation& pi);

/// Character chi_lambda(pi) = tr P_lambda(pi).
double character(const YoungDiagram& lambda, const Permutation& pi);

/// chi_lambda evaluated on the conjugacy class with the given cycle type.
double character_of_class(const YoungDiagram& lambda, const YoungDiagram& cycle_type);

/// Isotypic projector e_lambda = (dimP_lambda/k!) sum_pi chi_lambda(pi) rep(pi)
/// for lambda a partition of k, evaluated in an arbitrary unitary
/// representation of S_k supplied as pi -> matrix.
Eigen::MatrixXcd isotypic_projector(
    const YoungDiagram& lambda,
    const std::function<Eigen::MatrixXcd(const Permutation&)>& rep);

}  // namespace combforge
