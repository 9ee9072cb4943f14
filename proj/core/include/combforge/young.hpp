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

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace combforge {

// Exact integer/rational types used throughout the combinatorial layer.
// All identity checks in this header are evaluated without floating point.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// A box of a Young diagram in matrix coordinates (0-based row/column).
///
/// The content (axial coordinate) of a box is col - row.  Example for the
/// diagram (6,5,3,3,2,1,1,1): the box at row 0, col 5 has content 5 and the
/// box at row 4, col 1 has content -3, matching the rotated-diagram x-axis.
struct Box {
  int row = 0;
  int col = 0;
  constexpr int content() const { return col - row; }
  friend bool operator==(const Box&, const Box&) = default;
};

/// Integer partition (weakly decreasing positive parts).  The empty
/// partition is a first-class value with one standard tableau.
class YoungDiagram {
 public:
  YoungDiagram() = default;
  explicit YoungDiagram(std::vector<int> rows);

  int box_count() const { return n_; }
  int row_count() const { return static_cast<int>(rows_.size()); }
  bool empty() const { return rows_.empty(); }
  /// Row length; rows at or below row_count() have length 0.
  int row(int r) const {
    return (r >= 0 && r < row_count()) ? rows_[static_cast<size_t>(r)] : 0;
  }
  const std::vector<int>& rows() const { return rows_; }

  YoungDiagram conjugate() const;
  int column(int c) const;  // length of column c (conjugate row)

  bool contains_box(int r, int c) const { return c >= 0 && c < row(r); }
  /// Hook length of the box at (r,c): arm + leg + 1.
  int hook(int r, int c) const;
  std::vector<Box> boxes() const;

  /// True if a box can be appended at (r, row(r)) keeping a valid diagram.
  bool addable(int r) const;
  /// True if the last box of row r can be removed keeping a valid diagram.
  bool removable(int r) const;

  YoungDiagram with_box_added(int r) const;
  YoungDiagram with_box_removed(int r) const;

  std::string to_string() const;  // e.g. "(4,3,1)"

  friend bool operator==(const YoungDiagram&, const YoungDiagram&) = default;
  // Ordering for use as a map key; not the enumeration order.
  friend auto operator<=>(const YoungDiagram& a, const YoungDiagram& b) {
    return a.rows_ <=> b.rows_;
  }

 private:
  std::vector<int> rows_;
  int n_ = 0;
};

/// Standard Young tableau, stored as the row index of each entry 1..n.
/// Equivalent to the growth chain lambda^(1) -> ... -> lambda^(n).
class StandardTableau {
 public:
  StandardTableau() = default;
  StandardTableau(YoungDiagram shape, std::vector<int> row_of_entry);

  const YoungDiagram& shape() const { return shape_; }
  int size() const { return shape_.box_count(); }
  /// Box containing entry i (1-based).
  Box box_of(int i) const;
  int row_of(int i) const { return row_of_[static_cast<size_t>(i - 1)]; }
  const std::vector<int>& row_sequence() const { return row_of_; }

  /// Growth chain lambda^(1), ..., lambda^(n) (n entries).
  std::vector<YoungDiagram> chain() const;

  /// Tableau with the largest entry removed (T-down).
  StandardTableau removed_last() const;
  /// Tableau with entry n+1 appended to reach shape lambda (T-up-lambda).
  StandardTableau appended(const YoungDiagram& lambda) const;

  std::string to_string() const;

  friend bool operator==(const StandardTableau&, const StandardTableau&) = default;

 private:
  YoungDiagram shape_;
  std::vector<int> row_of_;  // row_of_[i-1] = 0-based row of entry i
};

/// Kerov interlacing sequences: contents of addable positions (alphas) and
/// removable boxes (betas), strictly interlacing a1 < b1 < a2 < ... < aL.
struct InterlacingSequences {
  std::vector<int> alphas;
  std::vector<int> betas;
};

Int factorial(int n);

/// All partitions of n with at most max_rows rows (max_rows < 0: unbounded),
/// in reverse-lexicographic order: (n) first, (1^n) last.
std::vector<YoungDiagram> enumerate_partitions(int n, int max_rows = -1);

/// |Tab(lambda)| by the hook length formula, exact.
Int num_tableaux(const YoungDiagram& lambda);

/// All standard tableaux of the given shape, ordered lexicographically by
/// growth chain (equivalently by the row sequence of entries 1..n).
std::vector<StandardTableau> enumerate_tableaux(const YoungDiagram& lambda);

InterlacingSequences interlacing(const YoungDiagram& lambda);

/// Diagrams obtained by adding one box, listed by ascending content of the
/// added box (the alpha order).  parents() removes one box, beta order.
std::vector<YoungDiagram> children(const YoungDiagram& lambda);
std::vector<YoungDiagram> parents(const YoungDiagram& lambda);

/// Diagram obtained by adding a box at the addable position alphas[k].
YoungDiagram add_box_at(const YoungDiagram& mu, int alpha_index);
/// Diagram obtained by removing the box at the removable position betas[k].
YoungDiagram remove_box_at(const YoungDiagram& lambda, int beta_index);

/// The single box of a \ b where b is obtained from a by removing one box.
Box box_difference(const YoungDiagram& larger, const YoungDiagram& smaller);

/// Rowwise max/min of two partitions of the same n (union/intersection of
/// box sets).  Throws unless the result is what adjacency requires.
YoungDiagram diagram_union(const YoungDiagram& a, const YoungDiagram& b);
YoungDiagram diagram_intersection(const YoungDiagram& a, const YoungDiagram& b);
/// mu, nu distinct partitions of n differing by moving one box.
bool adjacent(const YoungDiagram& mu, const YoungDiagram& nu);

/// Kerov transition ratio |Tab(lambda)|/|Tab(mu)| for lambda = mu plus a box
/// at alphas[k], via the interlacing product formula (not the hook formula).
Rational add_box_ratio(const YoungDiagram& mu, int alpha_index);
/// Kerov ratio |Tab(mu)|/|Tab(lambda)| for mu = lambda minus the box at
/// betas[k].
Rational remove_box_ratio(const YoungDiagram& lambda, int beta_index);

/// Residual of the adjacent-pair dimension identity
///   dimP_mu dimP_nu / (dimP_{mu v nu} dimP_{mu ^ nu})
///     = n/(n+1) * (1 - 1/(c(mu\nu)-c(nu\mu))^2).
/// Exact; must be zero for every adjacent pair.
Rational check_hook_ratio_identity(const YoungDiagram& mu, const YoungDiagram& nu);

/// Residual of the two-parent zero sum
///   sum_{lambda: nu->lambda} (dimP_lambda/dimP_nu)
///     / ((c(lambda\nu)-c(nu\tau)) (c(lambda\nu)-c(nu\kappa))) = 0
/// for distinct parents tau, kappa of nu.
Rational check_zero_sum_identity(const YoungDiagram& nu, const YoungDiagram& tau,
                                 const YoungDiagram& kappa);

/// Residual of the inverse-square sum
///   sum_{lambda: nu->lambda} (dimP_lambda/dimP_nu) / (c(lambda\nu)-c(nu\tau))^2
///     = (n+1)/n * dimP_nu/dimP_tau.
Rational check_inverse_square_identity(const YoungDiagram& nu, const YoungDiagram& tau);

/// Residual of the Lagrange-type sum
///   sum_i 1/(a_i - b_m) prod_{j<i} (a_i-b_j)/(a_i-a_j)
///                        prod_{j>i} (a_i-b_{j-1})/(a_i-a_j) = 0
/// for arbitrary pairwise distinct rationals (not only interlacing data).
/// m is a 0-based index into betas.
Rational check_lagrange_identity(const std::vector<Rational>& alphas,
                                 const std::vector<Rational>& betas, int m);

/// Dimension of the U(d) irrep labelled by lambda:
///   prod_boxes (d + content) / hook; zero when row_count > d.
Int dimension_q(const YoungDiagram& lambda, int d);

}  // namespace combforge
