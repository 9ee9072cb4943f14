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

#include <vector>

#include <Eigen/Dense>

#include "combforge/numeric.hpp"

namespace combforge {

/// Named tensor factor: a register H_id of the given dimension.
struct SystemLabel {
  int id = 0;
  int dim = 0;
  friend bool operator==(const SystemLabel&, const SystemLabel&) = default;
};

/// Dense operator over an ordered list of labeled registers.
///
/// Kron convention: the first label is the most significant index digit, so
/// matrix(r, c) addresses basis states |r_1 r_2 ...><c_1 c_2 ...| with r_1
/// the digit of labels()[0].  Reordering labels conjugates by an index
/// permutation and preserves the spectrum.
class LabeledOperator {
 public:
  LabeledOperator() : mat_(Eigen::MatrixXcd::Ones(1, 1)) {}
  LabeledOperator(std::vector<SystemLabel> labels, Eigen::MatrixXcd mat);

  static LabeledOperator identity(std::vector<SystemLabel> labels);
  /// Tensor product; label lists are concatenated (ids must stay distinct).
  static LabeledOperator kron(const LabeledOperator& a, const LabeledOperator& b);

  const std::vector<SystemLabel>& labels() const { return labels_; }
  const Eigen::MatrixXcd& matrix() const { return mat_; }
  Eigen::MatrixXcd& matrix() { return mat_; }
  Eigen::Index dim() const { return mat_.rows(); }
  int label_count() const { return static_cast<int>(labels_.size()); }

  bool has_label(int id) const;
  int label_pos(int id) const;  // throws if absent
  int dim_of(int id) const { return labels_[static_cast<size_t>(label_pos(id))].dim; }

  /// Same operator with tensor factors rearranged into the given id order
  /// (a permutation of the current ids).
  LabeledOperator reordered(const std::vector<int>& id_order) const;
  /// Labels sorted ascending by id.
  LabeledOperator canonicalized() const;
  /// Appends identity factors for the given labels.
  LabeledOperator tensored_with_identity(const std::vector<SystemLabel>& extra) const;

  LabeledOperator partial_trace(const std::vector<int>& ids) const;
  LabeledOperator partial_transpose(const std::vector<int>& ids) const;
  /// Full trace.
  Complex trace() const { return mat_.trace(); }

  LabeledOperator scaled(Complex factor) const { return {labels_, factor * mat_}; }
  friend LabeledOperator operator+(const LabeledOperator& a, const LabeledOperator& b);
  friend LabeledOperator operator-(const LabeledOperator& a, const LabeledOperator& b);

 private:
  std::vector<SystemLabel> labels_;
  Eigen::MatrixXcd mat_;
};

/// Row-major flattening |X>> of a matrix; <<X|Y>> = tr(X^dag Y).
Eigen::VectorXcd vectorize(const Eigen::MatrixXcd& x);

/// tr_{shared}(X^{T_shared} Y), both factors extended by identity to the
/// label union; the result carries the symmetric difference of the labels
/// in ascending id order.
LabeledOperator link_product(const LabeledOperator& x, const LabeledOperator& y);

}  // namespace combforge
