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

#include "combforge/labeled_operator.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace combforge {

namespace {

Eigen::Index product_dim(const std::vector<SystemLabel>& labels) {
  Eigen::Index d = 1;
  for (const SystemLabel& l : labels) d *= l.dim;
  return d;
}

void require_distinct_ids(const std::vector<SystemLabel>& labels) {
  std::set<int> ids;
  for (const SystemLabel& l : labels) {
    if (l.dim <= 0) throw std::invalid_argument("SystemLabel: dimension must be positive");
    if (!ids.insert(l.id).second)
      throw std::invalid_argument("LabeledOperator: duplicate label id " + std::to_string(l.id));
  }
}

// Index offset of each single-factor digit value: offset[k][v] = v * stride_k.
std::vector<std::vector<Eigen::Index>> digit_offsets(const std::vector<SystemLabel>& labels) {
  std::vector<std::vector<Eigen::Index>> off(labels.size());
  Eigen::Index stride = 1;
  for (int k = static_cast<int>(labels.size()) - 1; k >= 0; --k) {
    off[static_cast<size_t>(k)].resize(static_cast<size_t>(labels[static_cast<size_t>(k)].dim));
    for (Eigen::Index v = 0; v < labels[static_cast<size_t>(k)].dim; ++v)
      off[static_cast<size_t>(k)][static_cast<size_t>(v)] = v * stride;
    stride *= labels[static_cast<size_t>(k)].dim;
  }
  return off;
}

// For a split of the label list into two groups, returns the full-space
// index as base_a[i] + base_b[j] over group multi-indices i, j.
std::vector<Eigen::Index> group_bases(const std::vector<SystemLabel>& labels,
                                      const std::vector<int>& positions) {
  const auto offsets = digit_offsets(labels);
  std::vector<Eigen::Index> bases{0};
  for (int p : positions) {
    std::vector<Eigen::Index> next;
    next.reserve(bases.size() * static_cast<size_t>(labels[static_cast<size_t>(p)].dim));
    for (Eigen::Index base : bases)
      for (Eigen::Index v = 0; v < labels[static_cast<size_t>(p)].dim; ++v)
        next.push_back(base + offsets[static_cast<size_t>(p)][static_cast<size_t>(v)]);
    bases = std::move(next);
  }
  return bases;
}

}  // namespace

LabeledOperator::LabeledOperator(std::vector<SystemLabel> labels, Eigen::MatrixXcd mat)
    : labels_(std::move(labels)), mat_(std::move(mat)) {
  require_distinct_ids(labels_);
  const Eigen::Index d = product_dim(labels_);
  if (mat_.rows() != d || mat_.cols() != d)
    throw std::invalid_argument("LabeledOperator: matrix is " + std::to_string(mat_.rows()) +
                                "x" + std::to_string(mat_.cols()) + ", labels give " +
                                std::to_string(d));
}

LabeledOperator LabeledOperator::identity(std::vector<SystemLabel> labels) {
  require_distinct_ids(labels);
  const Eigen::Index d = product_dim(labels);
  return {std::move(labels), Eigen::MatrixXcd::Identity(d, d)};
}

LabeledOperator LabeledOperator::kron(const LabeledOperator& a, const LabeledOperator& b) {
  std::vector<SystemLabel> labels = a.labels_;
  labels.insert(labels.end(), b.labels_.begin(), b.labels_.end());
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(a.dim() * b.dim(), a.dim() * b.dim());
  for (Eigen::Index i = 0; i < a.dim(); ++i)
    for (Eigen::Index j = 0; j < a.dim(); ++j)
      if (a.mat_(i, j) != Complex(0, 0))
        m.block(i * b.dim(), j * b.dim(), b.dim(), b.dim()) = a.mat_(i, j) * b.mat_;
  return {std::move(labels), std::move(m)};
}

bool LabeledOperator::has_label(int id) const {
  return std::any_of(labels_.begin(), labels_.end(),
                     [id](const SystemLabel& l) { return l.id == id; });
}

int LabeledOperator::label_pos(int id) const {
  for (size_t k = 0; k < labels_.size(); ++k)
    if (labels_[k].id == id) return static_cast<int>(k);
  throw std::invalid_argument("label_pos: no label with id " + std::to_string(id));
}

LabeledOperator LabeledOperator::reordered(const std::vector<int>& id_order) const {
  if (id_order.size() != labels_.size())
    throw std::invalid_argument("reordered: order must mention every label once");
  std::vector<int> pos;
  pos.reserve(id_order.size());
  for (int id : id_order) pos.push_back(label_pos(id));

  std::vector<SystemLabel> new_labels;
  new_labels.reserve(labels_.size());
  for (int p : pos) new_labels.push_back(labels_[static_cast<size_t>(p)]);

  // map[new_index] = old_index, built digit by digit.
  const auto offsets = digit_offsets(labels_);
  std::vector<Eigen::Index> map{0};
  for (int p : pos) {
    std::vector<Eigen::Index> next;
    next.reserve(map.size() * static_cast<size_t>(labels_[static_cast<size_t>(p)].dim));
    for (Eigen::Index base : map)
      for (Eigen::Index v = 0; v < labels_[static_cast<size_t>(p)].dim; ++v)
        next.push_back(base + offsets[static_cast<size_t>(p)][static_cast<size_t>(v)]);
    map = std::move(next);
  }

  Eigen::MatrixXcd m(dim(), dim());
  for (Eigen::Index r = 0; r < dim(); ++r)
    for (Eigen::Index c = 0; c < dim(); ++c) m(r, c) = mat_(map[static_cast<size_t>(r)], map[static_cast<size_t>(c)]);
  return {std::move(new_labels), std::move(m)};
}

LabeledOperator LabeledOperator::canonicalized() const {
  std::vector<int> ids;
  ids.reserve(labels_.size());
  for (const SystemLabel& l : labels_) ids.push_back(l.id);
  std::sort(ids.begin(), ids.end());
  bool sorted = true;
  for (size_t k = 0; k < labels_.size(); ++k)
    if (labels_[k].id != ids[k]) sorted = false;
  return sorted ? *this : reordered(ids);
}

LabeledOperator LabeledOperator::tensored_with_identity(
    const std::vector<SystemLabel>& extra) const {
  if (extra.empty()) return *this;
  return kron(*this, identity(extra));
}

LabeledOperator LabeledOperator::partial_trace(const std::vector<int>& ids) const {
  std::vector<int> traced_pos, kept_pos;
  for (int id : ids) traced_pos.push_back(label_pos(id));
  std::sort(traced_pos.begin(), traced_pos.end());
  for (int k = 0; k < label_count(); ++k)
    if (!std::binary_search(traced_pos.begin(), traced_pos.end(), k)) kept_pos.push_back(k);

  std::vector<SystemLabel> kept_labels;
  for (int p : kept_pos) kept_labels.push_back(labels_[static_cast<size_t>(p)]);
  const auto kept_base = group_bases(labels_, kept_pos);
  const auto traced_base = group_bases(labels_, traced_pos);

  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(
      static_cast<Eigen::Index>(kept_base.size()), static_cast<Eigen::Index>(kept_base.size()));
  for (size_t r = 0; r < kept_base.size(); ++r)
    for (size_t c = 0; c < kept_base.size(); ++c) {
      Complex acc(0, 0);
      for (Eigen::Index s : traced_base) acc += mat_(kept_base[r] + s, kept_base[c] + s);
      out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = acc;
    }
  return {std::move(kept_labels), std::move(out)};
}

LabeledOperator LabeledOperator::partial_transpose(const std::vector<int>& ids) const {
  std::vector<int> tpos, kpos;
  for (int id : ids) tpos.push_back(label_pos(id));
  std::sort(tpos.begin(), tpos.end());
  for (int k = 0; k < label_count(); ++k)
    if (!std::binary_search(tpos.begin(), tpos.end(), k)) kpos.push_back(k);

  const auto kbase = group_bases(labels_, kpos);
  const auto tbase = group_bases(labels_, tpos);
  Eigen::MatrixXcd out(dim(), dim());
  for (size_t rk = 0; rk < kbase.size(); ++rk)
    for (size_t rt = 0; rt < tbase.size(); ++rt)
      for (size_t ck = 0; ck < kbase.size(); ++ck)
        for (size_t ct = 0; ct < tbase.size(); ++ct)
          out(kbase[rk] + tbase[rt], kbase[ck] + tbase[ct]) =
              mat_(kbase[rk] + tbase[ct], kbase[ck] + tbase[rt]);
  return {labels_, std::move(out)};
}

LabeledOperator operator+(const LabeledOperator& a, const LabeledOperator& b) {
  LabeledOperator bb = b.reordered([&] {
    std::vector<int> ids;
    for (const SystemLabel& l : a.labels()) ids.push_back(l.id);
    return ids;
  }());
  if (bb.labels() != a.labels()) throw std::invalid_argument("operator+: label sets differ");
  return {a.labels(), a.matrix() + bb.matrix()};
}

LabeledOperator operator-(const LabeledOperator& a, const LabeledOperator& b) {
  return a + b.scaled(Complex(-1, 0));
}

Eigen::VectorXcd vectorize(const Eigen::MatrixXcd& x) {
  Eigen::VectorXcd v(x.size());
  Eigen::Index k = 0;
  for (Eigen::Index r = 0; r < x.rows(); ++r)
    for (Eigen::Index c = 0; c < x.cols(); ++c) v(k++) = x(r, c);
  return v;
}

LabeledOperator link_product(const LabeledOperator& x, const LabeledOperator& y) {
  std::vector<int> shared;
  for (const SystemLabel& l : x.labels())
    if (y.has_label(l.id)) {
      if (y.dim_of(l.id) != l.dim)
        throw std::invalid_argument("link_product: dimension mismatch on shared label " +
                                    std::to_string(l.id));
      shared.push_back(l.id);
    }

  // Union label list, ascending by id.
  std::vector<SystemLabel> uni = x.labels();
  for (const SystemLabel& l : y.labels())
    if (!x.has_label(l.id)) uni.push_back(l);
  std::sort(uni.begin(), uni.end(),
            [](const SystemLabel& a, const SystemLabel& b) { return a.id < b.id; });
  std::vector<int> uni_ids;
  Eigen::Index uni_dim = 1;
  for (const SystemLabel& l : uni) {
    uni_ids.push_back(l.id);
    uni_dim *= l.dim;
  }
  check_budget(static_cast<std::uint64_t>(uni_dim), "link_product");

  std::vector<SystemLabel> x_missing, y_missing;
  for (const SystemLabel& l : uni) {
    if (!x.has_label(l.id)) x_missing.push_back(l);
    if (!y.has_label(l.id)) y_missing.push_back(l);
  }
  const LabeledOperator xe = x.tensored_with_identity(x_missing).reordered(uni_ids);
  const LabeledOperator ye = y.tensored_with_identity(y_missing).reordered(uni_ids);
  const LabeledOperator xt = xe.partial_transpose(shared);
  LabeledOperator prod{uni, xt.matrix() * ye.matrix()};
  return prod.partial_trace(shared);
}

}  // namespace combforge
