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

#include "combforge/symrep.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <shared_mutex>

namespace combforge {

Permutation Permutation::identity(int n) {
  std::vector<int> im(static_cast<size_t>(n));
  std::iota(im.begin(), im.end(), 1);
  return Permutation(std::move(im));
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 1 || v > degree() || seen[static_cast<size_t>(v - 1)])
      throw std::invalid_argument("Permutation: image list is not a bijection");
    seen[static_cast<size_t>(v - 1)] = true;
  }
}

Permutation Permutation::adjacent_transposition(int n, int i) {
  if (i < 1 || i >= n) throw std::out_of_range("adjacent_transposition: need 1 <= i <= n-1");
  Permutation p = identity(n);
  std::swap(p.images_[static_cast<size_t>(i - 1)], p.images_[static_cast<size_t>(i)]);
  return p;
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  Permutation p = identity(n);
  for (const auto& cyc : cycles)
    for (size_t j = 0; j < cyc.size(); ++j)
      p.images_[static_cast<size_t>(cyc[j] - 1)] = cyc[(j + 1) % cyc.size()];
  return Permutation(std::move(p.images_));  // re-validate
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 1; i <= degree(); ++i) inv[static_cast<size_t>((*this)(i)-1)] = i;
  return Permutation(std::move(inv));
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("Permutation product: degree mismatch");
  std::vector<int> im(static_cast<size_t>(a.degree()));
  for (int i = 1; i <= a.degree(); ++i) im[static_cast<size_t>(i - 1)] = a(b(i));
  return Permutation(std::move(im));
}

std::vector<int> Permutation::adjacent_factorization() const {
  // Bubble-sort the one-line notation to the identity; each swap applied on
  // the right is an s_i, so pi equals the recorded s_i multiplied in reverse.
  std::vector<int> work = images_;
  std::vector<int> swaps;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int j = 0; j + 1 < degree(); ++j) {
      if (work[static_cast<size_t>(j)] > work[static_cast<size_t>(j + 1)]) {
        std::swap(work[static_cast<size_t>(j)], work[static_cast<size_t>(j + 1)]);
        swaps.push_back(j + 1);
        changed = true;
      }
    }
  }
  std::reverse(swaps.begin(), swaps.end());
  return swaps;
}

YoungDiagram Permutation::cycle_type() const {
  std::vector<bool> seen(images_.size(), false);
  std::vector<int> lens;
  for (int i = 1; i <= degree(); ++i) {
    if (seen[static_cast<size_t>(i - 1)]) continue;
    int len = 0, j = i;
    do {
      seen[static_cast<size_t>(j - 1)] = true;
      j = (*this)(j);
      ++len;
    } while (j != i);
    lens.push_back(len);
  }
  std::sort(lens.rbegin(), lens.rend());
  return YoungDiagram(std::move(lens));
}

int Permutation::sign() const {
  int parity = 0;
  for (int len : cycle_type().rows()) parity += len - 1;
  return parity % 2 == 0 ? 1 : -1;
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= degree(); ++i)
    if ((*this)(i) != i) return false;
  return true;
}

std::vector<Permutation> symmetric_group(int n) {
  std::vector<int> im(static_cast<size_t>(n));
  std::iota(im.begin(), im.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(im);
  } while (std::next_permutation(im.begin(), im.end()));
  return out;
}

int axial_distance(const StandardTableau& t, int i) {
  if (i < 1 || i >= t.size()) throw std::out_of_range("axial_distance: need 1 <= i <= n-1");
  return t.box_of(i + 1).content() - t.box_of(i).content();
}

StandardTableau swap_entries(const StandardTableau& t, int i) {
  std::vector<int> rows = t.row_sequence();
  std::swap(rows[static_cast<size_t>(i - 1)], rows[static_cast<size_t>(i)]);
  return StandardTableau(t.shape(), std::move(rows));
}

bool swap_is_standard(const StandardTableau& t, int i) {
  const Box a = t.box_of(i);
  const Box b = t.box_of(i + 1);
  return a.row != b.row && a.col != b.col;
}

namespace {

int tableau_index(const std::vector<StandardTableau>& tabs, const StandardTableau& t) {
  const auto it = std::find(tabs.begin(), tabs.end(), t);
  if (it == tabs.end()) throw std::logic_error("tableau_index: tableau not found");
  return static_cast<int>(it - tabs.begin());
}

Eigen::MatrixXd build_transposition_action(const YoungDiagram& lambda, int i) {
  const auto tabs = enumerate_tableaux(lambda);
  const int dim = static_cast<int>(tabs.size());
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim, dim);
  for (int t = 0; t < dim; ++t) {
    const int r = axial_distance(tabs[static_cast<size_t>(t)], i);
    m(t, t) = 1.0 / r;
    if (swap_is_standard(tabs[static_cast<size_t>(t)], i)) {
      const StandardTableau st = swap_entries(tabs[static_cast<size_t>(t)], i);
      m(tableau_index(tabs, st), t) = std::sqrt(1.0 - 1.0 / (double(r) * r));
    }
  }
  return m;
}

// Read-mostly memo keyed by (shape, generator index).
std::shared_mutex g_gen_cache_mutex;
std::map<std::pair<std::vector<int>, int>, Eigen::MatrixXd> g_gen_cache;

}  // namespace

Eigen::MatrixXd transposition_action(const YoungDiagram& lambda, int i) {
  if (i < 1 || i > lambda.box_count() - 1)
    throw std::out_of_range("transposition_action: generator index out of range");
  const std::pair<std::vector<int>, int> key{lambda.rows(), i};
  {
    std::shared_lock lock(g_gen_cache_mutex);
    const auto it = g_gen_cache.find(key);
    if (it != g_gen_cache.end()) return it->second;
  }
  Eigen::MatrixXd m = build_transposition_action(lambda, i);
  std::unique_lock lock(g_gen_cache_mutex);
  return g_gen_cache.emplace(key, std::move(m)).first->second;
}

Eigen::MatrixXd irrep_matrix(const YoungDiagram& lambda, const Permutation& pi) {
  if (pi.degree() != lambda.box_count())
    throw std::invalid_argument("irrep_matrix: permutation degree != box count");
  const int dim = static_cast<int>(num_tableaux(lambda));
  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(dim, dim);
  for (int i : pi.adjacent_factorization()) m *= transposition_action(lambda, i);
  return m;
}

double character(const YoungDiagram& lambda, const Permutation& pi) {
  return irrep_matrix(lambda, pi).trace();
}

double character_of_class(const YoungDiagram& lambda, const YoungDiagram& cycle_type) {
  if (cycle_type.box_count() != lambda.box_count())
    throw std::invalid_argument("character_of_class: size mismatch");
  // Canonical class representative: consecutive cycles (1..l1)(l1+1..l1+l2)...
  std::vector<std::vector<int>> cycles;
  int next = 1;
  for (int len : cycle_type.rows()) {
    std::vector<int> cyc(static_cast<size_t>(len));
    std::iota(cyc.begin(), cyc.end(), next);
    next += len;
    cycles.push_back(std::move(cyc));
  }
  return character(lambda, Permutation::from_cycles(lambda.box_count(), cycles));
}

Eigen::MatrixXcd isotypic_projector(
    const YoungDiagram& lambda,
    const std::function<Eigen::MatrixXcd(const Permutation&)>& rep) {
  const int k = lambda.box_count();
  const double dim_p = static_cast<double>(num_tableaux(lambda));
  Eigen::MatrixXcd acc;
  for (const Permutation& pi : symmetric_group(k)) {
    const double chi = character(lambda, pi);
    Eigen::MatrixXcd m = rep(pi);
    if (acc.size() == 0) acc = Eigen::MatrixXcd::Zero(m.rows(), m.cols());
    if (chi != 0.0) acc += chi * m;
  }
  return (dim_p / static_cast<double>(factorial(k))) * acc;
}

}  // namespace combforge
