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

#include "combforge/young.hpp"

#include <algorithm>
#include <numeric>

namespace combforge {

YoungDiagram::YoungDiagram(std::vector<int> rows) : rows_(std::move(rows)) {
  for (size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i] <= 0) throw std::invalid_argument("YoungDiagram: parts must be positive");
    if (i > 0 && rows_[i] > rows_[i - 1])
      throw std::invalid_argument("YoungDiagram: parts must be weakly decreasing");
    n_ += rows_[i];
  }
}

YoungDiagram YoungDiagram::conjugate() const {
  if (rows_.empty()) return {};
  std::vector<int> cols(static_cast<size_t>(rows_[0]), 0);
  for (int r = 0; r < row_count(); ++r)
    for (int c = 0; c < rows_[static_cast<size_t>(r)]; ++c) ++cols[static_cast<size_t>(c)];
  return YoungDiagram(std::move(cols));
}

int YoungDiagram::column(int c) const {
  int len = 0;
  while (len < row_count() && row(len) > c) ++len;
  return len;
}

int YoungDiagram::hook(int r, int c) const {
  if (!contains_box(r, c)) throw std::out_of_range("hook: box outside diagram");
  const int arm = row(r) - c - 1;
  const int leg = column(c) - r - 1;
  return arm + leg + 1;
}

std::vector<Box> YoungDiagram::boxes() const {
  std::vector<Box> out;
  out.reserve(static_cast<size_t>(n_));
  for (int r = 0; r < row_count(); ++r)
    for (int c = 0; c < row(r); ++c) out.push_back({r, c});
  return out;
}

bool YoungDiagram::addable(int r) const {
  if (r < 0 || r > row_count()) return false;
  if (r == 0) return true;
  return row(r) < row(r - 1);
}

bool YoungDiagram::removable(int r) const {
  if (r < 0 || r >= row_count()) return false;
  return row(r) > row(r + 1);
}

YoungDiagram YoungDiagram::with_box_added(int r) const {
  if (!addable(r)) throw std::invalid_argument("with_box_added: position not addable");
  std::vector<int> rows = rows_;
  if (r == row_count())
    rows.push_back(1);
  else
    ++rows[static_cast<size_t>(r)];
  return YoungDiagram(std::move(rows));
}

YoungDiagram YoungDiagram::with_box_removed(int r) const {
  if (!removable(r)) throw std::invalid_argument("with_box_removed: position not removable");
  std::vector<int> rows = rows_;
  if (--rows[static_cast<size_t>(r)] == 0) rows.pop_back();
  return YoungDiagram(std::move(rows));
}

std::string YoungDiagram::to_string() const {
  std::string s = "(";
  for (size_t i = 0; i < rows_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(rows_[i]);
  }
  return s + ")";
}

StandardTableau::StandardTableau(YoungDiagram shape, std::vector<int> row_of_entry)
    : shape_(std::move(shape)), row_of_(std::move(row_of_entry)) {
  if (static_cast<int>(row_of_.size()) != shape_.box_count())
    throw std::invalid_argument("StandardTableau: entry count != box count");
  // Validate by replaying the growth chain.
  YoungDiagram cur;
  for (int i = 1; i <= size(); ++i) {
    const int r = row_of_[static_cast<size_t>(i - 1)];
    if (!cur.addable(r)) throw std::invalid_argument("StandardTableau: filling not standard");
    cur = cur.with_box_added(r);
  }
  if (cur != shape_) throw std::invalid_argument("StandardTableau: chain does not reach shape");
}

Box StandardTableau::box_of(int i) const {
  if (i < 1 || i > size()) throw std::out_of_range("box_of: entry out of range");
  const int r = row_of(i);
  int col = 0;
  for (int j = 1; j < i; ++j)
    if (row_of(j) == r) ++col;
  return {r, col};
}

std::vector<YoungDiagram> StandardTableau::chain() const {
  std::vector<YoungDiagram> out;
  out.reserve(row_of_.size());
  YoungDiagram cur;
  for (int i = 1; i <= size(); ++i) {
    cur = cur.with_box_added(row_of(i));
    out.push_back(cur);
  }
  return out;
}

StandardTableau StandardTableau::removed_last() const {
  if (size() == 0) throw std::invalid_argument("removed_last: empty tableau");
  std::vector<int> rows(row_of_.begin(), row_of_.end() - 1);
  YoungDiagram sh = shape_.with_box_removed(row_of_.back());
  return StandardTableau(std::move(sh), std::move(rows));
}

StandardTableau StandardTableau::appended(const YoungDiagram& lambda) const {
  // lambda must cover shape() by exactly one box.
  for (int r = 0; r <= shape_.row_count(); ++r) {
    if (lambda.row(r) == shape_.row(r) + 1) {
      bool rest_equal = true;
      for (int q = 0; q <= lambda.row_count(); ++q)
        if (q != r && lambda.row(q) != shape_.row(q)) rest_equal = false;
      if (!rest_equal) break;
      std::vector<int> rows = row_of_;
      rows.push_back(r);
      return StandardTableau(lambda, std::move(rows));
    }
  }
  throw std::invalid_argument("appended: lambda does not cover the shape");
}

std::string StandardTableau::to_string() const {
  std::string s = shape_.to_string() + "[";
  for (size_t i = 0; i < row_of_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(row_of_[i]);
  }
  return s + "]";
}

Int factorial(int n) {
  Int f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

namespace {

void enumerate_partitions_rec(int remaining, int max_part, int rows_left,
                              std::vector<int>& acc, std::vector<YoungDiagram>& out) {
  if (remaining == 0) {
    out.emplace_back(acc);
    return;
  }
  if (rows_left == 0) return;
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    acc.push_back(part);
    enumerate_partitions_rec(remaining - part, part, rows_left - 1, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<YoungDiagram> enumerate_partitions(int n, int max_rows) {
  if (n < 0) throw std::invalid_argument("enumerate_partitions: n must be >= 0");
  std::vector<YoungDiagram> out;
  std::vector<int> acc;
  enumerate_partitions_rec(n, std::max(n, 1), max_rows < 0 ? n : max_rows, acc, out);
  return out;
}

Int num_tableaux(const YoungDiagram& lambda) {
  Int numer = factorial(lambda.box_count());
  Int denom = 1;
  for (const Box& b : lambda.boxes()) denom *= lambda.hook(b.row, b.col);
  Int q, r;
  boost::multiprecision::divide_qr(numer, denom, q, r);
  if (r != 0) throw std::logic_error("num_tableaux: hook product does not divide n!");
  return q;
}

namespace {

void enumerate_tableaux_rec(const YoungDiagram& target, const YoungDiagram& cur,
                            std::vector<int>& rows, std::vector<StandardTableau>& out) {
  if (cur.box_count() == target.box_count()) {
    out.emplace_back(target, rows);
    return;
  }
  for (int r = 0; r <= cur.row_count(); ++r) {
    if (!cur.addable(r) || cur.row(r) + 1 > target.row(r)) continue;
    rows.push_back(r);
    enumerate_tableaux_rec(target, cur.with_box_added(r), rows, out);
    rows.pop_back();
  }
}

}  // namespace

std::vector<StandardTableau> enumerate_tableaux(const YoungDiagram& lambda) {
  std::vector<StandardTableau> out;
  std::vector<int> rows;
  enumerate_tableaux_rec(lambda, YoungDiagram{}, rows, out);
  return out;
}

InterlacingSequences interlacing(const YoungDiagram& lambda) {
  InterlacingSequences seq;
  // Scan rows bottom-up so contents come out strictly increasing.
  for (int r = lambda.row_count(); r >= 0; --r)
    if (lambda.addable(r)) seq.alphas.push_back(lambda.row(r) - r);
  for (int r = lambda.row_count() - 1; r >= 0; --r)
    if (lambda.removable(r)) seq.betas.push_back(lambda.row(r) - 1 - r);
  return seq;
}

std::vector<YoungDiagram> children(const YoungDiagram& lambda) {
  std::vector<YoungDiagram> out;
  for (int r = lambda.row_count(); r >= 0; --r)
    if (lambda.addable(r)) out.push_back(lambda.with_box_added(r));
  return out;
}

std::vector<YoungDiagram> parents(const YoungDiagram& lambda) {
  std::vector<YoungDiagram> out;
  for (int r = lambda.row_count() - 1; r >= 0; --r)
    if (lambda.removable(r)) out.push_back(lambda.with_box_removed(r));
  return out;
}

YoungDiagram add_box_at(const YoungDiagram& mu, int alpha_index) {
  int k = 0;
  for (int r = mu.row_count(); r >= 0; --r) {
    if (!mu.addable(r)) continue;
    if (k == alpha_index) return mu.with_box_added(r);
    ++k;
  }
  throw std::out_of_range("add_box_at: alpha index out of range");
}

YoungDiagram remove_box_at(const YoungDiagram& lambda, int beta_index) {
  int k = 0;
  for (int r = lambda.row_count() - 1; r >= 0; --r) {
    if (!lambda.removable(r)) continue;
    if (k == beta_index) return lambda.with_box_removed(r);
    ++k;
  }
  throw std::out_of_range("remove_box_at: beta index out of range");
}

Box box_difference(const YoungDiagram& larger, const YoungDiagram& smaller) {
  if (larger.box_count() != smaller.box_count() + 1)
    throw std::invalid_argument("box_difference: diagrams must differ by one box");
  for (int r = 0; r < larger.row_count(); ++r) {
    if (larger.row(r) == smaller.row(r) + 1) {
      for (int q = 0; q < larger.row_count(); ++q)
        if (q != r && larger.row(q) != smaller.row(q))
          throw std::invalid_argument("box_difference: not a single-box difference");
      return {r, smaller.row(r)};
    }
    if (larger.row(r) != smaller.row(r))
      throw std::invalid_argument("box_difference: not a single-box difference");
  }
  throw std::invalid_argument("box_difference: diagrams equal");
}

YoungDiagram diagram_union(const YoungDiagram& a, const YoungDiagram& b) {
  std::vector<int> rows;
  for (int r = 0; r < std::max(a.row_count(), b.row_count()); ++r)
    rows.push_back(std::max(a.row(r), b.row(r)));
  return YoungDiagram(std::move(rows));
}

YoungDiagram diagram_intersection(const YoungDiagram& a, const YoungDiagram& b) {
  std::vector<int> rows;
  for (int r = 0; r < std::min(a.row_count(), b.row_count()); ++r) {
    int m = std::min(a.row(r), b.row(r));
    if (m == 0) break;
    rows.push_back(m);
  }
  return YoungDiagram(std::move(rows));
}

bool adjacent(const YoungDiagram& mu, const YoungDiagram& nu) {
  if (mu == nu || mu.box_count() != nu.box_count()) return false;
  return diagram_union(mu, nu).box_count() == mu.box_count() + 1;
}

Rational add_box_ratio(const YoungDiagram& mu, int alpha_index) {
  const InterlacingSequences seq = interlacing(mu);
  const int L = static_cast<int>(seq.alphas.size());
  if (alpha_index < 0 || alpha_index >= L)
    throw std::out_of_range("add_box_ratio: alpha index out of range");
  const int k = alpha_index;
  Rational ratio = mu.box_count() + 1;
  for (int i = 0; i < k; ++i)
    ratio *= Rational(seq.alphas[k] - seq.betas[i], seq.alphas[k] - seq.alphas[i]);
  for (int i = k + 1; i < L; ++i)
    ratio *= Rational(seq.alphas[k] - seq.betas[i - 1], seq.alphas[k] - seq.alphas[i]);
  return ratio;
}

Rational remove_box_ratio(const YoungDiagram& lambda, int beta_index) {
  const InterlacingSequences seq = interlacing(lambda);
  const int L = static_cast<int>(seq.alphas.size());
  if (beta_index < 0 || beta_index >= L - 1)
    throw std::out_of_range("remove_box_ratio: beta index out of range");
  const int k = beta_index;
  const int bk = seq.betas[k];
  Rational ratio = Rational((seq.alphas[L - 1] - bk) * (bk - seq.alphas[0]), lambda.box_count());
  for (int i = 0; i < k; ++i)
    ratio *= Rational(bk - seq.alphas[i + 1], bk - seq.betas[i]);
  for (int i = k + 1; i < L - 1; ++i)
    ratio *= Rational(bk - seq.alphas[i], bk - seq.betas[i]);
  return ratio;
}

Rational check_hook_ratio_identity(const YoungDiagram& mu, const YoungDiagram& nu) {
  if (!adjacent(mu, nu))
    throw std::invalid_argument("check_hook_ratio_identity: diagrams must be distinct and adjacent");
  const int n = mu.box_count();
  const YoungDiagram uni = diagram_union(mu, nu);
  const YoungDiagram inter = diagram_intersection(mu, nu);
  const Rational lhs = Rational(num_tableaux(mu) * num_tableaux(nu),
                                num_tableaux(uni) * num_tableaux(inter));
  const int cmu = box_difference(mu, inter).content();
  const int cnu = box_difference(nu, inter).content();
  const Int gap = cmu - cnu;
  const Rational rhs = Rational(n, n + 1) * (1 - Rational(1, gap * gap));
  return boost::multiprecision::abs(lhs - rhs);
}

Rational check_zero_sum_identity(const YoungDiagram& nu, const YoungDiagram& tau,
                                 const YoungDiagram& kappa) {
  if (tau == kappa) throw std::invalid_argument("check_zero_sum_identity: tau == kappa");
  const auto par = parents(nu);
  const auto is_parent = [&](const YoungDiagram& p) {
    return std::find(par.begin(), par.end(), p) != par.end();
  };
  if (!is_parent(tau) || !is_parent(kappa))
    throw std::invalid_argument("check_zero_sum_identity: not parents of nu");
  const int ct = box_difference(nu, tau).content();
  const int ck = box_difference(nu, kappa).content();
  const Int dim_nu = num_tableaux(nu);
  Rational sum = 0;
  for (const YoungDiagram& lambda : children(nu)) {
    const int cl = box_difference(lambda, nu).content();
    sum += Rational(num_tableaux(lambda), dim_nu) *
           Rational(1, Int(cl - ct) * Int(cl - ck));
  }
  return boost::multiprecision::abs(sum);
}

Rational check_inverse_square_identity(const YoungDiagram& nu, const YoungDiagram& tau) {
  const auto par = parents(nu);
  if (std::find(par.begin(), par.end(), tau) == par.end())
    throw std::invalid_argument("check_inverse_square_identity: tau is not a parent of nu");
  const int n = nu.box_count();
  const int ct = box_difference(nu, tau).content();
  const Int dim_nu = num_tableaux(nu);
  Rational sum = 0;
  for (const YoungDiagram& lambda : children(nu)) {
    const int cl = box_difference(lambda, nu).content();
    sum += Rational(num_tableaux(lambda), dim_nu) * Rational(1, Int(cl - ct) * Int(cl - ct));
  }
  const Rational rhs = Rational(n + 1, n) * Rational(dim_nu, num_tableaux(tau));
  return boost::multiprecision::abs(sum - rhs);
}

Rational check_lagrange_identity(const std::vector<Rational>& alphas,
                                 const std::vector<Rational>& betas, int m) {
  const int L = static_cast<int>(alphas.size());
  if (static_cast<int>(betas.size()) != L - 1)
    throw std::invalid_argument("check_lagrange_identity: need L alphas and L-1 betas");
  if (m < 0 || m >= L - 1) throw std::out_of_range("check_lagrange_identity: m out of range");
  std::vector<Rational> all = alphas;
  all.insert(all.end(), betas.begin(), betas.end());
  for (size_t i = 0; i < all.size(); ++i)
    for (size_t j = i + 1; j < all.size(); ++j)
      if (all[i] == all[j])
        throw std::invalid_argument("check_lagrange_identity: values must be pairwise distinct");
  Rational sum = 0;
  for (int i = 0; i < L; ++i) {
    Rational term = 1 / (alphas[static_cast<size_t>(i)] - betas[static_cast<size_t>(m)]);
    for (int j = 0; j < i; ++j)
      term *= (alphas[static_cast<size_t>(i)] - betas[static_cast<size_t>(j)]) /
              (alphas[static_cast<size_t>(i)] - alphas[static_cast<size_t>(j)]);
    for (int j = i + 1; j < L; ++j)
      term *= (alphas[static_cast<size_t>(i)] - betas[static_cast<size_t>(j - 1)]) /
              (alphas[static_cast<size_t>(i)] - alphas[static_cast<size_t>(j)]);
    sum += term;
  }
  return boost::multiprecision::abs(sum);
}

Int dimension_q(const YoungDiagram& lambda, int d) {
  if (d < 1) throw std::invalid_argument("dimension_q: d must be positive");
  if (lambda.row_count() > d) return 0;
  Int numer = 1, denom = 1;
  for (const Box& b : lambda.boxes()) {
    numer *= d + b.content();
    denom *= lambda.hook(b.row, b.col);
  }
  Int q, r;
  boost::multiprecision::divide_qr(numer, denom, q, r);
  if (r != 0) throw std::logic_error("dimension_q: product is not integral");
  return q;
}

}  // namespace combforge
