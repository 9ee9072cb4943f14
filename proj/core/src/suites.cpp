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

#include "combforge/suites.hpp"

#include <algorithm>
#include <cmath>

#include "combforge/certify.hpp"
#include "combforge/comb.hpp"
#include "combforge/haar_moment.hpp"
#include "combforge/stair.hpp"

namespace combforge {

namespace {

CheckResult make_check(const std::string& name, Json params, double value, double tol,
                       bool pass, const Stopwatch& watch) {
  CheckResult c;
  c.name = name;
  c.params = std::move(params);
  c.value = value;
  c.tol = tol;
  c.pass = pass;
  c.runtime_ms = watch.elapsed_ms();
  return c;
}

CheckResult residual_check(const std::string& name, Json params, double residual, double tol,
                           const Stopwatch& watch) {
  return make_check(name, std::move(params), residual, tol, residual <= tol, watch);
}

Eigen::MatrixXcd kron_matrix(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

}  // namespace

VerificationReport run_young_identities_suite(const SuiteConfig& config) {
  Stopwatch total;
  VerificationReport report;
  report.suite = "young-identities";
  // Fixed desk-scale ladder; exactness does not depend on config sizes.
  const int n_ratio = 12;
  const int n_ident = 8;
  const int n_count = 10;
  report.params = {{"n_ratio", n_ratio}, {"n_identity", n_ident}, {"n_count", n_count},
                   {"seed", config.seed}};

  {
    Stopwatch watch;
    long count = 0;
    bool exact = true;
    for (int n = 0; n <= n_ratio; ++n)
      for (const YoungDiagram& mu : enumerate_partitions(n)) {
        const auto seq = interlacing(mu);
        for (int kidx = 0; kidx < static_cast<int>(seq.alphas.size()); ++kidx) {
          const YoungDiagram lambda = add_box_at(mu, kidx);
          const Rational hook_ratio(num_tableaux(lambda), num_tableaux(mu));
          if (add_box_ratio(mu, kidx) != hook_ratio) exact = false;
          ++count;
        }
      }
    report.add(make_check("kerov_add_ratio_exact", {{"instances", count}}, exact ? 0.0 : 1.0,
                          0.0, exact, watch));
  }
  {
    Stopwatch watch;
    long count = 0;
    bool exact = true;
    for (int n = 1; n <= n_ratio; ++n)
      for (const YoungDiagram& lambda : enumerate_partitions(n)) {
        const auto seq = interlacing(lambda);
        for (int kidx = 0; kidx + 1 < static_cast<int>(seq.alphas.size()); ++kidx) {
          const YoungDiagram mu = remove_box_at(lambda, kidx);
          const Rational hook_ratio(num_tableaux(mu), num_tableaux(lambda));
          if (remove_box_ratio(lambda, kidx) != hook_ratio) exact = false;
          ++count;
        }
      }
    report.add(make_check("kerov_remove_ratio_exact", {{"instances", count}}, exact ? 0.0 : 1.0,
                          0.0, exact, watch));
  }
  {
    Stopwatch watch;
    long count = 0;
    bool exact = true;
    for (int n = 2; n <= n_ident; ++n) {
      const auto parts = enumerate_partitions(n);
      for (size_t a = 0; a < parts.size(); ++a)
        for (size_t b = 0; b < parts.size(); ++b) {
          if (a == b || !adjacent(parts[a], parts[b])) continue;
          if (check_hook_ratio_identity(parts[a], parts[b]) != 0) exact = false;
          ++count;
        }
    }
    report.add(make_check("hook_ratio_identity_exact", {{"instances", count}},
                          exact ? 0.0 : 1.0, 0.0, exact, watch));
  }
  {
    Stopwatch watch;
    long count = 0;
    bool exact = true;
    for (int n = 2; n <= n_ident; ++n)
      for (const YoungDiagram& nu : enumerate_partitions(n)) {
        const auto par = parents(nu);
        for (size_t a = 0; a < par.size(); ++a)
          for (size_t b = 0; b < par.size(); ++b) {
            if (a == b) continue;
            if (check_zero_sum_identity(nu, par[a], par[b]) != 0) exact = false;
            ++count;
          }
      }
    report.add(make_check("zero_sum_identity_exact", {{"instances", count}}, exact ? 0.0 : 1.0,
                          0.0, exact, watch));
  }
  {
    Stopwatch watch;
    long count = 0;
    bool exact = true;
    for (int n = 1; n <= n_ident; ++n)
      for (const YoungDiagram& nu : enumerate_partitions(n))
        for (const YoungDiagram& tau : parents(nu)) {
          if (check_inverse_square_identity(nu, tau) != 0) exact = false;
          ++count;
        }
    report.add(make_check("inverse_square_identity_exact", {{"instances", count}},
                          exact ? 0.0 : 1.0, 0.0, exact, watch));
  }
  {
    Stopwatch watch;
    Rng rng(derive_seed(config.seed, 0xA11CE));
    bool exact = true;
    const int instances = 1000;
    for (int trial = 0; trial < instances; ++trial) {
      const int big_l = 2 + static_cast<int>(rng.next_u64() % 5);  // L in 2..6
      std::vector<Rational> alphas, betas;
      std::vector<long long> used;
      const auto fresh = [&]() {
        while (true) {
          const long long v = static_cast<long long>(rng.next_u64() % 41) - 20;
          if (std::find(used.begin(), used.end(), v) == used.end()) {
            used.push_back(v);
            return Rational(v);
          }
        }
      };
      for (int i = 0; i < big_l; ++i) alphas.push_back(fresh());
      for (int i = 0; i + 1 < big_l; ++i) betas.push_back(fresh());
      const int m = static_cast<int>(rng.next_u64() % static_cast<std::uint64_t>(big_l - 1));
      if (check_lagrange_identity(alphas, betas, m) != 0) exact = false;
    }
    report.add(make_check("lagrange_identity_random_exact", {{"instances", instances}},
                          exact ? 0.0 : 1.0, 0.0, exact, watch));
  }
  {
    Stopwatch watch;
    bool ok = true;
    for (int n = 0; n <= n_count; ++n) {
      Int square_sum = 0;
      for (const YoungDiagram& lambda : enumerate_partitions(n)) {
        const Int dim = num_tableaux(lambda);
        square_sum += dim * dim;
        if (Int(enumerate_tableaux(lambda).size()) != dim) ok = false;
        // Branching sum over parents.
        if (n >= 1) {
          Int branch = 0;
          for (const YoungDiagram& mu : parents(lambda)) branch += num_tableaux(mu);
          if (branch != dim) ok = false;
        }
      }
      if (square_sum != factorial(n)) ok = false;
    }
    report.add(make_check("tableau_counting_exact", {{"max_n", n_count}}, ok ? 0.0 : 1.0, 0.0,
                          ok, watch));
  }
  {
    Stopwatch watch;
    bool ok = true;
    for (int n = 0; n <= n_ratio; ++n)
      for (const YoungDiagram& lambda : enumerate_partitions(n)) {
        const auto seq = interlacing(lambda);
        long long sum = 0;
        for (size_t i = 0; i < seq.alphas.size(); ++i) {
          sum += seq.alphas[i];
          if (i + 1 < seq.alphas.size() && !(seq.alphas[i] < seq.betas[i])) ok = false;
          if (i + 1 < seq.alphas.size() && !(seq.betas[i] < seq.alphas[i + 1])) ok = false;
        }
        for (int b : seq.betas) sum -= b;
        if (sum != 0) ok = false;
        if (seq.alphas.size() != seq.betas.size() + 1) ok = false;
      }
    report.add(make_check("interlacing_invariants", {{"max_n", n_ratio}}, ok ? 0.0 : 1.0, 0.0,
                          ok, watch));
  }
  report.runtime_ms = total.elapsed_ms();
  return report;
}

VerificationReport run_symrep_suite(const SuiteConfig& config) {
  Stopwatch total;
  VerificationReport report;
  report.suite = "symrep";
  const int n_max = std::clamp(config.n, 3, 6);
  report.params = {{"n_max", n_max}, {"seed", config.seed}};

  {
    Stopwatch watch;
    double worst = 0.0;
    for (int n = 2; n <= n_max; ++n)
      for (const YoungDiagram& lambda : enumerate_partitions(n)) {
        std::vector<Eigen::MatrixXd> gens;
        for (int i = 1; i < n; ++i) gens.push_back(transposition_action(lambda, i));
        const auto dim = gens[0].rows();
        const Eigen::MatrixXd ident = Eigen::MatrixXd::Identity(dim, dim);
        for (size_t i = 0; i < gens.size(); ++i) {
          worst = std::max(worst, (gens[i] * gens[i] - ident).cwiseAbs().maxCoeff());
          worst = std::max(worst,
                           (gens[i] * gens[i].transpose() - ident).cwiseAbs().maxCoeff());
          for (size_t j = i + 2; j < gens.size(); ++j)
            worst = std::max(worst, (gens[i] * gens[j] - gens[j] * gens[i]).cwiseAbs().maxCoeff());
          if (i + 1 < gens.size()) {
            const Eigen::MatrixXd braid = gens[i] * gens[i + 1];
            worst = std::max(worst, (braid * braid * braid - ident).cwiseAbs().maxCoeff());
          }
        }
      }
    report.add(residual_check("coxeter_relations", {{"n_max", n_max}}, worst, 1e-12, watch));
  }
  {
    Stopwatch watch;
    Rng rng(derive_seed(config.seed, 0x5E9));
    double worst = 0.0;
    for (int n = 2; n <= n_max; ++n) {
      const auto group = symmetric_group(n);
      for (const YoungDiagram& lambda : enumerate_partitions(n))
        for (int trial = 0; trial < 8; ++trial) {
          const Permutation& a = group[rng.next_u64() % group.size()];
          const Permutation& b = group[rng.next_u64() % group.size()];
          worst = std::max(worst, (irrep_matrix(lambda, a * b) -
                                   irrep_matrix(lambda, a) * irrep_matrix(lambda, b))
                                      .cwiseAbs()
                                      .maxCoeff());
        }
    }
    report.add(residual_check("homomorphism_random_pairs", {{"n_max", n_max}}, worst, 1e-10,
                              watch));
  }
  {
    Stopwatch watch;
    double worst = 0.0;
    for (int n = 2; n <= n_max; ++n) {
      const auto parts = enumerate_partitions(n);
      // Class sizes: n! / prod(multiplicities! * part^multiplicity).
      for (size_t a = 0; a < parts.size(); ++a)
        for (size_t b = a; b < parts.size(); ++b) {
          double numeric = 0.0;
          for (const YoungDiagram& cls : parts) {
            Int z = 1;
            int run = 1;
            const auto& rows = cls.rows();
            for (size_t i = 0; i < rows.size(); ++i) {
              z *= rows[i];
              if (i + 1 < rows.size() && rows[i + 1] == rows[i])
                ++run;
              else {
                z *= factorial(run);
                run = 1;
              }
            }
            const Rational class_size = Rational(factorial(n), z);
            numeric += static_cast<double>(class_size) * character_of_class(parts[a], cls) *
                       character_of_class(parts[b], cls);
          }
          const double expected = (a == b) ? static_cast<double>(factorial(n)) : 0.0;
          worst = std::max(worst, std::abs(numeric - expected) / static_cast<double>(factorial(n)));
        }
    }
    report.add(residual_check("character_orthogonality", {{"n_max", n_max}}, worst, 1e-10,
                              watch));
  }
  {
    Stopwatch watch;
    double worst = 0.0;
    for (int n = 3; n <= n_max; ++n)
      for (const YoungDiagram& lambda : enumerate_partitions(n)) {
        const auto tabs = enumerate_tableaux(lambda);
        const int p = static_cast<int>(tabs.size());
        // Indices grouped by the shape of T-down.
        for (int i = 1; i <= n - 2; ++i) {
          const Eigen::MatrixXd big = transposition_action(lambda, i);
          for (int t = 0; t < p; ++t)
            for (int s = 0; s < p; ++s) {
              const YoungDiagram mt = tabs[static_cast<size_t>(t)].removed_last().shape();
              const YoungDiagram ms = tabs[static_cast<size_t>(s)].removed_last().shape();
              if (mt == ms) continue;
              worst = std::max(worst, std::abs(big(t, s)));  // cross-block must vanish
            }
          // Diagonal blocks equal the parent irrep matrices.
          for (const YoungDiagram& mu : parents(lambda)) {
            const auto mu_tabs = enumerate_tableaux(mu);
            const Eigen::MatrixXd small = transposition_action(mu, i);
            for (int t = 0; t < p; ++t) {
              if (!(tabs[static_cast<size_t>(t)].removed_last().shape() == mu)) continue;
              const auto td = tabs[static_cast<size_t>(t)].removed_last();
              const auto ti = static_cast<int>(
                  std::find(mu_tabs.begin(), mu_tabs.end(), td) - mu_tabs.begin());
              for (int s = 0; s < p; ++s) {
                if (!(tabs[static_cast<size_t>(s)].removed_last().shape() == mu)) continue;
                const auto sd = tabs[static_cast<size_t>(s)].removed_last();
                const auto si = static_cast<int>(
                    std::find(mu_tabs.begin(), mu_tabs.end(), sd) - mu_tabs.begin());
                worst = std::max(worst, std::abs(big(t, s) - small(ti, si)));
              }
            }
          }
        }
      }
    report.add(residual_check("branching_block_structure", {{"n_max", n_max}}, worst, 1e-10,
                              watch));
  }
  {
    Stopwatch watch;
    double worst = 0.0;
    const int n_proj = std::min(n_max, 5);
    for (int n = 2; n <= n_proj; ++n)
      for (const YoungDiagram& lambda : enumerate_partitions(n)) {
        const auto rep = [&](const Permutation& pi) -> Eigen::MatrixXcd {
          return irrep_matrix(lambda, pi).cast<Complex>();
        };
        // e_lambda acts as identity on P_lambda, as zero on other irreps.
        const auto dim = static_cast<Eigen::Index>(static_cast<int>(num_tableaux(lambda)));
        worst = std::max(worst, (isotypic_projector(lambda, rep) -
                                 Eigen::MatrixXcd::Identity(dim, dim))
                                    .cwiseAbs()
                                    .maxCoeff());
        for (const YoungDiagram& mu : enumerate_partitions(n)) {
          if (mu == lambda) continue;
          worst = std::max(
              worst, isotypic_projector(mu, rep).cwiseAbs().maxCoeff());
        }
        // Chain product reproduces |T><T|.
        const auto tabs = enumerate_tableaux(lambda);
        for (size_t t = 0; t < tabs.size(); ++t) {
          Eigen::MatrixXcd prod = Eigen::MatrixXcd::Identity(dim, dim);
          for (const YoungDiagram& step : tabs[t].chain()) {
            if (step.box_count() < 2) continue;
            const auto sub_rep = [&](const Permutation& pi) -> Eigen::MatrixXcd {
              // Embed S_k into S_n fixing the remaining points.
              std::vector<int> im(static_cast<size_t>(n));
              for (int x = 1; x <= n; ++x)
                im[static_cast<size_t>(x - 1)] = x <= pi.degree() ? pi(x) : x;
              return irrep_matrix(lambda, Permutation(std::move(im))).cast<Complex>();
            };
            prod = isotypic_projector(step, sub_rep) * prod;
          }
          Eigen::MatrixXcd expected = Eigen::MatrixXcd::Zero(dim, dim);
          expected(static_cast<Eigen::Index>(t), static_cast<Eigen::Index>(t)) = 1.0;
          worst = std::max(worst, (prod - expected).cwiseAbs().maxCoeff());
        }
      }
    report.add(residual_check("isotypic_projector_chain", {{"n_max", n_proj}}, worst, 1e-10,
                              watch));
  }
  report.runtime_ms = total.elapsed_ms();
  return report;
}

VerificationReport run_schurweyl_suite(const SuiteConfig& config) {
  Stopwatch total;
  VerificationReport report;
  report.suite = "schurweyl";
  const int d = config.d;
  const int n = config.n;
  report.params = {{"d", d}, {"n", n}, {"seed", config.seed}};
  const SchurBasis basis(d, n);

  {
    Stopwatch watch;
    report.add(residual_check("basis_orthonormality", {{"d", d}, {"n", n}},
                              basis.orthonormality_residual(), 1e-10, watch));
  }
  {
    Stopwatch watch;
    Int total_dim = 0;
    for (const SchurBlock& b : basis.blocks())
      total_dim += Int(b.dim_q) * Int(b.tableaux.size());
    Int expected = 1;
    for (int i = 0; i < n; ++i) expected *= d;
    report.add(make_check("completeness_dimension_sum", {{"d", d}, {"n", n}},
                          total_dim == expected ? 0.0 : 1.0, 0.0, total_dim == expected,
                          watch));
  }
  {
    Stopwatch watch;
    double worst = 0.0;
    std::vector<SystemLabel> labels;
    for (int i = 0; i < n; ++i) labels.push_back({i, d});
    Rng rng(derive_seed(config.seed, 0x5c));
    const auto group = symmetric_group(n);
    std::vector<Permutation> perms;
    for (int i = 1; i < n; ++i) perms.push_back(Permutation::adjacent_transposition(n, i));
    for (int trial = 0; trial < 4; ++trial)
      perms.push_back(group[rng.next_u64() % group.size()]);
    for (const Permutation& pi : perms) {
      const Eigen::MatrixXcd action = perm_action_matrix(pi, d);
      for (const SchurBlock& block : basis.blocks()) {
        if (block.dim_q == 0) continue;
        const Eigen::MatrixXd irrep = irrep_matrix(block.shape, pi);
        for (size_t t = 0; t < block.tableaux.size(); ++t) {
          Eigen::MatrixXcd expected =
              Eigen::MatrixXcd::Zero(basis.space_dim(), block.dim_q);
          for (size_t t2 = 0; t2 < block.tableaux.size(); ++t2)
            if (irrep(static_cast<Eigen::Index>(t2), static_cast<Eigen::Index>(t)) != 0.0)
              expected += irrep(static_cast<Eigen::Index>(t2), static_cast<Eigen::Index>(t)) *
                          block.frames[t2];
          worst = std::max(worst, (action * block.frames[t] - expected).cwiseAbs().maxCoeff());
        }
      }
    }
    report.add(residual_check("equivariance", {{"d", d}, {"n", n}}, worst, 1e-9, watch));
  }
  {
    Stopwatch watch;
    Rng rng(derive_seed(config.seed, 0xc0));
    double worst = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
      const Eigen::MatrixXcd u = haar_unitary(d, rng);
      Eigen::MatrixXcd un = u;
      for (int i = 1; i < n; ++i) un = kron_matrix(un, u);
      for (const SchurBlock& block : basis.blocks()) {
        if (block.dim_q == 0) continue;
        const int p = static_cast<int>(block.tableaux.size());
        Eigen::MatrixXcd op = embed_block_matrix(basis, block.shape,
                                                 Eigen::MatrixXcd::Identity(p, p));
        worst = std::max(worst, operator_norm(op * un - un * op));
      }
    }
    report.add(residual_check("embed_commutes_with_tensor_unitaries", {{"d", d}, {"n", n}},
                              worst, 1e-8, watch));
  }
  {
    Stopwatch watch;
    // Sum of identity embeds over all blocks is the full identity.
    Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(basis.space_dim(), basis.space_dim());
    for (const SchurBlock& block : basis.blocks()) {
      if (block.dim_q == 0) continue;
      const int p = static_cast<int>(block.tableaux.size());
      acc += embed_block_matrix(basis, block.shape, Eigen::MatrixXcd::Identity(p, p));
    }
    const double res =
        (acc - Eigen::MatrixXcd::Identity(basis.space_dim(), basis.space_dim()))
            .cwiseAbs()
            .maxCoeff();
    report.add(residual_check("embed_completeness", {{"d", d}, {"n", n}}, res, 1e-10, watch));
  }
  {
    Stopwatch watch;
    Rng rng(derive_seed(config.seed, 0xeb));
    double worst = 0.0;
    for (const SchurBlock& block : basis.blocks()) {
      if (block.dim_q == 0) continue;
      const int p = static_cast<int>(block.tableaux.size());
      Eigen::MatrixXcd m(p, p);
      for (int r = 0; r < p; ++r)
        for (int c = 0; c < p; ++c) m(r, c) = rng.complex_gaussian();
      const Eigen::MatrixXcd round =
          project_block(basis, block.shape, embed_block_matrix(basis, block.shape, m));
      worst = std::max(worst, (round - m).cwiseAbs().maxCoeff());
    }
    report.add(residual_check("embed_project_roundtrip", {{"d", d}, {"n", n}}, worst, 1e-10,
                              watch));
  }
  report.runtime_ms = total.elapsed_ms();
  return report;
}

VerificationReport run_raising_lowering_suite(const SuiteConfig& config) {
  Stopwatch total;
  VerificationReport report;
  report.suite = "raising-lowering";
  const int d = config.d;
  const int n_max = config.n;
  report.params = {{"d", d}, {"n_max", n_max}};

  for (int n = 2; n <= n_max; ++n) {
    const SchurBasis small(d, n - 1);
    const SchurBasis large(d, n);
    {
      Stopwatch watch;
      double worst = 0.0;
      long cases = 0;
      for (const SchurBlock& block : small.blocks()) {
        if (block.dim_q == 0) continue;
        for (const StandardTableau& t : block.tableaux)
          for (const StandardTableau& s : block.tableaux) {
            worst = std::max(worst, verify_raising(small, large, block.shape, t, s));
            ++cases;
          }
      }
      report.add(residual_check("raising", {{"d", d}, {"n", n}, {"cases", cases}}, worst,
                                config.tol, watch));
    }
    {
      Stopwatch watch;
      double worst = 0.0;
      long cases = 0;
      for (const SchurBlock& block : large.blocks()) {
        if (block.dim_q == 0) continue;
        for (const StandardTableau& t : block.tableaux)
          for (const StandardTableau& s : block.tableaux) {
            worst = std::max(worst, verify_lowering(small, large, block.shape, t, s));
            ++cases;
          }
      }
      report.add(residual_check("lowering", {{"d", d}, {"n", n}, {"cases", cases}}, worst,
                                config.tol, watch));
    }
  }
  report.runtime_ms = total.elapsed_ms();
  return report;
}

VerificationReport run_haar_suite(const SuiteConfig& config) {
  Stopwatch total;
  VerificationReport report;
  report.suite = "haar";
  const int d = config.d;
  const int n = config.n;
  const int k = n + 1;
  report.params = {{"d", d}, {"n", n}, {"k", k}, {"samples", config.samples},
                   {"seed", config.seed}};

  const SchurBasis basis(d, k);
  const LabeledOperator rep = haar_moment_rep(d, n, basis);
  {
    Stopwatch watch;
    const LabeledOperator wg = haar_moment_weingarten(d, k);
    report.add(residual_check("rep_vs_weingarten", {{"d", d}, {"k", k}},
                              operator_norm((rep - wg).matrix()), 1e-9, watch));
  }
  if (config.samples > 0) {
    Stopwatch watch;
    const LabeledOperator mc =
        haar_moment_mc(d, k, config.samples, config.seed, config.threads);
    report.add(residual_check("rep_vs_mc",
                              {{"d", d}, {"k", k}, {"samples", config.samples}},
                              operator_norm((rep - mc).matrix()), 3e-2, watch));
  }
  {
    Stopwatch watch;
    const PsdCheck psd = psd_check(rep.matrix());
    report.add(make_check("moment_psd", {{"d", d}, {"k", k}}, psd.min_eig,
                          config.tol * psd.scale, psd.passed(config.tol), watch));
  }
  {
    Stopwatch watch;
    // Partial trace over the even (output) labels leaves the identity.
    std::vector<int> evens;
    for (int i = 1; i <= k; ++i) evens.push_back(2 * i);
    const LabeledOperator traced = rep.partial_trace(evens);
    const double res =
        (traced.matrix() - Eigen::MatrixXcd::Identity(traced.dim(), traced.dim()))
            .cwiseAbs()
            .maxCoeff();
    report.add(residual_check("partial_trace_even_identity", {{"d", d}, {"k", k}}, res, 1e-10,
                              watch));
  }
  {
    Stopwatch watch;
    // Trace equals d^k (Schur-Weyl dimension sum).
    double expected = 1;
    for (int i = 0; i < k; ++i) expected *= d;
    const double res = std::abs(rep.trace().real() - expected);
    report.add(residual_check("moment_trace", {{"d", d}, {"k", k}}, res, 1e-9 * expected,
                              watch));
  }
  {
    Stopwatch watch;
    // Bi-unitary invariance: commutes with (V (x) W)^(x)k on tooth order.
    Rng rng(derive_seed(config.seed, 0xFAC7));
    double worst = 0.0;
    for (int trial = 0; trial < 10; ++trial) {
      const Eigen::MatrixXcd v = haar_unitary(d, rng);
      const Eigen::MatrixXcd w = haar_unitary(d, rng);
      LabeledOperator vw{{{2, d}, {1, d}}, kron_matrix(v, w)};
      LabeledOperator full = vw;
      for (int i = 2; i <= k; ++i)
        full = LabeledOperator::kron(
            full, LabeledOperator{{{2 * i, d}, {2 * i - 1, d}}, kron_matrix(v, w)});
      full = full.canonicalized();
      worst = std::max(worst, operator_norm(full.matrix() * rep.matrix() -
                                            rep.matrix() * full.matrix()));
    }
    report.add(residual_check("bi_unitary_invariance", {{"d", d}, {"k", k}}, worst, 1e-8,
                              watch));
  }
  {
    Stopwatch watch;
    // Invariance under simultaneous even/odd permutations.
    double worst = 0.0;
    std::vector<SystemLabel> evens, odds;
    for (int i = 1; i <= k; ++i) {
      evens.push_back({2 * i, d});
      odds.push_back({2 * i - 1, d});
    }
    std::vector<Permutation> perms;
    if (k <= 3) {
      perms = symmetric_group(k);
    } else {
      // Generators suffice: the action is a homomorphism.
      for (int i = 1; i < k; ++i) perms.push_back(Permutation::adjacent_transposition(k, i));
    }
    for (const Permutation& pi : perms) {
      const LabeledOperator action =
          LabeledOperator::kron(perm_action(pi, evens), perm_action(pi, odds)).canonicalized();
      const Eigen::MatrixXcd lhs = action.matrix() * rep.matrix() * action.matrix().adjoint();
      worst = std::max(worst, operator_norm(lhs - rep.matrix()));
    }
    report.add(residual_check("simultaneous_permutation_invariance", {{"d", d}, {"k", k}},
                              worst, 1e-8, watch));
  }
  report.runtime_ms = total.elapsed_ms();
  return report;
}

VerificationReport run_lemma38_suite(const SuiteConfig& config) {
  Stopwatch total;
  VerificationReport report;
  report.suite = "lemma38";
  report.params = {{"d", config.d}, {"n", config.n}};
  Stopwatch watch;
  const LoewnerReport lr = check_lemma38(config.d, config.n);
  report.add(make_check("moment_dominated_by_stair", {{"d", config.d}, {"n", config.n}},
                        lr.min_eig, config.tol * lr.scale, lr.passed(config.tol), watch));
  report.runtime_ms = total.elapsed_ms();
  return report;
}

VerificationReport run_lemma39_suite(const SuiteConfig& config) {
  Stopwatch total;
  VerificationReport report;
  report.suite = "lemma39";
  const int k_max = config.k.value_or(config.n);
  report.params = {{"d", config.d}, {"n", config.n}, {"k_max", k_max}};
  for (int k = 1; k <= k_max; ++k) {
    Stopwatch watch;
    const Lemma39Report lr = check_lemma39(config.d, config.n, k);
    if (lr.equality_case)
      report.add(make_check("base_case_equality", {{"d", config.d}, {"n", config.n}, {"k", k}},
                            lr.equality.residual, 1e-10, lr.equality.passed(1e-10), watch));
    else
      report.add(make_check("contraction_psd", {{"d", config.d}, {"n", config.n}, {"k", k}},
                            lr.loewner.min_eig, config.tol * lr.loewner.scale,
                            lr.loewner.passed(config.tol), watch));
  }
  report.runtime_ms = total.elapsed_ms();
  return report;
}

VerificationReport run_cor310_suite(const SuiteConfig& config) {
  Stopwatch total;
  VerificationReport report;
  report.suite = "cor310";
  const int d = config.d;
  const int k = config.k.value_or(config.n);
  const int n = std::max(config.n, k);
  report.params = {{"d", d}, {"n", n}, {"k", k}, {"combs", config.random_combs},
                   {"seed", config.seed}};

  const LabeledOperator a_k = stair_embed(d, n, k);
  {
    Stopwatch watch;
    const PsdCheck psd = psd_check(a_k.matrix());
    report.add(make_check("stair_psd", {{"d", d}, {"k", k}}, psd.min_eig,
                          config.tol * psd.scale, psd.passed(config.tol), watch));
    report.add(residual_check("stair_hermitian", {{"d", d}, {"k", k}}, psd.herm_residual,
                              1e-12 * psd.scale, watch));
  }
  {
    Stopwatch watch;
    double worst_excess = -1.0;
    bool labels_ok = true;
    for (int i = 0; i < config.random_combs; ++i) {
      const Comb comb = random_comb(d, k + 1, d, derive_seed(config.seed, 1000 + i));
      const Cor310Report cr = check_cor310(comb, d, n, k, a_k);
      worst_excess = std::max(worst_excess, cr.max_eig - cr.bound);
      labels_ok = labels_ok && cr.labels_ok;
    }
    report.add(make_check("random_comb_contraction",
                          {{"d", d}, {"k", k}, {"combs", config.random_combs}}, worst_excess,
                          config.tol, labels_ok && worst_excess <= config.tol, watch));
  }
  {
    Stopwatch watch;
    const Comb ident = identity_through_comb(d, k);
    const Cor310Report cr = check_cor310(ident, d, n, k, a_k);
    report.add(make_check("identity_comb_contraction", {{"d", d}, {"k", k}},
                          cr.max_eig - cr.bound, config.tol, cr.passed(config.tol), watch));
  }
  report.runtime_ms = total.elapsed_ms();
  return report;
}

VerificationReport run_thm36_suite(const SuiteConfig& config) {
  Stopwatch total;
  VerificationReport report;
  report.suite = "thm36";
  const int d = config.d;
  const int n = config.n;
  report.params = {{"d", d}, {"n", n}, {"combs", config.random_combs}, {"seed", config.seed}};
  const LabeledOperator moment = haar_moment_rep(d, n);

  {
    Stopwatch watch;
    double worst_eig_excess = -1.0;
    double worst_score_excess = -1.0;
    for (int i = 0; i < config.random_combs; ++i) {
      const Comb comb = random_comb(d, n + 1, d, derive_seed(config.seed, 2000 + i));
      const Thm36Report tr = check_thm36(comb, d, n, moment);
      worst_eig_excess = std::max(worst_eig_excess, tr.max_eig - tr.eig_bound);
      worst_score_excess = std::max(worst_score_excess, tr.score - tr.score_bound);
    }
    report.add(make_check("random_comb_eigenvalue_bound",
                          {{"d", d}, {"n", n}, {"combs", config.random_combs}},
                          worst_eig_excess, config.tol, worst_eig_excess <= config.tol, watch));
    report.add(make_check("random_comb_score_bound",
                          {{"d", d}, {"n", n}, {"combs", config.random_combs}},
                          worst_score_excess, config.tol, worst_score_excess <= config.tol,
                          watch));
  }
  {
    Stopwatch watch;
    const Comb ident = identity_through_comb(d, n);
    const Thm36Report tr = check_thm36(ident, d, n, moment);
    report.add(make_check("identity_comb_bound", {{"d", d}, {"n", n}},
                          tr.max_eig - tr.eig_bound, config.tol, tr.passed(config.tol), watch));
    report.add(make_check("identity_comb_score_is_one", {{"d", d}, {"n", n}},
                          std::abs(tr.score - 1.0), 1e-8, std::abs(tr.score - 1.0) <= 1e-8,
                          watch));
  }
  {
    Stopwatch watch;
    // Negative control: a scaled PSD non-comb violates the bound, showing
    // the comb precondition is load-bearing.
    Rng rng(derive_seed(config.seed, 0xBAD));
    Eigen::Index dim = 1;
    for (int i = 0; i < 2 * (n + 1); ++i) dim *= d;
    double trace = 1;
    for (int i = 0; i < n + 1; ++i) trace *= d;
    std::vector<SystemLabel> labels;
    for (int i = 0; i <= 2 * n + 1; ++i) labels.push_back({i, d});
    const double blowup = 50.0;
    LabeledOperator fake{labels,
                         blowup * random_psd(static_cast<int>(dim), trace, rng)};
    const Comb fake_comb{fake, [&] {
                           std::vector<Tooth> teeth;
                           for (int i = 0; i <= n; ++i) teeth.push_back({2 * i, 2 * i + 1});
                           return teeth;
                         }()};
    const bool not_comb = !is_comb(fake_comb).valid(config.tol);
    const LabeledOperator linked = link_product(fake_comb.op, moment);
    const double max_eig = max_eigenvalue(linked.matrix());
    const bool violates = max_eig > static_cast<double>(n + 1) / d + config.tol;
    report.add(make_check("non_comb_negative_control", {{"d", d}, {"n", n}}, max_eig,
                          static_cast<double>(n + 1) / d, not_comb && violates, watch));
  }
  report.runtime_ms = total.elapsed_ms();
  return report;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "young-identities", "symrep", "schurweyl", "raising-lowering", "haar",
      "lemma38",          "lemma39", "cor310",   "thm36",            "all"};
  return names;
}

VerificationReport run_suite(const SuiteConfig& config) {
  if (config.suite == "young-identities") return run_young_identities_suite(config);
  if (config.suite == "symrep") return run_symrep_suite(config);
  if (config.suite == "schurweyl") return run_schurweyl_suite(config);
  if (config.suite == "raising-lowering") return run_raising_lowering_suite(config);
  if (config.suite == "haar") return run_haar_suite(config);
  if (config.suite == "lemma38") return run_lemma38_suite(config);
  if (config.suite == "lemma39") return run_lemma39_suite(config);
  if (config.suite == "cor310") return run_cor310_suite(config);
  if (config.suite == "thm36") return run_thm36_suite(config);
  if (config.suite == "all") {
    Stopwatch total;
    VerificationReport report;
    report.suite = "all";
    report.params = {{"d", config.d}, {"n", config.n}, {"seed", config.seed}};
    for (const std::string& name : suite_names()) {
      if (name == "all") continue;
      SuiteConfig sub = config;
      sub.suite = name;
      VerificationReport part = run_suite(sub);
      for (CheckResult& c : part.checks) {
        c.name = part.suite + "/" + c.name;
        report.add(std::move(c));
      }
    }
    report.runtime_ms = total.elapsed_ms();
    return report;
  }
  throw std::invalid_argument("run_suite: unknown suite '" + config.suite + "'");
}

}  // namespace combforge
