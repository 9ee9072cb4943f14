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

// combforge: numerical certification toolkit for quantum-comb lower bounds.
//
//   combforge verify <suite>   run a verification suite, write a report
//   combforge moment           construct a Haar moment operator file
//   combforge certify          score protocol combs / print query bounds
//
// Exit codes: 0 all checks passed, 1 at least one check failed, 2 usage,
// configuration or I/O error.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "combforge/certify.hpp"
#include "combforge/serialization.hpp"
#include "combforge/stair.hpp"
#include "combforge/suites.hpp"

namespace {

using namespace combforge;

struct CliOptions {
  SuiteConfig suite;
  std::string out_path;
  std::uint64_t budget_bytes = 0;  // 0: keep default / env override
  int k_level = -1;

  // moment
  int moment_k = 2;
  std::string moment_method = "rep";

  // certify
  std::string comb_path;
  int random_combs = 0;
  std::string cert_dir = ".";

  // certify bound
  double eps = 0.0;
  std::string metric = "both";
};

void apply_budget(const CliOptions& opt) {
  if (const char* env = std::getenv("COMBFORGE_BUDGET_BYTES")) {
    const std::uint64_t v = std::strtoull(env, nullptr, 10);
    if (v > 0) set_memory_budget_bytes(v);
  }
  if (opt.budget_bytes > 0) set_memory_budget_bytes(opt.budget_bytes);
}

int run_verify(CliOptions& opt) {
  apply_budget(opt);
  if (opt.k_level >= 1) opt.suite.k = opt.k_level;
  const VerificationReport report = run_suite(opt.suite);
  std::cout << report.summary_lines();
  const std::string rendered = report.render(opt.suite.format);
  if (!opt.out_path.empty())
    write_file(opt.out_path, rendered);
  else if (opt.suite.format != "json")
    std::cout << rendered;
  std::cout << (report.pass() ? "PASS" : "FAIL") << " (" << report.checks.size()
            << " checks)\n";
  return report.pass() ? 0 : 1;
}

int run_moment(const CliOptions& opt) {
  apply_budget(opt);
  const int d = opt.suite.d;
  const int k = opt.moment_k;
  LabeledOperator moment;
  if (opt.moment_method == "rep")
    moment = haar_moment_rep(d, k - 1);
  else if (opt.moment_method == "weingarten")
    moment = haar_moment_weingarten(d, k);
  else
    moment = haar_moment_mc(d, k, opt.suite.samples, opt.suite.seed, opt.suite.threads);
  save_operator(moment, opt.out_path);
  std::cout << "wrote " << opt.out_path << " (d=" << d << ", k=" << k
            << ", method=" << opt.moment_method << ")\n";
  return 0;
}

int run_certify(const CliOptions& opt) {
  apply_budget(opt);
  const int d = opt.suite.d;
  const int n = opt.suite.n;
  const double tol = opt.suite.tol;
  std::filesystem::create_directories(opt.cert_dir);
  const LabeledOperator moment = haar_moment_rep(d, n);

  std::vector<std::pair<std::string, Comb>> inputs;
  if (!opt.comb_path.empty()) {
    const std::string bytes = read_file(opt.comb_path);
    Comb comb = comb_from_json(Json::parse(bytes));
    inputs.emplace_back(sha256_hex(bytes), std::move(comb));
  } else {
    for (int i = 0; i < opt.random_combs; ++i) {
      Comb comb = random_comb(d, n + 1, d, derive_seed(opt.suite.seed, static_cast<std::uint64_t>(i)));
      inputs.emplace_back(sha256_hex(operator_to_binary(comb.op)), std::move(comb));
    }
  }
  if (inputs.empty())
    throw std::invalid_argument("certify: give a comb file or --random N");

  bool all_pass = true;
  for (size_t i = 0; i < inputs.size(); ++i) {
    const std::string id = !opt.comb_path.empty()
                               ? std::filesystem::path(opt.comb_path).stem().string()
                               : "seeded-" + std::to_string(opt.suite.seed) + "-" +
                                     std::to_string(i);
    const Certificate cert =
        certify_comb(inputs[i].second, d, n, moment, tol, id, inputs[i].first);
    all_pass = all_pass && cert.pass;
    const auto path = std::filesystem::path(opt.cert_dir) /
                      ("certificate_" + std::to_string(i) + ".json");
    write_file(path, certificate_to_json(cert).dump(2) + "\n");
    std::cout << (cert.pass ? "[PASS] " : "[FAIL] ") << id << " score=" << cert.score
              << " avg_err=" << cert.implied_avg_error << " bound_avg=" << cert.bound_average
              << "\n";
  }
  return all_pass ? 0 : 1;
}

int run_bound(const CliOptions& opt) {
  const int d = opt.suite.d;
  if (opt.metric == "average" || opt.metric == "both")
    std::cout << "average " << implied_query_bound(d, opt.eps, Metric::kAverage) << "\n";
  if (opt.metric == "diamond" || opt.metric == "both")
    std::cout << "diamond " << implied_query_bound(d, opt.eps, Metric::kDiamond) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"combforge: quantum-comb lower-bound certification toolkit"};
  app.require_subcommand(1);
  CliOptions opt;
  opt.suite.threads = static_cast<int>(std::thread::hardware_concurrency());
  if (opt.suite.threads < 1) opt.suite.threads = 1;

  const auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--d", opt.suite.d, "local dimension")->check(CLI::Range(2, 16));
    cmd->add_option("--n", opt.suite.n, "number of queries / tensor factors");
    cmd->add_option("--tol", opt.suite.tol, "numeric tolerance (default 1e-8)");
    cmd->add_option("--seed", opt.suite.seed, "master seed for all randomness");
    cmd->add_option("--samples", opt.suite.samples, "Monte-Carlo sample count");
    cmd->add_option("--threads", opt.suite.threads, "worker threads");
    cmd->add_option("--budget-bytes", opt.budget_bytes,
                    "memory budget (overrides COMBFORGE_BUDGET_BYTES)");
  };

  std::string suite_help = "one of:";
  for (const auto& name : suite_names()) suite_help += " " + name;

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", opt.suite.suite, suite_help)
      ->required()
      ->check(CLI::IsMember(suite_names()));
  add_common(verify);
  verify->add_option("--k", opt.k_level, "contraction level for lemma39/cor310 (default n)");
  verify->add_option("--random-combs", opt.suite.random_combs,
                     "random combs per randomized check");
  verify->add_option("--format", opt.suite.format, "report format: json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  verify->add_option("--out", opt.out_path, "write the report to this file");

  CLI::App* moment = app.add_subcommand("moment", "construct a Haar moment operator");
  add_common(moment);
  moment->add_option("--k", opt.moment_k, "moment order (number of Choi factors)")
      ->check(CLI::Range(1, 6));
  moment->add_option("--method", opt.moment_method, "rep | weingarten | mc")
      ->check(CLI::IsMember({"rep", "weingarten", "mc"}));
  moment->add_option("-o,--out", opt.out_path, "output file (.json or binary .lop)")
      ->required();

  CLI::App* certify = app.add_subcommand("certify", "certify protocol combs");
  add_common(certify);
  certify->add_option("comb", opt.comb_path, "comb JSON file to score");
  certify->add_option("--random", opt.random_combs, "score N seeded random combs");
  certify->add_option("--out-dir", opt.cert_dir, "directory for certificate JSONs");

  CLI::App* bound = certify->add_subcommand("bound", "print implied query lower bounds");
  bound->fallthrough();  // lets --d etc. reach the parent certify options
  bound->add_option("--eps", opt.eps, "error parameter in [0,1]")->required();
  bound->add_option("--metric", opt.metric, "average | diamond | both")
      ->check(CLI::IsMember({"average", "diamond", "both"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // usage/config errors exit 2; --help exits 0
  }

  try {
    if (*bound) return run_bound(opt);
    if (*verify) return run_verify(opt);
    if (*certify) return run_certify(opt);
    if (*moment) return run_moment(opt);
  } catch (const BudgetError& e) {
    std::cerr << "budget error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
