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
#include <optional>
#include <string>

#include "combforge/report.hpp"

namespace combforge {

/// Parameters shared by the verification suites.  Sizes default to the
/// desk-scale ladder the checks are specified at.
struct SuiteConfig {
  std::string suite = "all";
  int d = 2;
  int n = 1;
  std::optional<int> k;  // lemma39/cor310 contraction level; defaults to n
  double tol = 1e-8;
  std::uint64_t seed = 1;
  std::uint64_t samples = 100000;
  int threads = 1;
  int random_combs = 50;
  std::string format = "json";  // or "csv"
};

VerificationReport run_young_identities_suite(const SuiteConfig& config);
VerificationReport run_symrep_suite(const SuiteConfig& config);
VerificationReport run_schurweyl_suite(const SuiteConfig& config);
VerificationReport run_raising_lowering_suite(const SuiteConfig& config);
VerificationReport run_haar_suite(const SuiteConfig& config);
VerificationReport run_lemma38_suite(const SuiteConfig& config);
VerificationReport run_lemma39_suite(const SuiteConfig& config);
VerificationReport run_cor310_suite(const SuiteConfig& config);
VerificationReport run_thm36_suite(const SuiteConfig& config);

/// Dispatch by config.suite; "all" concatenates every suite into one report.
VerificationReport run_suite(const SuiteConfig& config);

const std::vector<std::string>& suite_names();

}  // namespace combforge
