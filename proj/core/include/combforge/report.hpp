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

#include <chrono>
#include <string>
#include <vector>

#include <json.hpp>

namespace combforge {

using Json = nlohmann::ordered_json;

/// One named check: a residual (or extremal eigenvalue) against a tolerance.
struct CheckResult {
  std::string name;
  Json params = Json::object();
  double value = 0.0;
  double tol = 0.0;
  bool pass = false;
  double runtime_ms = 0.0;
};

/// Suite outcome; serializes to schema-stable JSON (fixed key order) and to
/// one-check-per-row CSV.  runtime_ms fields are the only nondeterministic
/// content.
struct VerificationReport {
  std::string suite;
  Json params = Json::object();
  std::vector<CheckResult> checks;
  double runtime_ms = 0.0;

  bool pass() const;
  void add(CheckResult check);
  Json to_json() const;
  std::string to_csv() const;
  /// Render per the format name ("json" or "csv").
  std::string render(const std::string& format) const;
  /// Pass/fail one-liners for terminal output.
  std::string summary_lines() const;
};

/// Stopwatch helper for filling runtime_ms fields.
class Stopwatch {
 public:
  Stopwatch();
  double elapsed_ms() const;

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace combforge
