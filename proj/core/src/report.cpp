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

#include "combforge/report.hpp"

#include <chrono>
#include <sstream>

namespace combforge {

bool VerificationReport::pass() const {
  for (const CheckResult& c : checks)
    if (!c.pass) return false;
  return true;
}

void VerificationReport::add(CheckResult check) { checks.push_back(std::move(check)); }

Json VerificationReport::to_json() const {
  Json j;
  j["suite"] = suite;
  j["params"] = params;
  Json arr = Json::array();
  for (const CheckResult& c : checks) {
    Json jc;
    jc["name"] = c.name;
    jc["params"] = c.params;
    jc["value"] = c.value;
    jc["tol"] = c.tol;
    jc["pass"] = c.pass;
    jc["runtime_ms"] = c.runtime_ms;
    arr.push_back(std::move(jc));
  }
  j["checks"] = std::move(arr);
  j["pass"] = pass();
  j["runtime_ms"] = runtime_ms;
  return j;
}

std::string VerificationReport::to_csv() const {
  std::ostringstream out;
  out << "suite,check,params,value,tol,pass,runtime_ms\n";
  for (const CheckResult& c : checks) {
    std::string params = c.params.dump();
    std::string quoted = "\"";
    for (char ch : params) {
      if (ch == '"') quoted += "\"\"";
      else quoted += ch;
    }
    quoted += "\"";
    out << suite << ',' << c.name << ',' << quoted << ','
        << Json(c.value).dump() << ',' << Json(c.tol).dump() << ','
        << (c.pass ? "true" : "false") << ',' << Json(c.runtime_ms).dump() << '\n';
  }
  return out.str();
}

std::string VerificationReport::render(const std::string& format) const {
  if (format == "csv") return to_csv();
  if (format == "json") return to_json().dump(2) + "\n";
  throw std::invalid_argument("VerificationReport: unknown format '" + format + "'");
}

std::string VerificationReport::summary_lines() const {
  std::ostringstream out;
  for (const CheckResult& c : checks)
    out << (c.pass ? "[PASS] " : "[FAIL] ") << suite << '/' << c.name
        << "  value=" << c.value << " tol=" << c.tol << '\n';
  return out.str();
}

Stopwatch::Stopwatch() : start_(std::chrono::steady_clock::now()) {}

double Stopwatch::elapsed_ms() const {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
      .count();
}

}  // namespace combforge
