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

#include <filesystem>

#include <catch2/catch_amalgamated.hpp>

#include "combforge/serialization.hpp"

using namespace combforge;

namespace {

LabeledOperator random_operator(std::uint64_t seed) {
  Rng rng(seed);
  Eigen::MatrixXcd m(6, 6);
  for (int r = 0; r < 6; ++r)
    for (int c = 0; c < 6; ++c) m(r, c) = rng.complex_gaussian();
  return {{{3, 2}, {7, 3}}, std::move(m)};
}

}  // namespace

TEST_CASE("operator json round trip") {
  const LabeledOperator op = random_operator(1);
  const LabeledOperator back = operator_from_json(operator_to_json(op));
  CHECK(back.labels() == op.labels());
  CHECK((back.matrix() - op.matrix()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("operator binary round trip is bit exact") {
  const LabeledOperator op = random_operator(2);
  const std::string bytes = operator_to_binary(op);
  CHECK(bytes.substr(0, 4) == "LOP1");
  const LabeledOperator back = operator_from_binary(bytes);
  CHECK(back.labels() == op.labels());
  CHECK((back.matrix() - op.matrix()).cwiseAbs().maxCoeff() == 0.0);
  CHECK(operator_to_binary(back) == bytes);

  CHECK_THROWS_AS(operator_from_binary("XXXX"), std::invalid_argument);
  CHECK_THROWS_AS(operator_from_binary(bytes.substr(0, bytes.size() - 3)),
                  std::invalid_argument);
}

TEST_CASE("file save and load pick the format from the extension") {
  const auto dir = std::filesystem::temp_directory_path() / "combforge_test_io";
  std::filesystem::create_directories(dir);
  const LabeledOperator op = random_operator(3);

  save_operator(op, dir / "op.json");
  save_operator(op, dir / "op.lop");
  const LabeledOperator from_json = load_operator(dir / "op.json");
  const LabeledOperator from_bin = load_operator(dir / "op.lop");
  CHECK((from_json.matrix() - op.matrix()).cwiseAbs().maxCoeff() == 0.0);
  CHECK((from_bin.matrix() - op.matrix()).cwiseAbs().maxCoeff() == 0.0);

  const Comb comb = random_comb(2, 2, 2, 4);
  save_comb(comb, dir / "comb.json");
  const Comb back = load_comb(dir / "comb.json");
  CHECK(back.teeth == comb.teeth);
  CHECK((back.op.matrix() - comb.op.matrix()).cwiseAbs().maxCoeff() == 0.0);
  std::filesystem::remove_all(dir);
}

TEST_CASE("certificate json schema") {
  Certificate cert;
  cert.d = 2;
  cert.n = 1;
  cert.protocol_id = "x";
  cert.score = 1.25;
  const Json j = certificate_to_json(cert);
  const std::vector<std::string> expected_keys{
      "d",    "n",       "protocol_id", "input_sha256", "score", "avg_fidelity",
      "implied_avg_error", "thm36_max_eig", "bounds", "pass", "tol", "runtime_ms"};
  size_t idx = 0;
  for (auto it = j.begin(); it != j.end(); ++it, ++idx) CHECK(it.key() == expected_keys[idx]);
  CHECK(j["bounds"].contains("average"));
  CHECK(j["bounds"].contains("diamond"));
}

TEST_CASE("sha256 of known vectors") {
  CHECK(sha256_hex("") ==
        "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  CHECK(sha256_hex("abc") ==
        "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}
