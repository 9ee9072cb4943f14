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

#include <filesystem>
#include <string>

#include "combforge/certify.hpp"
#include "combforge/comb.hpp"
#include "combforge/report.hpp"

namespace combforge {

// Operator files; two interchangeable encodings.
//
// JSON: {"labels":[{"id":int,"dim":int},...],
//        "matrix":[[[re,im],...],...]}          (row-major, one row per array)
// Binary (.lop): magic "LOP1", u32 label count, then per label u32 id +
// u32 dim, then row-major interleaved little-endian f64 (re, im).
// Comb JSON adds "teeth":[[in_id,out_id],...].

Json operator_to_json(const LabeledOperator& op);
LabeledOperator operator_from_json(const Json& j);

std::string operator_to_binary(const LabeledOperator& op);
LabeledOperator operator_from_binary(const std::string& bytes);

Json comb_to_json(const Comb& comb);
Comb comb_from_json(const Json& j);

/// Extension picks the encoding: .json for JSON, anything else is binary.
void save_operator(const LabeledOperator& op, const std::filesystem::path& path);
LabeledOperator load_operator(const std::filesystem::path& path);

void save_comb(const Comb& comb, const std::filesystem::path& path);
Comb load_comb(const std::filesystem::path& path);

Json certificate_to_json(const Certificate& cert);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& contents);

/// Lowercase hex SHA-256 of a byte string.
std::string sha256_hex(const std::string& bytes);

}  // namespace combforge
