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

#include "combforge/serialization.hpp"

#include <cstring>
#include <fstream>

#include <openssl/evp.h>

namespace combforge {

Json operator_to_json(const LabeledOperator& op) {
  Json j;
  Json labels = Json::array();
  for (const SystemLabel& l : op.labels()) labels.push_back({{"id", l.id}, {"dim", l.dim}});
  j["labels"] = std::move(labels);
  Json matrix = Json::array();
  for (Eigen::Index r = 0; r < op.dim(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < op.dim(); ++c)
      row.push_back({op.matrix()(r, c).real(), op.matrix()(r, c).imag()});
    matrix.push_back(std::move(row));
  }
  j["matrix"] = std::move(matrix);
  return j;
}

LabeledOperator operator_from_json(const Json& j) {
  std::vector<SystemLabel> labels;
  for (const Json& l : j.at("labels"))
    labels.push_back({l.at("id").get<int>(), l.at("dim").get<int>()});
  Eigen::Index dim = 1;
  for (const SystemLabel& l : labels) dim *= l.dim;
  Eigen::MatrixXcd m(dim, dim);
  const Json& rows = j.at("matrix");
  if (static_cast<Eigen::Index>(rows.size()) != dim)
    throw std::invalid_argument("operator_from_json: row count mismatch");
  for (Eigen::Index r = 0; r < dim; ++r) {
    const Json& row = rows[static_cast<size_t>(r)];
    if (static_cast<Eigen::Index>(row.size()) != dim)
      throw std::invalid_argument("operator_from_json: column count mismatch");
    for (Eigen::Index c = 0; c < dim; ++c)
      m(r, c) = Complex(row[static_cast<size_t>(c)][0].get<double>(),
                        row[static_cast<size_t>(c)][1].get<double>());
  }
  return {std::move(labels), std::move(m)};
}

namespace {

void put_u32(std::string& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

std::uint32_t get_u32(const std::string& in, size_t& pos) {
  if (pos + 4 > in.size()) throw std::invalid_argument("operator_from_binary: truncated");
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i)
    v |= static_cast<std::uint32_t>(static_cast<unsigned char>(in[pos + static_cast<size_t>(i)]))
         << (8 * i);
  pos += 4;
  return v;
}

void put_f64(std::string& out, double v) {
  std::uint64_t bits;
  std::memcpy(&bits, &v, 8);
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>((bits >> (8 * i)) & 0xff));
}

double get_f64(const std::string& in, size_t& pos) {
  if (pos + 8 > in.size()) throw std::invalid_argument("operator_from_binary: truncated");
  std::uint64_t bits = 0;
  for (int i = 0; i < 8; ++i)
    bits |= static_cast<std::uint64_t>(static_cast<unsigned char>(in[pos + static_cast<size_t>(i)]))
            << (8 * i);
  pos += 8;
  double v;
  std::memcpy(&v, &bits, 8);
  return v;
}

}  // namespace

std::string operator_to_binary(const LabeledOperator& op) {
  std::string out = "LOP1";
  put_u32(out, static_cast<std::uint32_t>(op.labels().size()));
  for (const SystemLabel& l : op.labels()) {
    put_u32(out, static_cast<std::uint32_t>(l.id));
    put_u32(out, static_cast<std::uint32_t>(l.dim));
  }
  for (Eigen::Index r = 0; r < op.dim(); ++r)
    for (Eigen::Index c = 0; c < op.dim(); ++c) {
      put_f64(out, op.matrix()(r, c).real());
      put_f64(out, op.matrix()(r, c).imag());
    }
  return out;
}

LabeledOperator operator_from_binary(const std::string& bytes) {
  if (bytes.size() < 8 || bytes.compare(0, 4, "LOP1") != 0)
    throw std::invalid_argument("operator_from_binary: missing LOP1 magic");
  size_t pos = 4;
  const std::uint32_t count = get_u32(bytes, pos);
  std::vector<SystemLabel> labels;
  Eigen::Index dim = 1;
  for (std::uint32_t i = 0; i < count; ++i) {
    const int id = static_cast<int>(get_u32(bytes, pos));
    const int d = static_cast<int>(get_u32(bytes, pos));
    labels.push_back({id, d});
    dim *= d;
  }
  Eigen::MatrixXcd m(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r)
    for (Eigen::Index c = 0; c < dim; ++c) {
      const double re = get_f64(bytes, pos);
      const double im = get_f64(bytes, pos);
      m(r, c) = Complex(re, im);
    }
  if (pos != bytes.size()) throw std::invalid_argument("operator_from_binary: trailing bytes");
  return {std::move(labels), std::move(m)};
}

Json comb_to_json(const Comb& comb) {
  Json j = operator_to_json(comb.op);
  Json teeth = Json::array();
  for (const Tooth& t : comb.teeth) teeth.push_back({t.in_id, t.out_id});
  j["teeth"] = std::move(teeth);
  return j;
}

Comb comb_from_json(const Json& j) {
  Comb comb;
  comb.op = operator_from_json(j);
  for (const Json& t : j.at("teeth")) comb.teeth.push_back({t[0].get<int>(), t[1].get<int>()});
  return comb;
}

void save_operator(const LabeledOperator& op, const std::filesystem::path& path) {
  if (path.extension() == ".json")
    write_file(path, operator_to_json(op).dump(2) + "\n");
  else
    write_file(path, operator_to_binary(op));
}

LabeledOperator load_operator(const std::filesystem::path& path) {
  const std::string bytes = read_file(path);
  if (path.extension() == ".json") return operator_from_json(Json::parse(bytes));
  return operator_from_binary(bytes);
}

void save_comb(const Comb& comb, const std::filesystem::path& path) {
  write_file(path, comb_to_json(comb).dump(2) + "\n");
}

Comb load_comb(const std::filesystem::path& path) {
  return comb_from_json(Json::parse(read_file(path)));
}

Json certificate_to_json(const Certificate& cert) {
  Json j;
  j["d"] = cert.d;
  j["n"] = cert.n;
  j["protocol_id"] = cert.protocol_id;
  j["input_sha256"] = cert.input_sha256;
  j["score"] = cert.score;
  j["avg_fidelity"] = cert.avg_fidelity;
  j["implied_avg_error"] = cert.implied_avg_error;
  j["thm36_max_eig"] = cert.thm36_max_eig;
  j["bounds"] = Json{{"average", cert.bound_average}, {"diamond", cert.bound_diamond}};
  j["pass"] = cert.pass;
  j["tol"] = cert.tol;
  j["runtime_ms"] = cert.runtime_ms;
  return j;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return bytes;
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw std::runtime_error("short write to " + path.string());
}

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (!EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr))
    throw std::runtime_error("sha256_hex: EVP_Digest failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(hex[digest[i] >> 4]);
    out.push_back(hex[digest[i] & 0xf]);
  }
  return out;
}

}  // namespace combforge
