#include "gallai/certificate.hpp"

#include <array>
#include <cstdio>

#include <openssl/evp.h>

#include "gallai/errors.hpp"
#include "json.hpp"

namespace gallai {

const char* to_string(BicliqueKind kind) noexcept {
  return kind == BicliqueKind::monochromatic ? "mono" : "rainbow";
}

BicliqueCertificate make_certificate(const BipartiteColoring& coloring, BicliqueKind kind,
                                     std::vector<std::size_t> rows,
                                     std::vector<std::size_t> cols) {
  BicliqueCertificate cert{kind, std::move(rows), std::move(cols), {}};
  cert.colors.reserve(cert.rows.size());
  for (std::size_t i : cert.rows) {
    std::vector<Color> line;
    line.reserve(cert.cols.size());
    for (std::size_t j : cert.cols) line.push_back(coloring.at(i, j));
    cert.colors.push_back(std::move(line));
  }
  return cert;
}

std::string sha256_hex(std::string_view bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int length = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest.data(), &length, EVP_sha256(), nullptr) !=
      1) {
    throw std::runtime_error("SHA-256 digest failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string hex;
  hex.reserve(length * 2);
  for (unsigned int k = 0; k < length; ++k) {
    hex += kHex[digest[k] >> 4];
    hex += kHex[digest[k] & 0xF];
  }
  return hex;
}

std::string coloring_digest(const BipartiteColoring& coloring) {
  return sha256_hex(write_coloring(coloring));
}

std::string write_certificate(const BicliqueCertificate& certificate,
                              const BipartiteColoring& source) {
  return write_certificate(certificate, coloring_digest(source));
}

std::string write_certificate(const BicliqueCertificate& certificate,
                              std::string_view source_hash) {
  nlohmann::ordered_json doc;
  doc["kind"] = to_string(certificate.kind);
  auto rows = nlohmann::ordered_json::array();
  for (auto i : certificate.rows) rows.push_back(i + 1);
  auto cols = nlohmann::ordered_json::array();
  for (auto j : certificate.cols) cols.push_back(j + 1);
  doc["rows"] = std::move(rows);
  doc["cols"] = std::move(cols);
  doc["colors"] = certificate.colors;
  doc["source_hash"] = std::string(source_hash);
  return doc.dump() + "\n";
}

namespace {

std::vector<std::size_t> read_indices(const nlohmann::json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_array()) {
    throw ParseError(1, 1, std::string("certificate field '") + key + "' must be an array");
  }
  std::vector<std::size_t> out;
  for (const auto& v : doc[key]) {
    if (!v.is_number_unsigned() || v.get<std::uint64_t>() == 0) {
      throw ParseError(1, 1, std::string("certificate field '") + key +
                                 "' must hold positive integers");
    }
    out.push_back(v.get<std::size_t>() - 1);
  }
  return out;
}

}  // namespace

CertificateDocument read_certificate(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(1, e.byte, e.what());
  }
  if (!doc.is_object()) throw ParseError(1, 1, "certificate must be a JSON object");

  CertificateDocument out{};
  if (!doc.contains("kind") || !doc["kind"].is_string()) {
    throw ParseError(1, 1, "certificate field 'kind' must be a string");
  }
  const auto kind = doc["kind"].get<std::string>();
  if (kind == "mono") {
    out.certificate.kind = BicliqueKind::monochromatic;
  } else if (kind == "rainbow") {
    out.certificate.kind = BicliqueKind::rainbow;
  } else {
    throw ParseError(1, 1, "certificate kind must be \"mono\" or \"rainbow\"");
  }
  out.certificate.rows = read_indices(doc, "rows");
  out.certificate.cols = read_indices(doc, "cols");

  if (!doc.contains("colors") || !doc["colors"].is_array()) {
    throw ParseError(1, 1, "certificate field 'colors' must be an array of arrays");
  }
  for (const auto& line : doc["colors"]) {
    if (!line.is_array()) throw ParseError(1, 1, "certificate colors must be arrays");
    std::vector<Color> row;
    for (const auto& v : line) {
      if (!v.is_number_unsigned()) throw ParseError(1, 1, "colors must be positive integers");
      row.push_back(v.get<Color>());
    }
    out.certificate.colors.push_back(std::move(row));
  }
  if (!doc.contains("source_hash") || !doc["source_hash"].is_string()) {
    throw ParseError(1, 1, "certificate field 'source_hash' must be a string");
  }
  out.source_hash = doc["source_hash"].get<std::string>();
  return out;
}

}  // namespace gallai
