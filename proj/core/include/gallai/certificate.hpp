#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "gallai/coloring.hpp"

namespace gallai {

enum class BicliqueKind { monochromatic, rainbow };

const char* to_string(BicliqueKind kind) noexcept;

/// Witness of a monochromatic or rainbow K_{s,t}: s rows, t columns and the
/// s x t block of edge colors they span. Rows and columns are 0-based and
/// listed in ascending order when produced by the detectors.
struct BicliqueCertificate {
  BicliqueKind kind;
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
  std::vector<std::vector<Color>> colors;

  friend bool operator==(const BicliqueCertificate&, const BicliqueCertificate&) = default;
};

/// Reads the block spanned by rows x cols out of the coloring.
BicliqueCertificate make_certificate(const BipartiteColoring& coloring, BicliqueKind kind,
                                     std::vector<std::size_t> rows,
                                     std::vector<std::size_t> cols);

/// Lowercase hex SHA-256 of arbitrary bytes.
std::string sha256_hex(std::string_view bytes);

/// SHA-256 of the canonical coloring file bytes.
std::string coloring_digest(const BipartiteColoring& coloring);

struct CertificateDocument {
  BicliqueCertificate certificate;
  std::string source_hash;
};

/// Single JSON object with keys kind ("mono" | "rainbow"), rows, cols,
/// colors and source_hash. Rows and columns are written 1-based.
std::string write_certificate(const BicliqueCertificate& certificate,
                              const BipartiteColoring& source);
std::string write_certificate(const BicliqueCertificate& certificate,
                              std::string_view source_hash);

/// Inverse of write_certificate. Structural checks only; use
/// verify_certificate for semantic validity against a coloring.
CertificateDocument read_certificate(std::string_view text);

}  // namespace gallai
