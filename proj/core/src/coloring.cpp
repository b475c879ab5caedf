#include "gallai/coloring.hpp"

#include <charconv>
#include <istream>
#include <iterator>
#include <limits>
#include <ostream>

#include "gallai/errors.hpp"

namespace gallai {

BicliquePattern::BicliquePattern(std::size_t s_, std::size_t t_) : s(s_), t(t_) {
  if (s == 0 || t == 0) {
    throw Error(Errc::invalid_argument, "pattern sides must be positive");
  }
}

BipartiteColoring::BipartiteColoring(std::size_t n1, std::size_t n2, Color r,
                                     std::vector<Color> cells)
    : n1_(n1), n2_(n2), r_(r), cells_(std::move(cells)) {
  if (n1_ == 0 || n2_ == 0 || r_ == 0) {
    throw Error(Errc::invalid_argument, "n1, n2 and r must be positive");
  }
  if (n1_ > kMaxEdges / n2_) {
    throw Error(Errc::invalid_argument, "n1 * n2 exceeds the supported edge count");
  }
  if (cells_.size() != n1_ * n2_) {
    throw Error(Errc::dimension_mismatch, "expected " + std::to_string(n1_ * n2_) +
                                              " cells, got " + std::to_string(cells_.size()));
  }
  for (std::size_t k = 0; k < cells_.size(); ++k) {
    if (cells_[k] < 1 || cells_[k] > r_) {
      throw Error(Errc::color_out_of_range,
                  "cell (" + std::to_string(k / n2_ + 1) + ", " + std::to_string(k % n2_ + 1) +
                      ") has color " + std::to_string(cells_[k]) + " outside 1.." +
                      std::to_string(r_));
    }
  }
}

BipartiteColoring BipartiteColoring::from_rows(std::size_t n1, std::size_t n2, Color r,
                                               const std::vector<std::vector<Color>>& rows) {
  if (rows.size() != n1) {
    throw Error(Errc::dimension_mismatch,
                "expected " + std::to_string(n1) + " rows, got " + std::to_string(rows.size()));
  }
  std::vector<Color> cells;
  cells.reserve(n1 * n2);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != n2) {
      throw Error(Errc::dimension_mismatch, "row " + std::to_string(i + 1) + " has " +
                                                std::to_string(rows[i].size()) +
                                                " entries, expected " + std::to_string(n2));
    }
    cells.insert(cells.end(), rows[i].begin(), rows[i].end());
  }
  return BipartiteColoring(n1, n2, r, std::move(cells));
}

Color BipartiteColoring::at(std::size_t i, std::size_t j) const {
  if (i >= n1_ || j >= n2_) {
    throw Error(Errc::index_out_of_range, "cell (" + std::to_string(i) + ", " +
                                              std::to_string(j) + ") outside the grid");
  }
  return (*this)(i, j);
}

std::vector<std::vector<Color>> BipartiteColoring::rows() const {
  std::vector<std::vector<Color>> out(n1_);
  for (std::size_t i = 0; i < n1_; ++i) {
    auto r = row(i);
    out[i].assign(r.begin(), r.end());
  }
  return out;
}

namespace {

void check_color(const BipartiteColoring& coloring, Color color) {
  if (color < 1 || color > coloring.r()) {
    throw Error(Errc::color_out_of_range,
                "color " + std::to_string(color) + " outside 1.." + std::to_string(coloring.r()));
  }
}

}  // namespace

std::vector<IndexSet> per_color_rows(const BipartiteColoring& coloring, Color color) {
  check_color(coloring, color);
  std::vector<IndexSet> sets(coloring.n1(), IndexSet(coloring.n2()));
  for (std::size_t i = 0; i < coloring.n1(); ++i) {
    for (std::size_t j = 0; j < coloring.n2(); ++j) {
      if (coloring(i, j) == color) sets[i].set(j);
    }
  }
  return sets;
}

std::vector<IndexSet> per_color_cols(const BipartiteColoring& coloring, Color color) {
  check_color(coloring, color);
  std::vector<IndexSet> sets(coloring.n2(), IndexSet(coloring.n1()));
  for (std::size_t i = 0; i < coloring.n1(); ++i) {
    for (std::size_t j = 0; j < coloring.n2(); ++j) {
      if (coloring(i, j) == color) sets[j].set(i);
    }
  }
  return sets;
}

void write_coloring(std::ostream& out, const BipartiteColoring& coloring) {
  out << write_coloring(coloring);
}

std::string write_coloring(const BipartiteColoring& coloring) {
  std::string text;
  text.reserve(16 + coloring.cells().size() * 3);
  text += std::to_string(coloring.n1()) + ' ' + std::to_string(coloring.n2()) + ' ' +
          std::to_string(coloring.r()) + '\n';
  for (std::size_t i = 0; i < coloring.n1(); ++i) {
    for (std::size_t j = 0; j < coloring.n2(); ++j) {
      if (j > 0) text += ' ';
      text += std::to_string(coloring(i, j));
    }
    text += '\n';
  }
  return text;
}

namespace {

// Line-oriented tokenizer that tracks 1-based positions for error reports.
class LineReader {
 public:
  explicit LineReader(std::string_view text) : text_(text) {}

  bool at_end() const { return pos_ >= text_.size(); }
  std::size_t line() const { return line_; }

  // Parses exactly `count` unsigned decimal tokens separated by single
  // spaces and terminated by '\n'.
  std::vector<std::uint64_t> numbers(std::size_t count, const char* what) {
    if (at_end()) throw ParseError(line_, 1, std::string("missing ") + what);
    std::vector<std::uint64_t> values;
    values.reserve(count);
    std::size_t column = 1;
    while (true) {
      if (pos_ >= text_.size()) {
        throw ParseError(line_, column, "missing trailing newline");
      }
      const char* begin = text_.data() + pos_;
      const char* end = text_.data() + text_.size();
      std::uint64_t value = 0;
      auto [ptr, ec] = std::from_chars(begin, end, value);
      if (ec != std::errc() || ptr == begin) {
        throw ParseError(line_, column, std::string("expected a non-negative integer in ") + what);
      }
      values.push_back(value);
      std::size_t len = static_cast<std::size_t>(ptr - begin);
      pos_ += len;
      column += len;
      if (pos_ >= text_.size()) {
        throw ParseError(line_, column, "missing trailing newline");
      }
      char sep = text_[pos_];
      if (sep == '\n') {
        if (values.size() != count) {
          throw ParseError(line_, column, std::string("expected ") + std::to_string(count) +
                                              " values in " + what + ", got " +
                                              std::to_string(values.size()));
        }
        ++pos_;
        ++line_;
        return values;
      }
      if (sep != ' ') {
        throw ParseError(line_, column, std::string("unexpected character '") + sep + "'");
      }
      if (values.size() == count) {
        throw ParseError(line_, column, std::string("too many values in ") + what);
      }
      ++pos_;
      ++column;
    }
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
};

}  // namespace

BipartiteColoring read_coloring(std::string_view text) {
  LineReader reader(text);
  auto header = reader.numbers(3, "header \"n1 n2 r\"");
  const std::uint64_t n1 = header[0];
  const std::uint64_t n2 = header[1];
  const std::uint64_t r = header[2];
  if (n1 == 0 || n2 == 0 || r == 0) {
    throw ParseError(1, 1, "n1, n2 and r must be positive");
  }
  if (n1 > kMaxEdges / n2) {
    throw ParseError(1, 1, "n1 * n2 exceeds the supported edge count");
  }
  if (r > std::numeric_limits<Color>::max()) {
    throw ParseError(1, 1, "too many colors");
  }
  std::vector<Color> cells;
  cells.reserve(n1 * n2);
  for (std::uint64_t i = 0; i < n1; ++i) {
    const std::size_t line = reader.line();
    auto row = reader.numbers(n2, "grid row");
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (row[j] < 1 || row[j] > r) {
        throw ParseError(line, 1, "color " + std::to_string(row[j]) + " in column " +
                                      std::to_string(j + 1) + " outside 1.." + std::to_string(r));
      }
      cells.push_back(static_cast<Color>(row[j]));
    }
  }
  if (!reader.at_end()) {
    throw ParseError(reader.line(), 1, "unexpected content after the last grid row");
  }
  return BipartiteColoring(n1, n2, static_cast<Color>(r), std::move(cells));
}

BipartiteColoring read_coloring(std::istream& in) {
  std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return read_coloring(text);
}

}  // namespace gallai
