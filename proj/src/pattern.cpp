#include "ssc/pattern.hpp"

#include <sstream>

namespace ssc {

Pattern::Pattern(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), mask_(rows * cols, false) {
  if (rows == 0)
    throw std::invalid_argument("Pattern: row count must be positive");
}

Pattern Pattern::identity(std::size_t n) {
  Pattern p(n, n);
  for (std::size_t i = 0; i < n; ++i) p.set(i, i, true);
  return p;
}

Pattern Pattern::parse(std::string_view text) {
  std::vector<std::vector<bool>> grid;
  std::size_t cols = 0;
  int first_line = 0;  // line that fixed the column count

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, eol == std::string_view::npos ? text.size() - pos
                                                       : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    std::vector<bool> row;
    std::istringstream tokens{std::string(line)};
    std::string tok;
    while (tokens >> tok) {
      if (tok == "*") {
        row.push_back(true);
      } else if (tok == "o" || tok == "0" || tok == ".") {
        row.push_back(false);
      } else {
        throw ParseError("unknown token \"" + tok + "\"", line_no);
      }
    }
    if (row.empty()) continue;  // blank line

    if (grid.empty()) {
      cols = row.size();
      first_line = line_no;
    } else if (row.size() != cols) {
      throw ParseError("row has " + std::to_string(row.size()) +
                           " tokens, expected " + std::to_string(cols) +
                           " (as on line " + std::to_string(first_line) + ")",
                       line_no);
    }
    grid.push_back(std::move(row));
  }

  if (grid.empty()) throw ParseError("pattern text contains no rows", 1);

  Pattern p(grid.size(), cols);
  for (std::size_t i = 0; i < grid.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) p.set(i, j, grid[i][j]);
  return p;
}

std::size_t Pattern::nonzero_count() const {
  std::size_t count = 0;
  for (bool cell : mask_) count += cell ? 1 : 0;
  return count;
}

Pattern Pattern::transposed() const {
  if (cols_ == 0)
    throw std::invalid_argument("Pattern: cannot transpose a 0-column pattern "
                                "(rows must stay positive)");
  Pattern t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.set(j, i, at(i, j));
  return t;
}

std::string Pattern::render() const {
  std::string out;
  out.reserve(rows_ * (2 * cols_));
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j > 0) out += ' ';
      out += at(i, j) ? '*' : 'o';
    }
    out += '\n';
  }
  return out;
}

Pattern hstack(const Pattern& p, const Pattern& q) {
  if (p.rows() != q.rows())
    throw std::invalid_argument("hstack: row mismatch (" +
                                std::to_string(p.rows()) + " vs " +
                                std::to_string(q.rows()) + ")");
  Pattern out(p.rows(), p.cols() + q.cols());
  for (std::size_t i = 0; i < p.rows(); ++i) {
    for (std::size_t j = 0; j < p.cols(); ++j) out.set(i, j, p.at(i, j));
    for (std::size_t j = 0; j < q.cols(); ++j)
      out.set(i, p.cols() + j, q.at(i, j));
  }
  return out;
}

Pattern or_add(const Pattern& p, const Pattern& q) {
  if (p.rows() != q.rows() || p.cols() != q.cols())
    throw std::invalid_argument(
        "or_add: dimension mismatch (" + std::to_string(p.rows()) + "x" +
        std::to_string(p.cols()) + " vs " + std::to_string(q.rows()) + "x" +
        std::to_string(q.cols()) + ")");
  Pattern out(p.rows(), p.cols());
  for (std::size_t i = 0; i < p.rows(); ++i)
    for (std::size_t j = 0; j < p.cols(); ++j)
      out.set(i, j, p.at(i, j) || q.at(i, j));
  return out;
}

Pattern with_identity(const Pattern& a) {
  if (!a.square())
    throw std::invalid_argument("with_identity: pattern must be square, got " +
                                std::to_string(a.rows()) + "x" +
                                std::to_string(a.cols()));
  return or_add(a, Pattern::identity(a.rows()));
}

Pattern build_k(const Pattern& a, const Pattern& b, int horizon) {
  if (!a.square())
    throw std::invalid_argument("build_k: state pattern must be square, got " +
                                std::to_string(a.rows()) + "x" +
                                std::to_string(a.cols()));
  if (b.rows() != a.rows())
    throw std::invalid_argument("build_k: row mismatch (" +
                                std::to_string(a.rows()) + " vs " +
                                std::to_string(b.rows()) + ")");
  if (horizon < 1)
    throw std::invalid_argument("build_k: horizon must be >= 1, got " +
                                std::to_string(horizon));

  const std::size_t n = a.rows();
  const std::size_t r = b.cols();
  const std::size_t T = static_cast<std::size_t>(horizon);

  Pattern k(n * T, (n + r) * T);
  for (std::size_t i = 1; i <= T; ++i) {
    const std::size_t row0 = (i - 1) * n;
    // state group i: block row 1 stays zero, later ones carry `a`
    if (i >= 2)
      for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v)
          if (a.at(u, v)) k.set(row0 + u, (i - 1) * n + v, true);
    // identity in state group i+1
    if (i <= T - 1)
      for (std::size_t u = 0; u < n; ++u) k.set(row0 + u, i * n + u, true);
    // b in input group i
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = 0; v < r; ++v)
        if (b.at(u, v)) k.set(row0 + u, T * n + (i - 1) * r + v, true);
  }
  return k;
}

}  // namespace ssc
