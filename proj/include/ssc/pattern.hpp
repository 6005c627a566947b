#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ssc {

/// Error raised by Pattern::parse. Line numbers are 1-based and refer to the
/// original input text.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& msg, int line)
      : std::runtime_error(msg), line_(line) {}
  int line() const noexcept { return line_; }

private:
  int line_;
};

/// A nonzero pattern: a rows x cols boolean mask. A true cell marks an entry
/// that is nonzero in every matrix of the class, a false cell an entry that
/// is identically zero. Value type; treat instances as immutable once built,
/// they are then safe to share across threads.
///
/// cols == 0 is legal (systems without inputs or outputs); rows must be
/// positive.
class Pattern {
public:
  Pattern(std::size_t rows, std::size_t cols);

  static Pattern zero(std::size_t rows, std::size_t cols) {
    return Pattern(rows, cols);
  }
  static Pattern identity(std::size_t n);

  /// Parse the text format: one matrix row per line, tokens separated by
  /// whitespace, `*` = nonzero, `o`/`0`/`.` = zero. Blank lines are skipped.
  static Pattern parse(std::string_view text);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  /// Cell accessors, 0-indexed.
  bool at(std::size_t i, std::size_t j) const { return mask_[index(i, j)]; }
  void set(std::size_t i, std::size_t j, bool nonzero) {
    mask_[index(i, j)] = nonzero;
  }

  std::size_t nonzero_count() const;

  Pattern transposed() const;

  /// Render in the text format; zeros are always emitted as `o`.
  std::string render() const;

  friend bool operator==(const Pattern& a, const Pattern& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.mask_ == b.mask_;
  }
  friend bool operator!=(const Pattern& a, const Pattern& b) {
    return !(a == b);
  }

private:
  std::size_t index(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_)
      throw std::out_of_range("Pattern: cell (" + std::to_string(i) + "," +
                              std::to_string(j) + ") outside " +
                              std::to_string(rows_) + "x" +
                              std::to_string(cols_));
    return i * cols_ + j;
  }

  std::size_t rows_;
  std::size_t cols_;
  std::vector<bool> mask_;  // row-major
};

/// Columns of p followed by columns of q. Requires equal row counts.
Pattern hstack(const Pattern& p, const Pattern& q);

/// Entrywise union of the nonzero sets. Requires equal dimensions.
Pattern or_add(const Pattern& p, const Pattern& q);

/// or_add(a, identity); loop augmentation of a square pattern.
Pattern with_identity(const Pattern& a);

/// The horizon pattern for a window of length T = horizon >= 1: nT block
/// rows of height n, T state column groups of width n followed by T input
/// column groups of width r. Block row i holds `a` in state group i (i >= 2),
/// the identity in state group i+1 (i <= T-1) and `b` in input group i;
/// state group 1 is empty. For T = 1 this is (zero n x n, b).
Pattern build_k(const Pattern& a, const Pattern& b, int horizon);

}  // namespace ssc
