#include <doctest.h>

#include <random>
#include <set>
#include <utility>

#include "helpers.hpp"
#include "ssc/pattern.hpp"

using ssc::Pattern;

namespace {

// Independent oracle: collect 1-based nonzero coordinates.
std::set<std::pair<int, int>> nonzeros(const Pattern& p) {
  std::set<std::pair<int, int>> cells;
  for (std::size_t i = 0; i < p.rows(); ++i)
    for (std::size_t j = 0; j < p.cols(); ++j)
      if (p.at(i, j)) cells.insert({static_cast<int>(i) + 1,
                                    static_cast<int>(j) + 1});
  return cells;
}

}  // namespace

TEST_CASE("parse accepts the token grid format") {
  const Pattern p = Pattern::parse("* o\no *\n");
  CHECK(p.rows() == 2);
  CHECK(p.cols() == 2);
  CHECK(nonzeros(p) == std::set<std::pair<int, int>>{{1, 1}, {2, 2}});

  SUBCASE("all zero tokens are interchangeable") {
    CHECK(Pattern::parse("* 0\n. *\n") == p);
    CHECK(Pattern::parse("* .\n0 *\n") == p);
  }

  SUBCASE("blank lines and trailing whitespace are tolerated") {
    CHECK(Pattern::parse("\n* o \no *\n\n") == p);
  }
}

TEST_CASE("parse of the 6-state demo pair hits the exact cells") {
  const std::set<std::pair<int, int>> a_cells = {
      {1, 2}, {2, 1}, {3, 4}, {4, 5}, {5, 6}};
  const std::set<std::pair<int, int>> b_cells = {
      {1, 1}, {1, 2}, {2, 1}, {4, 1}, {6, 2}};
  CHECK(nonzeros(ssc::test::demo_a()) == a_cells);
  CHECK(nonzeros(ssc::test::demo_b()) == b_cells);
}

TEST_CASE("parse rejects bad input") {
  SUBCASE("unknown token is named") {
    try {
      Pattern::parse("* *\n* x\n");
      FAIL("expected ParseError");
    } catch (const ssc::ParseError& e) {
      CHECK(e.line() == 2);
      CHECK(std::string(e.what()).find("\"x\"") != std::string::npos);
    }
  }
  SUBCASE("ragged rows carry the line number") {
    try {
      Pattern::parse("* *\n*\n");
      FAIL("expected ParseError");
    } catch (const ssc::ParseError& e) {
      CHECK(e.line() == 2);
    }
  }
  SUBCASE("empty input") {
    CHECK_THROWS_AS(Pattern::parse("\n  \n"), ssc::ParseError);
  }
}

TEST_CASE("render always emits o and round-trips") {
  const Pattern p = Pattern::parse("* 0\n. *\n");
  CHECK(p.render() == "* o\no *\n");

  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    const std::size_t rows = 1 + rng() % 6;
    const std::size_t cols = 1 + rng() % 6;
    const Pattern q = ssc::test::random_pattern(rng, rows, cols, 0.4);
    CHECK(Pattern::parse(q.render()) == q);
  }
}

TEST_CASE("transpose") {
  Pattern p(1, 3);
  p.set(0, 1, true);
  const Pattern t = p.transposed();
  CHECK(t.rows() == 3);
  CHECK(t.cols() == 1);
  CHECK(nonzeros(t) == std::set<std::pair<int, int>>{{2, 1}});

  SUBCASE("involution") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 30; ++i) {
      const Pattern q =
          ssc::test::random_pattern(rng, 1 + rng() % 5, 1 + rng() % 5, 0.5);
      CHECK(q.transposed().transposed() == q);
    }
  }

  SUBCASE("demo input pattern transposes to the expected cells") {
    const std::set<std::pair<int, int>> cells = {
        {1, 1}, {1, 2}, {1, 4}, {2, 1}, {2, 6}};
    CHECK(nonzeros(ssc::test::demo_b().transposed()) == cells);
  }
}

TEST_CASE("hstack") {
  const Pattern id2 = Pattern::identity(2);
  CHECK(hstack(id2, Pattern::zero(2, 0)) == id2);

  SUBCASE("demo pair: column 7 of (A|B) carries the first input column") {
    const Pattern ab = hstack(ssc::test::demo_a(), ssc::test::demo_b());
    CHECK(ab.rows() == 6);
    CHECK(ab.cols() == 8);
    std::set<int> rows_hit;
    for (std::size_t i = 0; i < 6; ++i)
      if (ab.at(i, 6)) rows_hit.insert(static_cast<int>(i) + 1);
    CHECK(rows_hit == std::set<int>{1, 2, 4});
  }

  SUBCASE("column counts add up") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 30; ++i) {
      const std::size_t rows = 1 + rng() % 5;
      const Pattern p =
          ssc::test::random_pattern(rng, rows, rng() % 5, 0.5);
      const Pattern q =
          ssc::test::random_pattern(rng, rows, rng() % 5, 0.5);
      CHECK(hstack(p, q).cols() == p.cols() + q.cols());
    }
  }

  SUBCASE("row mismatch is an error") {
    CHECK_THROWS_AS(hstack(Pattern::identity(2), Pattern::identity(3)),
                    std::invalid_argument);
  }
}

TEST_CASE("or_add") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 30; ++i) {
    const std::size_t rows = 1 + rng() % 5;
    const std::size_t cols = 1 + rng() % 5;
    const Pattern p = ssc::test::random_pattern(rng, rows, cols, 0.4);
    const Pattern q = ssc::test::random_pattern(rng, rows, cols, 0.4);
    const Pattern r = ssc::test::random_pattern(rng, rows, cols, 0.4);
    CHECK(or_add(p, Pattern::zero(rows, cols)) == p);  // neutral element
    CHECK(or_add(p, p) == p);                          // idempotent
    CHECK(or_add(p, q) == or_add(q, p));               // commutative
    CHECK(or_add(or_add(p, q), r) == or_add(p, or_add(q, r)));
  }

  const Pattern decoupled = ssc::test::decoupled_a();
  CHECK(nonzeros(or_add(Pattern::identity(2), decoupled)) ==
        std::set<std::pair<int, int>>{{1, 1}, {2, 2}});

  CHECK_THROWS_AS(or_add(Pattern::identity(2), Pattern::identity(3)),
                  std::invalid_argument);
}

TEST_CASE("with_identity") {
  CHECK(nonzeros(with_identity(ssc::test::decoupled_a())) ==
        std::set<std::pair<int, int>>{{1, 1}, {2, 2}});
  CHECK(with_identity(Pattern::zero(4, 4)) == Pattern::identity(4));
  CHECK_THROWS_AS(with_identity(Pattern::zero(2, 3)), std::invalid_argument);

  SUBCASE("demo state pattern gains exactly the diagonal") {
    const Pattern augmented = with_identity(ssc::test::demo_a());
    const Pattern original = ssc::test::demo_a();
    // independent cell-by-cell expectation
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t j = 0; j < 6; ++j)
        CHECK(augmented.at(i, j) == (original.at(i, j) || i == j));
  }

  SUBCASE("idempotent") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 20; ++i) {
      const std::size_t n = 1 + rng() % 6;
      const Pattern p = ssc::test::random_pattern(rng, n, n, 0.4);
      CHECK(with_identity(with_identity(p)) == with_identity(p));
    }
  }
}

namespace {

// Reference predicate for the horizon pattern, written directly against the
// block layout rather than by placing blocks.
bool k_cell_reference(const Pattern& a, const Pattern& b, int horizon,
                      std::size_t row, std::size_t col) {
  const std::size_t n = a.rows();
  const std::size_t r = b.cols();
  const std::size_t T = static_cast<std::size_t>(horizon);
  const std::size_t block_row = row / n;        // 0-based block index
  const std::size_t in_row = row % n;
  if (col < n * T) {                            // state column groups
    const std::size_t group = col / n;
    const std::size_t in_col = col % n;
    if (group == block_row && block_row >= 1) return a.at(in_row, in_col);
    if (group == block_row + 1) return in_row == in_col;
    return false;
  }
  const std::size_t icol = col - n * T;         // input column groups
  return icol / r == block_row && b.at(in_row, icol % r);
}

}  // namespace

TEST_CASE("build_k block layout") {
  using ssc::build_k;

  SUBCASE("degenerate horizon is (0 | b)") {
    const Pattern b = ssc::test::demo_b();
    CHECK(build_k(ssc::test::demo_a(), b, 1) ==
          hstack(Pattern::zero(6, 6), b));
  }

  SUBCASE("2-state pair at T=2 lands on the expected cells") {
    const Pattern k =
        build_k(ssc::test::decoupled_a(), ssc::test::decoupled_b(), 2);
    CHECK(k.rows() == 4);
    CHECK(k.cols() == 6);
    const std::set<std::pair<int, int>> cells = {
        {1, 3}, {2, 4},          // identity block
        {3, 3},                  // state block
        {1, 5}, {2, 5},          // input block, first window step
        {3, 6}, {4, 6}};         // input block, second window step
    CHECK(nonzeros(k) == cells);
  }

  SUBCASE("cell-by-cell agreement with the reference predicate") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 25; ++i) {
      const std::size_t n = 1 + rng() % 4;
      const std::size_t r = rng() % 3;
      const int horizon = 1 + static_cast<int>(rng() % 4);
      const Pattern a = ssc::test::random_pattern(rng, n, n, 0.5);
      const Pattern b = ssc::test::random_pattern(rng, n, r, 0.5);
      const Pattern k = build_k(a, b, horizon);
      REQUIRE(k.rows() == n * static_cast<std::size_t>(horizon));
      REQUIRE(k.cols() == (n + r) * static_cast<std::size_t>(horizon));
      for (std::size_t row = 0; row < k.rows(); ++row)
        for (std::size_t col = 0; col < k.cols(); ++col)
          CHECK(k.at(row, col) == k_cell_reference(a, b, horizon, row, col));
    }
  }

  SUBCASE("input validation") {
    CHECK_THROWS_AS(build_k(Pattern::zero(2, 3), Pattern::zero(2, 1), 2),
                    std::invalid_argument);
    CHECK_THROWS_AS(build_k(Pattern::zero(2, 2), Pattern::zero(3, 1), 2),
                    std::invalid_argument);
    CHECK_THROWS_AS(build_k(Pattern::zero(2, 2), Pattern::zero(2, 1), 0),
                    std::invalid_argument);
  }
}

TEST_CASE("patterns without columns are legal") {
  const Pattern empty = Pattern::zero(3, 0);
  CHECK(empty.cols() == 0);
  CHECK(empty.nonzero_count() == 0);
  CHECK(hstack(empty, Pattern::identity(3)) == Pattern::identity(3));
  CHECK_THROWS_AS(Pattern::zero(0, 2), std::invalid_argument);
}
