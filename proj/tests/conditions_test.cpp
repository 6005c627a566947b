#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "ssc/conditions.hpp"

using ssc::brute_check;
using ssc::check_g1;
using ssc::check_g2;
using ssc::check_g3;
using ssc::check_g4;
using ssc::Condition;
using ssc::Pattern;
using ssc::reduce;
using ssc::ReduceResult;
using ssc::SystemGraph;
using ssc::Verdict;
using ssc::VertexSet;
using ssc::violates;

TEST_CASE("reduction trace on the demo pair, mode 0") {
  const SystemGraph g(ssc::test::demo_a(), ssc::test::demo_b());
  const ReduceResult r = reduce(g, 0);
  REQUIRE(!r.steps.empty());
  CHECK(r.steps.front().tset == VertexSet({1, 2, 4, 5, 6}));
  CHECK(r.steps.front().picked == 1);  // smallest-index pick
  CHECK(r.steps.front().removed == VertexSet{2});
  CHECK(r.residual.empty());
  CHECK(r.steps.size() <= 6);  // at most n iterations
}

TEST_CASE("reduction trace on the demo pair, mode 1") {
  const SystemGraph g(ssc::test::demo_a(), ssc::test::demo_b());
  const ReduceResult r = reduce(g, 1);
  REQUIRE(r.steps.size() == 6);

  // First iteration: no candidate survives the filter, vertex 3 has no
  // predecessor in the remaining set.
  CHECK(r.steps[0].tset.empty());
  CHECK(r.steps[0].via_no_predecessor);
  CHECK(r.steps[0].removed == VertexSet{3});

  // Then 4, 5, 6 the same way; vertex 1 falls via the candidate branch
  // (second input column), vertex 2 again via no-predecessor.
  const std::vector<VertexSet> removed = {VertexSet{3}, VertexSet{4},
                                          VertexSet{5}, VertexSet{6},
                                          VertexSet{1}, VertexSet{2}};
  const std::vector<bool> fallback = {true, true, true, true, false, true};
  for (std::size_t i = 0; i < removed.size(); ++i) {
    CHECK(r.steps[i].removed == removed[i]);
    CHECK(r.steps[i].via_no_predecessor == fallback[i]);
  }
  CHECK(r.steps[4].picked == 8);
  CHECK(r.residual.empty());
}

TEST_CASE("reduction trace on the 2-state pair, mode 1") {
  const SystemGraph g(ssc::test::decoupled_a(), ssc::test::decoupled_b());
  const ReduceResult r = reduce(g, 1);
  REQUIRE(r.steps.size() == 2);
  // {1,2} is not contained in its predecessor set; vertex 2 goes first.
  CHECK(r.steps[0].via_no_predecessor);
  CHECK(r.steps[0].picked == 2);
  // Then the input column (vertex 3) singles out {1} and clears it.
  CHECK_FALSE(r.steps[1].via_no_predecessor);
  CHECK(r.steps[1].picked == 3);
  CHECK(r.steps[1].tset == VertexSet{3});
  CHECK(r.residual.empty());
}

TEST_CASE("reduce validates its mode") {
  const SystemGraph g(Pattern::identity(2), Pattern::zero(2, 0));
  CHECK_THROWS_AS(reduce(g, 2), std::invalid_argument);
}

TEST_CASE("check_g1") {
  CHECK(check_g1(ssc::test::demo_a(), ssc::test::demo_b()).holds);
  CHECK(check_g1(ssc::test::decoupled_a(), ssc::test::decoupled_b()).holds);

  const Verdict v = check_g1(Pattern::zero(1, 1), Pattern::zero(1, 1));
  CHECK_FALSE(v.holds);
  REQUIRE(v.witness.has_value());
  CHECK(*v.witness == VertexSet{1});
}

TEST_CASE("check_g2") {
  CHECK(check_g2(ssc::test::demo_a(), ssc::test::demo_b()).holds);
  CHECK(check_g2(ssc::test::chain_a(), ssc::test::chain_b()).holds);

  // A single self-loop with a dead input column: {1} is its own predecessor
  // set and the only singling vertex is excluded.
  const Verdict v = check_g2(Pattern::identity(1), Pattern::zero(1, 1));
  CHECK_FALSE(v.holds);
  REQUIRE(v.witness.has_value());
  CHECK(*v.witness == VertexSet{1});
}

TEST_CASE("check_g4") {
  SUBCASE("3-state chain fails with the full state set") {
    const Verdict v = check_g4(ssc::test::chain_a(), ssc::test::chain_b());
    CHECK_FALSE(v.holds);
    REQUIRE(v.witness.has_value());
    CHECK(violates(Condition::g4, ssc::test::chain_a(), ssc::test::chain_b(),
                   std::nullopt, *v.witness));
    // the exhaustive oracle finds the same (unique, minimal) witness
    const Verdict b =
        brute_check(Condition::g4, ssc::test::chain_a(), ssc::test::chain_b());
    REQUIRE(b.witness.has_value());
    CHECK(*b.witness == VertexSet({1, 2, 3}));
  }

  SUBCASE("2-state decoupled pair fails") {
    CHECK_FALSE(
        check_g4(ssc::test::decoupled_a(), ssc::test::decoupled_b()).holds);
  }

  SUBCASE("identity inputs succeed") {
    CHECK(check_g4(Pattern::zero(2, 2), Pattern::identity(2)).holds);
  }
}

TEST_CASE("check_g3 on the demo pair") {
  const Pattern a = ssc::test::demo_a();
  const Pattern b = ssc::test::demo_b();

  CHECK(check_g3(a, b, 6).holds);

  const Verdict at3 = check_g3(a, b, 3);
  CHECK_FALSE(at3.holds);
  REQUIRE(at3.witness.has_value());
  CHECK(violates(Condition::g3, a, b, 3, *at3.witness));

  SUBCASE("the known violating set certifies") {
    VertexSet known = VertexSet::range(1, 18);
    for (int v : {3, 4, 9}) known.erase(v);
    CHECK(violates(Condition::g3, a, b, 3, known));
  }

  SUBCASE("horizon validation") {
    CHECK_THROWS_AS(check_g3(a, b, 0), std::invalid_argument);
    CHECK_THROWS_AS(check_g3(a, b, 1000), std::length_error);  // > 4096 rows
  }
}

TEST_CASE("check_g3 with a unit horizon needs the input columns alone") {
  // B = identity singles out every subset; B with one column does not once
  // n > 1.
  CHECK(check_g3(Pattern::zero(2, 2), Pattern::identity(2), 1).holds);
  CHECK_FALSE(check_g3(ssc::test::demo_a(), ssc::test::demo_b(), 1).holds);

  std::mt19937_64 rng(37);
  for (int i = 0; i < 20; ++i) {
    const std::size_t n = 1 + rng() % 5;
    const Pattern a = ssc::test::random_pattern(rng, n, n, 0.5);
    const Pattern b = ssc::test::random_pattern(rng, n, rng() % 3, 0.5);
    // at T = 1 the state part of the horizon pattern is zero, so the verdict
    // must match the brute scan of b's columns
    CHECK(check_g3(a, b, 1).holds ==
          brute_check(Condition::g3, a, b, 1).holds);
  }
}

TEST_CASE("violates") {
  const Pattern a = ssc::test::demo_a();
  const Pattern b = ssc::test::demo_b();

  // A set singled out by an input column is never a counterexample: {2} is
  // hit exactly once by column 1 of the demo A.
  CHECK_FALSE(violates(Condition::g1, a, b, std::nullopt, VertexSet{2}));

  CHECK_THROWS_AS(violates(Condition::g1, a, b, std::nullopt, VertexSet{}),
                  std::invalid_argument);
  CHECK_THROWS_AS(violates(Condition::g1, a, b, std::nullopt, VertexSet{7}),
                  std::out_of_range);
  CHECK_THROWS_AS(violates(Condition::g3, a, b, std::nullopt, VertexSet{1}),
                  std::invalid_argument);  // missing horizon

  // G2 violation requires containment in the predecessor set.
  const Pattern loop = Pattern::identity(1);
  CHECK(violates(Condition::g2, loop, Pattern::zero(1, 0), std::nullopt,
                 VertexSet{1}));
  CHECK_FALSE(violates(Condition::g2, Pattern::zero(1, 1), Pattern::zero(1, 0),
                       std::nullopt, VertexSet{1}));  // {1} !<= Pre({1})
  CHECK(violates(Condition::g1, Pattern::zero(1, 1), Pattern::zero(1, 0),
                 std::nullopt, VertexSet{1}));
}

TEST_CASE("brute_check basics") {
  CHECK(brute_check(Condition::g1, ssc::test::demo_a(), ssc::test::demo_b())
            .holds);

  const Verdict v =
      brute_check(Condition::g2, Pattern::identity(1), Pattern::zero(1, 1));
  CHECK_FALSE(v.holds);
  REQUIRE(v.witness.has_value());
  CHECK(*v.witness == VertexSet{1});

  SUBCASE("size guard names the bound") {
    try {
      brute_check(Condition::g1, Pattern::zero(21, 21), Pattern::zero(21, 1));
      FAIL("expected length_error");
    } catch (const std::length_error& e) {
      CHECK(std::string(e.what()).find("20") != std::string::npos);
    }
  }

  SUBCASE("witnesses come smallest-first") {
    // no inputs: every singleton {i} with an unreachable state i violates G1
    const Verdict w =
        brute_check(Condition::g1, Pattern::zero(3, 3), Pattern::zero(3, 0));
    REQUIRE(w.witness.has_value());
    CHECK(w.witness->size() == 1);
    CHECK(*w.witness == VertexSet{1});
  }
}

TEST_CASE("reduction verdicts equal the exhaustive oracle") {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 60; ++i) {
    const std::size_t n = 1 + rng() % 6;
    const std::size_t r = rng() % 4;
    const double density = 0.15 + 0.7 * ssc::test::unit_from_bits(rng());
    const Pattern a = ssc::test::random_pattern(rng, n, n, density);
    const Pattern b = ssc::test::random_pattern(rng, n, r, density);
    CHECK(check_g1(a, b).holds == brute_check(Condition::g1, a, b).holds);
    CHECK(check_g2(a, b).holds == brute_check(Condition::g2, a, b).holds);
    CHECK(check_g4(a, b).holds == brute_check(Condition::g4, a, b).holds);
    if (n <= 6)
      CHECK(check_g3(a, b, 2).holds ==
            brute_check(Condition::g3, a, b, 2).holds);
  }
}

TEST_CASE("failing checks return certified witnesses") {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 40; ++i) {
    const std::size_t n = 1 + rng() % 6;
    const Pattern a = ssc::test::random_pattern(rng, n, n, 0.3);
    const Pattern b = ssc::test::random_pattern(rng, n, rng() % 3, 0.3);
    for (const Verdict& v :
         {check_g1(a, b), check_g2(a, b), check_g4(a, b)}) {
      CHECK(v.holds == !v.witness.has_value());
      if (v.witness)
        CHECK(violates(v.condition, a, b, std::nullopt, *v.witness));
    }
  }
}

TEST_CASE("appending a fresh input column never breaks a holding condition") {
  std::mt19937_64 rng(47);
  for (int i = 0; i < 40; ++i) {
    const std::size_t n = 1 + rng() % 6;
    const Pattern a = ssc::test::random_pattern(rng, n, n, 0.4);
    const Pattern b = ssc::test::random_pattern(rng, n, rng() % 3, 0.4);
    const Pattern extra = ssc::test::random_pattern(rng, n, 1, 0.5);
    const Pattern wider = hstack(b, extra);
    if (check_g1(a, b).holds) CHECK(check_g1(a, wider).holds);
    if (check_g2(a, b).holds) CHECK(check_g2(a, wider).holds);
    if (check_g4(a, b).holds) CHECK(check_g4(a, wider).holds);
  }
}

TEST_CASE("trace length never exceeds the state count") {
  std::mt19937_64 rng(53);
  for (int i = 0; i < 40; ++i) {
    const std::size_t n = 1 + rng() % 8;
    const Pattern a = ssc::test::random_pattern(rng, n, n, 0.4);
    const Pattern b = ssc::test::random_pattern(rng, n, rng() % 3, 0.4);
    const SystemGraph g(a, b);
    CHECK(reduce(g, 0).steps.size() <= n);
    CHECK(reduce(g, 1).steps.size() <= n);
  }
}
