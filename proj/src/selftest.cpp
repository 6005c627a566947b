#include "ssc/selftest.hpp"

#include <chrono>
#include <cmath>
#include <ostream>
#include <random>
#include <sstream>

#include "ssc/analysis.hpp"
#include "ssc/conditions.hpp"
#include "ssc/numeric.hpp"
#include "ssc/pattern.hpp"
#include "ssc/sgraph.hpp"

namespace ssc {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
  std::uint64_t x = a + 0x9e3779b97f4a7c15ULL * (b + 1);
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

double unit_from_bits(std::uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

Pattern random_pattern(std::mt19937_64& rng, std::size_t rows,
                       std::size_t cols, double density) {
  Pattern p(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      p.set(i, j, unit_from_bits(rng()) < density);
  return p;
}

// The recurring worked patterns.

// 6-state demo pair: two coupled 2-cycles plus a driven chain.
Pattern demo_a() {
  return Pattern::parse(
      "o * o o o o\n"
      "* o o o o o\n"
      "o o o * o o\n"
      "o o o o * o\n"
      "o o o o o *\n"
      "o o o o o o\n");
}

Pattern demo_b() {
  return Pattern::parse(
      "* *\n"
      "* o\n"
      "o o\n"
      "* o\n"
      "o o\n"
      "o *\n");
}

// 3-state shift chain with inputs at both ends of the chain.
Pattern chain_a() {
  return Pattern::parse(
      "o * o\n"
      "o o *\n"
      "o o o\n");
}

Pattern chain_b() { return Pattern::parse("*\no\n*\n"); }

// 2-state pair with one decoupled mode, both states driven.
Pattern decoupled_a() { return Pattern::parse("* o\no o\n"); }

Pattern decoupled_b() { return Pattern::parse("*\n*\n"); }

Instantiation make_instantiation(std::vector<Matrix> a, std::vector<Matrix> b,
                                 std::vector<Matrix> c, long t0) {
  Instantiation inst;
  inst.n = static_cast<int>(a.front().rows());
  inst.r = b.empty() ? 0 : static_cast<int>(b.front().cols());
  inst.m = c.empty() ? 0 : static_cast<int>(c.front().rows());
  inst.t0 = t0;
  inst.t1 = t0 + static_cast<long>(a.size());
  if (b.empty())
    b.assign(a.size(), Matrix::Zero(inst.n, 0));
  inst.a = std::move(a);
  inst.b = std::move(b);
  inst.c = std::move(c);
  return inst;
}

// Accumulates the first failure reason; keeps going so the detail string can
// still report totals.
struct Check {
  bool ok = true;
  std::string why;
  void require(bool condition, const std::string& message) {
    if (!condition && ok) {
      ok = false;
      why = message;
    }
  }
};

CriterionResult finish(const std::string& name, const Check& check,
                       const std::string& evidence) {
  return CriterionResult{name, check.ok, check.ok ? evidence : check.why};
}

// --- criterion 1 ------------------------------------------------------------

CriterionResult criterion_reduction_trace() {
  const std::string name =
      "reduction trace and G1/G2 on the 6-state demo pair";
  Check check;

  const Pattern a = demo_a();
  const Pattern b = demo_b();
  const SystemGraph g(a, b);

  const auto start = Clock::now();
  const ReduceResult r0 = reduce(g, 0);
  const ReduceResult r1 = reduce(g, 1);
  const Verdict v1 = check_g1(a, b);
  const Verdict v2 = check_g2(a, b);
  const double elapsed = ms_since(start);

  check.require(!r0.steps.empty() &&
                    r0.steps.front().tset == VertexSet({1, 2, 4, 5, 6}),
                "mode-0 first candidate set != {1,2,4,5,6}");
  check.require(!r0.steps.empty() && r0.steps.front().picked == 1 &&
                    r0.steps.front().removed == VertexSet{2},
                "mode-0 first step should pick 1 and remove {2}");
  check.require(r0.residual.empty(), "mode-0 reduction left a residual");

  check.require(!r1.steps.empty() && r1.steps.front().tset.empty(),
                "mode-1 first candidate set not empty");
  check.require(!r1.steps.empty() && r1.steps.front().via_no_predecessor &&
                    r1.steps.front().removed == VertexSet{3},
                "mode-1 first removal != {3} via no-predecessor");
  const std::vector<VertexSet> expected_removed = {
      VertexSet{3}, VertexSet{4}, VertexSet{5},
      VertexSet{6}, VertexSet{1}, VertexSet{2}};
  const std::vector<bool> expected_fallback = {true, true,  true,
                                               true, false, true};
  check.require(r1.steps.size() == expected_removed.size(),
                "mode-1 step count != 6");
  for (std::size_t i = 0; check.ok && i < r1.steps.size(); ++i) {
    check.require(r1.steps[i].removed == expected_removed[i] &&
                      r1.steps[i].via_no_predecessor == expected_fallback[i],
                  "mode-1 removal order deviates at step " +
                      std::to_string(i + 1));
  }
  check.require(r1.residual.empty(), "mode-1 reduction left a residual");
  check.require(v1.holds && v2.holds, "G1 or G2 does not hold");
  check.require(elapsed < 1.0, "runtime " + std::to_string(elapsed) +
                                   " ms exceeds 1 ms");

  std::ostringstream evidence;
  evidence << "removal order 3,4,5,6,1,2; " << elapsed << " ms";
  return finish(name, check, evidence.str());
}

// --- criterion 2 ------------------------------------------------------------

CriterionResult criterion_horizon_split() {
  const std::string name =
      "horizon split on the demo pair: G3 at T=6 vs T=3 with certified "
      "witness";
  Check check;

  const Pattern a = demo_a();
  const Pattern b = demo_b();

  const auto start = Clock::now();
  const Verdict at6 = check_g3(a, b, 6);
  const Verdict at3 = check_g3(a, b, 3);
  VertexSet known = VertexSet::range(1, 18);
  for (Vertex v : {3, 4, 9}) known.erase(v);
  const bool witness_ok = violates(Condition::g3, a, b, 3, known);
  const double elapsed = ms_since(start);

  check.require(at6.holds, "G3 does not hold at T=6");
  check.require(!at3.holds, "G3 unexpectedly holds at T=3");
  check.require(at3.witness.has_value(), "no witness reported at T=3");
  check.require(witness_ok, "known violating set not certified");
  check.require(elapsed < 10.0, "runtime " + std::to_string(elapsed) +
                                    " ms exceeds 10 ms");

  std::ostringstream evidence;
  evidence << "witness size " << (at3.witness ? at3.witness->size() : 0)
           << " at T=3; " << elapsed << " ms";
  return finish(name, check, evidence.str());
}

// --- criterion 3 ------------------------------------------------------------

CriterionResult criterion_determinants(std::uint64_t seed) {
  const std::string name =
      "reachability determinant: closed form and the vanishing time-varying "
      "case";
  Check check;

  const Pattern pat_a = demo_a();
  const Pattern pat_b = demo_b();

  Matrix a_ones = Matrix::Zero(6, 6);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j)
      if (pat_a.at(i, j)) a_ones(static_cast<Eigen::Index>(i),
                                 static_cast<Eigen::Index>(j)) = 1.0;

  // |det (A^2 B | A B | B)| = |B12 B21 B41^2 B62^2| when the A nonzeros are
  // all 1.
  std::mt19937_64 rng(mix(seed, 3));
  int draws = 0;
  for (int k = 0; k < 5; ++k) {
    Matrix b = Matrix::Zero(6, 2);
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t j = 0; j < 2; ++j)
        if (pat_b.at(i, j)) {
          const double magnitude = 0.5 + 1.5 * unit_from_bits(rng());
          b(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
              (rng() & 1U) ? magnitude : -magnitude;
        }
    const Instantiation inst = make_instantiation(
        std::vector<Matrix>(3, a_ones), std::vector<Matrix>(3, b), {}, 0);
    const Matrix m = reachability_matrix_dt(inst, 0, 3);
    const double det = m.determinant();
    const double expected =
        b(0, 1) * b(1, 0) * b(3, 0) * b(3, 0) * b(5, 1) * b(5, 1);
    check.require(std::abs(std::abs(det) - std::abs(expected)) <=
                      1e-6 * std::abs(expected),
                  "determinant misses the closed form on draw " +
                      std::to_string(k));
    ++draws;
  }

  // The specific time-varying input gain makes every 3-step window singular.
  std::vector<Matrix> a_steps(6, a_ones);
  std::vector<Matrix> b_steps;
  for (long t = 0; t < 6; ++t) {
    Matrix b = Matrix::Zero(6, 2);
    b(0, 0) = -1.0;
    b(1, 0) = std::pow(3.0, static_cast<double>(t) / 2.0);
    b(3, 0) = 1.0;
    b(0, 1) = 2.0;
    b(5, 1) = 1.0;
    b_steps.push_back(b);
  }
  const Instantiation varying =
      make_instantiation(std::move(a_steps), std::move(b_steps), {}, 0);
  for (long t = 3; t <= 6; ++t) {
    const Matrix m = reachability_matrix_dt(varying, t - 3, t);
    double hadamard = 1.0;
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      hadamard *= m.col(j).norm();
    check.require(std::abs(m.determinant()) <= 1e-9 * hadamard,
                  "time-varying determinant not negligible at t=" +
                      std::to_string(t));
  }

  return finish(name, check,
                std::to_string(draws) +
                    " random draws match; singular at t=3..6");
}

// --- criteria 4 and 5 -------------------------------------------------------

CriterionResult criterion_poly_gap() {
  const std::string name =
      "continuous gap on the 3-state chain: G1/G2 hold, G4 fails, polynomial "
      "annihilator";
  Check check;

  const Pattern a = chain_a();
  const Pattern b = chain_b();
  check.require(check_g1(a, b).holds && check_g2(a, b).holds,
                "G1 and G2 expected to hold");
  const Verdict g4 = check_g4(a, b);
  check.require(!g4.holds && g4.witness.has_value(),
                "G4 expected to fail with a witness");

  double worst = 0.0;
  for (double t1 : {1.0, 2.0}) {
    RowVector p(3);
    p << 2.0, -2.0 * t1, t1 * t1 + 1.0;
    const double res =
        annihilator_residual_ct(p, CtFamily::poly_input, 0.0, t1, 101);
    worst = std::max(worst, res);
    check.require(res <= 1e-9, "annihilator residual " + std::to_string(res) +
                                   " at t1=" + std::to_string(t1));
  }

  std::ostringstream evidence;
  evidence << "max residual " << worst;
  return finish(name, check, evidence.str());
}

CriterionResult criterion_exp_gap() {
  const std::string name =
      "continuous gap on the 2-state pair: G4 fails, exponential "
      "annihilator, scaled-coefficient recovery";
  Check check;

  const Pattern a = decoupled_a();
  const Pattern b = decoupled_b();
  check.require(check_g1(a, b).holds && check_g2(a, b).holds,
                "G1 and G2 expected to hold");
  check.require(!check_g4(a, b).holds, "G4 expected to fail");

  double worst = 0.0;
  for (double t1 : {1.0, 2.0}) {
    RowVector p(2);
    p << 1.0, -std::exp(t1);
    const double res =
        annihilator_residual_ct(p, CtFamily::exp_input, 0.0, t1, 101);
    worst = std::max(worst, res);
    check.require(res <= 1e-9, "annihilator residual " + std::to_string(res) +
                                   " at t1=" + std::to_string(t1));
  }

  // Lambda = diag(-1, 0), A0 = 0, B0 = (1,1)^T must give A(t) = diag(1, 0)
  // and B(t) = (e^t, 1)^T, bit for bit.
  Matrix lambda = Matrix::Zero(2, 2);
  lambda(0, 0) = -1.0;
  const Matrix a0 = Matrix::Zero(2, 2);
  Matrix b0(2, 1);
  b0 << 1.0, 1.0;
  for (double t : {0.0, 0.5, 1.0}) {
    const auto [at, bt] = exp_scaled_coefficients(lambda, a0, b0, t);
    check.require(at(0, 0) == 1.0 && at(0, 1) == 0.0 && at(1, 0) == 0.0 &&
                      at(1, 1) == 0.0,
                  "scaled A(t) not exactly diag(1,0) at t=" +
                      std::to_string(t));
    check.require(bt(0, 0) == std::exp(t) && bt(1, 0) == 1.0,
                  "scaled B(t) not exactly (e^t, 1) at t=" +
                      std::to_string(t));
  }

  std::ostringstream evidence;
  evidence << "max residual " << worst << "; coefficients exact at t=0,0.5,1";
  return finish(name, check, evidence.str());
}

// --- criterion 6 ------------------------------------------------------------

CriterionResult criterion_duality_gap() {
  const std::string name =
      "duality gap: unobservable output system whose transposed pair is "
      "controllable";
  Check check;

  const double e = std::exp(1.0);
  std::vector<Matrix> a_steps;
  std::vector<Matrix> c_steps;
  for (long t = 0; t < 5; ++t) {
    Matrix at(2, 2);
    at << -2.0, std::exp(1.0 - static_cast<double>(t)),
        -3.0 * std::exp(static_cast<double>(t)), 2.0 * e;
    a_steps.push_back(at);
    Matrix ct(1, 2);
    ct << std::exp(static_cast<double>(t)), -e;
    c_steps.push_back(ct);
  }
  const Instantiation inst =
      make_instantiation(std::move(a_steps), {}, std::move(c_steps), 0);

  const int obs_rank = numeric_rank(observability_matrix_dt(inst, 0, 4), 1e-9);
  check.require(obs_rank == 1, "observability rank " +
                                   std::to_string(obs_rank) + ", expected 1");

  // Entrywise transpose without time reversal: the pair that looks adjoint
  // but is not; it is controllable on every window of length 2.
  std::vector<Matrix> adj_a;
  std::vector<Matrix> adj_b;
  for (long t = 0; t < 5; ++t) {
    adj_a.push_back(inst.a_at(t).transpose());
    adj_b.push_back(inst.c_at(t).transpose());
  }
  const Instantiation adj =
      make_instantiation(std::move(adj_a), std::move(adj_b), {}, 0);
  for (long t0 : {0L, 1L, 2L}) {
    const int rank =
        numeric_rank(reachability_matrix_dt(adj, t0, t0 + 2), 1e-9);
    check.require(rank == 2, "transposed-pair reachability rank " +
                                 std::to_string(rank) + " at t0=" +
                                 std::to_string(t0) + ", expected 2");
  }

  return finish(name, check,
                "observability rank 1; transposed-pair rank 2 at t0=0,1,2");
}

// --- criterion 7 ------------------------------------------------------------

CriterionResult criterion_oracle_equivalence(std::uint64_t seed) {
  const std::string name =
      "brute-force oracle equivalence (G1/G2/G4 on 200 pairs, G3 on 50)";
  Check check;

  const auto start = Clock::now();
  std::mt19937_64 rng(mix(seed, 7));
  int compared = 0;
  for (int i = 0; check.ok && i < 200; ++i) {
    const std::size_t n = 1 + rng() % 8;
    const std::size_t r = rng() % 4;
    const double density = 0.15 + 0.7 * unit_from_bits(rng());
    const Pattern a = random_pattern(rng, n, n, density);
    const Pattern b = random_pattern(rng, n, r, density);
    const Condition conditions[] = {Condition::g1, Condition::g2,
                                    Condition::g4};
    for (Condition c : conditions) {
      const Verdict fast = c == Condition::g1   ? check_g1(a, b)
                           : c == Condition::g2 ? check_g2(a, b)
                                                : check_g4(a, b);
      const Verdict slow = brute_check(c, a, b);
      check.require(fast.holds == slow.holds,
                    std::string("disagreement on ") +
                        std::string(to_string(c)) + " at pair " +
                        std::to_string(i));
      ++compared;
    }
  }

  int compared_g3 = 0;
  for (int i = 0; check.ok && i < 50; ++i) {
    const std::size_t n = 1 + rng() % 6;
    const std::size_t r = rng() % 3;
    const double density = 0.15 + 0.7 * unit_from_bits(rng());
    const Pattern a = random_pattern(rng, n, n, density);
    const Pattern b = random_pattern(rng, n, r, density);
    for (int horizon : {1, 2, 3}) {
      if (n * static_cast<std::size_t>(horizon) > 18) continue;
      const Verdict fast = check_g3(a, b, horizon);
      const Verdict slow = brute_check(Condition::g3, a, b, horizon);
      check.require(fast.holds == slow.holds,
                    "disagreement on G3 at pair " + std::to_string(i) +
                        ", T=" + std::to_string(horizon));
      ++compared_g3;
    }
  }

  const double elapsed = ms_since(start);
  check.require(elapsed < 30000.0, "runtime " + std::to_string(elapsed) +
                                       " ms exceeds 30 s");

  std::ostringstream evidence;
  evidence << compared << " G1/G2/G4 comparisons, " << compared_g3
           << " G3 comparisons in " << elapsed << " ms";
  return finish(name, check, evidence.str());
}

// --- criterion 8 ------------------------------------------------------------

CriterionResult criterion_positive_rank_oracle(std::uint64_t seed) {
  const std::string name =
      "positive rank oracle: 100 instantiations per passing pattern";
  Check check;

  std::mt19937_64 rng(mix(seed, 8));
  std::vector<std::pair<Pattern, Pattern>> pool;
  pool.emplace_back(demo_a(), demo_b());
  pool.emplace_back(Pattern::zero(3, 3), Pattern::identity(3));
  for (int i = 0; i < 40; ++i) {
    const std::size_t n = 2 + rng() % 5;
    const std::size_t r = 1 + rng() % 3;
    const double density = 0.3 + 0.5 * unit_from_bits(rng());
    pool.emplace_back(random_pattern(rng, n, n, density),
                      random_pattern(rng, n, r, density));
  }

  int lti_passing = 0;
  int tv_passing = 0;
  long instantiations = 0;
  for (std::size_t idx = 0; check.ok && idx < pool.size(); ++idx) {
    const Pattern& a = pool[idx].first;
    const Pattern& b = pool[idx].second;
    const int n = static_cast<int>(a.rows());
    const std::uint64_t pair_seed = mix(seed, 800 + idx);

    if (check_g1(a, b).holds && check_g2(a, b).holds) {
      ++lti_passing;
      for (int k = 0; check.ok && k < 100; ++k) {
        const Instantiation inst = sample_instantiation(
            a, b, 0, n, SampleKind::constant, mix(pair_seed, k));
        ++instantiations;
        check.require(
            numeric_rank(reachability_matrix_dt(inst, 0, n)) == n,
            "constant instantiation " + std::to_string(k) + " of pool pair " +
                std::to_string(idx) + " lost rank");
      }
    }

    for (int horizon : {std::max(1, n - 1), n}) {
      if (!check_g3(a, b, horizon).holds) continue;
      ++tv_passing;
      for (int k = 0; check.ok && k < 100; ++k) {
        const Instantiation inst = sample_instantiation(
            a, b, 0, horizon, SampleKind::per_step,
            mix(pair_seed, 1000 + 100 * horizon + k));
        ++instantiations;
        check.require(
            numeric_rank(reachability_matrix_dt(inst, 0, horizon)) == n,
            "per-step instantiation " + std::to_string(k) + " of pool pair " +
                std::to_string(idx) + " lost rank at T=" +
                std::to_string(horizon));
      }
    }
  }
  check.require(lti_passing >= 1 && tv_passing >= 1,
                "pattern pool produced no passing cases");

  std::ostringstream evidence;
  evidence << lti_passing << " pairs pass G1/G2, " << tv_passing
           << " horizon cases pass G3, " << instantiations
           << " instantiations at full rank";
  return finish(name, check, evidence.str());
}

// --- criterion 9 ------------------------------------------------------------

CriterionResult criterion_pick_independence(std::uint64_t seed) {
  const std::string name = "pick-strategy independence of the reduction "
                           "verdict";
  Check check;

  std::mt19937_64 rng(mix(seed, 9));
  int graphs = 0;
  for (int i = 0; check.ok && i < 100; ++i) {
    const std::size_t n = 1 + rng() % 7;
    const std::size_t r = rng() % 4;
    const double density = 0.15 + 0.7 * unit_from_bits(rng());
    const Pattern a = random_pattern(rng, n, n, density);
    const Pattern b = random_pattern(rng, n, r, density);
    const SystemGraph g(a, b);
    ++graphs;
    for (int mode : {0, 1}) {
      const bool baseline = reduce(g, mode).residual.empty();
      for (int s = 0; check.ok && s < 10; ++s) {
        const bool randomized =
            reduce(g, mode, seeded_pick(mix(seed, 9000 + 10 * i + s)))
                .residual.empty();
        check.require(randomized == baseline,
                      "verdict depends on pick strategy (pair " +
                          std::to_string(i) + ", mode " +
                          std::to_string(mode) + ")");
      }
    }
  }

  return finish(name, check,
                std::to_string(graphs) + " graphs x 10 pick seeds x 2 modes");
}

// --- criterion 10 -----------------------------------------------------------

CriterionResult criterion_implications(std::uint64_t seed) {
  const std::string name = "implication properties between the G1-G4 "
                           "verdicts";
  Check check;

  std::mt19937_64 rng(mix(seed, 10));
  int g4_cases = 0;
  int lti_cases = 0;
  for (int i = 0; check.ok && i < 100; ++i) {
    const std::size_t n = 1 + rng() % 6;
    const std::size_t r = rng() % 4;
    const double density = 0.2 + 0.6 * unit_from_bits(rng());
    const Pattern a = random_pattern(rng, n, n, density);
    const Pattern b = random_pattern(rng, n, r, density);

    if (check_g4(a, b).holds) {
      ++g4_cases;
      const Pattern augmented = with_identity(a);
      check.require(check_g1(augmented, b).holds &&
                        check_g2(augmented, b).holds,
                    "G4 without G1/G2 on the loop-augmented pair (pair " +
                        std::to_string(i) + ")");
    }

    if (check_g1(a, b).holds && check_g2(a, b).holds) {
      ++lti_cases;
      check.require(check_g3(a, b, static_cast<int>(n)).holds,
                    "G1/G2 without G3 at T=n (pair " + std::to_string(i) +
                        ")");
    }

    for (int horizon : {1, 2})
      if (check_g3(a, b, horizon).holds)
        check.require(check_g3(a, b, horizon + 1).holds,
                      "G3 not monotone in the horizon (pair " +
                          std::to_string(i) + ")");

    Pattern diag(n, n);
    for (std::size_t d = 0; d < n; ++d) diag.set(d, d, (rng() & 1U) != 0);
    check.require(
        check_g4(a, b).holds == check_g4(or_add(a, diag), b).holds,
        "G4 not invariant under loop additions (pair " + std::to_string(i) +
            ")");
  }
  check.require(g4_cases >= 1 && lti_cases >= 1,
                "random stream produced no passing cases");

  std::ostringstream evidence;
  evidence << "100 pairs; " << g4_cases << " with G4, " << lti_cases
           << " with G1/G2";
  return finish(name, check, evidence.str());
}

}  // namespace

std::vector<CriterionResult> run_selftest(std::uint64_t seed) {
  std::vector<CriterionResult> results;
  results.push_back(criterion_reduction_trace());
  results.push_back(criterion_horizon_split());
  results.push_back(criterion_determinants(seed));
  results.push_back(criterion_poly_gap());
  results.push_back(criterion_exp_gap());
  results.push_back(criterion_duality_gap());
  results.push_back(criterion_oracle_equivalence(seed));
  results.push_back(criterion_positive_rank_oracle(seed));
  results.push_back(criterion_pick_independence(seed));
  results.push_back(criterion_implications(seed));
  return results;
}

int selftest_main(std::uint64_t seed, std::ostream& out) {
  const auto start = Clock::now();
  const std::vector<CriterionResult> results = run_selftest(seed);
  const double elapsed = ms_since(start);
  std::size_t passed = 0;
  for (std::size_t i = 0; i < results.size(); ++i) {
    const CriterionResult& r = results[i];
    out << "[" << (i + 1) << "/" << results.size() << "] "
        << (r.passed ? "PASS" : "FAIL") << "  " << r.name;
    if (!r.detail.empty()) out << "  (" << r.detail << ")";
    out << "\n";
    if (r.passed) ++passed;
  }
  out << passed << "/" << results.size() << " criteria passed (seed " << seed
      << ", " << elapsed << " ms)\n";
  return passed == results.size() ? 0 : 1;
}

}  // namespace ssc
