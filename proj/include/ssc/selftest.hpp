#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace ssc {

struct CriterionResult {
  std::string name;
  bool passed = false;
  std::string detail;  // brief evidence on pass, first failure reason on fail
};

/// Run the acceptance battery. Symbolic verdicts are seed-independent; the
/// seed drives the random pattern streams, the instantiation draws, and the
/// randomized pick strategies.
std::vector<CriterionResult> run_selftest(std::uint64_t seed);

/// Print one pass/fail line per criterion; returns 0 iff all pass.
int selftest_main(std::uint64_t seed, std::ostream& out);

}  // namespace ssc
