#pragma once

#include <cstdint>
#include <random>

#include "ssc/pattern.hpp"

namespace ssc::test {

inline double unit_from_bits(std::uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

inline Pattern random_pattern(std::mt19937_64& rng, std::size_t rows,
                              std::size_t cols, double density) {
  Pattern p(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      p.set(i, j, unit_from_bits(rng()) < density);
  return p;
}

// The worked 6-state pair used across the suites: two coupled 2-cycles plus
// a driven chain, two inputs.
inline Pattern demo_a() {
  return Pattern::parse(
      "o * o o o o\n"
      "* o o o o o\n"
      "o o o * o o\n"
      "o o o o * o\n"
      "o o o o o *\n"
      "o o o o o o\n");
}

inline Pattern demo_b() {
  return Pattern::parse(
      "* *\n"
      "* o\n"
      "o o\n"
      "* o\n"
      "o o\n"
      "o *\n");
}

// 3-state shift chain, single input feeding the first and last state.
inline Pattern chain_a() {
  return Pattern::parse("o * o\no o *\no o o\n");
}
inline Pattern chain_b() { return Pattern::parse("*\no\n*\n"); }

// 2-state pair with one decoupled mode, both states driven.
inline Pattern decoupled_a() { return Pattern::parse("* o\no o\n"); }
inline Pattern decoupled_b() { return Pattern::parse("*\n*\n"); }

}  // namespace ssc::test
