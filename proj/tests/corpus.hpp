#pragma once

// Deterministic random interval unions shared by the unit tests, the
// acceptance binary and the oracle dump.
//
// A member with L arcs lives on a grid of mesh 1/D, 2L <= D <= 60: 2L
// distinct grid points are paired off in increasing order into disjoint,
// non-touching arcs, and the result is rotated by a random grid step. All
// endpoints therefore have denominators dividing D.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "riesz/circle_sets.hpp"

namespace riesz::testing {

inline constexpr std::uint64_t kCorpusSeed = 20240601;
inline constexpr std::int64_t kMaxDenominator = 60;

struct CorpusMember {
  std::int64_t grid = 1;  // D
  IntervalUnion set = IntervalUnion::empty();
};

inline CorpusMember random_member(std::mt19937_64& rng, std::size_t max_arcs = 4) {
  std::uniform_int_distribution<std::size_t> arc_count(1, max_arcs);
  const std::size_t arcs = arc_count(rng);
  std::uniform_int_distribution<std::int64_t> grid_dist(
      static_cast<std::int64_t>(2 * arcs), kMaxDenominator);
  const std::int64_t grid = grid_dist(rng);

  std::vector<std::int64_t> ticks(static_cast<std::size_t>(grid));
  for (std::int64_t i = 0; i < grid; ++i) ticks[static_cast<std::size_t>(i)] = i;
  std::shuffle(ticks.begin(), ticks.end(), rng);
  ticks.resize(2 * arcs);
  std::sort(ticks.begin(), ticks.end());

  std::uniform_int_distribution<std::int64_t> shift_dist(0, grid - 1);
  const std::int64_t shift = shift_dist(rng);
  std::vector<Arc> raw;
  for (std::size_t i = 0; i < arcs; ++i) {
    raw.push_back({Rational(ticks[2 * i] + shift, grid),
                   Rational(ticks[2 * i + 1] + shift, grid)});
  }
  return {grid, IntervalUnion::from_arcs(raw)};
}

inline std::vector<CorpusMember> corpus(std::size_t count,
                                        std::uint64_t seed = kCorpusSeed,
                                        std::size_t max_arcs = 4) {
  std::mt19937_64 rng(seed);
  std::vector<CorpusMember> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_member(rng, max_arcs));
  return out;
}

// The three constructions worked out by hand.
inline IntervalUnion half_interval() {
  const Arc a{Rational(0), Rational(1, 2)};
  return normalize(std::span<const Arc>(&a, 1));
}

inline IntervalUnion three_quarters() {
  const Arc a{Rational(0), Rational(3, 4)};
  return normalize(std::span<const Arc>(&a, 1));
}

inline IntervalUnion two_intervals() {
  const std::vector<Arc> raw = {{Rational(1, 10), Rational(3, 10)},
                                {Rational(1, 2), Rational(7, 10)}};
  return normalize(raw);
}

inline IntervalUnion full_circle() {
  const Arc a{Rational(0), Rational(1)};
  return normalize(std::span<const Arc>(&a, 1));
}

}  // namespace riesz::testing
