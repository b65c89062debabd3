#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "riesz/rational.hpp"

namespace riesz {

// A half-open arc [left, right) of a circle of circumference C, with
// 0 <= left < C and left < right <= left + C. Arcs with right > C wrap
// through 0.
struct Arc {
  Rational left;
  Rational right;

  Rational length() const { return right - left; }
  friend bool operator==(const Arc&, const Arc&) = default;
};

// Canonical finite union of arcs on R / (C Z).
//
// Arcs are pairwise disjoint and non-touching, sorted by left endpoint,
// and a union that covers the whole circle is the single arc [0, C).
// Only a wrapping arc may have right > C, and it is always the last one.
// The empty union is legal here (level sets may be empty); the public
// `normalize` entry point rejects it.
class IntervalUnion {
 public:
  static IntervalUnion empty(Rational circumference = Rational(1));

  // Canonicalizes arbitrary arcs on the circle of the given circumference.
  // Arcs may start anywhere (they are reduced modulo C); an arc of length
  // >= C covers the circle. The result may be empty.
  static IntervalUnion from_arcs(std::span<const Arc> raw,
                                 Rational circumference = Rational(1));

  const std::vector<Arc>& arcs() const { return arcs_; }
  const Rational& circumference() const { return circumference_; }

  bool is_empty() const { return arcs_.empty(); }
  bool is_full() const;

  // Half-open membership test, x taken modulo the circumference.
  bool contains(const Rational& x) const;

  // Left and right endpoints in canonical arc order (rights may exceed C).
  std::vector<Rational> left_endpoints() const;
  std::vector<Rational> right_endpoints() const;

  friend bool operator==(const IntervalUnion&, const IntervalUnion&) = default;

 private:
  IntervalUnion(std::vector<Arc> arcs, Rational circumference)
      : arcs_(std::move(arcs)), circumference_(std::move(circumference)) {}

  std::vector<Arc> arcs_;
  Rational circumference_;
};

// Canonical union on the unit circle from user-supplied pairs. Each pair
// needs left < right inside [0, 1]; overlapping and touching pairs merge,
// including across 0 == 1. Throws kOutOfRange or kEmptySet.
IntervalUnion normalize(std::span<const Arc> raw);

Rational measure(const IntervalUnion& set);

IntervalUnion rotate(const IntervalUnion& set, const Rational& shift);

// Number of maximal arcs; an arc wrapping through 0 counts once.
std::size_t cyclic_interval_count(const IntervalUnion& set);

// Phi(t) = #{ j in 0..N-1 : t + j/N in S } as an exact step function on
// [0, 1/N). Cell i is [breakpoints[i], breakpoints[i+1]).
struct FoldingProfile {
  std::int64_t modulus = 1;
  std::vector<Rational> breakpoints;  // starts at 0, ends at 1/N
  std::vector<std::int64_t> counts;   // one per cell

  Rational cell_period() const { return Rational(1, modulus); }
};

FoldingProfile fold_profile(const IntervalUnion& set, std::int64_t modulus);

// {t : Phi(t) >= n} as a cyclic union on the circle of circumference 1/N.
IntervalUnion level_set(const FoldingProfile& profile, std::int64_t n);

// Multiplies every endpoint by N, landing on the unit circle. The input is
// either a union on the circle of circumference 1/N, or a unit-circle union
// whose arcs all lie inside [0, 1/N]; anything longer throws kScaleOverflow.
IntervalUnion scale_to_unit(const IntervalUnion& set, std::int64_t modulus);

// Least common denominator of all endpoints.
BigInt common_denominator(const IntervalUnion& set);

}  // namespace riesz
