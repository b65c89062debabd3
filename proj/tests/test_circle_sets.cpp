#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "corpus.hpp"
#include "riesz/circle_sets.hpp"
#include "riesz/error.hpp"
#include "riesz/interlacement.hpp"

using riesz::Arc;
using riesz::IntervalUnion;
using riesz::Rational;

namespace {

Rational q(std::int64_t p, std::int64_t d = 1) { return Rational(p, d); }

IntervalUnion unit(std::vector<Arc> raw) { return riesz::normalize(raw); }

std::vector<Arc> arcs_of(const IntervalUnion& u) { return u.arcs(); }

// Phi(t) by direct enumeration of the N translates.
std::int64_t brute_phi(const IntervalUnion& set, std::int64_t n, const Rational& t) {
  std::int64_t count = 0;
  for (std::int64_t j = 0; j < n; ++j) {
    if (set.contains(t + Rational(j, n))) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("normalize merges, wraps and sorts") {
  CHECK(arcs_of(unit({{q(0), q(3, 10)}, {q(3, 10), q(1, 2)}})) ==
        std::vector<Arc>{{q(0), q(1, 2)}});
  const auto wrap = unit({{q(9, 10), q(1)}, {q(0), q(1, 10)}});
  CHECK(arcs_of(wrap) == std::vector<Arc>{{q(9, 10), q(11, 10)}});
  CHECK(arcs_of(unit({{q(1, 2), q(7, 10)}, {q(1, 10), q(3, 10)}})) ==
        std::vector<Arc>{{q(1, 10), q(3, 10)}, {q(1, 2), q(7, 10)}});
  CHECK(unit({{q(0), q(1)}}).is_full());
  CHECK(unit({{q(0), q(1, 2)}, {q(1, 2), q(1)}}).is_full());
  CHECK(arcs_of(unit({{q(1, 10), q(1, 2)}, {q(1, 5), q(3, 10)}})) ==
        std::vector<Arc>{{q(1, 10), q(1, 2)}});
}

TEST_CASE("normalize errors") {
  auto kind = [](std::vector<Arc> raw) {
    try {
      riesz::normalize(raw);
    } catch (const riesz::Error& e) {
      return e.kind();
    }
    return riesz::ErrorKind::kParse;
  };
  CHECK(kind({}) == riesz::ErrorKind::kEmptySet);
  CHECK(kind({{q(-1, 10), q(1, 10)}}) == riesz::ErrorKind::kOutOfRange);
  CHECK(kind({{q(1, 2), q(3, 2)}}) == riesz::ErrorKind::kOutOfRange);
  CHECK(kind({{q(3, 10), q(1, 10)}}) == riesz::ErrorKind::kOutOfRange);
  CHECK(kind({{q(1, 2), q(1, 2)}}) == riesz::ErrorKind::kOutOfRange);
}

TEST_CASE("measure") {
  CHECK(riesz::measure(riesz::testing::two_intervals()) == q(2, 5));
  CHECK(riesz::measure(riesz::testing::full_circle()) == 1);
  CHECK(riesz::measure(riesz::testing::three_quarters()) == q(3, 4));
  CHECK(riesz::measure(IntervalUnion::empty()) == 0);
}

TEST_CASE("rotate") {
  const auto wrap = unit({{q(9, 10), q(1)}, {q(0), q(1, 10)}});
  CHECK(arcs_of(riesz::rotate(wrap, q(1, 10))) == std::vector<Arc>{{q(0), q(1, 5)}});
  const auto s = riesz::testing::two_intervals();
  CHECK(riesz::rotate(s, 0) == s);
  CHECK(riesz::rotate(s, q(-3)) == s);
}

TEST_CASE("cyclic_interval_count") {
  CHECK(riesz::cyclic_interval_count(unit({{q(9, 10), q(1)}, {q(0), q(1, 10)}})) == 1);
  CHECK(riesz::cyclic_interval_count(riesz::testing::two_intervals()) == 2);
  CHECK(riesz::cyclic_interval_count(IntervalUnion::empty()) == 0);
}

TEST_CASE("contains is half-open and periodic") {
  const auto wrap = unit({{q(9, 10), q(1)}, {q(0), q(1, 10)}});
  CHECK(wrap.contains(q(9, 10)));
  CHECK(wrap.contains(q(0)));
  CHECK(wrap.contains(q(1)));
  CHECK_FALSE(wrap.contains(q(1, 10)));
  CHECK(wrap.contains(q(-1, 20)));
  CHECK_FALSE(wrap.contains(q(1, 2)));
}

TEST_CASE("fold_profile examples") {
  const auto full = riesz::fold_profile(riesz::testing::full_circle(), 3);
  CHECK(full.breakpoints == std::vector<Rational>{q(0), q(1, 3)});
  CHECK(full.counts == std::vector<std::int64_t>{3});

  const auto two = riesz::fold_profile(riesz::testing::two_intervals(), 5);
  for (std::int64_t c : two.counts) CHECK(c == 2);

  const auto tq = riesz::fold_profile(riesz::testing::three_quarters(), 3);
  CHECK(tq.breakpoints == std::vector<Rational>{q(0), q(1, 12), q(1, 3)});
  CHECK(tq.counts == std::vector<std::int64_t>{3, 2});
}

TEST_CASE("level_set examples") {
  const auto tq = riesz::fold_profile(riesz::testing::three_quarters(), 3);
  const auto top = riesz::level_set(tq, 3);
  CHECK(top.circumference() == q(1, 3));
  CHECK(arcs_of(top) == std::vector<Arc>{{q(0), q(1, 12)}});

  const auto full = riesz::fold_profile(riesz::testing::full_circle(), 3);
  for (std::int64_t n = 1; n <= 3; ++n) {
    const auto u = riesz::level_set(full, n);
    CHECK(u.is_full());
    CHECK(arcs_of(u) == std::vector<Arc>{{q(0), q(1, 3)}});
  }
  const auto two = riesz::fold_profile(riesz::testing::two_intervals(), 5);
  CHECK(riesz::level_set(two, 3).is_empty());
}

TEST_CASE("scale_to_unit examples and overflow") {
  const auto cell3 = IntervalUnion::from_arcs(std::vector<Arc>{{q(0), q(1, 12)}}, q(1, 3));
  CHECK(arcs_of(riesz::scale_to_unit(cell3, 3)) == std::vector<Arc>{{q(0), q(1, 4)}});
  const auto cell5 = IntervalUnion::from_arcs(std::vector<Arc>{{q(0), q(1, 5)}}, q(1, 5));
  CHECK(riesz::scale_to_unit(cell5, 5).is_full());
  const auto mid = unit({{q(1, 20), q(3, 20)}});
  CHECK(arcs_of(riesz::scale_to_unit(mid, 5)) == std::vector<Arc>{{q(1, 4), q(3, 4)}});
  const auto long_arc = unit({{q(0), q(3, 10)}});
  CHECK_THROWS_AS(riesz::scale_to_unit(long_arc, 5), riesz::Error);
  try {
    riesz::scale_to_unit(long_arc, 5);
  } catch (const riesz::Error& e) {
    CHECK(e.kind() == riesz::ErrorKind::kScaleOverflow);
  }
}

TEST_CASE("common_denominator") {
  CHECK(riesz::common_denominator(riesz::testing::two_intervals()) == 10);
  CHECK(riesz::common_denominator(riesz::testing::three_quarters()) == 4);
  CHECK(riesz::common_denominator(riesz::testing::full_circle()) == 1);
}

TEST_CASE("property: fold_profile agrees with brute-force enumeration") {
  for (const auto& member : riesz::testing::corpus(60, 11)) {
    for (std::int64_t n = 1; n <= 12; ++n) {
      const auto p = riesz::fold_profile(member.set, n);
      REQUIRE(p.breakpoints.size() == p.counts.size() + 1);
      CHECK(p.breakpoints.front() == 0);
      CHECK(p.breakpoints.back() == q(1, n));
      for (std::size_t i = 0; i < p.counts.size(); ++i) {
        // Left end of the cell and an interior point both see the cell value.
        const Rational lo = p.breakpoints[i];
        const Rational mid = (p.breakpoints[i] + p.breakpoints[i + 1]) / 2;
        CHECK(brute_phi(member.set, n, lo) == p.counts[i]);
        CHECK(brute_phi(member.set, n, mid) == p.counts[i]);
        CHECK(p.counts[i] >= 0);
        CHECK(p.counts[i] <= n);
      }
    }
  }
}

TEST_CASE("property: level sets partition the measure and are nested") {
  for (const auto& member : riesz::testing::corpus(60, 12)) {
    for (std::int64_t n = 1; n <= 15; ++n) {
      const auto p = riesz::fold_profile(member.set, n);
      Rational total = 0;
      Rational weighted = 0;
      for (std::size_t i = 0; i < p.counts.size(); ++i) {
        weighted += (p.breakpoints[i + 1] - p.breakpoints[i]) * p.counts[i];
      }
      CHECK(weighted == riesz::measure(member.set));
      IntervalUnion previous = riesz::level_set(p, 1);
      total += riesz::measure(previous);
      for (std::int64_t k = 2; k <= n; ++k) {
        const auto current = riesz::level_set(p, k);
        total += riesz::measure(current);
        for (const Arc& a : current.arcs()) {
          CHECK(previous.contains(a.left));
          CHECK(previous.contains((a.left + a.right) / 2));
        }
        previous = current;
      }
      CHECK(total == riesz::measure(member.set));
    }
  }
}

TEST_CASE("property: level-set counts stay at most L, equality forces interlacement") {
  for (const auto& member : riesz::testing::corpus(120, 13)) {
    const auto& set = member.set;
    const std::size_t arcs = riesz::cyclic_interval_count(set);
    const auto lefts = set.left_endpoints();
    const auto rights = set.right_endpoints();
    for (std::int64_t n = 1; n <= 2 * member.grid; ++n) {
      const auto p = riesz::fold_profile(set, n);
      bool at_cap = false;
      for (std::int64_t k = 1; k <= n; ++k) {
        const std::size_t count = riesz::cyclic_interval_count(riesz::level_set(p, k));
        CHECK(count <= arcs);
        at_cap = at_cap || count == arcs;
      }
      if (at_cap) {
        const auto verdict = riesz::interlaces(riesz::frac_parts(lefts, n),
                                               riesz::frac_parts(rights, n));
        CHECK(verdict != riesz::Verdict::kNotInterlaced);
      }
    }
  }
}

TEST_CASE("property: normalize idempotent, rotate preserves measure and count") {
  std::mt19937_64 rng(14);
  std::uniform_int_distribution<std::int64_t> shift(-120, 120);
  for (const auto& member : riesz::testing::corpus(100, 15)) {
    const auto& set = member.set;
    CHECK(IntervalUnion::from_arcs(set.arcs()) == set);
    const Rational x(shift(rng), 60);
    const auto moved = riesz::rotate(set, x);
    CHECK(riesz::measure(moved) == riesz::measure(set));
    CHECK(riesz::cyclic_interval_count(moved) == riesz::cyclic_interval_count(set));
    CHECK(riesz::rotate(moved, -x) == set);
    for (std::int64_t k = 0; k < 60; ++k) {
      CHECK(moved.contains(Rational(k, 60) + x) == set.contains(Rational(k, 60)));
    }
  }
}
