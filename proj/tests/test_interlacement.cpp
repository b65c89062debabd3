#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "corpus.hpp"
#include "riesz/error.hpp"
#include "riesz/interlacement.hpp"

using riesz::Rational;
using riesz::Verdict;

namespace {

Rational q(std::int64_t p, std::int64_t d = 1) { return Rational(p, d); }

std::vector<Rational> qs(std::initializer_list<Rational> xs) { return xs; }

// Interlacing without sorting the merged list: every gap between cyclically
// consecutive a-values holds exactly one b-value.
Verdict oracle_verdict(const std::vector<Rational>& fa, const std::vector<Rational>& fb) {
  for (const auto& x : fa) {
    for (const auto& y : fb) {
      if (x == y) return Verdict::kTied;
    }
  }
  std::vector<Rational> a = fa;
  std::sort(a.begin(), a.end());
  if (std::adjacent_find(a.begin(), a.end()) != a.end()) return Verdict::kNotInterlaced;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Rational& lo = a[i];
    const Rational hi = i + 1 < a.size() ? a[i + 1] : a[0] + 1;
    std::size_t inside = 0;
    for (const auto& y : fb) {
      const Rational lifted = y < lo ? y + 1 : y;
      if (lo < lifted && lifted < hi) ++inside;
    }
    if (inside != 1) return Verdict::kNotInterlaced;
  }
  return Verdict::kInterlaced;
}

double oracle_s(const std::vector<Rational>& a, const std::vector<Rational>& b,
                std::int64_t n) {
  std::complex<double> sum = 0.0;
  for (const auto& x : a) sum += std::polar(1.0, 2 * std::numbers::pi * n * riesz::to_double(x));
  for (const auto& x : b) sum -= std::polar(1.0, 2 * std::numbers::pi * n * riesz::to_double(x));
  return std::norm(sum);
}

}  // namespace

TEST_CASE("frac_parts examples") {
  CHECK(riesz::frac_parts(qs({q(1, 10), q(1, 2)}), 2) == qs({q(1, 5), q(0)}));
  CHECK(riesz::frac_parts(qs({q(1, 3), q(1, 4)}), 12) == qs({q(0), q(0)}));
  CHECK(riesz::frac_parts(qs({q(7, 10)}), 3) == qs({q(1, 10)}));
  CHECK(riesz::frac_parts(qs({q(-1, 3)}), 1) == qs({q(2, 3)}));
}

TEST_CASE("interlaces examples") {
  CHECK(riesz::interlaces(qs({q(1, 10), q(1, 2)}), qs({q(3, 10), q(7, 10)})) ==
        Verdict::kInterlaced);
  CHECK(riesz::interlaces(qs({q(0), q(1, 5)}), qs({q(2, 5), q(3, 5)})) ==
        Verdict::kNotInterlaced);
  CHECK(riesz::interlaces(qs({q(1, 2), q(1, 5)}), qs({q(1, 2), q(9, 10)})) ==
        Verdict::kTied);
  // One point each always alternates.
  CHECK(riesz::interlaces(qs({q(1, 3)}), qs({q(0)})) == Verdict::kInterlaced);
  // A repeated value within one list cannot alternate.
  CHECK(riesz::interlaces(qs({q(1, 5), q(1, 5)}), qs({q(1, 2), q(9, 10)})) ==
        Verdict::kNotInterlaced);
  // Alternation starting from b.
  CHECK(riesz::interlaces(qs({q(1, 5), q(3, 5)}), qs({q(0), q(2, 5)})) ==
        Verdict::kInterlaced);
}

TEST_CASE("interlaces arity errors") {
  auto kind = [](std::vector<Rational> a, std::vector<Rational> b) {
    try {
      riesz::interlaces(a, b);
    } catch (const riesz::Error& e) {
      return e.kind();
    }
    return riesz::ErrorKind::kParse;
  };
  CHECK(kind(qs({q(0)}), qs({q(1, 2), q(1, 3)})) == riesz::ErrorKind::kArity);
  CHECK(kind({}, {}) == riesz::ErrorKind::kArity);
  CHECK_THROWS_AS(riesz::s_value(qs({q(0)}), {}, 1), riesz::Error);
}

TEST_CASE("s_value examples") {
  CHECK(riesz::s_value(qs({q(0)}), qs({q(1, 2)}), 1) == doctest::Approx(4.0));
  CHECK(riesz::s_value(qs({q(0)}), qs({q(1, 2)}), 2) == doctest::Approx(0.0));
  CHECK(riesz::s_value(qs({q(1, 10), q(1, 2)}), qs({q(3, 10), q(7, 10)}), 10) ==
        doctest::Approx(0.0));
}

TEST_CASE("partial_sum_S examples") {
  CHECK(riesz::partial_sum_S(qs({q(0)}), qs({q(1, 2)}), 100) == doctest::Approx(200.0));
  CHECK(riesz::partial_sum_S(qs({q(0)}), qs({q(1, 2)}), 1) ==
        riesz::s_value(qs({q(0)}), qs({q(1, 2)}), 1));
  const auto a = qs({q(1, 10), q(1, 2)});
  const auto b = qs({q(3, 10), q(7, 10)});
  // Over one period of 10 the sum of s_N equals 2 L * 10 exactly (Parseval
  // on Z/10), so the deviation stays bounded by one period's worth.
  const double s = riesz::partial_sum_S(a, b, 10000);
  CHECK(std::abs(s - 40000.0) < 40.0);
  const auto sums = riesz::partial_sums_S(a, b, 20);
  REQUIRE(sums.size() == 20);
  CHECK(sums[9] == doctest::Approx(40.0));
  CHECK(sums[19] == doctest::Approx(80.0));
}

TEST_CASE("dirichlet_approx examples") {
  CHECK(riesz::dirichlet_approx(qs({q(1, 3), q(1, 4)}), q(1, 100), 1) == 12);
  CHECK(riesz::dirichlet_approx(qs({q(1, 2)}), q(1, 10), 1) == 2);
  CHECK(riesz::dirichlet_approx(qs({q(3, 10)}), q(1, 20), 1) == 10);
  CHECK(riesz::dirichlet_approx(qs({q(3, 10)}), q(1, 20), 11) == 20);
}

TEST_CASE("diagnose_interlacement bundles the pieces") {
  const auto d = riesz::diagnose_interlacement(qs({q(0)}), qs({q(1, 2)}), 3);
  CHECK(d.modulus == 3);
  CHECK(d.frac_a == qs({q(0)}));
  CHECK(d.frac_b == qs({q(1, 2)}));
  CHECK(d.verdict == Verdict::kInterlaced);
  CHECK(d.s_value == doctest::Approx(4.0));
}

TEST_CASE("property: verdict matches the gap-counting oracle") {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<std::size_t> len(1, 5);
  std::uniform_int_distribution<std::int64_t> tick(0, 11);
  for (int trial = 0; trial < 5000; ++trial) {
    const std::size_t n = len(rng);
    std::vector<Rational> fa;
    std::vector<Rational> fb;
    for (std::size_t i = 0; i < n; ++i) {
      fa.emplace_back(tick(rng), 12);
      fb.emplace_back(tick(rng), 12);
    }
    CHECK(riesz::interlaces(fa, fb) == oracle_verdict(fa, fb));
  }
}

TEST_CASE("property: verdict invariant under a common rotation") {
  std::mt19937_64 rng(22);
  std::uniform_int_distribution<std::size_t> len(1, 4);
  std::uniform_int_distribution<std::int64_t> tick(0, 29);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t n = len(rng);
    std::vector<Rational> fa;
    std::vector<Rational> fb;
    for (std::size_t i = 0; i < n; ++i) {
      fa.emplace_back(tick(rng), 30);
      fb.emplace_back(tick(rng), 30);
    }
    const Rational shift(tick(rng), 30);
    std::vector<Rational> ra;
    std::vector<Rational> rb;
    for (const auto& x : fa) ra.push_back(riesz::frac(x + shift));
    for (const auto& x : fb) rb.push_back(riesz::frac(x + shift));
    CHECK(riesz::interlaces(fa, fb) == riesz::interlaces(ra, rb));
  }
}

TEST_CASE("property: s_N matches direct evaluation and stays within (2L)^2") {
  for (const auto& member : riesz::testing::corpus(50, 23)) {
    const auto a = member.set.left_endpoints();
    const auto b = member.set.right_endpoints();
    const double cap = std::pow(2.0 * static_cast<double>(a.size()), 2);
    for (std::int64_t n = 1; n <= 2 * member.grid; ++n) {
      const double s = riesz::s_value(a, b, n);
      CHECK(s >= 0.0);
      CHECK(s <= cap + 1e-9);
      CHECK(s == doctest::Approx(oracle_s(a, b, n)).epsilon(1e-9).scale(cap));
    }
  }
}

TEST_CASE("property: s_N <= 4 whenever the fractional parts interlace") {
  for (const auto& member : riesz::testing::corpus(100, 24)) {
    const auto a = member.set.left_endpoints();
    const auto b = member.set.right_endpoints();
    for (std::int64_t n = 1; n <= 2 * member.grid; ++n) {
      const auto d = riesz::diagnose_interlacement(a, b, n);
      if (d.verdict == Verdict::kInterlaced) CHECK(d.s_value <= 4.0 + 1e-9);
    }
  }
}

TEST_CASE("property: some N in one period fails to interlace when L >= 2") {
  for (const auto& member : riesz::testing::corpus(150, 25)) {
    const auto a = member.set.left_endpoints();
    const auto b = member.set.right_endpoints();
    if (a.size() < 2) continue;
    const auto period = riesz::to_int64(riesz::common_denominator(member.set));
    bool found = false;
    for (std::int64_t n = 1; n <= period && !found; ++n) {
      found = riesz::interlaces(riesz::frac_parts(a, n), riesz::frac_parts(b, n)) ==
              Verdict::kNotInterlaced;
    }
    CAPTURE(member.grid);
    CHECK(found);
  }
}

TEST_CASE("property: |S_K - 2LK| bounded, deviation stable under doubling") {
  for (const auto& member : riesz::testing::corpus(20, 26)) {
    const auto a = member.set.left_endpoints();
    const auto b = member.set.right_endpoints();
    const double two_l = 2.0 * static_cast<double>(a.size());
    const auto sums = riesz::partial_sums_S(a, b, 2000);
    double first_half = 0.0;
    double whole = 0.0;
    for (std::size_t k = 1; k <= sums.size(); ++k) {
      const double dev = std::abs(sums[k - 1] - two_l * static_cast<double>(k));
      if (k <= 1000) first_half = std::max(first_half, dev);
      whole = std::max(whole, dev);
    }
    CHECK(whole <= first_half + 1e-6);
  }
}
