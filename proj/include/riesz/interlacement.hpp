#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "riesz/rational.hpp"

namespace riesz {

enum class Verdict { kInterlaced, kNotInterlaced, kTied };

std::string_view to_string(Verdict verdict);

// Exact {N p} for each p.
std::vector<Rational> frac_parts(std::span<const Rational> points,
                                 std::int64_t modulus);

// Cyclic interlacement of two equally long lists of values in [0, 1).
// Any value shared between the lists is a tie; otherwise the lists
// interlace iff the merged cyclic order alternates between them.
// Throws kArity on a length mismatch or empty input.
Verdict interlaces(std::span<const Rational> fa, std::span<const Rational> fb);

// s_N = | sum_j e(N a_j) - sum_j e(N b_j) |^2, summed in index order.
double s_value(std::span<const Rational> a, std::span<const Rational> b,
               std::int64_t modulus);

// S_K = s_1 + ... + s_K.
double partial_sum_S(std::span<const Rational> a, std::span<const Rational> b,
                     std::int64_t k);

// All prefix sums S_1..S_K in one pass; entry K-1 holds S_K.
std::vector<double> partial_sums_S(std::span<const Rational> a,
                                   std::span<const Rational> b,
                                   std::int64_t k);

// Smallest n >= start with dist(n p, Z) <= eps for every point.
std::int64_t dirichlet_approx(std::span<const Rational> points,
                              const Rational& eps, std::int64_t start);

struct InterlacementDiagnostics {
  std::int64_t modulus = 1;
  std::vector<Rational> frac_a;
  std::vector<Rational> frac_b;
  Verdict verdict = Verdict::kTied;
  double s_value = 0.0;
};

InterlacementDiagnostics diagnose_interlacement(std::span<const Rational> a,
                                                std::span<const Rational> b,
                                                std::int64_t modulus);

}  // namespace riesz
