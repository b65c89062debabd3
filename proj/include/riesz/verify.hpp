#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "riesz/circle_sets.hpp"
#include "riesz/hermitian.hpp"
#include "riesz/spectrum.hpp"

namespace riesz {

inline constexpr std::uint64_t kDefaultSeed = 0x5EED;
inline constexpr double kCertificateSlack = 1e-9;

// Integral of e(k t) over the set, closed form per arc. The phase k * e is
// reduced exactly before leaving rational arithmetic.
Complex ft_indicator(const IntervalUnion& set, std::int64_t k);

// ft_indicator for every k in [-max_k, max_k]; entry k + max_k.
std::vector<Complex> ft_table(const IntervalUnion& set, std::int64_t max_k);

// Entry (j, k) = <e_{lambda_j}, e_{lambda_k}> in L^2(S), i.e.
// ft_indicator(S, lambda_j - lambda_k). Throws kDegenerateSystem on
// repeated frequencies.
ComplexMatrix gram_matrix(std::span<const std::int64_t> lams,
                          const IntervalUnion& set);

struct WindowBounds {
  std::int64_t window = 0;
  std::size_t size = 0;
  double min_eig = 0.0;
  double max_eig = 0.0;
};

// Extreme Gram eigenvalues of Lambda ∩ [-K, K] for each K. The lists must
// be increasing.
std::vector<WindowBounds> riesz_bounds_profile(const Spectrum& spectrum,
                                               const IntervalUnion& set,
                                               std::span<const std::int64_t> windows);

// Same, on an explicit frequency list (each window keeps |lambda| <= K).
std::vector<WindowBounds> riesz_bounds_profile(std::span<const std::int64_t> lams,
                                               const IntervalUnion& set,
                                               std::span<const std::int64_t> windows);

// Frame test on the subspace spanned by f_g = e_g 1_S, |g| <= K_test:
// min over test functions f of sum_lambda |<f, e_lambda>|^2 / ||f||^2, the
// sum running over the supplied frequencies. The test functions are the
// f_g themselves, `random_trials` random combinations drawn from `seed`,
// and the exact minimizer of the quotient over the numerically
// non-degenerate part of the subspace (Gram eigenvalues above 1e-10 times
// the largest). Throws kWindowRatio unless K_window >= 4 K_test.
double frame_lower_test(std::span<const std::int64_t> lams,
                        const IntervalUnion& set, std::int64_t k_test,
                        std::int64_t k_window,
                        std::uint64_t seed = kDefaultSeed,
                        int random_trials = 32);

double frame_lower_test(const Spectrum& spectrum, const IntervalUnion& set,
                        std::int64_t k_test, std::int64_t k_window,
                        std::uint64_t seed = kDefaultSeed,
                        int random_trials = 32);

// The frame quotient with the frequencies beyond K_window replaced by the
// integer-frequency tail ||f||^2 - sum_{|n| <= K_window} |<f, e_n>|^2.
// For Lambda inside Z this never falls below a true lower frame bound, so
// unlike frame_lower_test it does not dip on short sets whose coefficients
// spread past the window.
double frame_tail_test(std::span<const std::int64_t> lams,
                       const IntervalUnion& set, std::int64_t k_test,
                       std::int64_t k_window,
                       std::uint64_t seed = kDefaultSeed,
                       int random_trials = 32);

// max over integer intervals [x, y) inside [-K, K] of
// | |Lambda ∩ [x, y)| - |S| (y - x) |.
double discrepancy(std::span<const std::int64_t> sorted_lams, std::int64_t k,
                   const Rational& alpha);
double discrepancy(const Spectrum& spectrum, std::int64_t k,
                   const IntervalUnion& set);

struct DensityEstimate {
  double lower = 0.0;  // D^-
  double upper = 0.0;  // D^+
};

// Extremes of |Lambda ∩ [x, x + r)| / r over windows inside [-K, K].
// Requires 1 <= r <= K / 10.
DensityEstimate density_estimate(std::span<const std::int64_t> sorted_lams,
                                 std::int64_t r, std::int64_t k);
DensityEstimate density_estimate(const Spectrum& spectrum, std::int64_t r,
                                 std::int64_t k);

// max over n-column subsets of the n x N matrix {e(-j l / N)}, j = 1..n,
// of the operator norm of the inverse minor. Requires 1 <= n <= N <= 12.
double vandermonde_condition(std::int64_t modulus, std::int64_t n);

// Largest vandermonde_condition(N, n) over n = 1..N, or nothing when N
// exceeds the enumeration cap.
std::optional<double> vandermonde_bound(std::int64_t modulus);

}  // namespace riesz
