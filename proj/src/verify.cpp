#include "riesz/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <random>

#include <fmt/format.h>

#include "riesz/error.hpp"

namespace riesz {

namespace {

constexpr double kSubspaceCutoff = 1e-10;
// Whitening divides by square roots of Gram eigenvalues down to the cutoff,
// so their eigenvectors need resolving well below it.
constexpr double kWhiteningTolerance = 1e-14;
constexpr std::int64_t kMinorCap = 12;

struct Fraction64 {
  std::int64_t num;
  std::int64_t den;
};

Fraction64 to_fraction(const Rational& x) {
  return {to_int64(numerator_of(x)), to_int64(denominator_of(x))};
}

// e(k p / q) from the exact residue of k p modulo q.
Complex unit_phase(std::int64_t k, const Fraction64& x) {
  __int128 residue = (static_cast<__int128>(k) * x.num) % x.den;
  if (residue < 0) residue += x.den;
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(residue) /
                       static_cast<double>(x.den);
  return {std::cos(angle), std::sin(angle)};
}

struct ArcTable {
  std::vector<std::pair<Fraction64, Fraction64>> arcs;
  double measure = 0.0;

  explicit ArcTable(const IntervalUnion& set) {
    for (const Arc& a : set.arcs()) {
      arcs.emplace_back(to_fraction(a.left), to_fraction(a.right));
    }
    measure = to_double(riesz::measure(set));
  }

  Complex at(std::int64_t k) const {
    if (k == 0) return measure;
    Complex sum = 0.0;
    for (const auto& [left, right] : arcs) {
      sum += unit_phase(k, right) - unit_phase(k, left);
    }
    return sum / Complex(0.0, 2.0 * std::numbers::pi * static_cast<double>(k));
  }
};

// Rayleigh quotient x^H A x / x^H B x.
double quotient(const ComplexMatrix& a, const ComplexMatrix& b,
                const std::vector<Complex>& x) {
  Complex num = 0.0;
  Complex den = 0.0;
  const std::size_t n = x.size();
  for (std::size_t i = 0; i < n; ++i) {
    Complex row_a = 0.0;
    Complex row_b = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      row_a += a(i, j) * x[j];
      row_b += b(i, j) * x[j];
    }
    num += std::conj(x[i]) * row_a;
    den += std::conj(x[i]) * row_b;
  }
  return num.real() / den.real();
}

void for_each_subset(std::int64_t n, std::int64_t k,
                     const std::function<void(const std::vector<std::int64_t>&)>& fn) {
  std::vector<std::int64_t> pick(static_cast<std::size_t>(k));
  for (std::int64_t i = 0; i < k; ++i) pick[i] = i;
  while (true) {
    fn(pick);
    std::int64_t i = k - 1;
    while (i >= 0 && pick[i] == n - k + i) --i;
    if (i < 0) return;
    ++pick[i];
    for (std::int64_t j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
}

}  // namespace

Complex ft_indicator(const IntervalUnion& set, std::int64_t k) {
  return ArcTable(set).at(k);
}

std::vector<Complex> ft_table(const IntervalUnion& set, std::int64_t max_k) {
  const ArcTable table(set);
  std::vector<Complex> out;
  out.reserve(static_cast<std::size_t>(2 * max_k + 1));
  for (std::int64_t k = -max_k; k <= max_k; ++k) out.push_back(table.at(k));
  return out;
}

ComplexMatrix gram_matrix(std::span<const std::int64_t> lams,
                          const IntervalUnion& set) {
  std::vector<std::int64_t> sorted(lams.begin(), lams.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorKind::kDegenerateSystem, "degenerate system");
  }
  const std::size_t n = lams.size();
  ComplexMatrix g(n);
  if (n == 0) return g;
  const std::int64_t span = sorted.back() - sorted.front();
  const auto table = ft_table(set, span);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      g(j, k) = table[static_cast<std::size_t>(lams[j] - lams[k] + span)];
    }
  }
  return g;
}

std::vector<WindowBounds> riesz_bounds_profile(
    std::span<const std::int64_t> lams, const IntervalUnion& set,
    std::span<const std::int64_t> windows) {
  std::vector<WindowBounds> out;
  for (std::size_t i = 0; i < windows.size(); ++i) {
    if (i > 0 && windows[i] <= windows[i - 1]) {
      throw Error(ErrorKind::kOutOfRange, "windows must be increasing");
    }
    const std::int64_t k = windows[i];
    std::vector<std::int64_t> inside;
    std::copy_if(lams.begin(), lams.end(), std::back_inserter(inside),
                 [k](std::int64_t x) { return x >= -k && x <= k; });
    WindowBounds bounds;
    bounds.window = k;
    bounds.size = inside.size();
    if (!inside.empty()) {
      const auto eig = hermitian_eigenvalues(gram_matrix(inside, set));
      bounds.min_eig = eig.front();
      bounds.max_eig = eig.back();
    }
    out.push_back(bounds);
  }
  return out;
}

std::vector<WindowBounds> riesz_bounds_profile(
    const Spectrum& spectrum, const IntervalUnion& set,
    std::span<const std::int64_t> windows) {
  if (windows.empty()) return {};
  const auto lams = enumerate(spectrum, windows.back());
  return riesz_bounds_profile(lams, set, windows);
}

namespace {

// Builds A (frame sum) and B (Gram of the f_g) and minimizes x^H A x / x^H B x
// over the test functions. With `tail`, A also carries the integer-frequency
// energy outside [-K_window, K_window].
double frame_test(std::span<const std::int64_t> lams, const IntervalUnion& set,
                  std::int64_t k_test, std::int64_t k_window, std::uint64_t seed,
                  int random_trials, bool tail) {
  if (k_test < 0 || k_window < 4 * k_test) {
    throw Error(ErrorKind::kWindowRatio,
                fmt::format("window/test ratio: K_window = {} < 4 * K_test = {}",
                            k_window, 4 * k_test));
  }
  std::vector<std::int64_t> used;
  std::copy_if(lams.begin(), lams.end(), std::back_inserter(used),
               [k_window](std::int64_t x) {
                 return x >= -k_window && x <= k_window;
               });
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  std::vector<std::int64_t> missing;
  if (tail) {
    for (std::int64_t n = -k_window; n <= k_window; ++n) {
      if (!std::binary_search(used.begin(), used.end(), n)) missing.push_back(n);
    }
  }

  const std::int64_t reach = k_test + k_window;
  const auto table = ft_table(set, reach);
  auto ft = [&](std::int64_t k) {
    return table[static_cast<std::size_t>(k + reach)];
  };

  // Test functions f_g, g = -K_test..K_test. With x the coefficient vector,
  // sum_lambda |<f, e_lambda>|^2 = x^H A x and ||f||^2 = x^H B x.
  const auto m = static_cast<std::size_t>(2 * k_test + 1);
  ComplexMatrix a(m);
  ComplexMatrix b(m);
  for (std::size_t i = 0; i < m; ++i) {
    const std::int64_t gi = static_cast<std::int64_t>(i) - k_test;
    for (std::size_t j = 0; j < m; ++j) {
      const std::int64_t gj = static_cast<std::int64_t>(j) - k_test;
      Complex sum = 0.0;
      b(i, j) = ft(gj - gi);
      if (tail) {
        // Parseval over Z: ||f||^2 minus the window frequencies not in Lambda.
        for (std::int64_t n : missing) sum += std::conj(ft(gi - n)) * ft(gj - n);
        a(i, j) = b(i, j) - sum;
      } else {
        for (std::int64_t lam : used) sum += std::conj(ft(gi - lam)) * ft(gj - lam);
        a(i, j) = sum;
      }
    }
  }

  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < m; ++i) {
    best = std::min(best, a(i, i).real() / b(i, i).real());
  }

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  for (int trial = 0; trial < random_trials; ++trial) {
    std::vector<Complex> x(m);
    for (Complex& z : x) z = Complex(normal(rng), normal(rng));
    best = std::min(best, quotient(a, b, x));
  }

  // Whitened problem on the well-conditioned part of span{f_g}.
  const HermitianEigen gram = hermitian_eigen(b, kWhiteningTolerance);
  const double cutoff = kSubspaceCutoff * gram.values.back();
  std::vector<std::size_t> kept;
  for (std::size_t k = 0; k < m; ++k) {
    if (gram.values[k] > cutoff) kept.push_back(k);
  }
  const std::size_t r = kept.size();
  std::vector<std::vector<Complex>> basis(r, std::vector<Complex>(m));
  for (std::size_t c = 0; c < r; ++c) {
    const double scale = 1.0 / std::sqrt(gram.values[kept[c]]);
    for (std::size_t row = 0; row < m; ++row) {
      basis[c][row] = gram.vectors(row, kept[c]) * scale;
    }
  }
  ComplexMatrix reduced(r);
  for (std::size_t p = 0; p < r; ++p) {
    for (std::size_t q = 0; q < r; ++q) {
      Complex sum = 0.0;
      for (std::size_t i = 0; i < m; ++i) {
        Complex row = 0.0;
        for (std::size_t j = 0; j < m; ++j) row += a(i, j) * basis[q][j];
        sum += std::conj(basis[p][i]) * row;
      }
      reduced(p, q) = sum;
    }
  }
  // Symmetrize away rounding before the Hermitian check.
  for (std::size_t p = 0; p < r; ++p) {
    reduced(p, p) = reduced(p, p).real();
    for (std::size_t q = p + 1; q < r; ++q) {
      const Complex avg = 0.5 * (reduced(p, q) + std::conj(reduced(q, p)));
      reduced(p, q) = avg;
      reduced(q, p) = std::conj(avg);
    }
  }
  if (r > 0) {
    const HermitianEigen low = hermitian_eigen(reduced, kWhiteningTolerance);
    std::vector<Complex> x(m, 0.0);
    for (std::size_t c = 0; c < r; ++c) {
      for (std::size_t row = 0; row < m; ++row) {
        x[row] += basis[c][row] * low.vectors(c, 0);
      }
    }
    best = std::min(best, quotient(a, b, x));
  }
  return best;
}

}  // namespace

double frame_lower_test(std::span<const std::int64_t> lams,
                        const IntervalUnion& set, std::int64_t k_test,
                        std::int64_t k_window, std::uint64_t seed,
                        int random_trials) {
  return frame_test(lams, set, k_test, k_window, seed, random_trials, false);
}

double frame_tail_test(std::span<const std::int64_t> lams,
                       const IntervalUnion& set, std::int64_t k_test,
                       std::int64_t k_window, std::uint64_t seed,
                       int random_trials) {
  return frame_test(lams, set, k_test, k_window, seed, random_trials, true);
}

double frame_lower_test(const Spectrum& spectrum, const IntervalUnion& set,
                        std::int64_t k_test, std::int64_t k_window,
                        std::uint64_t seed, int random_trials) {
  const auto lams = enumerate(spectrum, k_window);
  return frame_lower_test(lams, set, k_test, k_window, seed, random_trials);
}

double discrepancy(std::span<const std::int64_t> sorted_lams, std::int64_t k,
                   const Rational& alpha) {
  const double a = to_double(alpha);
  // D(x) = |Lambda ∩ [-K, x)| - alpha (x + K) for x = -K..K+1; every
  // interval deviation is a difference of two D values.
  auto it = std::lower_bound(sorted_lams.begin(), sorted_lams.end(), -k);
  std::int64_t count = 0;
  double lo = 0.0;
  double hi = 0.0;
  for (std::int64_t x = -k; x <= k; ++x) {
    if (it != sorted_lams.end() && *it == x) {
      ++count;
      ++it;
    }
    const double d = static_cast<double>(count) - a * static_cast<double>(x + 1 + k);
    lo = std::min(lo, d);
    hi = std::max(hi, d);
  }
  return hi - lo;
}

double discrepancy(const Spectrum& spectrum, std::int64_t k,
                   const IntervalUnion& set) {
  return discrepancy(enumerate(spectrum, k), k, measure(set));
}

DensityEstimate density_estimate(std::span<const std::int64_t> sorted_lams,
                                 std::int64_t r, std::int64_t k) {
  if (r < 1 || 10 * r > k) {
    throw Error(ErrorKind::kOutOfRange,
                fmt::format("density window r = {} must satisfy 1 <= r <= K/10 "
                            "with K = {}",
                            r, k));
  }
  // Indicator of Lambda on [-K, K], then a sliding count of width r.
  std::vector<int> hit(static_cast<std::size_t>(2 * k + 1), 0);
  for (std::int64_t x : sorted_lams) {
    if (x >= -k && x <= k) hit[static_cast<std::size_t>(x + k)] = 1;
  }
  std::int64_t count = 0;
  for (std::int64_t i = 0; i < r; ++i) count += hit[static_cast<std::size_t>(i)];
  std::int64_t lo = count;
  std::int64_t hi = count;
  for (std::size_t i = static_cast<std::size_t>(r); i < hit.size(); ++i) {
    count += hit[i] - hit[i - static_cast<std::size_t>(r)];
    lo = std::min(lo, count);
    hi = std::max(hi, count);
  }
  const double width = static_cast<double>(r);
  return {static_cast<double>(lo) / width, static_cast<double>(hi) / width};
}

DensityEstimate density_estimate(const Spectrum& spectrum, std::int64_t r,
                                 std::int64_t k) {
  return density_estimate(enumerate(spectrum, k), r, k);
}

double vandermonde_condition(std::int64_t modulus, std::int64_t n) {
  if (modulus > kMinorCap) {
    throw Error(ErrorKind::kMinorCap,
                fmt::format("minor enumeration cap: N = {} exceeds {}", modulus,
                            kMinorCap));
  }
  if (n < 1 || n > modulus) {
    throw Error(ErrorKind::kOutOfRange, "need 1 <= n <= N");
  }
  double worst = 0.0;
  for_each_subset(modulus, n, [&](const std::vector<std::int64_t>& cols) {
    // Minor V(j, c) = e(-j l_c / N), j = 1..n; ||V^{-1}|| = 1 / sigma_min.
    const auto size = static_cast<std::size_t>(n);
    std::vector<Complex> v(size * size);
    for (std::size_t j = 0; j < size; ++j) {
      for (std::size_t c = 0; c < size; ++c) {
        const std::int64_t power = -static_cast<std::int64_t>(j + 1) * cols[c];
        v[j * size + c] = unit_phase(power, {1, modulus});
      }
    }
    ComplexMatrix vhv(size);
    for (std::size_t p = 0; p < size; ++p) {
      for (std::size_t q = 0; q < size; ++q) {
        Complex sum = 0.0;
        for (std::size_t j = 0; j < size; ++j) {
          sum += std::conj(v[j * size + p]) * v[j * size + q];
        }
        vhv(p, q) = sum;
      }
    }
    const double smallest = hermitian_eigenvalues(vhv).front();
    worst = std::max(worst, 1.0 / std::sqrt(std::max(smallest, 0.0)));
  });
  return worst;
}

std::optional<double> vandermonde_bound(std::int64_t modulus) {
  if (modulus > kMinorCap) return std::nullopt;
  double worst = 0.0;
  for (std::int64_t n = 1; n <= modulus; ++n) {
    worst = std::max(worst, vandermonde_condition(modulus, n));
  }
  return worst;
}

}  // namespace riesz
