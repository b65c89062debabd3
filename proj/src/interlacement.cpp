#include "riesz/interlacement.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "riesz/error.hpp"

namespace riesz {

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::kInterlaced:
      return "interlaced";
    case Verdict::kNotInterlaced:
      return "not_interlaced";
    case Verdict::kTied:
      return "tied";
  }
  return "tied";
}

std::vector<Rational> frac_parts(std::span<const Rational> points,
                                 std::int64_t modulus) {
  std::vector<Rational> out;
  out.reserve(points.size());
  const Rational n(modulus);
  for (const Rational& p : points) out.push_back(frac(n * p));
  return out;
}

Verdict interlaces(std::span<const Rational> fa, std::span<const Rational> fb) {
  if (fa.size() != fb.size() || fa.empty()) {
    throw Error(ErrorKind::kArity, "arity error: need two lists of equal "
                                   "positive length");
  }
  struct Tagged {
    Rational value;
    bool from_a;
  };
  std::vector<Tagged> merged;
  merged.reserve(2 * fa.size());
  for (const Rational& v : fa) merged.push_back({v, true});
  for (const Rational& v : fb) merged.push_back({v, false});
  std::sort(merged.begin(), merged.end(),
            [](const Tagged& x, const Tagged& y) {
              if (x.value != y.value) return x.value < y.value;
              return x.from_a && !y.from_a;
            });
  for (std::size_t i = 0; i + 1 < merged.size(); ++i) {
    if (merged[i].value == merged[i + 1].value &&
        merged[i].from_a != merged[i + 1].from_a) {
      return Verdict::kTied;
    }
  }
  // Equal values inside one list sit next to each other with the same tag,
  // so they break alternation, as they should under weak inequalities.
  for (std::size_t i = 0; i < merged.size(); ++i) {
    const auto& next = merged[(i + 1) % merged.size()];
    if (merged[i].from_a == next.from_a) return Verdict::kNotInterlaced;
  }
  return Verdict::kInterlaced;
}

namespace {

// A rational point p = num/den reduced so that e(N p) is evaluated from the
// exact residue (N num) mod den.
struct PhasePoint {
  std::int64_t num;
  std::int64_t den;

  explicit PhasePoint(const Rational& p) {
    const Rational f = frac(p);
    num = to_int64(numerator_of(f));
    den = to_int64(denominator_of(f));
  }

  std::complex<double> root(std::int64_t modulus) const {
    const auto residue = static_cast<std::int64_t>(
        (static_cast<__int128>(modulus) * num) % den);
    const double angle = 2.0 * std::numbers::pi *
                         static_cast<double>(residue) /
                         static_cast<double>(den);
    return {std::cos(angle), std::sin(angle)};
  }
};

std::vector<PhasePoint> phase_points(std::span<const Rational> points) {
  std::vector<PhasePoint> out;
  out.reserve(points.size());
  for (const Rational& p : points) out.emplace_back(p);
  return out;
}

double s_value_fast(const std::vector<PhasePoint>& a,
                    const std::vector<PhasePoint>& b, std::int64_t modulus) {
  std::complex<double> sum = 0.0;
  for (const PhasePoint& x : a) sum += x.root(modulus);
  for (const PhasePoint& x : b) sum -= x.root(modulus);
  return std::norm(sum);
}

void check_arity(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) {
    throw Error(ErrorKind::kArity, "arity error: a and b differ in length");
  }
}

}  // namespace

double s_value(std::span<const Rational> a, std::span<const Rational> b,
               std::int64_t modulus) {
  check_arity(a, b);
  return s_value_fast(phase_points(a), phase_points(b), modulus);
}

std::vector<double> partial_sums_S(std::span<const Rational> a,
                                   std::span<const Rational> b,
                                   std::int64_t k) {
  check_arity(a, b);
  const auto pa = phase_points(a);
  const auto pb = phase_points(b);
  std::vector<double> sums;
  sums.reserve(static_cast<std::size_t>(std::max<std::int64_t>(k, 0)));
  double running = 0.0;
  for (std::int64_t n = 1; n <= k; ++n) {
    running += s_value_fast(pa, pb, n);
    sums.push_back(running);
  }
  return sums;
}

double partial_sum_S(std::span<const Rational> a, std::span<const Rational> b,
                     std::int64_t k) {
  const auto sums = partial_sums_S(a, b, k);
  return sums.empty() ? 0.0 : sums.back();
}

std::int64_t dirichlet_approx(std::span<const Rational> points,
                              const Rational& eps, std::int64_t start) {
  // Terminates: n = start rounded up to a multiple of the common
  // denominator puts every n p on an integer.
  for (std::int64_t n = std::max<std::int64_t>(start, 1);; ++n) {
    const Rational nn(n);
    const bool close = std::all_of(
        points.begin(), points.end(), [&](const Rational& p) {
          const Rational f = frac(nn * p);
          return std::min(f, Rational(1) - f) <= eps;
        });
    if (close) return n;
  }
}

InterlacementDiagnostics diagnose_interlacement(std::span<const Rational> a,
                                                std::span<const Rational> b,
                                                std::int64_t modulus) {
  InterlacementDiagnostics d;
  d.modulus = modulus;
  d.frac_a = frac_parts(a, modulus);
  d.frac_b = frac_parts(b, modulus);
  d.verdict = interlaces(d.frac_a, d.frac_b);
  d.s_value = s_value(a, b, modulus);
  return d;
}

}  // namespace riesz
