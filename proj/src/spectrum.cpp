#include "riesz/spectrum.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "riesz/error.hpp"

namespace riesz {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

// floor(a / b) for b > 0.
std::int64_t floor_div(__int128 a, __int128 b) {
  __int128 q = a / b;
  if (a % b != 0 && a < 0) --q;
  return static_cast<std::int64_t>(q);
}

std::int64_t ceil_div(__int128 a, __int128 b) { return -floor_div(-a, b); }

struct StretchFraction {
  std::int64_t p;  // beta = p / q
  std::int64_t q;
};

StretchFraction as_fraction(const Rational& beta) {
  return {to_int64(numerator_of(beta)), to_int64(denominator_of(beta))};
}

void collect(const Spectrum& s, std::int64_t lo, std::int64_t hi,
             std::vector<std::int64_t>& out) {
  if (lo > hi) return;
  std::visit(
      Overloaded{
          [](const EmptySpectrum&) {},
          [&](const AllIntegers&) {
            for (std::int64_t x = lo; x <= hi; ++x) out.push_back(x);
          },
          [&](const RoundedStretch& r) {
            const auto [p, q] = as_fraction(r.beta);
            // round(n q / p) lies within 1/2 of n q / p, so n stays inside
            // [(lo - 1) p / q, (hi + 1) p / q].
            const std::int64_t n_lo = floor_div(__int128(lo - 1) * p, q);
            const std::int64_t n_hi = ceil_div(__int128(hi + 1) * p, q);
            for (std::int64_t n = n_lo; n <= n_hi; ++n) {
              const std::int64_t x = rounded_stretch_element(r.beta, n);
              if (x >= lo && x <= hi) out.push_back(x);
            }
          },
          [&](const Combined& c) {
            const std::int64_t n = c.modulus;
            for (std::int64_t j = 1; j <= n; ++j) {
              const Spectrum& child = c.children[j - 1];
              if (std::holds_alternative<EmptySpectrum>(child.node)) continue;
              const std::size_t start = out.size();
              collect(child, ceil_div(__int128(lo) - j, n),
                      floor_div(__int128(hi) - j, n), out);
              for (std::size_t i = start; i < out.size(); ++i) {
                out[i] = n * out[i] + j;
              }
            }
          },
      },
      s.node);
}

}  // namespace

Spectrum base_spectrum(const Rational& beta) {
  if (beta <= 0 || beta > kBaseThreshold) {
    throw Error(ErrorKind::kBetaTooLarge,
                fmt::format("beta too large: {} is outside (0, 9/20]",
                            to_string(beta)));
  }
  return {RoundedStretch{beta}};
}

Spectrum combine(std::int64_t modulus, std::vector<Spectrum> parts) {
  if (modulus < 1 || static_cast<std::int64_t>(parts.size()) != modulus) {
    throw Error(ErrorKind::kArity,
                fmt::format("need exactly N parts: N = {}, got {}", modulus,
                            parts.size()));
  }
  return {Combined{modulus, std::move(parts)}};
}

std::int64_t rounded_stretch_element(const Rational& beta, std::int64_t n) {
  const auto [p, q] = as_fraction(beta);
  const __int128 num = __int128(n) * q;
  const __int128 mag = num < 0 ? -num : num;
  const auto rounded = static_cast<std::int64_t>((2 * mag + p) / (2 * __int128(p)));
  return num < 0 ? -rounded : rounded;
}

std::vector<std::int64_t> enumerate_range(const Spectrum& spectrum,
                                          std::int64_t lo, std::int64_t hi) {
  std::vector<std::int64_t> out;
  collect(spectrum, lo, hi, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::int64_t> enumerate(const Spectrum& spectrum, std::int64_t k) {
  return enumerate_range(spectrum, -k, k);
}

bool contains(const Spectrum& spectrum, std::int64_t x) {
  return std::visit(
      Overloaded{
          [](const EmptySpectrum&) { return false; },
          [](const AllIntegers&) { return true; },
          [&](const RoundedStretch& r) {
            const auto [p, q] = as_fraction(r.beta);
            const std::int64_t guess = floor_div(__int128(x) * p, q);
            for (std::int64_t n = guess - 1; n <= guess + 2; ++n) {
              if (rounded_stretch_element(r.beta, n) == x) return true;
            }
            return false;
          },
          [&](const Combined& c) {
            const std::int64_t n = c.modulus;
            // Residue class j in 1..N.
            const std::int64_t j = ((x - 1) % n + n) % n + 1;
            return contains(c.children[j - 1], (x - j) / n);
          },
      },
      spectrum.node);
}

Rational density(const Spectrum& spectrum) {
  return std::visit(
      Overloaded{
          [](const EmptySpectrum&) { return Rational(0); },
          [](const AllIntegers&) { return Rational(1); },
          [](const RoundedStretch& r) { return r.beta; },
          [](const Combined& c) {
            Rational total = 0;
            for (const Spectrum& child : c.children) total += density(child);
            return Rational(total / c.modulus);
          },
      },
      spectrum.node);
}

Rational discrepancy_bound(const Spectrum& spectrum) {
  return std::visit(
      Overloaded{
          [](const EmptySpectrum&) { return Rational(0); },
          [](const AllIntegers&) { return Rational(1); },
          [](const RoundedStretch& r) { return Rational(r.beta + 1); },
          [](const Combined& c) {
            Rational total = 0;
            for (const Spectrum& child : c.children) {
              total += discrepancy_bound(child);
            }
            return total;
          },
      },
      spectrum.node);
}

std::set<std::int64_t> moduli(const Spectrum& spectrum) {
  std::set<std::int64_t> out;
  if (const auto* c = std::get_if<Combined>(&spectrum.node)) {
    out.insert(c->modulus);
    for (const Spectrum& child : c->children) {
      const auto sub = moduli(child);
      out.insert(sub.begin(), sub.end());
    }
  }
  return out;
}

std::size_t combined_depth(const Spectrum& spectrum) {
  const auto* c = std::get_if<Combined>(&spectrum.node);
  if (c == nullptr) return 0;
  std::size_t deepest = 0;
  for (const Spectrum& child : c->children) {
    deepest = std::max(deepest, combined_depth(child));
  }
  return deepest + 1;
}

std::string to_text(const Spectrum& spectrum) {
  return std::visit(
      Overloaded{
          [](const EmptySpectrum&) { return std::string("E"); },
          [](const AllIntegers&) { return std::string("Z"); },
          [](const RoundedStretch& r) {
            return fmt::format("R({})", to_string(r.beta));
          },
          [](const Combined& c) {
            std::string out = fmt::format("C{}(", c.modulus);
            for (std::size_t i = 0; i < c.children.size(); ++i) {
              if (i > 0) out += ',';
              out += to_text(c.children[i]);
            }
            out += ')';
            return out;
          },
      },
      spectrum.node);
}

namespace {

class SpectrumParser {
 public:
  explicit SpectrumParser(std::string_view text) : text_(text) {}

  Spectrum parse_all() {
    Spectrum s = parse_node();
    if (pos_ != text_.size()) fail("trailing characters");
    return s;
  }

 private:
  [[noreturn]] void fail(std::string_view why) const {
    throw Error(ErrorKind::kParse,
                fmt::format("spectrum descriptor \"{}\" at column {}: {}",
                            text_, pos_ + 1, why));
  }

  void expect(char c) {
    if (pos_ >= text_.size() || text_[pos_] != c) {
      fail(fmt::format("expected '{}'", c));
    }
    ++pos_;
  }

  std::string_view take_until(char stop) {
    const std::size_t end = text_.find(stop, pos_);
    if (end == std::string_view::npos) fail(fmt::format("missing '{}'", stop));
    const auto piece = text_.substr(pos_, end - pos_);
    pos_ = end;
    return piece;
  }

  Spectrum parse_node() {
    if (pos_ >= text_.size()) fail("unexpected end");
    const char head = text_[pos_++];
    switch (head) {
      case 'E':
        return Spectrum::empty();
      case 'Z':
        return Spectrum::integers();
      case 'R': {
        expect('(');
        const Rational beta = parse_rational(take_until(')'));
        expect(')');
        try {
          return base_spectrum(beta);
        } catch (const Error& e) {
          fail(e.what());
        }
      }
      case 'C': {
        const std::size_t digits_begin = pos_;
        while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') {
          ++pos_;
        }
        if (pos_ == digits_begin) fail("expected modulus");
        const std::int64_t modulus = to_int64(
            numerator_of(parse_rational(text_.substr(digits_begin, pos_ - digits_begin))));
        expect('(');
        std::vector<Spectrum> children;
        children.push_back(parse_node());
        while (pos_ < text_.size() && text_[pos_] == ',') {
          ++pos_;
          children.push_back(parse_node());
        }
        expect(')');
        try {
          return combine(modulus, std::move(children));
        } catch (const Error& e) {
          fail(e.what());
        }
      }
      default:
        --pos_;
        fail("unknown node");
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Spectrum parse_spectrum(std::string_view text) {
  return SpectrumParser(text).parse_all();
}

}  // namespace riesz
