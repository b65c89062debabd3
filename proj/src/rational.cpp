#include "riesz/rational.hpp"

#include <cctype>
#include <limits>

#include <fmt/format.h>

#include "riesz/error.hpp"

namespace riesz {

BigInt floor_of(const Rational& x) {
  const BigInt num = numerator_of(x);
  const BigInt den = denominator_of(x);
  BigInt q = num / den;  // truncates toward zero
  if (num < 0 && q * den != num) --q;
  return q;
}

BigInt ceil_of(const Rational& x) { return -floor_of(-x); }

Rational frac(const Rational& x) { return x - Rational(floor_of(x)); }

Rational mod(const Rational& x, const Rational& period) {
  return period * frac(x / period);
}

double to_double(const Rational& x) { return x.convert_to<double>(); }

std::int64_t to_int64(const BigInt& x) {
  if (x > std::numeric_limits<std::int64_t>::max() ||
      x < std::numeric_limits<std::int64_t>::min()) {
    throw Error(ErrorKind::kOutOfRange, "integer does not fit in 64 bits");
  }
  return x.convert_to<std::int64_t>();
}

namespace {

[[noreturn]] void parse_fail(std::string_view text, std::size_t column,
                             std::string_view why) {
  throw Error(ErrorKind::kParse,
              fmt::format("malformed number \"{}\" at column {}: {}", text,
                          column + 1, why));
}

BigInt parse_digits(std::string_view text, std::size_t begin, std::size_t end,
                    std::string_view whole) {
  if (begin == end) parse_fail(whole, begin, "expected digits");
  BigInt value = 0;
  for (std::size_t i = begin; i < end; ++i) {
    const char c = text[i];
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      parse_fail(whole, i, "unexpected character");
    }
    value = value * 10 + (c - '0');
  }
  return value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  if (pos == text.size()) parse_fail(text, pos, "empty number");

  Rational value;
  const auto slash = text.find('/', pos);
  const auto dot = text.find('.', pos);
  if (slash != std::string_view::npos) {
    if (dot != std::string_view::npos) parse_fail(text, dot, "mixed forms");
    const BigInt p = parse_digits(text, pos, slash, text);
    const BigInt q = parse_digits(text, slash + 1, text.size(), text);
    if (q == 0) parse_fail(text, slash + 1, "zero denominator");
    value = Rational(p, q);
  } else if (dot != std::string_view::npos) {
    const BigInt whole =
        dot == pos ? BigInt(0) : parse_digits(text, pos, dot, text);
    const BigInt fraction = parse_digits(text, dot + 1, text.size(), text);
    BigInt scale = 1;
    for (std::size_t i = dot + 1; i < text.size(); ++i) scale *= 10;
    value = Rational(whole) + Rational(fraction, scale);
  } else {
    value = Rational(parse_digits(text, pos, text.size(), text));
  }
  return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& x) {
  const BigInt den = denominator_of(x);
  if (den == 1) return numerator_of(x).str();
  return numerator_of(x).str() + "/" + den.str();
}

BigInt lcm(const BigInt& a, const BigInt& b) {
  return boost::multiprecision::lcm(a, b);
}

}  // namespace riesz
