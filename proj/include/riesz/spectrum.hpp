#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "riesz/rational.hpp"

namespace riesz {

// Largest stretch factor handed to the rounding rule. Rounding n / beta to
// the nearest integer moves the rescaled sequence by at most beta / 2, and
// 9/40 stays under the Kadec 1/4 bound.
inline const Rational kBaseThreshold{9, 20};

struct Spectrum;

struct EmptySpectrum {
  friend bool operator==(const EmptySpectrum&, const EmptySpectrum&) = default;
};

struct AllIntegers {
  friend bool operator==(const AllIntegers&, const AllIntegers&) = default;
};

// { round(n / beta) : n in Z }, halves rounded away from zero.
struct RoundedStretch {
  Rational beta;
  friend bool operator==(const RoundedStretch&,
                         const RoundedStretch&) = default;
};

// Union over j = 1..N of (N * children[j-1] + j).
struct Combined {
  std::int64_t modulus = 1;
  std::vector<Spectrum> children;
  friend bool operator==(const Combined&, const Combined&) = default;
};

// Finite recursive descriptor of an infinite integer set.
struct Spectrum {
  using Node = std::variant<EmptySpectrum, AllIntegers, RoundedStretch, Combined>;
  Node node;

  static Spectrum empty() { return {EmptySpectrum{}}; }
  static Spectrum integers() { return {AllIntegers{}}; }

  friend bool operator==(const Spectrum&, const Spectrum&) = default;
};

// Throws kBetaTooLarge unless 0 < beta <= 9/20.
Spectrum base_spectrum(const Rational& beta);

// Throws kArity unless parts.size() == N.
Spectrum combine(std::int64_t modulus, std::vector<Spectrum> parts);

// round(n / beta) with ties away from zero.
std::int64_t rounded_stretch_element(const Rational& beta, std::int64_t n);

// Elements in [lo, hi], strictly increasing.
std::vector<std::int64_t> enumerate_range(const Spectrum& spectrum,
                                          std::int64_t lo, std::int64_t hi);

// Elements in [-K, K], strictly increasing.
std::vector<std::int64_t> enumerate(const Spectrum& spectrum, std::int64_t k);

bool contains(const Spectrum& spectrum, std::int64_t x);

// Exact density implied by the descriptor.
Rational density(const Spectrum& spectrum);

// Upper bound on | |Lambda ∩ [x, y)| - density * (y - x) | over all real
// x < y, assembled bottom-up: 1 for Z, beta + 1 for a rounded stretch, the
// sum of the children for a combined node.
Rational discrepancy_bound(const Spectrum& spectrum);

// Every modulus N used by a Combined node.
std::set<std::int64_t> moduli(const Spectrum& spectrum);

// Nesting depth of Combined nodes.
std::size_t combined_depth(const Spectrum& spectrum);

// Canonical nested prefix form: "Z", "E", "R(1/4)", "C5(Z,Z,E,E,E)".
std::string to_text(const Spectrum& spectrum);

// Inverse of to_text; throws kParse.
Spectrum parse_spectrum(std::string_view text);

}  // namespace riesz
