#include "riesz/circle_sets.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "riesz/error.hpp"

namespace riesz {

IntervalUnion IntervalUnion::empty(Rational circumference) {
  return IntervalUnion({}, std::move(circumference));
}

IntervalUnion IntervalUnion::from_arcs(std::span<const Arc> raw,
                                       Rational circumference) {
  const Rational& c = circumference;
  // Unroll onto [0, C) as linear segments.
  std::vector<Arc> segments;
  segments.reserve(2 * raw.size());
  for (const Arc& arc : raw) {
    const Rational len = arc.length();
    if (len <= 0) continue;
    if (len >= c) return IntervalUnion({Arc{0, c}}, c);
    const Rational left = mod(arc.left, c);
    const Rational right = left + len;
    if (right <= c) {
      segments.push_back({left, right});
    } else {
      segments.push_back({left, c});
      segments.push_back({0, right - c});
    }
  }
  std::sort(segments.begin(), segments.end(),
            [](const Arc& a, const Arc& b) { return a.left < b.left; });

  std::vector<Arc> merged;
  for (Arc& s : segments) {
    if (!merged.empty() && s.left <= merged.back().right) {
      merged.back().right = std::max(merged.back().right, s.right);
    } else {
      merged.push_back(std::move(s));
    }
  }
  if (merged.size() == 1 && merged.front().left == 0 &&
      merged.front().right == c) {
    return IntervalUnion(std::move(merged), c);
  }
  // Glue the segment touching C to the one starting at 0.
  if (merged.size() >= 2 && merged.front().left == 0 &&
      merged.back().right == c) {
    merged.back().right = c + merged.front().right;
    merged.erase(merged.begin());
  }
  return IntervalUnion(std::move(merged), c);
}

bool IntervalUnion::is_full() const {
  return arcs_.size() == 1 && arcs_.front().length() == circumference_;
}

bool IntervalUnion::contains(const Rational& x) const {
  const Rational t = mod(x, circumference_);
  for (const Arc& arc : arcs_) {
    if (arc.left <= t && t < arc.right) return true;
    if (arc.right > circumference_ && t < arc.right - circumference_) {
      return true;
    }
  }
  return false;
}

std::vector<Rational> IntervalUnion::left_endpoints() const {
  std::vector<Rational> out;
  out.reserve(arcs_.size());
  for (const Arc& a : arcs_) out.push_back(a.left);
  return out;
}

std::vector<Rational> IntervalUnion::right_endpoints() const {
  std::vector<Rational> out;
  out.reserve(arcs_.size());
  for (const Arc& a : arcs_) out.push_back(a.right);
  return out;
}

IntervalUnion normalize(std::span<const Arc> raw) {
  if (raw.empty()) throw Error(ErrorKind::kEmptySet, "empty set");
  for (const Arc& arc : raw) {
    if (arc.left < 0 || arc.right > 1 || arc.left > 1 || arc.right < 0) {
      throw Error(ErrorKind::kOutOfRange,
                  fmt::format("out of range: [{}, {}) is not inside [0, 1]",
                              to_string(arc.left), to_string(arc.right)));
    }
    if (arc.left >= arc.right) {
      throw Error(ErrorKind::kOutOfRange,
                  fmt::format("left >= right in [{}, {})",
                              to_string(arc.left), to_string(arc.right)));
    }
  }
  IntervalUnion set = IntervalUnion::from_arcs(raw);
  if (set.is_empty()) throw Error(ErrorKind::kEmptySet, "empty set");
  return set;
}

Rational measure(const IntervalUnion& set) {
  Rational total = 0;
  for (const Arc& arc : set.arcs()) total += arc.length();
  return total;
}

IntervalUnion rotate(const IntervalUnion& set, const Rational& shift) {
  std::vector<Arc> moved;
  moved.reserve(set.arcs().size());
  for (const Arc& arc : set.arcs()) {
    moved.push_back({arc.left + shift, arc.right + shift});
  }
  return IntervalUnion::from_arcs(moved, set.circumference());
}

std::size_t cyclic_interval_count(const IntervalUnion& set) {
  return set.arcs().size();
}

FoldingProfile fold_profile(const IntervalUnion& set, std::int64_t modulus) {
  if (modulus < 1) {
    throw Error(ErrorKind::kOutOfRange, "folding modulus must be positive");
  }
  const Rational n(modulus);
  const Rational cell = Rational(1, modulus);

  FoldingProfile profile;
  profile.modulus = modulus;
  profile.breakpoints.push_back(0);
  for (const Arc& arc : set.arcs()) {
    profile.breakpoints.push_back(frac(n * arc.left) / n);
    profile.breakpoints.push_back(frac(n * arc.right) / n);
  }
  profile.breakpoints.push_back(cell);
  std::sort(profile.breakpoints.begin(), profile.breakpoints.end());
  profile.breakpoints.erase(
      std::unique(profile.breakpoints.begin(), profile.breakpoints.end()),
      profile.breakpoints.end());

  // With s = N t, the lattice t + Z/N meets [l, r) in
  // ceil(N r - s) - ceil(N l - s) points; r - l <= 1 keeps them distinct
  // modulo 1.
  profile.counts.reserve(profile.breakpoints.size() - 1);
  for (std::size_t i = 0; i + 1 < profile.breakpoints.size(); ++i) {
    const Rational s = n * profile.breakpoints[i];
    BigInt count = 0;
    for (const Arc& arc : set.arcs()) {
      count += ceil_of(n * arc.right - s) - ceil_of(n * arc.left - s);
    }
    profile.counts.push_back(to_int64(count));
  }
  return profile;
}

IntervalUnion level_set(const FoldingProfile& profile, std::int64_t n) {
  std::vector<Arc> cells;
  for (std::size_t i = 0; i < profile.counts.size(); ++i) {
    if (profile.counts[i] >= n) {
      cells.push_back({profile.breakpoints[i], profile.breakpoints[i + 1]});
    }
  }
  return IntervalUnion::from_arcs(cells, profile.cell_period());
}

IntervalUnion scale_to_unit(const IntervalUnion& set, std::int64_t modulus) {
  if (modulus < 1) {
    throw Error(ErrorKind::kOutOfRange, "scale modulus must be positive");
  }
  const Rational n(modulus);
  const Rational cell = Rational(1, modulus);
  const bool on_cell_circle = set.circumference() == cell;
  std::vector<Arc> scaled;
  scaled.reserve(set.arcs().size());
  for (const Arc& arc : set.arcs()) {
    const bool fits = on_cell_circle ? arc.length() <= cell
                                     : arc.right <= cell;
    if (!fits) {
      throw Error(ErrorKind::kScaleOverflow,
                  fmt::format("scale overflow: arc [{}, {}) exceeds 1/{}",
                              to_string(arc.left), to_string(arc.right),
                              modulus));
    }
    scaled.push_back({n * arc.left, n * arc.right});
  }
  return IntervalUnion::from_arcs(scaled);
}

BigInt common_denominator(const IntervalUnion& set) {
  BigInt d = denominator_of(set.circumference());
  for (const Arc& arc : set.arcs()) {
    d = lcm(d, denominator_of(arc.left));
    d = lcm(d, denominator_of(arc.right));
  }
  return d;
}

}  // namespace riesz
