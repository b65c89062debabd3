#include "riesz/build.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "riesz/error.hpp"

namespace riesz {

std::string_view to_string(BuildNode::Rule rule) {
  switch (rule) {
    case BuildNode::Rule::kEmpty:
      return "empty";
    case BuildNode::Rule::kFull:
      return "full";
    case BuildNode::Rule::kBase:
      return "base";
    case BuildNode::Rule::kSingleInterval:
      return "single_interval";
    case BuildNode::Rule::kFolded:
      return "folded";
  }
  return "empty";
}

namespace {

std::size_t node_depth(const BuildNode& node) {
  std::size_t deepest = 0;
  for (const BuildNode& child : node.children) {
    deepest = std::max(deepest, node_depth(child));
  }
  const bool branching = node.rule == BuildNode::Rule::kFolded ||
                         node.rule == BuildNode::Rule::kSingleInterval;
  return deepest + (branching ? 1 : 0);
}

BuildNode leaf(IntervalUnion set, BuildNode::Rule rule) {
  BuildNode node;
  node.set = std::move(set);
  node.rule = rule;
  return node;
}

// Single-interval construction, recording the level sets it uses.
Spectrum build_single(const IntervalUnion& set, BuildNode& node) {
  const Rational length = measure(set);
  node.set = set;
  if (length == 1) {
    node.rule = BuildNode::Rule::kFull;
    return Spectrum::integers();
  }
  if (length <= kBaseThreshold) {
    node.rule = BuildNode::Rule::kBase;
    return base_spectrum(length);
  }

  // {N b} = 0 is reached by N = denominator(b) at the latest.
  std::int64_t n = 1;
  Rational remainder = frac(length);
  while (remainder != 0 && remainder > kBaseThreshold) {
    ++n;
    remainder = frac(Rational(n) * length);
  }
  const auto whole = to_int64(floor_of(Rational(n) * length));

  node.rule = BuildNode::Rule::kSingleInterval;
  node.modulus = n;
  std::vector<Spectrum> children;
  children.reserve(static_cast<std::size_t>(n));
  for (std::int64_t j = 1; j <= n; ++j) {
    if (j <= whole) {
      children.push_back(Spectrum::integers());
      node.level_counts.push_back(1);
      node.children.push_back(leaf(IntervalUnion::from_arcs(
                                       std::vector<Arc>{{0, 1}}),
                                   BuildNode::Rule::kFull));
    } else if (j == whole + 1 && remainder > 0) {
      children.push_back(base_spectrum(remainder));
      node.level_counts.push_back(1);
      node.children.push_back(leaf(IntervalUnion::from_arcs(
                                       std::vector<Arc>{{0, remainder}}),
                                   BuildNode::Rule::kBase));
    } else {
      children.push_back(Spectrum::empty());
      node.level_counts.push_back(0);
      node.children.push_back(leaf(IntervalUnion::empty(),
                                   BuildNode::Rule::kEmpty));
    }
  }
  return combine(n, std::move(children));
}

Spectrum build_node(const IntervalUnion& set, BuildNode& node) {
  node.set = set;
  if (set.is_empty()) {
    node.rule = BuildNode::Rule::kEmpty;
    return Spectrum::empty();
  }
  if (set.is_full()) {
    node.rule = BuildNode::Rule::kFull;
    return Spectrum::integers();
  }
  if (cyclic_interval_count(set) == 1) return build_single(set, node);

  SearchResult search = search_N(set);
  const std::int64_t n = search.modulus;
  node.rule = BuildNode::Rule::kFolded;
  node.modulus = n;
  node.candidates = std::move(search.candidates);

  const FoldingProfile profile = fold_profile(set, n);
  std::vector<Spectrum> children;
  children.reserve(static_cast<std::size_t>(n));
  for (std::int64_t level = 1; level <= n; ++level) {
    IntervalUnion part = level_set(profile, level);
    node.level_counts.push_back(cyclic_interval_count(part));
    BuildNode child;
    if (part.is_empty() || part.is_full()) {
      children.push_back(build_node(scale_to_unit(part, n), child));
      node.children.push_back(std::move(child));
      continue;
    }
    // Turn a wrapping arc into one that starts at 0; the spectrum of a
    // rotated set serves the original unchanged.
    const Arc& last = part.arcs().back();
    if (last.right > part.circumference()) {
      child.rotation = -last.left;
      part = rotate(part, child.rotation);
    }
    const IntervalUnion unit = scale_to_unit(part, n);
    const Rational rotation = child.rotation;
    children.push_back(build_node(unit, child));
    child.rotation = rotation;
    node.children.push_back(std::move(child));
  }
  return combine(n, std::move(children));
}

}  // namespace

std::size_t BuildTrace::depth() const { return node_depth(root); }

Spectrum single_interval_spectrum(const IntervalUnion& arc) {
  if (cyclic_interval_count(arc) != 1) {
    throw Error(ErrorKind::kArity, "single interval expected");
  }
  BuildNode scratch;
  return build_single(arc, scratch);
}

std::vector<std::size_t> level_set_counts(const FoldingProfile& profile) {
  const auto [lo, hi] =
      std::minmax_element(profile.counts.begin(), profile.counts.end());
  std::vector<std::size_t> counts;
  counts.reserve(static_cast<std::size_t>(profile.modulus));
  for (std::int64_t level = 1; level <= profile.modulus; ++level) {
    if (level <= *lo) {
      counts.push_back(1);  // whole cell
    } else if (level > *hi) {
      counts.push_back(0);
    } else {
      counts.push_back(cyclic_interval_count(level_set(profile, level)));
    }
  }
  return counts;
}

bool hits_every_arc(const IntervalUnion& set, std::int64_t modulus) {
  const Rational n(modulus);
  return std::all_of(set.arcs().begin(), set.arcs().end(), [&](const Arc& a) {
    return Rational(ceil_of(n * a.left)) <= n * a.right;
  });
}

SearchResult search_N(const IntervalUnion& set) {
  const std::size_t arcs = cyclic_interval_count(set);
  if (arcs < 2) {
    throw Error(ErrorKind::kArity, "N-search needs at least two arcs");
  }
  Rational shortest = set.arcs().front().length();
  for (const Arc& a : set.arcs()) shortest = std::min(shortest, a.length());
  const std::int64_t n_min = to_int64(ceil_of(Rational(1) / shortest));
  const std::int64_t period = to_int64(common_denominator(set));

  const auto lefts = set.left_endpoints();
  const auto rights = set.right_endpoints();

  SearchResult result;
  for (std::int64_t n = 1; n <= n_min + period; ++n) {
    CandidateRecord record;
    record.modulus = n;
    record.verdict = interlaces(frac_parts(lefts, n), frac_parts(rights, n));
    record.hits_every_arc = hits_every_arc(set, n);
    if (record.hits_every_arc) {
      const auto counts = level_set_counts(fold_profile(set, n));
      record.max_level_count = *std::max_element(counts.begin(), counts.end());
      record.accepted = record.max_level_count + 1 <= arcs;
    }
    result.candidates.push_back(record);
    if (record.accepted) {
      result.modulus = n;
      return result;
    }
  }
  throw Error(ErrorKind::kSearchFailure,
              fmt::format("search failure: no admissible N in [1, {}]",
                          n_min + period));
}

BuildResult build_spectrum(const IntervalUnion& set) {
  if (set.is_empty()) throw Error(ErrorKind::kEmptySet, "empty set");
  BuildResult result;
  result.spectrum = build_node(set, result.trace.root);
  return result;
}

}  // namespace riesz
