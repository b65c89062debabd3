#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "riesz/circle_sets.hpp"
#include "riesz/interlacement.hpp"
#include "riesz/spectrum.hpp"

namespace riesz {

// One modulus examined by the N-search.
struct CandidateRecord {
  std::int64_t modulus = 1;
  bool hits_every_arc = false;  // every arc contains some k/N
  Verdict verdict = Verdict::kTied;
  std::size_t max_level_count = 0;  // 0 when the lattice test failed first
  bool accepted = false;
};

// Audit record of one recursion node.
struct BuildNode {
  enum class Rule { kEmpty, kFull, kBase, kSingleInterval, kFolded };

  IntervalUnion set = IntervalUnion::empty();
  Rule rule = Rule::kEmpty;
  std::int64_t modulus = 0;             // 0 for leaves
  Rational rotation = 0;                // shift applied before recursing here
  std::vector<CandidateRecord> candidates;
  std::vector<std::size_t> level_counts;  // cyclic counts of A_{>=n}, n = 1..N
  std::vector<BuildNode> children;
};

std::string_view to_string(BuildNode::Rule rule);

struct BuildTrace {
  BuildNode root;

  // Number of folded or single-interval levels on the longest path.
  std::size_t depth() const;
};

struct SearchResult {
  std::int64_t modulus = 1;
  std::vector<CandidateRecord> candidates;
};

struct BuildResult {
  Spectrum spectrum;
  BuildTrace trace;
};

// Spectrum for one arc; only its length matters since integer exponentials
// are 1-periodic. Throws kArity unless the set is a single arc.
Spectrum single_interval_spectrum(const IntervalUnion& arc);

// Cyclic interval count of every A_{>=n}, n = 1..N.
std::vector<std::size_t> level_set_counts(const FoldingProfile& profile);

// True when every arc [l, r] contains a point k / N.
bool hits_every_arc(const IntervalUnion& set, std::int64_t modulus);

// Smallest N for which every arc contains a point k/N and every level set
// A_{>=n} has at most L - 1 cyclic intervals. Scans N = 1 .. N_min + P with
// N_min = ceil(1 / shortest arc) and P the common denominator. Throws
// kArity for L < 2 and kSearchFailure if the range is exhausted.
SearchResult search_N(const IntervalUnion& set);

// Throws kEmptySet for an empty set; kSearchFailure propagates.
BuildResult build_spectrum(const IntervalUnion& set);

}  // namespace riesz
