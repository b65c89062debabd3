#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "riesz/circle_sets.hpp"
#include "riesz/verify.hpp"

namespace riesz::cli {

enum class Command { kBuild, kVerify, kDiagnose };

inline constexpr int kExitOk = 0;
inline constexpr int kExitParse = 2;
inline constexpr int kExitSearchFailure = 3;
inline constexpr int kExitCertificate = 4;

// Frame floor used by `verify`: the tail-corrected frame value must reach
// this fraction of the smallest Gram eigenvalue of the largest window.
// At the default window, valid builds over 1700 random unions stay above
// 0.31 (the lowest when the product of moduli reaches the window); single
// deletions from the worked constructions stay below 0.24.
inline constexpr double kFrameToRieszRatio = 0.275;

struct JobSpec {
  std::vector<Arc> raw_intervals;
  IntervalUnion set = IntervalUnion::empty();
  bool merged = false;  // normalization merged overlapping or touching pairs
  std::int64_t window = 64;
  std::optional<std::int64_t> test_bandwidth;  // defaults to window / 8
  std::uint64_t seed = kDefaultSeed;
  std::optional<std::int64_t> delete_index;
  std::optional<std::int64_t> limit;  // diagnose rows, defaults to 2 * period

  std::int64_t effective_test_bandwidth() const;
};

// Structured text job spec (JSON), e.g.
//   {"intervals": [["1/10", "3/10"], ["1/2", "7/10"]], "window": 64}
// Optional keys: window, test_bandwidth, seed, delete, limit. Endpoints are
// strings holding "p/q" or exact decimals, or JSON integers. Throws
// riesz::Error (kParse with line and column, kEmptySet, kOutOfRange).
JobSpec parse_spec(std::string_view text);

// Inline form used by --intervals: "1/10:3/10,1/2:7/10".
std::vector<Arc> parse_interval_list(std::string_view text);

// Validates left < right and normalizes into spec.set.
void finalize_intervals(JobSpec& spec, std::vector<Arc> raw);

struct CommandOutput {
  int exit_code = kExitOk;
  std::string report;  // JSON document, trailing newline included
  std::string csv;     // empty when the command has no CSV view
};

CommandOutput cmd_build(const JobSpec& spec);
CommandOutput cmd_verify(const JobSpec& spec);
CommandOutput cmd_diagnose(const JobSpec& spec);

CommandOutput run(Command command, const JobSpec& spec);

// Exit code for a library error escaping a command.
int exit_code_for(const std::exception& error);

}  // namespace riesz::cli
