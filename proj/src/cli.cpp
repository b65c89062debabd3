#include "riesz/cli.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>
#include <json.hpp>

#include "riesz/build.hpp"
#include "riesz/error.hpp"
#include "riesz/interlacement.hpp"
#include "riesz/spectrum.hpp"

namespace riesz::cli {

namespace {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Deterministic serialization: insertion-ordered keys, doubles at 17
// significant digits, non-finite doubles as null.

void dump(const Json& j, std::string& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
  const std::string close_pad(static_cast<std::size_t>(indent), ' ');
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ",\n";
        first = false;
        out += pad;
        out += Json(it.key()).dump();
        out += ": ";
        dump(it.value(), out, indent + 2);
      }
      out += "\n" + close_pad + "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      // Arrays of scalars stay on one line.
      const bool flat = std::none_of(j.begin(), j.end(), [](const Json& e) {
        return e.is_structured();
      });
      if (flat) {
        out += "[";
        for (std::size_t i = 0; i < j.size(); ++i) {
          if (i > 0) out += ", ";
          dump(j[i], out, indent);
        }
        out += "]";
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i > 0) out += ",\n";
        out += pad;
        dump(j[i], out, indent + 2);
      }
      out += "\n" + close_pad + "]";
      return;
    }
    case Json::value_t::number_float: {
      const double v = j.get<double>();
      out += std::isfinite(v) ? fmt::format("{:.17g}", v) : "null";
      return;
    }
    default:
      out += j.dump();
  }
}

std::string render(const Json& j) {
  std::string out;
  dump(j, out, 0);
  out += '\n';
  return out;
}

std::string format_double(double v) { return fmt::format("{:.17g}", v); }

// ---------------------------------------------------------------------------
// Input parsing.

struct Position {
  std::size_t line = 1;
  std::size_t column = 1;
};

Position locate(std::string_view text, std::size_t byte) {
  Position pos;
  for (std::size_t i = 0; i < std::min(byte, text.size()); ++i) {
    if (text[i] == '\n') {
      ++pos.line;
      pos.column = 1;
    } else {
      ++pos.column;
    }
  }
  return pos;
}

[[noreturn]] void fail_at(std::string_view text, std::size_t byte,
                          std::string_view why) {
  const Position pos = locate(text, byte);
  throw Error(ErrorKind::kParse, fmt::format("parse error at line {}, column "
                                             "{}: {}",
                                             pos.line, pos.column, why));
}

// Byte offset of the n-th occurrence (0-based) of a quoted token.
std::size_t find_token(std::string_view text, const std::string& token,
                       std::size_t occurrence) {
  const std::string quoted = "\"" + token + "\"";
  std::size_t at = text.find(quoted);
  for (std::size_t k = 0; k < occurrence && at != std::string_view::npos; ++k) {
    at = text.find(quoted, at + 1);
  }
  return at == std::string_view::npos ? 0 : at + 1;
}

Rational endpoint_from_json(std::string_view text, const Json& value,
                            std::size_t& cursor) {
  if (value.is_number_integer()) return Rational(value.get<std::int64_t>());
  if (!value.is_string()) {
    fail_at(text, cursor,
            "endpoints must be strings holding p/q or exact decimals");
  }
  const auto token = value.get<std::string>();
  const std::size_t at = text.find("\"" + token + "\"", cursor);
  const std::size_t where = at == std::string_view::npos ? cursor : at + 1;
  cursor = where;
  try {
    return parse_rational(token);
  } catch (const Error& e) {
    fail_at(text, where, e.what());
  }
}

std::int64_t int_field(std::string_view text, const Json& doc,
                       const char* key) {
  const Json& v = doc.at(key);
  if (!v.is_number_integer()) {
    fail_at(text, find_token(text, key, 0), fmt::format("{} must be an integer", key));
  }
  return v.get<std::int64_t>();
}

// ---------------------------------------------------------------------------
// Report pieces.

Json arcs_json(const IntervalUnion& set) {
  Json arr = Json::array();
  for (const Arc& a : set.arcs()) {
    arr.push_back(Json::array({to_string(a.left), to_string(a.right)}));
  }
  return arr;
}

Json trace_json(const BuildNode& node) {
  Json j;
  j["rule"] = std::string(to_string(node.rule));
  j["set"] = arcs_json(node.set);
  if (node.rotation != 0) j["rotation"] = to_string(node.rotation);
  if (node.modulus > 0) {
    j["N"] = node.modulus;
    j["level_counts"] = node.level_counts;
  }
  if (!node.candidates.empty()) {
    Json cands = Json::array();
    for (const CandidateRecord& c : node.candidates) {
      Json r;
      r["N"] = c.modulus;
      r["hits_every_arc"] = c.hits_every_arc;
      r["verdict"] = std::string(to_string(c.verdict));
      r["max_level_count"] = c.max_level_count;
      r["accepted"] = c.accepted;
      cands.push_back(std::move(r));
    }
    j["candidates"] = std::move(cands);
  }
  if (!node.children.empty()) {
    Json kids = Json::array();
    for (const BuildNode& child : node.children) kids.push_back(trace_json(child));
    j["children"] = std::move(kids);
  }
  return j;
}

Json header_json(std::string_view command, const JobSpec& spec) {
  Json j;
  j["command"] = std::string(command);
  j["intervals"] = arcs_json(spec.set);
  j["arc_count"] = spec.set.arcs().size();
  j["merged_on_input"] = spec.merged;
  j["measure"] = to_string(measure(spec.set));
  return j;
}

std::int64_t period_of(const IntervalUnion& set) {
  return to_int64(common_denominator(set));
}

}  // namespace

std::int64_t JobSpec::effective_test_bandwidth() const {
  return test_bandwidth.value_or(std::max<std::int64_t>(window / 8, 0));
}

std::vector<Arc> parse_interval_list(std::string_view text) {
  std::vector<Arc> raw;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = std::min(text.find(',', start), text.size());
    const std::string_view item = text.substr(start, comma - start);
    const std::size_t colon = item.find(':');
    if (colon == std::string_view::npos) {
      throw Error(ErrorKind::kParse,
                  fmt::format("parse error at column {}: expected left:right",
                              start + 1));
    }
    try {
      raw.push_back({parse_rational(item.substr(0, colon)),
                     parse_rational(item.substr(colon + 1))});
    } catch (const Error& e) {
      throw Error(ErrorKind::kParse,
                  fmt::format("parse error in item starting at column {}: {}",
                              start + 1, e.what()));
    }
    start = comma + 1;
  }
  return raw;
}

void finalize_intervals(JobSpec& spec, std::vector<Arc> raw) {
  if (raw.empty()) throw Error(ErrorKind::kEmptySet, "empty set");
  for (const Arc& a : raw) {
    if (a.left >= a.right) {
      throw Error(ErrorKind::kParse,
                  fmt::format("left ≥ right in [{}, {}]", to_string(a.left),
                              to_string(a.right)));
    }
  }
  spec.set = normalize(raw);
  // Merging shows up as fewer canonical arcs or less total length than the
  // raw pairs; a pair wrapping through 0 == 1 always merges.
  Rational raw_total = 0;
  for (const Arc& a : raw) raw_total += a.length();
  spec.merged = spec.set.arcs().size() != raw.size() ||
                measure(spec.set) != raw_total;
  spec.raw_intervals = std::move(raw);
}

JobSpec parse_spec(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    fail_at(text, e.byte > 0 ? e.byte - 1 : 0, "malformed document");
  }
  if (!doc.is_object()) fail_at(text, 0, "expected an object");
  if (!doc.contains("intervals") || !doc["intervals"].is_array()) {
    fail_at(text, 0, "missing \"intervals\" array");
  }

  JobSpec spec;
  std::vector<Arc> raw;
  std::size_t cursor = find_token(text, "intervals", 0);
  for (const Json& pair : doc["intervals"]) {
    if (!pair.is_array() || pair.size() != 2) {
      fail_at(text, cursor, "each interval is a [left, right] pair");
    }
    Rational left = endpoint_from_json(text, pair[0], cursor);
    Rational right = endpoint_from_json(text, pair[1], cursor);
    raw.push_back({std::move(left), std::move(right)});
  }
  if (doc.contains("window")) spec.window = int_field(text, doc, "window");
  if (doc.contains("test_bandwidth")) {
    spec.test_bandwidth = int_field(text, doc, "test_bandwidth");
  }
  if (doc.contains("seed")) {
    spec.seed = static_cast<std::uint64_t>(int_field(text, doc, "seed"));
  }
  if (doc.contains("delete")) spec.delete_index = int_field(text, doc, "delete");
  if (doc.contains("limit")) spec.limit = int_field(text, doc, "limit");
  if (spec.window < 1) fail_at(text, find_token(text, "window", 0), "window must be positive");
  finalize_intervals(spec, std::move(raw));
  return spec;
}

CommandOutput cmd_build(const JobSpec& spec) {
  const BuildResult built = build_spectrum(spec.set);
  Json j = header_json("build", spec);
  j["spectrum"] = to_text(built.spectrum);
  j["density"] = to_string(density(built.spectrum));
  j["depth"] = built.trace.depth();
  j["trace"] = trace_json(built.trace.root);
  j["window"] = spec.window;
  j["elements"] = enumerate(built.spectrum, spec.window);
  return {kExitOk, render(j), ""};
}

CommandOutput cmd_verify(const JobSpec& spec) {
  const BuildResult built = build_spectrum(spec.set);
  const std::int64_t k = spec.window;
  const std::int64_t k_test = spec.effective_test_bandwidth();
  std::vector<std::int64_t> lams = enumerate(built.spectrum, k);

  Json j = header_json("verify", spec);
  j["spectrum"] = to_text(built.spectrum);
  j["window"] = k;
  j["test_bandwidth"] = k_test;
  j["seed"] = spec.seed;

  if (spec.delete_index) {
    // Index into the nonnegative part of the window, ascending.
    const auto first = std::lower_bound(lams.begin(), lams.end(), 0);
    const std::int64_t available = lams.end() - first;
    const std::int64_t index = *spec.delete_index;
    if (index < 0 || index >= available) {
      throw Error(ErrorKind::kParse,
                  fmt::format("delete index {} outside [0, {})", index, available));
    }
    const auto victim = first + index;
    j["deleted"] = *victim;
    lams.erase(victim);
  } else {
    j["deleted"] = nullptr;
  }

  const std::vector<std::int64_t> windows = {std::max<std::int64_t>(k / 4, 1),
                                             std::max<std::int64_t>(k / 2, 2), k};
  std::vector<std::int64_t> distinct;
  for (std::int64_t w : windows) {
    if (distinct.empty() || w > distinct.back()) distinct.push_back(w);
  }
  const auto profile = riesz_bounds_profile(lams, spec.set, distinct);
  const double frame = frame_lower_test(lams, spec.set, k_test, k, spec.seed);
  const double frame_tail = frame_tail_test(lams, spec.set, k_test, k, spec.seed);
  const double disc = discrepancy(lams, k, measure(spec.set));

  Json prof = Json::array();
  for (const WindowBounds& w : profile) {
    Json row;
    row["window"] = w.window;
    row["size"] = w.size;
    row["min_eig"] = w.min_eig;
    row["max_eig"] = w.max_eig;
    prof.push_back(std::move(row));
  }
  j["riesz_profile"] = std::move(prof);

  const double riesz_min = profile.back().min_eig;
  const double frame_floor = kFrameToRieszRatio * riesz_min;
  j["frame_lower"] = frame;
  j["frame_tail"] = frame_tail;
  j["frame_floor"] = frame_floor;
  j["discrepancy"] = {{"window", k},
                      {"value", disc},
                      {"bound", to_double(discrepancy_bound(built.spectrum))}};
  if (k >= 10) {
    const std::int64_t r = k / 10;
    const DensityEstimate d = density_estimate(lams, r, k);
    j["density"] = {{"r", r}, {"lower", d.lower}, {"upper", d.upper},
                    {"measure", to_double(measure(spec.set))}};
  } else {
    j["density"] = nullptr;
  }
  Json vdm = Json::array();
  for (std::int64_t n : moduli(built.spectrum)) {
    const auto bound = vandermonde_bound(n);
    Json row;
    row["N"] = n;
    if (bound) {
      row["bound"] = *bound;
    } else {
      row["bound"] = nullptr;
    }
    vdm.push_back(std::move(row));
  }
  j["vandermonde"] = std::move(vdm);

  // Certificates. Finite sections only give necessary evidence: window
  // eigenvalues bound the true lower constant from above.
  struct Check {
    std::string name;
    bool passed;
    std::string detail;
  };
  std::vector<Check> checks;
  bool floor_ok = true;
  for (const WindowBounds& w : profile) {
    floor_ok = floor_ok && w.min_eig > kCertificateSlack && w.min_eig <= w.max_eig;
  }
  checks.push_back({"riesz floor", floor_ok,
                    "smallest Gram eigenvalue positive in every window"});
  bool monotone = true;
  for (std::size_t i = 1; i < profile.size(); ++i) {
    monotone = monotone &&
               profile[i].min_eig <= profile[i - 1].min_eig + kCertificateSlack &&
               profile[i].max_eig >= profile[i - 1].max_eig - kCertificateSlack;
  }
  checks.push_back({"eigen monotonicity", monotone,
                    "min non-increasing and max non-decreasing across windows"});
  const bool frame_ok = frame_tail > kCertificateSlack &&
                        frame_tail >= frame_floor - kCertificateSlack;
  checks.push_back({"frame floor", frame_ok,
                    fmt::format("tail-corrected frame value >= {} x smallest Gram eigenvalue",
                                kFrameToRieszRatio)});

  Json certs = Json::array();
  std::vector<std::string> failing;
  for (const Check& c : checks) {
    certs.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    if (!c.passed) failing.push_back(c.name);
  }
  j["certificates"] = std::move(certs);
  j["failing"] = failing;
  j["status"] = failing.empty() ? "pass" : "fail";
  j["note"] =
      "truncated sections certify necessary conditions only; they do not "
      "prove the infinite system is a Riesz basis";

  std::string csv = "window,min_eig,max_eig\n";
  for (const WindowBounds& w : profile) {
    csv += fmt::format("{},{},{}\n", w.window, format_double(w.min_eig),
                       format_double(w.max_eig));
  }
  return {failing.empty() ? kExitOk : kExitCertificate, render(j), csv};
}

CommandOutput cmd_diagnose(const JobSpec& spec) {
  const IntervalUnion& set = spec.set;
  const auto lefts = set.left_endpoints();
  const auto rights = set.right_endpoints();
  const std::size_t arcs = lefts.size();
  const std::int64_t period = period_of(set);
  const std::int64_t limit = spec.limit.value_or(2 * period);
  if (limit < 1) throw Error(ErrorKind::kParse, "limit must be positive");

  Json j = header_json("diagnose", spec);
  j["period"] = period;
  j["limit"] = limit;

  const auto sums = partial_sums_S(lefts, rights, limit);
  Json rows = Json::array();
  std::string csv = "N,verdict,s_N,max_count\n";
  std::optional<std::int64_t> first_not_interlaced;
  std::optional<std::int64_t> first_gate;
  double worst_interlaced_s = 0.0;
  double max_deviation = 0.0;
  for (std::int64_t n = 1; n <= limit; ++n) {
    const auto diag = diagnose_interlacement(lefts, rights, n);
    const auto counts = level_set_counts(fold_profile(set, n));
    const std::size_t max_count = *std::max_element(counts.begin(), counts.end());
    Json row;
    row["N"] = n;
    Json fa = Json::array();
    Json fb = Json::array();
    for (const Rational& x : diag.frac_a) fa.push_back(to_string(x));
    for (const Rational& x : diag.frac_b) fb.push_back(to_string(x));
    row["frac_a"] = std::move(fa);
    row["frac_b"] = std::move(fb);
    row["verdict"] = std::string(to_string(diag.verdict));
    row["s_N"] = diag.s_value;
    row["level_counts"] = counts;
    row["max_count"] = max_count;
    row["hits_every_arc"] = hits_every_arc(set, n);
    rows.push_back(std::move(row));
    csv += fmt::format("{},{},{},{}\n", n, to_string(diag.verdict),
                       format_double(diag.s_value), max_count);

    if (diag.verdict == Verdict::kNotInterlaced && !first_not_interlaced) {
      first_not_interlaced = n;
    }
    if (arcs >= 2 && !first_gate && max_count + 1 <= arcs &&
        hits_every_arc(set, n)) {
      first_gate = n;
    }
    if (diag.verdict == Verdict::kInterlaced) {
      worst_interlaced_s = std::max(worst_interlaced_s, diag.s_value);
    }
    const double two_lk = 2.0 * static_cast<double>(arcs) * static_cast<double>(n);
    max_deviation = std::max(max_deviation, std::abs(sums[static_cast<std::size_t>(n - 1)] - two_lk));
  }
  j["rows"] = std::move(rows);
  j["first_not_interlaced"] =
      first_not_interlaced ? Json(*first_not_interlaced) : Json(nullptr);
  j["first_admissible_N"] = first_gate ? Json(*first_gate) : Json(nullptr);
  j["max_s_when_interlaced"] = worst_interlaced_s;
  j["S_K"] = {{"K", limit},
              {"value", sums.back()},
              {"two_L_K", 2.0 * static_cast<double>(arcs) * static_cast<double>(limit)},
              {"max_deviation", max_deviation}};
  return {kExitOk, render(j), csv};
}

CommandOutput run(Command command, const JobSpec& spec) {
  switch (command) {
    case Command::kBuild:
      return cmd_build(spec);
    case Command::kVerify:
      return cmd_verify(spec);
    case Command::kDiagnose:
      return cmd_diagnose(spec);
  }
  return cmd_build(spec);
}

int exit_code_for(const std::exception& error) {
  const auto* e = dynamic_cast<const Error*>(&error);
  if (e == nullptr) return kExitSearchFailure;
  switch (e->kind()) {
    case ErrorKind::kParse:
    case ErrorKind::kEmptySet:
    case ErrorKind::kOutOfRange:
    case ErrorKind::kWindowRatio:
      return kExitParse;
    default:
      return kExitSearchFailure;
  }
}

}  // namespace riesz::cli
