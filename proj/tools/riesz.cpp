// riesz: build, verify and diagnose exponential bases on unions of arcs.
//
//   riesz build    [spec.json] [--intervals 1/10:3/10,1/2:7/10] [--window K]
//   riesz verify   [spec.json] [--window K] [--test-bandwidth K] [--seed S]
//                  [--delete I] [--csv path]
//   riesz diagnose [spec.json] [--limit N] [--csv path]
//
// Every subcommand writes its JSON report to stdout or --out.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "riesz/cli.hpp"
#include "riesz/error.hpp"

namespace {

struct Options {
  std::string spec_path;
  std::string intervals;
  std::optional<std::int64_t> window;
  std::optional<std::int64_t> test_bandwidth;
  std::optional<std::uint64_t> seed;
  std::optional<std::int64_t> delete_index;
  std::optional<std::int64_t> limit;
  std::string csv_path;
  std::string out_path;
};

void add_common(CLI::App* cmd, Options& opt) {
  cmd->add_option("spec", opt.spec_path, "JSON job spec file");
  cmd->add_option("--intervals", opt.intervals,
                  "inline intervals, e.g. 1/10:3/10,1/2:7/10");
  cmd->add_option("--window", opt.window, "enumeration / Gram window K");
  cmd->add_option("--csv", opt.csv_path, "write the CSV view to this path");
  cmd->add_option("--out", opt.out_path, "write the report here instead of stdout");
}

riesz::cli::JobSpec load(const Options& opt) {
  riesz::cli::JobSpec spec;
  if (!opt.spec_path.empty()) {
    std::ifstream in(opt.spec_path, std::ios::binary);
    if (!in) {
      throw riesz::Error(riesz::ErrorKind::kParse,
                         "cannot read spec file " + opt.spec_path);
    }
    std::ostringstream text;
    text << in.rdbuf();
    spec = riesz::cli::parse_spec(text.str());
  }
  if (!opt.intervals.empty()) {
    riesz::cli::finalize_intervals(spec, riesz::cli::parse_interval_list(opt.intervals));
  } else if (opt.spec_path.empty()) {
    throw riesz::Error(riesz::ErrorKind::kParse,
                       "no intervals: pass a spec file or --intervals");
  }
  if (opt.window) spec.window = *opt.window;
  if (opt.test_bandwidth) spec.test_bandwidth = *opt.test_bandwidth;
  if (opt.seed) spec.seed = *opt.seed;
  if (opt.delete_index) spec.delete_index = *opt.delete_index;
  if (opt.limit) spec.limit = *opt.limit;
  if (spec.window < 1) {
    throw riesz::Error(riesz::ErrorKind::kParse, "window must be positive");
  }
  return spec;
}

bool write_file(const std::string& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary);
  out << body;
  return static_cast<bool>(out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exponential Riesz bases on finite unions of arcs"};
  app.require_subcommand(1);
  Options opt;

  auto* build = app.add_subcommand("build", "construct the spectrum");
  add_common(build, opt);

  auto* verify = app.add_subcommand("verify", "numerical certificates");
  add_common(verify, opt);
  verify->add_option("--test-bandwidth", opt.test_bandwidth,
                     "frame test bandwidth K_test (default K/8)");
  verify->add_option("--seed", opt.seed, "seed for random test functions");
  verify->add_option("--delete", opt.delete_index,
                     "drop the I-th nonnegative frequency before verifying");

  auto* diagnose = app.add_subcommand("diagnose", "interlacement table");
  add_common(diagnose, opt);
  diagnose->add_option("--limit", opt.limit, "last N tabulated (default 2 * period)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return riesz::cli::kExitParse;
  }

  riesz::cli::Command command = riesz::cli::Command::kBuild;
  if (verify->parsed()) command = riesz::cli::Command::kVerify;
  if (diagnose->parsed()) command = riesz::cli::Command::kDiagnose;

  riesz::cli::CommandOutput result;
  try {
    result = riesz::cli::run(command, load(opt));
  } catch (const std::exception& e) {
    std::cerr << "riesz: " << e.what() << '\n';
    return riesz::cli::exit_code_for(e);
  }

  if (opt.out_path.empty()) {
    std::cout << result.report;
  } else if (!write_file(opt.out_path, result.report)) {
    std::cerr << "riesz: cannot write " << opt.out_path << '\n';
    return riesz::cli::kExitParse;
  }
  if (!opt.csv_path.empty() && !write_file(opt.csv_path, result.csv)) {
    std::cerr << "riesz: cannot write " << opt.csv_path << '\n';
    return riesz::cli::kExitParse;
  }
  if (result.exit_code == riesz::cli::kExitCertificate) {
    std::cerr << "riesz: certificate violated\n";
  }
  return result.exit_code;
}
