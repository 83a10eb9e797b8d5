#include "eightconic/cli/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <thread>

#include <CLI11.hpp>

#include "eightconic/cli/report.hpp"
#include "eightconic/cli/svg.hpp"
#include "eightconic/errors.hpp"

namespace eightconic::cli {

namespace {

unsigned default_jobs() {
  if (const char* env = std::getenv("EIGHTCONIC_JOBS")) {
    try {
      const long n = std::stol(env);
      if (n > 0) return static_cast<unsigned>(n);
    } catch (const std::exception&) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void write_output(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot write " + path);
  f << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

ShinagawaPair parse_shinagawa_flag(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw InputError("--shinagawa: expected u,v");
  try {
    const Rational u = Rational::parse(text.substr(0, comma));
    const Rational v = Rational::parse(text.substr(comma + 1));
    if (u.is_zero() && v.is_zero()) throw InputError("--shinagawa: (0,0) is not a pair");
    return ShinagawaPair(u, v);
  } catch (const GeometryError& e) {
    throw InputError(std::string("--shinagawa: ") + e.what());
  }
}

/// "p/q", "inf" or "lo:hi".
void apply_lambda_flag(const std::string& text, GeneratorOptions& options) {
  try {
    const auto colon = text.find(':');
    if (colon == std::string::npos) {
      options.fixed_parameter = EulerParameter::from_extended(parse_extended(text));
      return;
    }
    const Rational lo = Rational::parse(text.substr(0, colon));
    const Rational hi = Rational::parse(text.substr(colon + 1));
    if (lo > hi) throw InputError("--lambda: empty range");
    options.lambda_range = std::make_pair(lo, hi);
  } catch (const GeometryError& e) {
    throw InputError(std::string("--lambda: ") + e.what());
  }
}

std::vector<std::string> split_checks(const std::string& text) {
  std::vector<std::string> out{"eight_point"};
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = std::min(text.find(',', start), text.size());
    const std::string name = text.substr(start, end - start);
    if (std::find(kCheckNames.begin(), kCheckNames.end(), name) == kCheckNames.end()) {
      throw InputError("--checks: unknown check \"" + name + "\"");
    }
    if (std::find(out.begin(), out.end(), name) == out.end()) out.push_back(name);
    start = end + 1;
  }
  return out;
}

struct Options {
  std::string input;
  std::string out;
  std::size_t random = 0;
  std::uint64_t seed = 0;
  std::string lambda;
  std::string shinagawa;
  std::string checks;
  std::string extended;
  unsigned jobs = 1;
  bool strict_order = false;
  bool timing = false;
};

ParsedConfig input_config(const Options& o) {
  ParsedConfig cfg = load_config_file(o.input);
  if (!o.lambda.empty()) {
    GeneratorOptions g;
    apply_lambda_flag(o.lambda, g);
    if (!g.fixed_parameter) throw InputError("--lambda: a range needs --random");
    cfg.config.parameter = *g.fixed_parameter;
  }
  if (!o.shinagawa.empty()) cfg.config.parameter = parse_shinagawa_flag(o.shinagawa);
  if (!o.checks.empty()) {
    for (const auto& c : split_checks(o.checks)) {
      if (std::find(cfg.checks.begin(), cfg.checks.end(), c) == cfg.checks.end()) cfg.checks.push_back(c);
    }
  }
  if (o.strict_order) cfg.config.strict_order = true;
  return cfg;
}

int exit_code(Verdict v) { return v == Verdict::Failed ? kExitCheckFailed : kExitOk; }

int cmd_verify(const Options& o, std::ostream& out) {
  if (o.input.empty() == (o.random == 0)) throw InputError("verify: give exactly one of --input and --random");
  if (!o.lambda.empty() && !o.shinagawa.empty()) throw InputError("verify: --lambda and --shinagawa exclude each other");
  const auto start = std::chrono::steady_clock::now();
  VerifyResult r;
  if (!o.input.empty()) {
    try {
      r = verify_config(input_config(o));
    } catch (const GeometryError& e) {
      // Remaining construction errors mean the config itself is unusable.
      throw InputError(std::string(to_string(e.code())) + ": " + e.what());
    }
  } else {
    CampaignSpec spec;
    spec.trials = o.random;
    spec.seed = o.seed;
    spec.jobs = o.jobs;
    if (!o.lambda.empty()) apply_lambda_flag(o.lambda, spec.options);
    if (!o.shinagawa.empty()) spec.options.fixed_parameter = parse_shinagawa_flag(o.shinagawa);
    if (!o.checks.empty()) spec.checks = split_checks(o.checks);
    r = verify_campaign(spec);
  }
  if (o.timing) {
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    r.report["timing"] = Json{{"elapsed_ms", ms.count()}};
  }
  write_output(dump(r.report), o.out, out);
  return exit_code(r.verdict);
}

int cmd_conic_eq(const Options& o, std::ostream& out, std::ostream& err) {
  const ParsedConfig cfg = input_config(o);
  try {
    write_output(dump(conic_equation(cfg)), o.out, out);
    return kExitOk;
  } catch (const GeometryError& e) {
    if (e.code() == ErrorCode::IsogonalUndefined || e.code() == ErrorCode::DegenerateAllZero) {
      err << "conic-eq: " << to_string(e.code()) << ": " << e.what() << "\n";
      return kExitCheckFailed;
    }
    throw InputError(std::string(to_string(e.code())) + ": " + e.what());
  }
}

int cmd_catalog(const Options& o, std::ostream& out) {
  std::vector<CatalogEntry> entries = catalog_entries();
  if (!o.extended.empty()) {
    std::ifstream in(o.extended);
    if (!in) throw InputError("cannot open " + o.extended);
    try {
      for (auto& e : load_extended_catalog(in)) entries.push_back(std::move(e));
    } catch (const CatalogFormatError& e) {
      throw InputError(std::string("--extended: ") + e.what());
    }
  }
  const CatalogRun run = run_catalog(entries, o.random, o.seed, o.jobs);
  write_output(run.table, o.out, out);
  return exit_code(run.verdict);
}

int cmd_figure(const Options& o, std::ostream& out) {
  const ParsedConfig cfg = input_config(o);
  write_output(render_figure(cfg.config), o.out, out);
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of the eight-point conic of a cyclic quadrilateral", "eightconic"};
  app.require_subcommand(1);
  Options o;
  o.jobs = default_jobs();

  auto* verify = app.add_subcommand("verify", "Fit the eight-point conic and check every incidence exactly");
  verify->add_option("--input", o.input, "JSON configuration file");
  verify->add_option("--random", o.random, "Number of seeded random configurations");
  verify->add_option("--seed", o.seed, "Master seed for --random");
  verify->add_option("--lambda", o.lambda, "Euler parameter p/q or inf; with --random also lo:hi");
  verify->add_option("--shinagawa", o.shinagawa, "Shinagawa pair u,v");
  verify->add_option("--checks", o.checks, "Extra checks: lemma_th4,lemma1,harmonic");
  verify->add_flag("--strict-order", o.strict_order, "Reject quadrilaterals not in cyclic order A,B,C,D");
  verify->add_flag("--timing", o.timing, "Add elapsed time to the report (breaks byte identity)");

  auto* conic_eq = app.add_subcommand("conic-eq", "Print the closed-form barycentric conic coefficients");
  conic_eq->add_option("--input", o.input, "JSON configuration file")->required();
  conic_eq->add_option("--shinagawa", o.shinagawa, "Override the Shinagawa pair u,v");

  auto* catalog = app.add_subcommand("catalog", "Check the built-in and extended center catalog");
  catalog->add_option("--extended", o.extended, "CSV file of name,u,v[,lambda] rows");
  catalog->add_option("--random", o.random, "Extra seeded random quadrilaterals per entry");
  catalog->add_option("--seed", o.seed, "Master seed for --random");

  auto* figure = app.add_subcommand("figure", "Write an SVG figure of the configuration");
  figure->add_option("--input", o.input, "JSON configuration file")->required();
  figure->add_flag("--strict-order", o.strict_order, "Reject quadrilaterals not in cyclic order A,B,C,D");

  for (auto* sub : {verify, conic_eq, catalog, figure}) {
    sub->add_option("--out", o.out, "Output file (default stdout)");
  }
  for (auto* sub : {verify, catalog}) {
    sub->add_option("--jobs", o.jobs, "Worker threads (default $EIGHTCONIC_JOBS)")->check(CLI::PositiveNumber);
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitBadInput;
  }

  try {
    if (*verify) return cmd_verify(o, out);
    if (*conic_eq) return cmd_conic_eq(o, out, err);
    if (*catalog) return cmd_catalog(o, out);
    return cmd_figure(o, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const GeometryError& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
    return kExitBadInput;
  }
}

}  // namespace eightconic::cli
