#include "nilorbit/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include <CLI11.hpp>

#include "nilorbit/classify.hpp"
#include "nilorbit/error.hpp"
#include "nilorbit/modp.hpp"
#include "nilorbit/orbits.hpp"
#include "nilorbit/report.hpp"
#include "nilorbit/verify.hpp"

namespace nilorbit::cli {

namespace {

struct Config {
  std::string format = "json";
  unsigned threads = 1;
  std::uint64_t seed = 1;

  std::string poly;
  std::string r;
  std::string exclude;
  std::uint64_t max_steps = kDefaultMaxSteps;
  std::uint64_t mod = 0;
  std::uint64_t p = 0;
  std::uint64_t primes_up_to = 0;
  std::string suite;
  std::uint64_t range = 10;
};

std::uint64_t default_prime_bound() {
  const char* value = std::getenv(kPrimeBoundVariable);
  if (value == nullptr || *value == '\0') return kDefaultPrimeBound;
  const Integer parsed = parse_integer(value);
  auto bound = to_uint64(parsed);
  if (!bound) throw Error(ErrorCode::Parse, std::string(kPrimeBoundVariable) + " is out of range");
  return *bound;
}

std::uint64_t checked_bound(std::uint64_t bound) {
  if (bound < 2) throw Error(ErrorCode::Parse, "prime bound must be at least 2");
  return bound;
}

PrimeSet parse_excluded(const std::string& text) {
  std::vector<Integer> values;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    item.erase(std::remove(item.begin(), item.end(), ' '), item.end());
    if (!item.empty()) values.push_back(parse_integer(item));
  }
  try {
    return PrimeSet(std::move(values));
  } catch (const Error& e) {
    throw Error(ErrorCode::Parse, std::string("--exclude: ") + e.what());
  }
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::Parse:
    case ErrorCode::UnknownSuite: return kExitUsage;
    default: return kExitDomain;
  }
}

std::string one_line(std::string message) {
  std::replace(message.begin(), message.end(), '\n', ' ');
  return message;
}

void diagnose(std::ostream& err, std::string_view code, const std::string& message) {
  err << "nilorbit: error[" << code << "]: " << one_line(message) << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config config;
  CLI::App app{"Orbits of integer polynomials: nilpotency, m_p, local nilpotency", "nilorbit"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", config.format, "Output format: json, csv or text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--threads", config.threads, "Worker threads, 0 for all cores");
  app.add_option("--seed", config.seed, "Seed for randomized suites");

  auto* orbit_cmd = app.add_subcommand("orbit", "Trajectory and outcome of the orbit of r");
  orbit_cmd->add_option("--poly", config.poly, "Coefficients, constant first")->required();
  orbit_cmd->add_option("--r", config.r, "Base point")->required();
  orbit_cmd->add_option("--max-steps", config.max_steps, "Step limit for linear orbits");
  orbit_cmd->add_option("--mod", config.mod, "Reduce the orbit modulo this prime");

  auto* mp_cmd = app.add_subcommand("mp", "m_p, preperiod and period modulo one prime");
  mp_cmd->add_option("--poly", config.poly, "Coefficients, constant first")->required();
  mp_cmd->add_option("--r", config.r, "Base point")->required();
  mp_cmd->add_option("--p", config.p, "Prime modulus")->required();

  auto* scan_cmd = app.add_subcommand("scan", "m_p for every prime up to a bound, outside A");
  scan_cmd->add_option("--poly", config.poly, "Coefficients, constant first")->required();
  scan_cmd->add_option("--r", config.r, "Base point")->required();
  scan_cmd->add_option("--exclude", config.exclude, "Excluded primes, comma separated");
  scan_cmd->add_option("--primes-up-to", config.primes_up_to, "Prime bound");

  auto* classify_cmd = app.add_subcommand("classify", "Exact membership verdict");
  classify_cmd->add_option("--poly", config.poly, "Coefficients, constant first")->required();
  classify_cmd->add_option("--r", config.r, "Base point")->required();
  classify_cmd->add_option("--exclude", config.exclude, "Excluded primes, comma separated");
  classify_cmd->add_option("--primes-up-to", config.primes_up_to, "Witness search bound");

  auto* verify_cmd = app.add_subcommand("verify", "Run a theorem suite on its canonical box");
  verify_cmd->add_option("--suite", config.suite, "Suite name")->required();
  verify_cmd->add_option("--primes-up-to", config.primes_up_to, "Prime bound override");
  verify_cmd->add_option("--exclude", config.exclude, "Excluded primes override (thm5.1, cor5.2)");

  auto* explore_cmd = app.add_subcommand("explore", "Finite window of N(u) and LN(u)");
  explore_cmd->add_option("--poly", config.poly, "Coefficients, constant first")->required();
  explore_cmd->add_option("--range", config.range, "Window [-R, R]");
  explore_cmd->add_option("--primes-up-to", config.primes_up_to, "Witness search bound");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    diagnose(err, error_code_name(ErrorCode::Parse), e.what());
    return kExitUsage;
  }

  try {
    const Format format = parse_format(config.format);
    const bool bound_given = config.primes_up_to != 0;
    auto prime_bound = [&]() {
      return checked_bound(bound_given ? config.primes_up_to : default_prime_bound());
    };
    const PrimeSet excluded = parse_excluded(config.exclude);

    if (orbit_cmd->parsed()) {
      const Polynomial u = parse_polynomial(config.poly);
      const Integer r = parse_integer(config.r);
      if (config.mod != 0) {
        const ModPResult result = orbit_mod_p(u, r, config.mod);
        const auto trajectory = trajectory_mod_p(u, r, config.mod, config.max_steps);
        write_modp(out, u, r, result, format, trajectory);
      } else {
        write_orbit(out, u, r, orbit(u, r, config.max_steps), format);
      }
    } else if (mp_cmd->parsed()) {
      const Polynomial u = parse_polynomial(config.poly);
      const Integer r = parse_integer(config.r);
      write_modp(out, u, r, orbit_mod_p(u, r, config.p), format);
    } else if (scan_cmd->parsed()) {
      const Polynomial u = parse_polynomial(config.poly);
      const Integer r = parse_integer(config.r);
      const ScanReport report =
          weak_local_scan(u, r, excluded, prime_bound(), {ScanMode::Table, config.threads});
      write_scan(out, report, format);
    } else if (classify_cmd->parsed()) {
      const Polynomial u = parse_polynomial(config.poly);
      const Integer r = parse_integer(config.r);
      write_classification(out, classify(u, r, excluded, {prime_bound(), config.threads}), format);
    } else if (verify_cmd->parsed()) {
      SuiteOptions options;
      if (bound_given) options.prime_bound = checked_bound(config.primes_up_to);
      if (!config.exclude.empty()) options.excluded = excluded;
      options.seed = config.seed;
      options.threads = config.threads;
      const SuiteResult suite = theorem_suite(config.suite, options);
      write_suite(out, suite, format);
      return suite.passed ? kExitOk : kExitSuiteFailed;
    } else if (explore_cmd->parsed()) {
      const Polynomial u = parse_polynomial(config.poly);
      write_explore(out, explore(u, config.range, prime_bound(), config.threads), format);
    }
  } catch (const Error& e) {
    diagnose(err, error_code_name(e.code()), e.what());
    return exit_code_for(e.code());
  }
  return kExitOk;
}

}  // namespace nilorbit::cli
