#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cliffdet/cli/commands.hpp"

namespace {

using namespace cliffdet;
using namespace cliffdet::cli;

int dimension_cap() {
  if (const char *env = std::getenv("CLIFFDET_MAX_DIM")) {
    try {
      const int cap = std::stoi(env);
      if (cap >= 0 && cap <= 30)
        return cap;
    } catch (const std::exception &) {
    }
    std::cerr << "warning: ignoring CLIFFDET_MAX_DIM='" << env << "'\n";
  }
  return default_dimension_cap;
}

struct RawOptions {
  std::string sig = "0,0";
  std::string expr = "0";
  std::string method = "fl";
  std::string variant = "first";
  double tol = default_invert_tolerance;
  bool json = false;
  std::string op;
  int grade = 0;
  int qtype = 0;
  bool center = false;
  std::string scheme;
  int trials = 100;
  std::uint64_t seed = 42;
  std::string suite = "all";
  bool integer = false;
};

void print_error(const RawOptions &raw, const std::string &code, const std::string &what) {
  if (raw.json)
    std::cout << nlohmann::json{{"error", code}, {"message", what}}.dump(2) << "\n";
  else
    std::cerr << "error: " << what << "\n";
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Determinants, characteristic polynomials and inverses in Cl(p,q)"};
  app.require_subcommand(1, 1);
  RawOptions raw;

  struct Spec {
    const char *name;
    const char *help;
    RunReport (*run)(const CommandOptions &);
  };
  const Spec specs[] = {
      {"det", "determinant", cmd_det},
      {"charpoly", "characteristic polynomial coefficients", cmd_charpoly},
      {"adjugate", "adjugate element", cmd_adjugate},
      {"inverse", "inverse element", cmd_inverse},
      {"trace", "scalar part and matrix trace", cmd_trace},
      {"conj", "apply a conjugation", cmd_conj},
      {"project", "grade, quaternion-type or center projection", cmd_project},
      {"selfcheck", "randomized property checks", cmd_selfcheck},
  };

  CLI::Option *grade_opt = nullptr;
  CLI::Option *qtype_opt = nullptr;
  for (const Spec &spec : specs) {
    CLI::App *sub = app.add_subcommand(spec.name, spec.help);
    sub->add_option("--sig", raw.sig, "signature p,q")->required();
    sub->add_flag("--json", raw.json, "JSON output");
    const std::string name = spec.name;
    if (name != "selfcheck")
      sub->add_option("--expr", raw.expr, "element, e.g. \"3.5 + 2e1 - e12\"")->required();
    if (name == "det" || name == "charpoly" || name == "adjugate" || name == "inverse") {
      sub->add_option("--method", raw.method, "fl|bell|closed|bar")
          ->check(CLI::IsMember({"fl", "bell", "closed", "bar"}));
      sub->add_option("--variant", raw.variant,
                      "closed form (first|second) or bar base (j|h)");
    }
    if (name == "inverse")
      sub->add_option("--tol", raw.tol, "relative singularity threshold");
    if (name == "conj")
      sub->add_option("--op", raw.op, "hat|tilde|hat-tilde|bar|bar-delta|dJ, comma-separated")
          ->required();
    if (name == "project") {
      grade_opt = sub->add_option("--grade", raw.grade, "grade k");
      qtype_opt = sub->add_option("--qtype", raw.qtype, "quaternion type r");
      sub->add_flag("--center", raw.center, "projection onto the center");
    }
    if (name == "trace")
      sub->add_option("--scheme", raw.scheme, "realize <U>_0 through a conjugation scheme");
    if (name == "selfcheck") {
      sub->add_option("--trials", raw.trials, "trials per property")->check(CLI::NonNegativeNumber);
      sub->add_option("--seed", raw.seed, "random seed");
      sub->add_option("--suite", raw.suite, "all|oracle|identities|paths")
          ->check(CLI::IsMember({"all", "oracle", "identities", "paths"}));
      sub->add_flag("--integer", raw.integer, "integer coefficients in -2..2");
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    return app.exit(e) == 0 ? exit_ok : exit_usage;
  }

  const Spec *chosen = nullptr;
  for (const Spec &spec : specs)
    if (app.got_subcommand(spec.name))
      chosen = &spec;

  try {
    CommandOptions opts;
    opts.sig = parse_signature(raw.sig, dimension_cap());
    opts.expr = raw.expr;
    opts.method = parse_method(raw.method);
    opts.variant = parse_variant(raw.variant);
    opts.tol = raw.tol;
    opts.op = raw.op;
    if (grade_opt->count() > 0)
      opts.grade = raw.grade;
    if (qtype_opt->count() > 0)
      opts.qtype = raw.qtype;
    opts.center = raw.center;
    if (!raw.scheme.empty())
      opts.scheme = parse_scheme(raw.scheme);
    opts.selfcheck.trials = raw.trials;
    opts.selfcheck.seed = raw.seed;
    opts.selfcheck.suite = parse_suite(raw.suite);
    opts.selfcheck.mode = raw.integer ? SampleMode::integer : SampleMode::uniform;

    const RunReport report = chosen->run(opts);
    if (raw.json)
      std::cout << report.to_json().dump(2) << "\n";
    else
      std::cout << report.to_text();
    return report.exit_code;
  } catch (const cliffdet::Error &e) {
    print_error(raw, std::string(to_string(e.code())), e.what());
    return exit_code_for(e.code());
  } catch (const std::exception &e) {
    print_error(raw, "internal", e.what());
    return exit_internal;
  }
}
