#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cliffdet/algebra.hpp"
#include "cliffdet/charpoly.hpp"
#include "cliffdet/cli/selfcheck.hpp"

namespace cliffdet::cli {

enum ExitCode : int {
  exit_ok = 0,
  exit_internal = 1,
  exit_usage = 2,
  exit_not_invertible = 3,
  exit_check_failed = 4,
  exit_unsupported = 5,
};

int exit_code_for(ErrorCode code);

struct CommandOptions {
  Signature sig;
  std::string expr = "0";
  Method method = Method::fl;
  ClosedForm variant = ClosedForm::first;
  double tol = default_invert_tolerance;

  std::string op;                       // conj
  std::optional<int> grade, qtype;      // project
  bool center = false;                  // project
  std::optional<ScalarScheme> scheme;   // trace

  SelfcheckOptions selfcheck;
};

struct RunReport {
  std::string command;
  Signature sig;
  std::string input; // canonical form of the parsed element
  std::string method;
  nlohmann::json result = nlohmann::json::object();
  std::vector<std::string> lines; // human-readable output
  std::vector<Check> checks;
  double timing_ms = 0.0;
  int exit_code = exit_ok;

  nlohmann::json to_json() const;
  std::string to_text() const;
};

Method parse_method(const std::string &name);
ClosedForm parse_variant(const std::string &name);
ScalarScheme parse_scheme(const std::string &name);
Signature parse_signature(const std::string &text, int cap = default_dimension_cap);

// Conjugation by name: hat, tilde, hat-tilde, bar, bar-delta, dJ, or a
// comma-separated superposition of these.
Multivector apply_conjugation(const Multivector &u, const std::string &op);

RunReport cmd_det(const CommandOptions &opts);
RunReport cmd_charpoly(const CommandOptions &opts);
RunReport cmd_adjugate(const CommandOptions &opts);
RunReport cmd_inverse(const CommandOptions &opts);
RunReport cmd_trace(const CommandOptions &opts);
RunReport cmd_conj(const CommandOptions &opts);
RunReport cmd_project(const CommandOptions &opts);
RunReport cmd_selfcheck(const CommandOptions &opts);

} // namespace cliffdet::cli
