#include "cliffdet/cli/commands.hpp"

#include <chrono>
#include <cstdlib>
#include <sstream>

#include "cliffdet/compare.hpp"
#include "cliffdet/conjugations.hpp"
#include "cliffdet/expression.hpp"
#include "cliffdet/matrix_oracle.hpp"

namespace cliffdet::cli {

int exit_code_for(ErrorCode code) {
  switch (code) {
  case ErrorCode::syntax_error:
  case ErrorCode::index_out_of_range:
  case ErrorCode::grade_out_of_range:
  case ErrorCode::signature_mismatch:
  case ErrorCode::scheme_invalid_for_dimension:
    return exit_usage;
  case ErrorCode::not_invertible:
    return exit_not_invertible;
  case ErrorCode::dimension_cap_exceeded:
  case ErrorCode::dimension_unsupported:
    return exit_unsupported;
  case ErrorCode::internal_consistency:
    return exit_internal;
  }
  return exit_internal;
}

Method parse_method(const std::string &name) {
  if (name == "fl") return Method::fl;
  if (name == "bell") return Method::bell;
  if (name == "closed") return Method::closed;
  if (name == "bar") return Method::bar;
  throw Error(ErrorCode::syntax_error, "unknown method '" + name + "'");
}

ClosedForm parse_variant(const std::string &name) {
  if (name == "first" || name == "j") return ClosedForm::first;
  if (name == "second" || name == "h") return ClosedForm::second;
  throw Error(ErrorCode::syntax_error, "unknown variant '" + name + "'");
}

ScalarScheme parse_scheme(const std::string &name) {
  for (ScalarScheme s : all_scalar_schemes)
    if (to_string(s) == name)
      return s;
  throw Error(ErrorCode::syntax_error, "unknown scheme '" + name + "'");
}

Signature parse_signature(const std::string &text, int cap) {
  const auto comma = text.find(',');
  if (comma == std::string::npos)
    throw SyntaxError(0, "signature must be p,q");
  auto number = [&](std::string_view part, std::size_t offset) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (ec != std::errc() || ptr != part.data() + part.size() || part.empty())
      throw SyntaxError(offset, "expected a nonnegative integer in signature");
    return value;
  };
  const std::string_view all(text);
  const int p = number(all.substr(0, comma), 0);
  const int q = number(all.substr(comma + 1), comma + 1);
  return make_algebra(p, q, cap);
}

Multivector apply_conjugation(const Multivector &u, const std::string &op) {
  Multivector out = u;
  std::stringstream parts(op);
  std::string part;
  bool any = false;
  while (std::getline(parts, part, ',')) {
    any = true;
    if (part == "hat")
      out = grade_involution(out);
    else if (part == "tilde")
      out = reversion(out);
    else if (part == "hat-tilde" || part == "clifford")
      out = clifford_conjugation(out);
    else if (part == "bar")
      out = bar_conj(out);
    else if (part == "bar-delta")
      out = bar_via_delta(out);
    else if (part.size() >= 2 && part[0] == 'd') {
      int j = 0;
      const auto [ptr, ec] = std::from_chars(part.data() + 1, part.data() + part.size(), j);
      if (ec != std::errc() || ptr != part.data() + part.size())
        throw Error(ErrorCode::syntax_error, "bad conjugation '" + part + "'");
      out = delta_conj(out, j);
    } else {
      throw Error(ErrorCode::syntax_error, "unknown conjugation '" + part + "'");
    }
  }
  if (!any)
    throw Error(ErrorCode::syntax_error, "empty conjugation");
  return out;
}

namespace {

using Clock = std::chrono::steady_clock;

struct Timer {
  Clock::time_point start = Clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  }
};

std::string num(double x) { return detail::format_double(x); }

RunReport start_report(const std::string &command, const CommandOptions &opts,
                       Multivector &u, bool with_method = true) {
  RunReport r;
  r.command = command;
  r.sig = opts.sig;
  u = parse(opts.expr, opts.sig);
  r.input = format(u);
  if (with_method)
    r.method = std::string(to_string(opts.method));
  return r;
}

std::string polynomial_text(const std::vector<double> &c) {
  const int N = static_cast<int>(c.size());
  auto power = [](int k) {
    if (k == 0) return std::string();
    if (k == 1) return std::string("lambda");
    return "lambda^" + std::to_string(k);
  };
  std::string out = power(N);
  for (int k = 1; k <= N; ++k) {
    const double coeff = -c[k - 1];
    if (coeff == 0.0)
      continue;
    out += coeff < 0 ? " - " : " + ";
    const double mag = std::abs(coeff);
    const int deg = N - k;
    if (deg == 0)
      out += num(mag);
    else
      out += (mag == 1.0 ? std::string() : num(mag) + "*") + power(deg);
  }
  return out;
}

} // namespace

nlohmann::json RunReport::to_json() const {
  nlohmann::json checks_json = nlohmann::json::array();
  for (const Check &c : checks) {
    nlohmann::json j{{"name", c.name},
                     {"passed", c.passed},
                     {"max_error", std::isfinite(c.max_error) ? nlohmann::json(c.max_error)
                                                              : nlohmann::json("inf")},
                     {"tolerance", c.tolerance},
                     {"trials", c.trials}};
    if (!c.detail.empty())
      j["detail"] = c.detail;
    checks_json.push_back(std::move(j));
  }
  nlohmann::json out{{"signature", {{"p", sig.p()}, {"q", sig.q()}}},
                     {"n", sig.n()},
                     {"N", rep_dimension(sig)},
                     {"command", command},
                     {"method", method.empty() ? nlohmann::json(nullptr) : nlohmann::json(method)},
                     {"result", result},
                     {"checks", std::move(checks_json)},
                     {"timing_ms", timing_ms}};
  if (!input.empty())
    out["input"] = input;
  return out;
}

std::string RunReport::to_text() const {
  std::string out;
  for (const auto &line : lines)
    out += line + "\n";
  for (const Check &c : checks) {
    std::ostringstream os;
    os << (c.passed ? "PASS " : "FAIL ") << c.name << "  max_error=" << c.max_error
       << "  tol=" << c.tolerance << "  trials=" << c.trials;
    if (!c.detail.empty())
      os << "  (" << c.detail << ")";
    out += os.str() + "\n";
  }
  return out;
}

RunReport cmd_det(const CommandOptions &opts) {
  Timer timer;
  Multivector u;
  RunReport r = start_report("det", opts, u);
  double det = 0.0;
  switch (opts.method) {
  case Method::closed: det = det_closed_form(u, opts.variant); break;
  case Method::bar:
    det = bar_form_det(u, opts.variant == ClosedForm::first ? BarFormBase::j : BarFormBase::h);
    break;
  default: det = determinant(u, opts.method); break;
  }
  r.result["det"] = det;
  r.lines.push_back(num(det));
  r.timing_ms = timer.ms();
  return r;
}

RunReport cmd_charpoly(const CommandOptions &opts) {
  Timer timer;
  Multivector u;
  RunReport r = start_report("charpoly", opts, u);
  CharPoly cp;
  switch (opts.method) {
  case Method::fl: cp = faddeev_leverrier(u); break;
  case Method::bell: cp = charpoly_via_bell(u); break;
  case Method::closed: cp = explicit_coeffs_low_dim(u); break;
  case Method::bar:
    throw Error(ErrorCode::dimension_unsupported,
                "the bar method gives only the determinant");
  }
  r.result["C"] = cp.C;
  r.result["det"] = cp.det;
  r.result["adjugate"] = format(cp.adj);
  r.result["polynomial"] = polynomial_text(cp.C);
  std::string list = "C = [";
  for (std::size_t k = 0; k < cp.C.size(); ++k)
    list += (k ? ", " : "") + num(cp.C[k]);
  r.lines.push_back(list + "]");
  r.lines.push_back("phi(lambda) = " + polynomial_text(cp.C));
  r.lines.push_back("det = " + num(cp.det));
  r.timing_ms = timer.ms();
  return r;
}

RunReport cmd_adjugate(const CommandOptions &opts) {
  Timer timer;
  Multivector u;
  RunReport r = start_report("adjugate", opts, u);
  Multivector adj;
  double det = 0.0;
  if (opts.method == Method::closed || opts.method == Method::bar) {
    adj = adjugate_closed_form(u, opts.variant);
    det = det_closed_form(u, opts.variant);
  } else {
    const CharPoly cp =
        opts.method == Method::fl ? faddeev_leverrier(u) : charpoly_via_bell(u);
    adj = cp.adj;
    det = cp.det;
  }
  r.result["adjugate"] = format(adj);
  r.result["det"] = det;
  r.lines.push_back(format(adj));
  r.timing_ms = timer.ms();
  return r;
}

RunReport cmd_inverse(const CommandOptions &opts) {
  Timer timer;
  Multivector u;
  RunReport r = start_report("inverse", opts, u);
  const double threshold = invertibility_threshold(u, opts.tol);
  r.result["threshold"] = threshold;
  try {
    const Multivector inv = inverse(u, opts.tol, opts.method);
    const Multivector e = Multivector::scalar(u.signature(), 1.0);
    const double residual = std::max(norm_inf(u * inv - e), norm_inf(inv * u - e));
    r.result["invertible"] = true;
    r.result["inverse"] = format(inv);
    r.result["residual"] = residual;
    r.lines.push_back(format(inv));
  } catch (const NotInvertibleError &e) {
    r.result["invertible"] = false;
    r.result["det"] = e.det();
    r.lines.push_back("not invertible, det = " + num(e.det()));
    r.exit_code = exit_not_invertible;
  }
  r.timing_ms = timer.ms();
  return r;
}

RunReport cmd_trace(const CommandOptions &opts) {
  Timer timer;
  Multivector u;
  RunReport r = start_report("trace", opts, u, false);
  const int N = rep_dimension(u.signature());
  const double scalar = opts.scheme ? scalar_part_via_conj(u, *opts.scheme) : scalar_part(u);
  if (opts.scheme)
    r.method = std::string(to_string(*opts.scheme));
  r.result["scalar"] = scalar;
  r.result["trace"] = N * scalar;
  r.lines.push_back("<U>_0 = " + num(scalar));
  r.lines.push_back("tr = " + num(N * scalar));
  r.timing_ms = timer.ms();
  return r;
}

RunReport cmd_conj(const CommandOptions &opts) {
  Timer timer;
  Multivector u;
  RunReport r = start_report("conj", opts, u, false);
  if (opts.op.empty())
    throw Error(ErrorCode::syntax_error, "conj needs --op");
  const Multivector out = apply_conjugation(u, opts.op);
  r.method = opts.op;
  r.result["value"] = format(out);
  r.lines.push_back(format(out));
  r.timing_ms = timer.ms();
  return r;
}

RunReport cmd_project(const CommandOptions &opts) {
  Timer timer;
  Multivector u;
  RunReport r = start_report("project", opts, u, false);
  const int chosen = int(opts.grade.has_value()) + int(opts.qtype.has_value()) + int(opts.center);
  if (chosen != 1)
    throw Error(ErrorCode::syntax_error, "project needs exactly one of --grade, --qtype, --center");
  Multivector out;
  if (opts.grade) {
    out = grade_project(u, *opts.grade);
    r.method = "grade " + std::to_string(*opts.grade);
  } else if (opts.qtype) {
    out = quaternion_type_project(u, *opts.qtype);
    r.method = "qtype " + std::to_string(*opts.qtype);
  } else {
    out = center_project(u);
    r.method = "center";
  }
  r.result["value"] = format(out);
  r.lines.push_back(format(out));
  r.timing_ms = timer.ms();
  return r;
}

RunReport cmd_selfcheck(const CommandOptions &opts) {
  Timer timer;
  RunReport r;
  r.command = "selfcheck";
  r.sig = opts.sig;
  r.method = std::string(to_string(opts.selfcheck.suite));
  r.checks = run_selfcheck(opts.sig, opts.selfcheck);
  bool ok = true;
  for (const Check &c : r.checks)
    ok = ok && c.passed;
  r.result["passed"] = ok;
  r.result["seed"] = opts.selfcheck.seed;
  r.result["trials"] = opts.selfcheck.trials;
  r.lines.push_back(to_string(opts.sig) + " suite " + r.method + ", seed " +
                    std::to_string(opts.selfcheck.seed) + ", " +
                    std::to_string(opts.selfcheck.trials) + " trials");
  r.exit_code = ok ? exit_ok : exit_check_failed;
  r.timing_ms = timer.ms();
  return r;
}

} // namespace cliffdet::cli
