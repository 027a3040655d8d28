#include <gtest/gtest.h>

#include "cliffdet/cli/commands.hpp"
#include "cliffdet/expression.hpp"

using namespace cliffdet;
using namespace cliffdet::cli;

namespace {

CommandOptions options(const std::string &sig, const std::string &expr) {
  CommandOptions o;
  o.sig = parse_signature(sig);
  o.expr = expr;
  return o;
}

} // namespace

TEST(ExitCodes, Mapping) {
  EXPECT_EQ(exit_code_for(ErrorCode::syntax_error), exit_usage);
  EXPECT_EQ(exit_code_for(ErrorCode::index_out_of_range), exit_usage);
  EXPECT_EQ(exit_code_for(ErrorCode::grade_out_of_range), exit_usage);
  EXPECT_EQ(exit_code_for(ErrorCode::signature_mismatch), exit_usage);
  EXPECT_EQ(exit_code_for(ErrorCode::scheme_invalid_for_dimension), exit_usage);
  EXPECT_EQ(exit_code_for(ErrorCode::not_invertible), exit_not_invertible);
  EXPECT_EQ(exit_code_for(ErrorCode::dimension_cap_exceeded), exit_unsupported);
  EXPECT_EQ(exit_code_for(ErrorCode::dimension_unsupported), exit_unsupported);
  EXPECT_EQ(exit_code_for(ErrorCode::internal_consistency), exit_internal);
}

TEST(ParseSignature, Forms) {
  const Signature s = parse_signature("2,1");
  EXPECT_EQ(s.p(), 2);
  EXPECT_EQ(s.q(), 1);
  EXPECT_THROW(parse_signature("2"), Error);
  EXPECT_THROW(parse_signature("a,b"), Error);
  EXPECT_THROW(parse_signature("7,7"), Error);
  EXPECT_NO_THROW(parse_signature("7,7", 14));
}

TEST(ParseNames, MethodsVariantsSchemes) {
  EXPECT_EQ(parse_method("bell"), Method::bell);
  EXPECT_THROW(parse_method("lu"), Error);
  EXPECT_EQ(parse_variant("second"), ClosedForm::second);
  EXPECT_EQ(parse_variant("j"), ClosedForm::first);
  EXPECT_EQ(parse_scheme("t45-alt"), ScalarScheme::t45_alt);
  EXPECT_THROW(parse_scheme("t9"), Error);
}

TEST(ApplyConjugation, Names) {
  const Signature sig = make_algebra(2, 0);
  const Multivector u = parse("1 + e1 + e12", sig);
  EXPECT_EQ(format(apply_conjugation(u, "hat")), "1 - e1 + e12");
  EXPECT_EQ(format(apply_conjugation(u, "tilde")), "1 + e1 - e12");
  EXPECT_EQ(format(apply_conjugation(u, "hat-tilde")), "1 - e1 - e12");
  EXPECT_EQ(format(apply_conjugation(u, "bar")), "1 - e1 - e12");
  EXPECT_EQ(format(apply_conjugation(u, "bar-delta")), "1 - e1 - e12");
  EXPECT_EQ(format(apply_conjugation(u, "d1,d2")), "1 - e1 - e12");
  EXPECT_THROW(apply_conjugation(u, "flip"), Error);
}

TEST(Commands, Det) {
  const RunReport r = cmd_det(options("1,1", "1 + 2e1"));
  EXPECT_EQ(r.exit_code, exit_ok);
  EXPECT_EQ(r.result["det"].get<double>(), -3.0);
  EXPECT_EQ(r.to_text(), "-3\n");
  const auto j = r.to_json();
  EXPECT_EQ(j["signature"]["p"], 1);
  EXPECT_EQ(j["N"], 2);
  EXPECT_EQ(j["command"], "det");
}

TEST(Commands, DetAllMethods) {
  for (Method m : {Method::fl, Method::bell, Method::closed, Method::bar}) {
    CommandOptions o = options("2,1", "2 + e1 + 0.5e23");
    o.method = m;
    EXPECT_NEAR(cmd_det(o).result["det"].get<double>(),
                determinant(parse(o.expr, o.sig)), 1e-12);
  }
}

TEST(Commands, Charpoly) {
  const RunReport r = cmd_charpoly(options("0,1", "e1"));
  const std::string text = r.to_text();
  EXPECT_NE(text.find("C = [0, -1]"), std::string::npos) << text;
  EXPECT_NE(text.find("det = 1"), std::string::npos) << text;
}

TEST(Commands, InverseAndSingular) {
  EXPECT_EQ(cmd_inverse(options("2,0", "e1")).to_text(), "e1\n");
  const RunReport r = cmd_inverse(options("1,0", "1 + e1"));
  EXPECT_EQ(r.exit_code, exit_not_invertible);
  EXPECT_EQ(r.to_text(), "not invertible, det = 0\n");
  EXPECT_FALSE(r.result["invertible"].get<bool>());
}

TEST(Commands, TraceAndScheme) {
  CommandOptions o = options("2,0", "3 + e1");
  EXPECT_EQ(cmd_trace(o).result["trace"].get<double>(), 6.0);
  o.scheme = ScalarScheme::r2;
  EXPECT_EQ(cmd_trace(o).result["scalar"].get<double>(), 3.0);
  o.scheme = ScalarScheme::t2;
  EXPECT_THROW(cmd_trace(o), Error);
}

TEST(Commands, Project) {
  CommandOptions o = options("3,0", "1 + e1 + e123");
  o.center = true;
  EXPECT_EQ(cmd_project(o).to_text(), "1 + e123\n");
  o.center = false;
  o.grade = 1;
  EXPECT_EQ(cmd_project(o).to_text(), "e1\n");
  o.qtype = 0;
  EXPECT_THROW(cmd_project(o), Error);
}

TEST(Commands, Selfcheck) {
  CommandOptions o;
  o.sig = parse_signature("1,1");
  o.selfcheck.trials = 5;
  const RunReport r = cmd_selfcheck(o);
  EXPECT_EQ(r.exit_code, exit_ok) << r.to_text();
  EXPECT_FALSE(r.checks.empty());
  for (const Check &c : r.checks)
    EXPECT_TRUE(c.passed) << c.name << " " << c.detail;
}

TEST(Commands, SelfcheckIsDeterministic) {
  SelfcheckOptions o;
  o.trials = 3;
  o.seed = 7;
  const auto a = run_selfcheck(make_algebra(2, 2), o);
  const auto b = run_selfcheck(make_algebra(2, 2), o);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    EXPECT_EQ(a[i].max_error, b[i].max_error) << a[i].name;
}
