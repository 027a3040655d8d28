#include <gtest/gtest.h>

#include <cmath>

#include "cliffdet/charpoly.hpp"
#include "cliffdet/compare.hpp"
#include "cliffdet/expression.hpp"
#include "cliffdet/matrix_oracle.hpp"
#include "cliffdet/random.hpp"

using namespace cliffdet;

namespace {

std::vector<Signature> all_signatures(int lo, int hi) {
  std::vector<Signature> out;
  for (int n = lo; n <= hi; ++n)
    for (int p = 0; p <= n; ++p)
      out.push_back(make_algebra(p, n - p));
  return out;
}

} // namespace

TEST(RepDimension, Values) {
  EXPECT_EQ(rep_dimension(make_algebra(0, 0)), 1);
  EXPECT_EQ(rep_dimension(make_algebra(2, 1)), 4);
  EXPECT_EQ(rep_dimension(make_algebra(3, 3)), 8);
  EXPECT_EQ(rep_dimension(make_algebra(4, 4)), 16);
}

TEST(FaddeevLeverrier, WorkedExampleCl11) {
  Rng rng(1);
  const Signature sig = make_algebra(1, 1);
  std::uniform_real_distribution<double> d(-3, 3);
  for (int t = 0; t < 50; ++t) {
    const double u = d(rng), u1 = d(rng), u2 = d(rng), u12 = d(rng);
    const Multivector x(sig, {u, u1, u2, u12});
    const double expect = u * u - u1 * u1 + u2 * u2 - u12 * u12;
    EXPECT_NEAR(faddeev_leverrier(x).det, expect, 1e-12 * std::max(1.0, std::abs(expect)));
    EXPECT_NEAR(det_closed_form(x), expect, 1e-12 * std::max(1.0, std::abs(expect)));
    EXPECT_NEAR(charpoly_via_bell(x).det, expect, 1e-12 * std::max(1.0, std::abs(expect)));
  }
}

TEST(FaddeevLeverrier, SmallCases) {
  EXPECT_EQ(faddeev_leverrier(parse("-3", make_algebra(0, 0))).det, -3.0);
  EXPECT_EQ(faddeev_leverrier(parse("1 + 2e1", make_algebra(1, 1))).det, -3.0);
  const CharPoly cp = faddeev_leverrier(parse("e1", make_algebra(0, 1)));
  ASSERT_EQ(cp.N, 2);
  EXPECT_EQ(cp.coeff(1), 0.0);
  EXPECT_EQ(cp.coeff(2), -1.0);
  EXPECT_EQ(cp.det, 1.0);
}

TEST(FaddeevLeverrier, ScalarElements) {
  for (const Signature &sig : all_signatures(0, 6)) {
    const int N = rep_dimension(sig);
    EXPECT_NEAR(faddeev_leverrier(Multivector::scalar(sig, 1.0)).det, 1.0, 1e-12);
    EXPECT_NEAR(faddeev_leverrier(Multivector::scalar(sig, 1.5)).det, std::pow(1.5, N), 1e-9);
  }
}

TEST(FaddeevLeverrier, AgreesWithMatrixDeterminant) {
  Rng rng(2);
  for (const Signature &sig : all_signatures(0, 7)) {
    const GeneratorRep rep = build_generators(sig);
    for (int t = 0; t < 5; ++t) {
      const Multivector u = random_multivector(sig, rng);
      const Complex md = mat_det(represent(u, rep));
      EXPECT_LT(relative_error(faddeev_leverrier(u).det, md.real(),
                               degree_scale(u, rep_dimension(sig))),
                1e-9)
          << to_string(sig);
    }
  }
}

TEST(FaddeevLeverrier, IntegerElementsGiveIntegers) {
  Rng rng(3);
  for (const Signature &sig : all_signatures(1, 5)) {
    const Multivector u = random_multivector(sig, rng, SampleMode::integer);
    const double det = faddeev_leverrier(u).det;
    EXPECT_NEAR(det, std::round(det), 1e-6 * std::max(1.0, std::abs(det)));
  }
}

TEST(PowerTraces, Examples) {
  const PowerTraces e = power_traces(Multivector::scalar(make_algebra(2, 0), 1.0));
  EXPECT_EQ(e.S[0], 2.0);
  EXPECT_EQ(e.S[1], -2.0);
  const PowerTraces p = power_traces(parse("e1", make_algebra(1, 0)));
  EXPECT_EQ(p.S[0], 0.0);
  EXPECT_EQ(p.S[1], -2.0);
}

TEST(Bell, CharpolyMatchesFl) {
  Rng rng(4);
  for (const Signature &sig : all_signatures(0, 8)) {
    const Multivector u = random_multivector(sig, rng);
    const CharPoly a = faddeev_leverrier(u), b = charpoly_via_bell(u);
    for (int k = 1; k <= a.N; ++k)
      EXPECT_LT(relative_error(a.coeff(k), b.coeff(k), degree_scale(u, k)), 1e-9)
          << to_string(sig) << " k=" << k;
    EXPECT_LT(relative_difference(a.adj, b.adj, degree_scale(u, a.N - 1)), 1e-9);
  }
}

TEST(Bell, DisplayedLowDimensionFormulas) {
  Rng rng(5);
  for (const Signature &sig : all_signatures(1, 4)) {
    const Multivector u = random_multivector(sig, rng);
    const double s1 = scalar_part(u), s2 = scalar_part(u * u), s3 = scalar_part(power(u, 3)),
                 s4 = scalar_part(power(u, 4));
    const double det = faddeev_leverrier(u).det;
    if (sig.n() <= 2) // B_2(2 s1, -2 s2) / 2
      EXPECT_NEAR(det, 2 * s1 * s1 - s2, 1e-12);
    else
      EXPECT_NEAR(det,
                  (32 * std::pow(s1, 4) - 48 * s1 * s1 * s2 + 16 * s1 * s3 + 6 * s2 * s2 - 3 * s4) /
                      3,
                  1e-11);
  }
}

TEST(ClosedForm, MatchesFl) {
  Rng rng(6);
  for (const Signature &sig : all_signatures(0, 6)) {
    for (int t = 0; t < 5; ++t) {
      const Multivector u = random_multivector(sig, rng);
      const CharPoly fl = faddeev_leverrier(u);
      const double s = degree_scale(u, fl.N);
      for (ClosedForm f : {ClosedForm::first, ClosedForm::second}) {
        EXPECT_LT(relative_error(det_closed_form(u, f), fl.det, s), 1e-9) << to_string(sig);
        EXPECT_LT(relative_difference(adjugate_closed_form(u, f), fl.adj,
                                      degree_scale(u, fl.N - 1)),
                  1e-9);
      }
    }
  }
}

TEST(ClosedForm, DocumentedAdjugates) {
  Rng rng(7);
  const Multivector u2 = random_multivector(make_algebra(1, 1), rng);
  EXPECT_LT(max_abs_difference(adjugate_closed_form(u2), clifford_conjugation(u2)), 1e-14);
  const Multivector u4 = random_multivector(make_algebra(2, 2), rng);
  const Multivector expect =
      reversion(u4) * triangle(grade_involution(u4) * clifford_conjugation(u4));
  EXPECT_LT(max_abs_difference(adjugate_closed_form(u4), expect), 1e-14);
}

TEST(ClosedForm, UnsupportedAboveSix) {
  const Multivector u = Multivector::scalar(make_algebra(7, 0), 1);
  try {
    det_closed_form(u);
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::dimension_unsupported);
  }
}

TEST(ClosedForm, N3Orderings) {
  const Signature sig = make_algebra(2, 1);
  for (double v : det_closed_form_variants_n3(Multivector::scalar(sig, 1.0)))
    EXPECT_EQ(v, 1.0);
  for (double v : det_closed_form_variants_n3(Multivector::scalar(sig, 1.5)))
    EXPECT_NEAR(v, std::pow(1.5, 4), 1e-14);
  Rng rng(8);
  for (const Signature &s : all_signatures(3, 3)) {
    const Multivector u = random_multivector(s, rng);
    const double det = faddeev_leverrier(u).det;
    for (double v : det_closed_form_variants_n3(u))
      EXPECT_NEAR(v, det, 1e-12);
    const auto sums = paired_sums_n3(u);
    for (const Multivector &x : sums) {
      EXPECT_LT(max_abs_non_scalar(x), 1e-12);
      EXPECT_LT(max_abs_difference(x, sums[0]), 1e-12);
    }
    for (const Multivector &x : non_scalar_orderings_n3(u))
      EXPECT_GT(max_abs_non_scalar(x), 1e-6);
  }
  EXPECT_THROW(det_closed_form_variants_n3(Multivector::scalar(make_algebra(2, 0), 1)), Error);
}

TEST(BarForm, MatchesFl) {
  Rng rng(9);
  for (const Signature &sig : all_signatures(0, 5)) {
    const Multivector u = random_multivector(sig, rng);
    const double det = faddeev_leverrier(u).det;
    const double s = degree_scale(u, rep_dimension(sig));
    EXPECT_LT(relative_error(bar_form_det(u, BarFormBase::j), det, s), 1e-10) << to_string(sig);
    EXPECT_LT(relative_error(bar_form_det(u, BarFormBase::h), det, s), 1e-10) << to_string(sig);
  }
  EXPECT_THROW(bar_form_det(Multivector::scalar(make_algebra(6, 0), 1)), Error);
}

TEST(ExplicitCoeffs, MatchesFl) {
  Rng rng(10);
  for (const Signature &sig : all_signatures(0, 4)) {
    const Multivector u = random_multivector(sig, rng);
    const CharPoly fl = faddeev_leverrier(u), ex = explicit_coeffs_low_dim(u);
    for (int k = 1; k <= fl.N; ++k)
      EXPECT_LT(relative_error(ex.coeff(k), fl.coeff(k), degree_scale(u, k)), 1e-12);
  }
  const Multivector u1 = random_multivector(make_algebra(1, 0), rng);
  EXPECT_NEAR(explicit_coeffs_low_dim(u1).coeff(1), scalar_part(u1 + grade_involution(u1)),
              1e-15);
  EXPECT_THROW(explicit_coeffs_low_dim(Multivector::scalar(make_algebra(5, 0), 1)), Error);
}

TEST(Adjugate, Law) {
  Rng rng(11);
  for (const Signature &sig : all_signatures(0, 8)) {
    const Multivector u = random_multivector(sig, rng);
    const CharPoly cp = faddeev_leverrier(u);
    const Multivector d = Multivector::scalar(sig, cp.det);
    const double s = degree_scale(u, cp.N);
    EXPECT_LT(relative_difference(u * cp.adj, d, s), 1e-10) << to_string(sig);
    EXPECT_LT(relative_difference(cp.adj * u, d, s), 1e-10) << to_string(sig);
  }
}

TEST(Inverse, Examples) {
  const Signature sig = make_algebra(1, 0);
  EXPECT_EQ(format(inverse(parse("e1", sig))), "e1");
  EXPECT_EQ(format(inverse(parse("2", sig))), "0.5");
  try {
    inverse(parse("1 + e1", sig));
    FAIL();
  } catch (const NotInvertibleError &e) {
    EXPECT_EQ(e.code(), ErrorCode::not_invertible);
    EXPECT_EQ(e.det(), 0.0);
  }
}

TEST(Inverse, AllMethodsAgree) {
  Rng rng(12);
  for (const Signature &sig : all_signatures(1, 5)) {
    const Multivector u = random_multivector(sig, rng) + 3.0;
    const Multivector e = Multivector::scalar(sig, 1.0);
    for (Method m : {Method::fl, Method::bell, Method::closed, Method::bar}) {
      const Multivector x = inverse(u, default_invert_tolerance, m);
      EXPECT_LT(norm_inf(u * x - e), 1e-10) << to_string(sig) << " " << to_string(m);
    }
  }
}

TEST(Inverse, ThresholdScalesWithNorm) {
  const Signature sig = make_algebra(1, 0);
  EXPECT_NEAR(scalar_part(inverse(Multivector::scalar(sig, 1e-4))), 1e4, 1e-8);
  // det = 1000^2 - (1000 - 1e-9)^2 ~ 2e-6, below 1e-10 * 1000^2.
  const Multivector u = parse("1000 + 999.999999999e1", sig);
  EXPECT_DOUBLE_EQ(invertibility_threshold(u, default_invert_tolerance), 1e-4);
  EXPECT_THROW(inverse(u), NotInvertibleError);
  EXPECT_NO_THROW(inverse(u, 1e-12));
}

TEST(CayleyHamilton, Residual) {
  Rng rng(13);
  for (const Signature &sig : all_signatures(0, 6)) {
    const Multivector u = random_multivector(sig, rng);
    EXPECT_LT(norm_inf(cayley_hamilton_residual(u)),
              1e-9 * std::pow(norm_inf(u), rep_dimension(sig)));
  }
}

TEST(CharpolyEval, ConstantTerm) {
  Rng rng(14);
  const Multivector u = random_multivector(make_algebra(3, 1), rng);
  const CharPoly cp = faddeev_leverrier(u);
  EXPECT_NEAR(charpoly_eval(cp, 0.0), -cp.coeff(cp.N), 1e-15);
  EXPECT_NEAR(charpoly_eval(cp, 0.0), cp.det, 1e-15);
}

TEST(Determinant, DispatchMatches) {
  Rng rng(15);
  const Multivector u = random_multivector(make_algebra(2, 2), rng);
  const double fl = determinant(u);
  for (Method m : {Method::bell, Method::closed, Method::bar})
    EXPECT_NEAR(determinant(u, m), fl, 1e-12);
}

TEST(Determinant, ConjugationInvariance) {
  Rng rng(16);
  for (const Signature &sig : all_signatures(1, 6)) {
    const Multivector u = random_multivector(sig, rng);
    const CharPoly a = faddeev_leverrier(u);
    for (const Multivector &x : {grade_involution(u), reversion(u)}) {
      const CharPoly b = faddeev_leverrier(x);
      for (int k = 1; k <= a.N; ++k)
        EXPECT_LT(relative_error(a.coeff(k), b.coeff(k), degree_scale(u, k)), 1e-10);
    }
  }
}
