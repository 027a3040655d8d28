#include <gtest/gtest.h>

#include "cliffdet/algebra.hpp"
#include "cliffdet/expression.hpp"
#include "cliffdet/random.hpp"

using namespace cliffdet;

namespace {

// Product of two blades by sorting the concatenated generator list, one
// adjacent swap at a time, then contracting equal neighbours.
BladeProduct slow_blade_mul(BladeMask a, BladeMask b, const Signature &sig) {
  std::vector<int> idx;
  for (int i = 1; i <= sig.n(); ++i)
    if (a & (1u << (i - 1)))
      idx.push_back(i);
  for (int i = 1; i <= sig.n(); ++i)
    if (b & (1u << (i - 1)))
      idx.push_back(i);
  int sign = 1;
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j + 1 < idx.size() - i; ++j)
      if (idx[j] > idx[j + 1]) {
        std::swap(idx[j], idx[j + 1]);
        sign = -sign;
      }
  BladeMask mask = 0;
  for (std::size_t i = 0; i < idx.size();) {
    if (i + 1 < idx.size() && idx[i] == idx[i + 1]) {
      sign *= sig.metric(idx[i]);
      i += 2;
    } else {
      mask |= 1u << (idx[i] - 1);
      ++i;
    }
  }
  return {mask, sign};
}

} // namespace

TEST(Signature, Basics) {
  const Signature s = make_algebra(1, 1);
  EXPECT_EQ(s.n(), 2);
  EXPECT_EQ(s.metric(1), 1);
  EXPECT_EQ(s.metric(2), -1);
  EXPECT_EQ(make_algebra(0, 0).size(), 1u);
  EXPECT_EQ(to_string(s), "Cl(1,1)");
}

TEST(Signature, CapAndNegative) {
  try {
    make_algebra(10, 10);
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::dimension_cap_exceeded);
  }
  EXPECT_THROW(make_algebra(-1, 0), Error);
  EXPECT_NO_THROW(make_algebra(10, 10, 20));
}

TEST(BladeMul, DocumentedCases) {
  const Signature s10 = make_algebra(1, 0), s20 = make_algebra(2, 0), s01 = make_algebra(0, 1);
  EXPECT_EQ(blade_mul(1, 1, s10).mask, 0u);
  EXPECT_EQ(blade_mul(1, 1, s10).sign, 1);
  EXPECT_EQ(blade_mul(2, 1, s20).mask, 3u);
  EXPECT_EQ(blade_mul(2, 1, s20).sign, -1);
  EXPECT_EQ(blade_mul(1, 1, s01).sign, -1);
  EXPECT_EQ(blade_mul(3, 3, s20).mask, 0u);
  EXPECT_EQ(blade_mul(3, 3, s20).sign, -1);
}

TEST(BladeMul, MatchesSwapCounting) {
  for (int n = 0; n <= 6; ++n)
    for (int p = 0; p <= n; ++p) {
      const Signature sig = make_algebra(p, n - p);
      for (BladeMask a = 0; a < sig.size(); ++a)
        for (BladeMask b = 0; b < sig.size(); ++b) {
          const BladeProduct fast = blade_mul(a, b, sig);
          const BladeProduct slow = slow_blade_mul(a, b, sig);
          ASSERT_EQ(fast.mask, slow.mask) << to_string(sig) << " " << a << " " << b;
          ASSERT_EQ(fast.sign, slow.sign) << to_string(sig) << " " << a << " " << b;
        }
    }
}

TEST(Product, Examples) {
  const Signature s11 = make_algebra(1, 1), s10 = make_algebra(1, 0);
  EXPECT_EQ(format(parse("e1", s11) * parse("e2", s11)), "e12");
  EXPECT_TRUE((parse("1 + e1", s10) * parse("1 - e1", s10)).is_zero());
  const Multivector e1 = Multivector::blade(s11, 1);
  EXPECT_EQ(format(scale(2, e1) + e1), "3*e1");
}

TEST(Product, LinearAndAssociative) {
  Rng rng(3);
  for (int n = 0; n <= 5; ++n) {
    const Signature sig = make_algebra(n / 2, n - n / 2);
    for (int t = 0; t < 20; ++t) {
      const Multivector a = random_multivector(sig, rng), b = random_multivector(sig, rng),
                        c = random_multivector(sig, rng);
      EXPECT_LT(max_abs_difference((a * b) * c, a * (b * c)), 1e-12);
      EXPECT_LT(max_abs_difference(a * (b + c), a * b + a * c), 1e-12);
      EXPECT_TRUE((a + scale(-1, a)).is_zero());
      EXPECT_TRUE(scale(0, a).is_zero());
    }
  }
}

TEST(Product, SignatureMismatch) {
  const Multivector a = Multivector::scalar(make_algebra(1, 0), 1);
  const Multivector b = Multivector::scalar(make_algebra(0, 1), 1);
  try {
    (void)(a * b);
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::signature_mismatch);
  }
}

TEST(Projection, Grades) {
  const Signature sig = make_algebra(2, 0);
  const Multivector u = parse("1 + 2e1 + 3e12", sig);
  EXPECT_EQ(format(grade_project(u, 1)), "2*e1");
  EXPECT_EQ(format(grade_project(u, 0)), "1");
  try {
    grade_project(u, 3);
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::grade_out_of_range);
  }
  EXPECT_EQ(scalar_part(parse("5 + e1", sig)), 5.0);
  EXPECT_EQ(scalar_part(parse("e1", sig) * parse("e2", sig)), 0.0);
}

TEST(Projection, QuaternionTypesPartition) {
  Rng rng(5);
  const Signature sig = make_algebra(3, 3);
  const Multivector u = random_multivector(sig, rng);
  Multivector sum(sig);
  for (int r = 0; r < 4; ++r) {
    const Multivector part = quaternion_type_project(u, r);
    for (BladeMask m = 0; m < sig.size(); ++m)
      if (part[m] != 0.0) {
        EXPECT_EQ(grade(m) % 4, r);
      }
    sum = sum + part;
  }
  EXPECT_EQ(max_abs_difference(sum, u), 0.0);
}

TEST(Projection, Center) {
  EXPECT_EQ(format(center_project(parse("1 + e1 + e12", make_algebra(2, 0)))), "1");
  EXPECT_EQ(format(center_project(parse("1 + e1 + e123", make_algebra(3, 0)))), "1 + e123");
}

TEST(Projection, CenterCommutes) {
  Rng rng(8);
  for (int n : {3, 5}) {
    const Signature sig = make_algebra(n, 0);
    const Multivector z = center_project(random_multivector(sig, rng));
    const Multivector v = random_multivector(sig, rng);
    EXPECT_LT(max_abs_difference(z * v, v * z), 1e-12);
  }
}

TEST(Involutions, Signs) {
  const Signature sig = make_algebra(2, 0);
  EXPECT_EQ(format(grade_involution(parse("e1", sig))), "-e1");
  EXPECT_EQ(format(grade_involution(parse("e12", sig))), "e12");
  EXPECT_EQ(format(reversion(parse("e12", sig))), "-e12");
  EXPECT_EQ(format(clifford_conjugation(parse("1 + e1 + e12", sig))), "1 - e1 - e12");
}

TEST(Involutions, AntiAutomorphismLaws) {
  Rng rng(9);
  const Signature sig = make_algebra(2, 3);
  for (int t = 0; t < 10; ++t) {
    const Multivector u = random_multivector(sig, rng), v = random_multivector(sig, rng);
    EXPECT_LT(max_abs_difference(grade_involution(u * v), grade_involution(u) * grade_involution(v)),
              1e-12);
    EXPECT_LT(max_abs_difference(reversion(u * v), reversion(v) * reversion(u)), 1e-12);
    EXPECT_LT(max_abs_difference(clifford_conjugation(u * v),
                                 clifford_conjugation(v) * clifford_conjugation(u)),
              1e-12);
  }
}

TEST(Power, RepeatedProduct) {
  const Signature sig = make_algebra(1, 1);
  const Multivector u = parse("1 + e1", sig);
  EXPECT_EQ(format(power(u, 0)), "1");
  EXPECT_EQ(format(power(u, 3)), "4 + 4*e1");
}
