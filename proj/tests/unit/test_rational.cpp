#include <gtest/gtest.h>

#include <cmath>

#include "bstab/errors.hpp"
#include "bstab/linalg.hpp"
#include "bstab/roots.hpp"
#include "bstab_test/generators.hpp"
#include "test_helpers.hpp"

using namespace bstab;
using namespace bstab::unit;
namespace gen = bstab::testing;

TEST(Rational, ParseForms) {
  EXPECT_EQ(q("3/6"), ratio(1, 2));
  EXPECT_EQ(q("-1.25"), ratio(-5, 4));
  EXPECT_EQ(q("3e-2"), ratio(3, 100));
  EXPECT_EQ(to_string(q("4/8")), "1/2");
  EXPECT_THROW(q("1/0"), Error);
  EXPECT_THROW(q("abc"), Error);
}

TEST(Rational, RatioIsCanonical) {
  Rational a = ratio(5, 80), b = ratio(1, 16);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.get_den(), 16);
  EXPECT_EQ(ratio(-3, -6), ratio(1, 2));
}

TEST(Rational, FromDoubleExact) {
  EXPECT_EQ(from_double(0.375), ratio(3, 8));
  EXPECT_EQ(to_double(from_double(0.1)), 0.1);
  EXPECT_EQ(factorial(5), 120);
}

TEST(QPoly, ArithmeticAndShift) {
  QPoly f = QPoly::from_roots(qv({"0", "2"}));
  EXPECT_EQ(f, qp({"0", "-2", "1"}));
  EXPECT_EQ(f.derivative(), qp({"-2", "2"}));
  // f(x + 1) = (x + 1)(x - 1)
  EXPECT_EQ(f.shifted(1), qp({"-1", "0", "1"}));
  EXPECT_EQ((2 * f).monic(), f);
  EXPECT_EQ(f(q("3")), 3);
}

TEST(QPoly, SturmCounts) {
  EXPECT_EQ(qp({"1", "0", "1"}).count_real_roots(), 0);
  EXPECT_EQ(QPoly::from_roots(qv({"-1", "1/3", "2"})).count_real_roots(), 3);
  // (x - 1)^2 (x + 2): two distinct real roots
  EXPECT_EQ((QPoly::from_roots(qv({"1", "1", "-2"}))).count_real_roots(), 2);
}

TEST(QPoly, GcdDetectsRepeatedRoot) {
  QPoly f = QPoly::from_roots(qv({"1", "1", "-2"}));
  EXPECT_EQ(QPoly::gcd(f, f.derivative()).monic(), qp({"-1", "1"}));
}

TEST(Linalg, BareissMatchesCofactor) {
  QMatrix m = QMatrix::from_rows({qv({"2", "1", "0"}), qv({"1", "3", "1"}), qv({"0", "1", "4"})});
  // 2(12 - 1) - 1(4 - 0) = 18
  EXPECT_EQ(det_bareiss(m), 18);
  auto inv = inverse(m);
  ASSERT_TRUE(inv);
  EXPECT_EQ(m * *inv, QMatrix::identity(3));
}

TEST(Linalg, InertiaAndDefiniteness) {
  QMatrix d = QMatrix::from_rows({qv({"0", "0", "-1"}), qv({"0", "1", "0"}), qv({"-1", "0", "0"})});
  Inertia in = inertia(d);
  EXPECT_EQ(in.positive, 2);
  EXPECT_EQ(in.negative, 1);
  EXPECT_EQ(in.zero, 0);
  EXPECT_FALSE(negative_definite(d));
  QMatrix n = QMatrix::from_rows({qv({"-2", "1"}), qv({"1", "-1"})});
  EXPECT_TRUE(negative_definite(n));
  EXPECT_FALSE(positive_definite(n));
}

TEST(Linalg, NullspaceIsKernel) {
  QMatrix a = QMatrix::from_rows({qv({"1", "2", "3", "4"}), qv({"0", "1", "1", "1"})});
  QMatrix k = nullspace(a);
  EXPECT_EQ(k.cols(), 2u);
  QMatrix z = a * k;
  for (std::size_t i = 0; i < z.rows(); ++i)
    for (std::size_t j = 0; j < z.cols(); ++j) EXPECT_EQ(sgn(z(i, j)), 0);
  EXPECT_EQ(rank(a), 2u);
}

TEST(Roots, CompanionAndPolish) {
  auto r = real_roots({6, -11, 6, -1});  // -(x-1)(x-2)(x-3)
  ASSERT_EQ(r.size(), 3u);
  EXPECT_NEAR(r[0], 1, 1e-14);
  EXPECT_NEAR(r[1], 2, 1e-14);
  EXPECT_NEAR(r[2], 3, 1e-14);
  EXPECT_THROW(real_roots({1, 0, 1}), Error);
  std::vector<double> out;
  EXPECT_FALSE(try_real_roots({1, 0, 1}, out));
}

// Property: the roots of a product of random linear factors are recovered.
TEST(Roots, PropertyRecoversRandomRoots) {
  gen::Rng rng(11);
  for (int it = 0; it < 200; ++it) {
    int n = static_cast<int>(gen::int_in(rng, 1, 6));
    RationalVec rs = gen::increasing(rng, static_cast<std::size_t>(n), -5, ratio(1, 8), 3, 8);
    auto got = real_roots(QPoly::from_roots(rs).to_doubles());
    ASSERT_EQ(got.size(), rs.size());
    for (std::size_t i = 0; i < rs.size(); ++i) EXPECT_NEAR(got[i], to_double(rs[i]), 1e-10);
  }
}
