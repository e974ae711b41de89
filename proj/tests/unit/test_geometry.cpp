#include <gtest/gtest.h>

#include <cmath>
#include <functional>

#include "bstab/errors.hpp"
#include "bstab/geometry.hpp"
#include "bstab_test/generators.hpp"
#include "test_helpers.hpp"

using namespace bstab;
using namespace bstab::unit;
namespace gen = bstab::testing;

namespace {

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::InvalidInput;
}

LatticeVector V(std::initializer_list<const char*> xs) { return LatticeVector{qv(xs)}; }

LatticeVector combine(const Rational& a, const LatticeVector& x, const Rational& b, const LatticeVector& y) {
  LatticeVector r = x;
  for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] = a * x.coords[i] + b * y.coords[i];
  return r;
}

}  // namespace

TEST(TwistedChern, ZeroTwistIsIdentity) {
  LatticeVector v = V({"2", "-1", "1/3", "5"});
  for (int k = 0; k <= 3; ++k) EXPECT_EQ(twisted_chern(v, Rational(0), k), v.coords[static_cast<std::size_t>(k)]);
}

TEST(TwistedChern, CurvePointShiftsParameter) {
  for (int i = -10; i < 10; ++i) {
    Rational t = ratio(i, 3), beta = ratio(i * i - 7, 5);
    LatticeVector g = gamma(t, 3);
    Rational s = t - beta, pw = 1;
    for (int k = 0; k <= 3; ++k) {
      EXPECT_EQ(twisted_chern(g, beta, k), pw / factorial(static_cast<unsigned>(k)));
      pw *= s;
    }
  }
  EXPECT_EQ(twisted_chern(gamma(q("7/4"), 3), q("7/4"), 3), 0);
  EXPECT_EQ(kind_of([] { twisted_chern(gamma(q("1"), 3), q("0"), 4); }), ErrorKind::IndexOutOfRange);
}

TEST(Discriminants, Examples) {
  EXPECT_EQ(delta_H(gamma(q("5/3"), 2)), 0);
  EXPECT_EQ(delta_H(V({"1", "0", "-3"})), 6);
  EXPECT_EQ(delta_H(V({"1", "0", "-1/2"})), 1);
  for (int i = -5; i <= 5; ++i) EXPECT_EQ(nabla_beta(gamma(ratio(i, 2), 3), ratio(1 - i, 3)), 0);
  EXPECT_EQ(kind_of([] { delta_H(V({"1", "0"})); }), ErrorKind::AmbientMismatch);
  EXPECT_EQ(kind_of([] { nabla_beta(V({"1", "0", "0"}), 0); }), ErrorKind::AmbientMismatch);
}

TEST(FamilyCheck, SingleRayPasses) {
  RootTuple t(qv({"-1", "0", "2"}), false);
  FamilyReport r = family_equiv_check(combine(3, gamma(0, 3), 0, gamma(0, 3)), t);
  EXPECT_TRUE(r.all_K_nonneg);
  EXPECT_TRUE(r.agree);
  EXPECT_EQ(r.beta, 0);
  EXPECT_EQ(r.K_hi, 2);
}

TEST(FamilyCheck, VerdictsMatchScan) {
  RootTuple t(qv({"-1", "0", "2"}), false);
  FamilyReport mixed = family_equiv_check(combine(1, gamma(-1, 3), 1, gamma(0, 3)), t);
  EXPECT_EQ(mixed.verdict, SignVerdict::Mixed);
  EXPECT_FALSE(mixed.all_K_nonneg);
  EXPECT_TRUE(mixed.agree);

  FamilyReport coherent = family_equiv_check(combine(1, gamma(-1, 3), -1, gamma(0, 3)), t);
  EXPECT_NE(coherent.verdict, SignVerdict::Mixed);
  EXPECT_TRUE(coherent.all_K_nonneg);
  EXPECT_TRUE(coherent.agree);

  EXPECT_EQ(kind_of([&] { family_equiv_check(V({"0", "1", "0", "0"}), t); }), ErrorKind::NotInKernel);
}

TEST(Threefold, RealRootsClosedForm) {
  ThreefoldParams p{q("1/2"), q("0"), q("1"), q("0")};
  ThreefoldRoots r = threefold_roots(p);
  ASSERT_EQ(r.re.size(), 3u);
  EXPECT_NEAR(r.re[0], -std::sqrt(6.0), 1e-12);
  EXPECT_NEAR(r.re[1], 0, 1e-12);
  EXPECT_NEAR(r.re[2], std::sqrt(6.0), 1e-12);
  ASSERT_EQ(r.im.size(), 2u);
  EXPECT_NEAR(r.im[0], -0.5, 1e-15);
  EXPECT_NEAR(r.im[1], 0.5, 1e-15);
}

TEST(Threefold, ChargeKernelsMatchRoots) {
  ThreefoldParams p{q("1"), q("1/2"), q("2"), q("1/3")};
  ASSERT_TRUE(p.valid());
  CentralCharge z = threefold_charge(p);
  ThreefoldRoots r = threefold_roots(p);
  for (double x : r.re) {
    auto g = gamma_double(x, 3);
    double s = 0;
    for (std::size_t k = 0; k < 4; ++k) s += to_double(z.re.weights[k]) * g[k];
    EXPECT_NEAR(s, 0, 1e-10) << x;
  }
  for (double x : r.im) {
    auto g = gamma_double(x, 3);
    double s = 0;
    for (std::size_t k = 0; k < 4; ++k) s += to_double(z.im.weights[k]) * g[k];
    EXPECT_NEAR(s, 0, 1e-10) << x;
  }
  EXPECT_EQ(kind_of([] { threefold_charge(ThreefoldParams{q("1"), q("0"), q("1/6"), q("0")}); }),
            ErrorKind::InvalidParams);
}

TEST(Threefold, ParamsFromTuples) {
  PartialParams a = params_from_tuples(RootTuple(qv({"-1", "3"}), false));
  EXPECT_EQ(a.p.alpha, 2);
  EXPECT_EQ(a.p.beta, 1);
  EXPECT_TRUE(a.ab_defaulted);

  PartialParams b = params_from_tuples(RootTuple(qv({"-1", "0", "2"}), false));
  EXPECT_EQ(b.p.beta, 0);
  EXPECT_EQ(b.p.b, q("1/3"));
  EXPECT_EQ(b.p.a, q("1/3"));
  EXPECT_TRUE(b.alpha_defaulted);
  ThreefoldRoots r = threefold_roots(b.p);
  EXPECT_NEAR(r.re[0], -1, 1e-10);
  EXPECT_NEAR(r.re[1], 0, 1e-10);
  EXPECT_NEAR(r.re[2], 2, 1e-10);
}

TEST(Threefold, ValidityMatchesInterlacing) {
  EXPECT_EQ(validity_iff_interlaced(ThreefoldParams{q("1"), q("0"), q("1/6"), q("0")}),
            std::make_pair(false, false));
  EXPECT_EQ(validity_iff_interlaced(ThreefoldParams{q("1"), q("0"), q("2"), q("0")}), std::make_pair(true, true));
  gen::Rng rng(17);
  for (int i = 0; i < 1000; ++i) {
    ThreefoldParams p{gen::rational_in(rng, 0, 3, 16), gen::rational_in(rng, -2, 2, 8),
                      gen::rational_in(rng, -1, 4, 16), gen::rational_in(rng, -2, 2, 16)};
    if (p.alpha == 0) continue;
    auto [valid, interlaced] = validity_iff_interlaced(p);
    EXPECT_EQ(valid, interlaced) << to_string(p.alpha) << " " << to_string(p.a) << " " << to_string(p.b);
  }
}

TEST(Abelian, TwistExample) {
  NSLattice L(QMatrix::from_rows({qv({"2"})}));
  NSVector v{1, qv({"0"}), 0};
  NSVector w = ab_twist(L, v, qv({"1"}));
  EXPECT_EQ(w, (NSVector{1, qv({"1"}), 1}));
}

TEST(Abelian, Identities) {
  NSLattice L(QMatrix::from_rows({qv({"0", "1"}), qv({"1", "0"})}));
  gen::Rng rng(29);
  for (int i = 0; i < 200; ++i) {
    NSVector v{gen::rational_in(rng, -3, 3, 4), {gen::rational_in(rng, -3, 3, 4), gen::rational_in(rng, -3, 3, 4)},
               gen::rational_in(rng, -3, 3, 4)};
    RationalVec G1 = {gen::rational_in(rng, -2, 2, 3), gen::rational_in(rng, -2, 2, 3)};
    RationalVec G2 = {gen::rational_in(rng, -2, 2, 3), gen::rational_in(rng, -2, 2, 3)};
    NSVector w = ab_twist(L, v, G1);
    EXPECT_EQ(ab_delta(L, w), ab_delta(L, v));
    RationalVec G12 = {G1[0] + G2[0], G1[1] + G2[1]};
    EXPECT_EQ(ab_twist(L, w, G2), ab_twist(L, v, G12));
    Rational g2 = L.dot(G1, G1), dv = ab_delta(L, v), r2 = v.r * v.r;
    Rational cross = ab_delta(L, v, w);
    EXPECT_EQ(dv * ab_delta(L, w) - cross * cross, r2 * g2 * (dv - r2 * g2 / 4));
  }
}
