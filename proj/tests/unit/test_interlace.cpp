#include <gtest/gtest.h>

#include <cmath>
#include <functional>

#include "bstab/errors.hpp"
#include "bstab/interlace.hpp"
#include "bstab_test/generators.hpp"
#include "bstab_test/oracles.hpp"
#include "test_helpers.hpp"

using namespace bstab;
using namespace bstab::unit;
namespace gen = bstab::testing;

namespace {

Polynomial P(std::initializer_list<const char*> c, int n) { return Polynomial(qp(c), n); }

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::InvalidInput;
}

}  // namespace

TEST(RootsToPoly, Examples) {
  EXPECT_EQ(roots_to_poly(RootTuple(qv({"0", "2"}), false)).poly(), qp({"0", "-2", "1"}));
  Polynomial f = roots_to_poly(RootTuple(qv({"1", "3"}), true));
  EXPECT_EQ(f.poly(), qp({"3", "-4", "1"}));
  EXPECT_EQ(f.ambient(), 3);
  EXPECT_EQ(roots_to_poly(RootTuple(qv({"-1", "0", "1"}), false)).poly(), qp({"0", "-1", "0", "1"}));
}

TEST(PolyToRoots, Examples) {
  EXPECT_EQ(poly_to_roots(P({"0", "-2", "1"}, 2)), RootTuple(qv({"0", "2"}), false));
  RootTuple t = poly_to_roots(P({"3", "-4", "1"}, 3));
  EXPECT_EQ(t, RootTuple(qv({"1", "3"}), true));
  EXPECT_TRUE(t.exact());
  EXPECT_EQ(kind_of([] { P({"1", "0", "1"}, 2); }), ErrorKind::ComplexRoots);
  EXPECT_EQ(kind_of([] { P({"1", "-2", "1"}, 2); }), ErrorKind::NotDistinctRoots);
  EXPECT_EQ(kind_of([] { P({"1", "1"}, 3); }), ErrorKind::DegenerateInput);
}

TEST(PolyToRoots, IrrationalRootsAreFlaggedInexact) {
  RootTuple t = poly_to_roots(P({"-2", "0", "1"}, 2));
  EXPECT_FALSE(t.exact());
  EXPECT_NEAR(t.at(1), std::sqrt(2.0), 1e-15);
}

// A nearby rational root must not capture a root it does not approximate.
TEST(PolyToRoots, SnapKeepsDistinctRoots) {
  RootTuple t = poly_to_roots(P({"0", "-2/5", "1"}, 2));  // x (x - 2/5)
  EXPECT_EQ(t, RootTuple(qv({"0", "2/5"}), false));
}

TEST(IsInterlaced, Examples) {
  EXPECT_TRUE(is_interlaced(P({"0", "-2", "1"}, 2), P({"3", "-4", "1"}, 2)));
  EXPECT_FALSE(is_interlaced(P({"0", "-1", "1"}, 2), P({"12", "-7", "1"}, 2)));
  EXPECT_TRUE(is_interlaced(P({"0", "-2", "1"}, 2), P({"-1", "1"}, 2)));
  EXPECT_EQ(kind_of([] { is_interlaced(P({"0", "-2", "1"}, 2), P({"0", "-4", "2"}, 2)); }), ErrorKind::DegenerateInput);
}

// The non-interlaced example has a pencil member with a double root at c = 17 - 12 sqrt(2).
TEST(IsInterlaced, DiscriminantWitness) {
  QPoly f = qp({"0", "-1", "1"}), g = qp({"12", "-7", "1"});
  auto disc = [&](double c) {
    auto v = (f + from_double(c) * g).to_doubles();
    return v[1] * v[1] - 4 * v[0] * v[2];
  };
  double c0 = 17 - 12 * std::sqrt(2.0);
  EXPECT_LT(disc(c0 - 1e-4) * disc(c0 + 1e-4), 0);
  EXPECT_FALSE(gen::pencil_oracle(f, g, 2).interlaced);
}

TEST(Sep, Examples) {
  EXPECT_DOUBLE_EQ(sep(roots_to_poly(RootTuple(qv({"0", "2", "5"}), false))), 2);
  EXPECT_EQ(sep(P({"-1", "1"}, 1)), kPlusInfinity);
  EXPECT_DOUBLE_EQ(sep(RootTuple(qv({"0", "1", "3"}), true)), 1);
}

TEST(SepPencil, DerivativeLineKeepsSep) {
  Polynomial f = roots_to_poly(RootTuple(qv({"0", "2", "4"}), false));
  Pencil l(f, Polynomial(f.poly().derivative(), 3));
  EXPECT_GE(sep_pencil(l).value, 2 - 1e-9);
}

TEST(PencilCanonical, Examples) {
  Pencil a(P({"0", "-2", "1"}, 2), P({"-1", "1"}, 2));
  EXPECT_EQ(pencil_canonical(a).poly(), qp({"-1", "1"}));
  Pencil b(P({"0", "-2", "1"}, 2), P({"3", "-4", "1"}, 2));
  EXPECT_EQ(pencil_canonical(b).poly(), qp({"-3/2", "1"}));
}

// x^3 - x and x^3 - 3x^2 + 2x share the roots 0 and 1, so they span no pencil in B_3.
TEST(PencilCanonical, SharedRootsAreRejected) {
  EXPECT_EQ(kind_of([] { Pencil(P({"0", "-1", "0", "1"}, 3), P({"0", "2", "-3", "1"}, 3)); }),
            ErrorKind::DegenerateInput);
  QPoly diff = qp({"0", "-1", "0", "1"}) - qp({"0", "2", "-3", "1"});
  EXPECT_EQ(diff.monic(), qp({"-1", "1"}) * qp({"0", "1"}));
}

TEST(PencilProject, Example) {
  Pencil l(P({"0", "-2", "1"}, 2), P({"-1", "1"}, 2));
  Pencil pi = pencil_project(l);
  EXPECT_EQ(pi.ambient(), 1);
  EXPECT_TRUE(same_line(pi, Pencil(P({"0", "-1"}, 1), P({"-1", "1"}, 1))));
  EXPECT_EQ(pencil_canonical(pi).poly(), qp({"1"}));
  for (const char* c : {"1", "-2", "5"}) EXPECT_TRUE(same_line(pencil_project(l, q(c)), pi)) << c;
  Pencil one(P({"0", "1"}, 1), P({"-1", "1"}, 1));
  EXPECT_EQ(kind_of([&] { pencil_project(one); }), ErrorKind::InvalidAmbient);
}

TEST(MemberWithRoot, Examples) {
  Pencil l(P({"0", "-2", "1"}, 2), P({"-1", "1"}, 2));
  EXPECT_EQ(member_with_root(l, 1).poly(), qp({"-1", "1"}));
  EXPECT_EQ(member_with_root(l, 0).poly(), qp({"0", "-2", "1"}));
  EXPECT_EQ(member_with_root(l, 3).poly(), qp({"3/2", "-7/2", "1"}));
}

TEST(ShiftPencil, Examples) {
  Polynomial f = roots_to_poly(RootTuple(qv({"0", "2", "4"}), false));
  EXPECT_GT(sep_pencil(shift_pencil(f, 1)).value, 1 - 1e-9);
  Polynomial g = roots_to_poly(RootTuple(qv({"0", "2"}), false));
  EXPECT_EQ(kind_of([&] { shift_pencil(g, 2); }), ErrorKind::SepTooSmall);
  Polynomial h = roots_to_poly(RootTuple(qv({"0", "3"}), false));
  Pencil l = shift_pencil(h, 1);
  EXPECT_EQ(l.gen_b().poly(), qp({"-2", "-1", "1"}));  // (x + 1)(x - 2)
  EXPECT_TRUE(gen::pencil_oracle(l.gen_a().poly(), l.gen_b().poly(), 2).interlaced);
}

TEST(StabilizingShift, Examples) {
  Polynomial f = P({"0", "-2", "1"}, 2), g = P({"3", "-4", "1"}, 2);
  ShiftResult r = stabilizing_shift(f, g, 0.5);
  EXPECT_GT(r.achieved_sep, 0.5);
  Pencil replay(Polynomial(f.poly(), 3), Polynomial(QPoly(RationalVec{r.N, 1}) * g.poly(), 3));
  EXPECT_GT(sep_pencil(replay).value, 0.5);
  double base = sep_pencil(Pencil(f, g)).value;
  EXPECT_EQ(kind_of([&] { stabilizing_shift(f, g, base + 0.1); }), ErrorKind::SepTooSmall);
}

TEST(Lhd, Orientation) {
  Polynomial f = P({"0", "-2", "1"}, 2);  // roots 0, 2
  // g = (x - 1)(x - 3) is negative at 2
  EXPECT_TRUE(lhd(f, P({"3", "-4", "1"}, 2)));
  EXPECT_FALSE(lhd(f, P({"-3", "4", "-1"}, 2)));
  // degree n-1: the sign of the leading coefficient decides
  Polynomial lin = P({"-1", "1"}, 2);
  EXPECT_TRUE(lhd(lin, P({"0", "2", "-1"}, 2)));
}

// Property: is_interlaced agrees with the brute-force pencil oracle on generated pairs.
TEST(IsInterlaced, PropertyMatchesOracle) {
  gen::Rng rng(3);
  int agree = 0;
  for (int it = 0; it < 60; ++it) {
    int n = static_cast<int>(gen::int_in(rng, 1, 4));
    auto [s, t] = gen::interlaced_tuples(rng, n, 0.3, 4);
    RootTuple u = gen::random_tuple(rng, n, 0.2, 4);
    Polynomial fs = roots_to_poly(s), ft = roots_to_poly(t), fu = roots_to_poly(u);
    ASSERT_TRUE(is_interlaced(fs, ft));
    ASSERT_TRUE(gen::pencil_oracle(fs.poly(), ft.poly(), n).interlaced);
    try {
      bool m = is_interlaced(fs, fu);
      EXPECT_EQ(m, gen::pencil_oracle(fs.poly(), fu.poly(), n).interlaced);
      ++agree;
    } catch (const Error&) {
      // dependent pair
    }
  }
  EXPECT_GT(agree, 40);
}

// Property: the pencil of f and f(x + m) keeps its separation above min(m, sep - m).
TEST(ShiftPencil, PropertySepBound) {
  gen::Rng rng(5);
  for (int it = 0; it < 40; ++it) {
    int n = static_cast<int>(gen::int_in(rng, 2, 4));
    RootTuple t = gen::random_tuple(rng, n, 0.0, 8);
    Polynomial f = roots_to_poly(t);
    double s = sep(f);
    Rational m = from_double(s) * ratio(gen::int_in(rng, 1, 9), 10);
    double bound = std::min(to_double(m), s - to_double(m));
    EXPECT_GT(sep_pencil(shift_pencil(f, m)).value, bound - 1e-9);
  }
}
