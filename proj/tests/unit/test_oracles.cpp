#include <gtest/gtest.h>

#include "bstab/charge.hpp"
#include "bstab_test/generators.hpp"
#include "bstab_test/oracles.hpp"
#include "test_helpers.hpp"

using namespace bstab;
using namespace bstab::unit;
namespace gen = bstab::testing;

// The oracles are independent code paths; these pin them on hand-checked inputs.

TEST(Oracles, FormalDiscriminant) {
  EXPECT_EQ(gen::formal_discriminant(qp({"-1", "0", "1"}), 2), 4);
  EXPECT_EQ(gen::formal_discriminant(qp({"1", "-2", "1"}), 2), 0);
  // b^2 - 4ac for 2x^2 + 3x - 1
  EXPECT_EQ(gen::formal_discriminant(qp({"-1", "3", "2"}), 2), 17);
  // x^3 - x: -4p^3 - 27q^2 with p = -1
  EXPECT_EQ(gen::formal_discriminant(qp({"0", "-1", "0", "1"}), 3), 4);
}

TEST(Oracles, PencilOracle) {
  // x(x - 2) and x - 1 interlace; x(x - 2) and x - 3 do not.
  auto good = gen::pencil_oracle(qp({"0", "-2", "1"}), qp({"-1", "1"}), 2, 64);
  EXPECT_TRUE(good.interlaced);
  EXPECT_TRUE(good.disc_clear);
  EXPECT_TRUE(good.samples_clear);
  auto bad = gen::pencil_oracle(qp({"0", "-2", "1"}), qp({"-3", "1"}), 2, 64);
  EXPECT_FALSE(bad.interlaced);
}

TEST(Oracles, HilbBrute) {
  EXPECT_EQ(gen::hilb_bounds_brute(1), std::make_pair(1LL, 3LL));
  EXPECT_EQ(gen::hilb_bounds_brute(4), std::make_pair(2LL, 4LL));
}

TEST(Oracles, SignScan) {
  RootTuple t(qv({"-1", "0", "2"}), false);
  LatticeVector ray = gamma(0, 3);
  EXPECT_TRUE(gen::sign_scan_coherent(ray, t, 5000));
  LatticeVector mixed = gamma(-1, 3);
  for (std::size_t k = 0; k < 4; ++k) mixed.coords[k] += gamma(0, 3).coords[k];
  EXPECT_FALSE(gen::sign_scan_coherent(mixed, t, 5000));
}

TEST(Generators, InterlacedTuplesInterlace) {
  gen::Rng rng(2);
  for (int i = 0; i < 200; ++i) {
    int n = static_cast<int>(gen::int_in(rng, 1, 5));
    auto [s, t] = gen::interlaced_tuples(rng, n);
    EXPECT_TRUE(precedes_interlaced(s, t));
  }
}
