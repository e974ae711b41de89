#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <functional>

#include "bstab/errors.hpp"
#include "bstab/plot.hpp"
#include "bstab/walls.hpp"
#include "bstab_test/oracles.hpp"
#include "test_helpers.hpp"

using namespace bstab;
using namespace bstab::unit;
namespace gen = bstab::testing;

namespace {

LatticeVector V(std::initializer_list<const char*> xs) { return LatticeVector{qv(xs)}; }

std::array<Rational, 3> L3(const char* a, const char* b, const char* c) { return {q(a), q(b), q(c)}; }

}  // namespace

TEST(SurfaceLocus, Lines) {
  WallLocus a = sb_v_surface(V({"1", "0", "-1"}));
  ASSERT_TRUE(a.line.has_value());
  EXPECT_EQ(*a.line, L3("0", "1/2", "-1"));
  for (const auto& br : a.branches)
    for (const auto& p : br) {
      EXPECT_NEAR(p.c2, 2, 1e-12);
      EXPECT_LT(p.c2, p.c1 * p.c1 / 4);
    }

  WallLocus b = sb_v_surface(V({"1", "-1", "1/2"}));
  EXPECT_EQ(*b.line, L3("1/2", "1/2", "1/2"));
  EXPECT_FALSE(b.empty());
  for (const auto& br : b.branches)
    for (const auto& p : br) {
      EXPECT_NEAR(p.c2, -1 - p.c1, 1e-12);
      EXPECT_LT(p.residual, 1e-10);
    }

  EXPECT_THROW(sb_v_surface(V({"1", "0", "0", "0"})), Error);
}

TEST(HilbBounds, Examples) {
  EXPECT_EQ(hilb_bounds(1).N, 1);
  EXPECT_EQ(hilb_bounds(1).M, 3);
  EXPECT_EQ(hilb_bounds(4).N, 2);
  EXPECT_EQ(hilb_bounds(4).M, 4);
  for (long long m = 1; m <= 300; ++m) {
    auto [n, mm] = gen::hilb_bounds_brute(m);
    EXPECT_EQ(hilb_bounds(m).N, n) << m;
    EXPECT_EQ(hilb_bounds(m).M, mm) << m;
  }
}

TEST(HilbLocus, BoundaryAndInterior) {
  WallLocus b = hilb_boundary(1, 1, 2, 5);
  ASSERT_FALSE(b.empty());
  const LocusPoint& p0 = b.branches.front().front();
  EXPECT_NEAR(p0.c1, 8, 1e-12);
  EXPECT_NEAR(p0.c2, 13, 1e-12);
  for (const auto& br : b.branches)
    for (const auto& p : br) EXPECT_LT(cubic_discriminant_residual(1, p.c1, p.c2), 1e-9);

  LatticeVector v = V({"1", "0", "0", "-2"});
  WallLocus l = hilb_locus(2, Viewport{4, 14, 5, 35}, 50);
  ASSERT_FALSE(l.empty());
  for (const auto& br : l.branches)
    for (const auto& p : br) {
      ASSERT_EQ(p.t.size(), 3u);
      EXPECT_LT(p.t[0], p.t[1]);
      EXPECT_LT(p.t[1], p.t[2]);
      EXPECT_LT(p.t[2], 0);
      EXPECT_LT(kernel_residual(p.t, false, v), 1e-12);
    }
}

TEST(NumericalWall, Surface) {
  EXPECT_THROW(numerical_wall(V({"1", "0", "-1"}), V({"2", "0", "-2"})), Error);
  try {
    numerical_wall(V({"1", "0", "-1"}), V({"1", "0", "-1"}));
    ADD_FAILURE() << "no error thrown";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DependentCharacters);
  }
  // p = 0, q = 2 lies above the parabola.
  EXPECT_TRUE(numerical_wall(V({"1", "0", "-1"}), V({"0", "1", "0"})).empty());

  WallLocus w = numerical_wall(V({"1", "0", "-1"}), V({"1", "-1", "1/2"}));
  ASSERT_EQ(w.size(), 1u);
  const LocusPoint& p = w.branches[0][0];
  EXPECT_NEAR(p.c1, -3, 1e-12);
  EXPECT_NEAR(p.c2, 2, 1e-12);
  EXPECT_NEAR(p.t[0], -2, 1e-12);
  EXPECT_NEAR(p.t[1], -1, 1e-12);
}

TEST(NumericalWall, ProjectiveSpace) {
  LatticeVector v = V({"1", "0", "0", "-1"}), w = V({"0", "0", "1", "-3"});
  WallGrid g;
  g.cells = 120;
  WallLocus L = numerical_wall(v, w, g);
  ASSERT_FALSE(L.empty());
  for (const auto& br : L.branches)
    for (const auto& p : br) {
      EXPECT_LT(kernel_residual(p.t, false, v), 1e-10);
      EXPECT_LT(kernel_residual(p.t, false, w), 1e-10);
    }
}

TEST(Plot, EmptyLocusIsFlagged) {
  PlotDoc doc;
  doc.title = "empty";
  PlotLayer layer;
  layer.name = "nothing";
  layer.color = "black";
  doc.layers.push_back(layer);
  EXPECT_TRUE(doc.empty_locus());
  std::string svg = emit_svg(doc);
  EXPECT_NE(svg.find("\"EmptyLocus\""), std::string::npos);
  EXPECT_NE(svg.find("</svg>"), std::string::npos);
  EXPECT_EQ(emit_csv(doc).rfind("coord1,coord2,residual", 0), 0u);
}

TEST(Plot, FiguresAreDeterministic) {
  EXPECT_EQ(emit_svg(figure1()), emit_svg(figure1()));
  EXPECT_EQ(emit_csv(figure4(1)), emit_csv(figure4(1)));
  EXPECT_FALSE(figure1().empty_locus());
  EXPECT_FALSE(figure4(1).empty_locus());
}
