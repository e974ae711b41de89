#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bstab/charge.hpp"

namespace bstab {

struct LocusPoint {
  double c1 = 0, c2 = 0;     ///< plot coordinates
  double residual = 0;       ///< max relative kernel residual
  std::vector<double> t;     ///< parameters t_1 < ... < t_n
};

/// A wall or kernel locus in one of the two plot coordinate systems.
struct WallLocus {
  std::string coord1, coord2;
  std::string description;
  /// Implicit line a p + b q + c = 0 (surface loci only).
  std::optional<std::array<Rational, 3>> line;
  /// Connected sampled branches, each ordered along the curve.
  std::vector<std::vector<LocusPoint>> branches;
  int codim = 1;  ///< codimension in parameter space
  bool scattered = false;  ///< unordered point sample (region or grid hits) rather than curves
  bool empty() const;
  std::size_t size() const;
};

struct Viewport {
  double xmin = -6, xmax = 6, ymin = -6, ymax = 6;
};

/// Relative residual |B_t(v)| / (|v|_inf |gamma|_inf) in binary64.
double kernel_residual(const std::vector<double>& t, bool infinite_last, const LatticeVector& v);

/// Sb_v for ambient 2: q v_0/2 - p v_1/2 + v_2 = 0 in (p, q) = (t_1 + t_2, t_1 t_2), kept where q < p^2/4.
WallLocus sb_v_surface(const LatticeVector& v, const Viewport& view = {}, int samples = 401);

struct HilbBounds {
  long long N = 0, M = 0;
};
/// N smallest with (N+1)(N+2)(N+3) > 6m; M largest with M^2 (M-4) < 6m and M <= m + 2.
HilbBounds hilb_bounds(long long m);

/// {t_1 < t_2 < t_3 < 0, t_1 t_2 t_3 = -6m} in (X, Y) = (-sum t, sum t_i t_j).
/// Comes from B_t(1, 0, 0, -m) = -m - t_1 t_2 t_3 / 6 exactly: the normalizer leaves constant 1.
WallLocus hilb_locus(long long m, const Viewport& view, int samples = 200);
/// (2u + 6m/u^2, u^2 + 12m/u), the double-root edge; u sampled in [u_lo, u_hi].
WallLocus hilb_boundary(long long m, double u_lo, double u_hi, int samples = 400);
/// Relative discriminant of x^3 + X x^2 + Y x + 6m.
double cubic_discriminant_residual(long long m, double X, double Y);

/// t_1 = -M: Y = M X - M^2 + 6m/M, t_2 in (-M, -sqrt(6m/M)).
WallLocus hilb_red_line(long long m, long long M, int samples = 200);
/// t_3 = -N: Y = N X - N^2 + 6m/N, t_2 in (-sqrt(6m/N), -N).
WallLocus hilb_green_line(long long m, long long N, int samples = 200);

struct WallGrid {
  double lo = -8, hi = 0;  ///< box for every finite parameter
  int cells = 400;
  double tol = 1e-12;
};

/// {t in box : B_t(v) = B_t(w) = 0} for ambient 2 (exact) or 3 (grid + refinement).
WallLocus numerical_wall(const LatticeVector& v, const LatticeVector& w, const WallGrid& grid = {});

}  // namespace bstab
