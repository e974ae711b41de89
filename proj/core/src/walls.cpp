#include "bstab/walls.hpp"

#include <algorithm>
#include <cmath>

#include "bstab/errors.hpp"
#include "bstab/linalg.hpp"

namespace bstab {

bool WallLocus::empty() const { return size() == 0; }

std::size_t WallLocus::size() const {
  std::size_t n = 0;
  for (const auto& b : branches) n += b.size();
  return n;
}

namespace {

std::vector<double> doubles_of(const LatticeVector& v) {
  std::vector<double> out;
  for (const auto& x : v.coords) out.push_back(to_double(x));
  return out;
}

double charge_value(const std::vector<double>& t, const std::vector<double>& v, double* scale) {
  std::vector<double> w = charge_weights_double(t, false);
  double s = 0, a = 0;
  for (std::size_t k = 0; k < w.size(); ++k) {
    s += w[k] * v[k];
    a += std::fabs(w[k] * v[k]);
  }
  if (scale) *scale = a;
  return s;
}

}  // namespace

double kernel_residual(const std::vector<double>& t, bool infinite_last, const LatticeVector& v) {
  std::vector<double> w = charge_weights_double(t, infinite_last);
  if (w.size() != v.coords.size()) throw Error(ErrorKind::AmbientMismatch, "tuple and character ambients differ");
  double s = 0, a = 0;
  for (std::size_t k = 0; k < w.size(); ++k) {
    double x = w[k] * to_double(v.coords[k]);
    s += x;
    a += std::fabs(x);
  }
  return a > 0 ? std::fabs(s) / a : 0.0;
}

WallLocus sb_v_surface(const LatticeVector& v, const Viewport& view, int samples) {
  if (v.ambient() != 2) throw Error(ErrorKind::AmbientMismatch, "sb_v_surface needs ambient 2");
  WallLocus L;
  L.coord1 = "p";
  L.coord2 = "q";
  const auto& c = v.coords;
  L.line = std::array<Rational, 3>{-c[1] / 2, c[0] / 2, c[2]};
  L.description = "q*v0/2 - p*v1/2 + v2 = 0, q < p^2/4";
  const double a = to_double((*L.line)[0]), b = to_double((*L.line)[1]), k = to_double((*L.line)[2]);
  if (a == 0 && b == 0) return L;
  samples = std::max(samples, 2);
  std::vector<LocusPoint> cur;
  auto flush = [&] {
    if (!cur.empty()) L.branches.push_back(std::move(cur));
    cur.clear();
  };
  for (int i = 0; i < samples; ++i) {
    double p, q;
    if (b != 0) {
      p = view.xmin + (view.xmax - view.xmin) * i / (samples - 1);
      q = -(a * p + k) / b;
    } else {
      p = -k / a;
      q = view.ymin + (view.ymax - view.ymin) * i / (samples - 1);
    }
    double disc = p * p / 4 - q;
    if (!(disc > 0) || q < view.ymin || q > view.ymax) {
      flush();
      continue;
    }
    double r = std::sqrt(disc);
    LocusPoint pt;
    pt.c1 = p;
    pt.c2 = q;
    pt.t = {p / 2 - r, p / 2 + r};
    pt.residual = kernel_residual(pt.t, false, v);
    cur.push_back(std::move(pt));
  }
  flush();
  return L;
}

HilbBounds hilb_bounds(long long m) {
  if (m < 1) throw Error(ErrorKind::InvalidInput, "m must be positive");
  HilbBounds h;
  const __int128 six_m = static_cast<__int128>(6) * m;
  long long N = 1;
  while (static_cast<__int128>(N + 1) * (N + 2) * (N + 3) <= six_m) ++N;
  h.N = N;
  // M^2 (M - 4) is negative for M <= 3 and increasing from M = 4 on.
  long long M = 3;
  while (static_cast<__int128>(M + 1) * (M + 1) * (M + 1 - 4) < six_m) ++M;
  h.M = std::min(M, m + 2);
  return h;
}

namespace {

LocusPoint hilb_point(long long m, std::vector<double> t) {
  std::sort(t.begin(), t.end());
  LocusPoint pt;
  pt.c1 = -(t[0] + t[1] + t[2]);
  pt.c2 = t[0] * t[1] + t[0] * t[2] + t[1] * t[2];
  LatticeVector v{{Rational(1), Rational(0), Rational(0), Rational(static_cast<long>(-m))}};
  pt.residual = kernel_residual(t, false, v);
  pt.t = std::move(t);
  return pt;
}

}  // namespace

WallLocus hilb_locus(long long m, const Viewport& view, int samples) {
  WallLocus L;
  L.coord1 = "X";
  L.coord2 = "Y";
  L.description = "t1 t2 t3 = -6m, t1 < t2 < t3 < 0";
  L.scattered = true;
  samples = std::max(samples, 2);
  // t_1, t_2 range over [-X_max, 0) since X = -sum t bounds every |t_i|.
  const double span = std::max(view.xmax, 1.0);
  std::vector<LocusPoint> pts;
  for (int i = 1; i <= samples; ++i)
    for (int j = 1; j <= samples; ++j) {
      double t1 = -span * i / samples, t2 = -span * j / samples;
      if (!(t1 < t2)) continue;
      double t3 = -6.0 * static_cast<double>(m) / (t1 * t2);
      if (!(t2 < t3)) continue;
      LocusPoint p = hilb_point(m, {t1, t2, t3});
      if (p.c1 < view.xmin || p.c1 > view.xmax || p.c2 < view.ymin || p.c2 > view.ymax) continue;
      pts.push_back(std::move(p));
    }
  if (!pts.empty()) L.branches.push_back(std::move(pts));
  return L;
}

WallLocus hilb_boundary(long long m, double u_lo, double u_hi, int samples) {
  WallLocus L;
  L.coord1 = "X";
  L.coord2 = "Y";
  L.description = "(2u + 6m/u^2, u^2 + 12m/u), double root at -u";
  samples = std::max(samples, 2);
  u_lo = std::max(u_lo, 1e-6);
  std::vector<LocusPoint> pts;
  const double mm = static_cast<double>(m);
  for (int i = 0; i < samples; ++i) {
    double u = u_lo + (u_hi - u_lo) * i / (samples - 1);
    LocusPoint p = hilb_point(m, {-u, -u, -6 * mm / (u * u)});
    p.c1 = 2 * u + 6 * mm / (u * u);
    p.c2 = u * u + 12 * mm / u;
    p.residual = std::max(p.residual, cubic_discriminant_residual(m, p.c1, p.c2));
    pts.push_back(std::move(p));
  }
  L.branches.push_back(std::move(pts));
  return L;
}

double cubic_discriminant_residual(long long m, double X, double Y) {
  const long double a = X, b = Y, c = 6.0L * m;
  const long double terms[5] = {a * a * b * b, -4 * b * b * b, -4 * a * a * a * c, -27 * c * c, 18 * a * b * c};
  long double s = 0, t = 0;
  for (auto x : terms) {
    s += x;
    t += std::fabs(x);
  }
  return t > 0 ? static_cast<double>(std::fabs(s) / t) : 0.0;
}

WallLocus hilb_red_line(long long m, long long M, int samples) {
  WallLocus L;
  L.coord1 = "X";
  L.coord2 = "Y";
  L.description = "t1 = -M";
  const double mm = static_cast<double>(m), Md = static_cast<double>(M);
  const double lo = -Md, hi = -std::sqrt(6 * mm / Md);
  if (!(lo < hi)) return L;
  samples = std::max(samples, 3);
  std::vector<LocusPoint> pts;
  for (int i = 1; i < samples - 1; ++i) {
    double t2 = lo + (hi - lo) * i / (samples - 1);
    pts.push_back(hilb_point(m, {-Md, t2, 6 * mm / (Md * t2)}));
  }
  L.branches.push_back(std::move(pts));
  return L;
}

WallLocus hilb_green_line(long long m, long long N, int samples) {
  WallLocus L;
  L.coord1 = "X";
  L.coord2 = "Y";
  L.description = "t3 = -N";
  const double mm = static_cast<double>(m), Nd = static_cast<double>(N);
  const double lo = -std::sqrt(6 * mm / Nd), hi = -Nd;
  if (!(lo < hi)) return L;
  samples = std::max(samples, 3);
  std::vector<LocusPoint> pts;
  for (int i = 1; i < samples - 1; ++i) {
    double t2 = lo + (hi - lo) * i / (samples - 1);
    pts.push_back(hilb_point(m, {6 * mm / (Nd * t2), t2, -Nd}));
  }
  L.branches.push_back(std::move(pts));
  return L;
}

namespace {

struct Node {
  bool ok = false;
  double t3 = 0, g = 0;
};

// Solves B_t(v) = 0 for t3 (affine in t3) and evaluates B_t(w) there.
Node wall_node(double t1, double t2, const std::vector<double>& v, const std::vector<double>& w, const WallGrid& grid) {
  Node n;
  double f0 = charge_value({t1, t2, 0.0}, v, nullptr);
  double f1 = charge_value({t1, t2, 1.0}, v, nullptr);
  double slope = f1 - f0;
  if (!(std::fabs(slope) > 1e-300)) return n;
  n.t3 = -f0 / slope;
  if (!(t1 < t2 && t2 < n.t3 && n.t3 >= grid.lo && n.t3 <= grid.hi)) return n;
  n.g = charge_value({t1, t2, n.t3}, w, nullptr);
  n.ok = std::isfinite(n.g);
  return n;
}

}  // namespace

WallLocus numerical_wall(const LatticeVector& v, const LatticeVector& w, const WallGrid& grid) {
  if (v.ambient() != w.ambient()) throw Error(ErrorKind::AmbientMismatch, "characters have different ambients");
  if (rank(QMatrix::from_rows({v.coords, w.coords})) < 2)
    throw Error(ErrorKind::DependentCharacters, "v and w are linearly dependent");
  const int n = v.ambient();
  WallLocus L;
  if (n == 2) {
    L.coord1 = "p";
    L.coord2 = "q";
    L.codim = 2;
    L.description = "intersection of two surface wall lines, q < p^2/4";
    // q v0/2 - p v1/2 = -v2 and likewise for w.
    QMatrix a = QMatrix::from_rows({{-v.coords[1] / 2, v.coords[0] / 2}, {-w.coords[1] / 2, w.coords[0] / 2}});
    auto sol = solve_square(a, {-v.coords[2], -w.coords[2]});
    if (!sol) return L;
    double p = to_double((*sol)[0]), q = to_double((*sol)[1]);
    if ((*sol)[1] < (*sol)[0] * (*sol)[0] / 4) {
      double r = std::sqrt(p * p / 4 - q);
      LocusPoint pt;
      pt.c1 = p;
      pt.c2 = q;
      pt.t = {p / 2 - r, p / 2 + r};
      pt.residual = std::max(kernel_residual(pt.t, false, v), kernel_residual(pt.t, false, w));
      L.branches.push_back({pt});
    }
    return L;
  }
  if (n != 3) throw Error(ErrorKind::InvalidAmbient, "numerical_wall supports ambient 2 and 3");
  L.coord1 = "X";
  L.coord2 = "Y";
  L.codim = 2;
  L.scattered = true;
  L.description = "B_t(v) = B_t(w) = 0 by grid sign changes";
  const std::vector<double> vd = doubles_of(v), wd = doubles_of(w);
  const int c = std::max(grid.cells, 1);
  auto coord = [&](int i) { return grid.lo + (grid.hi - grid.lo) * i / c; };
  std::vector<LocusPoint> pts;
  auto refine = [&](double a1, double a2, double b1, double b2, double ga) {
    double lo = 0, hi = 1;
    Node mid;
    for (int it = 0; it < 200 && (hi - lo) * std::max(std::fabs(b1 - a1), std::fabs(b2 - a2)) > grid.tol; ++it) {
      double s = (lo + hi) / 2;
      mid = wall_node(a1 + s * (b1 - a1), a2 + s * (b2 - a2), vd, wd, grid);
      if (!mid.ok) return;
      if ((mid.g < 0) == (ga < 0)) lo = s;
      else hi = s;
    }
    double s = (lo + hi) / 2;
    double t1 = a1 + s * (b1 - a1), t2 = a2 + s * (b2 - a2);
    Node f = wall_node(t1, t2, vd, wd, grid);
    if (!f.ok) return;
    LocusPoint pt;
    pt.t = {t1, t2, f.t3};
    pt.c1 = -(t1 + t2 + f.t3);
    pt.c2 = t1 * t2 + t1 * f.t3 + t2 * f.t3;
    pt.residual = std::max(kernel_residual(pt.t, false, v), kernel_residual(pt.t, false, w));
    pts.push_back(std::move(pt));
  };
  std::vector<std::vector<Node>> nodes(static_cast<std::size_t>(c) + 1, std::vector<Node>(static_cast<std::size_t>(c) + 1));
  for (int i = 0; i <= c; ++i)
    for (int j = 0; j <= c; ++j) nodes[i][j] = wall_node(coord(i), coord(j), vd, wd, grid);
  for (int i = 0; i <= c; ++i)
    for (int j = 0; j <= c; ++j) {
      const Node& a = nodes[i][j];
      if (!a.ok) continue;
      if (a.g == 0) {
        refine(coord(i), coord(j), coord(i), coord(j), 1.0);
        continue;
      }
      if (j < c && nodes[i][j + 1].ok && (nodes[i][j + 1].g < 0) != (a.g < 0) && nodes[i][j + 1].g != 0)
        refine(coord(i), coord(j), coord(i), coord(j + 1), a.g);
      if (i < c && nodes[i + 1][j].ok && (nodes[i + 1][j].g < 0) != (a.g < 0) && nodes[i + 1][j].g != 0)
        refine(coord(i), coord(j), coord(i + 1), coord(j), a.g);
    }
  if (!pts.empty()) L.branches.push_back(std::move(pts));
  return L;
}

}  // namespace bstab
