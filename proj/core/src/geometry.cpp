#include "bstab/geometry.hpp"

#include <algorithm>
#include <cmath>

#include "bstab/errors.hpp"

namespace bstab {

namespace {

void need_ambient(const LatticeVector& v, int lo, int hi, const char* what) {
  if (v.ambient() < lo || v.ambient() > hi)
    throw Error(ErrorKind::AmbientMismatch, std::string(what) + ": unsupported ambient " + std::to_string(v.ambient()));
}

Rational rpow(const Rational& x, int k) {
  Rational r = 1;
  for (int i = 0; i < k; ++i) r *= x;
  return r;
}

}  // namespace

RationalVec twisted_functional(int n, const Rational& beta, int k) {
  if (k < 0 || k > n) throw Error(ErrorKind::IndexOutOfRange, "twist index " + std::to_string(k) + " outside 0.." + std::to_string(n));
  RationalVec w(static_cast<std::size_t>(n) + 1);
  for (int j = 0; j <= k; ++j) w[static_cast<std::size_t>(j)] = rpow(-beta, k - j) / factorial(static_cast<unsigned>(k - j));
  return w;
}

Rational twisted_chern(const LatticeVector& v, const Rational& beta, int k) {
  return dot(twisted_functional(v.ambient(), beta, k), v.coords);
}

double twisted_chern(const LatticeVector& v, double beta, int k) {
  const int n = v.ambient();
  if (k < 0 || k > n) throw Error(ErrorKind::IndexOutOfRange, "twist index " + std::to_string(k) + " outside 0.." + std::to_string(n));
  double s = 0, c = 1;
  for (int j = k; j >= 0; --j) {
    s += c * to_double(v.coords[static_cast<std::size_t>(j)]);
    c *= -beta / (k - j + 1);
  }
  return s;
}

Rational delta_H(const LatticeVector& v) {
  need_ambient(v, 2, 3, "delta_H");
  const auto& c = v.coords;
  return c[1] * c[1] - 2 * c[0] * c[2];
}

Rational nabla_beta(const LatticeVector& v, const Rational& beta) {
  need_ambient(v, 3, 3, "nabla_beta");
  Rational c1 = twisted_chern(v, beta, 1), c2 = twisted_chern(v, beta, 2), c3 = twisted_chern(v, beta, 3);
  return 4 * c2 * c2 - 6 * c1 * c3;
}

Rational q_K_beta(const LatticeVector& v, const Rational& K, const Rational& beta) {
  need_ambient(v, 3, 3, "q_K_beta");
  return K * delta_H(v) + nabla_beta(v, beta);
}

QMatrix delta_gram(int n) {
  if (n != 2 && n != 3) throw Error(ErrorKind::AmbientMismatch, "delta_gram: ambient must be 2 or 3");
  RationalVec e0(static_cast<std::size_t>(n) + 1), e1 = e0, e2 = e0;
  e0[0] = 1;
  e1[1] = 1;
  e2[2] = 1;
  QMatrix g = sym_product(e1, e1);
  QMatrix h = sym_product(e0, e2);
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) g(i, j) -= 2 * h(i, j);
  return g;
}

QMatrix nabla_gram(const Rational& beta) {
  RationalVec c1 = twisted_functional(3, beta, 1), c2 = twisted_functional(3, beta, 2), c3 = twisted_functional(3, beta, 3);
  QMatrix g = sym_product(c2, c2);
  QMatrix h = sym_product(c1, c3);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) g(i, j) = 4 * g(i, j) - 6 * h(i, j);
  return g;
}

FamilyReport family_equiv_check(const LatticeVector& v, const RootTuple& t,
                                std::optional<std::pair<Rational, Rational>> K_interval, std::optional<Rational> beta,
                                int grid) {
  need_ambient(v, 3, 3, "family_equiv_check");
  if (t.n() != 3 || t.infinite_last()) throw Error(ErrorKind::InvalidInput, "family_equiv_check needs a finite 3-tuple");
  Decomposition dec = decompose(v, t);
  const auto& f = t.finite();
  FamilyReport rep;
  rep.beta = beta ? *beta : f[1];
  if (K_interval) {
    rep.K_lo = K_interval->first;
    rep.K_hi = K_interval->second;
  } else {
    rep.K_lo = 0;
    rep.K_hi = -(f[0] - f[1]) * (f[2] - f[1]);
  }
  rep.grid = std::max(grid, 1);
  rep.verdict = dec.verdict;
  rep.boundary = dec.boundary;
  rep.all_K_nonneg = true;
  Rational d = delta_H(v), nb = nabla_beta(v, rep.beta);
  for (int i = 0; i <= rep.grid; ++i) {
    Rational K = rep.K_lo + (rep.K_hi - rep.K_lo) * ratio(i, rep.grid);
    if (sgn(K * d + nb) < 0) {
      rep.all_K_nonneg = false;
      rep.failing_K = K;
      break;
    }
  }
  rep.agree = rep.all_K_nonneg == (dec.verdict != SignVerdict::Mixed);
  return rep;
}

bool ThreefoldParams::valid() const {
  if (sgn(alpha) <= 0) return false;
  return a > alpha * alpha / 6 + abs(b) * alpha / 2;
}

CentralCharge threefold_charge(const ThreefoldParams& p) {
  if (!p.valid()) throw Error(ErrorKind::InvalidParams, "need alpha > 0 and a > alpha^2/6 + |b| alpha/2");
  RationalVec c0 = twisted_functional(3, p.beta, 0), c1 = twisted_functional(3, p.beta, 1),
              c2 = twisted_functional(3, p.beta, 2), c3 = twisted_functional(3, p.beta, 3);
  CentralCharge z;
  z.re.weights.resize(4);
  z.im.weights.resize(4);
  for (std::size_t k = 0; k < 4; ++k) {
    z.re.weights[k] = -c3[k] + p.b * c2[k] + p.a * c1[k];
    z.im.weights[k] = c2[k] - p.alpha * p.alpha / 2 * c0[k];
  }
  return z;
}

ThreefoldRoots threefold_roots(const ThreefoldParams& p) {
  const double a = to_double(p.a), b = to_double(p.b), al = to_double(p.alpha), be = to_double(p.beta);
  const double disc = 9 * b * b + 24 * a;
  if (!(disc > 0)) throw Error(ErrorKind::InvalidParams, "real part has no three distinct real roots");
  const double s = std::sqrt(disc);
  ThreefoldRoots r;
  r.re = {be + (3 * b - s) / 2, be, be + (3 * b + s) / 2};
  r.im = {be - al, be + al};
  return r;
}

PartialParams params_from_tuples(const RootTuple& t) {
  const auto& f = t.finite();
  PartialParams out;
  if (f.size() == 2) {
    out.p.alpha = (f[1] - f[0]) / 2;
    out.p.beta = (f[0] + f[1]) / 2;
    out.p.b = 0;
    out.p.a = out.p.alpha * out.p.alpha / 2;
    out.ab_defaulted = true;
  } else if (f.size() == 3) {
    out.p.beta = f[1];
    out.p.b = (f[0] + f[2] - 2 * f[1]) / 3;
    out.p.a = ((f[2] - f[0]) * (f[2] - f[0]) - 9 * out.p.b * out.p.b) / 24;
    Rational g1 = f[1] - f[0], g2 = f[2] - f[1];
    out.p.alpha = (g1 < g2 ? g1 : g2) / 2;
    out.alpha_defaulted = true;
  } else {
    throw Error(ErrorKind::InvalidInput, "params_from_tuples needs 2 or 3 finite entries");
  }
  return out;
}

std::pair<bool, bool> validity_iff_interlaced(const ThreefoldParams& p) {
  if (sgn(p.alpha) <= 0) throw Error(ErrorKind::InvalidParams, "alpha must be positive");
  bool valid = p.valid();
  bool inter = false;
  // Kernel tuples of both parts, computed from the charge weights by the general root machinery.
  RationalVec c0 = twisted_functional(3, p.beta, 0), c1 = twisted_functional(3, p.beta, 1),
              c2 = twisted_functional(3, p.beta, 2), c3 = twisted_functional(3, p.beta, 3);
  ReducedCharge re, im;
  re.weights.resize(4);
  im.weights.resize(4);
  for (std::size_t k = 0; k < 4; ++k) {
    re.weights[k] = -c3[k] + p.b * c2[k] + p.a * c1[k];
    im.weights[k] = c2[k] - p.alpha * p.alpha / 2 * c0[k];
  }
  try {
    Polynomial fr(poly_of_charge(re), 3);
    Polynomial fi(poly_of_charge(im), 3);
    inter = precedes_interlaced(fr.roots(), fi.roots());
  } catch (const Error&) {
    inter = false;
  }
  return {valid, inter};
}

NSLattice::NSLattice(QMatrix gram) : g_(std::move(gram)) {
  if (g_.rows() == 0 || g_.rows() != g_.cols() || !g_.is_symmetric())
    throw Error(ErrorKind::InvalidInput, "NS intersection form must be a nonempty symmetric matrix");
  Inertia in = inertia(g_);
  if (in.positive != 1 || in.zero != 0)
    throw Error(ErrorKind::WrongSignature, "NS intersection form must have signature (1, rho-1)");
}

Rational NSLattice::dot(const RationalVec& a, const RationalVec& b) const {
  if (a.size() != rank() || b.size() != rank()) throw Error(ErrorKind::LatticeMismatch, "divisor size differs from NS rank");
  return bstab::dot(a, g_ * b);
}

Rational ab_delta(const NSLattice& L, const NSVector& v, const NSVector& w) {
  return L.dot(v.D, w.D) - v.r * w.s - w.r * v.s;
}

Rational ab_delta(const NSLattice& L, const NSVector& v) { return ab_delta(L, v, v); }

NSVector ab_twist(const NSLattice& L, const NSVector& v, const RationalVec& G) {
  NSVector out;
  out.r = v.r;
  out.D = v.D;
  if (G.size() != v.D.size()) throw Error(ErrorKind::LatticeMismatch, "twist divisor size differs from NS rank");
  for (std::size_t i = 0; i < G.size(); ++i) out.D[i] += v.r * G[i];
  out.s = v.s + L.dot(v.D, G) + v.r * L.dot(G, G) / 2;
  return out;
}

bool criterion_neg_def(const NSLattice& L, const NSVector& v, const NSVector& w) {
  Rational x = ab_delta(L, v, w);
  return x * x < ab_delta(L, v) * ab_delta(L, w);
}

bool criterion_bayer_step(const NSLattice& L, const NSVector& v, const RationalVec& G) {
  Rational x = v.r * v.r * L.dot(G, G);
  return sgn(x) > 0 && x < 4 * ab_delta(L, v);
}

RestrictCriterion criterion_restrict(const NSLattice& L, const NSVector& v, const NSVector& w, const RationalVec& H) {
  if (v.r != 1 || sgn(w.r) != 0) throw Error(ErrorKind::InvalidInput, "criterion_restrict needs v = (1, D1, s1), w = (0, D2, s2)");
  Rational d1 = L.dot(v.D, v.D) - 2 * v.s;
  Rational d2 = L.dot(w.D, w.D);
  Rational x = L.dot(v.D, w.D) - w.s;
  RestrictCriterion c;
  c.setup = sgn(d1) > 0 && sgn(d2) > 0 && x * x < d1 * d2;
  c.restricts = d2 * L.dot(H, H) + x * x < d1 * d2;
  return c;
}

}  // namespace bstab
