#include "bstab/interlace.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "bstab/errors.hpp"
#include "bstab/linalg.hpp"

namespace bstab {

// ---- RootTuple -------------------------------------------------------------

RootTuple::RootTuple(RationalVec finite, bool infinite_last, bool exact)
    : finite_(std::move(finite)), inf_(infinite_last), exact_(exact) {
  if (n() == 0) throw Error(ErrorKind::InvalidAmbient, "root tuple needs n >= 1");
  for (std::size_t i = 1; i < finite_.size(); ++i)
    if (!(finite_[i - 1] < finite_[i]))
      throw Error(ErrorKind::InvalidInput, "root tuple entries must be strictly increasing");
}

RootTuple RootTuple::from_doubles(const std::vector<double>& finite, bool infinite_last) {
  RationalVec q;
  q.reserve(finite.size());
  for (double x : finite) q.push_back(from_double(x));
  return RootTuple(std::move(q), infinite_last, false);
}

double RootTuple::at(std::size_t i) const {
  if (i < finite_.size()) return finite_[i].get_d();
  return kPlusInfinity;
}

std::vector<double> RootTuple::doubles() const {
  std::vector<double> out;
  for (std::size_t i = 0; i < n(); ++i) out.push_back(at(i));
  return out;
}

RootTuple RootTuple::rounded(unsigned bits) const {
  RationalVec q;
  for (const auto& x : finite_) q.push_back(bstab::rounded(x, bits));
  return RootTuple(std::move(q), inf_, exact_);
}

namespace {

// Extended comparison a < b where index past the finite range means +inf.
bool ext_less(const RootTuple& s, std::size_t i, const RootTuple& t, std::size_t j) {
  bool s_inf = i >= s.finite().size();
  bool t_inf = j >= t.finite().size();
  if (s_inf) return false;
  if (t_inf) return true;
  return s.finite()[i] < t.finite()[j];
}

}  // namespace

bool precedes_interlaced(const RootTuple& s, const RootTuple& t) {
  if (s.n() != t.n()) return false;
  for (std::size_t i = 0; i < s.n(); ++i) {
    if (!ext_less(s, i, t, i)) return false;
    if (i + 1 < s.n() && !ext_less(t, i, s, i + 1)) return false;
  }
  return true;
}

bool tuples_interlaced(const RootTuple& s, const RootTuple& t) {
  return precedes_interlaced(s, t) || precedes_interlaced(t, s);
}

double sep(const RootTuple& t) {
  const auto& f = t.finite();
  if (f.size() < 2) return kPlusInfinity;
  Rational best = f[1] - f[0];
  for (std::size_t i = 2; i < f.size(); ++i) best = std::min<Rational>(best, f[i] - f[i - 1]);
  return best.get_d();
}

// ---- Polynomial ------------------------------------------------------------

namespace {

// Small-denominator rational near x that is an exact root of p, if any.
std::optional<Rational> snap_root(const QPoly& p, double x) {
  if (!std::isfinite(x)) return std::nullopt;
  // Continued-fraction convergents of x.
  long double r = x;
  mpz_class h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  for (int it = 0; it < 24; ++it) {
    long double a = std::floor(r);
    if (std::fabs(a) > 1e15L) break;
    mpz_class ai(static_cast<double>(a));
    mpz_class h2 = ai * h1 + h0, k2 = ai * k1 + k0;
    h0 = h1; h1 = h2; k0 = k1; k1 = k2;
    if (k1 > 1000000) break;
    Rational q(h1, k1);
    q.canonicalize();
    // An early convergent may hit a different root of p, so it must also be close to x.
    if (std::fabs(q.get_d() - x) <= 1e-9 * std::max(1.0, std::fabs(x)) && sgn(p(q)) == 0) return q;
    long double frac = r - a;
    if (frac < 1e-18L) break;
    r = 1 / frac;
  }
  return std::nullopt;
}

}  // namespace

Polynomial::Polynomial(QPoly p, int ambient, const RootOptions& opt) : p_(std::move(p)), n_(ambient) {
  if (n_ < 1) throw Error(ErrorKind::InvalidAmbient, "ambient degree must be >= 1");
  int d = p_.degree();
  if (d != n_ && d != n_ - 1)
    throw Error(ErrorKind::DegenerateInput, "degree must be n or n-1 for membership in B_n");
  if (d >= 1) {
    if (QPoly::gcd(p_, p_.derivative()).degree() > 0)
      throw Error(ErrorKind::NotDistinctRoots, "polynomial has a repeated root");
    if (p_.count_real_roots() != d) throw Error(ErrorKind::ComplexRoots, "polynomial has non-real roots");
  }
  std::vector<double> r = d >= 1 ? real_roots(p_.to_doubles(), opt) : std::vector<double>{};
  RationalVec exact;
  bool all_exact = true;
  for (double x : r) {
    auto q = snap_root(p_, x);
    if (!q) { all_exact = false; break; }
    exact.push_back(*q);
  }
  if (all_exact) {
    std::sort(exact.begin(), exact.end());
    roots_ = RootTuple(exact, d == n_ - 1, true);
  } else {
    roots_ = RootTuple::from_doubles(r, d == n_ - 1);
  }
}

Polynomial roots_to_poly(const RootTuple& t) {
  Polynomial f;
  f.p_ = QPoly::from_roots(t.finite());
  f.n_ = static_cast<int>(t.n());
  f.roots_ = t;
  return f;
}

RootTuple poly_to_roots(const Polynomial& f) { return f.roots(); }

bool is_interlaced(const Polynomial& f, const Polynomial& g) {
  if (f.ambient() != g.ambient()) throw Error(ErrorKind::AmbientMismatch, "polynomials live in different B_n");
  QMatrix m = QMatrix::from_rows({RationalVec(static_cast<std::size_t>(f.ambient()) + 1),
                                  RationalVec(static_cast<std::size_t>(f.ambient()) + 1)});
  for (int k = 0; k <= f.ambient(); ++k) {
    m(0, static_cast<std::size_t>(k)) = f.poly().coeff(k);
    m(1, static_cast<std::size_t>(k)) = g.poly().coeff(k);
  }
  if (rank(m) < 2) throw Error(ErrorKind::DegenerateInput, "polynomials are linearly dependent");
  const RootTuple& s = f.roots();
  const RootTuple& t = g.roots();
  if (s.exact() && t.exact()) return tuples_interlaced(s, t);
  // A shared root can look interlaced under rounding; settle it exactly.
  if (QPoly::gcd(f.poly(), g.poly()).degree() > 0) return false;
  return tuples_interlaced(s, t);
}

bool lhd(const Polynomial& f, const Polynomial& g) {
  if (!is_interlaced(f, g)) return false;
  if (f.degree() == f.ambient() - 1) return sgn(g.poly().leading()) < 0;
  const auto& r = f.roots().finite();
  const Rational& top = r.back();
  if (f.roots().exact()) return sgn(g.poly()(top)) < 0;
  return g.poly().eval(static_cast<long double>(top.get_d())) < 0;
}

double sep(const Polynomial& f) { return sep(f.roots()); }

// ---- Pencil ----------------------------------------------------------------

namespace {

std::vector<double> unit_scaled(const QPoly& p, int n) {
  std::vector<double> c(static_cast<std::size_t>(n) + 1, 0.0);
  double mx = 0;
  for (int k = 0; k <= p.degree(); ++k) {
    c[static_cast<std::size_t>(k)] = p.coeff(k).get_d();
    mx = std::max(mx, std::fabs(c[static_cast<std::size_t>(k)]));
  }
  for (auto& x : c) x /= mx;
  return c;
}

}  // namespace

Pencil::Pencil(Polynomial a, Polynomial b) : a_(std::move(a)), b_(std::move(b)) {
  if (a_.ambient() != b_.ambient()) throw Error(ErrorKind::AmbientMismatch, "pencil generators in different B_n");
  if (!is_interlaced(a_, b_)) throw Error(ErrorKind::DegenerateInput, "pencil generators are not interlaced");
  da_ = unit_scaled(a_.poly(), ambient());
  db_ = unit_scaled(b_.poly(), ambient());
}

QPoly Pencil::member(const Rational& a, const Rational& b) const { return a * a_.poly() + b * b_.poly(); }

std::vector<double> Pencil::member_at(double theta) const {
  double c = std::cos(theta), s = std::sin(theta);
  std::vector<double> m(da_.size());
  for (std::size_t k = 0; k < m.size(); ++k) m[k] = c * da_[k] + s * db_[k];
  return m;
}

double sep_of_coeffs(const std::vector<double>& coeffs) {
  std::vector<double> c = coeffs;
  double mx = 0;
  for (double x : c) mx = std::max(mx, std::fabs(x));
  if (mx == 0) return 0;
  while (!c.empty() && std::fabs(c.back()) <= 1e-13 * mx) c.pop_back();
  std::vector<double> r;
  if (!try_real_roots(c, r)) return 0;
  double best = kPlusInfinity;
  for (std::size_t i = 1; i < r.size(); ++i) best = std::min(best, r[i] - r[i - 1]);
  return best;
}

SepResult sep_pencil(const Pencil& l, const SepOptions& opt) {
  const int k = std::max(opt.angles, 8);
  const double step = M_PI / k;
  auto eval = [&](double th) { return sep_of_coeffs(l.member_at(th)); };
  SepResult res;
  int best_k = 0;
  for (int i = 0; i < k; ++i) {
    double v = eval(i * step);
    if (v < res.value) {
      res.value = v;
      res.theta = i * step;
      best_k = i;
    }
  }
  // The degree-dropping member is a distinguished point; include it exactly.
  {
    Polynomial fl = pencil_canonical(l);
    double v = sep(fl);
    if (v < res.value) {
      res.value = v;
      // angle is not needed downstream for this member
    }
  }
  // Golden-section refinement on the bracket around the best sample.
  double lo = (best_k - 1) * step, hi = (best_k + 1) * step;
  const double g = (std::sqrt(5.0) - 1) / 2;
  double x1 = hi - g * (hi - lo), x2 = lo + g * (hi - lo);
  double f1 = eval(x1), f2 = eval(x2);
  while (hi - lo > opt.refine_tol) {
    if (f1 <= f2) {
      hi = x2; x2 = x1; f2 = f1;
      x1 = hi - g * (hi - lo); f1 = eval(x1);
    } else {
      lo = x1; x1 = x2; f1 = f2;
      x2 = lo + g * (hi - lo); f2 = eval(x2);
    }
    if (f1 < res.value) { res.value = f1; res.theta = x1; }
    if (f2 < res.value) { res.value = f2; res.theta = x2; }
  }
  res.certified = false;
  return res;
}

Polynomial pencil_canonical(const Pencil& l) {
  const int n = l.ambient();
  const QPoly& a = l.gen_a().poly();
  const QPoly& b = l.gen_b().poly();
  Rational an = a.coeff(n), bn = b.coeff(n);
  QPoly m = sgn(an) == 0 ? a : (sgn(bn) == 0 ? b : bn * a - an * b);
  if (m.degree() != n - 1) throw Error(ErrorKind::DegenerateInput, "pencil has no degree n-1 member");
  return Polynomial(m.monic(), n);
}

Pencil pencil_project(const Pencil& l, const Rational& c) {
  const int n = l.ambient();
  if (n < 2) throw Error(ErrorKind::InvalidAmbient, "pencil_project needs ambient n >= 2");
  Polynomial fl = pencil_canonical(l);
  const QPoly& a = l.gen_a().poly();
  const QPoly& b = l.gen_b().poly();
  QPoly f = sgn(a.coeff(n)) != 0 ? a * (1 / a.coeff(n)) : b * (1 / b.coeff(n));
  f += c * fl.poly();
  QPoly p = f - QPoly::x() * fl.poly();
  return Pencil(Polynomial(p, n - 1), Polynomial(fl.poly(), n - 1));
}

bool same_line(const Pencil& x, const Pencil& y) {
  if (x.ambient() != y.ambient()) return false;
  const std::size_t w = static_cast<std::size_t>(x.ambient()) + 1;
  QMatrix m(4, w);
  const QPoly* ps[4] = {&x.gen_a().poly(), &x.gen_b().poly(), &y.gen_a().poly(), &y.gen_b().poly()};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t k = 0; k < w; ++k) m(i, k) = ps[i]->coeff(static_cast<int>(k));
  return rank(m) == 2;
}

Polynomial member_with_root(const Pencil& l, const Rational& r) {
  Rational fa = l.gen_a().poly()(r), fb = l.gen_b().poly()(r);
  QPoly m = l.member(fb, -fa);
  if (m.is_zero()) throw Error(ErrorKind::DegenerateInput, "both generators vanish at r");
  return Polynomial(m.monic(), l.ambient());
}

Pencil shift_pencil(const Polynomial& f, const Rational& m) {
  if (f.degree() != f.ambient()) throw Error(ErrorKind::DegenerateInput, "shift_pencil needs a degree-n polynomial");
  if (sgn(m) <= 0 || !(m.get_d() < sep(f)))
    throw Error(ErrorKind::SepTooSmall, "shift must satisfy 0 < m < sep(f)");
  return Pencil(f, Polynomial(f.poly().shifted(m), f.ambient()));
}

ShiftResult stabilizing_shift(const Polynomial& f, const Polynomial& g, double d, const ShiftSearch& opt) {
  const int n = f.ambient();
  if (g.ambient() != n) throw Error(ErrorKind::AmbientMismatch, "generators in different B_n");
  if (f.degree() != n || g.degree() != n || !precedes_interlaced(f.roots(), g.roots()))
    throw Error(ErrorKind::DegenerateInput, "stabilizing_shift needs degree-n f, g with roots(f) < roots(g) < roots(f)[1]");
  double base = sep_pencil(Pencil(f, g), opt.sep).value;
  if (!(d < base)) throw Error(ErrorKind::SepTooSmall, "d must be below sep of the pencil l(f,g)");
  Polynomial lifted(f.poly(), n + 1);
  Rational N = 1;
  for (int k = 0; k <= opt.max_doublings; ++k, N *= 2) {
    QPoly shifted = QPoly(RationalVec{N, 1}) * g.poly();
    try {
      Pencil p(lifted, Polynomial(shifted, n + 1));
      double s = sep_pencil(p, opt.sep).value;
      if (s > d) return ShiftResult{N, s, k};
    } catch (const Error&) {
      // not yet interlaced at this N
    }
  }
  throw Error(ErrorKind::SearchBudgetExceeded, "no N found within the doubling budget");
}

}  // namespace bstab
