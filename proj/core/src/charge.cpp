#include "bstab/charge.hpp"

#include <cmath>

#include "bstab/errors.hpp"
#include "bstab/linalg.hpp"

namespace bstab {

LatticeVector gamma(const Rational& t, int n) {
  LatticeVector v;
  v.coords.resize(static_cast<std::size_t>(n) + 1);
  Rational term = 1;
  for (int k = 0; k <= n; ++k) {
    if (k > 0) term = term * t / k;
    v.coords[static_cast<std::size_t>(k)] = term;
  }
  return v;
}

LatticeVector gamma_inf(int n) {
  LatticeVector v;
  v.coords.assign(static_cast<std::size_t>(n) + 1, Rational(0));
  v.coords.back() = 1;
  return v;
}

LatticeVector gamma_entry(const RootTuple& t, std::size_t i) {
  int n = static_cast<int>(t.n());
  if (i >= t.n()) throw Error(ErrorKind::IndexOutOfRange, "tuple index out of range");
  if (i < t.finite().size()) return gamma(t.finite()[i], n);
  return gamma_inf(n);
}

std::vector<double> gamma_double(double t, int n) {
  std::vector<double> v(static_cast<std::size_t>(n) + 1);
  if (std::isinf(t)) {
    v.back() = 1;
    return v;
  }
  double term = 1;
  for (int k = 0; k <= n; ++k) {
    if (k > 0) term = term * t / k;
    v[static_cast<std::size_t>(k)] = term;
  }
  return v;
}

std::vector<double> charge_weights_double(const std::vector<double>& finite, bool infinite_last) {
  const std::size_t m = finite.size();
  std::vector<double> c{1.0};
  for (double t : finite) {
    std::vector<double> next(c.size() + 1, 0.0);
    for (std::size_t k = 0; k < c.size(); ++k) {
      next[k + 1] += c[k];
      next[k] -= t * c[k];
    }
    c = std::move(next);
  }
  double fact = 1;
  for (std::size_t k = 2; k <= m; ++k) fact *= static_cast<double>(k);
  std::vector<double> w(m + 1);
  double kf = 1;
  for (std::size_t k = 0; k <= m; ++k) {
    if (k > 0) kf *= static_cast<double>(k);
    w[k] = kf * c[k] / fact;
  }
  if (infinite_last) {
    for (auto& x : w) x = -x;
    w.push_back(0.0);
  }
  return w;
}

Rational normalizer(const RationalVec& t) {
  const std::size_t n = t.size();
  Rational c = 1;
  for (std::size_t k = 1; k < n; ++k) c *= factorial(static_cast<unsigned>(k));
  Rational vand = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) vand *= t[j] - t[i];
  return c / vand;
}

namespace {

// Weights of v -> C_t det(gamma(t_1..t_n); v) for finite t of length n.
RationalVec finite_charge_weights(const RationalVec& t) {
  const std::size_t n = t.size();
  RationalVec w(n + 1);
  if (n == 0) {
    w[0] = 1;
    return w;
  }
  std::vector<RationalVec> rows;
  for (const auto& ti : t) rows.push_back(gamma(ti, static_cast<int>(n)).coords);
  const Rational c = normalizer(t);
  for (std::size_t k = 0; k <= n; ++k) {
    QMatrix minor(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t jj = 0;
      for (std::size_t j = 0; j <= n; ++j) {
        if (j == k) continue;
        minor(i, jj++) = rows[i][j];
      }
    }
    // Cofactor sign for entry (row n, column k) of an (n+1)x(n+1) matrix.
    Rational cof = det_bareiss(minor);
    if ((n + k) % 2 == 1) cof = -cof;
    w[k] = c * cof;
  }
  return w;
}

}  // namespace

ReducedCharge reduced_charge(const RootTuple& t) {
  ReducedCharge b;
  const std::size_t n = t.n();
  if (t.infinite_last()) {
    RationalVec lower = finite_charge_weights(t.finite());
    b.weights.assign(n + 1, Rational(0));
    for (std::size_t k = 0; k < n; ++k) b.weights[k] = -lower[k];
  } else {
    b.weights = finite_charge_weights(t.finite());
  }
  b.scale = Rational(1);
  b.tuple = t;
  return b;
}

Rational eval_weights(const RationalVec& w, const RationalVec& v) {
  if (w.size() != v.size()) throw Error(ErrorKind::AmbientMismatch, "charge and vector have different ambient n");
  return dot(w, v);
}

Rational eval_charge(const ReducedCharge& b, const LatticeVector& v) { return eval_weights(b.weights, v.coords); }

RationalVec weights_of_poly(const QPoly& f, int n) {
  if (f.degree() > n) throw Error(ErrorKind::AmbientMismatch, "polynomial degree exceeds ambient n");
  RationalVec w(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) w[static_cast<std::size_t>(k)] = factorial(static_cast<unsigned>(k)) * f.coeff(k);
  return w;
}

QPoly poly_of_weights(const RationalVec& w) {
  RationalVec a(w.size());
  for (std::size_t k = 0; k < w.size(); ++k) a[k] = w[k] / factorial(static_cast<unsigned>(k));
  return QPoly(std::move(a));
}

ReducedCharge charge_of_poly(const Polynomial& f) {
  const int n = f.ambient();
  ReducedCharge b;
  b.weights = weights_of_poly(f.poly(), n);
  Rational s = f.degree() == n ? Rational(1 / factorial(static_cast<unsigned>(n)))
                               : Rational(-1 / factorial(static_cast<unsigned>(n - 1)));
  for (auto& w : b.weights) w *= s;
  b.scale = f.poly().leading();
  b.tuple = f.roots();
  return b;
}

QPoly poly_of_charge(const ReducedCharge& b) {
  const int n = b.ambient();
  if (n < 0) throw Error(ErrorKind::InvalidAmbient, "empty charge");
  QPoly f = poly_of_weights(b.weights);
  if (sgn(b.weights.back()) != 0) return f * factorial(static_cast<unsigned>(n));
  if (n == 0) return f;
  return f * Rational(-factorial(static_cast<unsigned>(n - 1)));
}

BnMembership in_Bn(const ReducedCharge& b, double d) {
  BnMembership out;
  const int n = b.ambient();
  QPoly f = poly_of_charge(b);
  if (f.degree() != n && f.degree() != n - 1) {
    out.reason = "charge is not a multiple of any B_t (degree too low)";
    return out;
  }
  out.c = f.leading();
  try {
    Polynomial p(f.monic(), n);
    out.t = p.roots();
  } catch (const Error& e) {
    out.reason = std::string("no real distinct roots: ") + e.name();
    return out;
  }
  out.sep = sep(*out.t);
  if (sgn(out.c) <= 0) {
    out.reason = "scale c is not positive";
    return out;
  }
  if (!(out.sep > d)) {
    out.reason = "sep(t) <= d";
    return out;
  }
  out.member = true;
  return out;
}

UnMembership in_Un(const CentralCharge& z, double d, const SepOptions& opt) {
  UnMembership out;
  if (z.re.ambient() != z.im.ambient()) throw Error(ErrorKind::AmbientMismatch, "real and imaginary parts differ in ambient n");
  BnMembership im = in_Bn(z.im, -1);
  if (!im.member) {
    out.reason = "imaginary part is not c2 B_t with c2 > 0";
    return out;
  }
  BnMembership re = in_Bn(z.re, -1);
  if (!re.member) {
    ReducedCharge neg = z.re;
    for (auto& w : neg.weights) w = -w;
    re = in_Bn(neg, -1);
    if (!re.member) {
      out.reason = "real part is not a nonzero multiple of any B_s";
      return out;
    }
    re.c = -re.c;
  }
  out.c1 = re.c;
  out.c2 = im.c;
  out.s = re.t;
  out.t = im.t;
  bool oriented = sgn(out.c1) > 0 ? precedes_interlaced(*out.s, *out.t) : precedes_interlaced(*out.t, *out.s);
  if (!oriented) {
    out.reason = sgn(out.c1) > 0 ? "c1 > 0 needs s < t < s[1]" : "c1 < 0 needs t < s < t[1]";
    return out;
  }
  Pencil l(roots_to_poly(*out.s), roots_to_poly(*out.t));
  out.pencil_sep = sep_pencil(l, opt).value;
  out.certified = false;
  if (!(out.pencil_sep > d)) {
    out.reason = "sep(l(s,t)) <= d";
    return out;
  }
  out.member = true;
  return out;
}

const char* verdict_name(SignVerdict v) {
  switch (v) {
    case SignVerdict::AllNonneg: return "ALL_NONNEG";
    case SignVerdict::AllNonpos: return "ALL_NONPOS";
    case SignVerdict::Mixed: return "MIXED";
  }
  return "MIXED";
}

Decomposition decompose(const LatticeVector& v, const RootTuple& t) {
  const int n = static_cast<int>(t.n());
  if (v.ambient() != n) throw Error(ErrorKind::AmbientMismatch, "vector and tuple differ in ambient n");
  ReducedCharge b = reduced_charge(t);
  if (sgn(eval_charge(b, v)) != 0) throw Error(ErrorKind::NotInKernel, "B_t(v) != 0");
  QMatrix m(static_cast<std::size_t>(n) + 1, static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < t.n(); ++i) {
    LatticeVector g = gamma_entry(t, i);
    Rational sign = (i % 2 == 0) ? -1 : 1;  // (-1)^(i+1) for 1-based index i+1
    for (std::size_t k = 0; k <= static_cast<std::size_t>(n); ++k) m(k, i) = sign * g.coords[k];
  }
  auto a = solve_consistent(m, v.coords);
  if (!a) throw Error(ErrorKind::NotInKernel, "v is not in the span of gamma(t_i)");
  Decomposition out;
  out.a = *a;
  const double zero_tol = 1e-12, boundary_tol = 1e-8;
  bool any_pos = false, any_neg = false;
  for (const auto& ai : out.a) {
    double x = ai.get_d();
    if (sgn(ai) != 0 && std::fabs(x) < boundary_tol) out.boundary = true;
    if (x > zero_tol) any_pos = true;
    if (x < -zero_tol) any_neg = true;
  }
  out.verdict = any_pos && any_neg ? SignVerdict::Mixed : (any_neg ? SignVerdict::AllNonpos : SignVerdict::AllNonneg);
  return out;
}

RootTuple kernel_parameter(const Pencil& l, const LatticeVector& v) {
  const int n = l.ambient();
  Rational x = eval_weights(weights_of_poly(l.gen_a().poly(), n), v.coords);
  Rational y = eval_weights(weights_of_poly(l.gen_b().poly(), n), v.coords);
  if (sgn(x) == 0 && sgn(y) == 0) throw Error(ErrorKind::InKernelOfLine, "v is annihilated by the whole pencil");
  QPoly m = l.member(y, -x);
  return Polynomial(m.monic(), n).roots();
}

}  // namespace bstab
