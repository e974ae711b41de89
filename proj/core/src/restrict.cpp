#include "bstab/restrict.hpp"

#include <algorithm>
#include <cmath>

#include "bstab/errors.hpp"

namespace bstab {

QPoly difference_poly(const QPoly& f, const Rational& m) { return f - f.shifted(-m); }

namespace {

void check_sep(const RootTuple& t, const Rational& m, const std::string& where) {
  if (sgn(m) <= 0) throw Error(ErrorKind::SepViolation, where + "m must be positive");
  if (!(sep(t) > to_double(m))) throw Error(ErrorKind::SepViolation, where + "need sep(t) > m");
}

}  // namespace

RootTuple xi(const RootTuple& t, const Rational& m) {
  if (t.n() < 2) throw Error(ErrorKind::InvalidAmbient, "xi needs ambient n >= 2");
  check_sep(t, m, "");
  QPoly g = difference_poly(QPoly::from_roots(t.finite()), m);
  const int n = static_cast<int>(t.n()) - 1;
  if (g.degree() < 1) return RootTuple({}, t.infinite_last(), t.exact());
  Polynomial p(g, n);
  RootTuple r = p.roots();
  return RootTuple(r.finite(), t.infinite_last(), r.exact() && t.exact());
}

RootTuple xi_multi(const RootTuple& t, const std::vector<Rational>& ms) {
  RootTuple cur = t;
  for (std::size_t i = 0; i < ms.size(); ++i) {
    try {
      cur = xi(cur, ms[i]);
    } catch (const Error& e) {
      throw Error(e.kind(), "stage " + std::to_string(i) + ": " + e.what());
    }
  }
  return cur;
}

QMatrix pushforward_matrix(int n, const Rational& m) {
  if (n < 1) throw Error(ErrorKind::InvalidAmbient, "pushforward needs n >= 1");
  QMatrix M(static_cast<std::size_t>(n) + 1, static_cast<std::size_t>(n));
  for (int j = 0; j <= n; ++j) {
    Rational p = 1;
    for (int d = 1; d <= j; ++d) {
      p *= m;
      int k = j - d;
      if (k >= n) continue;
      Rational e = p / factorial(static_cast<unsigned>(d));
      M(static_cast<std::size_t>(j), static_cast<std::size_t>(k)) = d % 2 == 1 ? e : Rational(-e);
    }
  }
  return M;
}

RationalVec compose_pushforward(const RationalVec& w, const QMatrix& M) {
  if (w.size() != M.rows()) throw Error(ErrorKind::AmbientMismatch, "charge and pushforward sizes differ");
  RationalVec out(M.cols());
  for (std::size_t k = 0; k < M.cols(); ++k)
    for (std::size_t j = 0; j < M.rows(); ++j) out[k] += w[j] * M(j, k);
  return out;
}

namespace {

struct PartMatch {
  ReducedCharge charge;
  Rational scale;
  RootTuple tuple;
  bool exact = false;
  double residual = 0;
};

PartMatch match_part(const ReducedCharge& part, const QMatrix& M, const Rational& m) {
  const int n = part.ambient();
  PartMatch out;
  out.charge.weights = compose_pushforward(part.weights, M);
  // The monic finite part of the parameter polynomial, exactly.
  QPoly f = poly_of_charge(part);
  const bool inf = f.degree() == n - 1;
  QPoly g = difference_poly(f.monic(), m);
  Polynomial xp(g, n - 1);
  out.tuple = RootTuple(xp.roots().finite(), inf, xp.roots().exact());
  // B_{xi} has weight 1 at e*_{n-1} (finite) or -1 at e*_{n-2} (infinite last entry).
  const auto& w = out.charge.weights;
  out.scale = inf ? Rational(-w[static_cast<std::size_t>(n - 2)]) : w[static_cast<std::size_t>(n - 1)];
  QPoly composed = poly_of_charge(out.charge);
  out.exact = sgn(out.scale) != 0 && composed == out.scale * g.monic();
  std::vector<double> finite = out.tuple.doubles();
  if (inf) finite.pop_back();
  std::vector<double> pred = charge_weights_double(finite, inf);
  double sc = to_double(out.scale), big = 0;
  for (std::size_t k = 0; k < w.size(); ++k) big = std::max(big, std::fabs(to_double(w[k])));
  for (std::size_t k = 0; k < w.size(); ++k)
    out.residual = std::max(out.residual, std::fabs(to_double(w[k]) - sc * pred[k]) / std::max(big, 1e-300));
  out.charge.scale = out.scale;
  out.charge.tuple = out.tuple;
  return out;
}

}  // namespace

RestrictedCharge restrict_charge(const CentralCharge& z, const Rational& m, const SepOptions& opt) {
  const int n = z.re.ambient();
  if (n < 2) throw Error(ErrorKind::InvalidAmbient, "restriction needs ambient n >= 2");
  UnMembership u = in_Un(z, -1, opt);
  if (!u.member) throw Error(ErrorKind::InvalidInput, "charge is not in U_n: " + u.reason);
  if (sgn(m) <= 0) throw Error(ErrorKind::SepViolation, "m must be positive");
  if (!(u.pencil_sep > to_double(m))) throw Error(ErrorKind::SepViolation, "need sep(l(s,t)) > m");
  QMatrix M = pushforward_matrix(n, m);
  PartMatch re = match_part(z.re, M, m), im = match_part(z.im, M, m);
  RestrictedCharge out;
  out.z.re = re.charge;
  out.z.im = im.charge;
  out.c1 = re.scale;
  out.c2 = im.scale;
  out.s = re.tuple;
  out.t = im.tuple;
  out.exact_match = re.exact && im.exact && re.scale == u.c1 * m && im.scale == u.c2 * m;
  out.residual = std::max(re.residual, im.residual);
  if (!out.exact_match || !(out.residual <= 1e-10))
    throw Error(ErrorKind::DecompositionFailed, "composed charge does not match the xi prediction");
  return out;
}

Rational surface_xi(const Rational& t1, const Rational& t2, const Rational& m) { return (t1 + t2 + m) / 2; }

std::vector<double> threefold_xi(const std::vector<double>& t, double m) {
  if (t.size() != 3) throw Error(ErrorKind::InvalidInput, "threefold_xi needs three finite entries");
  double s = t[0] + t[1] + t[2];
  double q = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) q += (t[i] - t[j]) * (t[i] - t[j]);
  double r = std::sqrt(2 * q - 3 * m * m);
  return {(2 * s + 3 * m - r) / 6, (2 * s + 3 * m + r) / 6};
}

}  // namespace bstab
