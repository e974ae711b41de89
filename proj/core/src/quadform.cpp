#include "bstab/quadform.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "bstab/errors.hpp"

namespace bstab {

namespace {

double max_abs(const QMatrix& g) {
  double m = 0;
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) m = std::max(m, std::fabs(to_double(g(i, j))));
  return m;
}

double max_abs(const RationalVec& v) {
  double m = 0;
  for (const auto& x : v) m = std::max(m, std::fabs(to_double(x)));
  return m;
}

RationalVec padded(RationalVec w, std::size_t size) {
  w.resize(size, Rational(0));
  return w;
}

QMatrix scaled(const QMatrix& g, const Rational& s) {
  QMatrix out = g;
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) out(i, j) *= s;
  return out;
}

QMatrix added(const QMatrix& a, const QMatrix& b) {
  QMatrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) += b(i, j);
  return out;
}

}  // namespace

Rational QuadraticForm::eval(const RationalVec& v) const { return pair(v, v); }

Rational QuadraticForm::pair(const RationalVec& u, const RationalVec& v) const {
  if (u.size() != gram.rows() || v.size() != gram.rows())
    throw Error(ErrorKind::AmbientMismatch, "vector size does not match the form");
  return dot(u, gram * v);
}

QMatrix sym_product(const RationalVec& u, const RationalVec& w) {
  const std::size_t n = u.size();
  QMatrix g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g(i, j) = (u[i] * w[j] + w[i] * u[j]) / 2;
  return g;
}

QMatrix embed(const QMatrix& g, std::size_t size) {
  QMatrix out(size, size);
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) out(i, j) = g(i, j);
  return out;
}

RationalVec tilde(const RationalVec& w) {
  RationalVec out(w.size());
  for (std::size_t k = 1; k < w.size(); ++k) out[k] = Rational(static_cast<long>(k)) * w[k - 1];
  return out;
}

LineCharges line_charges(const Pencil& l) {
  const int n = l.ambient();
  if (n < 2) throw Error(ErrorKind::InvalidAmbient, "Q_l needs ambient n >= 2");
  LineCharges out;
  out.b_line = charge_of_poly(pencil_canonical(l)).weights;
  Pencil pi = pencil_project(l);
  out.b_project = padded(charge_of_poly(pencil_canonical(pi)).weights, static_cast<std::size_t>(n) + 1);
  return out;
}

QuadraticForm q_line(const Pencil& l) {
  LineCharges c = line_charges(l);
  QuadraticForm q;
  q.gram = added(sym_product(c.b_line, tilde(c.b_project)),
                 scaled(sym_product(c.b_project, tilde(c.b_line)), Rational(-1)));
  q.provenance = "q_line";
  return q;
}

SupportReport verify_support(const QuadraticForm& q, const Pencil& l, const SupportOptions& opt) {
  const int n = l.ambient();
  if (q.ambient() != n) throw Error(ErrorKind::AmbientMismatch, "form and pencil ambients differ");
  SupportReport rep;
  const double gnorm = std::max(max_abs(q.gram), 1e-300);
  std::ostringstream why;

  // (a) Q vanishes on the moment curve.
  {
    Rational lo = 0, hi = 0;
    bool first = true;
    for (const Polynomial* g : {&l.gen_a(), &l.gen_b()})
      for (const auto& r : g->roots().finite()) {
        if (first || r < lo) lo = r;
        if (first || r > hi) hi = r;
        first = false;
      }
    lo -= 2;
    hi += 2;
    rep.vanishing = true;
    const int k = std::max(opt.t_samples - 1, 2);
    for (int i = 0; i <= k; ++i) {
      RationalVec v = i < k ? gamma(lo + (hi - lo) * ratio(i, k - 1), n).coords : gamma_inf(n).coords;
      Rational val = q.eval(v);
      double res = std::fabs(to_double(val)) / (gnorm * std::pow(max_abs(v), 2));
      rep.max_vanish_residual = std::max(rep.max_vanish_residual, res);
      if (res > opt.vanish_tol && rep.vanishing) {
        rep.vanishing = false;
        why << "Q(gamma(t)) != 0 at sample " << i << "; ";
      }
    }
  }

  // (b) negative definite on Ker l.
  {
    QMatrix rows = QMatrix::from_rows({weights_of_poly(l.gen_a().poly(), n), weights_of_poly(l.gen_b().poly(), n)});
    QMatrix k = nullspace(rows);
    if (k.cols() == 0) {
      rep.kernel_negdef = true;
    } else {
      QMatrix r = k.transpose() * q.gram * k;
      rep.kernel_negdef = negative_definite(r);
      if (!rep.kernel_negdef) why << "not negative definite on Ker l; ";
    }
  }

  // (c) alternating signs on root tuples of members.
  {
    rep.alternating = true;
    rep.min_alternating_ratio = kPlusInfinity;
    auto check_tuple = [&](const std::vector<RationalVec>& gs, const char* label) {
      for (std::size_t i = 0; i < gs.size(); ++i)
        for (std::size_t j = i + 1; j < gs.size(); ++j) {
          Rational p = q.pair(gs[i], gs[j]);
          if ((i + j) % 2 == 1) p = -p;
          double ratio = to_double(p) / (gnorm * max_abs(gs[i]) * max_abs(gs[j]));
          rep.min_alternating_ratio = std::min(rep.min_alternating_ratio, ratio);
          if (ratio <= opt.margin && rep.alternating) {
            rep.alternating = false;
            why << "sign pattern fails on " << label << " pair (" << i + 1 << "," << j + 1 << "); ";
          }
        }
    };
    const int m = std::max(opt.member_samples, 1);
    for (int s = 0; s < m; ++s) {
      double theta = M_PI * s / m;
      std::vector<double> c = l.member_at(theta);
      double cmax = 0;
      for (double x : c) cmax = std::max(cmax, std::fabs(x));
      if (c.size() == static_cast<std::size_t>(n) + 1 && std::fabs(c.back()) <= 1e-13 * cmax) continue;
      std::vector<double> roots;
      if (!try_real_roots(c, roots)) {
        if (rep.alternating) why << "member at theta=" << theta << " has no simple real roots; ";
        rep.alternating = false;
        continue;
      }
      if (static_cast<int>(roots.size()) != n) continue;
      std::vector<RationalVec> gs;
      for (double r : roots) gs.push_back(gamma(from_double(r), n).coords);
      check_tuple(gs, "sampled");
    }
    RootTuple tc = pencil_canonical(l).roots();
    std::vector<RationalVec> gs;
    for (std::size_t i = 0; i < tc.n(); ++i) gs.push_back(gamma_entry(tc, i).coords);
    check_tuple(gs, "infinite-member");
  }
  rep.witness = why.str();
  return rep;
}

QuadraticForm q_tilde(const Pencil& l, const QTildeOptions& opt) {
  const int n = l.ambient();
  const std::size_t size = static_cast<std::size_t>(n) + 1;
  if (n == 1) {
    QuadraticForm z;
    z.gram = QMatrix(size, size);
    z.provenance = "q_tilde";
    return z;
  }
  QuadraticForm inner = q_tilde(pencil_project(l), opt);
  QMatrix inner_g = embed(inner.gram, size);
  QMatrix ql = q_line(l).gram;
  Rational alpha = 1;
  std::string last;
  for (int k = 0; k <= opt.max_doublings; ++k, alpha *= 2) {
    QuadraticForm q;
    q.gram = added(scaled(ql, alpha), inner_g);
    q.provenance = "q_tilde";
    SupportReport rep = verify_support(q, l, opt.verify);
    if (rep.pass()) {
      q.alphas.push_back(alpha);
      q.alphas.insert(q.alphas.end(), inner.alphas.begin(), inner.alphas.end());
      return q;
    }
    last = rep.witness;
  }
  throw Error(ErrorKind::AlphaSearchFailed,
              "no alpha up to 2^" + std::to_string(opt.max_doublings) + " at ambient " + std::to_string(n) + ": " + last);
}

QuadraticForm dual_form(const QuadraticForm& q) {
  auto inv = inverse(q.gram);
  if (!inv) throw Error(ErrorKind::SingularForm, "Gram matrix is singular");
  QuadraticForm d;
  d.gram = *inv;
  d.provenance = "dual(" + q.provenance + ")";
  return d;
}

WQReport in_WQ(const CentralCharge& z, const QuadraticForm& q) {
  const std::size_t rho = q.gram.rows();
  if (z.re.weights.size() != rho || z.im.weights.size() != rho)
    throw Error(ErrorKind::AmbientMismatch, "charge and form sizes differ");
  Inertia in = inertia(q.gram);
  if (in.positive != 2 || in.zero != 0)
    throw Error(ErrorKind::WrongSignature, "form must have signature (2, rho-2); got (" + std::to_string(in.positive) +
                                               ", " + std::to_string(in.negative) + ", zero " + std::to_string(in.zero) + ")");
  QMatrix qs = dual_form(q).gram;
  const RationalVec& f = z.im.weights;
  const RationalVec& g = z.re.weights;
  WQReport r;
  r.qf = dot(f, qs * f);
  r.qg = dot(g, qs * g);
  r.qfg = dot(f, qs * g);
  r.in_w = r.qfg * r.qfg < r.qf * r.qg && sgn(r.qf) > 0;
  QMatrix rows = QMatrix::from_rows({f, g});
  if (rank(rows) == 2) {
    QMatrix k = nullspace(rows);
    r.kernel_negdef = k.cols() == 0 || negative_definite(k.transpose() * q.gram * k);
  }
  return r;
}

namespace {

Rational rational_below(double x) {
  Rational q = rounded(from_double(x), 20);
  return q;
}

}  // namespace

DeformReport deform_form(const RationalVec& h, const RationalVec& f1, const RationalVec& f2, const QuadraticForm& q,
                         const Rational& d, const Rational& N, int samples, std::uint64_t seed) {
  const std::size_t rho = q.gram.rows();
  if (rho < 3) throw Error(ErrorKind::AssumptionViolated, "rank must be at least 3");
  if (h.size() != rho || f1.size() != rho || f2.size() != rho)
    throw Error(ErrorKind::AmbientMismatch, "functional sizes differ from the form");
  if (sgn(d) <= 0 || sgn(N) <= 0) throw Error(ErrorKind::InvalidInput, "d and N must be positive");
  if (rank(QMatrix::from_rows({h, f1, f2})) != 3)
    throw Error(ErrorKind::AssumptionViolated, "h, f1, f2 are not independent");
  Inertia in = inertia(q.gram);
  if (in.positive != 2 || in.zero != 0) throw Error(ErrorKind::AssumptionViolated, "form must have signature (2, rho-2)");
  {
    QMatrix k = nullspace(QMatrix::from_rows({h, f1}));
    if (!negative_definite(k.transpose() * q.gram * k))
      throw Error(ErrorKind::AssumptionViolated, "form is not negative definite on Ker h cap Ker f1");
  }

  // Coordinates x = T v with x1 = h, x2 = f1, x3 = f2.
  std::vector<RationalVec> trows = {h, f1, f2};
  for (std::size_t j = 0; j < rho && trows.size() < rho; ++j) {
    RationalVec e(rho);
    e[j] = 1;
    trows.push_back(e);
    if (rank(QMatrix::from_rows(trows)) != trows.size()) trows.pop_back();
  }
  QMatrix T = QMatrix::from_rows(trows);
  QMatrix Ti = *inverse(T);
  QMatrix G = Ti.transpose() * q.gram * Ti;

  // Q <= lambda (D x1^2 + D x2^2 - sum_{k>=3} x_k^2).
  const std::size_t m = rho - 2;
  QMatrix negC(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) negC(i, j) = -G(i + 2, j + 2);
  Eigen::MatrixXd ec(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) ec(i, j) = to_double(negC(i, j));
  double lmin = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(ec).eigenvalues().minCoeff();
  Rational lambda = rational_below(std::max(lmin / 2, 1e-12));
  for (int it = 0;; ++it) {
    QMatrix t = negC;
    for (std::size_t i = 0; i < m; ++i) t(i, i) -= lambda;
    if (positive_definite(t)) break;
    if (it > 200) throw Error(ErrorKind::AssumptionViolated, "could not bound the negative block");
    lambda /= 2;
  }
  Rational D = 2;
  for (int it = 0;; ++it) {
    QMatrix M(rho, rho);
    for (std::size_t i = 0; i < rho; ++i)
      for (std::size_t j = 0; j < rho; ++j) M(i, j) = -G(i, j);
    M(0, 0) += lambda * D;
    M(1, 1) += lambda * D;
    for (std::size_t i = 2; i < rho; ++i) M(i, i) -= lambda;
    if (positive_definite(M)) break;
    if (it > 200) throw Error(ErrorKind::AssumptionViolated, "could not bound the positive block");
    D *= 2;
  }

  DeformReport rep;
  rep.D = D;
  rep.lambda = lambda;
  rep.D2 = D + 1;
  rep.epsilon = 1 / (2 * N * N);
  if (rep.epsilon > ratio(1, 4)) rep.epsilon = ratio(1, 4);
  rep.D1 = D + N * N * (D + 1) * (D + 1) / (2 * d) + 1;

  // Q~ in x coordinates.
  QMatrix Gt(rho, rho);
  const Rational& e = rep.epsilon;
  Gt(0, 0) = rep.D1;
  Gt(1, 1) = rep.D2 - 2 * e;
  Gt(1, 2) = Gt(2, 1) = N * (rep.D2 - 2 * e) / 2;
  Gt(2, 2) = -e * N * N;
  for (std::size_t i = 3; i < rho; ++i) Gt(i, i) = -1;
  rep.form.gram = T.transpose() * Gt * T;
  rep.form.provenance = "deform(" + q.provenance + ")";
  Inertia it = inertia(rep.form.gram);
  rep.signature_ok = it.positive == 2 && it.zero == 0;

  auto qx = [](const QMatrix& g, const RationalVec& x) { return dot(x, g * x); };
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coord(-1000, 1000);
  std::uniform_int_distribution<int> tpick(0, 1000);
  std::ostringstream why;
  rep.first_containment = true;
  rep.second_containment = true;
  rep.samples = samples;
  for (int s = 0; s < samples; ++s) {
    RationalVec x(rho);
    for (auto& c : x) c = ratio(coord(rng), 100);
    // Ker h cap Ker(f1 + t f2): x1 = 0, x2 = -t x3.
    RationalVec w = x;
    Rational t = N * ratio(s % 3 == 0 ? 0 : (s % 3 == 1 ? 1000 : tpick(rng)), 1000);
    w[0] = 0;
    w[1] = -t * w[2];
    bool nonzero = false;
    for (const auto& c : w) nonzero = nonzero || sgn(c) != 0;
    if (nonzero && sgn(qx(Gt, w)) >= 0 && rep.first_containment) {
      rep.first_containment = false;
      why << "kernel vector with Q~ >= 0 at t=" << to_string(t) << "; ";
    }
    // neg(Q~) inside M_d cup neg(Q).
    if (sgn(qx(Gt, x)) < 0) {
      bool in_md = sgn(x[1] * x[2]) < 0 && x[0] * x[0] < d * x[1] * x[1] && x[0] * x[0] < d * x[2] * x[2];
      if (!in_md && sgn(qx(G, x)) >= 0 && rep.second_containment) {
        rep.second_containment = false;
        why << "vector in neg(Q~) outside M_d and neg(Q); ";
      }
    }
  }
  rep.witness = why.str();
  return rep;
}

}  // namespace bstab
