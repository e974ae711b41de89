#include "bstab/roots.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "bstab/errors.hpp"

namespace bstab {

namespace {

enum class Outcome { Ok, Complex, Repeated };

long double horner(const std::vector<double>& c, long double x, long double& deriv) {
  long double p = 0, d = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    d = d * x + p;
    p = p * x + static_cast<long double>(*it);
  }
  deriv = d;
  return p;
}

double polish(const std::vector<double>& c, double x0) {
  long double x = x0;
  for (int it = 0; it < 60; ++it) {
    long double d = 0;
    long double p = horner(c, x, d);
    if (p == 0 || d == 0) break;
    long double step = p / d;
    long double nx = x - step;
    if (!std::isfinite(static_cast<double>(nx))) break;
    if (std::fabs(step) <= 1e-19L * std::max<long double>(1, std::fabs(x))) {
      x = nx;
      break;
    }
    // Newton can overshoot near clustered roots; only accept improving steps.
    long double dn = 0;
    if (std::fabs(horner(c, nx, dn)) > std::fabs(p)) break;
    x = nx;
  }
  return static_cast<double>(x);
}

Outcome compute(const std::vector<double>& coeffs, std::vector<double>& out, const RootOptions& opt) {
  out.clear();
  std::size_t deg = coeffs.size() - 1;
  if (deg == 0) return Outcome::Ok;
  const double lead = coeffs.back();
  if (deg == 1) {
    out.push_back(-coeffs[0] / lead);
    return Outcome::Ok;
  }
  Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(static_cast<long>(deg), static_cast<long>(deg));
  for (std::size_t i = 1; i < deg; ++i) comp(static_cast<long>(i), static_cast<long>(i - 1)) = 1.0;
  for (std::size_t i = 0; i < deg; ++i) comp(static_cast<long>(i), static_cast<long>(deg - 1)) = -coeffs[i] / lead;
  Eigen::EigenSolver<Eigen::MatrixXd> es(comp, false);
  if (es.info() != Eigen::Success) return Outcome::Complex;
  auto ev = es.eigenvalues();
  for (long i = 0; i < ev.size(); ++i) {
    double re = ev[i].real(), im = ev[i].imag();
    if (std::fabs(im) > opt.imag_tol * std::max(1.0, std::fabs(re))) return Outcome::Complex;
    out.push_back(polish(coeffs, re));
  }
  std::sort(out.begin(), out.end());
  double spread = std::max(1.0, out.back() - out.front());
  for (std::size_t i = 1; i < out.size(); ++i)
    if (out[i] - out[i - 1] < opt.distinct_tol * spread) return Outcome::Repeated;
  return Outcome::Ok;
}

std::vector<double> trimmed(const std::vector<double>& coeffs) {
  std::vector<double> c = coeffs;
  while (!c.empty() && c.back() == 0.0) c.pop_back();
  if (c.empty()) throw Error(ErrorKind::DegenerateInput, "zero polynomial has no root tuple");
  return c;
}

}  // namespace

std::vector<double> real_roots(const std::vector<double>& coeffs, const RootOptions& opt) {
  std::vector<double> out;
  switch (compute(trimmed(coeffs), out, opt)) {
    case Outcome::Ok: return out;
    case Outcome::Complex: throw Error(ErrorKind::ComplexRoots, "polynomial has non-real roots");
    case Outcome::Repeated: break;
  }
  throw Error(ErrorKind::NotDistinctRoots, "two roots closer than the distinctness tolerance");
}

bool try_real_roots(const std::vector<double>& coeffs, std::vector<double>& out, const RootOptions& opt) {
  std::vector<double> c = coeffs;
  while (!c.empty() && c.back() == 0.0) c.pop_back();
  if (c.empty()) return false;
  return compute(c, out, opt) == Outcome::Ok;
}

}  // namespace bstab
