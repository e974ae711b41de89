#include "bstab/qpoly.hpp"

#include <utility>

#include "bstab/errors.hpp"

namespace bstab {

QPoly::QPoly(RationalVec coeffs) : c_(std::move(coeffs)) { trim(); }

QPoly QPoly::constant(const Rational& c) { return QPoly(RationalVec{c}); }

QPoly QPoly::x() { return QPoly(RationalVec{0, 1}); }

QPoly QPoly::from_roots(const RationalVec& roots) {
  QPoly p = constant(1);
  for (const auto& r : roots) p = p * QPoly(RationalVec{-r, 1});
  return p;
}

void QPoly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Rational QPoly::coeff(int k) const {
  if (k < 0 || k > degree()) return Rational(0);
  return c_[static_cast<std::size_t>(k)];
}

Rational QPoly::leading() const { return c_.empty() ? Rational(0) : c_.back(); }

Rational QPoly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double QPoly::eval(double x) const {
  double acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

long double QPoly::eval(long double x) const {
  long double acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + static_cast<long double>(it->get_d());
  return acc;
}

QPoly QPoly::derivative() const {
  RationalVec d;
  for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * static_cast<long>(k));
  return QPoly(std::move(d));
}

QPoly QPoly::shifted(const Rational& m) const {
  // Horner in the shifted variable: f(x+m) = (...(a_n (x+m) + a_{n-1})(x+m) + ...).
  QPoly lin(RationalVec{m, 1});
  QPoly acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * lin + constant(*it);
  return acc;
}

QPoly QPoly::monic() const {
  if (c_.empty()) throw Error(ErrorKind::DegenerateInput, "zero polynomial has no monic form");
  Rational inv = 1 / c_.back();
  return *this * inv;
}

std::vector<double> QPoly::to_doubles() const {
  std::vector<double> out;
  out.reserve(c_.size());
  for (const auto& c : c_) out.push_back(c.get_d());
  return out;
}

QPoly& QPoly::operator+=(const QPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

QPoly& QPoly::operator*=(const Rational& s) {
  if (sgn(s) == 0) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return QPoly();
  RationalVec r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  return QPoly(std::move(r));
}

void QPoly::divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r) {
  if (b.is_zero()) throw Error(ErrorKind::DegenerateInput, "polynomial division by zero");
  RationalVec rem = a.c_;
  int db = b.degree();
  RationalVec quo(a.degree() >= db ? static_cast<std::size_t>(a.degree() - db + 1) : 0);
  for (int k = a.degree(); k >= db; --k) {
    Rational f = rem[static_cast<std::size_t>(k)] / b.c_.back();
    quo[static_cast<std::size_t>(k - db)] = f;
    if (sgn(f) == 0) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k - db + j)] -= f * b.c_[static_cast<std::size_t>(j)];
  }
  q = QPoly(std::move(quo));
  r = QPoly(std::move(rem));
}

QPoly QPoly::gcd(QPoly a, QPoly b) {
  while (!b.is_zero()) {
    QPoly q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = r.is_zero() ? r : r.monic();
  }
  return a.is_zero() ? a : a.monic();
}

namespace {

int sign_changes(const std::vector<int>& s) {
  int changes = 0, last = 0;
  for (int v : s) {
    if (v == 0) continue;
    if (last != 0 && v != last) ++changes;
    last = v;
  }
  return changes;
}

}  // namespace

int QPoly::count_real_roots() const {
  if (degree() <= 0) return 0;
  // Work with the square-free part so that distinct roots are counted once.
  QPoly g = gcd(*this, derivative());
  QPoly p = *this;
  if (g.degree() > 0) {
    QPoly q, r;
    divmod(*this, g, q, r);
    p = q;
  }
  std::vector<QPoly> chain{p, p.derivative()};
  while (!chain.back().is_zero() && chain.back().degree() > 0) {
    QPoly q, r;
    divmod(chain[chain.size() - 2], chain.back(), q, r);
    if (r.is_zero()) break;
    chain.push_back(r * Rational(-1));
  }
  std::vector<int> at_neg, at_pos;
  for (const auto& s : chain) {
    int lead = sgn(s.leading());
    at_pos.push_back(lead);
    at_neg.push_back(s.degree() % 2 == 0 ? lead : -lead);
  }
  return sign_changes(at_neg) - sign_changes(at_pos);
}

}  // namespace bstab
