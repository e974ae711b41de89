#pragma once

#include <vector>

#include "bstab/rational.hpp"

namespace bstab {

/// Univariate polynomial over Q, coefficient of x^k at index k, no trailing zeros.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(RationalVec coeffs);
  static QPoly constant(const Rational& c);
  static QPoly x();
  static QPoly from_roots(const RationalVec& roots);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const RationalVec& coeffs() const { return c_; }
  /// Coefficient of x^k (zero beyond the degree).
  Rational coeff(int k) const;
  Rational leading() const;

  Rational operator()(const Rational& x) const;
  double eval(double x) const;
  long double eval(long double x) const;

  QPoly derivative() const;
  /// f(x + m).
  QPoly shifted(const Rational& m) const;
  QPoly monic() const;
  std::vector<double> to_doubles() const;

  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  QPoly& operator*=(const Rational& s);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(QPoly a, const Rational& s) { return a *= s; }
  friend QPoly operator*(const Rational& s, QPoly a) { return a *= s; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }

  /// Euclidean division, divisor nonzero.
  static void divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r);
  static QPoly gcd(QPoly a, QPoly b);

  /// Number of distinct real roots, exact (Sturm sequence).
  int count_real_roots() const;

 private:
  void trim();
  RationalVec c_;
};

}  // namespace bstab
