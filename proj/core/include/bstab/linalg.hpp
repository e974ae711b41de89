#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "bstab/rational.hpp"

namespace bstab {

/// Dense row-major rational matrix.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols) {}
  static QMatrix identity(std::size_t n);
  static QMatrix from_rows(const std::vector<RationalVec>& rows);

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  Rational& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

  RationalVec row(std::size_t i) const;
  RationalVec col(std::size_t j) const;
  QMatrix transpose() const;
  bool is_symmetric() const;

  friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
  friend RationalVec operator*(const QMatrix& a, const RationalVec& v);
  friend bool operator==(const QMatrix& a, const QMatrix& b) {
    return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
  }

 private:
  std::size_t r_ = 0, c_ = 0;
  RationalVec a_;
};

Rational dot(const RationalVec& a, const RationalVec& b);

/// Fraction-free (Bareiss) determinant with row pivoting.
Rational det_bareiss(QMatrix m);

/// Unique solution of a square nonsingular system; nullopt if singular.
std::optional<RationalVec> solve_square(const QMatrix& a, const RationalVec& b);

/// Solution of a consistent (possibly overdetermined) full-column-rank system;
/// nullopt if inconsistent or rank deficient.
std::optional<RationalVec> solve_consistent(const QMatrix& a, const RationalVec& b);

std::optional<QMatrix> inverse(const QMatrix& a);

std::size_t rank(QMatrix m);

/// Basis of {x : a x = 0} as the columns of the returned matrix.
QMatrix nullspace(const QMatrix& a);

/// Determinants of the leading k x k blocks, k = 1..n.
RationalVec leading_minors(const QMatrix& sym);

struct Inertia {
  int positive = 0;
  int negative = 0;
  int zero = 0;
};

/// Sylvester inertia of a symmetric matrix by exact congruence.
Inertia inertia(const QMatrix& sym);

/// Strict negative definiteness via alternating leading minors.
bool negative_definite(const QMatrix& sym);
bool positive_definite(const QMatrix& sym);

}  // namespace bstab
