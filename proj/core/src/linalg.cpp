#include "bstab/linalg.hpp"

#include <utility>

#include "bstab/errors.hpp"

namespace bstab {

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMatrix QMatrix::from_rows(const std::vector<RationalVec>& rows) {
  if (rows.empty()) return QMatrix();
  QMatrix m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.c_) throw Error(ErrorKind::InvalidInput, "ragged matrix rows");
    for (std::size_t j = 0; j < m.c_; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

RationalVec QMatrix::row(std::size_t i) const {
  return RationalVec(a_.begin() + static_cast<long>(i * c_), a_.begin() + static_cast<long>((i + 1) * c_));
}

RationalVec QMatrix::col(std::size_t j) const {
  RationalVec v(r_);
  for (std::size_t i = 0; i < r_; ++i) v[i] = (*this)(i, j);
  return v;
}

QMatrix QMatrix::transpose() const {
  QMatrix t(c_, r_);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool QMatrix::is_symmetric() const {
  if (r_ != c_) return false;
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = i + 1; j < c_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  if (a.c_ != b.r_) throw Error(ErrorKind::AmbientMismatch, "matrix shape mismatch");
  QMatrix p(a.r_, b.c_);
  for (std::size_t i = 0; i < a.r_; ++i)
    for (std::size_t k = 0; k < a.c_; ++k) {
      const Rational& x = a(i, k);
      if (sgn(x) == 0) continue;
      for (std::size_t j = 0; j < b.c_; ++j) p(i, j) += x * b(k, j);
    }
  return p;
}

RationalVec operator*(const QMatrix& a, const RationalVec& v) {
  if (a.c_ != v.size()) throw Error(ErrorKind::AmbientMismatch, "matrix-vector shape mismatch");
  RationalVec out(a.r_);
  for (std::size_t i = 0; i < a.r_; ++i)
    for (std::size_t j = 0; j < a.c_; ++j) out[i] += a(i, j) * v[j];
  return out;
}

Rational dot(const RationalVec& a, const RationalVec& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::AmbientMismatch, "vector length mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational det_bareiss(QMatrix m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw Error(ErrorKind::InvalidInput, "determinant of a non-square matrix");
  if (n == 0) return 1;
  Rational prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(m(k, k)) == 0) {
      std::size_t p = k + 1;
      while (p < n && sgn(m(p, k)) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  Rational d = m(n - 1, n - 1);
  return sign < 0 ? Rational(-d) : d;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(QMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && sgn(m(p, col)) == 0) ++p;
    if (p == m.rows()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(row, j), m(p, j));
    Rational inv = 1 / m(row, col);
    for (std::size_t j = 0; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || sgn(m(i, col)) == 0) continue;
      Rational f = m(i, col);
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::optional<RationalVec> solve_square(const QMatrix& a, const RationalVec& b) {
  if (a.rows() != a.cols()) throw Error(ErrorKind::InvalidInput, "solve_square needs a square matrix");
  return solve_consistent(a, b);
}

std::optional<RationalVec> solve_consistent(const QMatrix& a, const RationalVec& b) {
  const std::size_t n = a.cols();
  if (b.size() != a.rows()) throw Error(ErrorKind::AmbientMismatch, "right-hand side length mismatch");
  QMatrix aug(a.rows(), n + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n) = b[i];
  }
  auto piv = rref(aug);
  if (piv.size() != n) return std::nullopt;  // rank deficient or inconsistent
  RationalVec x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = aug(i, n);
  return x;
}

std::optional<QMatrix> inverse(const QMatrix& a) {
  const std::size_t n = a.rows();
  if (n != a.cols()) throw Error(ErrorKind::InvalidInput, "inverse of a non-square matrix");
  QMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = 1;
  }
  auto piv = rref(aug);
  if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
  QMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

std::size_t rank(QMatrix m) { return rref(m).size(); }

QMatrix nullspace(const QMatrix& a) {
  QMatrix m = a;
  auto piv = rref(m);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : piv) is_pivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t j = 0; j < a.cols(); ++j)
    if (!is_pivot[j]) free.push_back(j);
  QMatrix basis(a.cols(), free.size());
  for (std::size_t k = 0; k < free.size(); ++k) {
    basis(free[k], k) = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) basis(piv[i], k) = -m(i, free[k]);
  }
  return basis;
}

RationalVec leading_minors(const QMatrix& sym) {
  RationalVec out;
  for (std::size_t k = 1; k <= sym.rows(); ++k) {
    QMatrix block(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) block(i, j) = sym(i, j);
    out.push_back(det_bareiss(block));
  }
  return out;
}

Inertia inertia(const QMatrix& sym) {
  if (!sym.is_symmetric()) throw Error(ErrorKind::InvalidInput, "inertia needs a symmetric matrix");
  QMatrix m = sym;
  const std::size_t n = m.rows();
  Inertia in;
  std::vector<bool> done(n, false);
  for (std::size_t step = 0; step < n; ++step) {
    // Pick a live index with nonzero diagonal; otherwise create one by a congruence.
    std::size_t p = n;
    for (std::size_t i = 0; i < n; ++i)
      if (!done[i] && sgn(m(i, i)) != 0) { p = i; break; }
    if (p == n) {
      std::size_t a = n, b = n;
      for (std::size_t i = 0; i < n && a == n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (!done[i] && !done[j] && sgn(m(i, j)) != 0) { a = i; b = j; break; }
      if (a == n) break;  // remaining block is zero
      // row_a += row_b, col_a += col_b
      for (std::size_t j = 0; j < n; ++j) m(a, j) += m(b, j);
      for (std::size_t i = 0; i < n; ++i) m(i, a) += m(i, b);
      p = a;
    }
    const Rational piv = m(p, p);
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i] || i == p || sgn(m(i, p)) == 0) continue;
      Rational f = m(i, p) / piv;
      for (std::size_t j = 0; j < n; ++j) m(i, j) -= f * m(p, j);
      for (std::size_t j = 0; j < n; ++j) m(j, i) = m(i, j);
    }
    done[p] = true;
    if (sgn(piv) > 0) ++in.positive; else ++in.negative;
  }
  for (std::size_t i = 0; i < n; ++i)
    if (!done[i]) ++in.zero;
  return in;
}

bool negative_definite(const QMatrix& sym) {
  auto minors = leading_minors(sym);
  for (std::size_t k = 0; k < minors.size(); ++k) {
    int want = (k % 2 == 0) ? -1 : 1;  // (-1)^(k+1) det_{k+1} > 0
    if (sgn(minors[k]) != want) return false;
  }
  return true;
}

bool positive_definite(const QMatrix& sym) {
  for (const auto& d : leading_minors(sym))
    if (sgn(d) <= 0) return false;
  return true;
}

}  // namespace bstab
