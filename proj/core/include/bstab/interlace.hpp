#pragma once

#include <limits>
#include <optional>
#include <vector>

#include "bstab/qpoly.hpp"
#include "bstab/rational.hpp"
#include "bstab/roots.hpp"

namespace bstab {

inline constexpr double kPlusInfinity = std::numeric_limits<double>::infinity();

/// Strictly increasing parameters t_1 < ... < t_n, only t_n may be +inf.
/// Entries are stored as rationals; `exact` is false when they came from root extraction.
class RootTuple {
 public:
  RootTuple() = default;
  RootTuple(RationalVec finite, bool infinite_last, bool exact = true);
  static RootTuple from_doubles(const std::vector<double>& finite, bool infinite_last);

  std::size_t n() const { return finite_.size() + (inf_ ? 1 : 0); }
  bool infinite_last() const { return inf_; }
  bool exact() const { return exact_; }
  const RationalVec& finite() const { return finite_; }
  /// Entry i (0-based) as a double, +inf for the infinite slot.
  double at(std::size_t i) const;
  std::vector<double> doubles() const;
  /// Rounds every finite entry to a nearby rational with short denominator.
  RootTuple rounded(unsigned bits = 64) const;

  friend bool operator==(const RootTuple& a, const RootTuple& b) {
    return a.inf_ == b.inf_ && a.finite_ == b.finite_;
  }

 private:
  RationalVec finite_;
  bool inf_ = false;
  bool exact_ = true;
};

/// s_1 < t_1 < s_2 < t_2 < ... < s_n < t_n, i.e. s < t < s[1].
bool precedes_interlaced(const RootTuple& s, const RootTuple& t);
/// s < t < s[1] or t < s < t[1].
bool tuples_interlaced(const RootTuple& s, const RootTuple& t);
/// Minimum gap between finite entries, +inf with fewer than two.
double sep(const RootTuple& t);

/// Member of B_n: rational coefficients, degree n or n-1, distinct real roots.
class Polynomial {
 public:
  Polynomial() = default;
  /// Certifies membership: exact Sturm count and square-freeness, then numeric roots.
  Polynomial(QPoly p, int ambient, const RootOptions& opt = {});
  static Polynomial from_coeffs(const RationalVec& c, int ambient) { return Polynomial(QPoly(c), ambient); }

  int ambient() const { return n_; }
  int degree() const { return p_.degree(); }
  const QPoly& poly() const { return p_; }
  const RootTuple& roots() const { return roots_; }

 private:
  friend Polynomial roots_to_poly(const RootTuple& t);
  QPoly p_;
  int n_ = 0;
  RootTuple roots_;
};

/// Projective line spanned by two interlaced members of B_n.
class Pencil {
 public:
  Pencil() = default;
  /// Throws AmbientMismatch, DegenerateInput (dependent or not interlaced).
  Pencil(Polynomial a, Polynomial b);

  int ambient() const { return a_.ambient(); }
  const Polynomial& gen_a() const { return a_; }
  const Polynomial& gen_b() const { return b_; }
  QPoly member(const Rational& a, const Rational& b) const;
  /// Member cos(theta) A + sin(theta) B in binary64 with generators scaled to unit max-norm.
  std::vector<double> member_at(double theta) const;

 private:
  Polynomial a_, b_;
  std::vector<double> da_, db_;
};

struct SepOptions {
  int angles = 720;
  double refine_tol = 1e-10;
};

struct SepResult {
  double value = kPlusInfinity;
  double theta = 0;  ///< angle of the minimizing member
  bool certified = false;  ///< sampling never certifies the minimum
};

Polynomial roots_to_poly(const RootTuple& t);
RootTuple poly_to_roots(const Polynomial& f);
bool is_interlaced(const Polynomial& f, const Polynomial& g);
/// f |> g: interlaced and g negative at the largest root of f (leading coefficient if deg f = n-1).
bool lhd(const Polynomial& f, const Polynomial& g);
double sep(const Polynomial& f);
/// sep of a member given by binary64 coefficients; 0 if root extraction fails.
double sep_of_coeffs(const std::vector<double>& c);
SepResult sep_pencil(const Pencil& l, const SepOptions& opt = {});
Polynomial pencil_canonical(const Pencil& l);
/// Uses the monic degree-n member f + c f_l as the lift; the result is independent of c.
Pencil pencil_project(const Pencil& l, const Rational& c = 0);
/// True if both pencils span the same 2-dimensional space of polynomials.
bool same_line(const Pencil& a, const Pencil& b);
Polynomial member_with_root(const Pencil& l, const Rational& r);
Pencil shift_pencil(const Polynomial& f, const Rational& m);

struct ShiftSearch {
  int max_doublings = 40;
  SepOptions sep;
};

struct ShiftResult {
  Rational N;
  double achieved_sep = 0;
  int doublings = 0;
};

ShiftResult stabilizing_shift(const Polynomial& f, const Polynomial& g, double d,
                              const ShiftSearch& opt = {});

}  // namespace bstab
