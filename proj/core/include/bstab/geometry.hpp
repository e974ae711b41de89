#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bstab/charge.hpp"
#include "bstab/linalg.hpp"
#include "bstab/quadform.hpp"

namespace bstab {

/// ch_k^beta = sum_{j<=k} (-beta)^{k-j}/(k-j)! v_j on polarized coordinates.
Rational twisted_chern(const LatticeVector& v, const Rational& beta, int k);
double twisted_chern(const LatticeVector& v, double beta, int k);
/// Weights of the functional v -> ch_k^beta(v).
RationalVec twisted_functional(int n, const Rational& beta, int k);

/// v_1^2 - 2 v_0 v_2 (ambient 2 or 3).
Rational delta_H(const LatticeVector& v);
/// 4 (ch_2^beta)^2 - 6 ch_1^beta ch_3^beta (ambient 3).
Rational nabla_beta(const LatticeVector& v, const Rational& beta);
Rational q_K_beta(const LatticeVector& v, const Rational& K, const Rational& beta);

QMatrix delta_gram(int n);
QMatrix nabla_gram(const Rational& beta);

struct FamilyReport {
  Rational K_lo, K_hi, beta;
  int grid = 0;
  bool all_K_nonneg = false;
  std::optional<Rational> failing_K;
  SignVerdict verdict = SignVerdict::AllNonneg;
  bool boundary = false;
  bool agree = false;
};

/// Compares K Delta_H + nabla^beta >= 0 over a K grid with the sign verdict of decompose.
/// Defaults: beta = t_2 and K in [0, -(t_1 - t_2)(t_3 - t_2)].
FamilyReport family_equiv_check(const LatticeVector& v, const RootTuple& t,
                                std::optional<std::pair<Rational, Rational>> K_interval = std::nullopt,
                                std::optional<Rational> beta = std::nullopt, int grid = 64);

struct ThreefoldParams {
  Rational alpha, beta, a, b;
  bool valid() const;
};

/// Re = -ch_3^beta + b ch_2^beta + a ch_1^beta, Im = ch_2^beta - alpha^2/2 ch_0. Throws InvalidParams.
CentralCharge threefold_charge(const ThreefoldParams& p);

struct ThreefoldRoots {
  std::vector<double> re;  ///< three finite roots, sorted
  std::vector<double> im;  ///< beta - alpha, beta + alpha (third root +inf)
};
/// Closed-form kernel parameters of both parts.
ThreefoldRoots threefold_roots(const ThreefoldParams& p);

struct PartialParams {
  ThreefoldParams p;
  bool alpha_defaulted = false;
  bool ab_defaulted = false;
};

/// Length 2: alpha, beta from the imaginary roots (b = 0, a = alpha^2/2 by default).
/// Length 3: beta = t_2, b and a from the real roots (alpha = min gap / 2 by default).
PartialParams params_from_tuples(const RootTuple& t);

/// (validity inequality, real kernel tuple strictly precedes the imaginary one).
std::pair<bool, bool> validity_iff_interlaced(const ThreefoldParams& p);

/// Neron-Severi lattice with a symmetric intersection form of signature (1, rho-1).
class NSLattice {
 public:
  explicit NSLattice(QMatrix gram);
  std::size_t rank() const { return g_.rows(); }
  const QMatrix& gram() const { return g_; }
  Rational dot(const RationalVec& a, const RationalVec& b) const;

 private:
  QMatrix g_;
};

struct NSVector {
  Rational r;
  RationalVec D;
  Rational s;
  friend bool operator==(const NSVector& a, const NSVector& b) { return a.r == b.r && a.D == b.D && a.s == b.s; }
};

/// Delta(v, w) = D D' - r s' - r' s.
Rational ab_delta(const NSLattice& L, const NSVector& v, const NSVector& w);
Rational ab_delta(const NSLattice& L, const NSVector& v);
/// v e^G = (r, D + rG, s + DG + rG^2/2).
NSVector ab_twist(const NSLattice& L, const NSVector& v, const RationalVec& G);

/// Delta(v, w)^2 < Delta(v) Delta(w).
bool criterion_neg_def(const NSLattice& L, const NSVector& v, const NSVector& w);
/// 0 < r^2 G^2 < 4 Delta(v).
bool criterion_bayer_step(const NSLattice& L, const NSVector& v, const RationalVec& G);

struct RestrictCriterion {
  bool setup = false;     ///< D1^2 - 2 s1 > 0, D2^2 > 0, (D1 D2 - s2)^2 < (D1^2 - 2 s1) D2^2
  bool restricts = false; ///< D2^2 H^2 + (D1 D2 - s2)^2 < (D1^2 - 2 s1) D2^2
};
/// v = (1, D1, s1), w = (0, D2, s2). Effectivity of D2 is not checked.
RestrictCriterion criterion_restrict(const NSLattice& L, const NSVector& v, const NSVector& w, const RationalVec& H);

}  // namespace bstab
