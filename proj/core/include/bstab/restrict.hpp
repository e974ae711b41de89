#pragma once

#include <vector>

#include "bstab/charge.hpp"
#include "bstab/linalg.hpp"

namespace bstab {

/// f(x) - f(x - m).
QPoly difference_poly(const QPoly& f, const Rational& m);

/// Roots of prod(x - t_i) - prod(x - t_i - m); an infinite last entry is dropped and re-appended.
/// Throws SepViolation unless 0 < m < sep(t).
RootTuple xi(const RootTuple& t, const Rational& m);

/// xi applied with m_1 first, then m_2, ...; SepViolation names the failing stage.
RootTuple xi_multi(const RootTuple& t, const std::vector<Rational>& ms);

/// M[j][k] = (-1)^{j-k+1} m^{j-k}/(j-k)! for k < j; shape (n+1) x n, maps Lambda_{n-1} into Lambda_n.
QMatrix pushforward_matrix(int n, const Rational& m);

/// b o M as weights on Lambda_{n-1}.
RationalVec compose_pushforward(const RationalVec& weights, const QMatrix& M);

struct RestrictedCharge {
  CentralCharge z;     ///< Z o iota_* on Lambda_{n-1}
  Rational c1, c2;     ///< Z o iota_* = c1 B_{xi(s)} + i c2 B_{xi(t)}
  RootTuple s, t;      ///< xi_m of the input parameters
  bool exact_match = false;
  double residual = 0;  ///< max relative weight mismatch against the binary64 prediction
};

/// Composes both parts with the pushforward and matches them against xi_m of the parameters.
/// Throws InvalidInput (not in U_n), SepViolation (pencil sep <= m), DecompositionFailed.
RestrictedCharge restrict_charge(const CentralCharge& z, const Rational& m, const SepOptions& opt = {});

/// (t_1 + t_2 + m)/2, the surface to curve parameter divided by m.
Rational surface_xi(const Rational& t1, const Rational& t2, const Rational& m);
/// (2 sum t + 3m -+ sqrt(2 sum_{i<j} (t_i - t_j)^2 - 3m^2))/6 for a finite 3-tuple.
std::vector<double> threefold_xi(const std::vector<double>& t, double m);

}  // namespace bstab
