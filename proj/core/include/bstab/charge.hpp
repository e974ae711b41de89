#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bstab/interlace.hpp"
#include "bstab/rational.hpp"

namespace bstab {

/// (v_0, ..., v_n) = (H^n ch_0, H^{n-1} ch_1, ..., ch_n).
struct LatticeVector {
  RationalVec coords;
  int ambient() const { return static_cast<int>(coords.size()) - 1; }
};

/// Linear functional on Lambda_n given by weights against e*_0, ..., e*_n.
struct ReducedCharge {
  RationalVec weights;
  /// Present when the functional is known to equal scale * B_t.
  std::optional<Rational> scale;
  std::optional<RootTuple> tuple;
  int ambient() const { return static_cast<int>(weights.size()) - 1; }
};

/// Real part + i * imaginary part.
struct CentralCharge {
  ReducedCharge re;
  ReducedCharge im;
};

/// gamma_n(t) = (1, t, t^2/2!, ..., t^n/n!).
LatticeVector gamma(const Rational& t, int n);
/// gamma_n(+inf) = (0, ..., 0, 1).
LatticeVector gamma_inf(int n);
/// gamma_n of entry i of a tuple (handles the infinite slot).
LatticeVector gamma_entry(const RootTuple& t, std::size_t i);
/// Binary64 gamma for irrational sample points.
std::vector<double> gamma_double(double t, int n);

/// C_t = prod_{k<n} k! / prod_{i<j} (t_j - t_i) for finite t.
Rational normalizer(const RationalVec& finite);

/// v -> C_t det(gamma(t_1); ...; gamma(t_n); v), computed by cofactor expansion
/// with Bareiss minors; infinite last entry reduces to -B_{t_1..t_{n-1}}.
ReducedCharge reduced_charge(const RootTuple& t);

/// Binary64 weights of B_t from the coefficients of prod (x - t_i) (irrational parameters).
std::vector<double> charge_weights_double(const std::vector<double>& finite, bool infinite_last);

Rational eval_charge(const ReducedCharge& b, const LatticeVector& v);
Rational eval_weights(const RationalVec& w, const RationalVec& v);

/// sum a_k x^k  <->  sum k! a_k e*_k, without normalization (a linear isomorphism).
RationalVec weights_of_poly(const QPoly& f, int n);
QPoly poly_of_weights(const RationalVec& w);

/// f in B_n -> the charge c B_t with c = lead(f): scale 1/n! for degree n, -1/(n-1)! for degree n-1.
ReducedCharge charge_of_poly(const Polynomial& f);
/// Inverse of charge_of_poly (as a raw polynomial; may fail to lie in B_n).
QPoly poly_of_charge(const ReducedCharge& b);

struct BnMembership {
  bool member = false;
  Rational c;
  std::optional<RootTuple> t;
  double sep = 0;
  std::string reason;
};

/// B = c B_t with c > 0, t in Sbr_n, sep(t) > d.
BnMembership in_Bn(const ReducedCharge& b, double d);

struct UnMembership {
  bool member = false;
  Rational c1, c2;
  std::optional<RootTuple> s, t;
  double pencil_sep = 0;
  bool certified = false;
  std::string reason;
};

/// Z = c1 B_s + i c2 B_t with c2 > 0, s and t interlaced with the orientation fixed by sign(c1),
/// and sep(l(s,t)) > d.
UnMembership in_Un(const CentralCharge& z, double d, const SepOptions& opt = {});

enum class SignVerdict { AllNonneg, AllNonpos, Mixed };
const char* verdict_name(SignVerdict v);

struct Decomposition {
  RationalVec a;  ///< v = sum (-1)^i a_i gamma(t_i), i = 1..n
  SignVerdict verdict = SignVerdict::AllNonneg;
  bool boundary = false;  ///< some 0 < |a_i| < 1e-8
};

Decomposition decompose(const LatticeVector& v, const RootTuple& t);

/// The unique member of the pencil whose charge vanishes on v, as its root tuple.
RootTuple kernel_parameter(const Pencil& l, const LatticeVector& v);

}  // namespace bstab
