#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bstab/charge.hpp"
#include "bstab/interlace.hpp"
#include "bstab/linalg.hpp"

namespace bstab {

/// Symmetric bilinear form; Q(v) = v^T G v and P(u, v) = u^T G v.
struct QuadraticForm {
  QMatrix gram;
  std::string provenance;
  RationalVec alphas;  ///< per recursion level, outermost first (q_tilde only)

  int ambient() const { return static_cast<int>(gram.rows()) - 1; }
  Rational eval(const RationalVec& v) const;
  Rational pair(const RationalVec& u, const RationalVec& v) const;
};

/// Gram of the product of two functionals, (u w^T + w u^T) / 2.
QMatrix sym_product(const RationalVec& u, const RationalVec& w);
/// Zero-extends a form on Lambda_m to Lambda_n (n >= m) along e_{m+1}, ..., e_n.
QMatrix embed(const QMatrix& g, std::size_t size);

/// B~ = sum_{k>=1} k a_{k-1} e*_k.
RationalVec tilde(const RationalVec& weights);

/// The ingredients of Q_l.
struct LineCharges {
  RationalVec b_line;     ///< B_l: the member with infinite last parameter
  RationalVec b_project;  ///< B_{pi(l)} embedded into Lambda_n^*
};
LineCharges line_charges(const Pencil& l);

/// Q_l = B_l B~_{pi(l)} - B_{pi(l)} B~_l.
QuadraticForm q_line(const Pencil& l);

struct SupportOptions {
  int t_samples = 100;       ///< check (a), including +inf
  int member_samples = 50;   ///< check (c)
  double margin = 1e-12;     ///< relative floor for (c), above the rounding noise of sampled roots
  double vanish_tol = 1e-8;  ///< relative tolerance for (a)
};

struct SupportReport {
  bool vanishing = false;       ///< (a)
  bool kernel_negdef = false;   ///< (b)
  bool alternating = false;     ///< (c)
  double max_vanish_residual = 0;
  double min_alternating_ratio = 0;
  std::string witness;
  bool pass() const { return vanishing && kernel_negdef && alternating; }
};

SupportReport verify_support(const QuadraticForm& q, const Pencil& l, const SupportOptions& opt = {});

struct QTildeOptions {
  int max_doublings = 60;
  SupportOptions verify;
};

/// Recursive construction alpha Q_l + Q~_{pi(l)}; alpha doubled from 1 until verify_support passes.
QuadraticForm q_tilde(const Pencil& l, const QTildeOptions& opt = {});

/// Gram inverse.
QuadraticForm dual_form(const QuadraticForm& q);

struct WQReport {
  bool in_w = false;           ///< dual-form criterion
  bool kernel_negdef = false;  ///< direct criterion on Ker Z
  Rational qf, qg, qfg;
};

/// Z = g + i f is in W(Q) iff Q*(f,g)^2 < Q*(f) Q*(g) and Q*(f) > 0. Needs signature (2, rho-2).
WQReport in_WQ(const CentralCharge& z, const QuadraticForm& q);

struct DeformReport {
  QuadraticForm form;
  Rational D, D1, D2, epsilon, lambda;
  bool signature_ok = false;
  bool first_containment = false;   ///< Ker h with Ker(f1 + t f2) inside neg(Q~)
  bool second_containment = false;  ///< neg(Q~) inside M_d union neg(Q)
  int samples = 0;
  std::string witness;
};

/// The deformation of a form along three independent functionals, with a sampled check of
/// Ker h cap (union_{0<=t<=N} Ker(f1 + t f2)) in neg(Q~) in M_d cup neg(Q).
DeformReport deform_form(const RationalVec& h, const RationalVec& f1, const RationalVec& f2,
                         const QuadraticForm& q, const Rational& d, const Rational& N,
                         int samples = 10000, std::uint64_t seed = 0);

}  // namespace bstab
