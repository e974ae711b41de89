#pragma once

#include <vector>

namespace bstab {

struct RootOptions {
  /// Two roots closer than this, relative to max(1, root spread), are not distinct.
  double distinct_tol = 1e-9;
  /// Eigenvalues with |imag| above this, relative to max(1, |root|), are complex.
  double imag_tol = 1e-7;
};

/// Sorted real roots of sum c[k] x^k (leading coefficient nonzero).
/// Companion-matrix eigenvalues, then Newton polishing in extended precision.
/// Throws ComplexRoots or NotDistinctRoots.
std::vector<double> real_roots(const std::vector<double>& coeffs, const RootOptions& opt = {});

/// Same, but returns false instead of throwing.
bool try_real_roots(const std::vector<double>& coeffs, std::vector<double>& out,
                    const RootOptions& opt = {});

}  // namespace bstab
