#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "bstab/interlace.hpp"

namespace bstab::testing {

using Rng = std::mt19937_64;

/// Uniform p/den with p an integer in [lo*den, hi*den].
Rational rational_in(Rng& rng, long lo, long hi, long den);
/// Uniform integer in [lo, hi].
long int_in(Rng& rng, long lo, long hi);
bool coin(Rng& rng, double p);

/// k strictly increasing rationals starting in [lo, lo+2] with consecutive gaps in [min_gap, min_gap + extra].
RationalVec increasing(Rng& rng, std::size_t k, long lo, const Rational& min_gap, long extra, long den);

/// Random tuple in Sbr_n with rational entries; last entry infinite with probability p_inf (n >= 2).
RootTuple random_tuple(Rng& rng, int n, double p_inf = 0.25, long den = 8);

/// Interlaced pair s < t < s[1] from one increasing sequence; t may end at +inf.
std::pair<RootTuple, RootTuple> interlaced_tuples(Rng& rng, int n, double p_inf = 0.25, long den = 8);

/// c * prod (x - r_i) scaled so that every coefficient lies in [-bound, bound].
QPoly scaled_into(const QPoly& p, const Rational& bound, Rng& rng);

}  // namespace bstab::testing
