#include "bstab_test/generators.hpp"

#include <algorithm>

namespace bstab::testing {

long int_in(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

bool coin(Rng& rng, double p) { return std::uniform_real_distribution<double>(0, 1)(rng) < p; }

Rational rational_in(Rng& rng, long lo, long hi, long den) {
  Rational q(int_in(rng, lo * den, hi * den), den);
  q.canonicalize();
  return q;
}

RationalVec increasing(Rng& rng, std::size_t k, long lo, const Rational& min_gap, long extra, long den) {
  RationalVec out;
  Rational x = rational_in(rng, lo, lo + 2, den);
  for (std::size_t i = 0; i < k; ++i) {
    if (i > 0) x += min_gap + rational_in(rng, 0, extra, den);
    out.push_back(x);
  }
  return out;
}

RootTuple random_tuple(Rng& rng, int n, double p_inf, long den) {
  bool inf = n >= 2 && coin(rng, p_inf);
  std::size_t k = static_cast<std::size_t>(n) - (inf ? 1 : 0);
  RationalVec v = increasing(rng, k, -4, ratio(1, den), 3, den);
  return RootTuple(v, inf);
}

std::pair<RootTuple, RootTuple> interlaced_tuples(Rng& rng, int n, double p_inf, long den) {
  bool inf = coin(rng, p_inf);
  std::size_t total = 2 * static_cast<std::size_t>(n) - (inf ? 1 : 0);
  RationalVec v = increasing(rng, total, -5, ratio(1, den), 2, den);
  RationalVec s, t;
  for (std::size_t i = 0; i < total; ++i) (i % 2 == 0 ? s : t).push_back(v[i]);
  return {RootTuple(s, false), RootTuple(t, inf)};
}

QPoly scaled_into(const QPoly& p, const Rational& bound, Rng& rng) {
  Rational mx = 0;
  for (const auto& c : p.coeffs()) mx = std::max<Rational>(mx, abs(c));
  Rational u = rational_in(rng, 1, 8, 1) / 8;
  if (coin(rng, 0.5)) u = -u;
  return p * (bound * u / mx);
}

}  // namespace bstab::testing
