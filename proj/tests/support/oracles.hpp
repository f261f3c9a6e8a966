#ifndef EULERTOP_TESTS_ORACLES_HPP
#define EULERTOP_TESTS_ORACLES_HPP

// Slow reference implementations that share no code path with the library
// routines they check.

#include "eulertop/power_series.hpp"

namespace eulertop::testing {

// sum_k c_k g^k with explicit powers of g (no Horner).
template <class R>
TruncatedSeries<R> compose_by_powers(const TruncatedSeries<R>& f, const TruncatedSeries<R>& g) {
  const int n = std::min(f.order(), g.order());
  TruncatedSeries<R> power = TruncatedSeries<R>::constant(g.variable(), n, R(1));
  TruncatedSeries<R> acc(g.variable(), n);
  const TruncatedSeries<R> gt = g.truncated(n);
  for (int k = 0; k <= n; ++k) {
    for (int i = 0; i <= n; ++i) acc[i] += f[k] * power[i];
    power = mul(power, gt);
  }
  return acc;
}

// g = x - phi(g) iterated from g = x, where f(x) = x + phi(x); each pass
// fixes one more coefficient.
template <class R>
TruncatedSeries<R> revert_by_iteration(const TruncatedSeries<R>& f) {
  const int n = f.order();
  const Variable v = dual(f.variable());
  TruncatedSeries<R> phi = f.with_variable(v);
  phi[1] = R(0);
  const TruncatedSeries<R> x = TruncatedSeries<R>::identity(v, n);
  TruncatedSeries<R> g = x;
  for (int it = 0; it < n; ++it) g = x - compose_by_powers(phi, g);
  return g;
}

// log(1 + v) = sum (-1)^(k+1) v^k / k for v(0) = 0.
template <class R>
TruncatedSeries<R> log_one_plus(const TruncatedSeries<R>& v) {
  const int n = v.order();
  TruncatedSeries<R> acc(v.variable(), n);
  TruncatedSeries<R> power = v;
  for (int k = 1; k <= n; ++k) {
    const Rational c(k % 2 == 1 ? 1 : -1, k);
    acc += power * c;
    power = mul(power, v);
  }
  return acc;
}

}  // namespace eulertop::testing

#endif  // EULERTOP_TESTS_ORACLES_HPP
