#ifndef EULERTOP_LOG_SERIES_HPP
#define EULERTOP_LOG_SERIES_HPP

#include "eulertop/power_series.hpp"

namespace eulertop {

// L(x) log|x| + R(x) with L and R sharing variable and order. The absolute
// value lets the same algebra serve both signs of x; callers that care about
// the branch keep the sign themselves.
template <class R>
struct LogSeriesT {
  TruncatedSeries<R> log_part;
  TruncatedSeries<R> regular;

  LogSeriesT(TruncatedSeries<R> l, TruncatedSeries<R> r) : log_part(std::move(l)), regular(std::move(r)) {
    log_part.require_same_variable(regular);
    if (log_part.order() != regular.order()) {
      const int n = std::min(log_part.order(), regular.order());
      log_part = log_part.truncated(n);
      regular = regular.truncated(n);
    }
  }

  Variable variable() const { return regular.variable(); }
  int order() const { return regular.order(); }

  friend LogSeriesT operator+(const LogSeriesT& a, const LogSeriesT& b) {
    return {a.log_part + b.log_part, a.regular + b.regular};
  }
  friend LogSeriesT operator-(const LogSeriesT& a, const LogSeriesT& b) {
    return {a.log_part - b.log_part, a.regular - b.regular};
  }
  friend LogSeriesT operator-(const LogSeriesT& a) { return {-a.log_part, -a.regular}; }
  friend LogSeriesT operator*(const LogSeriesT& a, const Rational& s) {
    return {a.log_part * s, a.regular * s};
  }
  friend bool operator==(const LogSeriesT& a, const LogSeriesT& b) {
    return a.log_part == b.log_part && a.regular == b.regular;
  }
};

using LogSeries = LogSeriesT<KappaPoly>;

// Antiderivative vanishing as x -> 0: for L = sum l_n x^n,
//   int l_n x^n log x = l_n x^(n+1) log x / (n+1) - l_n x^(n+1) / (n+1)^2.
template <class R>
LogSeriesT<R> integrate_termwise(const LogSeriesT<R>& f) {
  TruncatedSeries<R> log_part = integrate_termwise(f.log_part);
  TruncatedSeries<R> regular = integrate_termwise(f.regular);
  for (int n = 0; n <= f.log_part.order(); ++n) {
    regular[n + 1] -= f.log_part[n] * Rational(1, (n + 1) * (n + 1));
  }
  return {std::move(log_part), std::move(regular)};
}

// f(inner(x)) with log|inner(x)| split as log|x| + log(inner(x)/x); the second
// piece is a regular series because inner(x)/x is a unit with constant term 1.
template <class R>
LogSeriesT<R> compose_with_log(const LogSeriesT<R>& f, const TruncatedSeries<R>& inner) {
  if (inner.order() < 1 || !is_zero(inner[0]) || inner[1] != R(1)) {
    throw UsageError("compose_with_log needs inner(0) = 0 and inner'(0) = 1");
  }
  TruncatedSeries<R> l = compose(f.log_part, inner);
  TruncatedSeries<R> r = compose(f.regular, inner);
  TruncatedSeries<R> log_unit = log_of_unit(divide_by_variable(inner));  // order n-1
  // l * log_unit is exact through the order of l when l(0) = 0.
  TruncatedSeries<R> correction(l.variable(), l.order());
  if (is_zero(l[0])) {
    TruncatedSeries<R> l_shift = divide_by_variable(l);
    TruncatedSeries<R> prod = mul(l_shift, log_unit);
    for (int k = 0; k <= prod.order(); ++k) correction[k + 1] = prod[k];
  } else {
    TruncatedSeries<R> prod = mul(l.truncated(l.order() - 1), log_unit);
    correction = prod;
    l = l.truncated(prod.order());
    r = r.truncated(prod.order());
  }
  return {std::move(l), r + correction};
}

}  // namespace eulertop

#endif  // EULERTOP_LOG_SERIES_HPP
