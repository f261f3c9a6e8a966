#ifndef EULERTOP_POWER_SERIES_HPP
#define EULERTOP_POWER_SERIES_HPP

#include <string>
#include <utility>
#include <vector>

#include "eulertop/errors.hpp"
#include "eulertop/poly.hpp"
#include "eulertop/rational.hpp"

namespace eulertop {

// Formal variable of a series: the scaled energy h or the normal-form action J.
enum class Variable { h, J };

inline const char* to_string(Variable v) { return v == Variable::h ? "h" : "J"; }
inline Variable dual(Variable v) { return v == Variable::h ? Variable::J : Variable::h; }

// Power series sum_{n=0}^{order} c_n x^n known through x^order. Truncation
// order is explicit state; binary operations truncate to the smaller order.
template <class R>
class TruncatedSeries {
 public:
  using Coefficient = R;

  TruncatedSeries(Variable var, int order) : var_(var) {
    if (order < 0) throw UsageError("series order must be >= 0");
    c_.assign(static_cast<std::size_t>(order) + 1, R(0));
  }
  TruncatedSeries(Variable var, std::vector<R> coeffs) : var_(var), c_(std::move(coeffs)) {
    if (c_.empty()) throw UsageError("series needs at least one coefficient");
  }

  // x + O(x^(order+1)).
  static TruncatedSeries identity(Variable var, int order) {
    TruncatedSeries s(var, order);
    if (order >= 1) s.c_[1] = R(1);
    return s;
  }
  static TruncatedSeries constant(Variable var, int order, R value) {
    TruncatedSeries s(var, order);
    s.c_[0] = std::move(value);
    return s;
  }

  Variable variable() const { return var_; }
  int order() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<R>& coefficients() const { return c_; }
  const R& operator[](int n) const { return c_.at(static_cast<std::size_t>(n)); }
  R& operator[](int n) { return c_.at(static_cast<std::size_t>(n)); }

  // Index of the first nonzero coefficient, order()+1 for the zero series.
  int valuation() const {
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (!is_zero(c_[i])) return static_cast<int>(i);
    }
    return order() + 1;
  }
  bool is_zero_series() const { return valuation() > order(); }

  TruncatedSeries truncated(int order) const {
    if (order > this->order()) throw UsageError("cannot extend a truncated series");
    return TruncatedSeries(var_, std::vector<R>(c_.begin(), c_.begin() + order + 1));
  }
  TruncatedSeries with_variable(Variable var) const {
    TruncatedSeries s = *this;
    s.var_ = var;
    return s;
  }

  template <class F>
  auto map_coefficients(F&& f) const {
    using Out = decltype(f(c_[0]));
    std::vector<Out> out;
    out.reserve(c_.size());
    for (const auto& c : c_) out.push_back(f(c));
    return TruncatedSeries<Out>(var_, std::move(out));
  }

  TruncatedSeries& operator+=(const TruncatedSeries& o) {
    require_same_variable(o);
    if (o.order() < order()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  TruncatedSeries& operator-=(const TruncatedSeries& o) {
    require_same_variable(o);
    if (o.order() < order()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  TruncatedSeries& operator*=(const Rational& s) {
    for (auto& c : c_) c = c * s;
    return *this;
  }

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator-(TruncatedSeries a) {
    for (auto& c : a.c_) c = -c;
    return a;
  }
  friend TruncatedSeries operator*(TruncatedSeries a, const Rational& s) { return a *= s; }
  friend TruncatedSeries operator*(const Rational& s, TruncatedSeries a) { return a *= s; }
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.var_ == b.var_ && a.c_ == b.c_;
  }
  friend bool operator!=(const TruncatedSeries& a, const TruncatedSeries& b) { return !(a == b); }

  void require_same_variable(const TruncatedSeries& o) const {
    if (o.var_ != var_) {
      throw UsageError(std::string("series variable mismatch: ") + eulertop::to_string(var_) +
                       " vs " + eulertop::to_string(o.var_));
    }
  }

 private:
  Variable var_;
  std::vector<R> c_;
};

// Series in h or J over polynomials in kappa.
using PowerSeries = TruncatedSeries<KappaPoly>;
// Same, specialised to a fixed rational kappa.
using RationalSeries = TruncatedSeries<Rational>;

// Every coefficient times a ring element.
template <class R>
TruncatedSeries<R> scale(TruncatedSeries<R> f, const R& s) {
  std::vector<R> c = f.coefficients();
  for (auto& x : c) x = x * s;
  return TruncatedSeries<R>(f.variable(), std::move(c));
}

// Cauchy product truncated at min(order(f), order(g)).
template <class R>
TruncatedSeries<R> mul(const TruncatedSeries<R>& f, const TruncatedSeries<R>& g) {
  f.require_same_variable(g);
  const int n = std::min(f.order(), g.order());
  std::vector<R> out(static_cast<std::size_t>(n) + 1, R(0));
  for (int i = 0; i <= n; ++i) {
    if (is_zero(f[i])) continue;
    for (int j = 0; i + j <= n; ++j) {
      if (is_zero(g[j])) continue;
      out[static_cast<std::size_t>(i + j)] += f[i] * g[j];
    }
  }
  return TruncatedSeries<R>(f.variable(), std::move(out));
}

template <class R>
TruncatedSeries<R> operator*(const TruncatedSeries<R>& f, const TruncatedSeries<R>& g) {
  return mul(f, g);
}

// Term-by-term derivative; the order drops by one.
template <class R>
TruncatedSeries<R> differentiate(const TruncatedSeries<R>& f) {
  if (f.order() < 1) throw UsageError("cannot differentiate an order-0 series");
  std::vector<R> out;
  out.reserve(static_cast<std::size_t>(f.order()));
  for (int n = 1; n <= f.order(); ++n) out.push_back(f[n] * Rational(n));
  return TruncatedSeries<R>(f.variable(), std::move(out));
}

// Antiderivative with zero constant term; the order grows by one.
template <class R>
TruncatedSeries<R> integrate_termwise(const TruncatedSeries<R>& f) {
  std::vector<R> out;
  out.reserve(static_cast<std::size_t>(f.order()) + 2);
  out.push_back(R(0));
  for (int n = 0; n <= f.order(); ++n) out.push_back(f[n] * Rational(1, n + 1));
  return TruncatedSeries<R>(f.variable(), std::move(out));
}

// f(x)/x for f(0) = 0; the order drops by one.
template <class R>
TruncatedSeries<R> divide_by_variable(const TruncatedSeries<R>& f) {
  if (!is_zero(f[0])) throw UsageError("divide_by_variable needs f(0) = 0");
  if (f.order() < 1) throw UsageError("divide_by_variable needs order >= 1");
  return TruncatedSeries<R>(f.variable(), std::vector<R>(f.coefficients().begin() + 1, f.coefficients().end()));
}

// 1/f for a unit constant term.
template <class R>
TruncatedSeries<R> reciprocal(const TruncatedSeries<R>& f) {
  auto inv0 = unit_inverse(f[0]);
  if (!inv0) throw UsageError("reciprocal needs a unit constant term");
  const int n = f.order();
  std::vector<R> out(static_cast<std::size_t>(n) + 1, R(0));
  out[0] = *inv0;
  for (int k = 1; k <= n; ++k) {
    R acc(0);
    for (int j = 1; j <= k; ++j) {
      if (is_zero(f[j])) continue;
      acc += f[j] * out[static_cast<std::size_t>(k - j)];
    }
    out[static_cast<std::size_t>(k)] = -(acc * *inv0);
  }
  return TruncatedSeries<R>(f.variable(), std::move(out));
}

// log f for f(0) = 1, computed as the integral of f'/f.
template <class R>
TruncatedSeries<R> log_of_unit(const TruncatedSeries<R>& f) {
  if (f[0] != R(1)) throw UsageError("log_of_unit needs f(0) = 1");
  if (f.order() == 0) return TruncatedSeries<R>(f.variable(), 0);
  return integrate_termwise(mul(differentiate(f), reciprocal(f)));
}

// outer(inner(x)) truncated at min(order(outer), order(inner)). The result is
// a series in the variable of inner.
template <class R>
TruncatedSeries<R> compose(const TruncatedSeries<R>& outer, const TruncatedSeries<R>& inner) {
  if (!is_zero(inner[0])) throw UsageError("compose needs inner(0) = 0");
  const int n = std::min(outer.order(), inner.order());
  const TruncatedSeries<R> in = inner.truncated(n);
  TruncatedSeries<R> acc = TruncatedSeries<R>::constant(in.variable(), n, outer[n]);
  for (int k = n - 1; k >= 0; --k) {
    acc = mul(acc, in);
    acc[0] += outer[k];
  }
  return acc;
}

// Compositional inverse g with f(g(x)) = g(f(x)) = x, by Lagrange inversion:
// [x^n] g = (1/n) [w^(n-1)] (w / f(w))^n. The result lives in the dual
// variable (a series in h reverts to a series in J and vice versa).
template <class R>
TruncatedSeries<R> revert(const TruncatedSeries<R>& f) {
  if (f.order() < 1) throw SingularReversionError("reversion needs order >= 1");
  if (!is_zero(f[0])) throw SingularReversionError("reversion needs f(0) = 0");
  if (!unit_inverse(f[1])) throw SingularReversionError("reversion needs a unit linear coefficient");
  const int n = f.order();
  const TruncatedSeries<R> phi = reciprocal(divide_by_variable(f));  // order n-1
  std::vector<R> out(static_cast<std::size_t>(n) + 1, R(0));
  TruncatedSeries<R> power = phi;
  for (int k = 1; k <= n; ++k) {
    if (k > 1) power = mul(power, phi);
    out[static_cast<std::size_t>(k)] = power[k - 1] * Rational(1, k);
  }
  return TruncatedSeries<R>(dual(f.variable()), std::move(out));
}

// Evaluates a truncated series at a point of the coefficient ring.
template <class R>
R evaluate(const TruncatedSeries<R>& f, const R& x) {
  R acc(0);
  for (int k = f.order(); k >= 0; --k) acc = acc * x + f[k];
  return acc;
}

// Specialises every kappa-polynomial coefficient at an exact kappa.
inline RationalSeries at_kappa(const PowerSeries& f, const Rational& k) {
  return f.map_coefficients([&](const KappaPoly& p) { return p.evaluate(k); });
}

// Coefficientwise kappa -> -kappa.
inline PowerSeries reflect_kappa(const PowerSeries& f) {
  return f.map_coefficients([](const KappaPoly& p) { return p.reflected(); });
}

}  // namespace eulertop

#endif  // EULERTOP_POWER_SERIES_HPP
