#ifndef EULERTOP_POLY_HPP
#define EULERTOP_POLY_HPP

#include <algorithm>
#include <climits>
#include <optional>
#include <utility>
#include <vector>

#include "eulertop/rational.hpp"

namespace eulertop {

template <class R>
class Poly;

template <class R>
bool is_zero(const Poly<R>& p);

// Ring hooks used by the generic polynomial and series code. A ring R must be
// constructible from a long (0 and 1 at least), support + - * and expose
// is_zero(R) and unit_inverse(R) through overloads found by ADL.
inline std::optional<Rational> unit_inverse(const Rational& r) {
  if (is_zero(r)) return std::nullopt;
  return Rational(1 / r);
}

// Dense univariate polynomial, lowest power first, never stores a trailing
// zero coefficient. The zero polynomial has degree kZeroDegree.
template <class R>
class Poly {
 public:
  using Coefficient = R;
  static constexpr int kZeroDegree = INT_MIN;

  Poly() = default;
  explicit Poly(long constant) : Poly(R(constant)) {}
  explicit Poly(R constant) {
    if (!eulertop::is_zero(constant)) coeffs_.push_back(std::move(constant));
  }
  explicit Poly(std::vector<R> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static Poly monomial(R c, int power) {
    if (eulertop::is_zero(c)) return Poly();
    std::vector<R> v(static_cast<std::size_t>(power) + 1, R(0));
    v.back() = std::move(c);
    return Poly(std::move(v));
  }
  static Poly variable() { return monomial(R(1), 1); }

  int degree() const {
    return coeffs_.empty() ? kZeroDegree : static_cast<int>(coeffs_.size()) - 1;
  }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  const std::vector<R>& coefficients() const { return coeffs_; }

  // Coefficient of x^i; zero outside the stored range.
  R coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return R(0);
    return coeffs_[static_cast<std::size_t>(i)];
  }

  Poly& operator+=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), R(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), R(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly& operator*=(const Rational& s) {
    if (eulertop::is_zero(s)) {
      coeffs_.clear();
      return *this;
    }
    for (auto& c : coeffs_) c *= s;
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<R> out(a.coeffs_.size() + b.coeffs_.size() - 1, R(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (eulertop::is_zero(a.coeffs_[i])) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        out[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return Poly(std::move(out));
  }
  friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
  friend Poly operator*(const Rational& s, Poly a) { return a *= s; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly derivative() const {
    if (coeffs_.size() <= 1) return Poly();
    std::vector<R> out(coeffs_.size() - 1, R(0));
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
      out[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
    }
    return Poly(std::move(out));
  }

  // p(-x).
  Poly reflected() const {
    Poly out = *this;
    for (std::size_t i = 1; i < out.coeffs_.size(); i += 2) out.coeffs_[i] = -out.coeffs_[i];
    return out;
  }

  // Horner evaluation at a point of the coefficient ring.
  R evaluate(const R& x) const {
    R acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc = acc * x + *it;
    }
    return acc;
  }

  // p(q(x)).
  Poly compose(const Poly& inner) const {
    Poly acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc = acc * inner + Poly(*it);
    }
    return acc;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && eulertop::is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  std::vector<R> coeffs_;
};

template <class R>
bool is_zero(const Poly<R>& p) {
  return p.is_zero();
}

// Units of R[x] are the units of R embedded as constants.
template <class R>
std::optional<Poly<R>> unit_inverse(const Poly<R>& p) {
  if (!p.is_constant() || p.is_zero()) return std::nullopt;
  auto inv = unit_inverse(p.coefficients().front());
  if (!inv) return std::nullopt;
  return Poly<R>(*inv);
}

// Polynomial in kappa with exact rational coefficients.
using KappaPoly = Poly<Rational>;

inline KappaPoly kappa() { return KappaPoly::variable(); }

}  // namespace eulertop

#endif  // EULERTOP_POLY_HPP
