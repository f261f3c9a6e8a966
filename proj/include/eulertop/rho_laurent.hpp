#ifndef EULERTOP_RHO_LAURENT_HPP
#define EULERTOP_RHO_LAURENT_HPP

#include <map>
#include <string>

#include "eulertop/poly.hpp"
#include "eulertop/rational.hpp"

namespace eulertop {

// Laurent polynomial in rho with rational coefficients. Exponents may be
// negative; zero coefficients are never stored.
class RhoLaurent {
 public:
  RhoLaurent() = default;
  explicit RhoLaurent(long constant) : RhoLaurent(Rational(constant)) {}
  explicit RhoLaurent(const Rational& constant) { add_term(0, constant); }

  static RhoLaurent monomial(const Rational& c, int exponent);
  static RhoLaurent rho() { return monomial(Rational(1), 1); }

  const std::map<int, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(int exponent) const;
  // Highest and lowest stored exponents; undefined for the zero element.
  int max_exponent() const { return terms_.rbegin()->first; }
  int min_exponent() const { return terms_.begin()->first; }

  void add_term(int exponent, const Rational& c);

  RhoLaurent& operator+=(const RhoLaurent& o);
  RhoLaurent& operator-=(const RhoLaurent& o);
  RhoLaurent& operator*=(const Rational& s);

  friend RhoLaurent operator+(RhoLaurent a, const RhoLaurent& b) { return a += b; }
  friend RhoLaurent operator-(RhoLaurent a, const RhoLaurent& b) { return a -= b; }
  friend RhoLaurent operator-(RhoLaurent a) { return a *= Rational(-1); }
  friend RhoLaurent operator*(const RhoLaurent& a, const RhoLaurent& b);
  friend RhoLaurent operator*(RhoLaurent a, const Rational& s) { return a *= s; }
  friend RhoLaurent operator*(const Rational& s, RhoLaurent a) { return a *= s; }
  friend bool operator==(const RhoLaurent& a, const RhoLaurent& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const RhoLaurent& a, const RhoLaurent& b) { return !(a == b); }

  // rho -> -1/rho, the involution that fixes kappa.
  RhoLaurent involuted() const;

  std::string to_string() const;

 private:
  std::map<int, Rational> terms_;
};

inline bool is_zero(const RhoLaurent& r) { return r.is_zero(); }

// Rewrites p(rho) as a polynomial in kappa = rho - 1/rho. Throws
// RepresentationError when p is not in the image of kappa_to_rho (for example
// rho alone, which is not invariant under rho -> -1/rho).
KappaPoly rho_to_kappa(const RhoLaurent& p);

// Substitutes kappa = rho - 1/rho.
RhoLaurent kappa_to_rho(const KappaPoly& p);

}  // namespace eulertop

#endif  // EULERTOP_RHO_LAURENT_HPP
