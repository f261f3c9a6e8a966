#ifndef EULERTOP_SYMBOLIC_HPP
#define EULERTOP_SYMBOLIC_HPP

#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include <boost/math/constants/constants.hpp>

#include "eulertop/rational.hpp"

namespace eulertop {

// Transcendental constants that depend on kappa only. They are kept as tags
// with rational multipliers and evaluated numerically on demand.
enum class Atom {
  half_log_64_over_k2p4,  // (1/2) log(64 / (kappa^2 + 4))
  inv_pi_atan_inv_rho,    // (1/pi) atan(1/rho)
  inv_pi_atan_rho,        // (1/pi) atan(rho)
  area_plus,              // 2 atan(1/rho)
  area_minus,             // 2 atan(rho)
};

std::string_view atom_tag(Atom a);
std::optional<Atom> atom_from_tag(std::string_view tag);

// rho = (kappa + sqrt(kappa^2 + 4)) / 2, the positive root of rho - 1/rho = kappa.
template <class F>
F rho_from_kappa(const F& kappa) {
  using std::sqrt;
  return (kappa + sqrt(kappa * kappa + F(4))) / F(2);
}

template <class F>
F atom_value(Atom a, const F& kappa) {
  using std::atan;
  using std::log;
  const F pi = boost::math::constants::pi<F>();
  switch (a) {
    case Atom::half_log_64_over_k2p4:
      return log(F(64) / (kappa * kappa + F(4))) / F(2);
    case Atom::inv_pi_atan_inv_rho:
      return atan(F(1) / rho_from_kappa(kappa)) / pi;
    case Atom::inv_pi_atan_rho:
      return atan(rho_from_kappa(kappa)) / pi;
    case Atom::area_plus:
      return F(2) * atan(F(1) / rho_from_kappa(kappa));
    case Atom::area_minus:
      return F(2) * atan(rho_from_kappa(kappa));
  }
  return F(0);
}

// Human-readable closed form of an atom at an exact kappa, e.g. "log 4" at
// kappa = 0 where 64/(kappa^2+4) is the square 16.
std::string atom_display(Atom a, const Rational& kappa);

// Rational linear combination of atoms plus a rational constant.
class SymbolicConstant {
 public:
  SymbolicConstant() = default;
  explicit SymbolicConstant(const Rational& c) : constant_(c) {}
  static SymbolicConstant atom(Atom a, const Rational& coeff = Rational(1));

  const std::map<Atom, Rational>& atoms() const { return atoms_; }
  const Rational& rational_part() const { return constant_; }
  Rational coeff(Atom a) const;
  bool is_zero() const { return atoms_.empty() && eulertop::is_zero(constant_); }

  SymbolicConstant& operator+=(const SymbolicConstant& o);
  SymbolicConstant& operator-=(const SymbolicConstant& o);
  SymbolicConstant& operator*=(const Rational& s);
  friend SymbolicConstant operator+(SymbolicConstant a, const SymbolicConstant& b) { return a += b; }
  friend SymbolicConstant operator-(SymbolicConstant a, const SymbolicConstant& b) { return a -= b; }
  friend SymbolicConstant operator-(SymbolicConstant a) { return a *= Rational(-1); }
  friend SymbolicConstant operator*(SymbolicConstant a, const Rational& s) { return a *= s; }
  friend bool operator==(const SymbolicConstant& a, const SymbolicConstant& b) {
    return a.atoms_ == b.atoms_ && a.constant_ == b.constant_;
  }

  template <class F>
  F evaluate(const F& kappa) const {
    F acc = rational_to<F>(constant_);
    for (const auto& [a, c] : atoms_) acc += rational_to<F>(c) * atom_value(a, kappa);
    return acc;
  }

  std::string to_string() const;

  template <class F>
  static F rational_to(const Rational& r) {
    return F(r.get_num().get_str()) / F(r.get_den().get_str());
  }

 private:
  std::map<Atom, Rational> atoms_;
  Rational constant_{0};
};

template <>
inline double SymbolicConstant::rational_to<double>(const Rational& r) {
  return r.get_d();
}

}  // namespace eulertop

#endif  // EULERTOP_SYMBOLIC_HPP
