#include "eulertop/symbolic.hpp"

#include <sstream>

namespace eulertop {

std::string_view atom_tag(Atom a) {
  switch (a) {
    case Atom::half_log_64_over_k2p4: return "half_log_64_over_k2p4";
    case Atom::inv_pi_atan_inv_rho: return "inv_pi_atan_inv_rho";
    case Atom::inv_pi_atan_rho: return "inv_pi_atan_rho";
    case Atom::area_plus: return "area_plus";
    case Atom::area_minus: return "area_minus";
  }
  return "?";
}

std::optional<Atom> atom_from_tag(std::string_view tag) {
  for (Atom a : {Atom::half_log_64_over_k2p4, Atom::inv_pi_atan_inv_rho, Atom::inv_pi_atan_rho, Atom::area_plus,
                 Atom::area_minus}) {
    if (atom_tag(a) == tag) return a;
  }
  return std::nullopt;
}

namespace {

// Square root of a nonnegative rational when it is itself rational.
std::optional<Rational> rational_sqrt(const Rational& r) {
  if (sgn(r) < 0) return std::nullopt;
  Integer n = r.get_num();
  Integer d = r.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
  Integer sn, sd;
  mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
  Rational out(sn, sd);
  out.canonicalize();
  return out;
}

}  // namespace

std::string atom_display(Atom a, const Rational& kappa) {
  const std::string k = to_string(kappa);
  switch (a) {
    case Atom::half_log_64_over_k2p4: {
      Rational arg = Rational(64) / (kappa * kappa + 4);
      if (auto s = rational_sqrt(arg)) return "log " + to_string(*s);
      return "1/2 log " + to_string(arg);
    }
    case Atom::inv_pi_atan_inv_rho:
      if (is_zero(kappa)) return "1/4";
      return "atan(1/rho)/pi, kappa = " + k;
    case Atom::inv_pi_atan_rho:
      if (is_zero(kappa)) return "1/4";
      return "atan(rho)/pi, kappa = " + k;
    case Atom::area_plus:
      if (is_zero(kappa)) return "pi/2";
      return "2 atan(1/rho), kappa = " + k;
    case Atom::area_minus:
      if (is_zero(kappa)) return "pi/2";
      return "2 atan(rho), kappa = " + k;
  }
  return "?";
}

SymbolicConstant SymbolicConstant::atom(Atom a, const Rational& coeff) {
  SymbolicConstant s;
  if (!eulertop::is_zero(coeff)) s.atoms_[a] = coeff;
  return s;
}

Rational SymbolicConstant::coeff(Atom a) const {
  auto it = atoms_.find(a);
  return it == atoms_.end() ? Rational(0) : it->second;
}

SymbolicConstant& SymbolicConstant::operator+=(const SymbolicConstant& o) {
  constant_ += o.constant_;
  for (const auto& [a, c] : o.atoms_) {
    Rational& slot = atoms_[a];
    slot += c;
    if (eulertop::is_zero(slot)) atoms_.erase(a);
  }
  return *this;
}

SymbolicConstant& SymbolicConstant::operator-=(const SymbolicConstant& o) {
  return *this += o * Rational(-1);
}

SymbolicConstant& SymbolicConstant::operator*=(const Rational& s) {
  constant_ *= s;
  if (eulertop::is_zero(s)) {
    atoms_.clear();
    return *this;
  }
  for (auto& [a, c] : atoms_) c *= s;
  return *this;
}

std::string SymbolicConstant::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [a, c] : atoms_) {
    if (!first) os << " + ";
    first = false;
    os << eulertop::to_string(c) << "*" << atom_tag(a);
  }
  if (first || !eulertop::is_zero(constant_)) {
    if (!first) os << " + ";
    os << eulertop::to_string(constant_);
  }
  return os.str();
}

}  // namespace eulertop
