#include "eulertop/rho_laurent.hpp"

#include <sstream>

#include "eulertop/errors.hpp"

namespace eulertop {

RhoLaurent RhoLaurent::monomial(const Rational& c, int exponent) {
  RhoLaurent r;
  r.add_term(exponent, c);
  return r;
}

Rational RhoLaurent::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

void RhoLaurent::add_term(int exponent, const Rational& c) {
  if (eulertop::is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (eulertop::is_zero(it->second)) terms_.erase(it);
  }
}

RhoLaurent& RhoLaurent::operator+=(const RhoLaurent& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

RhoLaurent& RhoLaurent::operator-=(const RhoLaurent& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, Rational(-c));
  return *this;
}

RhoLaurent& RhoLaurent::operator*=(const Rational& s) {
  if (eulertop::is_zero(s)) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

RhoLaurent operator*(const RhoLaurent& a, const RhoLaurent& b) {
  RhoLaurent r;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, Rational(ca * cb));
  }
  return r;
}

RhoLaurent RhoLaurent::involuted() const {
  RhoLaurent r;
  for (const auto& [e, c] : terms_) r.add_term(-e, (e % 2 == 0) ? c : Rational(-c));
  return r;
}

std::string RhoLaurent::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << eulertop::to_string(it->second);
    if (it->first != 0) os << "*rho^" << it->first;
  }
  return os.str();
}

namespace {

// kappa^d = sum_j C(d, j) (-1)^j rho^(d - 2j).
RhoLaurent kappa_power(int d) {
  RhoLaurent r;
  for (int j = 0; j <= d; ++j) {
    Rational c(binomial(static_cast<unsigned long>(d), static_cast<unsigned long>(j)));
    if (j % 2 == 1) c = -c;
    r.add_term(d - 2 * j, c);
  }
  return r;
}

}  // namespace

KappaPoly rho_to_kappa(const RhoLaurent& p) {
  // Peel off the leading monomial: c rho^d can only come from c kappa^d, whose
  // lowest term is c (-1)^d rho^-d. Anything else is not a polynomial in kappa.
  RhoLaurent rest = p;
  std::vector<Rational> out;
  while (!rest.is_zero()) {
    const int d = rest.max_exponent();
    if (d < 0 || rest.min_exponent() != -d) {
      throw RepresentationError("not a polynomial in kappa = rho - 1/rho: " + p.to_string());
    }
    const Rational c = rest.coeff(d);
    const Rational expected_low = (d % 2 == 0) ? c : Rational(-c);
    if (rest.coeff(-d) != expected_low) {
      throw RepresentationError("not a polynomial in kappa = rho - 1/rho: " + p.to_string());
    }
    if (out.size() < static_cast<std::size_t>(d) + 1) out.resize(static_cast<std::size_t>(d) + 1, Rational(0));
    out[static_cast<std::size_t>(d)] = c;
    rest -= kappa_power(d) * c;
  }
  return KappaPoly(std::move(out));
}

RhoLaurent kappa_to_rho(const KappaPoly& p) {
  RhoLaurent r;
  const auto& cs = p.coefficients();
  for (std::size_t d = 0; d < cs.size(); ++d) {
    if (eulertop::is_zero(cs[d])) continue;
    r += kappa_power(static_cast<int>(d)) * cs[d];
  }
  return r;
}

}  // namespace eulertop
