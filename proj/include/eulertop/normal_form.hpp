#ifndef EULERTOP_NORMAL_FORM_HPP
#define EULERTOP_NORMAL_FORM_HPP

#include <compare>
#include <map>
#include <vector>

#include "eulertop/power_series.hpp"
#include "eulertop/rho_laurent.hpp"

namespace eulertop {

// Exponent pair (a, b) of the monomial q^a p^b.
struct Monomial {
  int q = 0;
  int p = 0;
  int degree() const { return q + p; }
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

// Polynomial in the canonical pair (q, p) with coefficients in Q[rho, 1/rho],
// truncated at total degree max_degree.
class PolyHamiltonian {
 public:
  explicit PolyHamiltonian(int max_degree) : max_degree_(max_degree) {}

  int max_degree() const { return max_degree_; }
  const std::map<Monomial, RhoLaurent>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  RhoLaurent coeff(int a, int b) const;

  // Terms above max_degree are dropped.
  void add_term(Monomial m, const RhoLaurent& c);

  PolyHamiltonian homogeneous_part(int degree) const;
  // True when every monomial has a = b, i.e. is a power of qp.
  bool is_resonant() const;

  PolyHamiltonian& operator+=(const PolyHamiltonian& o);
  PolyHamiltonian& operator-=(const PolyHamiltonian& o);
  PolyHamiltonian& operator*=(const Rational& s);
  friend PolyHamiltonian operator+(PolyHamiltonian a, const PolyHamiltonian& b) { return a += b; }
  friend PolyHamiltonian operator-(PolyHamiltonian a, const PolyHamiltonian& b) { return a -= b; }
  friend PolyHamiltonian operator*(PolyHamiltonian a, const Rational& s) { return a *= s; }
  friend bool operator==(const PolyHamiltonian& a, const PolyHamiltonian& b) { return a.terms_ == b.terms_; }

 private:
  int max_degree_;
  std::map<Monomial, RhoLaurent> terms_;
};

// {f, g} = f_q g_p - f_p g_q, truncated at min(max_degree(f), max_degree(g)).
PolyHamiltonian poisson_bracket(const PolyHamiltonian& f, const PolyHamiltonian& g);

// Taylor expansion through total degree max_degree (even, >= 2) of
//   H(q, p) = (-p^2 (rho + sin^2 q / rho) + sin^2 q / rho) / 2
// about the hyperbolic point q = p = 0.
PolyHamiltonian expand_hamiltonian(int max_degree);

// Applies the symplectic map q -> sqrt(rho)(q + p)/sqrt(2),
// p -> (p - q)/sqrt(2 rho), which takes the quadratic part
// (q^2/rho - rho p^2)/2 to qp. Every input monomial must have a = b mod 2 so
// that the sqrt(rho) and sqrt(2) factors combine to integral powers.
PolyHamiltonian williamson_reduce(const PolyHamiltonian& h);

struct BirkhoffNormalForm {
  // H*(J) = J + ... through J^order, coefficients polynomial in kappa.
  PowerSeries series;
  // Transformed Hamiltonian by degree: normalized[i] has degree i + 2 and,
  // after the run, contains only powers of qp.
  std::vector<PolyHamiltonian> normalized;
  // Generators by degree: generators[i] removes the degree i + 2 terms
  // (generators[0] is unused and empty).
  std::vector<PolyHamiltonian> generators;
};

// Lie-transform normalization (Deprit triangle) of a Hamiltonian whose
// quadratic part is exactly qp, through degree 2 * order in (q, p). Every
// non-resonant monomial is removed at its own degree; the generator has no
// resonant part.
BirkhoffNormalForm birkhoff_normalize(const PolyHamiltonian& h, int order);

// expand_hamiltonian -> williamson_reduce -> birkhoff_normalize.
PowerSeries birkhoff_normal_form(int order);

}  // namespace eulertop

#endif  // EULERTOP_NORMAL_FORM_HPP
