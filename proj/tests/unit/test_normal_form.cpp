#include <doctest.h>

#include "eulertop/normal_form.hpp"
#include "support/reference.hpp"

using namespace eulertop;
using eulertop::testing::frac;

namespace {

RhoLaurent rho_pow(const Rational& c, int e) { return RhoLaurent::monomial(c, e); }

// sin^2 q through q^6: q^2 - q^4/3 + 2 q^6/45.
PolyHamiltonian hand_expansion_deg6() {
  PolyHamiltonian h(6);
  const Rational sin2[] = {frac(1), frac(-1, 3), frac(2, 45)};
  h.add_term({0, 2}, rho_pow(frac(-1, 2), 1));
  for (int k = 0; k < 3; ++k) {
    h.add_term({2 + 2 * k, 0}, rho_pow(sin2[k] * frac(1, 2), -1));
    h.add_term({2 + 2 * k, 2}, rho_pow(sin2[k] * frac(-1, 2), -1));
  }
  return h;
}

}  // namespace

TEST_CASE("expand_hamiltonian examples") {
  const PolyHamiltonian h2 = expand_hamiltonian(2);
  PolyHamiltonian expect(2);
  expect.add_term({2, 0}, rho_pow(frac(1, 2), -1));
  expect.add_term({0, 2}, rho_pow(frac(-1, 2), 1));
  CHECK(h2 == expect);

  const PolyHamiltonian h6 = expand_hamiltonian(6);
  CHECK(h6.coeff(4, 0) == rho_pow(frac(-1, 6), -1));
  CHECK(h6.coeff(1, 1).is_zero());
  CHECK(h6 == hand_expansion_deg6());

  CHECK_THROWS_AS(expand_hamiltonian(3), UsageError);
  CHECK_THROWS_AS(expand_hamiltonian(0), UsageError);
}

TEST_CASE("williamson_reduce examples") {
  const PolyHamiltonian w = williamson_reduce(expand_hamiltonian(4));
  const PolyHamiltonian w2 = w.homogeneous_part(2);
  PolyHamiltonian qp(4);
  qp.add_term({1, 1}, RhoLaurent::monomial(frac(1), 0));
  CHECK(w2 == qp.homogeneous_part(2));

  // -(1/(8 rho)) (q^2 - p^2)^2 - (rho/24) (q + p)^4
  PolyHamiltonian quartic(4);
  quartic.add_term({4, 0}, rho_pow(frac(-1, 8), -1));
  quartic.add_term({2, 2}, rho_pow(frac(2, 8), -1));
  quartic.add_term({0, 4}, rho_pow(frac(-1, 8), -1));
  const int binom4[] = {1, 4, 6, 4, 1};
  for (int a = 0; a <= 4; ++a) quartic.add_term({a, 4 - a}, rho_pow(frac(-binom4[a], 24), 1));
  CHECK(w.homogeneous_part(4) == quartic);

  PolyHamiltonian bad(2);
  bad.add_term({1, 1}, RhoLaurent::monomial(frac(2), 0));
  CHECK_THROWS_AS(williamson_reduce(bad), UsageError);
}

TEST_CASE("williamson output has a - b even through degree 14") {
  const PolyHamiltonian w = williamson_reduce(expand_hamiltonian(14));
  for (int d = 2; d <= 14; ++d) {
    for (int a = 0; a <= d; ++a) {
      if ((a - (d - a)) % 2 != 0) CHECK(w.coeff(a, d - a).is_zero());
    }
  }
}

TEST_CASE("poisson bracket of canonical pair") {
  PolyHamiltonian q(4), p(4);
  q.add_term({1, 0}, RhoLaurent::monomial(frac(1), 0));
  p.add_term({0, 1}, RhoLaurent::monomial(frac(1), 0));
  PolyHamiltonian one(4);
  one.add_term({0, 0}, RhoLaurent::monomial(frac(1), 0));
  CHECK(poisson_bracket(q, p) == one);
  CHECK(poisson_bracket(p, q) == one * frac(-1));
  CHECK(poisson_bracket(q, q).is_zero());
}

TEST_CASE("birkhoff_normalize reproduces the published H*(J)") {
  const std::vector<KappaPoly> ref = testing::bnf_reference();
  const PowerSeries bnf = birkhoff_normal_form(7);
  REQUIRE(bnf.order() == 7);
  for (int n = 0; n <= 7; ++n) CHECK(bnf[n] == ref[static_cast<std::size_t>(n)]);
}

TEST_CASE("homological steps leave only resonant terms") {
  const BirkhoffNormalForm nf = birkhoff_normalize(williamson_reduce(expand_hamiltonian(14)), 7);
  for (const PolyHamiltonian& part : nf.normalized) CHECK(part.is_resonant());
  for (std::size_t i = 1; i < nf.generators.size(); ++i) {
    const PolyHamiltonian& g = nf.generators[i];
    for (int a = 0; a <= g.max_degree(); ++a) CHECK(g.coeff(a, a).is_zero());
  }
}

TEST_CASE("kappa parity of H*(J)") {
  const PowerSeries bnf = birkhoff_normal_form(7);
  for (int n = 1; n <= 7; ++n) CHECK(testing::kappa_parity(bnf[n]) == (n % 2 == 1 ? 1 : -1));
}

TEST_CASE("birkhoff_normalize preconditions") {
  PolyHamiltonian h = expand_hamiltonian(4);
  CHECK_THROWS_AS(birkhoff_normalize(h, 2), UsageError);
}
