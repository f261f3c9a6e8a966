#include <doctest.h>

#include "eulertop/picard_fuchs.hpp"
#include "support/generators.hpp"
#include "support/reference.hpp"

using namespace eulertop;
using eulertop::testing::frac;
using eulertop::testing::Gen;

namespace {

HPoly hpoly(std::initializer_list<KappaPoly> c) { return HPoly(std::vector<KappaPoly>(c)); }

LogSeries as_log(const PowerSeries& p) { return LogSeries(PowerSeries(p.variable(), p.order()), p); }

}  // namespace

TEST_CASE("Picard-Fuchs coefficients") {
  const PFCoefficients c = derive_pf_coefficients();
  const KappaPoly k = kappa();
  CHECK(c.c0.is_zero());
  CHECK(c.c1 == hpoly({k * frac(1, 2), KappaPoly(3)}));
  CHECK(c.c2 == hpoly({KappaPoly(-1), k * frac(4), KappaPoly(12)}));
  CHECK(c.c3 == hpoly({KappaPoly(), KappaPoly(-1), k * frac(2), KappaPoly(4)}));
  CHECK(c.c3 * frac(2) == w_squared_at_2h());
}

TEST_CASE("Frobenius tables match the published values") {
  const std::vector<KappaPoly> a_ref = testing::frobenius_a_reference();
  const std::vector<KappaPoly> b_ref = testing::frobenius_b_reference();
  for (FrobeniusMethod m : {FrobeniusMethod::recursion, FrobeniusMethod::closed_form}) {
    const std::vector<KappaPoly> a = frobenius_a(5, m);
    const std::vector<KappaPoly> b = frobenius_b(5, m);
    CHECK(a == a_ref);
    CHECK(b == b_ref);
  }
  CHECK(frobenius_a(5, FrobeniusMethod::recursion)[3].evaluate(frac(0)) == 0);
  CHECK(frobenius_f(1, 0) == 2);
  CHECK_THROWS_AS(frobenius_a(-1, FrobeniusMethod::recursion), UsageError);
  CHECK_THROWS_AS(frobenius_b(-1, FrobeniusMethod::closed_form), UsageError);
}

TEST_CASE("recursion equals closed form through n = 60") {
  const FrobeniusTable t = frobenius_table(60);
  CHECK(t.a == frobenius_a(60, FrobeniusMethod::closed_form));
  CHECK(t.b == frobenius_b(60, FrobeniusMethod::closed_form));
  CHECK(t.a[0] == KappaPoly(1));
  CHECK(t.b[0].is_zero());
}

TEST_CASE("degree, parity and positivity of a_n and b_n") {
  const FrobeniusTable t = frobenius_table(60);
  for (int n = 1; n <= 60; ++n) {
    const KappaPoly& a = t.a[static_cast<std::size_t>(n)];
    const KappaPoly& b = t.b[static_cast<std::size_t>(n)];
    CHECK(a.degree() == n);
    CHECK(b.degree() == n);
    const int parity = n % 2 == 0 ? 1 : -1;
    CHECK(testing::kappa_parity(a) == parity);
    CHECK(testing::kappa_parity(b) == parity);
    for (int i = n % 2; i <= n; i += 2) CHECK(a.coeff(i) > 0);
  }
}

TEST_CASE("action series examples") {
  const ActionSeries s = build_action_series(6);
  const KappaPoly k = kappa();
  CHECK(s.two_pi_I_r[1] == KappaPoly(1));
  CHECK(s.two_pi_I_r[2] == k * frac(1, 4));
  CHECK(s.two_pi_I_r[3] == testing::even(4, 3) * frac(1, 16));
  CHECK(s.two_pi_I_s.regular[1] == KappaPoly(-1));
  CHECK(s.T_r[0] == KappaPoly(1));
  CHECK(s.T_s.log_part == s.T_r);
  CHECK(s.T_r.order() == 6);
  CHECK(s.two_pi_I_r.order() == 7);
}

TEST_CASE("Picard-Fuchs residuals vanish through order 30") {
  const ActionSeries s = build_action_series(33);
  CHECK(pf_residual(s.two_pi_I_r, PFEquation::I).is_zero());
  CHECK(pf_residual(s.two_pi_I_s, PFEquation::I).is_zero());
  CHECK(pf_residual(s.T_r, PFEquation::T).is_zero());
  CHECK(pf_residual(s.T_s, PFEquation::T).is_zero());
  CHECK(pf_residual(PowerSeries::constant(Variable::h, 33, KappaPoly(1)), PFEquation::I).is_zero());
  CHECK(pf_residual(s.two_pi_I_r, PFEquation::I).max_power() >= 30);
  CHECK(pf_residual(s.T_s, PFEquation::T).max_power() >= 30);
}

TEST_CASE("residuals detect a perturbed series") {
  const ActionSeries s = build_action_series(12);
  PowerSeries bad = s.two_pi_I_r;
  bad[5] += KappaPoly(1);
  CHECK_FALSE(pf_residual(bad, PFEquation::I).is_zero());
  LogSeries bad_log = s.T_s;
  bad_log.regular[2] += kappa();
  CHECK_FALSE(pf_residual(bad_log, PFEquation::T).is_zero());
}

TEST_CASE("property: residual vanishes on random linear combinations") {
  const ActionSeries s = build_action_series(20);
  for (std::uint64_t seed = 700; seed < 710; ++seed) {
    Gen gen(seed);
    const Rational c1 = gen.rational(), c2 = gen.rational(), c3 = gen.rational();
    LogSeries combo = s.two_pi_I_s;
    combo.log_part = combo.log_part * c2;
    combo.regular = combo.regular * c2 + s.two_pi_I_r * c1;
    combo.regular[0] += KappaPoly(c3);
    CHECK(pf_residual(combo, PFEquation::I).is_zero());
    CHECK(pf_residual(as_log(s.T_r * c1), PFEquation::T).is_zero());
  }
}

TEST_CASE("beta action constants") {
  const BetaAction plus = beta_action(Side::plus);
  const BetaAction minus = beta_action(Side::minus);
  CHECK(plus.k2 == 1);
  CHECK(minus.k2 == -1);
  CHECK(plus.k1 == SymbolicConstant::atom(Atom::half_log_64_over_k2p4, frac(-1)));
  CHECK(minus.k1 == SymbolicConstant::atom(Atom::half_log_64_over_k2p4));
  CHECK(plus.k3 == SymbolicConstant::atom(Atom::inv_pi_atan_inv_rho));
  CHECK(minus.k3 == SymbolicConstant::atom(Atom::inv_pi_atan_rho));

  // At kappa = 0 both sides are (1/pi) atan 1 = 1/4.
  CHECK(plus.k3.evaluate(0.0) == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(plus.k1.evaluate(0.0) == doctest::Approx(-std::log(4.0)).epsilon(1e-15));
  CHECK(atom_display(Atom::half_log_64_over_k2p4, frac(0)) == "log 4");
  for (double k : {-3.0, -0.5, 0.0, 0.25, 1.5, 7.0}) {
    CHECK(plus.k3.evaluate(k) + minus.k3.evaluate(k) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(plus.area.evaluate(k) + minus.area.evaluate(k) == doctest::Approx(M_PI).epsilon(1e-15));
  }
  const BetaActions both = assemble_beta_actions(4);
  CHECK(both.basis.T_r.order() == 4);
}
