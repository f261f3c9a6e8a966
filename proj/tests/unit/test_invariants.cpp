#include <doctest.h>

#include <cmath>

#include "eulertop/invariants.hpp"
#include "eulertop/normal_form.hpp"
#include "eulertop/radius.hpp"
#include "support/generators.hpp"
#include "support/reference.hpp"

using namespace eulertop;
using eulertop::testing::frac;
using eulertop::testing::Gen;

TEST_CASE("alpha_action examples") {
  const PowerSeries a = alpha_action(4);
  CHECK(a[0].is_zero());
  CHECK(a[1] == KappaPoly(1));
  CHECK(a[2] == kappa() * frac(1, 4));
  CHECK(a[3] == testing::even(4, 3) * frac(1, 16));
  CHECK_THROWS_AS(alpha_action(0), UsageError);
}

TEST_CASE("bnf_via_reversion matches the table and the Lie transform") {
  const PowerSeries rev = bnf_via_reversion(7);
  const std::vector<KappaPoly> ref = testing::bnf_reference();
  for (int n = 0; n <= 7; ++n) CHECK(rev[n] == ref[static_cast<std::size_t>(n)]);
  CHECK(rev == birkhoff_normal_form(7));
  CHECK(rev[6].evaluate(frac(0)) == 0);
  CHECK(compose(alpha_action(7), rev) == PowerSeries::identity(Variable::J, 7));
}

TEST_CASE("Lie transform equals reversion through J^9") {
  CHECK(bnf_via_reversion(9) == birkhoff_normal_form(9));
}

TEST_CASE("extract_sigma reproduces the published sigma") {
  const InvariantReport r = extract_sigma(7);
  const std::vector<KappaPoly> ref = testing::sigma_tail_reference();
  for (int n = 0; n <= 7; ++n) CHECK(r.tail[n] == ref[static_cast<std::size_t>(n)]);
  CHECK(r.linear == SymbolicConstant::atom(Atom::half_log_64_over_k2p4));
  CHECK(r.branch_consistent);
  CHECK(r.area_plus == SymbolicConstant::atom(Atom::area_plus));
  CHECK(r.area_minus == SymbolicConstant::atom(Atom::area_minus));
  CHECK(r.bnf == bnf_via_reversion(7));
}

TEST_CASE("sigma branches agree symbolically and at fixed kappa") {
  const SigmaPair<KappaPoly> sym = sigma_branches_at(12, kappa());
  CHECK(sym.consistent);
  CHECK(sym.plus.tail == sym.minus.tail);
  for (const Rational& k : {frac(1, 2), frac(-3, 2), frac(0), frac(7, 3)}) {
    const SigmaPair<Rational> p = sigma_branches_at(10, k);
    CHECK(p.consistent);
    for (int n = 0; n <= 10; ++n) CHECK(p.plus.tail[n] == sym.plus.tail[n].evaluate(k));
  }
  CHECK_THROWS_AS(extract_sigma(1), UsageError);
}

TEST_CASE("kappa parity of the sigma tail") {
  const SigmaSeriesT<KappaPoly> s = sigma_at(12, kappa());
  for (int n = 2; n <= 12; ++n) CHECK(testing::kappa_parity(s.tail[n]) == (n % 2 == 0 ? -1 : 1));
}

TEST_CASE("property: sigma tail is negative for kappa > 0") {
  for (std::uint64_t seed = 800; seed < 820; ++seed) {
    Gen gen(seed);
    Rational k(gen.integer(1, 60), gen.integer(1, 12));
    k.canonicalize();
    const SigmaSeriesT<Rational> s = sigma_at(14, k);
    for (int n = 2; n <= 14; ++n) CHECK(s.tail[n] < 0);
  }
}

TEST_CASE("property: bnf reversion round trip at random kappa") {
  for (std::uint64_t seed = 900; seed < 910; ++seed) {
    Gen gen(seed);
    const Rational k = gen.rational(20, 6);
    const RationalSeries bnf = bnf_via_reversion_at(15, k);
    CHECK(compose(alpha_action_at(15, k), bnf) == RationalSeries::identity(Variable::J, 15));
    CHECK(revert(bnf) == alpha_action_at(15, k));
  }
}

TEST_CASE("pendulum comparison") {
  const std::vector<PendulumRow> rows = pendulum_compare({0.0, 2.0, -5.0});
  CHECK(rows[0].euler_leading == doctest::Approx(std::log(4.0)).epsilon(1e-15));
  CHECK(rows[0].margin == doctest::Approx(std::log(8.0)).epsilon(1e-15));
  CHECK(rows[1].euler_leading == doctest::Approx(1.5 * std::log(2.0)).epsilon(1e-15));
  CHECK(rows[1].margin == doctest::Approx(3.5 * std::log(2.0)).epsilon(1e-15));
  for (const auto& r : rows) {
    CHECK(r.margin > 0);
    CHECK(r.above_bound);
  }
}

TEST_CASE("radius examples") {
  CHECK(theoretical_radius(frac(3, 2)) == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(theoretical_radius(frac(0)) == doctest::Approx(0.5).epsilon(1e-15));

  const RadiusReport a = ratio_report("a-seq", radius_sequence(RadiusTarget::a_seq, frac(3, 2), 200), 1);
  CHECK(a.estimates.back() == doctest::Approx(0.25).epsilon(2e-3));

  // At kappa = 0 the odd coefficients vanish and are skipped.
  const RadiusReport z = ratio_report("a-seq", radius_sequence(RadiusTarget::a_seq, frac(0), 200), 1);
  CHECK_FALSE(z.skipped.empty());
  CHECK(z.estimates.back() == doctest::Approx(0.5).epsilon(5e-3));
  for (double e : z.estimates) CHECK((std::isfinite(e) && e > 0));

  CHECK_THROWS_AS(radius_analysis(frac(1, 2), 10, {RadiusTarget::a_seq}), UsageError);
  CHECK(radius_target_from_string("sigma-seq") == RadiusTarget::sigma_seq);
  CHECK_FALSE(radius_target_from_string("c-seq").has_value());
}

TEST_CASE("radius sequences agree with the symbolic tables") {
  const Rational k = frac(1, 2);
  const std::vector<Rational> bnf = radius_sequence(RadiusTarget::bnf_seq, k, 20);
  const std::vector<Rational> sig = radius_sequence(RadiusTarget::sigma_seq, k, 20);
  const PowerSeries sym_bnf = bnf_via_reversion(20);
  const SigmaSeriesT<KappaPoly> sym_sig = sigma_at(20, kappa());
  for (int n = 2; n <= 20; ++n) {
    CHECK(bnf[static_cast<std::size_t>(n)] == sym_bnf[n].evaluate(k));
    CHECK(sig[static_cast<std::size_t>(n)] == sym_sig.tail[n].evaluate(k));
  }
}
