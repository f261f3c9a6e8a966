#include "eulertop/radius.hpp"

#include <cmath>

#include "eulertop/errors.hpp"
#include "eulertop/invariants.hpp"
#include "eulertop/symbolic.hpp"

namespace eulertop {

const char* to_string(RadiusTarget t) {
  switch (t) {
    case RadiusTarget::a_seq: return "a-seq";
    case RadiusTarget::b_seq: return "b-seq";
    case RadiusTarget::bnf_seq: return "bnf-seq";
    case RadiusTarget::sigma_seq: return "sigma-seq";
  }
  return "?";
}

std::optional<RadiusTarget> radius_target_from_string(const std::string& name) {
  for (RadiusTarget t : {RadiusTarget::a_seq, RadiusTarget::b_seq, RadiusTarget::bnf_seq, RadiusTarget::sigma_seq}) {
    if (name == to_string(t)) return t;
  }
  return std::nullopt;
}

double theoretical_radius(const Rational& kappa) {
  const Real rho = rho_from_kappa(to_real(kappa));
  const Real r = rho < 1 ? rho : Real(1) / rho;
  return static_cast<double>(r / 2);
}

RadiusReport ratio_report(const std::string& name, const std::vector<Rational>& coeffs, int first) {
  RadiusReport rep;
  rep.name = name;
  std::vector<Real> fitted_r;
  std::vector<int> fitted_n;
  int prev = -1;
  Real prev_log;
  for (int n = std::max(first, 0); n < static_cast<int>(coeffs.size()); ++n) {
    const Rational& c = coeffs[static_cast<std::size_t>(n)];
    if (is_zero(c)) {
      rep.skipped.push_back(n);
      continue;
    }
    const Real lg = log(to_real(abs(c)));
    if (prev >= 0) {
      const Real r = exp((prev_log - lg) / Real(n - prev));
      rep.n.push_back(n);
      rep.estimates.push_back(static_cast<double>(r));
      fitted_r.push_back(r);
      fitted_n.push_back(n);
    }
    prev = n;
    prev_log = lg;
  }
  if (fitted_r.empty()) throw DomainError("sequence " + name + " has fewer than two nonzero coefficients");

  // r_n ~ r + c/n: eliminate c between consecutive estimates.
  std::vector<Real> lin;
  for (std::size_t i = 1; i < fitted_r.size(); ++i) {
    const Real n1(fitted_n[i - 1]);
    const Real n2(fitted_n[i]);
    lin.push_back((n2 * fitted_r[i] - n1 * fitted_r[i - 1]) / (n2 - n1));
  }
  if (lin.size() < 3) {
    rep.extrapolated = lin.empty() ? rep.estimates.back() : static_cast<double>(lin.back());
    return rep;
  }
  const Real& e1 = lin[lin.size() - 3];
  const Real& e2 = lin[lin.size() - 2];
  const Real& e3 = lin[lin.size() - 1];
  const Real den = (e3 - e2) - (e2 - e1);
  Real acc = e3;
  if (abs(den) > Real("1e-40")) acc = e3 - (e3 - e2) * (e3 - e2) / den;
  rep.extrapolated = static_cast<double>(acc);
  if (!std::isfinite(rep.extrapolated) || rep.extrapolated <= 0) rep.extrapolated = static_cast<double>(e3);
  return rep;
}

std::vector<Rational> radius_sequence(RadiusTarget target, const Rational& kappa, int n_max) {
  switch (target) {
    case RadiusTarget::a_seq:
      return frobenius_a_recursion(n_max, kappa);
    case RadiusTarget::b_seq:
      return frobenius_b_recursion(frobenius_a_recursion(n_max, kappa), kappa);
    case RadiusTarget::bnf_seq:
      return bnf_via_reversion_at(n_max, kappa).coefficients();
    case RadiusTarget::sigma_seq:
      return sigma_at(n_max, kappa).tail.coefficients();
  }
  return {};
}

std::vector<RadiusReport> radius_analysis(const Rational& kappa, int n_max, const std::vector<RadiusTarget>& targets) {
  if (n_max < 20) throw UsageError("radius analysis needs n_max >= 20");
  std::vector<RadiusReport> out;
  for (RadiusTarget t : targets) {
    // The first two BNF and sigma coefficients are fixed by normalization.
    const int first = (t == RadiusTarget::bnf_seq || t == RadiusTarget::sigma_seq) ? 2 : 1;
    RadiusReport rep = ratio_report(to_string(t), radius_sequence(t, kappa, n_max), first);
    if (t == RadiusTarget::a_seq || t == RadiusTarget::b_seq) rep.theoretical = theoretical_radius(kappa);
    out.push_back(std::move(rep));
  }
  return out;
}

}  // namespace eulertop
