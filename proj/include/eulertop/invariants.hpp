#ifndef EULERTOP_INVARIANTS_HPP
#define EULERTOP_INVARIANTS_HPP

#include <vector>

#include "eulertop/picard_fuchs.hpp"

namespace eulertop {

// I_alpha = 2 pi I_r through h^order; its leading term is h and it defines
// the normal-form action J.
template <class R>
TruncatedSeries<R> alpha_action_at(int order, const R& kappa) {
  if (order < 1) throw UsageError("alpha_action needs order >= 1");
  std::vector<R> a = frobenius_a_recursion(order - 1, kappa);
  return integrate_termwise(TruncatedSeries<R>(Variable::h, std::move(a)));
}

PowerSeries alpha_action(int order);

// H*(J) as the compositional inverse of I_alpha.
template <class R>
TruncatedSeries<R> bnf_via_reversion_at(int order, const R& kappa) {
  return revert(alpha_action_at(order, kappa));
}

PowerSeries bnf_via_reversion(int order);

// sigma(J) = linear * J + tail(J). The linear coefficient is a symbolic
// constant; the tail carries J^2..J^order and has zero J^0, J^1 entries.
template <class R>
struct SigmaSeriesT {
  SymbolicConstant linear;
  TruncatedSeries<R> tail;
  friend bool operator==(const SigmaSeriesT& a, const SigmaSeriesT& b) {
    return a.linear == b.linear && a.tail == b.tail;
  }
};

// Reads sigma off one side of
//   2 pi (I_beta o H*)(J) = A + s J log(s J) - s J - s sigma(J),  s = +-1.
// log|J| stands for log(s J) on both sides: on the minus side J < 0 and the
// formal series is extracted for J = -J' with J' > 0, which leaves every
// coefficient unchanged. Throws InternalError when a channel that must vanish
// (the leftover log|J| part, J^0 or J^1 outside the symbolic channel, or
// I_alpha o H* != J) does not.
template <class R>
SigmaSeriesT<R> extract_sigma_branch(const BetaAction& beta, const ActionSeriesT<R>& basis,
                                     const TruncatedSeries<R>& bnf) {
  const int n = bnf.order();
  const Rational s = beta.side == Side::plus ? Rational(1) : Rational(-1);
  const TruncatedSeries<R> j = TruncatedSeries<R>::identity(Variable::J, n);

  const TruncatedSeries<R> alpha = compose(basis.two_pi_I_r.truncated(n), bnf);
  if (alpha != j) throw InternalError("I_alpha o H* differs from J");
  const LogSeriesT<R> i_s = compose_with_log(
      LogSeriesT<R>(basis.two_pi_I_s.log_part.truncated(n), basis.two_pi_I_s.regular.truncated(n)), bnf);

  // 2 pi I_beta o H* = k1 J + k2 (L log|J| + R) + A.
  const Rational sk2 = s * Rational(beta.k2);
  const TruncatedSeries<R> log_left = j - i_s.log_part * sk2;
  if (!log_left.is_zero_series()) {
    throw InternalError("log|J| channel does not cancel on the " + std::string(to_string(beta.side)) + " side");
  }

  TruncatedSeries<R> tail = -j - i_s.regular * sk2;
  if (!is_zero(tail[0]) || !is_zero(tail[1])) {
    throw InternalError("regular channel has a J^0 or J^1 term on the " + std::string(to_string(beta.side)) + " side");
  }
  return {beta.k1 * Rational(-s), std::move(tail)};
}

// Both extractions plus the consistency flag.
template <class R>
struct SigmaPair {
  SigmaSeriesT<R> plus;
  SigmaSeriesT<R> minus;
  bool consistent;
};

template <class R>
SigmaPair<R> sigma_branches_at(int order, const R& kappa) {
  if (order < 2) throw UsageError("extract_sigma needs order >= 2");
  const ActionSeriesT<R> basis = build_action_series_at(order, kappa);
  const TruncatedSeries<R> bnf = bnf_via_reversion_at(order, kappa);
  SigmaSeriesT<R> plus = extract_sigma_branch(beta_action(Side::plus), basis, bnf);
  SigmaSeriesT<R> minus = extract_sigma_branch(beta_action(Side::minus), basis, bnf);
  const bool consistent = plus == minus;
  return {std::move(plus), std::move(minus), consistent};
}

// sigma at a fixed kappa; throws InternalError on branch disagreement.
template <class R>
SigmaSeriesT<R> sigma_at(int order, const R& kappa) {
  SigmaPair<R> p = sigma_branches_at(order, kappa);
  if (!p.consistent) throw InternalError("sigma differs between the plus and minus branches");
  return std::move(p.plus);
}

struct InvariantReport {
  // Symbolic coefficient of J: (1/2) log(64/(kappa^2+4)).
  SymbolicConstant linear;
  // J^2..J^order over Q[kappa].
  PowerSeries tail;
  SymbolicConstant area_plus;
  SymbolicConstant area_minus;
  bool branch_consistent;
  PowerSeries bnf;
};

// Throws InternalError when the branches disagree.
InvariantReport extract_sigma(int order);

struct PendulumRow {
  double kappa;
  double euler_leading;  // (1/2) ln(64/(kappa^2+4))
  double margin;         // ln 32 - euler_leading
  bool above_bound;      // margin >= ln 8 - 1e-12
};

std::vector<PendulumRow> pendulum_compare(const std::vector<double>& kappas);

}  // namespace eulertop

#endif  // EULERTOP_INVARIANTS_HPP
